#pragma once

// Core value types: small growth vectors, derived vectors (block form is the
// canonical storage, flat form a view), Puiseux characteristics, and the
// conversions between small growth vectors and derived vectors.
//
// Indexing in every accessor is 1-based: block(1) is (M_1, m_1), d(1) is the
// first flat entry, lambda(0) is the multiplicity of the branch.

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <span>
#include <string>
#include <vector>

#include "goursat/checked.hpp"
#include "goursat/error.hpp"

namespace goursat {

/// One run of the derived vector: `value` repeated `mult` times (M_i, m_i).
struct Block {
  Value value = 0;
  Value mult = 0;

  friend bool operator==(const Block&, const Block&) = default;
};

/// Dimensions (dim D^(0), ..., dim D^(r) = n) at a point of a Goursat flag.
class SmallGrowthVector {
 public:
  /// Validates: starts at 2, steps of 0 or +1, final entry occurs once.
  static SmallGrowthVector from_dims(std::vector<Value> dims) {
    if (dims.size() < 2) {
      throw Error(ErrorCode::MalformedSgv, "needs at least two entries");
    }
    if (dims.front() != 2) {
      throw Error(ErrorCode::MalformedSgv,
                  "first entry must be 2, got " + std::to_string(dims.front()), 1);
    }
    Value increments = 0;
    for (std::size_t i = 1; i < dims.size(); ++i) {
      if (dims[i] < dims[i - 1] || dims[i] - dims[i - 1] > 1) {
        throw Error(ErrorCode::MalformedSgv,
                    "consecutive entries must differ by 0 or 1, got " +
                        std::to_string(dims[i - 1]) + " then " + std::to_string(dims[i]),
                    i + 1);
      }
      increments += dims[i] - dims[i - 1];
    }
    if (dims[dims.size() - 2] == dims.back()) {
      throw Error(ErrorCode::MalformedSgv,
                  "final entry " + std::to_string(dims.back()) + " must occur exactly once",
                  dims.size());
    }
    if (dims.back() != increments + 2) {
      throw Error(ErrorCode::MalformedSgv, "final entry inconsistent with increments");
    }
    SmallGrowthVector out;
    out.dims_ = std::move(dims);
    return out;
  }

  const std::vector<Value>& dims() const noexcept { return dims_; }
  std::size_t size() const noexcept { return dims_.size(); }
  Value dimension() const noexcept { return dims_.back(); }

  friend bool operator==(const SmallGrowthVector&, const SmallGrowthVector&) = default;

 private:
  SmallGrowthVector() = default;

  std::vector<Value> dims_;
};

/// Multiplicities (d_1, ..., d_N) of a small growth vector with the final
/// multiplicity 1 omitted, stored as blocks ((M_1, m_1), ..., (M_{v+1}, m_{v+1})).
class DerivedVector {
 public:
  static DerivedVector from_blocks(std::vector<Block> blocks) {
    if (blocks.empty()) {
      throw Error(ErrorCode::MalformedDerived, "derived vector is empty");
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (blocks[i].value == 0) {
        throw Error(ErrorCode::MalformedDerived, "block values must be positive", i + 1);
      }
      if (blocks[i].mult == 0) {
        throw Error(ErrorCode::MalformedDerived, "block multiplicities must be positive",
                    i + 1);
      }
      if (i > 0 && blocks[i].value <= blocks[i - 1].value) {
        throw Error(ErrorCode::MalformedDerived,
                    "block values must be strictly increasing, got " +
                        std::to_string(blocks[i - 1].value) + " then " +
                        std::to_string(blocks[i].value),
                    i + 1);
      }
    }
    DerivedVector out;
    out.blocks_ = std::move(blocks);
    return out;
  }

  static DerivedVector from_flat(std::span<const Value> flat) {
    if (flat.empty()) {
      throw Error(ErrorCode::MalformedDerived, "derived vector is empty");
    }
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < flat.size(); ++i) {
      if (flat[i] == 0) {
        throw Error(ErrorCode::MalformedDerived, "entries must be positive", i + 1);
      }
      if (i > 0 && flat[i] < flat[i - 1]) {
        throw Error(ErrorCode::MalformedDerived,
                    "entries must be non-decreasing, got " + std::to_string(flat[i - 1]) +
                        " then " + std::to_string(flat[i]),
                    i + 1);
      }
      if (!blocks.empty() && blocks.back().value == flat[i]) {
        ++blocks.back().mult;
      } else {
        blocks.push_back({flat[i], 1});
      }
    }
    return from_blocks(std::move(blocks));
  }

  static DerivedVector from_flat(std::initializer_list<Value> flat) {
    return from_flat(std::span<const Value>(flat.begin(), flat.size()));
  }

  const std::vector<Block>& blocks() const noexcept { return blocks_; }

  /// Number of distinct values minus one (the letter count V of its code).
  std::size_t v() const noexcept { return blocks_.size() - 1; }

  /// Block (M_i, m_i), 1 <= i <= v + 1.
  const Block& block(std::size_t i) const { return blocks_.at(i - 1); }
  Value M(std::size_t i) const { return block(i).value; }
  Value m(std::size_t i) const { return block(i).mult; }

  /// Flat entry d_i, 1 <= i <= N.
  Value d(std::size_t i) const {
    for (const auto& b : blocks_) {
      if (i <= b.mult) return b.value;
      i -= b.mult;
    }
    throw std::out_of_range("derived vector index past N");
  }

  std::vector<Value> flat() const {
    std::vector<Value> out;
    out.reserve(length());
    for (const auto& b : blocks_) out.insert(out.end(), b.mult, b.value);
    return out;
  }

  /// N, the number of flat entries (the level in the tower).
  std::size_t length() const noexcept {
    std::size_t n = 0;
    for (const auto& b : blocks_) n += b.mult;
    return n;
  }

  Value last() const noexcept { return blocks_.back().value; }

  /// Sum of the flat entries.
  Value sum() const {
    Value s = 0;
    for (const auto& b : blocks_) s = checked::add(s, checked::mul(b.value, b.mult));
    return s;
  }

  /// m_1 = M_2 with M_1 = 1: the code ends in V or T.
  bool is_critical() const noexcept {
    return blocks_.size() >= 2 && blocks_[0].value == 1 && blocks_[0].mult == blocks_[1].value;
  }

  friend bool operator==(const DerivedVector&, const DerivedVector&) = default;

 private:
  DerivedVector() = default;

  std::vector<Block> blocks_;
};

/// [lambda_0; lambda_1, ..., lambda_g]. Validity (the gcd chain) is checked by
/// validate_puiseux in plane_curves.hpp; this type only stores the numbers.
struct PuiseuxCharacteristic {
  Value lambda0 = 0;
  std::vector<Value> exponents;

  std::size_t g() const noexcept { return exponents.size(); }

  /// lambda_j for 0 <= j <= g.
  Value lambda(std::size_t j) const { return j == 0 ? lambda0 : exponents.at(j - 1); }

  friend bool operator==(const PuiseuxCharacteristic&, const PuiseuxCharacteristic&) = default;
};

inline DerivedVector sgv_to_derived(const SmallGrowthVector& sgv) {
  // Run lengths of every dimension but the last, which occurs exactly once.
  const auto& dims = sgv.dims();
  std::vector<Value> flat;
  for (std::size_t i = 0; i + 1 < dims.size(); ++i) {
    if (i > 0 && dims[i] == dims[i - 1]) {
      ++flat.back();
    } else {
      flat.push_back(1);
    }
  }
  for (std::size_t i = 1; i < flat.size(); ++i) {
    if (flat[i] < flat[i - 1]) {
      throw Error(ErrorCode::MalformedSgv,
                  "multiplicities must be non-decreasing, dimension " + std::to_string(i + 2) +
                      " occurs " + std::to_string(flat[i]) + " times after " +
                      std::to_string(flat[i - 1]));
    }
  }
  return DerivedVector::from_flat(flat);
}

inline SmallGrowthVector derived_to_sgv(const DerivedVector& der) {
  std::vector<Value> dims;
  dims.reserve(static_cast<std::size_t>(der.sum()) + 1);
  Value dim = 2;
  for (const auto& b : der.blocks()) {
    for (Value k = 0; k < b.mult; ++k, ++dim) dims.insert(dims.end(), b.value, dim);
  }
  dims.push_back(dim);
  return SmallGrowthVector::from_dims(std::move(dims));
}

/// Level and dimension bookkeeping for a derived vector.
struct GeometrySummary {
  std::size_t level = 0;     ///< N
  Value dim = 0;             ///< n = N + 2
  Value sgv_length = 0;      ///< sum of d_i plus one
  std::size_t v = 0;
  std::size_t g = 0;         ///< block indices i >= 2 with M_{i-1} | M_i

  friend bool operator==(const GeometrySummary&, const GeometrySummary&) = default;
};

inline GeometrySummary geometry_summary(const DerivedVector& der) {
  GeometrySummary s;
  s.level = der.length();
  s.dim = checked::add(s.level, 2);
  s.sgv_length = checked::add(der.sum(), 1);
  s.v = der.v();
  for (std::size_t i = 2; i <= der.v() + 1; ++i) {
    if (der.M(i) % der.M(i - 1) == 0) ++s.g;
  }
  return s;
}

}  // namespace goursat
