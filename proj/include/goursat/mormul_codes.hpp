#pragma once

// RVT codes and their bijection with Goursat-realizable derived vectors.
//
// A code with v letters V is read as
//
//   R^{r_{v+1}} V T^{t_v} R^{r_v} ... V T^{t_1} R^{r_1}
//
// where t_j, r_j count the T and R letters after the j-th V from the right.
// In block form ((M_1,m_1), ..., (M_{v+1},m_{v+1})) of the derived vector:
//
//   r_{v+1} = m_{v+1} + 1,   t_1 = M_2 - 2,   r_1 = m_1 - M_2,
//   and for 2 <= j <= v:
//     M_j | M_{j+1}:  t_j = M_{j+1}/M_j - 2,  r_j = m_j - t_j - 1  (>= 1)
//     otherwise:      t_j = m_j - 1,          r_j = 0,
//                     M_{j+1} = m_j M_j + M_{j-1}

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "goursat/checked.hpp"
#include "goursat/error.hpp"
#include "goursat/invariant_types.hpp"

namespace goursat {

/// Run lengths of a code, 1-based from the right: t(j), r(j) for j <= v and
/// r(v + 1) for the leading R run.
struct CodeProfile {
  std::size_t v = 0;
  std::vector<std::size_t> t_runs;  // t_1 .. t_v
  std::vector<std::size_t> r_runs;  // r_1 .. r_{v+1}

  std::size_t t(std::size_t j) const { return t_runs.at(j - 1); }
  std::size_t r(std::size_t j) const { return r_runs.at(j - 1); }

  std::size_t length() const noexcept {
    std::size_t n = v;
    for (auto x : t_runs) n += x;
    for (auto x : r_runs) n += x;
    return n;
  }

  friend bool operator==(const CodeProfile&, const CodeProfile&) = default;
};

/// A word over {R, V, T} obeying the code grammar: starts with R, the second
/// letter is R whenever there is one, and T never directly follows R.
class RvtCode {
 public:
  /// Parses and validates; this is the only way to obtain a code.
  static RvtCode parse(std::string_view word) {
    if (word.empty()) {
      throw Error(ErrorCode::MissingLeadingRR, "code is empty");
    }
    for (std::size_t i = 0; i < word.size(); ++i) {
      char c = word[i];
      if (c != 'R' && c != 'V' && c != 'T') {
        throw Error(ErrorCode::BadAlphabet,
                    std::string("letter '") + c + "' is not one of R, V, T", i + 1);
      }
    }
    if (word[0] != 'R') {
      throw Error(ErrorCode::MissingLeadingRR, "first letter must be R", 1);
    }
    for (std::size_t i = 1; i < word.size(); ++i) {
      if (word[i] == 'T' && word[i - 1] == 'R') {
        throw Error(ErrorCode::TAfterR, "T cannot follow R", i + 1);
      }
      if (i == 1 && word[i] != 'R') {
        throw Error(ErrorCode::MissingLeadingRR, "second letter must be R", 2);
      }
    }
    RvtCode out;
    out.word_ = std::string(word);
    out.profile_ = compute_profile(out.word_);
    return out;
  }

  const std::string& str() const noexcept { return word_; }
  std::size_t level() const noexcept { return word_.size(); }
  bool is_critical() const noexcept { return word_.back() != 'R'; }
  const CodeProfile& profile() const noexcept { return profile_; }

  friend bool operator==(const RvtCode& a, const RvtCode& b) { return a.word_ == b.word_; }
  friend std::strong_ordering operator<=>(const RvtCode& a, const RvtCode& b) {
    return a.word_ <=> b.word_;
  }

 private:
  RvtCode() = default;

  static CodeProfile compute_profile(const std::string& word) {
    CodeProfile p;
    std::size_t leading = 0;
    while (leading < word.size() && word[leading] == 'R') ++leading;
    // Walk right to left, closing a (t, r) pair at each V.
    std::size_t t = 0, r = 0;
    for (std::size_t i = word.size(); i-- > leading;) {
      switch (word[i]) {
        case 'R': ++r; break;
        case 'T': ++t; break;
        default:
          p.t_runs.push_back(t);
          p.r_runs.push_back(r);
          t = r = 0;
          ++p.v;
      }
    }
    p.r_runs.push_back(leading);
    return p;
  }

  std::string word_;
  CodeProfile profile_;
};

inline RvtCode validate_rvt(std::string_view word) { return RvtCode::parse(word); }

namespace detail {

inline std::string block_name(char symbol, std::size_t i) {
  return std::string(1, symbol) + "_" + std::to_string(i);
}

}  // namespace detail

/// Mormul's relations. Throws NotRealizable naming the violated relation when
/// the derived vector has no code.
inline RvtCode derived_to_rvt(const DerivedVector& der) {
  using detail::block_name;
  if (der.M(1) != 1) {
    throw Error(ErrorCode::NotRealizable, "M_1 = " + std::to_string(der.M(1)) + " != 1");
  }
  const std::size_t v = der.v();
  if (v == 0) {
    return RvtCode::parse(std::string(der.m(1), 'R'));
  }
  if (der.m(1) < der.M(2)) {
    throw Error(ErrorCode::NotRealizable,
                "r_1 = m_1 - M_2 < 0 (m_1 = " + std::to_string(der.m(1)) +
                    ", M_2 = " + std::to_string(der.M(2)) + ")");
  }
  std::vector<Value> t(v + 1), r(v + 2);
  t[1] = der.M(2) - 2;
  r[1] = der.m(1) - der.M(2);
  for (std::size_t j = 2; j <= v; ++j) {
    const Value Mj = der.M(j), Mnext = der.M(j + 1), mj = der.m(j);
    if (Mnext % Mj == 0) {
      t[j] = Mnext / Mj - 2;
      if (mj < t[j] + 2) {
        throw Error(ErrorCode::NotRealizable,
                    "Case-1 run r_" + std::to_string(j) + " = m_" + std::to_string(j) +
                        " - t_" + std::to_string(j) + " - 1 must be >= 1 (m_" +
                        std::to_string(j) + " = " + std::to_string(mj) + ", t_" +
                        std::to_string(j) + " = " + std::to_string(t[j]) + ")");
      }
      r[j] = mj - t[j] - 1;
    } else {
      const Value expected = checked::add(checked::mul(mj, Mj), der.M(j - 1));
      if (Mnext != expected) {
        throw Error(ErrorCode::NotRealizable,
                    "Case-2 recurrence " + block_name('M', j + 1) + " != " +
                        block_name('m', j) + "*" + block_name('M', j) + " + " +
                        block_name('M', j - 1) + " (" + std::to_string(Mnext) +
                        " != " + std::to_string(expected) + ")");
      }
      t[j] = mj - 1;
      r[j] = 0;
    }
  }
  r[v + 1] = checked::add(der.m(v + 1), 1);

  std::string word(r[v + 1], 'R');
  for (std::size_t j = v; j >= 1; --j) {
    word += 'V';
    word.append(t[j], 'T');
    word.append(r[j], 'R');
  }
  return RvtCode::parse(word);
}

/// Inverts the relations: a zero R-run after a V (j >= 2) selects the
/// non-divisible branch. The result is certified by re-encoding it.
inline DerivedVector rvt_to_derived(const RvtCode& code) {
  const CodeProfile& p = code.profile();
  std::vector<Block> blocks;
  if (p.v == 0) {
    blocks.push_back({1, code.level()});
  } else {
    std::vector<Value> M(p.v + 2), m(p.v + 2);
    M[1] = 1;
    M[2] = checked::add(p.t(1), 2);
    m[1] = checked::add(M[2], p.r(1));
    for (std::size_t j = 2; j <= p.v; ++j) {
      if (p.r(j) >= 1) {
        M[j + 1] = checked::mul(checked::add(p.t(j), 2), M[j]);
        m[j] = checked::add(checked::add(p.r(j), p.t(j)), 1);
      } else {
        m[j] = checked::add(p.t(j), 1);
        M[j + 1] = checked::add(checked::mul(m[j], M[j]), M[j - 1]);
      }
    }
    m[p.v + 1] = p.r(p.v + 1) - 1;
    for (std::size_t i = 1; i <= p.v + 1; ++i) blocks.push_back({M[i], m[i]});
  }

  DerivedVector der = [&] {
    try {
      return DerivedVector::from_blocks(blocks);
    } catch (const Error& e) {
      throw Error(ErrorCode::RoundTripFailure,
                  "code " + code.str() + " inverts to an invalid vector: " + e.what());
    }
  }();
  try {
    if (derived_to_rvt(der) == code) return der;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Overflow) throw;
    throw Error(ErrorCode::RoundTripFailure,
                "code " + code.str() + " inverts to a non-realizable vector: " + e.what());
  }
  throw Error(ErrorCode::RoundTripFailure,
              "code " + code.str() + " does not re-encode to itself");
}

/// Splitting of a critical code with g >= 2 as beta R^s omega, where omega is
/// the final critical string and beta is again critical.
struct Truncation {
  DerivedVector beta;
  Value s = 0;
  std::string omega;
  std::size_t r = 0;  ///< block index with M_r | M_{r+1} at the second-smallest divisibility point
};

inline Truncation truncate_last_stage(const DerivedVector& der) {
  if (!der.is_critical()) {
    throw Error(ErrorCode::NotCritical, "truncation requires M_1 = 1, v >= 1 and m_1 = M_2");
  }
  const RvtCode code = derived_to_rvt(der);

  std::vector<std::size_t> points;  // block indices k with M_{k-1} | M_k, ascending
  for (std::size_t k = 2; k <= der.v() + 1; ++k) {
    if (der.M(k) % der.M(k - 1) == 0) points.push_back(k);
  }
  if (points.size() < 2) {
    throw Error(ErrorCode::SingleStage, "only one divisibility point, nothing to truncate");
  }
  const std::size_t r = points[1] - 1;
  const std::size_t v = der.v();
  const Value Mr = der.M(r);
  const Value ratio = der.M(r + 1) / Mr;

  // Tilde relations: m~_1 = M_{r+1}/M_r, M~_i = M_{r+i-1}/M_r, m~_{i+1} = m_{r+i}.
  const std::size_t v_tilde = v - r + 1;
  std::vector<Block> beta_blocks;
  beta_blocks.push_back({1, ratio});
  for (std::size_t i = 2; i <= v_tilde + 1; ++i) {
    const Value M = der.M(r + i - 1);
    if (M % Mr != 0) {
      throw Error(ErrorCode::NotRealizable,
                  "M_" + std::to_string(r + i - 1) + " not divisible by M_" + std::to_string(r));
    }
    beta_blocks.push_back({M / Mr, der.m(r + i - 1)});
  }

  Truncation out{DerivedVector::from_blocks(std::move(beta_blocks)), 0, {}, r};
  out.s = checked::sub(checked::add(der.m(r), 1), ratio);
  for (std::size_t j = r - 1; j >= 2; --j) {
    out.omega += 'V';
    out.omega.append(der.m(j) - 1, 'T');
  }
  out.omega += 'V';
  out.omega.append(der.M(2) - 2, 'T');

  // The tail must be exactly a maximal run R^s followed by omega.
  const std::string& word = code.str();
  const std::size_t tail = out.s + out.omega.size();
  bool consistent = out.s >= 1 && word.size() > tail &&
                    word.compare(word.size() - out.omega.size(), std::string::npos, out.omega) == 0 &&
                    word[word.size() - tail - 1] != 'R';
  for (std::size_t i = word.size() - tail; consistent && i < word.size() - out.omega.size(); ++i) {
    consistent = word[i] == 'R';
  }
  if (consistent) {
    consistent = rvt_to_derived(RvtCode::parse(word.substr(0, word.size() - tail))) == out.beta;
  }
  if (!consistent) {
    throw Error(ErrorCode::RoundTripFailure,
                "truncation of " + word + " disagrees with its code");
  }
  return out;
}

}  // namespace goursat
