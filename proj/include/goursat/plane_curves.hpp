#pragma once

// Puiseux characteristic of a plane branch (t^m, sum_k a_k t^k) computed from
// the exponent support {k : a_k != 0}. Coefficients never enter the
// definition, so they are not modelled; bringing a curve into this normal
// form is outside the library.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "goursat/checked.hpp"
#include "goursat/error.hpp"
#include "goursat/invariant_types.hpp"
#include "goursat/text_format.hpp"

namespace goursat {

class BranchSupport {
 public:
  /// Multiplicity m >= 2 and exponents >= m; the exponents are kept as a
  /// sorted set, so duplicates collapse.
  static BranchSupport make(Value multiplicity, std::vector<Value> exponents) {
    if (multiplicity < 2) {
      throw Error(ErrorCode::InvalidBranch,
                  "multiplicity must be >= 2, got " + std::to_string(multiplicity));
    }
    std::sort(exponents.begin(), exponents.end());
    exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
    if (!exponents.empty() && exponents.front() < multiplicity) {
      throw Error(ErrorCode::InvalidBranch, "exponent " + std::to_string(exponents.front()) +
                                                " is below the multiplicity " +
                                                std::to_string(multiplicity));
    }
    BranchSupport out;
    out.m_ = multiplicity;
    out.exps_ = std::move(exponents);
    return out;
  }

  Value multiplicity() const noexcept { return m_; }
  const std::vector<Value>& exponents() const noexcept { return exps_; }

  friend bool operator==(const BranchSupport&, const BranchSupport&) = default;

 private:
  BranchSupport() = default;

  Value m_ = 2;
  std::vector<Value> exps_;
};

struct PuiseuxDiagnostics {
  bool valid = false;
  std::vector<Value> e_chain;  // e_0 .. as far as it could be computed
  std::string reason;          // empty when valid

  explicit operator bool() const noexcept { return valid; }
};

inline PuiseuxDiagnostics validate_puiseux(const PuiseuxCharacteristic& pc) {
  PuiseuxDiagnostics d;
  d.e_chain.push_back(pc.lambda0);
  if (pc.lambda0 < 2) {
    d.reason = "lambda_0 must be >= 2";
    return d;
  }
  Value prev = pc.lambda0;
  for (std::size_t j = 1; j <= pc.g(); ++j) {
    if (pc.lambda(j) <= prev) {
      d.reason = "lambda_" + std::to_string(j) + " = " + std::to_string(pc.lambda(j)) +
                 " is not larger than lambda_" + std::to_string(j - 1);
      return d;
    }
    prev = pc.lambda(j);
    const Value e = std::gcd(d.e_chain.back(), pc.lambda(j));
    if (e == d.e_chain.back()) {
      d.reason = "e_" + std::to_string(j) + " = gcd(e_" + std::to_string(j - 1) + ", lambda_" +
                 std::to_string(j) + ") = " + std::to_string(e) + " does not decrease";
      return d;
    }
    d.e_chain.push_back(e);
  }
  if (d.e_chain.back() != 1) {
    d.reason = "e_g = " + std::to_string(d.e_chain.back()) + " must be 1";
    return d;
  }
  d.valid = true;
  return d;
}

inline bool is_well_parametrized(const BranchSupport& branch) {
  Value e = branch.multiplicity();
  for (Value k : branch.exponents()) e = std::gcd(e, k);
  return e == 1;
}

/// lambda_0 = e_0 = m, lambda_{i+1} = min{k in support : e_i does not divide k},
/// e_{i+1} = gcd(e_i, lambda_{i+1}), until e_g = 1.
inline PuiseuxCharacteristic puiseux_from_exponents(const BranchSupport& branch) {
  PuiseuxCharacteristic pc;
  pc.lambda0 = branch.multiplicity();
  Value e = pc.lambda0;
  auto next = branch.exponents().begin();
  const auto end = branch.exponents().end();
  while (e > 1) {
    next = std::find_if(next, end, [e](Value k) { return k % e != 0; });
    if (next == end) {
      throw Error(ErrorCode::BadlyParametrized,
                  "every exponent is divisible by e = " + std::to_string(e) +
                      "; the parametrization factors through t -> t^" + std::to_string(e));
    }
    pc.exponents.push_back(*next);
    e = std::gcd(e, *next);
  }
  return pc;
}

/// Minimal branch realizing a valid characteristic: support {lambda_1..lambda_g}.
inline BranchSupport witness_exponents(const PuiseuxCharacteristic& pc) {
  if (auto diag = validate_puiseux(pc); !diag) {
    throw Error(ErrorCode::InvalidPuiseux, format(pc) + ": " + diag.reason);
  }
  return BranchSupport::make(pc.lambda0, pc.exponents);
}

}  // namespace goursat
