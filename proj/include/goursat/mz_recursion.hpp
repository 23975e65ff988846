#pragma once

// Puiseux characteristic of a critical RVT code by the pair recursion.
//
// A critical code splits uniquely as R^{c_0} w_1 R^{c_1} w_2 ... R^{c_{q-1}} w_q
// with each w_i a maximal critical string (a word over {V, T} starting with V).
// Each critical string is folded into a coprime pair (a, b) by the E-operator,
// and the pairs are combined left to right:
//
//   first string:   [a; (c_0 - 1) a + b]
//   later strings:  lambda_j <- a lambda_j for the existing entries, then
//                   append a (lambda_last + c_{i-1} - 1) + b - a.

#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "goursat/checked.hpp"
#include "goursat/error.hpp"
#include "goursat/invariant_types.hpp"
#include "goursat/mormul_codes.hpp"

namespace goursat {

struct EPair {
  Value a = 1;
  Value b = 2;

  friend bool operator==(const EPair&, const EPair&) = default;
};

struct CodeDecomposition {
  std::vector<std::size_t> runs;     // c_0 .. c_{q-1}
  std::vector<std::string> omegas;   // w_1 .. w_q

  std::size_t q() const noexcept { return omegas.size(); }

  std::string reassemble() const {
    std::string out;
    for (std::size_t i = 0; i < omegas.size(); ++i) {
      out.append(runs[i], 'R');
      out += omegas[i];
    }
    return out;
  }
};

inline CodeDecomposition split_code(const RvtCode& code) {
  if (code.profile().v == 0) {
    throw Error(ErrorCode::NoCriticalLetters, "code " + code.str() + " has no letter V");
  }
  if (!code.is_critical()) {
    throw Error(ErrorCode::NotCritical, "code " + code.str() + " ends in R");
  }
  CodeDecomposition out;
  const std::string& w = code.str();
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t start = i;
    while (i < w.size() && w[i] == 'R') ++i;
    out.runs.push_back(i - start);
    start = i;
    while (i < w.size() && w[i] != 'R') ++i;
    out.omegas.emplace_back(w.substr(start, i - start));
  }
  return out;
}

/// Folds a critical string right to left from (1, 2):
/// T: (a, b) -> (a, a + b),  V: (a, b) -> (b, a + b).
inline EPair e_operator(std::string_view omega) {
  if (omega.empty() || omega.front() != 'V') {
    throw Error(ErrorCode::MalformedCriticalString, "critical string must start with V", 1);
  }
  EPair p;
  for (std::size_t i = omega.size(); i-- > 0;) {
    switch (omega[i]) {
      case 'T': p = {p.a, checked::add(p.a, p.b)}; break;
      case 'V': p = {p.b, checked::add(p.a, p.b)}; break;
      default:
        throw Error(ErrorCode::MalformedCriticalString,
                    std::string("letter '") + omega[i] + "' is not V or T", i + 1);
    }
  }
  return p;
}

inline PuiseuxCharacteristic puiseux_from_rvt(const RvtCode& code) {
  if (!code.is_critical()) {
    throw Error(ErrorCode::NotCritical,
                "code " + code.str() + " is not critical: immersed, normal form (t, 0)");
  }
  const CodeDecomposition parts = split_code(code);
  using checked::add;
  using checked::mul;
  using checked::sub;

  const EPair first = e_operator(parts.omegas[0]);
  PuiseuxCharacteristic pc;
  pc.lambda0 = first.a;
  pc.exponents.push_back(add(mul(parts.runs[0] - 1, first.a), first.b));

  for (std::size_t i = 1; i < parts.q(); ++i) {
    const auto [a, b] = e_operator(parts.omegas[i]);
    const Value s = parts.runs[i];
    const Value last = pc.exponents.back();
    pc.lambda0 = mul(a, pc.lambda0);
    for (auto& x : pc.exponents) x = mul(a, x);
    pc.exponents.push_back(sub(add(mul(a, add(last, s) - 1), b), a));
  }
  return pc;
}

}  // namespace goursat
