#pragma once

// Direct formula for the Puiseux characteristic of a critical derived vector.
//
// In block form ((M_1, m_1), ..., (M_{v+1}, m_{v+1})) with M_1 = 1, m_1 = M_2,
// let S be the block values M_k whose predecessor M_{k-1} divides them, listed
// in decreasing order as N_1 > ... > N_g with N_j = M_{k_j}. Then
//
//   lambda_0 = M_{v+1}
//   lambda_j = sum_{i >= k_j} m_i M_i + M_{k_j} + M_{k_j - 1}
//
// Flat form: with S = { d_i : d_{i-1} properly divides d_i },
//   lambda_j = sum_{i >= k_j} d_i + d_{k_j} + d_{k_j - 1}.
// Only the block form is evaluated here.

#include <cstddef>
#include <vector>

#include "goursat/checked.hpp"
#include "goursat/error.hpp"
#include "goursat/invariant_types.hpp"
#include "goursat/mormul_codes.hpp"

namespace goursat {

struct DivisibilityPoint {
  std::size_t block_index = 0;  // k_j
  Value value = 0;              // N_j = M_{k_j}

  friend bool operator==(const DivisibilityPoint&, const DivisibilityPoint&) = default;
};

struct DivisibilityProfile {
  std::vector<DivisibilityPoint> points;  // decreasing value

  std::size_t g() const noexcept { return points.size(); }
  Value N(std::size_t j) const { return points.at(j - 1).value; }
  std::size_t k(std::size_t j) const { return points.at(j - 1).block_index; }
};

inline DivisibilityProfile divisibility_points(const DerivedVector& der) {
  DivisibilityProfile out;
  for (std::size_t k = der.v() + 1; k >= 2; --k) {
    if (der.M(k) % der.M(k - 1) == 0) out.points.push_back({k, der.M(k)});
  }
  return out;
}

inline PuiseuxCharacteristic puiseux_from_derived(const DerivedVector& der) {
  if (der.v() == 0 || !der.is_critical()) {
    throw Error(ErrorCode::NotCritical,
                "need v >= 1, M_1 = 1 and m_1 = M_2: immersed, normal form (t, 0)");
  }
  (void)derived_to_rvt(der);  // throws NotRealizable

  const std::size_t top = der.v() + 1;
  // tail[k] = sum_{i >= k} m_i M_i
  std::vector<Value> tail(top + 2, 0);
  for (std::size_t i = top; i >= 1; --i) {
    tail[i] = checked::add(tail[i + 1], checked::mul(der.m(i), der.M(i)));
  }

  PuiseuxCharacteristic pc;
  pc.lambda0 = der.M(top);
  for (const auto& p : divisibility_points(der).points) {
    const std::size_t k = p.block_index;
    pc.exponents.push_back(checked::add(checked::add(tail[k], der.M(k)), der.M(k - 1)));
  }
  return pc;
}

}  // namespace goursat
