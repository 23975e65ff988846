#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the library's algorithms; inputs and outputs are plain vectors and
// strings.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

/// Grammar predicate written from scratch: first two letters R, no "RT".
inline bool is_code(const std::string& w) {
  if (w.empty() || w[0] != 'R') return false;
  if (w.size() >= 2 && w[1] != 'R') return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != 'R' && w[i] != 'V' && w[i] != 'T') return false;
    if (i > 0 && w[i] == 'T' && w[i - 1] == 'R') return false;
  }
  return true;
}

/// Every word of length n over {R, V, T}, filtered by the grammar.
inline std::vector<std::string> brute_force_codes(std::size_t n, bool only_critical) {
  std::vector<std::string> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  const char letters[] = {'R', 'V', 'T'};
  for (std::size_t x = 0; x < total; ++x) {
    std::string w(n, 'R');
    std::size_t y = x;
    for (std::size_t i = n; i-- > 0;) {
      w[i] = letters[y % 3];
      y /= 3;
    }
    if (is_code(w) && (!only_critical || w.back() != 'R')) out.push_back(w);
  }
  return out;
}

/// Codes of length n counted with the 3-state transfer matrix, seeded at two
/// leading R's. Returns {all, critical}.
inline std::array<u64, 2> transfer_matrix_count(std::size_t n) {
  if (n < 2) return {n == 1 ? 1u : 0u, 0};
  // state index: 0 = last letter R, 1 = V, 2 = T
  std::array<u64, 3> ways = {1, 0, 0};
  for (std::size_t len = 2; len < n; ++len) {
    std::array<u64, 3> next{};
    next[0] = ways[0] + ways[1] + ways[2];
    next[1] = ways[0] + ways[1] + ways[2];
    next[2] = ways[1] + ways[2];
    ways = next;
  }
  return {ways[0] + ways[1] + ways[2], ways[1] + ways[2]};
}

inline u64 fib(std::size_t n) {
  u64 a = 0, b = 1;
  for (std::size_t i = 0; i < n; ++i) {
    u64 c = a + b;
    a = b;
    b = c;
  }
  return a;
}

inline u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Theorem on the flat vector, 1-based indices exactly as stated:
/// S = {d_i : d_{i-1} properly divides d_i}, k_j the first index of each
/// element of S (decreasing), lambda_0 = d_N,
/// lambda_j = sum_{i >= k_j} d_i + d_{k_j} + d_{k_j - 1}.
inline std::vector<u64> flat_theorem(const std::vector<u64>& d) {
  const std::size_t N = d.size();
  auto at = [&](std::size_t i) { return d[i - 1]; };
  std::vector<std::size_t> ks;
  for (std::size_t i = 2; i <= N; ++i) {
    if (at(i) != at(i - 1) && at(i) % at(i - 1) == 0) ks.push_back(i);
  }
  std::vector<u64> out = {at(N)};
  for (std::size_t idx = ks.size(); idx-- > 0;) {
    const std::size_t k = ks[idx];
    u64 sum = 0;
    for (std::size_t i = k; i <= N; ++i) sum += at(i);
    out.push_back(sum + at(k) + at(k - 1));
  }
  return out;
}

/// Random valid small growth vector with the given number of increments:
/// non-decreasing multiplicities per dimension, final dimension once.
inline std::vector<u64> random_sgv(std::mt19937_64& rng, std::size_t increments) {
  std::vector<u64> mult;
  u64 last = 1;
  for (std::size_t i = 0; i < increments; ++i) {
    static constexpr u64 kSteps[] = {0, 0, 0, 1, 2, 5};
    last += kSteps[std::uniform_int_distribution<std::size_t>(0, 5)(rng)];
    mult.push_back(last);
  }
  std::vector<u64> sgv;
  u64 dim = 2;
  for (u64 m : mult) {
    for (u64 k = 0; k < m; ++k) sgv.push_back(dim);
    ++dim;
  }
  sgv.push_back(dim);
  return sgv;
}

/// Puiseux characteristic from an exponent set by the literal definition,
/// scanning every integer k in increasing order.
inline std::vector<u64> puiseux_by_scan(u64 m, const std::vector<u64>& support) {
  auto in_support = [&](u64 k) {
    for (u64 s : support)
      if (s == k) return true;
    return false;
  };
  u64 top = m;
  for (u64 s : support) top = std::max(top, s);
  std::vector<u64> out = {m};
  u64 e = m;
  for (u64 k = m; k <= top && e > 1; ++k) {
    if (in_support(k) && k % e != 0) {
      out.push_back(k);
      e = gcd(e, k);
    }
  }
  if (e != 1) return {};
  return out;
}

}  // namespace oracle
