#pragma once

// Exhaustive enumeration of RVT codes by level and the cross-validation of
// the direct formula against the pair recursion on every critical code.
//
// Codes are produced in lexicographic order with R < V < T, a prefix before
// its extensions ("RR", "RRR", "RRRR", ..., "RRV", ...). A census can be split
// over prefixes of length 6 and run on several threads; partial reports merge
// associatively and the merged report does not depend on the split.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <exception>
#include <numeric>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "goursat/checked.hpp"
#include "goursat/error.hpp"
#include "goursat/invariant_types.hpp"
#include "goursat/mormul_codes.hpp"
#include "goursat/mz_recursion.hpp"
#include "goursat/plane_curves.hpp"
#include "goursat/text_format.hpp"
#include "goursat/theorem_formula.hpp"

namespace goursat {

/// F(1) = F(2) = 1.
inline Value fibonacci(std::size_t n) {
  Value a = 0, b = 1;
  for (std::size_t i = 0; i < n; ++i) {
    a = checked::add(a, b);
    std::swap(a, b);
  }
  return a;
}

namespace detail {

inline bool letter_allowed(const std::string& word, char next) {
  if (word.size() < 2) return next == 'R';
  return !(next == 'T' && word.back() == 'R');
}

// Pre-order walk below `word` (inclusive), visiting words of length in
// [min_len, max_len].
template <typename Visit>
void walk_codes(std::string& word, std::size_t min_len, std::size_t max_len, bool only_critical,
                Visit& visit) {
  if (word.size() >= min_len && (!only_critical || word.back() != 'R')) {
    visit(RvtCode::parse(word));
  }
  if (word.size() == max_len) return;
  for (char c : {'R', 'V', 'T'}) {
    if (!letter_allowed(word, c)) continue;
    word.push_back(c);
    walk_codes(word, min_len, max_len, only_critical, visit);
    word.pop_back();
  }
}

}  // namespace detail

/// Calls `visit(const RvtCode&)` for every valid code of length 2..max_level.
template <typename Visit>
void for_each_code(std::size_t max_level, bool only_critical, Visit&& visit) {
  if (max_level < 2) {
    throw Error(ErrorCode::Precondition, "max_level must be >= 2");
  }
  std::string word = "R";
  detail::walk_codes(word, 2, max_level, only_critical, visit);
}

inline std::vector<RvtCode> enumerate_codes(std::size_t max_level, bool only_critical) {
  std::vector<RvtCode> out;
  for_each_code(max_level, only_critical, [&](const RvtCode& c) { out.push_back(c); });
  return out;
}

struct LevelStats {
  std::size_t level = 0;
  std::size_t valid = 0;
  std::size_t critical = 0;
  Value max_sgv_length = 0;   ///< max over codes of (sum of der) + 1
  std::string extremal_code;  ///< lexicographically first code attaining the max
  Value fibonacci_bound = 0;  ///< F(level + 2)

  bool max_equals_bound() const noexcept { return max_sgv_length == fibonacci_bound; }

  void observe(const std::string& code, Value sgv_length) {
    if (sgv_length > max_sgv_length ||
        (sgv_length == max_sgv_length && (extremal_code.empty() || code < extremal_code))) {
      max_sgv_length = sgv_length;
      extremal_code = code;
    }
  }

  void merge(const LevelStats& other) {
    valid += other.valid;
    critical += other.critical;
    if (!other.extremal_code.empty()) observe(other.extremal_code, other.max_sgv_length);
  }
};

struct CensusFailure {
  std::string code;
  std::string check;   ///< which identity or invariant broke
  std::string path_a;  ///< recursion side / observed value
  std::string path_b;  ///< formula side / expected value

  friend bool operator==(const CensusFailure&, const CensusFailure&) = default;
  friend auto operator<=>(const CensusFailure&, const CensusFailure&) = default;
};

struct CensusReport {
  std::size_t max_level = 0;
  std::vector<LevelStats> levels;  // levels[k - 2] describes level k
  std::vector<CensusFailure> failures;
  std::size_t truncations_checked = 0;
  std::chrono::duration<double> elapsed{0};

  explicit CensusReport(std::size_t max = 0) : max_level(max) {
    for (std::size_t k = 2; k <= max; ++k) {
      LevelStats s;
      s.level = k;
      s.fibonacci_bound = fibonacci(k + 2);
      levels.push_back(s);
    }
  }

  const LevelStats& level(std::size_t k) const { return levels.at(k - 2); }
  LevelStats& level(std::size_t k) { return levels.at(k - 2); }

  std::size_t total_valid() const {
    std::size_t n = 0;
    for (const auto& s : levels) n += s.valid;
    return n;
  }
  std::size_t total_critical() const {
    std::size_t n = 0;
    for (const auto& s : levels) n += s.critical;
    return n;
  }

  bool ok() const noexcept { return failures.empty(); }

  void merge(const CensusReport& other) {
    for (std::size_t i = 0; i < levels.size() && i < other.levels.size(); ++i) {
      levels[i].merge(other.levels[i]);
    }
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    std::sort(failures.begin(), failures.end());
    truncations_checked += other.truncations_checked;
  }
};

namespace detail {

inline void fail(CensusReport& report, const RvtCode& code, std::string check, std::string a,
                 std::string b) {
  report.failures.push_back({code.str(), std::move(check), std::move(a), std::move(b)});
}

inline void check_critical(const RvtCode& code, const DerivedVector& der, CensusReport& report) {
  const PuiseuxCharacteristic by_recursion = puiseux_from_rvt(code);
  const PuiseuxCharacteristic by_formula = puiseux_from_derived(der);
  if (by_recursion != by_formula) {
    fail(report, code, "formula vs recursion", format(by_recursion), format(by_formula));
  }
  for (const auto* pc : {&by_recursion, &by_formula}) {
    if (auto diag = validate_puiseux(*pc); !diag) {
      fail(report, code, "gcd-chain validity", format(*pc), diag.reason);
    }
  }
  if (validate_puiseux(by_recursion)) {
    const PuiseuxCharacteristic back = puiseux_from_exponents(witness_exponents(by_recursion));
    if (back != by_recursion) {
      fail(report, code, "witness round trip", format(back), format(by_recursion));
    }
  }

  const CodeDecomposition parts = split_code(code);
  const std::size_t s_count = divisibility_points(der).g();
  if (parts.q() != by_recursion.g() || parts.q() != s_count) {
    fail(report, code, "q = g = |S|",
         "q=" + std::to_string(parts.q()) + " g=" + std::to_string(by_recursion.g()),
         "|S|=" + std::to_string(s_count));
  }
  if (by_recursion.lambda0 != der.M(der.v() + 1)) {
    fail(report, code, "lambda_0 = M_{v+1}", std::to_string(by_recursion.lambda0),
         std::to_string(der.M(der.v() + 1)));
  }
  for (const auto& omega : parts.omegas) {
    const EPair p = e_operator(omega);
    if (!(p.a < p.b) || std::gcd(p.a, p.b) != 1) {
      fail(report, code, "E-pair coprime with a < b",
           "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")", omega);
    }
  }

  if (s_count >= 2) {
    ++report.truncations_checked;
    const Truncation tr = truncate_last_stage(der);
    std::string beta_word = code.str().substr(0, code.level() - parts.runs.back() -
                                                     parts.omegas.back().size());
    const DerivedVector parsed = rvt_to_derived(RvtCode::parse(beta_word));
    if (tr.beta != parsed || tr.s != parts.runs.back() || tr.omega != parts.omegas.back()) {
      fail(report, code, "truncation relations",
           format_blocks(tr.beta) + " s=" + std::to_string(tr.s) + " w=" + tr.omega,
           format_blocks(parsed) + " s=" + std::to_string(parts.runs.back()) +
               " w=" + parts.omegas.back());
    }
  }
}

inline void check_code(const RvtCode& code, CensusReport& report) {
  LevelStats& stats = report.level(code.level());
  ++stats.valid;
  if (code.is_critical()) ++stats.critical;
  try {
    const DerivedVector der = rvt_to_derived(code);
    if (derived_to_rvt(der) != code) {
      fail(report, code, "der -> code round trip", derived_to_rvt(der).str(), code.str());
    }
    if (der.length() != code.level()) {
      fail(report, code, "length conservation", std::to_string(der.length()),
           std::to_string(code.level()));
    }
    if (der.is_critical() != code.is_critical()) {
      fail(report, code, "criticality correspondence", format_blocks(der), code.str());
    }
    const CodeProfile& prof = code.profile();
    for (std::size_t j = 2; j <= der.v(); ++j) {
      if (der.M(j + 1) % der.M(j) == 0 && prof.r(j) == 0) {
        fail(report, code, "Case-1 r_j >= 1", "r_" + std::to_string(j) + "=0", ">=1");
      }
    }
    const Value sgv_length = checked::add(der.sum(), 1);
    stats.observe(code.str(), sgv_length);
    if (sgv_length > stats.fibonacci_bound) {
      fail(report, code, "Fibonacci bound", std::to_string(sgv_length),
           std::to_string(stats.fibonacci_bound));
    }
    if (code.is_critical()) check_critical(code, der, report);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Overflow) {
      throw Error(ErrorCode::Overflow,
                  "at level " + std::to_string(code.level()) + " (" + code.str() + "): " +
                      e.detail());
    }
    fail(report, code, "exception", e.what(), "");
  }
}

}  // namespace detail

/// Runs every identity and structural invariant over all codes of length
/// 2..max_level. Violations are recorded in the report, never thrown.
inline CensusReport cross_validate(std::size_t max_level, unsigned threads = 1) {
  if (max_level < 3) {
    throw Error(ErrorCode::Precondition, "census needs max_level >= 3 (no critical codes below)");
  }
  const auto start = std::chrono::steady_clock::now();
  CensusReport report(max_level);

  if (threads <= 1) {
    for_each_code(max_level, false, [&](const RvtCode& c) { detail::check_code(c, report); });
  } else {
    // Partition 0 holds the short codes, the rest one prefix of length 6 each.
    const std::size_t split = std::min<std::size_t>(6, max_level);
    std::vector<std::string> prefixes;
    for_each_code(split, false, [&](const RvtCode& c) {
      if (c.level() == split) prefixes.push_back(c.str());
    });
    std::vector<CensusReport> parts(prefixes.size() + 1, CensusReport(max_level));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    auto worker = [&](unsigned id) {
      try {
        for (std::size_t i = next++; i < parts.size(); i = next++) {
          auto visit = [&](const RvtCode& c) { detail::check_code(c, parts[i]); };
          if (i == 0) {
            if (split > 2) {
              std::string word = "R";
              detail::walk_codes(word, 2, split - 1, false, visit);
            }
          } else {
            std::string word = prefixes[i - 1];
            detail::walk_codes(word, split, max_level, false, visit);
          }
        }
      } catch (...) {
        errors[id] = std::current_exception();
      }
    };
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (const auto& p : parts) report.merge(p);
  }

  std::sort(report.failures.begin(), report.failures.end());
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

/// Per level k, the maximum of (sum of der) + 1 over all valid codes of
/// length k with the first code attaining it, next to the bound F(k + 2).
inline std::vector<LevelStats> fibonacci_extremes(std::size_t max_level) {
  CensusReport report(max_level);
  for_each_code(max_level, false, [&](const RvtCode& c) {
    LevelStats& s = report.level(c.level());
    ++s.valid;
    if (c.is_critical()) ++s.critical;
    s.observe(c.str(), checked::add(rvt_to_derived(c).sum(), 1));
  });
  return report.levels;
}

}  // namespace goursat
