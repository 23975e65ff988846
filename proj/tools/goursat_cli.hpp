#pragma once

// Command-line front end. Exit codes: 0 success, 1 bad input or I/O failure,
// 2 when two computations that must agree do not (formula vs recursion,
// census failures).

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "goursat/goursat.hpp"

namespace goursat::cli {

inline constexpr int kOk = 0;
inline constexpr int kBadInput = 1;
inline constexpr int kMismatch = 2;

enum class Kind { Sgv, Der, Blocks, Rvt };

inline const std::map<std::string, Kind> kKindNames = {
    {"sgv", Kind::Sgv}, {"der", Kind::Der}, {"blocks", Kind::Blocks}, {"rvt", Kind::Rvt}};

struct Input {
  Kind kind = Kind::Rvt;
  std::string text;
};

inline DerivedVector derived_from(const Input& in) {
  switch (in.kind) {
    case Kind::Sgv: return sgv_to_derived(parse_sgv(in.text));
    case Kind::Der: return parse_derived(in.text);
    case Kind::Blocks: return parse_derived_blocks(in.text);
    case Kind::Rvt: return rvt_to_derived(validate_rvt(in.text));
  }
  throw Error(ErrorCode::Parse, "unknown input kind");
}

inline RvtCode code_from(const Input& in) {
  return in.kind == Kind::Rvt ? validate_rvt(in.text) : derived_to_rvt(derived_from(in));
}

inline std::string render(Kind kind, const DerivedVector& der) {
  switch (kind) {
    case Kind::Sgv: return format(derived_to_sgv(der));
    case Kind::Der: return format(der);
    case Kind::Blocks: return format_blocks(der);
    case Kind::Rvt: return derived_to_rvt(der).str();
  }
  return {};
}

inline nlohmann::ordered_json puiseux_json(const PuiseuxCharacteristic& pc) {
  return {{"lambda0", pc.lambda0}, {"exponents", pc.exponents}};
}

/// Adds --sgv/--der/--blocks/--rvt to a subcommand; exactly one must be given.
class InputOptions {
 public:
  void attach(CLI::App& app) {
    app.add_option("--sgv", sgv_, "small growth vector, e.g. 2,3,4,4,5");
    app.add_option("--der", der_, "derived vector, e.g. 1,1,2");
    app.add_option("--blocks", blocks_, "derived vector in block form, e.g. \"1^2 2\"");
    app.add_option("--rvt", rvt_, "RVT code, e.g. RRV");
  }

  Input get() const {
    std::vector<Input> given;
    if (sgv_) given.push_back({Kind::Sgv, *sgv_});
    if (der_) given.push_back({Kind::Der, *der_});
    if (blocks_) given.push_back({Kind::Blocks, *blocks_});
    if (rvt_) given.push_back({Kind::Rvt, *rvt_});
    if (given.size() != 1) {
      throw Error(ErrorCode::Parse, "give exactly one of --sgv, --der, --blocks, --rvt");
    }
    return given.front();
  }

 private:
  std::optional<std::string> sgv_, der_, blocks_, rvt_;
};

inline void print_summary(std::ostream& out, const CensusReport& report) {
  out << "census up to level " << report.max_level << ": " << report.total_valid()
      << " valid codes, " << report.total_critical() << " critical, "
      << report.truncations_checked << " truncations checked, " << report.failures.size()
      << " failures (" << std::fixed << std::setprecision(3) << report.elapsed.count()
      << " s)\n";
  out << std::left << std::setw(7) << "level" << std::setw(9) << "valid" << std::setw(10)
      << "critical" << std::setw(18) << "max(sum der + 1)" << std::setw(10) << "F(k+2)"
      << "extremal code\n";
  for (const auto& s : report.levels) {
    out << std::left << std::setw(7) << s.level << std::setw(9) << s.valid << std::setw(10)
        << s.critical << std::setw(18) << s.max_sgv_length << std::setw(10)
        << s.fibonacci_bound << s.extremal_code
        << (s.max_equals_bound() ? "" : "  (max below bound)") << '\n';
  }
  constexpr std::size_t kShown = 20;
  for (std::size_t i = 0; i < report.failures.size() && i < kShown; ++i) {
    const auto& f = report.failures[i];
    out << "FAIL " << f.code << " [" << f.check << "] " << f.path_a << " vs " << f.path_b
        << '\n';
  }
  if (report.failures.size() > kShown) {
    out << "... " << report.failures.size() - kShown << " more failures\n";
  }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of Goursat germs: small growth vectors, RVT codes, Puiseux characteristics",
               "goursat"};
  app.require_subcommand(1);

  // convert
  auto* convert = app.add_subcommand("convert", "convert between sgv, der, blocks and rvt");
  std::string from, to, value;
  convert->add_option("--from", from, "input kind")->required()->check(
      CLI::IsMember({"sgv", "der", "blocks", "rvt"}));
  convert->add_option("--to", to, "output kind")->required()->check(
      CLI::IsMember({"sgv", "der", "blocks", "rvt"}));
  convert->add_option("value", value, "input value")->required();

  // puiseux
  auto* puiseux = app.add_subcommand("puiseux", "Puiseux characteristic of a critical germ");
  InputOptions puiseux_in;
  puiseux_in.attach(*puiseux);
  std::string method = "theorem";
  puiseux->add_option("--method", method, "theorem, mz or both")
      ->check(CLI::IsMember({"theorem", "mz", "both"}));
  bool puiseux_json_out = false;
  puiseux->add_flag("--json", puiseux_json_out, "JSON output");

  // curve
  auto* curve = app.add_subcommand("curve", "Puiseux characteristic of (t^m, sum a_k t^k)");
  Value multiplicity = 0;
  std::string exponents;
  curve->add_option("-m,--multiplicity", multiplicity, "multiplicity m >= 2")->required();
  curve->add_option("-e,--exponents", exponents, "exponents k with a_k != 0, e.g. 6,7")
      ->required();
  bool curve_json = false;
  curve->add_flag("--json", curve_json, "JSON output");

  // info
  auto* info = app.add_subcommand("info", "all invariants of one germ");
  InputOptions info_in;
  info_in.attach(*info);
  bool info_json = false;
  info->add_flag("--json", info_json, "JSON output (schema 1)");

  // census / verify
  std::size_t max_level = 14;
  unsigned threads = 1;
  auto* census = app.add_subcommand("census", "exhaustive cross-validation plus catalog export");
  census->add_option("--max-level", max_level, "longest code length")->capture_default_str();
  census->add_option("--threads", threads, "worker threads")->capture_default_str();
  std::string catalog_format = "csv";
  census->add_option("--format", catalog_format, "catalog format: csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();
  std::string output;
  census->add_option("--output", output, "catalog path (default census.csv / census.jsonl)");

  auto* verify = app.add_subcommand("verify", "census without catalog output");
  verify->add_option("--max-level", max_level, "longest code length")->capture_default_str();
  verify->add_option("--threads", threads, "worker threads")->capture_default_str();

  std::vector<const char*> argv;
  argv.push_back("goursat");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*convert) {
      const Input in{kKindNames.at(from), value};
      const Kind target = kKindNames.at(to);
      if (in.kind == Kind::Rvt && target == Kind::Rvt) {
        out << validate_rvt(in.text).str() << '\n';
      } else {
        out << render(target, derived_from(in)) << '\n';
      }
      return kOk;
    }

    if (*puiseux) {
      const Input in = puiseux_in.get();
      std::optional<PuiseuxCharacteristic> by_formula, by_recursion;
      if (method != "mz") by_formula = puiseux_from_derived(derived_from(in));
      if (method != "theorem") by_recursion = puiseux_from_rvt(code_from(in));
      const bool mismatch = by_formula && by_recursion && *by_formula != *by_recursion;
      if (puiseux_json_out) {
        nlohmann::ordered_json j;
        j["schema"] = kRecordSchema;
        if (by_formula) j["theorem"] = puiseux_json(*by_formula);
        if (by_recursion) j["mz"] = puiseux_json(*by_recursion);
        j["agree"] = !mismatch;
        out << j.dump() << '\n';
      } else if (method == "both") {
        out << "theorem: " << format(*by_formula) << '\n';
        out << "mz: " << format(*by_recursion) << '\n';
      } else {
        out << format(by_formula ? *by_formula : *by_recursion) << '\n';
      }
      if (mismatch) {
        err << "error: formula and recursion disagree\n";
        return kMismatch;
      }
      return kOk;
    }

    if (*curve) {
      const BranchSupport branch = BranchSupport::make(multiplicity, parse_values(exponents));
      const PuiseuxCharacteristic pc = puiseux_from_exponents(branch);
      if (curve_json) {
        nlohmann::ordered_json j = puiseux_json(pc);
        j["schema"] = kRecordSchema;
        out << j.dump() << '\n';
      } else {
        out << format(pc) << '\n';
      }
      return kOk;
    }

    if (*info) {
      const InfoRecord rec = make_info_record(code_from(info_in.get()));
      if (info_json) {
        out << to_json(rec).dump() << '\n';
      } else {
        out << "code: " << rec.code << '\n'
            << "level: " << rec.level << '\n'
            << "dim: " << rec.dim << '\n'
            << "sgv: " << format_values(rec.sgv) << '\n'
            << "der: " << format_values(rec.der) << '\n'
            << "der_blocks: " << rec.der_blocks << '\n'
            << "critical: " << (rec.critical ? "true" : "false") << '\n'
            << "puiseux: " << (rec.puiseux ? format(*rec.puiseux) : rec.puiseux_reason) << '\n'
            << "g: " << rec.g << '\n'
            << "sgv_length: " << rec.sgv_length << '\n';
      }
      return kOk;
    }

    if (*census || *verify) {
      const CensusReport report = cross_validate(max_level, threads);
      if (*census) {
        const bool csv = catalog_format == "csv";
        if (output.empty()) output = csv ? "census.csv" : "census.jsonl";
        std::ofstream file(output, std::ios::binary);
        if (!file) {
          err << "error: cannot open " << output << " for writing\n";
          return kBadInput;
        }
        const std::size_t rows =
            write_catalog(file, max_level, csv ? CatalogFormat::Csv : CatalogFormat::JsonLines);
        file.close();
        if (!file) {
          err << "error: writing " << output << " failed\n";
          return kBadInput;
        }
        out << "wrote " << rows << " records to " << output << '\n';
      }
      print_summary(out, report);
      return report.ok() ? kOk : kMismatch;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace goursat::cli
