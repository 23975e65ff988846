#pragma once

// Per-code records and their machine-readable encodings: JSON objects (with a
// top-level "schema": 1), JSON lines, and RFC 4180 CSV.
//
//   {"schema":1,"code":"RRV","level":3,"dim":5,"sgv":[2,3,4,4,5],"der":[1,1,2],
//    "der_blocks":"1^2 2","critical":true,"puiseux":{"lambda0":2,"exponents":[5]},
//    "puiseux_reason":null,"g":1,"sgv_length":5}

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "goursat/invariant_types.hpp"
#include "goursat/mormul_codes.hpp"
#include "goursat/text_format.hpp"
#include "goursat/theorem_formula.hpp"
#include "goursat/tower_census.hpp"

namespace goursat {

inline constexpr int kRecordSchema = 1;
inline constexpr const char* kImmersedReason = "immersed: normal form (t, 0)";

struct InfoRecord {
  std::string code;
  std::size_t level = 0;
  Value dim = 0;
  std::vector<Value> sgv;
  std::vector<Value> der;
  std::string der_blocks;
  bool critical = false;
  std::optional<PuiseuxCharacteristic> puiseux;
  std::string puiseux_reason;  // set iff puiseux is empty
  std::size_t g = 0;
  Value sgv_length = 0;

  friend bool operator==(const InfoRecord&, const InfoRecord&) = default;
};

inline InfoRecord make_info_record(const RvtCode& code) {
  const DerivedVector der = rvt_to_derived(code);
  const GeometrySummary summary = geometry_summary(der);
  InfoRecord rec;
  rec.code = code.str();
  rec.level = summary.level;
  rec.dim = summary.dim;
  rec.sgv = derived_to_sgv(der).dims();
  rec.der = der.flat();
  rec.der_blocks = format_blocks(der);
  rec.critical = code.is_critical();
  if (rec.critical) {
    rec.puiseux = puiseux_from_derived(der);
  } else {
    rec.puiseux_reason = kImmersedReason;
  }
  rec.g = summary.g;
  rec.sgv_length = summary.sgv_length;
  return rec;
}

inline nlohmann::ordered_json to_json(const InfoRecord& rec) {
  nlohmann::ordered_json j;
  j["schema"] = kRecordSchema;
  j["code"] = rec.code;
  j["level"] = rec.level;
  j["dim"] = rec.dim;
  j["sgv"] = rec.sgv;
  j["der"] = rec.der;
  j["der_blocks"] = rec.der_blocks;
  j["critical"] = rec.critical;
  if (rec.puiseux) {
    j["puiseux"] = {{"lambda0", rec.puiseux->lambda0}, {"exponents", rec.puiseux->exponents}};
    j["puiseux_reason"] = nullptr;
  } else {
    j["puiseux"] = nullptr;
    j["puiseux_reason"] = rec.puiseux_reason;
  }
  j["g"] = rec.g;
  j["sgv_length"] = rec.sgv_length;
  return j;
}

inline InfoRecord info_record_from_json(const nlohmann::ordered_json& j) {
  try {
    if (j.at("schema").get<int>() != kRecordSchema) {
      throw Error(ErrorCode::Parse, "unsupported record schema " + j.at("schema").dump());
    }
    InfoRecord rec;
    rec.code = j.at("code").get<std::string>();
    rec.level = j.at("level").get<std::size_t>();
    rec.dim = j.at("dim").get<Value>();
    rec.sgv = j.at("sgv").get<std::vector<Value>>();
    rec.der = j.at("der").get<std::vector<Value>>();
    rec.der_blocks = j.at("der_blocks").get<std::string>();
    rec.critical = j.at("critical").get<bool>();
    if (!j.at("puiseux").is_null()) {
      PuiseuxCharacteristic pc;
      pc.lambda0 = j.at("puiseux").at("lambda0").get<Value>();
      pc.exponents = j.at("puiseux").at("exponents").get<std::vector<Value>>();
      rec.puiseux = pc;
    } else {
      rec.puiseux_reason = j.at("puiseux_reason").get<std::string>();
    }
    rec.g = j.at("g").get<std::size_t>();
    rec.sgv_length = j.at("sgv_length").get<Value>();
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed record: ") + e.what());
  }
}

namespace csv {

inline std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline constexpr const char* kHeader =
    "code,level,dim,sgv,der,der_blocks,critical,puiseux,g,sgv_length";

inline std::string row(const InfoRecord& rec) {
  const std::vector<std::string> fields = {
      rec.code,
      std::to_string(rec.level),
      std::to_string(rec.dim),
      format_values(rec.sgv),
      format_values(rec.der),
      rec.der_blocks,
      rec.critical ? "true" : "false",
      rec.puiseux ? format(*rec.puiseux) : "",
      std::to_string(rec.g),
      std::to_string(rec.sgv_length)};
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += quote(fields[i]);
  }
  return out;
}

}  // namespace csv

enum class CatalogFormat { Csv, JsonLines };

/// One record per valid code of length 2..max_level, in enumeration order.
inline std::size_t write_catalog(std::ostream& out, std::size_t max_level, CatalogFormat fmt) {
  std::size_t rows = 0;
  if (fmt == CatalogFormat::Csv) out << csv::kHeader << "\r\n";
  for_each_code(max_level, false, [&](const RvtCode& code) {
    const InfoRecord rec = make_info_record(code);
    if (fmt == CatalogFormat::Csv) {
      out << csv::row(rec) << "\r\n";
    } else {
      out << to_json(rec).dump() << '\n';
    }
    ++rows;
  });
  return rows;
}

}  // namespace goursat
