#pragma once

// Serialization of radius tables for the command-line front end.

#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "starrad/published.hpp"
#include "starrad/radii.hpp"

namespace starrad::report {

using json = nlohmann::ordered_json;

/// One row of the radius table.
struct OutputRecord {
  ClassId cls;
  Region region;
  double radius = 0.0;
  bool sharp = false;
  SolveMethod method = SolveMethod::ClosedForm;
  std::optional<double> paper_value;
  std::optional<double> abs_diff;  // present iff paper_value is
  std::string annotation;          // "paper-typo: ..." for flagged pairs
};

inline OutputRecord make_record(const RadiusResult& r, bool compare) {
  OutputRecord out{r.cls, r.region, r.value, r.sharp, r.method, {}, {}, {}};
  if (compare) {
    if (const auto pub = published::lookup(r.cls, r.region)) {
      out.paper_value = pub->value;
      out.abs_diff = std::abs(r.value - pub->value);
      if (!pub->typo.empty()) out.annotation = "paper-typo: " + std::string(pub->typo);
    }
  }
  return out;
}

inline std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

inline std::string sci(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

inline std::string alpha_text(const Region& region) {
  return region.kind == RegionKind::StarlikeHalfPlane ? fixed(region.alpha, 4) : "";
}

inline json to_json(const OutputRecord& rec) {
  json row;
  row["class"] = to_string(rec.cls);
  row["region"] = to_string(rec.region.kind);
  if (rec.region.kind == RegionKind::StarlikeHalfPlane) row["alpha"] = rec.region.alpha;
  row["radius"] = rec.radius;
  row["sharp"] = rec.sharp;
  row["method"] = to_string(rec.method);
  if (rec.paper_value) {
    row["paper_value"] = *rec.paper_value;
    row["abs_diff"] = *rec.abs_diff;
  }
  if (!rec.annotation.empty()) row["annotation"] = rec.annotation;
  return row;
}

inline void write_json(std::ostream& os, const std::vector<OutputRecord>& rows) {
  json doc;
  doc["manifest_version"] = published::kManifestVersion;
  doc["rows"] = json::array();
  for (const auto& rec : rows) doc["rows"].push_back(to_json(rec));
  os << doc.dump(2) << '\n';
}

inline void write_csv(std::ostream& os, const std::vector<OutputRecord>& rows, bool compare) {
  os << "class,region,alpha,radius,sharp,method";
  if (compare) os << ",paper_value,abs_diff,annotation";
  os << '\n';
  for (const auto& rec : rows) {
    os << to_string(rec.cls) << ',' << to_string(rec.region.kind) << ',' << alpha_text(rec.region)
       << ',' << fixed(rec.radius, 10) << ',' << (rec.sharp ? "true" : "false") << ','
       << to_string(rec.method);
    if (compare) {
      os << ',' << (rec.paper_value ? fixed(*rec.paper_value, 4) : "") << ','
         << (rec.abs_diff ? sci(*rec.abs_diff) : "") << ',';
      if (!rec.annotation.empty()) os << '"' << rec.annotation << '"';
    }
    os << '\n';
  }
}

inline void write_markdown(std::ostream& os, const std::vector<OutputRecord>& rows, bool compare) {
  os << "| class | region | alpha | radius | sharp | method |";
  if (compare) os << " published | abs diff | note |";
  os << '\n' << "|---|---|---|---|---|---|";
  if (compare) os << "---|---|---|";
  os << '\n';
  for (const auto& rec : rows) {
    os << "| " << to_string(rec.cls) << " | " << to_string(rec.region.kind) << " | "
       << alpha_text(rec.region) << " | " << fixed(rec.radius, 6) << " | "
       << (rec.sharp ? "=" : ">=") << " | " << to_string(rec.method) << " |";
    if (compare) {
      os << ' ' << (rec.paper_value ? fixed(*rec.paper_value, 4) : "") << " | "
         << (rec.abs_diff ? sci(*rec.abs_diff) : "") << " | " << rec.annotation << " |";
    }
    os << '\n';
  }
}

inline json complex_json(Complex w) { return json{{"re", w.real()}, {"im", w.imag()}}; }

}  // namespace starrad::report
