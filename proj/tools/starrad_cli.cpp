// starrad: radius tables, verification suites, plot data and envelope probes.
//
// Exit codes: 0 success, 1 a verification or comparison failed, 2 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "report.hpp"
#include "starrad/starrad.hpp"

namespace {

using namespace starrad;
using report::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<ClassId> classes_from(const std::string& name) {
  if (name == "all") return {kAllClasses, kAllClasses + 3};
  const auto cls = parse_class(name);
  if (!cls) throw usage_error("unknown class '" + name + "'");
  return {*cls};
}

RegionKind region_from(const std::string& name) {
  const auto kind = parse_region_kind(name);
  if (!kind) throw usage_error("unknown region '" + name + "'");
  return *kind;
}

Region region_with_alpha(RegionKind kind, double alpha) {
  return kind == RegionKind::StarlikeHalfPlane ? Region::starlike(alpha) : Region::of(kind);
}

void check_alphas(const std::vector<double>& alphas) {
  for (double a : alphas) {
    if (!(a >= 0.0 && a < 1.0)) throw usage_error("--alpha must lie in [0,1)");
  }
}

// Writes through `body` to the file named by `out`, or stdout for "-".
template <class Body>
void emit(const std::string& out, Body&& body) {
  if (out.empty() || out == "-" || out == "stdout") {
    body(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw usage_error("cannot open '" + out + "' for writing");
  body(file);
}

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// ---------------------------------------------------------------------------
// table

struct TableFlags {
  std::string cls = "all";
  std::string target = "all";
  std::vector<double> alphas;
  std::string format = "json";
  std::string out = "-";
  bool compare = false;
};

int cmd_table(const TableFlags& f) {
  std::vector<double> alphas = f.alphas.empty() ? std::vector<double>{0.0} : f.alphas;
  check_alphas(alphas);
  const auto classes = classes_from(f.cls);

  std::vector<Region> regions;
  if (f.target == "all") {
    for (double a : alphas) regions.push_back(Region::starlike(a));
    for (RegionKind kind : kNamedRegions) regions.push_back(Region::of(kind));
  } else {
    const RegionKind kind = region_from(f.target);
    if (kind == RegionKind::StarlikeHalfPlane) {
      for (double a : alphas) regions.push_back(Region::starlike(a));
    } else {
      regions.push_back(Region::of(kind));
    }
  }

  std::vector<report::OutputRecord> rows;
  bool comparison_failed = false;
  for (ClassId cls : classes) {
    for (const Region& region : regions) {
      auto rec = report::make_record(radius_for_region(cls, region), f.compare);
      if (rec.abs_diff && rec.annotation.empty() &&
          *rec.abs_diff > published::kCompareTolerance) {
        comparison_failed = true;
        std::fprintf(stderr, "MISMATCH %s %s radius=%.6f published=%.4f abs_diff=%.3e\n",
                     std::string(to_string(cls)).c_str(),
                     std::string(to_string(region.kind)).c_str(), rec.radius, *rec.paper_value,
                     *rec.abs_diff);
      }
      rows.push_back(std::move(rec));
    }
  }

  emit(f.out, [&](std::ostream& os) {
    if (f.format == "csv") report::write_csv(os, rows, f.compare);
    else if (f.format == "md") report::write_markdown(os, rows, f.compare);
    else report::write_json(os, rows);
  });
  return comparison_failed ? kExitFail : kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyFlags {
  std::string suite = "all";
  int samples = 1000;
  double tol = 1e-8;
  std::vector<double> alphas;
  int xval_points = 10000;
  std::string out = "-";
};

struct Failure {
  std::string suite, cls, region;
  double residual;
};

json sharpness_suite(const VerifyFlags& f, const std::vector<double>& alphas,
                     std::vector<Failure>& failures) {
  json rows = json::array();
  bool pass = true;
  for (const auto& [cls, region] : sharp_claims(alphas)) {
    const SharpnessReport rep = sharpness_check(cls, region, f.tol);
    json row;
    row["class"] = to_string(cls);
    row["region"] = to_string(region.kind);
    if (region.kind == RegionKind::StarlikeHalfPlane) row["alpha"] = region.alpha;
    row["radius"] = rep.radius;
    row["touch_point"] = rep.touch_point.real();
    row["value"] = report::complex_json(rep.value);
    row["boundary_distance"] = rep.boundary_distance;
    row["pass"] = rep.pass;
    rows.push_back(std::move(row));
    if (!rep.pass) {
      pass = false;
      failures.push_back({"sharpness", std::string(to_string(cls)),
                          std::string(to_string(region.kind)), rep.boundary_distance});
    }
  }
  json out;
  out["pass"] = pass;
  out["tolerance"] = f.tol;
  out["checked"] = rows.size();
  out["results"] = std::move(rows);
  return out;
}

json containment_suite(const VerifyFlags& f, const std::vector<double>& alphas,
                       std::vector<Failure>& failures) {
  json rows = json::array();
  bool pass = true;
  for (ClassId cls : kAllClasses) {
    std::vector<Region> regions;
    for (double a : alphas) regions.push_back(Region::starlike(a));
    for (RegionKind kind : kNamedRegions) regions.push_back(Region::of(kind));
    for (const Region& region : regions) {
      const double R = radius_for_region(cls, region).value;
      const auto inner = containment_check(cls, region, 0.99 * R, f.samples);
      const auto outer = containment_check(cls, region, 1.05 * R, f.samples);
      const bool ok = inner.all_inside && outer.witness.has_value();
      json row;
      row["class"] = to_string(cls);
      row["region"] = to_string(region.kind);
      if (region.kind == RegionKind::StarlikeHalfPlane) row["alpha"] = region.alpha;
      row["radius"] = R;
      row["inside_at_0.99R"] = inner.all_inside;
      row["outside_count_at_0.99R"] = inner.outside;
      row["witness_at_1.05R"] = outer.witness ? report::complex_json(*outer.witness) : json(nullptr);
      row["pass"] = ok;
      rows.push_back(std::move(row));
      if (!ok) {
        pass = false;
        failures.push_back({"containment", std::string(to_string(cls)),
                            std::string(to_string(region.kind)),
                            static_cast<double>(inner.outside)});
      }
    }
  }
  json out;
  out["pass"] = pass;
  out["samples"] = f.samples;
  out["checked"] = rows.size();
  out["results"] = std::move(rows);
  return out;
}

json shah_suite(const VerifyFlags& f, std::vector<Failure>& failures) {
  constexpr double kExcessTol = 1e-10;
  constexpr double kAttainTol = 1e-8;
  json rows = json::array();
  bool pass = true;
  for (double alpha : {0.0, 0.5}) {
    const ShahReport rep = shah_bound_check(alpha, f.samples);
    const bool ok = rep.max_excess <= kExcessTol && rep.max_attainment_gap <= kAttainTol;
    json row;
    row["alpha"] = alpha;
    row["max_excess"] = rep.max_excess;
    row["max_attainment_gap"] = rep.max_attainment_gap;
    row["pass"] = ok;
    rows.push_back(std::move(row));
    if (!ok) {
      pass = false;
      failures.push_back({"shah", "-", "alpha=" + num(alpha),
                          std::max(rep.max_excess, rep.max_attainment_gap)});
    }
  }
  json out;
  out["pass"] = pass;
  out["samples"] = f.samples;
  out["excess_tolerance"] = kExcessTol;
  out["attainment_tolerance"] = kAttainTol;
  out["results"] = std::move(rows);
  return out;
}

json xval_suite(const VerifyFlags& f, std::vector<Failure>& failures) {
  json rows = json::array();
  bool pass = true;
  for (RegionKind kind : cross_validated_regions()) {
    const CrossValidationReport rep = cross_validate_membership(kind, f.xval_points);
    const bool ok = rep.disagreements == 0 && rep.unresolved == 0;
    json row;
    row["region"] = to_string(kind);
    row["points"] = rep.points;
    row["compared"] = rep.compared;
    row["excluded"] = rep.excluded;
    row["escalated"] = rep.escalated;
    row["unresolved"] = rep.unresolved;
    row["disagreements"] = rep.disagreements;
    row["max_nodes"] = rep.max_nodes;
    row["pass"] = ok;
    rows.push_back(std::move(row));
    if (!ok) {
      pass = false;
      failures.push_back({"oracle-xval", "-", std::string(to_string(kind)),
                          static_cast<double>(rep.disagreements + rep.unresolved)});
    }
  }
  json out;
  out["pass"] = pass;
  out["points_per_region"] = f.xval_points;
  out["results"] = std::move(rows);
  return out;
}

int cmd_verify(const VerifyFlags& f) {
  std::vector<double> alphas = f.alphas.empty() ? std::vector<double>{0.0} : f.alphas;
  check_alphas(alphas);
  if (f.samples < kMinContainmentSamples) throw usage_error("--samples must be >= 1000");
  if (!(f.tol > 0.0)) throw usage_error("--tol must be positive");
  if (f.xval_points < 1) throw usage_error("--xval-points must be positive");

  const bool all = f.suite == "all";
  std::vector<Failure> failures;
  json doc;
  doc["manifest_version"] = published::kManifestVersion;
  json suites = json::object();
  if (all || f.suite == "sharpness") suites["sharpness"] = sharpness_suite(f, alphas, failures);
  if (all || f.suite == "containment") suites["containment"] = containment_suite(f, alphas, failures);
  if (all || f.suite == "shah") suites["shah"] = shah_suite(f, failures);
  if (all || f.suite == "oracle-xval") suites["oracle-xval"] = xval_suite(f, failures);
  doc["pass"] = failures.empty();
  doc["suites"] = std::move(suites);
  json fail_rows = json::array();
  for (const Failure& x : failures) {
    fail_rows.push_back(
        {{"suite", x.suite}, {"class", x.cls}, {"region", x.region}, {"residual", x.residual}});
    std::fprintf(stderr, "FAIL %s %s %s residual=%.3e\n", x.suite.c_str(), x.cls.c_str(),
                 x.region.c_str(), x.residual);
  }
  doc["failures"] = std::move(fail_rows);

  emit(f.out, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
  return failures.empty() ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------------------
// dump

struct DumpFlags {
  std::string what;
  std::string target;
  std::string cls;
  double alpha = 0.0;
  std::optional<double> r;
  int points = 512;
  std::string out = "-";
};

void write_polyline(std::ostream& os, const std::vector<double>& t, const std::vector<Complex>& w) {
  os << "t,re,im\n";
  char buf[128];
  for (std::size_t j = 0; j < t.size(); ++j) {
    std::snprintf(buf, sizeof buf, "%.12e,%.12e,%.12e\n", t[j], w[j].real(), w[j].imag());
    os << buf;
  }
}

int cmd_dump(const DumpFlags& f) {
  if (f.points < 2) throw usage_error("--points must be >= 2");
  if (f.what == "region") {
    if (f.target.empty()) throw usage_error("dump --what region needs --target");
    check_alphas({f.alpha});
    const Region region = region_with_alpha(region_from(f.target), f.alpha);
    const BoundaryPolyline line = boundary_points(region, f.points);
    emit(f.out, [&](std::ostream& os) { write_polyline(os, line.t, line.w); });
    return kExitOk;
  }
  // trajectory: image of |z| = r under zf'/f of the class extremal
  if (f.cls.empty() || f.cls == "all") throw usage_error("dump --what trajectory needs --class");
  if (!f.r) throw usage_error("dump --what trajectory needs --r");
  if (!(*f.r > 0.0 && *f.r < 1.0)) throw usage_error("--r must lie in (0,1)");
  const ExtremalId fn = extremal_of(classes_from(f.cls).front());
  std::vector<double> t(f.points);
  std::vector<Complex> w(f.points);
  for (int j = 0; j < f.points; ++j) {
    t[j] = 2.0 * std::numbers::pi * j / (f.points - 1);
    w[j] = logderiv(fn, DiskPoint(std::polar(*f.r, t[j])));
  }
  emit(f.out, [&](std::ostream& os) { write_polyline(os, t, w); });
  return kExitOk;
}

// ---------------------------------------------------------------------------
// envelope

struct EnvelopeFlags {
  std::string cls;
  std::string target;
  double alpha = 0.0;
  EnvelopeOptions options;
  std::string out = "-";
};

int cmd_envelope(const EnvelopeFlags& f) {
  if (f.cls == "all") throw usage_error("envelope needs a single --class");
  check_alphas({f.alpha});
  const ClassId cls = classes_from(f.cls).front();
  const Region region = region_with_alpha(region_from(f.target), f.alpha);
  if (f.options.eps_grid < 4) throw usage_error("--eps-grid must be >= 4");
  if (!(f.options.r_tol > 0.0) || !(f.options.r_step > 0.0)) {
    throw usage_error("--r-tol and --r-step must be positive");
  }

  const EnvelopeEstimate est = envelope_upper_bound(cls, region, f.options);
  json doc;
  doc["manifest_version"] = published::kManifestVersion;
  doc["class"] = to_string(cls);
  doc["region"] = to_string(region.kind);
  if (region.kind == RegionKind::StarlikeHalfPlane) doc["alpha"] = region.alpha;
  doc["proven_radius"] = est.proven_radius;
  doc["r_lower"] = est.r_lower;
  doc["r_upper"] = est.exited ? json(est.r_upper) : json(nullptr);
  doc["exited"] = est.exited;
  if (cls == ClassId::G2) {
    if (const auto c = published::g2_conjecture(region.kind)) doc["conjectured_radius"] = *c;
  }
  doc["options"] = {{"eps_grid", est.options.eps_grid},
                    {"r_step", est.options.r_step},
                    {"r_tol", est.options.r_tol},
                    {"r_max", est.options.r_max}};
  if (est.witness) {
    const EnvelopeWitness& w = *est.witness;
    doc["witness"] = {{"eps_angles", w.eps_angles},
                      {"z", report::complex_json(w.z)},
                      {"value", report::complex_json(w.value)},
                      {"residual", w.residual}};
  } else {
    doc["witness"] = nullptr;
  }
  emit(f.out, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radii of starlikeness for three non-univalent classes"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"json", "csv", "md"};
  const std::vector<std::string> suites{"sharpness", "containment", "shah", "oracle-xval", "all"};

  TableFlags tf;
  auto* table = app.add_subcommand("table", "Radius table for classes and target regions");
  table->add_option("--class", tf.cls, "g1, g2, g3 or all")->capture_default_str();
  table->add_option("--target", tf.target, "region name or all")->capture_default_str();
  table->add_option("--alpha", tf.alphas, "half-plane order (repeatable, default 0)");
  table->add_option("--format", tf.format)->check(CLI::IsMember(formats))->capture_default_str();
  table->add_option("--out", tf.out, "output path, - for stdout")->capture_default_str();
  table->add_flag("--compare-paper", tf.compare, "add published values and differences");

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", vf.suite)->check(CLI::IsMember(suites))->capture_default_str();
  verify->add_option("--samples", vf.samples, "boundary and ratio samples")->capture_default_str();
  verify->add_option("--tol", vf.tol, "sharpness tolerance")->capture_default_str();
  verify->add_option("--alpha", vf.alphas, "half-plane order (repeatable, default 0)");
  verify->add_option("--xval-points", vf.xval_points, "points per region for the oracle check")
      ->capture_default_str();
  verify->add_option("--out", vf.out)->capture_default_str();

  DumpFlags df;
  double dump_r = 0.0;
  auto* dump = app.add_subcommand("dump", "Plot data as CSV (t,re,im)");
  dump->add_option("--what", df.what)->required()->check(CLI::IsMember({"region", "trajectory"}));
  dump->add_option("--target", df.target, "region for --what region");
  dump->add_option("--class", df.cls, "class for --what trajectory");
  dump->add_option("--alpha", df.alpha, "half-plane order")->capture_default_str();
  auto* r_opt = dump->add_option("--r", dump_r, "circle radius for --what trajectory");
  dump->add_option("--points", df.points)->capture_default_str();
  dump->add_option("--out", df.out)->capture_default_str();

  EnvelopeFlags ef;
  auto* envelope = app.add_subcommand("envelope", "Upper estimate of the sharp radius");
  envelope->add_option("--class", ef.cls)->required();
  envelope->add_option("--target", ef.target)->required();
  envelope->add_option("--alpha", ef.alpha)->capture_default_str();
  envelope->add_option("--eps-grid", ef.options.eps_grid)->capture_default_str();
  envelope->add_option("--r-tol", ef.options.r_tol)->capture_default_str();
  envelope->add_option("--r-step", ef.options.r_step)->capture_default_str();
  envelope->add_option("--out", ef.out)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (table->parsed()) return cmd_table(tf);
    if (verify->parsed()) return cmd_verify(vf);
    if (dump->parsed()) {
      if (r_opt->count() > 0) df.r = dump_r;
      return cmd_dump(df);
    }
    if (envelope->parsed()) return cmd_envelope(ef);
  } catch (const usage_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const starrad::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const starrad::range_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFail;
  }
  return kExitUsage;
}
