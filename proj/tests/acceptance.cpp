// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Exit status is 0 only if every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "starrad/starrad.hpp"

using namespace starrad;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string pair_name(ClassId cls, const Region& region) {
  std::string s = std::string(to_string(cls)) + "/" + std::string(to_string(region.kind));
  if (region.kind == RegionKind::StarlikeHalfPlane) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "(%.2f)", region.alpha);
    s += buf;
  }
  return s;
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void fail(std::string note) {
    pass = false;
    notes.push_back(std::move(note));
  }
  void note(std::string text) { notes.push_back(std::move(text)); }
};

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<std::pair<ClassId, Region>> every_pair() {
  std::vector<std::pair<ClassId, Region>> out;
  for (ClassId cls : kAllClasses) {
    out.emplace_back(cls, Region::starlike(0.0));
    for (RegionKind kind : kNamedRegions) out.emplace_back(cls, Region::of(kind));
  }
  return out;
}

Outcome radius_table() {
  Outcome out;
  const auto t0 = Clock::now();
  int checked = 0;
  double worst = 0.0;
  for (const auto& [cls, region] : every_pair()) {
    const RadiusResult r = radius_for_region(cls, region);
    const auto pub = published::lookup(cls, region);
    if (!pub) {
      out.fail("no published value for " + pair_name(cls, region));
      continue;
    }
    ++checked;
    const double diff = std::abs(r.value - pub->value);
    worst = std::max(worst, diff);
    if (diff >= published::kCompareTolerance) {
      out.fail(fmt("%s: %.6f vs %.4f", pair_name(cls, region).c_str(), r.value, pub->value));
    }
    if (!pub->typo.empty()) {
      const double identity =
          region.kind == RegionKind::StarlikeHalfPlane
              ? std::abs(real_part_lower(cls, r.value) - region.alpha)
              : std::abs(bound_value(cls, r.value) - inner_disc_radius(region, 1.0));
      out.note(fmt("%s annotated (derived %.6f, identity residual %.1e)",
                   pair_name(cls, region).c_str(), r.value, identity));
      if (identity >= 1e-10) out.fail(pair_name(cls, region) + ": defining identity violated");
    }
  }
  // The two documented exceptions must carry annotations.
  if (published::lookup(ClassId::G2, Region::of(RegionKind::ReverseLemniscate))->typo.empty()) {
    out.fail("G2/reverse-lemniscate lacks its annotation");
  }
  const Region half = Region::starlike(0.5);
  const auto g2_alpha = published::lookup(ClassId::G2, half);
  if (g2_alpha->typo.empty()) out.fail("G2 order-alpha formula lacks its annotation");
  const double g2_ours = radius_starlike_alpha(ClassId::G2, 0.5).value;
  if (std::abs(real_part_lower(ClassId::G2, g2_ours) - 0.5) >= 1e-10) {
    out.fail("G2 order-alpha radius violates its defining identity");
  }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 1.0) out.fail(fmt("runtime %.3f s", elapsed));
  out.note(fmt("%d values, max |diff| %.2e, %.3f s", checked, worst, elapsed));
  return out;
}

Outcome closed_vs_bisection() {
  Outcome out;
  double worst = 0.0;
  for (const RadiusResult& r : full_table({0.0, 0.25, 0.5, 0.75})) {
    const double d = std::abs(r.value - r.bisection_value);
    worst = std::max(worst, d);
    if (d >= 1e-10) out.fail(fmt("%s: %.2e", pair_name(r.cls, r.region).c_str(), d));
  }
  out.note(fmt("max |closed - bisection| %.2e", worst));
  return out;
}

Outcome sharpness() {
  Outcome out;
  const auto claims = sharp_claims({0.0});
  double worst_pass = 0.0;
  for (const auto& [cls, region] : claims) {
    const SharpnessReport rep = sharpness_check(cls, region, 1e-8);
    if (rep.pass) {
      worst_pass = std::max(worst_pass, rep.boundary_distance);
    } else {
      out.fail(fmt("%s: residual %.3e at z = %+.6f (w = %.6f%+.6fi)",
                   pair_name(cls, region).c_str(), rep.boundary_distance, rep.touch_point.real(),
                   rep.value.real(), rep.value.imag()));
    }
  }
  out.note(fmt("%zu claims, max passing residual %.2e", claims.size(), worst_pass));
  return out;
}

Outcome containment() {
  Outcome out;
  int checked = 0;
  for (const auto& [cls, region] : every_pair()) {
    const double R = radius_for_region(cls, region).value;
    const auto inner = containment_check(cls, region, 0.99 * R, 1000);
    const auto outer = containment_check(cls, region, 1.05 * R, 1000);
    ++checked;
    if (!inner.all_inside) {
      out.fail(fmt("%s: %d samples outside at 0.99R", pair_name(cls, region).c_str(),
                   inner.outside));
    }
    if (!outer.witness) out.fail(pair_name(cls, region) + ": no witness at 1.05R");
  }
  out.note(fmt("%d pairs", checked));
  return out;
}

Outcome taylor() {
  Outcome out;
  const std::pair<ExtremalId, std::vector<double>> cases[] = {
      {ExtremalId::F1, {1, 6, 18, 38}},
      {ExtremalId::F2, {1, 5, 13, 25}},
      {ExtremalId::G1FN, {1, 4, 8, 12}},
  };
  double worst = 0.0;
  for (const auto& [id, want] : cases) {
    const auto got = taylor_coeffs(id, 4);
    for (std::size_t k = 0; k < want.size(); ++k) {
      const double res = std::abs(got[k] - want[k]);
      worst = std::max(worst, res);
      if (std::round(got[k]) != want[k] || res >= 1e-9) {
        out.fail(fmt("%s a_%zu = %.15g", std::string(to_string(id)).c_str(), k + 1, got[k]));
      }
    }
  }
  out.note(fmt("max pre-rounding residual %.2e", worst));
  return out;
}

Outcome critical_radii() {
  Outcome out;
  const std::pair<ClassId, double> cases[] = {
      {ClassId::G1, std::sqrt(10.0) - 3.0},
      {ClassId::G2, 0.2},
      {ClassId::G3, std::sqrt(5.0) - 2.0},
  };
  for (const auto& [cls, want] : cases) {
    const double rho = critical_radius(extremal_of(cls));
    const double star = radius_starlike_alpha(cls, 0.0).value;
    if (std::abs(rho - want) >= 1e-10) out.fail(fmt("%s: %.15f", std::string(to_string(cls)).c_str(), rho));
    if (std::abs(rho - star) >= 1e-10) {
      out.fail(fmt("%s: critical %.15f vs starlike %.15f", std::string(to_string(cls)).c_str(), rho,
                   star));
    }
    out.note(fmt("%s %.15f", std::string(to_string(cls)).c_str(), rho));
  }
  return out;
}

Outcome oracle_xval() {
  Outcome out;
  const auto t0 = Clock::now();
  int compared = 0, excluded = 0;
  for (RegionKind kind : cross_validated_regions()) {
    const CrossValidationReport rep = cross_validate_membership(kind, 10000);
    compared += rep.compared;
    excluded += rep.excluded;
    if (rep.disagreements > 0 || rep.unresolved > 0) {
      out.fail(fmt("%s: %d disagreements, %d unresolved", std::string(to_string(kind)).c_str(),
                   rep.disagreements, rep.unresolved));
    }
  }
  out.note(fmt("%zu regions, %d compared, %d in collar, %.1f s", cross_validated_regions().size(),
               compared, excluded, seconds_since(t0)));
  return out;
}

Outcome envelopes() {
  Outcome out;
  for (const auto& c : published::kG2Conjectures) {
    const Region region = Region::of(c.kind);
    const auto t0 = Clock::now();
    const EnvelopeEstimate est = envelope_upper_bound(ClassId::G2, region);
    const double elapsed = seconds_since(t0);
    const std::string name = pair_name(ClassId::G2, region);
    if (!est.exited) {
      out.fail(name + ": no exit found");
      continue;
    }
    out.note(fmt("%s: r_upper %.6f, conjectured %.4f, proven %.6f, %.1f s", name.c_str(),
                 est.r_upper, c.value, est.proven_radius, elapsed));
    if (std::abs(est.r_upper - c.value) >= 2e-3) out.fail(name + ": estimate off the conjecture");
    if (est.proven_radius > est.r_upper) out.fail(name + ": proven radius above the estimate");
    if (elapsed >= 60.0) out.fail(name + fmt(": runtime %.1f s", elapsed));
  }
  return out;
}

Outcome shah() {
  Outcome out;
  for (double a : {0.0, 0.5}) {
    const ShahReport rep = shah_bound_check(a, 10000);
    out.note(fmt("alpha %.1f: max excess %.2e, attainment gap %.2e", a, rep.max_excess,
                 rep.max_attainment_gap));
    if (rep.max_excess > 1e-10) out.fail(fmt("alpha %.1f: bound exceeded", a));
    if (rep.max_attainment_gap > 1e-8) out.fail(fmt("alpha %.1f: bound not attained", a));
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"radius table reproduction", radius_table},
      {"closed form vs bisection", closed_vs_bisection},
      {"sharpness at the extremals", sharpness},
      {"disc containment", containment},
      {"Taylor coefficients", taylor},
      {"critical radii", critical_radii},
      {"membership oracle cross-validation", oracle_xval},
      {"G2 envelope probing", envelopes},
      {"Shah bound", shah},
  };

  int failed = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("criterion %d: %s  %s\n", index, o.pass ? "PASS" : "FAIL", c.title);
    for (const std::string& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
