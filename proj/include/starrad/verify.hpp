#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "core.hpp"
#include "parallel.hpp"
#include "radii.hpp"
#include "regions.hpp"

namespace starrad {

// ---------------------------------------------------------------------------
// Sharpness: the class extremal touches the boundary at z = +R or z = -R.

struct SharpnessReport {
  ClassId cls = ClassId::G1;
  Region region;
  double radius = 0.0;
  Complex touch_point;      // +R or -R, whichever is nearer the boundary
  Complex value;            // zf'/f of the extremal at touch_point
  double boundary_distance = 0.0;
  double distance_plus = 0.0;   // |residual| at z = +R
  double distance_minus = 0.0;  // |residual| at z = -R
  double tolerance = 0.0;
  bool pass = false;
};

inline SharpnessReport sharpness_check(ClassId cls, const Region& region, double tol = 1e-8) {
  if (!is_sharp_claim(cls, region)) {
    throw claim_error("sharpness_check: (" + std::string(to_string(cls)) + ", " +
                      std::string(to_string(region.kind)) + ") carries no sharpness claim");
  }
  SharpnessReport out;
  out.cls = cls;
  out.region = region;
  out.tolerance = tol;
  out.radius = radius_for_region(cls, region).value;

  const ExtremalId f = extremal_of(cls);
  const Complex w_plus = logderiv(f, DiskPoint(out.radius));
  const Complex w_minus = logderiv(f, DiskPoint(-out.radius));
  out.distance_plus = boundary_distance(region, w_plus);
  out.distance_minus = boundary_distance(region, w_minus);
  if (out.distance_plus <= out.distance_minus) {
    out.touch_point = out.radius;
    out.value = w_plus;
    out.boundary_distance = out.distance_plus;
  } else {
    out.touch_point = -out.radius;
    out.value = w_minus;
    out.boundary_distance = out.distance_minus;
  }
  out.pass = out.boundary_distance < tol;
  return out;
}

/// (class, region) pairs carrying a sharpness claim; half-planes for each alpha.
inline std::vector<std::pair<ClassId, Region>> sharp_claims(const std::vector<double>& alphas) {
  std::vector<std::pair<ClassId, Region>> out;
  for (ClassId cls : kAllClasses) {
    for (double alpha : alphas) out.emplace_back(cls, Region::starlike(alpha));
    for (RegionKind kind : kNamedRegions) {
      const Region region = Region::of(kind);
      if (is_sharp_claim(cls, region)) out.emplace_back(cls, region);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Containment of the class disc in the region.

struct ContainmentResult {
  bool all_inside = true;
  int samples = 0;
  int outside = 0;
  std::optional<Complex> witness;  // first sample found outside

  explicit operator bool() const { return all_inside; }
};

inline constexpr int kMinContainmentSamples = 1000;

/// Samples n points of the boundary of the set that bounds zf'/f on |z| <= r
/// and tests each against the region.
///
/// For every pair this is the circle |w - 1| = b(r). For (G2, half-plane) the
/// radius comes from Re zf'/f >= (1-5r)/(1-r^2), so the circle is clipped by
/// that vertical line (arc plus chord).
inline ContainmentResult containment_check(ClassId cls, const Region& region, double r, int n) {
  if (n < kMinContainmentSamples) throw domain_error("containment_check: n must be >= 1000");
  if (!(r > 0.0 && r < 1.0)) throw domain_error("containment_check: r must lie in (0,1)");
  const double b = bound_value(cls, r);
  const bool clip = cls == ClassId::G2 && region.kind == RegionKind::StarlikeHalfPlane;
  const double floor_re = clip ? real_part_lower(cls, r) : -std::numeric_limits<double>::infinity();

  ContainmentResult out;
  out.samples = n;
  for (int j = 0; j < n; ++j) {
    Complex w = 1.0 + std::polar(b, 2.0 * std::numbers::pi * j / n);
    if (w.real() < floor_re) w.real(floor_re);
    if (!contains(region, w)) {
      ++out.outside;
      if (!out.witness) out.witness = w;
    }
  }
  out.all_inside = out.outside == 0;
  return out;
}

// ---------------------------------------------------------------------------
// Shah's bound |zp'/p| <= 2(1-a)r/((1-r)(1+(1-2a)r)) for p in P(a).

struct ShahReport {
  double alpha = 0.0;
  double max_excess = -std::numeric_limits<double>::infinity();  // max(ratio - bound)
  double max_attainment_gap = 0.0;  // max over r of (bound - max sampled ratio)
  long long evaluated = 0;
};

inline double shah_bound(double alpha, double r) {
  return 2.0 * (1.0 - alpha) * r / ((1.0 - r) * (1.0 + (1.0 - 2.0 * alpha) * r));
}

/// Kernel families that attain the bound: (1+eps z)/(1-eps z) in P for
/// alpha = 0 and 1/(1-eps z) in P(1/2) for alpha = 1/2, |eps| = 1.
/// Samples eps and z on an m x m angular grid (m a multiple of 4, m^2 >= samples)
/// for r = 0.05, 0.10, ..., 0.95.
inline ShahReport shah_bound_check(double alpha, int samples) {
  if (alpha != 0.0 && alpha != 0.5) throw domain_error("shah_bound_check: alpha must be 0 or 1/2");
  if (samples < 1000) throw domain_error("shah_bound_check: samples must be >= 1000");
  int m = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(samples))));
  m = std::max(64, (m + 3) / 4 * 4);

  ShahReport out;
  out.alpha = alpha;
  for (int ri = 1; ri <= 19; ++ri) {
    const double r = 0.05 * ri;
    const double bound = shah_bound(alpha, r);
    double best = 0.0;
    for (int i = 0; i < m; ++i) {
      const Complex eps = std::polar(1.0, 2.0 * std::numbers::pi * i / m);
      for (int j = 0; j < m; ++j) {
        const Complex u = eps * std::polar(r, 2.0 * std::numbers::pi * j / m);
        const double ratio =
            alpha == 0.0 ? std::abs(2.0 * u / (1.0 - u * u)) : std::abs(u / (1.0 - u));
        best = std::max(best, ratio);
        out.max_excess = std::max(out.max_excess, ratio - bound);
        ++out.evaluated;
      }
    }
    out.max_attainment_gap = std::max(out.max_attainment_gap, bound - best);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Kernel families of each class.
//
//   G1: f = z P(e1 z) P(e2 z) P(e3 z)
//   G2: f = z P(e1 z) H(e2 z) P(e3 z)
//   G3: f = z P(e1 z) P(e2 z)
// with P(u) = (1+u)/(1-u) and H(u) = 1/(1-u). Then
//   zf'/f = 1 + sum of kernel terms, P -> 2u/(1-u^2), H -> u/(1-u).
// All eps_i = 1 reproduces f1, f2, g1.

enum class Kernel { Caratheodory, HalfOrder };

inline std::vector<Kernel> family_kernels(ClassId cls) {
  switch (cls) {
    case ClassId::G1: return {Kernel::Caratheodory, Kernel::Caratheodory, Kernel::Caratheodory};
    case ClassId::G2: return {Kernel::Caratheodory, Kernel::HalfOrder, Kernel::Caratheodory};
    case ClassId::G3: return {Kernel::Caratheodory, Kernel::Caratheodory};
  }
  return {};
}

inline Complex kernel_term(Kernel k, Complex u) {
  return k == Kernel::Caratheodory ? 2.0 * u / (1.0 - u * u) : u / (1.0 - u);
}

/// zf'/f of the family member with rotations eps at z.
inline Complex family_logderiv(ClassId cls, const std::vector<Complex>& eps, Complex z) {
  const auto kernels = family_kernels(cls);
  if (eps.size() != kernels.size()) throw domain_error("family_logderiv: wrong number of rotations");
  Complex w{1.0, 0.0};
  for (std::size_t i = 0; i < kernels.size(); ++i) w += kernel_term(kernels[i], eps[i] * z);
  return w;
}

/// Largest observed |zf'/f - 1| - b(|z|) over random family members and
/// points |z| <= 0.95. Should never be positive beyond rounding.
inline double family_bound_excess(ClassId cls, int samples, std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> radius(0.0, 0.95);
  const std::size_t order = family_kernels(cls).size();
  double worst = -std::numeric_limits<double>::infinity();
  std::vector<Complex> eps(order);
  for (int s = 0; s < samples; ++s) {
    for (auto& e : eps) e = std::polar(1.0, angle(rng));
    const double r = radius(rng);
    const Complex z = std::polar(r, angle(rng));
    worst = std::max(worst, std::abs(family_logderiv(cls, eps, z) - 1.0) - bound_value(cls, r));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Envelope explorer.

struct EnvelopeOptions {
  int eps_grid = 64;     // rotations per kernel on the unit circle
  double r_step = 1e-3;  // coarse scan step
  double r_tol = 1e-10;  // bisection width between the last good and first bad r
  double r_max = 0.99;
};

struct EnvelopeWitness {
  std::vector<double> eps_angles;  // rotations, normalized so eps_1 = 1
  Complex z;
  Complex value;    // zf'/f of the witness member at z
  double residual = 0.0;
};

struct EnvelopeEstimate {
  ClassId cls = ClassId::G1;
  Region region;
  double r_upper = 0.0;  // smallest r at which a member was observed leaving the region
  double r_lower = 0.0;  // largest r at which all sampled members stayed inside
  double proven_radius = 0.0;
  bool exited = false;   // false if no member left the region up to r_max
  EnvelopeOptions options;
  std::optional<EnvelopeWitness> witness;
};

namespace detail {

/// First grid tuple (lexicographic) whose image at radius r leaves the
/// region, or nullopt. zf'/f depends on eps_i z only, so z is held at r and
/// the rotations sweep the grid; this covers every z on the same grid.
inline std::optional<std::vector<int>> first_exit(ClassId cls, const Region& region, double r,
                                                  int grid) {
  const auto kernels = family_kernels(cls);
  const std::size_t order = kernels.size();
  std::vector<std::vector<Complex>> terms(order, std::vector<Complex>(static_cast<std::size_t>(grid)));
  for (std::size_t k = 0; k < order; ++k) {
    for (int j = 0; j < grid; ++j) {
      terms[k][static_cast<std::size_t>(j)] =
          kernel_term(kernels[k], std::polar(r, 2.0 * std::numbers::pi * j / grid));
    }
  }

  // Each chunk of leading indices records its own first violation; the
  // overall first one is the minimum, independent of scheduling.
  std::vector<long long> chunk_first(static_cast<std::size_t>(grid), -1);
  long long tail = 1;
  for (std::size_t k = 1; k < order; ++k) tail *= grid;

  parallel_chunks(grid, [&](int begin, int end) {
    for (int lead = begin; lead < end; ++lead) {
      for (long long flat = 0; flat < tail; ++flat) {
        long long rest = flat;
        Complex w = 1.0 + terms[0][static_cast<std::size_t>(lead)];
        for (std::size_t k = order - 1; k >= 1; --k) {
          const auto j = static_cast<std::size_t>(rest % grid);
          rest /= grid;
          w += terms[k][j];
        }
        if (!contains(region, w)) {
          chunk_first[static_cast<std::size_t>(lead)] = static_cast<long long>(lead) * tail + flat;
          return;
        }
      }
    }
  });

  for (long long code : chunk_first) {
    if (code < 0) continue;
    std::vector<int> idx(order);
    for (std::size_t k = order; k-- > 0;) {
      idx[k] = static_cast<int>(code % grid);
      code /= grid;
    }
    return idx;
  }
  return std::nullopt;
}

}  // namespace detail

/// Upper estimate for the sharp radius from the kernel family of the class:
/// scan r upward in steps of r_step until some sampled member's zf'/f on
/// |z| = r leaves the region, then bisect between the last clean and the
/// first violating r down to r_tol.
inline EnvelopeEstimate envelope_upper_bound(ClassId cls, const Region& region,
                                             EnvelopeOptions options = {}) {
  if (options.eps_grid < 4) throw domain_error("envelope_upper_bound: eps_grid must be >= 4");
  if (!(options.r_step > 0.0) || !(options.r_tol > 0.0)) {
    throw domain_error("envelope_upper_bound: r_step and r_tol must be positive");
  }
  EnvelopeEstimate out;
  out.cls = cls;
  out.region = region;
  out.options = options;
  out.proven_radius = radius_for_region(cls, region).value;

  const int grid = options.eps_grid;
  auto stays_inside = [&](double r) { return !detail::first_exit(cls, region, r, grid); };

  double good = 0.0;
  double bad = -1.0;
  for (int step = 1;; ++step) {
    const double r = step * options.r_step;
    if (r > options.r_max) break;
    if (stays_inside(r)) {
      good = r;
    } else {
      bad = r;
      break;
    }
  }
  if (bad < 0.0) {
    out.r_lower = good;
    out.r_upper = options.r_max;
    return out;
  }
  const auto [lo, hi] = bisect_predicate(stays_inside, good, bad, options.r_tol);
  out.exited = true;
  out.r_lower = lo;
  out.r_upper = hi;

  const auto idx = *detail::first_exit(cls, region, hi, grid);
  EnvelopeWitness wit;
  const double unit = 2.0 * std::numbers::pi / grid;
  std::vector<Complex> eps;
  for (int i : idx) {
    const int rel = ((i - idx[0]) % grid + grid) % grid;
    wit.eps_angles.push_back(rel * unit);
    eps.push_back(std::polar(1.0, rel * unit));
  }
  wit.z = std::polar(hi, idx[0] * unit);
  wit.value = family_logderiv(cls, eps, wit.z);
  wit.residual = boundary_residual(region, wit.value);
  out.witness = wit;
  return out;
}

// ---------------------------------------------------------------------------
// Cross-validation of the closed-form membership against winding numbers.

struct CrossValidationReport {
  RegionKind kind = RegionKind::Lemniscate;
  int points = 0;
  int compared = 0;
  int excluded = 0;       // inside the boundary collar
  int escalated = 0;      // needed more than the initial node count
  int unresolved = 0;     // still near-boundary at the node cap
  int disagreements = 0;
  int max_nodes = 0;
  std::optional<Complex> first_disagreement;

  bool pass() const { return disagreements == 0 && unresolved == 0; }
};

inline constexpr int kXvalStartNodes = 4096;
inline constexpr int kXvalMaxNodes = 1 << 22;

/// Winding membership with the node count multiplied by 4 on each
/// near-boundary failure. Returns nullopt if the cap is reached.
inline std::optional<int> winding_membership_adaptive(Generator g, Complex w, int& nodes_used,
                                                      int start = kXvalStartNodes,
                                                      int cap = kXvalMaxNodes) {
  for (int nodes = start; nodes <= cap; nodes *= 4) {
    nodes_used = nodes;
    try {
      return winding_membership(g, w, nodes);
    } catch (const near_boundary_error&) {
    }
  }
  return std::nullopt;
}

/// Compares contains() with winding_membership() on uniform points of
/// [-0.5, 2.5] x [-1.5, 1.5], skipping points whose boundary residual is
/// below `collar` in magnitude.
inline CrossValidationReport cross_validate_membership(RegionKind kind, int points,
                                                       std::uint64_t seed = 2024,
                                                       double collar = 1e-6) {
  const auto gen = generator_of(kind);
  if (!gen) throw domain_error("cross_validate_membership: region has no generator");
  const Region region = Region::of(kind);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> xs(-0.5, 2.5);
  std::uniform_real_distribution<double> ys(-1.5, 1.5);
  std::vector<Complex> sample(static_cast<std::size_t>(points));
  for (auto& w : sample) {
    const double x = xs(rng);
    w = Complex(x, ys(rng));
  }

  struct Outcome {
    bool excluded = false, escalated = false, unresolved = false, disagree = false;
    int nodes = 0;
  };
  std::vector<Outcome> outcome(sample.size());
  parallel_chunks(points, [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      const Complex w = sample[static_cast<std::size_t>(i)];
      Outcome& o = outcome[static_cast<std::size_t>(i)];
      const double residual = boundary_residual(region, w);
      if (std::isfinite(residual) && std::abs(residual) < collar) {
        o.excluded = true;
        continue;
      }
      int nodes = 0;
      const auto winding = winding_membership_adaptive(*gen, w, nodes);
      o.nodes = nodes;
      o.escalated = nodes > kXvalStartNodes;
      if (!winding) {
        o.unresolved = true;
        continue;
      }
      o.disagree = (*winding >= 1) != contains(region, w);
    }
  });

  CrossValidationReport out;
  out.kind = kind;
  out.points = points;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const Outcome& o = outcome[i];
    out.max_nodes = std::max(out.max_nodes, o.nodes);
    if (o.excluded) {
      ++out.excluded;
      continue;
    }
    out.escalated += o.escalated;
    if (o.unresolved) {
      ++out.unresolved;
      continue;
    }
    ++out.compared;
    if (o.disagree) {
      ++out.disagreements;
      if (!out.first_disagreement) out.first_disagreement = sample[i];
    }
  }
  return out;
}

/// Regions with a generator usable by the winding oracle.
inline std::vector<RegionKind> cross_validated_regions() {
  std::vector<RegionKind> out;
  for (RegionKind kind : kNamedRegions) {
    if (generator_of(kind)) out.push_back(kind);
  }
  return out;
}

}  // namespace starrad
