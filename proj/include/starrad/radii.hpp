#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bisection.hpp"
#include "errors.hpp"
#include "regions.hpp"

namespace starrad {

/// The three function classes:
///   G1: f/g in P and g/(zp) in P
///   G2: f/g in P and g/(zp) in P(1/2)
///   G3: f/(zp) in P
enum class ClassId { G1, G2, G3 };

inline constexpr ClassId kAllClasses[] = {ClassId::G1, ClassId::G2, ClassId::G3};

inline std::string_view to_string(ClassId cls) {
  switch (cls) {
    case ClassId::G1: return "g1";
    case ClassId::G2: return "g2";
    case ClassId::G3: return "g3";
  }
  return "?";
}

inline std::optional<ClassId> parse_class(std::string_view name) {
  for (ClassId cls : kAllClasses) {
    if (name == to_string(cls)) return cls;
  }
  return std::nullopt;
}

/// The extremal whose zf'/f realizes the class bound.
inline ExtremalId extremal_of(ClassId cls) {
  switch (cls) {
    case ClassId::G1: return ExtremalId::F1;
    case ClassId::G2: return ExtremalId::F2;
    case ClassId::G3: return ExtremalId::G1FN;
  }
  return ExtremalId::F1;
}

enum class BoundKind { Modulus, RealPartLower };

namespace detail {
inline void require_unit_interval(double r, const char* who) {
  if (!(r >= 0.0 && r < 1.0)) throw domain_error(std::string(who) + ": r must lie in [0,1)");
}
}  // namespace detail

/// Radius b(r) of the disc |w - 1| <= b(r) holding zf'/f on |z| <= r:
///   G1: 6r/(1-r^2),  G2: r(r+5)/(1-r^2),  G3: 4r/(1-r^2).
inline double bound_value(ClassId cls, double r) {
  detail::require_unit_interval(r, "bound_value");
  const double den = 1.0 - r * r;
  switch (cls) {
    case ClassId::G1: return 6.0 * r / den;
    case ClassId::G2: return r * (r + 5.0) / den;
    case ClassId::G3: return 4.0 * r / den;
  }
  return 0.0;
}

/// Lower bound of Re zf'/f on |z| <= r. For G1 and G3 this is 1 - b(r);
/// for G2 the sharper (1-5r)/(1-r^2).
inline double real_part_lower(ClassId cls, double r) {
  detail::require_unit_interval(r, "real_part_lower");
  const double den = 1.0 - r * r;
  switch (cls) {
    case ClassId::G1: return (1.0 - 6.0 * r - r * r) / den;
    case ClassId::G2: return (1.0 - 5.0 * r) / den;
    case ClassId::G3: return (1.0 - 4.0 * r - r * r) / den;
  }
  return 0.0;
}

struct ClassBound {
  ClassId cls = ClassId::G1;
  BoundKind kind = BoundKind::Modulus;

  double operator()(double r) const {
    return kind == BoundKind::Modulus ? bound_value(cls, r) : real_part_lower(cls, r);
  }
};

enum class SolveMethod { ClosedForm, Bisection };

inline std::string_view to_string(SolveMethod m) {
  return m == SolveMethod::ClosedForm ? "closed-form" : "bisection";
}

struct RadiusResult {
  ClassId cls = ClassId::G1;
  Region region;
  double value = 0.0;
  double bisection_value = 0.0;  // independent route, agrees with value to ~1e-12
  bool sharp = false;
  SolveMethod method = SolveMethod::ClosedForm;
  BoundKind bound = BoundKind::Modulus;
  double target = 0.0;  // right-hand side of the defining equation
  std::string equation;
};

/// Pairs carrying a sharpness claim. G1 and G3 results are all sharp; G2 only
/// for the half-plane, lemniscate, sine, reverse lemniscate, nephroid and
/// sigmoid. The remaining G2 radii are lower bounds.
inline bool is_sharp_claim(ClassId cls, const Region& region) {
  if (cls != ClassId::G2) return true;
  switch (region.kind) {
    case RegionKind::StarlikeHalfPlane:
    case RegionKind::Lemniscate:
    case RegionKind::Sine:
    case RegionKind::ReverseLemniscate:
    case RegionKind::Nephroid:
    case RegionKind::Sigmoid: return true;
    default: return false;
  }
}

inline constexpr double kRadiusBisectionTol = 1e-12;
inline constexpr int kRadiusBisectionMaxIter = 200;
inline constexpr double kRadiusBracketHi = 0.99;

namespace detail {

inline std::string_view target_label(RegionKind kind) {
  switch (kind) {
    case RegionKind::Lemniscate: return "sqrt2-1";
    case RegionKind::Parabolic: return "1/2";
    case RegionKind::Exponential: return "1-1/e";
    case RegionKind::Cardioid: return "2/3";
    case RegionKind::Sine: return "sin1";
    case RegionKind::Lune: return "2-sqrt2";
    case RegionKind::Rational: return "3-2sqrt2";
    case RegionKind::ReverseLemniscate: return "sqrt(eta)";
    case RegionKind::Nephroid: return "2/3";
    case RegionKind::Sigmoid: return "(e-1)/(e+1)";
    case RegionKind::StarlikeHalfPlane: return "1-alpha";
  }
  return "?";
}

inline std::string_view bound_text(ClassId cls) {
  switch (cls) {
    case ClassId::G1: return "6r/(1-r^2)";
    case ClassId::G2: return "r(r+5)/(1-r^2)";
    case ClassId::G3: return "4r/(1-r^2)";
  }
  return "?";
}

inline std::string_view lower_text(ClassId cls) {
  switch (cls) {
    case ClassId::G1: return "(1-6r-r^2)/(1-r^2)";
    case ClassId::G2: return "(1-5r)/(1-r^2)";
    case ClassId::G3: return "(1-4r-r^2)/(1-r^2)";
  }
  return "?";
}

/// Root in (0,1) of b(r) = c.
inline double solve_modulus_closed_form(ClassId cls, double c) {
  switch (cls) {
    case ClassId::G1: return 2.0 * c / (6.0 + std::sqrt(36.0 + 4.0 * c * c));
    case ClassId::G2: return 2.0 * c / (5.0 + std::sqrt(25.0 + 4.0 * c + 4.0 * c * c));
    case ClassId::G3: return 2.0 * c / (4.0 + std::sqrt(16.0 + 4.0 * c * c));
  }
  return 0.0;
}

}  // namespace detail

/// Radius of starlikeness of order alpha: the root of
/// real_part_lower(cls, r) = alpha.
///   G1: (1-a)/(3 + sqrt(10 - 2a + a^2))
///   G2: 2(1-a)/(5 + sqrt(25 - 4a + 4a^2))
///   G3: (1-a)/(2 + sqrt(5 - 2a + a^2))
inline RadiusResult radius_starlike_alpha(ClassId cls, double alpha) {
  const Region region = Region::starlike(alpha);
  RadiusResult out;
  out.cls = cls;
  out.region = region;
  out.sharp = true;
  out.method = SolveMethod::ClosedForm;
  out.bound = cls == ClassId::G2 ? BoundKind::RealPartLower : BoundKind::Modulus;
  out.target = alpha;
  const double a = alpha;
  switch (cls) {
    case ClassId::G1: out.value = (1.0 - a) / (3.0 + std::sqrt(10.0 - 2.0 * a + a * a)); break;
    case ClassId::G2:
      out.value = 2.0 * (1.0 - a) / (5.0 + std::sqrt(25.0 - 4.0 * a + 4.0 * a * a));
      break;
    case ClassId::G3: out.value = (1.0 - a) / (2.0 + std::sqrt(5.0 - 2.0 * a + a * a)); break;
  }
  out.bisection_value =
      bisect([&](double r) { return real_part_lower(cls, r) - alpha; }, 0.0, kRadiusBracketHi,
             kRadiusBisectionTol, kRadiusBisectionMaxIter)
          .root;
  std::ostringstream eq;
  eq.precision(17);
  eq << detail::lower_text(cls) << " = " << alpha;
  out.equation = eq.str();
  return out;
}

/// Radius for which the class disc |w-1| <= b(r) fits the region's inner
/// disc about 1. Half-plane regions go through radius_starlike_alpha.
inline RadiusResult radius_for_region(ClassId cls, const Region& region) {
  if (region.kind == RegionKind::StarlikeHalfPlane) return radius_starlike_alpha(cls, region.alpha);
  RadiusResult out;
  out.cls = cls;
  out.region = region;
  out.sharp = is_sharp_claim(cls, region);
  out.method = SolveMethod::ClosedForm;
  out.bound = BoundKind::Modulus;
  out.target = inner_disc_radius(region, 1.0);
  out.value = detail::solve_modulus_closed_form(cls, out.target);
  out.bisection_value =
      bisect([&](double r) { return bound_value(cls, r) - out.target; }, 0.0, kRadiusBracketHi,
             kRadiusBisectionTol, kRadiusBisectionMaxIter)
          .root;
  out.equation = std::string(detail::bound_text(cls)) + " = " +
                 std::string(detail::target_label(region.kind));
  return out;
}

/// Every class against each half-plane order in `alphas` and the ten named
/// regions, ordered by class, then half-planes (input order), then region.
inline std::vector<RadiusResult> full_table(const std::vector<double>& alphas) {
  std::vector<RadiusResult> out;
  out.reserve(3 * (alphas.size() + kNamedRegions.size()));
  for (ClassId cls : kAllClasses) {
    for (double alpha : alphas) out.push_back(radius_starlike_alpha(cls, alpha));
    for (RegionKind kind : kNamedRegions) out.push_back(radius_for_region(cls, Region::of(kind)));
  }
  return out;
}

}  // namespace starrad
