#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"
#include "errors.hpp"

namespace starrad {

/// The target domains Omega = phi(D), each containing w = 1.
enum class RegionKind {
  StarlikeHalfPlane,  // Re w > alpha
  Lemniscate,         // |w^2 - 1| < 1, right lobe
  Parabolic,          // Re w > |w - 1|
  Exponential,        // |log w| < 1
  Cardioid,           // quartic (9|w|^2 - 18u + 5)^2 < 16(9|w|^2 - 6u + 1)
  Sine,               // image of 1 + sin z
  Lune,               // |w^2 - 1| < 2|w|, right lune
  Rational,           // image of 1 + (kz + z^2)/(k^2 - kz), k = sqrt2 + 1
  ReverseLemniscate,  // |(w - sqrt2)^2 - 1| < 1, left lobe
  Nephroid,           // ((u-1)^2 + v^2 - 4/9)^3 - 4v^2/3 < 0
  Sigmoid,            // |log(w/(2 - w))| < 1
};

/// The ten parameter-free kinds, in table order.
inline constexpr std::array<RegionKind, 10> kNamedRegions = {
    RegionKind::Lemniscate, RegionKind::Parabolic,         RegionKind::Exponential,
    RegionKind::Cardioid,   RegionKind::Sine,              RegionKind::Lune,
    RegionKind::Rational,   RegionKind::ReverseLemniscate, RegionKind::Nephroid,
    RegionKind::Sigmoid};

namespace constants {
inline constexpr double sqrt2 = std::numbers::sqrt2;
inline constexpr double e = std::numbers::e;
/// k in the rational target function.
inline constexpr double rational_k = sqrt2 + 1.0;
/// sqrt(2(sqrt2-1)) - 2(sqrt2-1), the squared inner-disc radius of the
/// reverse lemniscate at a = 1.
inline const double reverse_lemniscate_eta =
    std::sqrt(2.0 * (sqrt2 - 1.0)) - 2.0 * (sqrt2 - 1.0);
}  // namespace constants

struct Region {
  RegionKind kind = RegionKind::Lemniscate;
  double alpha = 0.0;  // only meaningful for StarlikeHalfPlane

  static Region starlike(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw domain_error("starlike: alpha must lie in [0,1)");
    return {RegionKind::StarlikeHalfPlane, alpha};
  }
  static Region of(RegionKind kind) {
    if (kind == RegionKind::StarlikeHalfPlane) return starlike(0.0);
    return {kind, 0.0};
  }

  friend bool operator==(const Region&, const Region&) = default;
};

inline std::string_view to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::StarlikeHalfPlane: return "starlike";
    case RegionKind::Lemniscate: return "lemniscate";
    case RegionKind::Parabolic: return "parabolic";
    case RegionKind::Exponential: return "exponential";
    case RegionKind::Cardioid: return "cardioid";
    case RegionKind::Sine: return "sine";
    case RegionKind::Lune: return "lune";
    case RegionKind::Rational: return "rational";
    case RegionKind::ReverseLemniscate: return "reverse-lemniscate";
    case RegionKind::Nephroid: return "nephroid";
    case RegionKind::Sigmoid: return "sigmoid";
  }
  return "?";
}

inline std::optional<RegionKind> parse_region_kind(std::string_view name) {
  if (name == "starlike") return RegionKind::StarlikeHalfPlane;
  for (RegionKind kind : kNamedRegions) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Generators phi with phi(0) = 1 and phi(D) = Omega.

enum class Generator {
  Cardioid,           // 1 + 4z/3 + 2z^2/3
  Sine,               // 1 + sin z
  Rational,           // 1 + (kz + z^2)/(k^2 - kz)
  Lemniscate,         // sqrt(1 + z)
  Lune,               // z + sqrt(1 + z^2)
  Nephroid,           // 1 + z - z^3/3
  Sigmoid,            // 2/(1 + e^{-z})
  Exponential,        // e^z
  ReverseLemniscate,  // sqrt2 - (sqrt2-1) sqrt((1-z)/(1 + 2(sqrt2-1)z))
};

inline std::optional<Generator> generator_of(RegionKind kind) {
  switch (kind) {
    case RegionKind::Cardioid: return Generator::Cardioid;
    case RegionKind::Sine: return Generator::Sine;
    case RegionKind::Rational: return Generator::Rational;
    case RegionKind::Lemniscate: return Generator::Lemniscate;
    case RegionKind::Lune: return Generator::Lune;
    case RegionKind::Nephroid: return Generator::Nephroid;
    case RegionKind::Sigmoid: return Generator::Sigmoid;
    case RegionKind::Exponential: return Generator::Exponential;
    case RegionKind::ReverseLemniscate: return Generator::ReverseLemniscate;
    case RegionKind::StarlikeHalfPlane:
    case RegionKind::Parabolic: return std::nullopt;
  }
  return std::nullopt;
}

inline Complex generator_value(Generator g, Complex z) {
  using namespace constants;
  switch (g) {
    case Generator::Cardioid: return 1.0 + 4.0 * z / 3.0 + 2.0 * z * z / 3.0;
    case Generator::Sine: return 1.0 + std::sin(z);
    case Generator::Rational: {
      const double k = rational_k;
      return 1.0 + (k * z + z * z) / (k * k - k * z);
    }
    case Generator::Lemniscate: return std::sqrt(1.0 + z);
    case Generator::Lune: return z + std::sqrt(1.0 + z * z);
    case Generator::Nephroid: return 1.0 + z - z * z * z / 3.0;
    case Generator::Sigmoid: return 2.0 / (1.0 + std::exp(-z));
    case Generator::Exponential: return std::exp(z);
    case Generator::ReverseLemniscate: {
      const double c = 2.0 * (sqrt2 - 1.0);
      return sqrt2 - (sqrt2 - 1.0) * std::sqrt((1.0 - z) / (1.0 + c * z));
    }
  }
  return {};
}

inline Complex generator_deriv(Generator g, Complex z) {
  using namespace constants;
  switch (g) {
    case Generator::Cardioid: return 4.0 / 3.0 + 4.0 * z / 3.0;
    case Generator::Sine: return std::cos(z);
    case Generator::Rational: {
      const double k = rational_k;
      const Complex den = k * k - k * z;
      return ((k + 2.0 * z) * den + k * (k * z + z * z)) / (den * den);
    }
    case Generator::Lemniscate: return 0.5 / std::sqrt(1.0 + z);
    case Generator::Lune: return 1.0 + z / std::sqrt(1.0 + z * z);
    case Generator::Nephroid: return 1.0 - z * z;
    case Generator::Sigmoid: {
      const Complex ez = std::exp(-z);
      return 2.0 * ez / ((1.0 + ez) * (1.0 + ez));
    }
    case Generator::Exponential: return std::exp(z);
    case Generator::ReverseLemniscate: {
      const double c = 2.0 * (sqrt2 - 1.0);
      const Complex q = (1.0 - z) / (1.0 + c * z);
      const Complex dq = -(1.0 + c) / ((1.0 + c * z) * (1.0 + c * z));
      return -(sqrt2 - 1.0) * dq / (2.0 * std::sqrt(q));
    }
  }
  return {};
}

/// Contour radius of the winding integral; stays off the unit circle where
/// several generators have branch points.
inline constexpr double kWindingContourRadius = 1.0 - 1e-6;
inline constexpr int kMinWindingNodes = 2048;

/// Number of preimages of w under phi inside |z| < 1 - 1e-6:
///
///   N(w) = (1/2 pi i) \oint phi'(z) / (phi(z) - w) dz
///
/// evaluated with the trapezoid rule on `nodes` half-offset nodes and rounded.
/// N >= 1 means w is attained. Throws near_boundary_error if the raw value
/// is more than 0.25 away from the nearest integer.
inline int winding_membership(Generator g, Complex w, int nodes = 4096) {
  if (nodes < kMinWindingNodes) throw domain_error("winding_membership: nodes must be >= 2048");
  if (!is_finite(w)) throw domain_error("winding_membership: non-finite w");
  Complex sum{0.0, 0.0};
  const double step = 2.0 * std::numbers::pi / nodes;
  for (int j = 0; j < nodes; ++j) {
    const Complex z = std::polar(kWindingContourRadius, (j + 0.5) * step);
    sum += generator_deriv(g, z) * z / (generator_value(g, z) - w);
  }
  const Complex raw = sum / static_cast<double>(nodes);
  const double rounded = std::round(raw.real());
  if (!is_finite(raw) || std::abs(raw - rounded) > 0.25) {
    throw near_boundary_error("winding_membership: raw winding " + std::to_string(raw.real()) +
                              (raw.imag() < 0 ? "" : "+") + std::to_string(raw.imag()) + "i");
  }
  return static_cast<int>(rounded);
}

// ---------------------------------------------------------------------------
// Membership.

namespace detail {

/// |phi^{-1}(w)| for the generators without a printed inequality.
/// phi is univalent on D, so w is inside iff this modulus is < 1.
inline double preimage_modulus(RegionKind kind, Complex w) {
  switch (kind) {
    case RegionKind::Sine:
      // D sits inside the strip |Re z| < pi/2 where sin is injective.
      return std::abs(std::asin(w - 1.0));
    case RegionKind::Rational: {
      // (w - 1)(k^2 - kz) = kz + z^2  <=>  z^2 + kwz - (w - 1)k^2 = 0
      const double k = constants::rational_k;
      const Complex b = k * w;
      const Complex c = -(w - 1.0) * k * k;
      Complex d = std::sqrt(b * b - 4.0 * c);
      if ((std::conj(b) * d).real() < 0.0) d = -d;
      const Complex q = -0.5 * (b + d);
      if (q == Complex(0.0, 0.0)) return 0.0;
      return std::min(std::abs(q), std::abs(c / q));
    }
    default: break;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

/// Lobe selectors for the inequalities whose zero sets have two components.
inline bool in_selected_lobe(RegionKind kind, Complex w) {
  switch (kind) {
    case RegionKind::Lemniscate:
    case RegionKind::Lune:
    case RegionKind::Exponential: return w.real() > 0.0;
    case RegionKind::ReverseLemniscate: return w.real() < constants::sqrt2;
    case RegionKind::Sigmoid: {
      if (w == Complex(2.0, 0.0)) return false;
      return (w / (2.0 - w)).real() > 0.0;
    }
    default: return true;
  }
}

}  // namespace detail

/// Defining functional of the region: zero exactly on the boundary curve,
/// negative inside. For the two-lobe kinds the sign is only meaningful on the
/// selected lobe; use contains() for membership.
inline double boundary_residual(const Region& region, Complex w) {
  using namespace constants;
  switch (region.kind) {
    case RegionKind::StarlikeHalfPlane: return region.alpha - w.real();
    case RegionKind::Lemniscate: return std::abs(w * w - 1.0) - 1.0;
    case RegionKind::Parabolic: return std::abs(w - 1.0) - w.real();
    case RegionKind::Exponential: return std::abs(std::log(w)) - 1.0;
    case RegionKind::Cardioid: {
      // (9u^2 + 9v^2 - 18u + 5)^2 - 16(9u^2 + 9v^2 - 6u + 1)
      const double u = w.real();
      const double m = 9.0 * std::norm(w);
      const double a = m - 18.0 * u + 5.0;
      return a * a - 16.0 * (m - 6.0 * u + 1.0);
    }
    case RegionKind::Sine:
    case RegionKind::Rational: return detail::preimage_modulus(region.kind, w) - 1.0;
    case RegionKind::Lune: return std::abs(w * w - 1.0) - 2.0 * std::abs(w);
    case RegionKind::ReverseLemniscate: {
      const Complex s = w - sqrt2;
      return std::abs(s * s - 1.0) - 1.0;
    }
    case RegionKind::Nephroid: {
      const double u = w.real() - 1.0;
      const double v = w.imag();
      const double q = u * u + v * v - 4.0 / 9.0;
      return q * q * q - 4.0 * v * v / 3.0;
    }
    case RegionKind::Sigmoid: return std::abs(std::log(w / (2.0 - w))) - 1.0;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

/// Unsigned distance-like functional, zero exactly on the boundary. Equal to
/// |boundary_residual| except for the rational domain, whose preimage
/// residual loses half the digits at the cusp psi(-1) = 2(sqrt2-1); there the
/// distance from w to psi(z/|z|), z = psi^{-1}(w), is used.
inline double boundary_distance(const Region& region, Complex w) {
  if (region.kind == RegionKind::Rational) {
    const double k = constants::rational_k;
    const Complex b = k * w;
    const Complex c = -(w - 1.0) * k * k;
    Complex d = std::sqrt(b * b - 4.0 * c);
    if ((std::conj(b) * d).real() < 0.0) d = -d;
    const Complex q = -0.5 * (b + d);
    const Complex z = std::abs(q) < std::abs(c / q) ? q : c / q;
    if (std::abs(z) == 0.0) return std::abs(boundary_residual(region, w));
    return std::abs(w - generator_value(Generator::Rational, z / std::abs(z)));
  }
  return std::abs(boundary_residual(region, w));
}

/// Tolerance below which a residual counts as "on the boundary".
inline constexpr double kBoundaryTolerance = 1e-12;

/// Strict-interior membership. Boundary points (|residual| <= 1e-12) are outside.
/// Points with Re w <= 0 are outside the exponential and sigmoid domains.
inline bool contains(const Region& region, Complex w) {
  if (!is_finite(w)) return false;
  if (!detail::in_selected_lobe(region.kind, w)) return false;
  const double residual = boundary_residual(region, w);
  return residual < -kBoundaryTolerance;
}

// ---------------------------------------------------------------------------
// Inner discs {|w - a| < radius} contained in the region.

inline double inner_disc_radius(const Region& region, double a) {
  using namespace constants;
  auto require = [&](bool ok, const char* range) {
    if (!ok) {
      throw range_error("inner_disc_radius(" + std::string(to_string(region.kind)) +
                        "): a = " + std::to_string(a) + " outside " + range);
    }
  };
  switch (region.kind) {
    case RegionKind::StarlikeHalfPlane:
      require(a > region.alpha, "(alpha, inf)");
      return a - region.alpha;
    case RegionKind::Lemniscate:
      require(a > 2.0 * sqrt2 / 3.0 && a < sqrt2, "(2sqrt2/3, sqrt2)");
      return sqrt2 - a;
    case RegionKind::Parabolic:
      require(a > 0.5 && a < 1.5, "(1/2, 3/2)");
      return a - 0.5;
    case RegionKind::Exponential:
      require(a >= 1.0 / e && a <= (e + 1.0 / e) / 2.0, "[1/e, (e+1/e)/2]");
      return a - 1.0 / e;
    case RegionKind::Cardioid:
      require(a > 1.0 / 3.0 && a <= 5.0 / 3.0, "(1/3, 5/3]");
      return (3.0 * a - 1.0) / 3.0;
    case RegionKind::Sine:
      require(std::abs(a - 1.0) <= std::sin(1.0), "|a-1| <= sin 1");
      return std::sin(1.0) - std::abs(a - 1.0);
    case RegionKind::Lune:
      require(a > sqrt2 - 1.0 && a <= sqrt2 + 1.0, "(sqrt2-1, sqrt2+1]");
      return 1.0 - std::abs(sqrt2 - a);
    case RegionKind::Rational:
      require(a > 2.0 * (sqrt2 - 1.0) && a <= sqrt2, "(2(sqrt2-1), sqrt2]");
      return a - 2.0 * (sqrt2 - 1.0);
    case RegionKind::ReverseLemniscate: {
      require(a >= sqrt2 / 3.0 && a < sqrt2, "[sqrt2/3, sqrt2)");
      const double t = 1.0 - (sqrt2 - a) * (sqrt2 - a);
      return std::sqrt(std::sqrt(t) - t);
    }
    case RegionKind::Nephroid:
      require(a > 1.0 / 3.0 && a <= 1.0, "(1/3, 1]");
      return a - 1.0 / 3.0;
    case RegionKind::Sigmoid:
      require(a > 2.0 / (1.0 + e) && a < 2.0 * e / (1.0 + e), "(2/(1+e), 2e/(1+e))");
      return (e - 1.0) / (e + 1.0) - std::abs(a - 1.0);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

// ---------------------------------------------------------------------------
// Boundary tracing.

struct BoundaryPolyline {
  std::vector<double> t;   // monotone parameter
  std::vector<Complex> w;  // samples of the boundary
  bool closed = true;
};

/// Half-width of the imaginary range sampled for the unbounded regions.
inline constexpr double kUnboundedSpan = 2.0;

/// n samples of the boundary curve. Bounded regions are traced as
/// phi(e^{it}) (or an equivalent closed-form parametrization) with
/// t_j = 2 pi j/(n-1), so the first and last samples coincide. The half-plane
/// and parabola are sampled over Im w in [-2, 2].
inline BoundaryPolyline boundary_points(const Region& region, int n) {
  if (n < 16) throw domain_error("boundary_points: n must be >= 16");
  using namespace constants;
  BoundaryPolyline out;
  out.t.reserve(static_cast<std::size_t>(n));
  out.w.reserve(static_cast<std::size_t>(n));

  if (region.kind == RegionKind::StarlikeHalfPlane || region.kind == RegionKind::Parabolic) {
    out.closed = false;
    for (int j = 0; j < n; ++j) {
      const double v = -kUnboundedSpan + 2.0 * kUnboundedSpan * j / (n - 1);
      const double u = region.kind == RegionKind::Parabolic ? 0.5 * (1.0 + v * v) : region.alpha;
      out.t.push_back(v);
      out.w.emplace_back(u, v);
    }
    return out;
  }

  for (int j = 0; j < n; ++j) {
    const double t = j == n - 1 ? 2.0 * std::numbers::pi : 2.0 * std::numbers::pi * j / (n - 1);
    const Complex unit = std::polar(1.0, t);
    Complex w;
    switch (region.kind) {
      case RegionKind::Lemniscate: w = std::sqrt(1.0 + unit); break;
      case RegionKind::ReverseLemniscate: w = sqrt2 - std::sqrt(1.0 + unit); break;
      default: w = generator_value(*generator_of(region.kind), unit); break;
    }
    out.t.push_back(t);
    out.w.push_back(w);
  }
  return out;
}

}  // namespace starrad
