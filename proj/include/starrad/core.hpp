#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "bisection.hpp"
#include "errors.hpp"

namespace starrad {

using Complex = std::complex<double>;

inline bool is_finite(Complex w) { return std::isfinite(w.real()) && std::isfinite(w.imag()); }

/// A point of the open unit disc.
class DiskPoint {
 public:
  explicit DiskPoint(Complex z) : z_(z) {
    if (!is_finite(z)) throw domain_error("DiskPoint: non-finite coordinate");
    if (std::abs(z) >= 1.0) throw domain_error("DiskPoint: |z| >= 1");
  }
  DiskPoint(double x) : DiskPoint(Complex(x, 0.0)) {}  // NOLINT: real points convert implicitly

  Complex value() const { return z_; }

 private:
  Complex z_;
};

/// The closed-form extremal functions.
///
///   F1   = z((1+z)/(1-z))^3          extremal for G1
///   F2   = z(1+z)^2/(1-z)^3          extremal for G2
///   G1FN = z((1+z)/(1-z))^2          extremal for G3 (and the g in F1 = g*p0)
///   G2FN = z(1+z)/(1-z)^2
///   P0   = (1+z)/(1-z)               Caratheodory kernel
enum class ExtremalId { F1, F2, G1FN, G2FN, P0 };

inline constexpr ExtremalId kAllExtremals[] = {ExtremalId::F1, ExtremalId::F2, ExtremalId::G1FN,
                                               ExtremalId::G2FN, ExtremalId::P0};

inline std::string_view to_string(ExtremalId id) {
  switch (id) {
    case ExtremalId::F1: return "f1";
    case ExtremalId::F2: return "f2";
    case ExtremalId::G1FN: return "g1";
    case ExtremalId::G2FN: return "g2";
    case ExtremalId::P0: return "p0";
  }
  return "?";
}

/// True for the functions normalized by f(0)=0, f'(0)=1.
inline constexpr bool is_normalized(ExtremalId id) { return id != ExtremalId::P0; }

inline Complex eval(ExtremalId id, DiskPoint p) {
  const Complex z = p.value();
  const Complex ratio = (1.0 + z) / (1.0 - z);
  switch (id) {
    case ExtremalId::F1: return z * ratio * ratio * ratio;
    case ExtremalId::F2: return z * (1.0 + z) * (1.0 + z) / ((1.0 - z) * (1.0 - z) * (1.0 - z));
    case ExtremalId::G1FN: return z * ratio * ratio;
    case ExtremalId::G2FN: return z * (1.0 + z) / ((1.0 - z) * (1.0 - z));
    case ExtremalId::P0: return ratio;
  }
  return {};
}

/// Derivative from the explicit rational formulas, e.g.
/// f1' = (1+z)^2 (1+6z-z^2) / (1-z)^4.
inline Complex eval_deriv(ExtremalId id, DiskPoint p) {
  const Complex z = p.value();
  const Complex m = 1.0 - z;
  const Complex m2 = m * m;
  switch (id) {
    case ExtremalId::F1: return (1.0 + z) * (1.0 + z) * (1.0 + 6.0 * z - z * z) / (m2 * m2);
    case ExtremalId::F2: return (1.0 + 6.0 * z + 5.0 * z * z) / (m2 * m2);
    case ExtremalId::G1FN: return (1.0 + 5.0 * z + 3.0 * z * z - z * z * z) / (m2 * m);
    case ExtremalId::G2FN: return (1.0 + 3.0 * z) / (m2 * m);
    case ExtremalId::P0: return 2.0 / m2;
  }
  return {};
}

/// z f'(z) / f(z). The removable singularity at 0 of the normalized
/// functions is exactly 1.
inline Complex logderiv(ExtremalId id, DiskPoint p) {
  const Complex z = p.value();
  if (is_normalized(id) && z == Complex(0.0, 0.0)) return {1.0, 0.0};
  const Complex f = eval(id, p);
  if (f == Complex(0.0, 0.0)) throw singularity_error("logderiv: f(z) = 0 away from the origin");
  const Complex out = z * eval_deriv(id, p) / f;
  if (!is_finite(out)) throw singularity_error("logderiv: non-finite value");
  return out;
}

/// Leading Taylor coefficients by the trapezoid rule on |z| = 1/2.
///
/// Returns a_1..a_n for normalized functions and a_0..a_{n-1} for P0.
/// Uses 64n nodes (at least 256); the residual against the nearest integer is
/// below 1e-12 for the built-ins.
inline std::vector<double> taylor_coeffs(ExtremalId id, int n) {
  if (n < 1) throw domain_error("taylor_coeffs: n must be >= 1");
  constexpr double radius = 0.5;
  const int nodes = std::max(256, 64 * n);
  const int first = is_normalized(id) ? 1 : 0;

  std::vector<Complex> acc(static_cast<std::size_t>(n));
  for (int j = 0; j < nodes; ++j) {
    const double t = 2.0 * std::numbers::pi * j / nodes;
    const Complex unit = std::polar(1.0, -t);
    const Complex fz = eval(id, DiskPoint(std::polar(radius, t)));
    Complex twiddle = std::pow(unit, first);
    for (int k = 0; k < n; ++k) {
      acc[static_cast<std::size_t>(k)] += fz * twiddle;
      twiddle *= unit;
    }
  }
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    out[static_cast<std::size_t>(k)] =
        acc[static_cast<std::size_t>(k)].real() / nodes / std::pow(radius, first + k);
  }
  return out;
}

/// The zero rho in (0,1) of f'(-rho), by bisection on (1e-6, 0.99).
/// Equals the radius of univalence (and starlikeness) of the matching class.
inline double critical_radius(ExtremalId id) {
  if (id != ExtremalId::F1 && id != ExtremalId::F2 && id != ExtremalId::G1FN) {
    throw domain_error("critical_radius: defined for f1, f2, g1 only");
  }
  auto deriv_on_negative_axis = [id](double rho) { return eval_deriv(id, DiskPoint(-rho)).real(); };
  return bisect(deriv_on_negative_axis, 1e-6, 0.99, 1e-12).root;
}

}  // namespace starrad
