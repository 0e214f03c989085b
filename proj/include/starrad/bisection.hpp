#pragma once

#include <cmath>
#include <concepts>
#include <string>
#include <utility>

#include "errors.hpp"

namespace starrad {

template <typename F>
concept ScalarFunction = requires(F f, double x) {
  { f(x) } -> std::convertible_to<double>;
};

struct BisectionResult {
  double root = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Bisection for a sign change of f on [lo, hi].
///
/// Stops when the bracket is narrower than `tol` or an exact zero is hit.
/// The iteration count is capped at `max_iter`; `converged` reports whether
/// the width criterion was met. Throws bracket_error when f(lo) and f(hi)
/// share a strict sign.
template <ScalarFunction F>
BisectionResult bisect(F&& f, double lo, double hi, double tol = 1e-12, int max_iter = 200) {
  double f_lo = f(lo);
  double f_hi = f(hi);
  if (f_lo == 0.0) return {lo, 0, true};
  if (f_hi == 0.0) return {hi, 0, true};
  if (std::signbit(f_lo) == std::signbit(f_hi)) {
    throw bracket_error("bisect: no sign change on [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
  }
  BisectionResult out;
  for (out.iterations = 1; out.iterations <= max_iter; ++out.iterations) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (f_mid == 0.0) return {mid, out.iterations, true};
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
    if (hi - lo < tol) {
      out.converged = true;
      break;
    }
  }
  out.root = 0.5 * (lo + hi);
  return out;
}

/// Largest point of [lo, hi] at which a monotone predicate still holds,
/// assuming pred(lo) is true and pred(hi) is false. Returns {last_true, first_false}.
template <typename Pred>
std::pair<double, double> bisect_predicate(Pred&& pred, double lo, double hi, double tol,
                                           int max_iter = 200) {
  for (int it = 0; it < max_iter && hi - lo >= tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (pred(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

}  // namespace starrad
