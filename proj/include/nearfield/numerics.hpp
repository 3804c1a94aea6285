#ifndef NEARFIELD_NUMERICS_HPP
#define NEARFIELD_NUMERICS_HPP

#include <algorithm>
#include <cmath>
#include <concepts>
#include <string>
#include <vector>

#include "nearfield/core.hpp"

namespace nearfield {

enum class SolverErrc { NoSignChange, MaxIterations, NoRealRoots, Unbounded, NoBoundary };

class SolverError : public Error {
 public:
  SolverError(SolverErrc code, const std::string& what) : Error(what), code_(code) {}
  SolverErrc code() const noexcept { return code_; }

 private:
  SolverErrc code_;
};

struct Bracket {
  double lo;
  double hi;
};

struct SolveReport {
  double root;
  int iterations;
  double residual;  // |f(root)| (or |h(root) - target|)
};

struct SolverOptions {
  double rel_tol = 1e-12;
  int max_iter = 200;
  // Convergence is declared once the bracket width drops below
  // rel_tol * max(|mid|, abs_scale). 1 gives the usual mixed criterion;
  // 0 makes it purely relative (positive roots only).
  double abs_scale = 1.0;
};

inline SolverOptions relative_only(SolverOptions opts) {
  opts.abs_scale = 0.0;
  return opts;
}

namespace detail {

// Bisection on [lo, hi] given that f(lo) has sign `lo_positive`; the caller
// guarantees a sign change. Midpoint rule, no function evaluation at the
// endpoints.
template <std::invocable<double> F>
SolveReport bisect_known_sign(F&& f, double lo, double hi, bool lo_positive,
                              const SolverOptions& opts) {
  double mid = 0.5 * (lo + hi);
  double f_mid = 0.0;
  for (int it = 1; it <= opts.max_iter; ++it) {
    mid = 0.5 * (lo + hi);
    f_mid = f(mid);
    if (f_mid == 0.0) return {mid, it, 0.0};
    if ((f_mid > 0.0) == lo_positive) {
      lo = mid;
    } else {
      hi = mid;
    }
    const double next = 0.5 * (lo + hi);
    const double scale = std::max(std::abs(next), opts.abs_scale);
    // The second test catches brackets that have shrunk to adjacent doubles.
    if (hi - lo <= opts.rel_tol * scale || next <= lo || next >= hi) {
      return {next, it, std::abs(f(next))};
    }
  }
  throw SolverError(SolverErrc::MaxIterations, "bisection did not reach tolerance");
}

}  // namespace detail

/// Bisection on a sign-changing bracket.
template <std::invocable<double> F>
SolveReport bisect(F&& f, Bracket bracket, const SolverOptions& opts = {}) {
  if (!(bracket.lo < bracket.hi) || !(opts.rel_tol > 0.0)) {
    throw InvalidArgument("bisect: need lo < hi and rel_tol > 0");
  }
  const double f_lo = f(bracket.lo);
  if (f_lo == 0.0) return {bracket.lo, 0, 0.0};
  const double f_hi = f(bracket.hi);
  if (f_hi == 0.0) return {bracket.hi, 0, 0.0};
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    throw SolverError(SolverErrc::NoSignChange, "bisect: no sign change on bracket");
  }
  return detail::bisect_known_sign(f, bracket.lo, bracket.hi, f_lo > 0.0, opts);
}

/// Real roots of a x^2 + b x + c in ascending order. Degenerates to the
/// linear root when a == 0. A double root is reported twice.
std::vector<double> solve_quadratic(double a, double b, double c);

/// Unique r > 0 with h(r) = target for h strictly decreasing on (0, inf) and
/// h(0+) > target. Doubles the upper end from initial_hi until h drops below
/// target, then bisects. h is never evaluated at 0.
template <std::invocable<double> H>
SolveReport solve_monotone_decreasing(H&& h, double target, double initial_hi,
                                      const SolverOptions& opts = {}) {
  if (!(initial_hi > 0.0) || !std::isfinite(initial_hi)) {
    throw InvalidArgument("solve_monotone_decreasing: initial_hi must be positive");
  }
  double lo = 0.0;
  double hi = initial_hi;
  int doublings = 0;
  double h_hi = h(hi) - target;
  while (h_hi >= 0.0) {
    if (h_hi == 0.0) return {hi, 0, 0.0};
    if (++doublings > 1024 || !std::isfinite(hi)) {
      throw SolverError(SolverErrc::Unbounded,
                        "solve_monotone_decreasing: target never crossed");
    }
    lo = hi;
    hi *= 2.0;
    h_hi = h(hi) - target;
  }
  auto g = [&](double r) { return h(r) - target; };
  return detail::bisect_known_sign(g, lo, hi, true, opts);
}

}  // namespace nearfield

#endif  // NEARFIELD_NUMERICS_HPP
