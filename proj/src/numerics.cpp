#include "nearfield/numerics.hpp"

#include <cmath>

namespace nearfield {

std::vector<double> solve_quadratic(double a, double b, double c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw InvalidArgument("solve_quadratic: coefficients must be finite");
  }
  if (a == 0.0 && b == 0.0 && c == 0.0) {
    throw InvalidArgument("solve_quadratic: all coefficients are zero");
  }
  if (a == 0.0) {
    if (b == 0.0) {
      throw SolverError(SolverErrc::NoRealRoots, "solve_quadratic: constant equation");
    }
    return {-c / b};
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) {
    throw SolverError(SolverErrc::NoRealRoots, "solve_quadratic: negative discriminant");
  }
  // Larger-magnitude root first, the other from Vieta (c/a = r1 r2).
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  if (q == 0.0) return {0.0, 0.0};  // b == 0 and c == 0
  double r1 = q / a;
  double r2 = c / q;
  if (r1 > r2) std::swap(r1, r2);
  return {r1, r2};
}

}  // namespace nearfield
