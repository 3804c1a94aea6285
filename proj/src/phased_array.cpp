#include "nearfield/phased_array.hpp"

#include <cmath>
#include <limits>

#include "nearfield/single_element.hpp"

namespace nearfield {

namespace {

// Accepted overshoot of a branch root past the cap before it is treated as a
// wrong-branch call.
constexpr double kCapSlack = 1e-9;

double saturation(double d, double abs_cos, double a) {
  return std::min(1.0, 2.0 * d * abs_cos / a);
}

}  // namespace

double fraunhofer_switch_function(ObservationAngle theta) noexcept {
  const double s = theta.sin();
  return 8.0 * theta.abs_cos() * s * s;
}

double fresnel_switch_function(ObservationAngle theta) noexcept {
  const double s = theta.sin();
  const double c = theta.abs_cos();
  return 16.0 * c * c * c * s * s;
}

double fresnel_switch_peak_angle() noexcept { return std::atan(std::sqrt(2.0 / 3.0)); }

double delta_d(double r, ObservationAngle theta, const ApertureSpec& spec) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw InvalidArgument("delta_d: range must be finite and nonnegative");
  }
  return std::min(r * theta.abs_cos(), 0.5 * spec.aperture_wavelengths());
}

double fraunhofer_quadratic_root(ObservationAngle theta, const ApertureSpec& spec) {
  spec.require_array();
  const double a = spec.aperture_wavelengths();
  const double s = theta.sin();
  const double c = theta.abs_cos();
  if (s == 0.0) {
    throw DegenerateError("fraunhofer_quadratic_root: sin(theta) = 0");
  }
  if (c == 0.0) return 2.0 * a * a * s * s;

  const double cap = a / (2.0 * c);
  // The discriminant factors as 1 - 16 a s^2 c; negative means the root has
  // moved past the cap.
  const double disc = 1.0 - 16.0 * a * s * s * c;
  if (disc < 0.0) {
    if (disc >= -kCapSlack) return cap;
    throw InternalBranchError("fraunhofer_quadratic_root: no root below the cap");
  }
  const double qa = 8.0 * s * s * c * c;
  const double qb = 8.0 * a * s * s * c - 1.0;
  const double qc = 2.0 * a * a * s * s;
  double root;
  try {
    root = solve_quadratic(qa, qb, qc).front();
  } catch (const SolverError&) {
    root = -qb / (2.0 * qa);  // rounding pushed a double root negative
  }
  if (root > cap * (1.0 + kCapSlack)) {
    throw InternalBranchError("fraunhofer_quadratic_root: root exceeds the cap");
  }
  return std::min(root, cap);
}

BoundaryValue fraunhofer_array(ObservationAngle theta, const ApertureSpec& spec) {
  spec.require_array();
  const double a = spec.aperture_wavelengths();
  const double s = theta.sin();
  const double c = theta.abs_cos();
  if (s == 0.0) return {0.0, Branch::Degenerate, BoundaryKind::FraunhoferArray};

  const double capped = 8.0 * a * a * s * s;
  if (2.0 * capped * c >= a) {
    return {capped, Branch::CappedClosedForm, BoundaryKind::FraunhoferArray};
  }
  // Within theta_F of broadside, and in the end-fire tail where F < lambda/2D.
  return {fraunhofer_quadratic_root(theta, spec), Branch::PolynomialRoot,
          BoundaryKind::FraunhoferArray};
}

double fraunhofer_array_angle(const ApertureSpec& spec, AngleMode mode,
                              const SolverOptions& opts) {
  spec.require_array();
  const double a = spec.aperture_wavelengths();
  if (mode == AngleMode::Approximate) {
    return 0.5 * std::asin(1.0 / (8.0 * a));
  }
  // With t = pi/2 - theta, F = 8 sin t cos^2 t, increasing on
  // (0, pi/2 - atan(sqrt 2)).
  const double target = 1.0 / (2.0 * a);
  auto f = [target](double t) {
    const double ct = std::cos(t);
    return 8.0 * std::sin(t) * ct * ct - target;
  };
  const double t_max = kHalfPi - std::atan(std::sqrt(2.0));
  return bisect(f, {0.0, t_max}, relative_only(opts)).root;
}

double max_fraunhofer_array(const ApertureSpec& spec, const SolverOptions& opts) {
  const double a = spec.aperture_wavelengths();
  const double c = std::cos(fraunhofer_array_angle(spec, AngleMode::Exact, opts));
  return 8.0 * a * a * c * c;
}

double fresnel_cubic_root(ObservationAngle theta, const ApertureSpec& spec,
                          const SolverOptions& opts) {
  spec.require_array();
  const double a = spec.aperture_wavelengths();
  const double s = theta.sin();
  const double c = theta.abs_cos();
  if (s == 0.0 || c == 0.0) return 0.0;

  const double cap = a / (2.0 * c);
  // h_N(r) / pi - 1/8; strictly decreasing below the cap.
  auto g = [=](double r) {
    const double u = 0.5 * a + r * c;
    return c * s * s * u * u * u / (r * r) - 0.125;
  };
  const double g_cap = g(cap);
  if (g_cap > 0.125 * kCapSlack) {
    throw InternalBranchError("fresnel_cubic_root: root lies beyond the cap");
  }
  if (g_cap >= 0.0) return cap;
  // The single-element distance is a lower bound: (D + 2yc)^3 >= D^3.
  const double lo = std::sqrt(c * s * s * a * a * a);
  if (lo >= cap) return cap;
  return bisect(g, {lo, cap}, relative_only(opts)).root;
}

FresnelSwitch fresnel_switch_angles(const ApertureSpec& spec, const SolverOptions& opts) {
  spec.require_array();
  const double target = 1.0 / (2.0 * spec.aperture_wavelengths());
  auto g = [target](double t) {
    const double s = std::sin(t);
    const double c = std::cos(t);
    return 16.0 * c * c * c * s * s - target;
  };
  const double peak = fresnel_switch_peak_angle();
  const double n1 = bisect(g, {0.0, peak}, relative_only(opts)).root;
  const double n2 = bisect(g, {peak, kHalfPi}, relative_only(opts)).root;
  return {n1, n2};
}

SwitchAngles switch_angles(const ApertureSpec& spec, const SolverOptions& opts) {
  const FresnelSwitch n = fresnel_switch_angles(spec, opts);
  return {fraunhofer_array_angle(spec, AngleMode::Exact, opts), n.theta_N1, n.theta_N2,
          kPi - n.theta_N2, kPi - n.theta_N1};
}

BoundaryValue fresnel_array(ObservationAngle theta, const ApertureSpec& spec,
                            const SolverOptions& opts) {
  spec.require_array();
  const double a = spec.aperture_wavelengths();
  const double s = theta.sin();
  const double c = theta.abs_cos();
  if (s == 0.0 || c == 0.0) return {0.0, Branch::Degenerate, BoundaryKind::FresnelArray};

  const double capped = std::sqrt(8.0 * c * s * s * a * a * a);
  if (2.0 * capped * c >= a) {
    return {capped, Branch::CappedClosedForm, BoundaryKind::FresnelArray};
  }
  return {fresnel_cubic_root(theta, spec, opts), Branch::PolynomialRoot,
          BoundaryKind::FresnelArray};
}

double max_fresnel_array(const ApertureSpec& spec) {
  return fresnel_array(ObservationAngle::radians(fresnel_peak_angle()), spec).distance;
}

double fraunhofer_equation_residual(double d, ObservationAngle theta, const ApertureSpec& spec) {
  const double a = spec.aperture_wavelengths();
  const double s = theta.sin();
  const double f = 1.0 + saturation(d, theta.abs_cos(), a);
  const double lhs = 2.0 * a * a * s * s * f * f;
  if (d == 0.0) return lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return (lhs - d) / d;
}

double fresnel_equation_residual(double d, ObservationAngle theta, const ApertureSpec& spec) {
  const double a = spec.aperture_wavelengths();
  const double s = theta.sin();
  const double c = theta.abs_cos();
  const double f = 1.0 + saturation(d, c, a);
  const double lhs = a * a * a * c * s * s * f * f * f;
  if (d == 0.0) return lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return (lhs - d * d) / (d * d);
}

}  // namespace nearfield
