#include "nearfield/oracle.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <vector>

#include "nearfield/phased_array.hpp"

namespace nearfield {

namespace {

// Oracle work happens in wavelength units.
constexpr double kUnitWavelength = 1.0;

double worst_offset(double r, ObservationAngle theta, const ApertureSpec& spec) {
  return 0.5 * spec.aperture_wavelengths() + delta_d(r, theta, spec);
}

struct PointErrors {
  double fraunhofer;
  double fresnel;
};

double relative_gap(double closed_form, double reference) {
  return std::abs(closed_form - reference) / std::abs(reference);
}

PointErrors check_point(double theta_rad, const ApertureSpec& spec, const SolverOptions& opts) {
  constexpr double kFailed = std::numeric_limits<double>::infinity();
  const auto theta = ObservationAngle::radians(theta_rad);
  PointErrors e{kFailed, kFailed};
  try {
    e.fraunhofer = relative_gap(fraunhofer_array(theta, spec).distance,
                                oracle_fraunhofer(theta, spec, opts));
  } catch (const Error&) {
  }
  try {
    e.fresnel = relative_gap(fresnel_array(theta, spec, opts).distance,
                             oracle_fresnel(theta, spec, opts));
  } catch (const Error&) {
  }
  return e;
}

ValidationReport aggregate(const ApertureSpec& spec, int grid_size,
                           const std::vector<PointErrors>& errors) {
  ValidationReport report;
  report.aperture_wavelengths = spec.aperture_wavelengths();
  report.grid_size = grid_size;
  report.tolerance = kValidationTolerance;
  auto fold = [](BoundaryCheck& check, double err, double theta) {
    // NaN and inf both count as failures.
    if (!(err <= check.max_rel_error)) {
      check.max_rel_error = err;
      check.theta_at_max = theta;
    }
  };
  for (int i = 0; i < grid_size; ++i) {
    const double theta = validation_grid_angle(i, grid_size);
    fold(report.fraunhofer, errors[i].fraunhofer, theta);
    fold(report.fresnel, errors[i].fresnel, theta);
  }
  report.fraunhofer.pass = report.fraunhofer.max_rel_error <= kValidationTolerance;
  report.fresnel.pass = report.fresnel.max_rel_error <= kValidationTolerance;
  report.pass = report.fraunhofer.pass && report.fresnel.pass;
  return report;
}

void require_grid(const ApertureSpec& spec, int grid_size) {
  spec.require_array();
  if (grid_size < 16) {
    throw InvalidArgument("validation grid needs at least 16 points");
  }
}

}  // namespace

double oracle_fraunhofer(ObservationAngle theta, const ApertureSpec& spec,
                         const SolverOptions& opts) {
  spec.require_array();
  if (theta.endfire()) {
    throw DegenerateError("oracle_fraunhofer: boundary vanishes at end-fire");
  }
  auto h = [&](double r) {
    return expansion_terms(r, theta, worst_offset(r, theta, spec), kUnitWavelength).t2;
  };
  return solve_monotone_decreasing(h, kPhaseLimit, 1.0, relative_only(opts)).root;
}

double oracle_fresnel(ObservationAngle theta, const ApertureSpec& spec,
                      const SolverOptions& opts) {
  spec.require_array();
  if (theta.endfire() || theta.broadside()) {
    throw DegenerateError("oracle_fresnel: boundary vanishes at end-fire and broadside");
  }
  auto h = [&](double r) {
    return std::abs(
        expansion_terms(r, theta, worst_offset(r, theta, spec), kUnitWavelength).t3);
  };
  return solve_monotone_decreasing(h, kPhaseLimit, 1.0, relative_only(opts)).root;
}

double exact_residual_boundary(ObservationAngle theta, const ApertureSpec& spec,
                               const SolverOptions& opts) {
  constexpr double kScanRatio = 1.01;
  constexpr double kScanDepth = 1e-9;
  auto g = [&](double r) {
    return exact_residual_after_linear(r, theta, worst_offset(r, theta, spec),
                                       kUnitWavelength) -
           kPhaseLimit;
  };
  double hi = 4.0 * oracle_fraunhofer(theta, spec, opts);
  for (int i = 0; g(hi) >= 0.0; ++i) {
    if (i > 200) {
      throw SolverError(SolverErrc::NoBoundary, "exact residual does not decay");
    }
    hi *= 2.0;
  }
  // The exact residual need not be monotone; walk inward from the far side
  // and take the first (outermost) crossing.
  const double floor = kScanDepth * hi;
  for (double r = hi; r > floor; r /= kScanRatio) {
    const double inner = r / kScanRatio;
    if (g(inner) >= 0.0) {
      return bisect(g, {inner, r}, relative_only(opts)).root;
    }
  }
  throw SolverError(SolverErrc::NoBoundary, "exact residual never reaches pi/8");
}

double validation_grid_angle(int index, int grid_size) {
  double theta = kPi * static_cast<double>(index) / static_cast<double>(grid_size - 1);
  if (theta < kDegeneracyGuard) return kDegeneracyGuard;
  if (theta > kPi - kDegeneracyGuard) return kPi - kDegeneracyGuard;
  if (std::abs(theta - kHalfPi) < kDegeneracyGuard) {
    return theta <= kHalfPi ? kHalfPi - kDegeneracyGuard : kHalfPi + kDegeneracyGuard;
  }
  return theta;
}

ValidationReport validate_all_serial(const ApertureSpec& spec, int grid_size,
                                     const SolverOptions& opts) {
  require_grid(spec, grid_size);
  std::vector<PointErrors> errors(static_cast<std::size_t>(grid_size));
  for (int i = 0; i < grid_size; ++i) {
    errors[i] = check_point(validation_grid_angle(i, grid_size), spec, opts);
  }
  return aggregate(spec, grid_size, errors);
}

ValidationReport validate_all(const ApertureSpec& spec, int grid_size,
                              const SolverOptions& opts) {
  require_grid(spec, grid_size);
  std::vector<PointErrors> errors(static_cast<std::size_t>(grid_size));
#pragma omp parallel for schedule(static)
  for (int i = 0; i < grid_size; ++i) {
    errors[i] = check_point(validation_grid_angle(i, grid_size), spec, opts);
  }
  return aggregate(spec, grid_size, errors);
}

}  // namespace nearfield
