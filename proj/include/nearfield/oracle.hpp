#ifndef NEARFIELD_ORACLE_HPP
#define NEARFIELD_ORACLE_HPP

#include "nearfield/core.hpp"
#include "nearfield/numerics.hpp"

// Ground truth for the phased-array closed forms. The oracle evaluates the
// phase-expansion terms directly with d' = D/2 + dD(r) and solves
// t2 = pi/8 (Fraunhofer) or |t3| = pi/8 (Fresnel) by monotone bisection. It
// shares no code path with the quadratic / cubic branch logic.

namespace nearfield {

/// Throws DegenerateError at end-fire.
double oracle_fraunhofer(ObservationAngle theta, const ApertureSpec& spec,
                         const SolverOptions& opts = {});

/// Throws DegenerateError at end-fire and broadside.
double oracle_fresnel(ObservationAngle theta, const ApertureSpec& spec,
                      const SolverOptions& opts = {});

/// Outermost range at which the exact (untruncated) phase residual beyond the
/// linear term reaches pi/8, with the same worst-element offset. Measures how
/// far the truncated-series boundary is from exact geometry. Throws
/// SolverError{NoBoundary} if the residual never reaches pi/8.
double exact_residual_boundary(ObservationAngle theta, const ApertureSpec& spec,
                               const SolverOptions& opts = {});

struct BoundaryCheck {
  double max_rel_error = 0.0;
  double theta_at_max = 0.0;  // radians
  bool pass = true;
};

struct ValidationReport {
  double aperture_wavelengths = 0.0;
  int grid_size = 0;
  double tolerance = 0.0;
  BoundaryCheck fraunhofer;
  BoundaryCheck fresnel;
  bool pass = true;
};

inline constexpr double kValidationTolerance = 1e-9;
inline constexpr double kDegeneracyGuard = 1e-6;

/// Uniform theta grid on [0, pi] (grid_size points, nudged kDegeneracyGuard
/// away from 0, pi/2 and pi); closed form vs oracle for both boundaries.
/// Grid points are evaluated in parallel; aggregation is in grid order.
ValidationReport validate_all(const ApertureSpec& spec, int grid_size,
                              const SolverOptions& opts = {});

/// Single-threaded reference for validate_all.
ValidationReport validate_all_serial(const ApertureSpec& spec, int grid_size,
                                     const SolverOptions& opts = {});

/// The nudged grid used by validate_all.
double validation_grid_angle(int index, int grid_size);

}  // namespace nearfield

#endif  // NEARFIELD_ORACLE_HPP
