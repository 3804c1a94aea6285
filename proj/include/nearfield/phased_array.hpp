#ifndef NEARFIELD_PHASED_ARRAY_HPP
#define NEARFIELD_PHASED_ARRAY_HPP

#include "nearfield/core.hpp"
#include "nearfield/numerics.hpp"

// Phased-array (ULA) Fraunhofer and Fresnel boundaries.
//
// For an array the worst element sits D/2 + dD from the reference feed,
// dD = min(|r cos(theta)|, D/2), so each boundary solves a fixed-point
// equation with a min() in it:
//
//   Fraunhofer:  2 D^2 sin^2 / lambda * (1 + min(1, 2 d |cos| / D))^2 = d
//   Fresnel:     D^3 |cos| sin^2 / lambda * (1 + min(1, 2 d |cos| / D))^3 = d^2
//
// When the min saturates the closed forms 8 D^2 sin^2 / lambda and
// sqrt(8 |cos| sin^2 D^3 / lambda) apply; otherwise the boundary is a root of
// a quadratic (Fraunhofer) or cubic (Fresnel) below the cap D / (2 |cos|).
//
// All distances are in wavelengths. Every entry point rejects D/lambda < 0.5
// with DomainError.

namespace nearfield {

enum class AngleMode { Exact, Approximate };

/// theta_F is measured from broadside; the N angles are in (0, pi/2) and
/// their mirrors in (pi/2, pi). Radians throughout.
struct SwitchAngles {
  double theta_F;
  double theta_N1;
  double theta_N2;
  double theta_N1_mirror;  // pi - theta_N2
  double theta_N2_mirror;  // pi - theta_N1
};

struct FresnelSwitch {
  double theta_N1;
  double theta_N2;
};

/// F(theta) = 8 |cos| sin^2. The Fraunhofer closed form holds where
/// F >= lambda / (2D).
double fraunhofer_switch_function(ObservationAngle theta) noexcept;

/// G(theta) = 16 |cos|^3 sin^2. The Fresnel closed form holds where
/// G >= lambda / (2D).
double fresnel_switch_function(ObservationAngle theta) noexcept;

/// Interior maximiser of G, atan(sqrt(2/3)).
double fresnel_switch_peak_angle() noexcept;

/// dD = min(|r cos(theta)|, D/2), r in wavelengths.
double delta_d(double r, ObservationAngle theta, const ApertureSpec& spec);

BoundaryValue fraunhofer_array(ObservationAngle theta, const ApertureSpec& spec);

/// Smaller root of 8 s^2 c^2 d^2 + (8 a s^2 c - 1) d + 2 a^2 s^2 = 0, the
/// uncapped form of the Fraunhofer equation. Linear at broadside.
/// Throws InternalBranchError when no root lies at or below the cap.
double fraunhofer_quadratic_root(ObservationAngle theta, const ApertureSpec& spec);

/// Half-width around broadside of the polynomial Fraunhofer branch.
double fraunhofer_array_angle(const ApertureSpec& spec, AngleMode mode = AngleMode::Exact,
                              const SolverOptions& opts = {});

/// 8 D^2 cos^2(theta_F) / lambda.
double max_fraunhofer_array(const ApertureSpec& spec, const SolverOptions& opts = {});

/// Root of |cos| sin^2 (D + 2 y |cos|)^3 / lambda = y^2 below the cap.
/// Returns 0 at broadside and end-fire. Throws InternalBranchError when the
/// root lies beyond the cap.
double fresnel_cubic_root(ObservationAngle theta, const ApertureSpec& spec,
                          const SolverOptions& opts = {});

FresnelSwitch fresnel_switch_angles(const ApertureSpec& spec, const SolverOptions& opts = {});

SwitchAngles switch_angles(const ApertureSpec& spec, const SolverOptions& opts = {});

BoundaryValue fresnel_array(ObservationAngle theta, const ApertureSpec& spec,
                            const SolverOptions& opts = {});

/// sqrt(8 cos t sin^2 t D^3 / lambda) at t = atan(sqrt 2).
double max_fresnel_array(const ApertureSpec& spec);

// Relative imbalance (lhs - rhs) / rhs of the defining equations above,
// evaluated with the min() intact. Zero when d == 0 and the equation
// degenerates.
double fraunhofer_equation_residual(double d, ObservationAngle theta, const ApertureSpec& spec);
double fresnel_equation_residual(double d, ObservationAngle theta, const ApertureSpec& spec);

}  // namespace nearfield

#endif  // NEARFIELD_PHASED_ARRAY_HPP
