#ifndef NEARFIELD_SINGLE_ELEMENT_HPP
#define NEARFIELD_SINGLE_ELEMENT_HPP

#include "nearfield/core.hpp"

// Classical centre-fed single-element boundaries. Distances are returned in
// wavelengths. Any D > 0 is accepted.

namespace nearfield {

/// Angle maximising |cos| sin^2, i.e. atan(sqrt 2).
double fresnel_peak_angle() noexcept;

/// sqrt(cos t sin^2 t) at t = atan(sqrt 2); the exact form of the usual 0.62.
double single_fresnel_peak_coefficient() noexcept;

/// 2 D^2 sin^2(theta) / lambda.
BoundaryValue fraunhofer_single(ObservationAngle theta, const ApertureSpec& spec);

/// 2 D^2 / lambda, reached at broadside.
double max_fraunhofer_single(const ApertureSpec& spec);

/// sqrt(|cos| sin^2 D^3 / lambda).
BoundaryValue fresnel_single(ObservationAngle theta, const ApertureSpec& spec);

double max_fresnel_single(const ApertureSpec& spec);

}  // namespace nearfield

#endif  // NEARFIELD_SINGLE_ELEMENT_HPP
