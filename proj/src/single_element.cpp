#include "nearfield/single_element.hpp"

#include <cmath>

namespace nearfield {

double fresnel_peak_angle() noexcept { return std::atan(std::sqrt(2.0)); }

double single_fresnel_peak_coefficient() noexcept {
  const double t = fresnel_peak_angle();
  const double s = std::sin(t);
  return std::sqrt(std::cos(t) * s * s);
}

BoundaryValue fraunhofer_single(ObservationAngle theta, const ApertureSpec& spec) {
  const double a = spec.aperture_wavelengths();
  const double s = theta.sin();
  const double d = 2.0 * a * a * s * s;
  return {d, d == 0.0 ? Branch::Degenerate : Branch::CappedClosedForm,
          BoundaryKind::FraunhoferSingle};
}

double max_fraunhofer_single(const ApertureSpec& spec) {
  const double a = spec.aperture_wavelengths();
  return 2.0 * a * a;
}

BoundaryValue fresnel_single(ObservationAngle theta, const ApertureSpec& spec) {
  const double a = spec.aperture_wavelengths();
  const double s = theta.sin();
  const double d = std::sqrt(theta.abs_cos() * s * s * a * a * a);
  return {d, d == 0.0 ? Branch::Degenerate : Branch::CappedClosedForm,
          BoundaryKind::FresnelSingle};
}

double max_fresnel_single(const ApertureSpec& spec) {
  return fresnel_single(ObservationAngle::radians(fresnel_peak_angle()), spec).distance;
}

}  // namespace nearfield
