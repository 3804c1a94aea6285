#include "nearfield/core.hpp"

#include <cmath>
#include <string>

namespace nearfield {

namespace {

// Slack for angles that round just outside [0, pi] after a degree conversion.
constexpr double kRangeSlack = 1e-12;

void require_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw InvalidArgument(std::string(what) + " must be finite");
  }
}

void require_positive(double value, const char* what) {
  require_finite(value, what);
  if (value <= 0.0) {
    throw InvalidArgument(std::string(what) + " must be positive");
  }
}

void require_nonnegative(double value, const char* what) {
  require_finite(value, what);
  if (value < 0.0) {
    throw InvalidArgument(std::string(what) + " must be nonnegative");
  }
}

}  // namespace

ObservationAngle ObservationAngle::radians(double theta) {
  require_finite(theta, "observation angle");
  if (theta < -kRangeSlack || theta > kPi + kRangeSlack) {
    throw InvalidArgument("observation angle must lie in [0, pi]");
  }
  if (theta < 0.0) theta = 0.0;
  if (theta > kPi) theta = kPi;
  return ObservationAngle(theta);
}

ObservationAngle ObservationAngle::degrees(double theta_deg) {
  require_finite(theta_deg, "observation angle");
  return radians(theta_deg * (kPi / 180.0));
}

double ObservationAngle::deg() const noexcept { return theta_ * (180.0 / kPi); }

double ObservationAngle::folded() const noexcept {
  return theta_ <= kHalfPi ? theta_ : kPi - theta_;
}

double ObservationAngle::sin() const noexcept {
  const double phi = folded();
  return phi <= kAngleSnap ? 0.0 : std::sin(phi);
}

double ObservationAngle::abs_cos() const noexcept {
  const double phi = folded();
  return kHalfPi - phi <= kAngleSnap ? 0.0 : std::cos(phi);
}

double ObservationAngle::cos() const noexcept {
  return theta_ <= kHalfPi ? abs_cos() : -abs_cos();
}

ApertureSpec ApertureSpec::from_dimensions(double aperture, double wavelength) {
  require_positive(aperture, "aperture D");
  require_positive(wavelength, "wavelength");
  return ApertureSpec(aperture / wavelength, wavelength);
}

ApertureSpec ApertureSpec::normalized(double aperture_wavelengths, double wavelength) {
  require_positive(aperture_wavelengths, "D/lambda");
  require_positive(wavelength, "wavelength");
  return ApertureSpec(aperture_wavelengths, wavelength);
}

ApertureSpec ApertureSpec::uniform_linear_array(int elements, double spacing_wavelengths,
                                                double wavelength) {
  if (elements < 2) {
    throw InvalidArgument("a uniform linear array needs at least 2 elements");
  }
  require_positive(spacing_wavelengths, "element spacing");
  require_positive(wavelength, "wavelength");
  ApertureSpec spec(static_cast<double>(elements - 1) * spacing_wavelengths, wavelength);
  spec.elements_ = elements;
  spec.spacing_ = spacing_wavelengths;
  return spec;
}

void ApertureSpec::require_array() const {
  if (!supports_array()) {
    throw DomainError("phased-array boundaries require D/lambda >= 0.5 (got " +
                      std::to_string(aperture_wavelengths_) + ")");
  }
}

std::string_view to_string(Branch branch) noexcept {
  switch (branch) {
    case Branch::CappedClosedForm: return "CappedClosedForm";
    case Branch::PolynomialRoot: return "PolynomialRoot";
    case Branch::Degenerate: return "Degenerate";
  }
  return "?";
}

std::string_view to_string(BoundaryKind kind) noexcept {
  switch (kind) {
    case BoundaryKind::FraunhoferSingle: return "FraunhoferSingle";
    case BoundaryKind::FresnelSingle: return "FresnelSingle";
    case BoundaryKind::FraunhoferArray: return "FraunhoferArray";
    case BoundaryKind::FresnelArray: return "FresnelArray";
  }
  return "?";
}

std::optional<Branch> parse_branch(std::string_view text) noexcept {
  for (Branch b : {Branch::CappedClosedForm, Branch::PolynomialRoot, Branch::Degenerate}) {
    if (text == to_string(b)) return b;
  }
  return std::nullopt;
}

double exact_path_length(double r, ObservationAngle theta, double d_prime) {
  require_positive(r, "range r");
  require_nonnegative(d_prime, "offset d'");
  return std::sqrt(r * r - 2.0 * r * d_prime * theta.cos() + d_prime * d_prime);
}

PhaseExpansionTerms expansion_terms(double r, ObservationAngle theta, double d_prime,
                                    double wavelength) {
  require_positive(r, "range r");
  require_nonnegative(d_prime, "offset d'");
  require_positive(wavelength, "wavelength");
  const double k = kPi / wavelength;
  const double s2 = theta.sin() * theta.sin();
  const double c = theta.cos();
  return {
      -2.0 * k * c * d_prime,
      k * s2 * d_prime * d_prime / r,
      k * c * s2 * d_prime * d_prime * d_prime / (r * r),
  };
}

double exact_residual_after_linear(double r, ObservationAngle theta, double d_prime,
                                   double wavelength) {
  require_positive(wavelength, "wavelength");
  const double r_prime = exact_path_length(r, theta, d_prime);
  // r' - (r - d' cos) = d'^2 sin^2 / (r' + r - d' cos)
  const double s = theta.sin();
  const double denom = r_prime + r - d_prime * theta.cos();
  if (denom <= 0.0) return 0.0;
  return 2.0 * kPi / wavelength * d_prime * d_prime * s * s / denom;
}

}  // namespace nearfield
