#ifndef NEARFIELD_CORE_HPP
#define NEARFIELD_CORE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nearfield {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHalfPi = kPi / 2.0;

// Phase budget that defines both boundaries.
inline constexpr double kPhaseLimit = kPi / 8.0;

// Angles closer than this to 0, pi/2 or pi have their sine/cosine snapped to
// exactly zero so that degree inputs like 90 and 180 land on the degenerate
// branches.
inline constexpr double kAngleSnap = 1e-14;

// Smallest D/lambda for which the phased-array results hold.
inline constexpr double kMinArrayAperture = 0.5;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input (non-finite, negative, out-of-range).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Input is well formed but outside the regime the array results cover
/// (D/lambda < 0.5).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A branch-specific solver was asked for a root outside its branch.
class InternalBranchError : public Error {
 public:
  using Error::Error;
};

/// The boundary is identically zero at this angle.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

/// Observation angle measured from the antenna line, in [0, pi].
class ObservationAngle {
 public:
  static ObservationAngle radians(double theta);
  static ObservationAngle degrees(double theta_deg);

  double rad() const noexcept { return theta_; }
  double deg() const noexcept;

  // Snapped trigonometry; both are evaluated on the angle folded into
  // [0, pi/2] so that theta and pi - theta agree.
  double sin() const noexcept;
  double abs_cos() const noexcept;
  double cos() const noexcept;

  bool endfire() const noexcept { return sin() == 0.0; }
  bool broadside() const noexcept { return abs_cos() == 0.0; }

  ObservationAngle mirrored() const noexcept { return ObservationAngle(kPi - theta_); }

 private:
  explicit ObservationAngle(double theta) noexcept : theta_(theta) {}
  double folded() const noexcept;

  double theta_;
};

/// Largest antenna dimension and carrier wavelength. Optionally records the
/// ULA element count and spacing it was built from.
class ApertureSpec {
 public:
  static ApertureSpec from_dimensions(double aperture, double wavelength);
  /// D given directly in wavelengths; the wavelength only sets the unit of
  /// physical outputs.
  static ApertureSpec normalized(double aperture_wavelengths, double wavelength = 1.0);
  /// D = (N - 1) * spacing * lambda, N >= 2.
  static ApertureSpec uniform_linear_array(int elements, double spacing_wavelengths,
                                           double wavelength = 1.0);

  double aperture() const noexcept { return aperture_wavelengths_ * wavelength_; }
  double wavelength() const noexcept { return wavelength_; }
  double aperture_wavelengths() const noexcept { return aperture_wavelengths_; }
  std::optional<int> elements() const noexcept { return elements_; }
  std::optional<double> spacing() const noexcept { return spacing_; }

  bool supports_array() const noexcept {
    return aperture_wavelengths_ >= kMinArrayAperture;
  }
  /// Throws DomainError when D/lambda < 0.5.
  void require_array() const;

 private:
  ApertureSpec(double aperture_wavelengths, double wavelength) noexcept
      : aperture_wavelengths_(aperture_wavelengths), wavelength_(wavelength) {}

  double aperture_wavelengths_;
  double wavelength_;
  std::optional<int> elements_;
  std::optional<double> spacing_;
};

/// The three leading terms of the binomial expansion of the phase
/// difference between a point at distance d' from the centre and the centre.
struct PhaseExpansionTerms {
  double t1;  // linear, independent of r
  double t2;  // quadratic, drives the Fraunhofer boundary
  double t3;  // cubic, drives the Fresnel boundary
};

enum class Branch { CappedClosedForm, PolynomialRoot, Degenerate };
enum class BoundaryKind { FraunhoferSingle, FresnelSingle, FraunhoferArray, FresnelArray };

/// A boundary distance in wavelengths and the formula that produced it.
struct BoundaryValue {
  double distance;
  Branch branch;
  BoundaryKind kind;
};

std::string_view to_string(Branch branch) noexcept;
std::string_view to_string(BoundaryKind kind) noexcept;
std::optional<Branch> parse_branch(std::string_view text) noexcept;

// ---------------------------------------------------------------------------
// Geometry
// ---------------------------------------------------------------------------

/// Distance from a source at range r to a point d' from the centre.
double exact_path_length(double r, ObservationAngle theta, double d_prime);

PhaseExpansionTerms expansion_terms(double r, ObservationAngle theta, double d_prime,
                                    double wavelength);

/// Exact phase difference minus the linear term: (2pi/lambda)(r' - r) - t1.
/// Tends to zero as r grows with d' fixed.
double exact_residual_after_linear(double r, ObservationAngle theta, double d_prime,
                                   double wavelength);

}  // namespace nearfield

#endif  // NEARFIELD_CORE_HPP
