#ifndef NEARFIELD_ATLAS_HPP
#define NEARFIELD_ATLAS_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nearfield/core.hpp"
#include "nearfield/numerics.hpp"
#include "nearfield/oracle.hpp"
#include "nearfield/phased_array.hpp"
#include "json.hpp"

namespace nearfield {

/// One angle of a boundary sweep. Distances in wavelengths unless a sweep was
/// rescaled to meters.
struct SweepRow {
  double theta_deg;
  double dF_array;
  double dN_array;
  double dF_single;
  double dN_single;
  Branch branch_F;
  Branch branch_N;

  bool operator==(const SweepRow&) const = default;
};

enum class Region { FarField, FresnelRegion, BelowFresnel, NonRadiativeMarker };
enum class Model { Single, Array };
enum class SvgStyle { Cartesian, Polar };

std::string_view to_string(Region region) noexcept;
std::string_view to_string(Model model) noexcept;

/// Inclusive uniform grid in degrees.
struct SweepRange {
  double start_deg = 0.0;
  double end_deg = 180.0;
  int steps = 181;
};

/// Rows evaluated in parallel; output order and values match sweep_serial.
std::vector<SweepRow> sweep(const ApertureSpec& spec, const SweepRange& range,
                            const SolverOptions& opts = {});
std::vector<SweepRow> sweep_serial(const ApertureSpec& spec, const SweepRange& range,
                                   const SolverOptions& opts = {});

/// Multiplies every distance column by `factor` (e.g. the wavelength in m).
void scale_distances(std::vector<SweepRow>& rows, double factor);

// Fixed heuristic radius for the reactive (non-radiative) zone.
inline constexpr double kNonRadiativeRadius = 0.5;

/// Region of a point at range r (wavelengths). The Fraunhofer test runs
/// first, so where the Fresnel boundary exceeds the Fraunhofer one the
/// FresnelRegion label is skipped. r < lambda/2 always reports
/// NonRadiativeMarker.
Region classify(double r, ObservationAngle theta, const ApertureSpec& spec, Model model,
                const SolverOptions& opts = {});

// -- serialization ----------------------------------------------------------

inline constexpr std::string_view kCsvHeader =
    "theta_deg,dF_array,dN_array,dF_single,dN_single,branch_F,branch_N";

/// 12 significant digits, LF line endings, header first.
std::string to_csv(std::span<const SweepRow> rows);
/// Throws InvalidArgument on malformed input.
std::vector<SweepRow> parse_csv(std::string_view text);

nlohmann::ordered_json to_json(std::span<const SweepRow> rows);
nlohmann::ordered_json to_json(const ValidationReport& report);
nlohmann::ordered_json to_json(const SwitchAngles& angles);
std::vector<SweepRow> rows_from_json(const nlohmann::ordered_json& j);

/// Self-contained SVG, viewBox 0 0 960 600, exactly four boundary curves.
std::string to_svg(std::span<const SweepRow> rows, SvgStyle style);

/// Plot geometry shared by the SVG writer and anything reading it back.
struct SvgLayout {
  static constexpr double kWidth = 960.0;
  static constexpr double kHeight = 600.0;
  static constexpr double kLeft = 80.0;
  static constexpr double kRight = 760.0;
  static constexpr double kTop = 40.0;
  static constexpr double kBottom = 540.0;
  static constexpr double kPolarCx = 400.0;
  static constexpr double kPolarCy = 300.0;
  static constexpr double kPolarRadius = 250.0;
};

/// Smallest power of two >= max_value (at least 1); the top of the y-axis.
double svg_axis_limit(double max_value);

}  // namespace nearfield

#endif  // NEARFIELD_ATLAS_HPP
