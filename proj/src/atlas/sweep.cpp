#include <cmath>
#include <exception>

#include "nearfield/atlas.hpp"
#include "nearfield/single_element.hpp"

namespace nearfield {

namespace {

void check_range(const ApertureSpec& spec, const SweepRange& range) {
  spec.require_array();
  if (!std::isfinite(range.start_deg) || !std::isfinite(range.end_deg) ||
      range.start_deg < 0.0 || range.end_deg > 180.0 || !(range.start_deg < range.end_deg)) {
    throw InvalidArgument("sweep: need 0 <= start < end <= 180 degrees");
  }
  if (range.steps < 2) {
    throw InvalidArgument("sweep: need at least 2 steps");
  }
}

double grid_degrees(const SweepRange& range, int i) {
  if (i == range.steps - 1) return range.end_deg;
  return range.start_deg +
         (range.end_deg - range.start_deg) * static_cast<double>(i) / (range.steps - 1);
}

SweepRow compute_row(const ApertureSpec& spec, double theta_deg, const SolverOptions& opts) {
  const auto theta = ObservationAngle::degrees(theta_deg);
  const BoundaryValue f = fraunhofer_array(theta, spec);
  const BoundaryValue n = fresnel_array(theta, spec, opts);
  return {theta_deg,
          f.distance,
          n.distance,
          fraunhofer_single(theta, spec).distance,
          fresnel_single(theta, spec).distance,
          f.branch,
          n.branch};
}

}  // namespace

std::string_view to_string(Region region) noexcept {
  switch (region) {
    case Region::FarField: return "FarField";
    case Region::FresnelRegion: return "FresnelRegion";
    case Region::BelowFresnel: return "BelowFresnel";
    case Region::NonRadiativeMarker: return "NonRadiativeMarker";
  }
  return "?";
}

std::string_view to_string(Model model) noexcept {
  return model == Model::Single ? "single" : "array";
}

std::vector<SweepRow> sweep_serial(const ApertureSpec& spec, const SweepRange& range,
                                   const SolverOptions& opts) {
  check_range(spec, range);
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(range.steps));
  for (int i = 0; i < range.steps; ++i) {
    rows.push_back(compute_row(spec, grid_degrees(range, i), opts));
  }
  return rows;
}

std::vector<SweepRow> sweep(const ApertureSpec& spec, const SweepRange& range,
                            const SolverOptions& opts) {
  check_range(spec, range);
  std::vector<SweepRow> rows(static_cast<std::size_t>(range.steps));
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < range.steps; ++i) {
    try {
      rows[i] = compute_row(spec, grid_degrees(range, i), opts);
    } catch (...) {
#pragma omp critical(nearfield_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

void scale_distances(std::vector<SweepRow>& rows, double factor) {
  for (SweepRow& row : rows) {
    row.dF_array *= factor;
    row.dN_array *= factor;
    row.dF_single *= factor;
    row.dN_single *= factor;
  }
}

Region classify(double r, ObservationAngle theta, const ApertureSpec& spec, Model model,
                const SolverOptions& opts) {
  if (!std::isfinite(r) || r < 0.0) {
    throw InvalidArgument("classify: range must be finite and nonnegative");
  }
  double fraunhofer = 0.0;
  double fresnel = 0.0;
  if (model == Model::Array) {
    fraunhofer = fraunhofer_array(theta, spec).distance;
    fresnel = fresnel_array(theta, spec, opts).distance;
  } else {
    fraunhofer = fraunhofer_single(theta, spec).distance;
    fresnel = fresnel_single(theta, spec).distance;
  }
  if (r < kNonRadiativeRadius) return Region::NonRadiativeMarker;
  if (r >= fraunhofer) return Region::FarField;
  if (r >= fresnel) return Region::FresnelRegion;
  return Region::BelowFresnel;
}

}  // namespace nearfield
