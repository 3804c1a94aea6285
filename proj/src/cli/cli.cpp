#include "nearfield/cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nearfield/atlas.hpp"
#include "nearfield/oracle.hpp"
#include "nearfield/phased_array.hpp"
#include "nearfield/single_element.hpp"

namespace nearfield::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kDefaultTolerance = 1e-12;
constexpr double kMaxTolerance = 1e-6;
constexpr double kDiagnosticTolerance = 0.05;
constexpr double kDiagnosticMinAperture = 10.0;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::optional<double> d_lambda;
  std::optional<double> d_m;
  std::optional<double> lambda_m;
  std::optional<int> elements;
  double spacing = 0.5;
  std::optional<double> tolerance;
  std::string format;
  std::string out_path;
  std::string config_path;

  std::string kind;
  std::string model = "array";
  double theta = 90.0;
  double theta_start = 0.0;
  double theta_end = 180.0;
  int steps = 181;
  std::string style = "cartesian";
  bool meters = false;
  std::optional<double> r;
  std::optional<double> r_m;
  int grid = 1000;
  bool diagnostic = false;
};

// ---------------------------------------------------------------------------
// argument plumbing
// ---------------------------------------------------------------------------

std::string number_text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Turns a JSON config object into "--key value" arguments.
std::vector<std::string> config_arguments(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config file '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  std::vector<std::string> args;
  for (const auto& [key, value] : j.items()) {
    if (key == "config") continue;
    const std::string flag = "--" + key;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
    } else if (value.is_number_integer()) {
      args.push_back(flag);
      args.push_back(std::to_string(value.get<long long>()));
    } else if (value.is_number()) {
      args.push_back(flag);
      args.push_back(number_text(value.get<double>()));
    } else if (value.is_string()) {
      args.push_back(flag);
      args.push_back(value.get<std::string>());
    } else {
      throw UsageError("config key '" + key + "' must be a scalar");
    }
  }
  return args;
}

// Config-file arguments go right after the subcommand so that later command
// line flags win (options take their last value).
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::optional<std::string> path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    }
  }
  if (!path || args.size() < 2) return args;
  const auto extra = config_arguments(*path);
  args.insert(args.begin() + 2, extra.begin(), extra.end());
  return args;
}

double resolve_tolerance(const Config& c) {
  double tol = kDefaultTolerance;
  if (const char* env = std::getenv("NEARFIELD_TOLERANCE"); env && *env) {
    char* end = nullptr;
    tol = std::strtod(env, &end);
    if (end == env || *end != '\0') {
      throw UsageError("NEARFIELD_TOLERANCE is not a number");
    }
  }
  if (c.tolerance) tol = *c.tolerance;
  if (!(tol > 0.0 && tol <= kMaxTolerance)) {
    throw UsageError("tolerance must lie in (0, 1e-6]");
  }
  return tol;
}

ApertureSpec build_spec(const Config& c) {
  const int styles = (c.d_lambda ? 1 : 0) + (c.d_m ? 1 : 0) + (c.elements ? 1 : 0);
  if (styles != 1) {
    throw UsageError("give exactly one of --D-lambda, --D-m, --elements");
  }
  const double lambda = c.lambda_m.value_or(1.0);
  if (c.d_m) {
    if (!c.lambda_m) throw UsageError("--D-m requires --lambda-m");
    return ApertureSpec::from_dimensions(*c.d_m, lambda);
  }
  if (c.d_lambda) return ApertureSpec::normalized(*c.d_lambda, lambda);
  if (*c.elements < 1) throw UsageError("--elements must be at least 1");
  if (*c.elements == 1) {
    // One element: its own width is the aperture.
    return ApertureSpec::normalized(c.spacing, lambda);
  }
  return ApertureSpec::uniform_linear_array(*c.elements, c.spacing, lambda);
}

// ---------------------------------------------------------------------------
// rendering
// ---------------------------------------------------------------------------

void render_text(const Json& j, const std::string& key, std::string& out) {
  auto line = [&](const std::string& value) { out += key + ": " + value + "\n"; };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(v, key.empty() ? k : key + "." + k, out);
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& v : j) render_text(v, key + "." + std::to_string(i++), out);
  } else if (j.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", j.get<double>());
    line(buf);
  } else if (j.is_string()) {
    line(j.get<std::string>());
  } else {
    line(j.dump());
  }
}

std::string render(const Json& doc, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  std::string out;
  render_text(doc, "", out);
  return out;
}

void emit(const Config& c, const std::string& payload, std::ostream& out) {
  if (c.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(c.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + c.out_path + "'");
  file << payload;
}

void put_physical(Json& doc, const Config& c, const std::string& key, double wavelengths,
                  const ApertureSpec& spec) {
  if (c.lambda_m) doc[key] = wavelengths * spec.wavelength();
}

// ---------------------------------------------------------------------------
// commands
// ---------------------------------------------------------------------------

double single_model_residual(const BoundaryValue& b, ObservationAngle theta,
                             const ApertureSpec& spec) {
  if (b.distance == 0.0) return 0.0;
  const auto t = expansion_terms(b.distance, theta, 0.5 * spec.aperture_wavelengths(), 1.0);
  const double phase = b.kind == BoundaryKind::FraunhoferSingle ? t.t2 : std::abs(t.t3);
  return (phase - kPhaseLimit) / kPhaseLimit;
}

int cmd_boundary(const Config& c, const SolverOptions& opts, std::ostream& out) {
  const ApertureSpec spec = build_spec(c);
  const auto theta = ObservationAngle::degrees(c.theta);
  const bool fraunhofer = c.kind == "fraunhofer";
  BoundaryValue b{};
  double residual = 0.0;
  if (c.model == "single") {
    b = fraunhofer ? fraunhofer_single(theta, spec) : fresnel_single(theta, spec);
    residual = single_model_residual(b, theta, spec);
  } else {
    b = fraunhofer ? fraunhofer_array(theta, spec) : fresnel_array(theta, spec, opts);
    residual = fraunhofer ? fraunhofer_equation_residual(b.distance, theta, spec)
                          : fresnel_equation_residual(b.distance, theta, spec);
  }
  Json doc;
  doc["kind"] = c.kind;
  doc["model"] = c.model;
  doc["theta_deg"] = c.theta;
  doc["D_over_lambda"] = spec.aperture_wavelengths();
  doc["distance_wavelengths"] = b.distance;
  put_physical(doc, c, "distance_m", b.distance, spec);
  doc["branch"] = to_string(b.branch);
  doc["residual"] = residual;
  emit(c, render(doc, c.format), out);
  return kExitOk;
}

int cmd_angles(const Config& c, const SolverOptions& opts, std::ostream& out) {
  const ApertureSpec spec = build_spec(c);
  spec.require_array();
  constexpr double kDeg = 180.0 / kPi;
  const SwitchAngles angles = switch_angles(spec, opts);
  const double approx = fraunhofer_array_angle(spec, AngleMode::Approximate, opts);
  const double dF = max_fraunhofer_array(spec, opts);
  const double dN = max_fresnel_array(spec);

  Json doc;
  doc["D_over_lambda"] = spec.aperture_wavelengths();
  doc["theta_F_exact_deg"] = angles.theta_F * kDeg;
  doc["theta_F_approx_deg"] = approx * kDeg;
  doc["theta_F_diff_deg"] = (angles.theta_F - approx) * kDeg;
  doc["theta_N1_deg"] = angles.theta_N1 * kDeg;
  doc["theta_N2_deg"] = angles.theta_N2 * kDeg;
  doc["theta_N1_mirror_deg"] = angles.theta_N1_mirror * kDeg;
  doc["theta_N2_mirror_deg"] = angles.theta_N2_mirror * kDeg;
  doc["dF_max_wavelengths"] = dF;
  doc["dN_max_wavelengths"] = dN;
  doc["dF_max_single_wavelengths"] = max_fraunhofer_single(spec);
  doc["dN_max_single_wavelengths"] = max_fresnel_single(spec);
  put_physical(doc, c, "dF_max_m", dF, spec);
  put_physical(doc, c, "dN_max_m", dN, spec);
  emit(c, render(doc, c.format), out);
  return kExitOk;
}

int cmd_sweep(const Config& c, const SolverOptions& opts, std::ostream& out) {
  const ApertureSpec spec = build_spec(c);
  std::vector<SweepRow> rows = sweep(spec, {c.theta_start, c.theta_end, c.steps}, opts);
  if (c.meters) {
    if (!c.lambda_m) throw UsageError("--meters requires --lambda-m");
    scale_distances(rows, spec.wavelength());
  }
  std::string payload;
  if (c.format == "json") {
    payload = to_json(rows).dump(2) + "\n";
  } else if (c.format == "svg") {
    payload = to_svg(rows, c.style == "polar" ? SvgStyle::Polar : SvgStyle::Cartesian);
  } else {
    payload = to_csv(rows);
  }
  emit(c, payload, out);
  return kExitOk;
}

int cmd_classify(const Config& c, const SolverOptions& opts, std::ostream& out) {
  const ApertureSpec spec = build_spec(c);
  if (c.r.has_value() == c.r_m.has_value()) {
    throw UsageError("give exactly one of --r (wavelengths) or --r-m (meters)");
  }
  if (c.r_m && !c.lambda_m) throw UsageError("--r-m requires --lambda-m");
  const double r = c.r ? *c.r : *c.r_m / spec.wavelength();
  const auto theta = ObservationAngle::degrees(c.theta);
  const Model model = c.model == "single" ? Model::Single : Model::Array;
  const Region region = classify(r, theta, spec, model, opts);
  const double dF = model == Model::Array ? fraunhofer_array(theta, spec).distance
                                          : fraunhofer_single(theta, spec).distance;
  const double dN = model == Model::Array ? fresnel_array(theta, spec, opts).distance
                                          : fresnel_single(theta, spec).distance;
  Json doc;
  doc["r_wavelengths"] = r;
  doc["theta_deg"] = c.theta;
  doc["model"] = c.model;
  doc["D_over_lambda"] = spec.aperture_wavelengths();
  doc["region"] = to_string(region);
  doc["fraunhofer_wavelengths"] = dF;
  doc["fresnel_wavelengths"] = dN;
  doc["non_radiative_radius_wavelengths"] = kNonRadiativeRadius;
  doc["non_radiative_is_heuristic"] = true;
  emit(c, render(doc, c.format), out);
  return kExitOk;
}

int cmd_validate(const Config& c, const SolverOptions& opts, std::ostream& out) {
  const ApertureSpec spec = build_spec(c);
  spec.require_array();
  const ValidationReport report = validate_all(spec, c.grid, opts);
  Json doc = to_json(report);
  if (c.diagnostic) {
    const bool enforced = spec.aperture_wavelengths() >= kDiagnosticMinAperture;
    Json diag = Json::array();
    for (double deg : {60.0, 90.0}) {
      const auto theta = ObservationAngle::degrees(deg);
      const double exact = exact_residual_boundary(theta, spec, opts);
      const double truncated = oracle_fraunhofer(theta, spec, opts);
      const double gap = std::abs(exact - truncated) / truncated;
      Json d;
      d["theta_deg"] = deg;
      d["exact_wavelengths"] = exact;
      d["truncated_wavelengths"] = truncated;
      d["rel_gap"] = gap;
      d["tolerance"] = kDiagnosticTolerance;
      d["enforced"] = enforced;
      d["pass"] = gap <= kDiagnosticTolerance;
      diag.push_back(std::move(d));
    }
    doc["diagnostic"] = std::move(diag);
  }
  emit(c, render(doc, c.format), out);
  return report.pass ? kExitOk : kExitValidationFailed;
}

void add_common(CLI::App* sub, Config& c, std::vector<std::string> formats) {
  sub->add_option("--D-lambda", c.d_lambda, "largest aperture dimension D in wavelengths");
  sub->add_option("--D-m", c.d_m, "largest aperture dimension D in meters");
  sub->add_option("--lambda-m", c.lambda_m, "wavelength in meters");
  sub->add_option("--elements", c.elements, "ULA element count N (D = (N-1) * spacing)");
  sub->add_option("--spacing", c.spacing, "ULA element spacing in wavelengths")
      ->capture_default_str();
  sub->add_option("--tolerance", c.tolerance, "relative solver tolerance, (0, 1e-6]");
  sub->add_option("--format", c.format, "output format (default: text, csv for sweep)")
      ->check(CLI::IsMember(std::move(formats)));
  sub->add_option("--out", c.out_path, "write output to this file");
  sub->add_option("--config", c.config_path, "JSON file with defaults for these flags");
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Near-field / far-field boundary calculator for antennas and phased arrays",
               "nearfield"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  auto* boundary = app.add_subcommand("boundary", "boundary distance at one angle");
  add_common(boundary, c, {"text", "json"});
  boundary->add_option("kind", c.kind, "fraunhofer or fresnel")
      ->required()
      ->check(CLI::IsMember({"fraunhofer", "fresnel"}));
  boundary->add_option("--model", c.model, "single or array")
      ->check(CLI::IsMember({"single", "array"}))
      ->capture_default_str();
  boundary->add_option("--theta", c.theta, "observation angle in degrees")->required();

  auto* angles = app.add_subcommand("angles", "switch angles and maximum distances");
  add_common(angles, c, {"text", "json"});

  auto* sweep_cmd = app.add_subcommand("sweep", "boundary atlas over an angle range");
  add_common(sweep_cmd, c, {"csv", "json", "svg", "text"});
  sweep_cmd->add_option("--theta-start", c.theta_start, "first angle, degrees")
      ->capture_default_str();
  sweep_cmd->add_option("--theta-end", c.theta_end, "last angle, degrees")->capture_default_str();
  sweep_cmd->add_option("--steps", c.steps, "number of angles (inclusive grid)")
      ->capture_default_str();
  sweep_cmd->add_option("--style", c.style, "svg style")
      ->check(CLI::IsMember({"cartesian", "polar"}))
      ->capture_default_str();
  sweep_cmd->add_flag("--meters", c.meters, "emit distances in meters (needs --lambda-m)");

  auto* classify_cmd = app.add_subcommand("classify", "region of a point (r, theta)");
  add_common(classify_cmd, c, {"text", "json"});
  classify_cmd->add_option("--r", c.r, "range in wavelengths");
  classify_cmd->add_option("--r-m", c.r_m, "range in meters");
  classify_cmd->add_option("--theta", c.theta, "observation angle in degrees")->required();
  classify_cmd->add_option("--model", c.model, "single or array")
      ->check(CLI::IsMember({"single", "array"}))
      ->capture_default_str();

  auto* validate_cmd = app.add_subcommand("validate", "closed forms against the oracle");
  add_common(validate_cmd, c, {"text", "json"});
  validate_cmd->add_option("--grid", c.grid, "theta grid size (>= 16)")->capture_default_str();
  validate_cmd->add_flag("--diagnostic", c.diagnostic,
                         "also compare against the exact-geometry residual boundary");

  try {
    std::vector<std::string> args = expand_config(raw_args);
    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    SolverOptions opts;
    opts.rel_tol = resolve_tolerance(c);
    if (boundary->parsed()) return cmd_boundary(c, opts, out);
    if (angles->parsed()) return cmd_angles(c, opts, out);
    if (sweep_cmd->parsed()) return cmd_sweep(c, opts, out);
    if (classify_cmd->parsed()) return cmd_classify(c, opts, out);
    if (validate_cmd->parsed()) return cmd_validate(c, opts, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidationFailed;
  }
  return kExitUsage;
}

}  // namespace nearfield::cli
