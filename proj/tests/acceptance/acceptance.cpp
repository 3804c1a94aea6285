// Acceptance checks, one line per criterion. With no arguments every
// criterion runs; otherwise only the listed numbers. Exit status is nonzero
// if any selected criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "nearfield/atlas.hpp"
#include "nearfield/oracle.hpp"
#include "nearfield/phased_array.hpp"
#include "nearfield/single_element.hpp"

using namespace nearfield;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, format, a);
  return buf;
}

double to_deg(double rad) { return rad * 180.0 / kPi; }
ApertureSpec D(double a) { return ApertureSpec::normalized(a); }

const double kFigureApertures[] = {0.5, 1.0, 4.5, 19.5};

Outcome fresnel_constant() {
  bool ok = true;
  double lo = 1e9, hi = -1e9;
  for (double a : kFigureApertures) {
    const double c = max_fresnel_array(D(a)) / std::sqrt(a * a * a);
    ok = ok && std::abs(c - 1.75) <= 0.01;
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  for (double a : {0.7, 2.0, 50.0, 100.0}) {
    const double c = max_fresnel_array(D(a)) / std::sqrt(a * a * a);
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  ok = ok && (hi - lo) <= 1e-6;
  return {ok, "constant " + fmt("%.7f", lo) + ", spread over D " + fmt("%.1e", hi - lo)};
}

Outcome sqrt8_ratio() {
  double worst = 0;
  for (double a : {0.5, 1.0, 4.5, 10.0, 19.5, 100.0}) {
    const double r = max_fresnel_array(D(a)) / max_fresnel_single(D(a));
    worst = std::max(worst, std::abs(r - 2.828427));
  }
  // 2.828427 is sqrt(8) to 7 digits; its own rounding is 1.2e-7.
  const double exact_worst = [] {
    double w = 0;
    for (double a : {0.5, 1.0, 4.5, 10.0, 19.5, 100.0}) {
      w = std::max(w, std::abs(max_fresnel_array(D(a)) / max_fresnel_single(D(a)) -
                               std::sqrt(8.0)));
    }
    return w;
  }();
  const bool ok = exact_worst <= 1e-9 && worst <= 1e-6;
  return {ok, "max |ratio - sqrt 8| " + fmt("%.1e", exact_worst)};
}

Outcome fourfold_fraunhofer() {
  bool ok = true;
  for (double a : {0.5, 1.0, 4.5, 10.0, 19.5, 100.0}) {
    const double tf = fraunhofer_array_angle(D(a));
    const double r = max_fraunhofer_array(D(a)) / max_fraunhofer_single(D(a));
    const double floor = 4 * std::cos(tf) * std::cos(tf);
    ok = ok && r >= floor * (1 - 1e-12) && r <= 4.0;
  }
  const double r195 = max_fraunhofer_array(D(19.5)) / max_fraunhofer_single(D(19.5));
  ok = ok && std::abs(r195 - 4.0) <= 1e-4;
  return {ok, "ratio at D/lambda 19.5 = " + fmt("%.8f", r195)};
}

Outcome published_constants() {
  const double f_inv = 90.0 - to_deg(fraunhofer_array_angle(D(0.5)));
  const auto sw = fresnel_switch_angles(D(0.5));
  const double n1 = to_deg(sw.theta_N1);
  const double n2 = to_deg(sw.theta_N2);
  // Grid search for the Fresnel maximiser, 1e-4 degree steps.
  double best = 0, best_deg = 0;
  for (int i = 1; i < 900000; ++i) {
    const double d = i * 1e-4;
    const double v = fresnel_single(ObservationAngle::degrees(d), D(1)).distance;
    if (v > best) {
      best = v;
      best_deg = d;
    }
  }
  const bool f_ok = std::abs(f_inv - 82.7) <= 0.1;
  const bool n1_ok = std::abs(n1 - 15.1) <= 0.1;
  const bool n2_ok = std::abs(n2 - 65.0) <= 0.5;
  const bool star_ok = std::abs(best_deg - 54.74) <= 0.01;
  std::string detail = "F^-1(1) " + fmt("%.4f", f_inv) + (f_ok ? " ok" : " out") +
                       "; G^-1(1) " + fmt("%.4f", n1) + (n1_ok ? " ok" : " out (want 15.1 +/- 0.1)") +
                       ", " + fmt("%.4f", n2) + (n2_ok ? " ok" : " out") + "; theta* " +
                       fmt("%.4f", best_deg) + (star_ok ? " ok" : " out");
  return {f_ok && n1_ok && n2_ok && star_ok, detail};
}

Outcome oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  double worst = 0;
  for (double a : kFigureApertures) {
    const auto rep = validate_all(D(a), 1000);
    ok = ok && rep.pass;
    worst = std::max({worst, rep.fraunhofer.max_rel_error, rep.fresnel.max_rel_error});
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok = ok && worst <= 1e-9 && secs < 10.0;
  return {ok, "max rel error " + fmt("%.2e", worst) + " in " + fmt("%.2f", secs) + " s"};
}

Outcome branch_continuity() {
  const double eps = 1e-8;
  double worst_F = 0, worst_N = 0;
  auto gap = [&](auto boundary, double s, const ApertureSpec& spec) {
    const double lo = boundary(ObservationAngle::radians(s - eps), spec).distance;
    const double hi = boundary(ObservationAngle::radians(s + eps), spec).distance;
    return std::abs(lo - hi) / std::max(lo, hi);
  };
  auto F = [](ObservationAngle t, const ApertureSpec& s) { return fraunhofer_array(t, s); };
  auto N = [](ObservationAngle t, const ApertureSpec& s) { return fresnel_array(t, s); };
  for (double a : {0.5, 1.0, 4.5, 19.5, 100.0}) {
    const auto sw = switch_angles(D(a));
    for (double s : {kHalfPi - sw.theta_F, kHalfPi + sw.theta_F}) {
      worst_F = std::max(worst_F, gap(F, s, D(a)));
    }
    for (double s : {sw.theta_N1, sw.theta_N2, sw.theta_N1_mirror, sw.theta_N2_mirror}) {
      worst_N = std::max(worst_N, gap(N, s, D(a)));
    }
  }
  return {worst_F <= 1e-6 && worst_N <= 1e-6, "max relative jump fraunhofer " +
                                                   fmt("%.2e", worst_F) + ", fresnel " +
                                                   fmt("%.2e", worst_N)};
}

Outcome figure_reproduction() {
  bool ok = true;
  std::string detail;
  for (int n : {1, 3, 10, 40}) {
    // N = 1 is one element of width equal to the spacing.
    const auto spec = n == 1 ? D(0.5) : ApertureSpec::uniform_linear_array(n, 0.5);
    const double a = spec.aperture_wavelengths();
    const auto rows = parse_csv(to_csv(sweep(spec, {0.0, 180.0, 721})));
    bool n_ok = rows.size() == 721;
    auto near = [](double x, double y) { return std::abs(x - y) <= 1e-9 * std::max(1.0, std::abs(y)); };
    for (const auto& r : rows) {
      if (r.theta_deg == 90.0) {
        n_ok = n_ok && near(r.dF_array, 2 * a * a) && r.dN_array == 0.0;
      }
      if (r.theta_deg == 45.0) n_ok = n_ok && near(r.dF_array, 4 * r.dF_single);
      n_ok = n_ok && r.dF_array >= r.dF_single * (1 - 1e-9) &&
             r.dN_array >= r.dN_single * (1 - 1e-9);
    }
    ok = ok && n_ok;
    detail += "N=" + std::to_string(n) + (n_ok ? " ok " : " bad ");
  }
  return {ok, detail};
}

Outcome approximation_bound() {
  double worst = 0, at = 0;
  for (int i = 0; i < 50; ++i) {
    const double a = 0.5 * std::pow(200.0, i / 49.0);
    const double g = std::abs(to_deg(fraunhofer_array_angle(D(a))) -
                              to_deg(fraunhofer_array_angle(D(a), AngleMode::Approximate)));
    if (g > worst) {
      worst = g;
      at = a;
    }
  }
  return {worst <= 0.2, "max gap " + fmt("%.4f", worst) + " deg at D/lambda " + fmt("%.3g", at)};
}

Outcome property_suites() {
  constexpr int kCases = 10000;
  std::mt19937_64 rng(20240617);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto aperture = [&] { return 0.5 * std::pow(200.0, u(rng)); };
  auto angle = [&] { return ObservationAngle::radians(kPi * u(rng)); };
  int failures = 0, cases = 0;

  for (int i = 0; i < kCases; ++i, ++cases) {
    const auto spec = D(aperture());
    const auto t = angle();
    const auto m = t.mirrored();
    const double fa = fraunhofer_array(t, spec).distance, na = fresnel_array(t, spec).distance;
    const double fs = fraunhofer_single(t, spec).distance, ns = fresnel_single(t, spec).distance;
    const double tol = 1e-12 + 4e-15 / t.sin();
    auto same = [tol](double x, double y) { return std::abs(x - y) <= tol * std::max(x, y); };
    bool ok = same(fa, fraunhofer_array(m, spec).distance) &&
              same(na, fresnel_array(m, spec).distance) &&
              same(fs, fraunhofer_single(m, spec).distance) &&
              same(ns, fresnel_single(m, spec).distance);
    ok = ok && fa >= fs * (1 - 1e-9) && fa <= 4 * fs * (1 + 1e-9) &&
         na >= ns * (1 - 1e-9) && na <= std::sqrt(8.0) * ns * (1 + 1e-9);
    ok = ok && std::abs(fraunhofer_equation_residual(fa, t, spec)) <= 1e-9 &&
         std::abs(fresnel_equation_residual(na, t, spec)) <= 1e-9;
    failures += ok ? 0 : 1;
  }

  for (int i = 0; i < 100; ++i) {
    const auto spec = D(aperture());
    const double start = 170.0 * u(rng);
    const double end = start + 1.0 + (179.0 - start) * u(rng);
    const auto rows = sweep(spec, {start, end, 100});
    const std::string csv = to_csv(rows);
    const auto back = parse_csv(csv);
    bool ok = csv == to_csv(rows) && to_csv(back) == csv && back.size() == rows.size();
    for (std::size_t k = 0; ok && k < rows.size(); ++k, ++cases) {
      for (auto col : {&SweepRow::theta_deg, &SweepRow::dF_array, &SweepRow::dN_array,
                       &SweepRow::dF_single, &SweepRow::dN_single}) {
        ok = ok && std::abs(back[k].*col - rows[k].*col) <= 5e-12 * std::abs(rows[k].*col);
      }
      ok = ok && back[k].branch_F == rows[k].branch_F && back[k].branch_N == rows[k].branch_N;
    }
    const auto j = to_json(rows);
    ok = ok && j.dump() == to_json(rows).dump() &&
         rows_from_json(nlohmann::ordered_json::parse(j.dump())) == rows;
    failures += ok ? 0 : 1;
  }
  return {failures == 0, std::to_string(failures) + " failures in " + std::to_string(cases) +
                             " randomized cases"};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"fresnel maximum constant", fresnel_constant},
      {"sqrt 8 ratio", sqrt8_ratio},
      {"fourfold fraunhofer", fourfold_fraunhofer},
      {"published angle constants", published_constants},
      {"oracle equivalence", oracle_equivalence},
      {"branch continuity", branch_continuity},
      {"figure reproduction", figure_reproduction},
      {"theta_F approximation bound", approximation_bound},
      {"property suites", property_suites},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty()) {
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) selected.push_back(i);
  }
  int failed = 0;
  for (int id : selected) {
    if (id < 1 || id > static_cast<int>(criteria.size())) {
      std::fprintf(stderr, "unknown criterion %d\n", id);
      return 2;
    }
    const auto& c = criteria[id - 1];
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, c.name, o.detail.c_str());
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
