#include <chrono>
#include <cmath>

#include <gtest/gtest.h>

#include "nearfield/oracle.hpp"
#include "nearfield/phased_array.hpp"

using namespace nearfield;

namespace {

ObservationAngle deg(double d) { return ObservationAngle::degrees(d); }
ApertureSpec D(double a) { return ApertureSpec::normalized(a); }

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

double h_F(double r, ObservationAngle th, const ApertureSpec& s) {
  return expansion_terms(r, th, s.aperture_wavelengths() / 2 + delta_d(r, th, s), 1.0).t2;
}
double h_N(double r, ObservationAngle th, const ApertureSpec& s) {
  return std::abs(
      expansion_terms(r, th, s.aperture_wavelengths() / 2 + delta_d(r, th, s), 1.0).t3);
}

}  // namespace

TEST(OracleFraunhofer, Examples) {
  for (double a : {0.5, 1.0, 4.5, 19.5, 100.0}) {
    EXPECT_LE(rel(oracle_fraunhofer(deg(90), D(a)), 2 * a * a), 1e-10) << a;
  }
  EXPECT_LE(rel(oracle_fraunhofer(deg(45), D(1)), 4.0), 1e-9);
  EXPECT_LE(rel(oracle_fraunhofer(deg(89.9), D(19.5)),
                fraunhofer_array(deg(89.9), D(19.5)).distance),
            1e-9);
  EXPECT_LE(rel(oracle_fraunhofer(deg(89.5), D(4.5)), 62.51592131928687), 1e-9);
  EXPECT_LE(rel(oracle_fraunhofer(deg(5), D(0.5)), 0.003917567657793439), 1e-9);
  EXPECT_THROW(oracle_fraunhofer(deg(0), D(1)), DegenerateError);
  EXPECT_THROW(oracle_fraunhofer(deg(180), D(1)), DegenerateError);
  EXPECT_THROW(oracle_fraunhofer(deg(45), D(0.3)), DomainError);
}

TEST(OracleFresnel, Examples) {
  EXPECT_NEAR(oracle_fresnel(deg(54.7356), D(1)), 1.75, 0.005);
  EXPECT_LE(rel(oracle_fresnel(deg(54.7356), D(1)), 1.7547653506033233), 1e-9);
  EXPECT_LE(rel(oracle_fresnel(ObservationAngle::radians(std::atan(std::sqrt(2.0))), D(1)),
                1.7547653506033233),
            1e-9);
  EXPECT_LE(rel(oracle_fresnel(deg(80), D(4.5)), fresnel_array(deg(80), D(4.5)).distance), 1e-9);
  EXPECT_LE(rel(oracle_fresnel(deg(80), D(4.5)), 8.137810323695235), 1e-9);

  // Cap identity at the first switch angle. The true switch for D = 0.5 is
  // 15.302 degrees; at 15.1 the root sits 4.4 % below the cap.
  const auto sw = fresnel_switch_angles(D(0.5));
  const auto at_switch = ObservationAngle::radians(sw.theta_N1);
  EXPECT_LE(rel(oracle_fresnel(at_switch, D(0.5)), 0.5 / (2 * std::cos(sw.theta_N1))), 1e-9);
  EXPECT_LE(rel(oracle_fresnel(deg(15.1), D(0.5)), 0.247623), 1e-5);

  EXPECT_THROW(oracle_fresnel(deg(90), D(1)), DegenerateError);
  EXPECT_THROW(oracle_fresnel(deg(0), D(1)), DegenerateError);
}

TEST(Oracle, MonotonicitySanity) {
  for (double a : {0.5, 1.0, 4.5, 19.5}) {
    for (double d = 1; d < 180; d += 7.3) {
      const auto th = deg(d);
      const double rF = oracle_fraunhofer(th, D(a));
      EXPECT_GT(h_F(0.5 * rF, th, D(a)), kPhaseLimit);
      EXPECT_LT(h_F(2 * rF, th, D(a)), kPhaseLimit);
      const double rN = oracle_fresnel(th, D(a));
      EXPECT_GT(h_N(0.5 * rN, th, D(a)), kPhaseLimit);
      EXPECT_LT(h_N(2 * rN, th, D(a)), kPhaseLimit);
    }
  }
}

TEST(ExactResidualBoundary, Examples) {
  const double b90 = exact_residual_boundary(deg(90), D(10));
  EXPECT_LE(rel(b90, oracle_fraunhofer(deg(90), D(10))), 0.05);
  EXPECT_NEAR(rel(b90, 200.0), 1.5625e-4, 1e-6);

  const double g10 = rel(exact_residual_boundary(deg(60), D(10)), oracle_fraunhofer(deg(60), D(10)));
  const double g30 = rel(exact_residual_boundary(deg(60), D(30)), oracle_fraunhofer(deg(60), D(30)));
  const double g100 =
      rel(exact_residual_boundary(deg(60), D(100)), oracle_fraunhofer(deg(60), D(100)));
  EXPECT_LE(g10, 0.05);
  EXPECT_LT(g30, g10);
  EXPECT_LT(g100, g30);
  EXPECT_NEAR(g10, 0.00828, 1e-4);

  const double b = exact_residual_boundary(deg(60), D(10));
  const double dp = 5 + delta_d(b, deg(60), D(10));
  EXPECT_NEAR(exact_residual_after_linear(b, deg(60), dp, 1.0), kPhaseLimit, 1e-9);
  EXPECT_THROW(exact_residual_boundary(deg(0), D(10)), DegenerateError);
}

TEST(ValidateAll, Examples) {
  const auto start = std::chrono::steady_clock::now();
  for (double a : {0.5, 1.0, 4.5, 19.5}) {
    const auto rep = validate_all(D(a), 1000);
    EXPECT_TRUE(rep.pass) << a;
    EXPECT_TRUE(rep.fraunhofer.pass);
    EXPECT_TRUE(rep.fresnel.pass);
    EXPECT_LE(rep.fraunhofer.max_rel_error, 1e-9);
    EXPECT_LE(rep.fresnel.max_rel_error, 1e-9);
    EXPECT_EQ(rep.grid_size, 1000);
    EXPECT_EQ(rep.tolerance, kValidationTolerance);
    EXPECT_EQ(rep.aperture_wavelengths, a);
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(secs, 10.0);
  EXPECT_THROW(validate_all(D(1), 8), InvalidArgument);
  EXPECT_THROW(validate_all(D(0.4), 100), DomainError);
}

TEST(ValidateAll, ParallelMatchesSerial) {
  for (double a : {0.5, 4.5, 19.5}) {
    const auto p = validate_all(D(a), 777);
    const auto s = validate_all_serial(D(a), 777);
    EXPECT_EQ(p.fraunhofer.max_rel_error, s.fraunhofer.max_rel_error);
    EXPECT_EQ(p.fraunhofer.theta_at_max, s.fraunhofer.theta_at_max);
    EXPECT_EQ(p.fresnel.max_rel_error, s.fresnel.max_rel_error);
    EXPECT_EQ(p.fresnel.theta_at_max, s.fresnel.theta_at_max);
    EXPECT_EQ(p.pass, s.pass);
  }
}

TEST(ValidateAll, GridAvoidsDegeneracies) {
  for (int n : {16, 17, 100, 1000, 1001}) {
    for (int i = 0; i < n; ++i) {
      const double t = validation_grid_angle(i, n);
      EXPECT_GE(t, kDegeneracyGuard * 0.999);
      EXPECT_LE(t, kPi - kDegeneracyGuard * 0.999);
      EXPECT_GE(std::abs(t - kHalfPi), kDegeneracyGuard * 0.999);
    }
  }
}
