#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "gratio/monotonicity.hpp"

using namespace gratio;
using Catch::Matchers::WithinAbs;

TEST_CASE("finite differences pass on canonical completely monotone functions") {
  // h = 0.05 keeps the noise band (err * 2^k / h^k) below the k = 6
  // differences of e^{-t} out to t = 10
  const std::vector<double> grid = {0.5, 1.0, 2.0, 5.0, 10.0};
  const CMReport exp_report =
      cm_finite_difference([](double t) { return std::exp(-t); }, 1e-16, grid, 6, 0.05, "exp(-t)");
  CHECK(exp_report.verdict == "pass");
  CHECK(exp_report.worst_violation >= -1e-12);

  const CMReport inv_report =
      cm_finite_difference([](double t) { return 1.0 / t; }, 1e-16, grid, 6, 0.05, "1/t");
  CHECK(inv_report.verdict == "pass");
}

TEST_CASE("finite differences fail on a non-monotone function") {
  const std::vector<double> grid = {1.0, 2.0, 4.0};
  const CMReport r =
      cm_finite_difference([](double t) { return std::sin(t); }, 1e-16, grid, 4, 1e-2, "sin");
  CHECK(r.verdict == "fail");
  CHECK(r.worst_violation < 0.0);
}

TEST_CASE("finite differences flag values inside the noise band as indeterminate") {
  const std::vector<double> grid = {1.0};
  // constant zero with a claimed error: every difference sits inside the band
  const CMReport r =
      cm_finite_difference([](double) { return 0.0; }, 1e-8, grid, 3, 1e-2, "zero");
  CHECK(r.verdict == "indeterminate");
  CHECK(r.rows.failures() == 0);
}

TEST_CASE("finite difference argument checks") {
  auto f = [](double t) { return std::exp(-t); };
  CHECK_THROWS_AS(cm_finite_difference(f, 1e-16, {1.0}, 6, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(cm_finite_difference(f, 1e-16, {1.0}, 13, 1e-2), std::invalid_argument);
  CHECK_THROWS_AS(cm_finite_difference(f, 1e-16, {}, 6, 1e-2), std::invalid_argument);
  CHECK_THROWS_AS(cm_finite_difference(f, 1e-16, {0.05}, 6, 1e-2), std::invalid_argument);
}

TEST_CASE("residual H(m=1, x=1/3) passes the difference route on [1,10]") {
  const std::vector<double> grid = {1.0, 2.0, 4.0, 7.0, 10.0};
  const CMReport r = cm_finite_difference(
      [](double t) { return residual_H(1, 1.0 / 3.0, t).value; }, 1e-11, grid, 6, cm_step(1.0),
      "H_1(1/3,.)");
  CHECK(r.verdict != "fail");
  CHECK(r.rows.failures() == 0);
}

TEST_CASE("derivative integral anchors") {
  CHECK_THAT(cm_derivative_integral(RatioKind::kH, 0, 0.5, 2.0, 3).value, WithinAbs(0.0, 1e-12));
  const ValueErr k0 = cm_derivative_integral(RatioKind::kH, 1, 0.25, 2.0, 0);
  const ValueErr ih = integral_H(1, 0.25, 2.0);
  CHECK_THAT(k0.value, WithinAbs(ih.value, 1e-12));
  CHECK_THROWS_AS(cm_derivative_integral(RatioKind::kH, 0, 0.25, 2.0, -1), std::domain_error);
  CHECK_THROWS_AS(cm_derivative_integral(RatioKind::kH, 0, 0.25, 0.0, 1), std::domain_error);
}

TEST_CASE("derivative integrals are nonnegative across the grid") {
  for (RatioKind kind : {RatioKind::kG, RatioKind::kH}) {
    for (int m : {0, 1, 2}) {
      for (double x : {0.1, 1.0 / 3.0, 0.45}) {
        for (double t : {0.5, 2.0, 10.0}) {
          for (int k : {0, 1, 3, 6}) {
            const ValueErr v = cm_derivative_integral(kind, m, x, t, k);
            CAPTURE(m, x, t, k);
            CHECK(v.value >= -v.err);
          }
        }
      }
    }
  }
}

TEST_CASE("derivative integrals match central differences of the residuals") {
  for (RatioKind kind : {RatioKind::kG, RatioKind::kH}) {
    for (int m : {0, 1}) {
      const double x = 0.3, t = 2.0, h = 1e-2;
      auto f = [&](double tt) {
        return kind == RatioKind::kG ? residual_G(m, x, tt).value : residual_H(m, x, tt).value;
      };
      for (int k = 0; k <= 3; ++k) {
        double fd = 0.0;
        switch (k) {
          case 0: fd = f(t); break;
          case 1: fd = -(f(t + h) - f(t - h)) / (2 * h); break;
          case 2: fd = (f(t + h) - 2 * f(t) + f(t - h)) / (h * h); break;
          case 3:
            fd = -(f(t + 2 * h) - 2 * f(t + h) + 2 * f(t - h) - f(t - 2 * h)) / (2 * h * h * h);
            break;
        }
        const ValueErr v = cm_derivative_integral(kind, m, x, t, k);
        CAPTURE(m, k);
        CHECK_THAT(v.value, WithinAbs(fd, 1e-5));
      }
    }
  }
}

TEST_CASE("difference and integral routes agree in verdict on the residuals") {
  const std::vector<double> grid = {1.0, 2.0, 5.0};
  for (int m : {0, 1}) {
    const CMReport diff = cm_finite_difference(
        [m](double t) { return residual_G(m, 0.25, t).value; }, 1e-11, grid, 4, cm_step(1.0),
        "G residual");
    CHECK(diff.rows.failures() == 0);
    for (double t : grid) {
      for (int k = 0; k <= 4; ++k) {
        const ValueErr v = cm_derivative_integral(RatioKind::kG, m, 0.25, t, k);
        CHECK(v.value >= -v.err);
      }
    }
  }
}
