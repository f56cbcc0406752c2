#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

#include "gratio/enclosures.hpp"

using namespace gratio;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("series_G anchors") {
  CHECK(series_G(0, 0.3, 2.0) == 0.0);
  for (double x : {0.1, 0.3, 0.5}) {
    for (double t : {0.5, 2.0, 9.0}) {
      CHECK_THAT(series_G(1, x, t), WithinAbs((x * x - x) / t, 1e-16));
    }
  }
  CHECK_THAT(series_G(1, 0.5, 4.0), WithinAbs(-1.0 / 16.0, 1e-17));
  CHECK_THROWS_AS(series_G(-1, 0.3, 1.0), std::domain_error);
  CHECK_THROWS_AS(series_G(1, 0.7, 1.0), std::domain_error);
  CHECK_THROWS_AS(series_G(1, 0.3, 0.0), std::domain_error);
}

TEST_CASE("series_H anchors") {
  CHECK(series_H(0, 0.2, 3.0) == 0.0);
  CHECK(series_H(1, 0.25, 1.0) == 1.0 / 64.0);
  CHECK(series_H(2, 0.5, 2.0) == 0.0);  // odd polynomials vanish at 1/2
}

TEST_CASE("residual anchors") {
  CHECK_THAT(residual_H(0, 0.0, 3.0).value, WithinAbs(0.0, 1e-10));
  CHECK_THAT(residual_H(0, 0.5, 3.0).value, WithinAbs(0.0, 1e-10));
  CHECK_THAT(residual_G(0, 0.5, 1.0).value, WithinAbs(std::log(4.0 / kPi), 1e-10));
  CHECK(residual_H(2, 1.0 / 3.0, 5.0).value > 0.0);
}

TEST_CASE("residual positivity on an interior grid") {
  for (int m = 0; m <= 3; ++m) {
    for (double x : {0.1, 0.25, 0.45}) {
      for (double t : {0.5, 1.0, 5.0}) {
        CAPTURE(m, x, t);
        CHECK(residual_G(m, x, t).value > 0.0);
        CHECK(residual_H(m, x, t).value > 0.0);
      }
    }
  }
}

TEST_CASE("enclose anchors") {
  const Enclosure h = enclose(RatioKind::kH, 0.25, 2.0, 0, 0);
  CHECK(h.lower == 1.0);
  CHECK_THAT(h.upper, WithinRel(std::exp(1.0 / 256.0), 1e-16));
  const double h_oracle = gamma_ratio_H(0.25, 2.0);
  CHECK(h.lower <= h_oracle);
  CHECK(h_oracle <= h.upper);

  const Enclosure g = enclose(RatioKind::kG, 0.25, 1.0, 0, 0);
  CHECK_THAT(g.lower, WithinRel(std::exp(-3.0 / 16.0), 1e-16));
  CHECK(g.upper == 1.0);
  const double g_oracle = gamma_ratio_G(0.25, 1.0);
  CHECK(g.lower <= g_oracle);
  CHECK(g_oracle <= g.upper);

  CHECK_THROWS_AS(enclose(RatioKind::kG, 0.5, 1.0, 0, 0), std::domain_error);
  CHECK_THROWS_AS(enclose(RatioKind::kG, 0.0, 1.0, 0, 0), std::domain_error);
  CHECK_THROWS_AS(enclose(RatioKind::kG, 0.25, 1.0, -1, 0), std::domain_error);
}

TEST_CASE("enclosures contain the oracle across the grid") {
  for (double x : {0.1, 0.25, 0.4}) {
    for (double t : {0.5, 1.0, 2.0, 5.0}) {
      const double og = gamma_ratio_G(x, t);
      const double oh = gamma_ratio_H(x, t);
      for (int m1 = 0; m1 <= 2; ++m1) {
        for (int m2 = 0; m2 <= 2; ++m2) {
          const Enclosure g = enclose(RatioKind::kG, x, t, m1, m2);
          const Enclosure h = enclose(RatioKind::kH, x, t, m1, m2);
          CAPTURE(x, t, m1, m2);
          CHECK(g.lower <= g.upper);
          CHECK(g.lower > 0.0);
          CHECK(g.lower <= og);
          CHECK(og <= g.upper);
          CHECK(h.lower <= oh);
          CHECK(oh <= h.upper);
        }
      }
    }
  }
}

TEST_CASE("enclosures tighten with the order for moderate t") {
  for (double x : {0.1, 0.25, 0.4}) {
    for (double t : {2.0, 5.0, 10.0}) {
      for (int m = 0; m <= 1; ++m) {
        CAPTURE(x, t, m);
        CHECK(enclose(RatioKind::kG, x, t, m + 1, m + 1).width() <
              enclose(RatioKind::kG, x, t, m, m).width());
        CHECK(enclose(RatioKind::kH, x, t, m + 1, m + 1).width() <
              enclose(RatioKind::kH, x, t, m, m).width());
      }
    }
  }
}

TEST_CASE("integral representations match the residuals") {
  CHECK_THAT(integral_H(1, 0.5, 2.0).value, WithinAbs(0.0, 1e-12));
  CHECK(integral_G(0, 0.0, 2.0).value == 0.0);
  CHECK(integral_H(2, 1.0 / 3.0, 3.0).value > 0.0);
  const ValueErr g_half = integral_G(0, 0.5, 1.0);
  CHECK_THAT(g_half.value, WithinAbs(std::log(4.0 / kPi), 1e-8 + g_half.err));
  for (int m : {0, 1, 2}) {
    for (double x : {0.25, 1.0 / 3.0}) {
      for (double t : {1.0, 2.0, 5.0}) {
        const ValueErr ih = integral_H(m, x, t);
        const ValueErr rh = residual_H(m, x, t);
        CAPTURE(m, x, t);
        CHECK_THAT(ih.value, WithinAbs(rh.value, 1e-8 + ih.err + rh.err));
        const ValueErr ig = integral_G(m, x, t);
        const ValueErr rg = residual_G(m, x, t);
        CHECK_THAT(ig.value, WithinAbs(rg.value, 1e-8 + ig.err + rg.err));
      }
    }
  }
  const ValueErr ig = integral_G(1, 0.3, 2.0);
  CHECK_THAT(ig.value, WithinAbs(residual_G(1, 0.3, 2.0).value, 1e-8 + ig.err));
}

TEST_CASE("legacy specializations against independently coded forms") {
  auto series_even = [](int m, double t) {
    // sum_{l=1..m} (1 - 2^{-2l}) B_{2l}/(l(2l-1)) t^{-(2l-1)}
    double acc = 0.0;
    for (int l = 1; l <= m; ++l)
      acc += (1.0 - std::pow(2.0, -2.0 * l)) * to_double(bernoulli_number(2 * l)) /
             (l * (2.0 * l - 1.0)) * std::pow(t, 1.0 - 2.0 * l);
    return acc;
  };
  auto series_odd = [](int m, double x, double t) {
    double acc = 0.0;
    for (int l = 1; l <= m; ++l)
      acc += bernoulli_poly_at(2 * l + 1, x) / (l * (2.0 * l + 1.0)) * std::pow(t, -2.0 * l);
    return acc;
  };
  for (int m = 0; m <= 3; ++m) {
    for (double t : {1.0, 2.0, 5.0}) {
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      const double f = sign * (log_gamma(t + 1.0) - 0.5 * std::log(t) - log_gamma(t + 0.5) -
                               series_even(m, t));
      const double u = sign * (log_gamma(t + 2.0 / 3.0) - std::log(t) / 3.0 -
                               log_gamma(t + 1.0 / 3.0) - series_odd(m, 1.0 / 3.0, t));
      const double v = sign * (log_gamma(t + 0.75) - 0.5 * std::log(t) - log_gamma(t + 0.25) -
                               series_odd(m, 0.25, t));
      CAPTURE(m, t);
      CHECK_THAT(legacy(LegacyFn::kF, m, t), WithinAbs(f, 1e-9));
      CHECK_THAT(legacy(LegacyFn::kU, m, t), WithinAbs(u, 1e-9));
      CHECK_THAT(legacy(LegacyFn::kV, m, t), WithinAbs(v, 1e-9));
      // identities tying the specializations back to the general functions
      CHECK_THAT(legacy(LegacyFn::kF, m, t), WithinAbs(residual_G(m, 0.5, t).value / 2.0, 1e-12));
      CHECK_THAT(legacy(LegacyFn::kU, m, t), WithinAbs(residual_H(m, 1.0 / 3.0, t).value, 1e-12));
      CHECK_THAT(legacy(LegacyFn::kV, m, t), WithinAbs(residual_H(m, 0.25, t).value, 1e-12));
      CHECK_THAT(legacy(LegacyFn::kMu, m, t),
                 WithinAbs(2.0 * s_kernel({1.0 / 3.0, t, m}), 1e-15));
      CHECK_THAT(legacy(LegacyFn::kNu, m, t), WithinAbs(2.0 * s_kernel({0.25, t, m}), 1e-15));
      CHECK(legacy(LegacyFn::kMu, m, t) > 0.0);
      CHECK(legacy(LegacyFn::kNu, m, t) > 0.0);
    }
  }
  CHECK_THAT(legacy(LegacyFn::kF, 0, 1.0), WithinAbs(std::log(4.0 / kPi) / 2.0, 1e-10));
  CHECK_THAT(legacy(LegacyFn::kU, 0, 5.0), WithinAbs(residual_H(0, 1.0 / 3.0, 5.0).value, 1e-12));
}

TEST_CASE("classical inequality families") {
  for (auto fam :
       {InequalityFamily::kHalf, InequalityFamily::kThird, InequalityFamily::kTwoThirds}) {
    const GridReport r = classical_inequality_check(fam, 1000);
    CAPTURE(to_string(fam));
    CHECK(r.rows.size() == 1000);
    CHECK(r.failures() == 0);
  }
  // left-side equality at n = 1 for the HALF family: 1/sqrt(4) = 1/2 exactly
  const GridReport r1 = classical_inequality_check(InequalityFamily::kHalf, 1);
  REQUIRE(r1.rows.size() == 1);
  CHECK_THAT(r1.rows[0].lower, WithinAbs(0.5, 1e-15));
  CHECK(r1.rows[0].value == 0.5);
  CHECK_THROWS_AS(classical_inequality_check(InequalityFamily::kHalf, 0), std::domain_error);
}

TEST_CASE("grid report CSV and JSON round out consistently") {
  const GridReport r = classical_inequality_check(InequalityFamily::kThird, 3);
  std::ostringstream csv;
  r.write_csv(csv);
  const std::string text = csv.str();
  CHECK(text.rfind("label,x,t,m,n,k,h,lower,value,upper,", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);  // header + 3 rows
  const auto j = r.to_json();
  REQUIRE(j.is_array());
  CHECK(j.size() == 3);
  CHECK(j[0]["status"] == "pass");
  CHECK(j[0].contains("lower"));
  std::ostringstream csv2;
  r.write_csv(csv2);
  CHECK(csv.str() == csv2.str());  // byte-identical on repeat
}
