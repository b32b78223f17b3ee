#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rotosc/model.hpp"

#include <cmath>

using namespace rotosc;

TEST_CASE("potential value") {
  CHECK(potential_value(ModelParams(0, 0.0), 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(potential_value(ModelParams(1, 0.0), 1.0) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(potential_value(ModelParams(0, std::sqrt(2.0)), 1.0) ==
        doctest::Approx(1.0 - std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(potential_value(ModelParams(0, 1.0), 0.0), std::domain_error);
  CHECK_THROWS_AS(potential_value(ModelParams(0, 1.0), -0.5), std::domain_error);
  CHECK_THROWS_AS(ModelParams(-1, 0.0), std::domain_error);
}

TEST_CASE("potential coupling monotonicity: d(potential)/da = -q < 0") {
  for (double q : {0.3, 1.0, 2.5, 7.0}) {
    const double h = 1e-7;
    const double slope = (potential_value(ModelParams(2, 1.0 + h), q) -
                          potential_value(ModelParams(2, 1.0 - h), q)) /
                         (2 * h);
    CHECK(slope == doctest::Approx(-q).epsilon(1e-6));
  }
}

TEST_CASE("W <-> Etilde conversion") {
  const auto ctx = ConversionContext::from_alpha(0.5);
  CHECK(w_from_etilde(ctx, 4.0) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(w_from_etilde(ctx, 0.0) == doctest::Approx(-1.0).epsilon(1e-15));
  for (double x : {-1.0, 0.0, 7.25})
    CHECK(etilde_from_w(ctx, w_from_etilde(ctx, x)) == doctest::Approx(x).epsilon(1e-14));
  CHECK_THROWS_AS(ConversionContext::from_alpha(0.0), std::domain_error);
  CHECK_THROWS_AS(ConversionContext::from_alpha(-2.0), std::domain_error);
}

TEST_CASE("alpha <-> a conversion") {
  const auto ctx = ConversionContext::from_alpha(0.5);
  CHECK(ctx.coupling_a() == doctest::Approx(2.0).epsilon(1e-15));
  // alpha^2 = hbar^2/(4 m k r_e^4)
  const auto dim = ConversionContext::from_dimensional(2.0, 8.0, 0.5, 1.0);
  CHECK(dim.alpha == doctest::Approx(1.0 / (2.0 * 0.25 * 4.0)).epsilon(1e-14));
  CHECK(dim.mass.has_value());
  // round trip through a: a = sqrt(2/alpha) => alpha = 2/a^2
  const double a = ctx.coupling_a();
  CHECK(2.0 / (a * a) == doctest::Approx(ctx.alpha).epsilon(1e-14));
}

TEST_CASE("lambda from W") {
  // W = 2n+2l+3 - a^2/4 at (n,l,a)=(1,0,sqrt 2) gives W=4.5, lambda=2
  CHECK(lambda_from_w(4.5, std::sqrt(2.0)) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(lambda_from_w(3.0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(lambda_from_w(5.5, std::sqrt(6.0)) == doctest::Approx(3.0).epsilon(1e-14));
}
