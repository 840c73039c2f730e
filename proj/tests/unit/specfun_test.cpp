#include <doctest.h>

#include <cmath>

#include "../oracle/oracles.hpp"
#include "proflik/errors.hpp"
#include "proflik/specfun.hpp"

using namespace proflik;

namespace {
// Reference values computed with the quadrature/bisection oracles below and
// cross-checked at 50-digit precision.
constexpr double kErfAtSqrt5Half = 0.88615370197721164;    // erf(1.1180339887)
constexpr double kErfAtHalf = 0.52049987781304654;         // erf(0.5)
constexpr double kZ95 = 1.6448536269514727;                // Phi^-1(0.95)
constexpr double kHalfChi2_95_1 = 1.9207294103470630;
constexpr double kHalfChi2_95_2 = 2.9957322735539910;
constexpr double kLognormalAt2 = -6.0083104753080355;      // logpdf(2; 0, 0.04)
constexpr double kHalfLog2Pi = 0.91893853320467274;
}  // namespace

TEST_CASE("erf matches its defining integral") {
  CHECK(specfun::erf(0.0) == 0.0);

  // quadrature oracle agrees with the frozen constant, and the rational
  // approximation agrees with both
  CHECK(oracle::erf_quadrature(1.1180339887) == doctest::Approx(kErfAtSqrt5Half).epsilon(1e-13));
  CHECK(std::abs(specfun::erf(1.1180339887) - kErfAtSqrt5Half) < 1e-12);
  CHECK(std::abs(specfun::erf(0.5) - kErfAtHalf) < 1e-12);

  for (double x : {0.05, 0.3, 0.7, 1.0, 1.5, 2.2, 3.0, 4.5, 5.5})
    CHECK(std::abs(specfun::erf(x) - oracle::erf_quadrature(x)) < 1e-12);
}

TEST_CASE("erf is odd, strictly increasing and bounded by 1") {
  CHECK(specfun::erf(-0.5) == -specfun::erf(0.5));
  // beyond |x| ~ 5.9 the correctly rounded double is exactly 1, so strict
  // inequalities are only representable on this range
  double prev = specfun::erf(-5.75);
  for (double x = -5.7; x <= 5.75; x += 0.05) {
    const double v = specfun::erf(x);
    CHECK(v > prev);
    CHECK(std::abs(v) < 1.0);
    CHECK(specfun::erf(-x) == -v);
    prev = v;
  }
  CHECK(specfun::erf(6.0) > 1.0 - 1e-15);
  for (double x : {6.0, 10.0, 30.0}) CHECK(specfun::erf(x) <= 1.0);
}

TEST_CASE("erfc complements erf and keeps tail digits") {
  for (double x : {-3.0, -1.0, 0.0, 0.5, 1.0, 2.0})
    CHECK(specfun::erfc(x) == doctest::Approx(1.0 - specfun::erf(x)).epsilon(1e-14));
  // far tail: compare against erfc(x) = 2/sqrt(pi) * int_x^inf e^{-z^2} dz,
  // rescaled to relative terms
  const double x = 6.0;
  const double tail = 1.1283791670955126 *
                      oracle::adaptive_simpson([](double z) { return std::exp(-z * z); }, x, 40.0,
                                               1e-30);
  CHECK(specfun::erfc(x) == doctest::Approx(tail).epsilon(1e-12));
}

TEST_CASE("normal_logpdf anchors") {
  // density at zero residual with unit variance: phi(10;10,1) = 0.399
  CHECK(std::exp(specfun::normal_logpdf(10, 10, 1)) == doctest::Approx(0.399).epsilon(3e-4));
  CHECK(std::exp(specfun::normal_logpdf(8, 10, 1)) == doctest::Approx(0.054).epsilon(2e-4));
  CHECK(specfun::normal_logpdf(10, 10, 1) == doctest::Approx(-kHalfLog2Pi).epsilon(1e-14));
  CHECK(specfun::normal_logpdf(8, 10, 1) == doctest::Approx(-kHalfLog2Pi - 2.0).epsilon(1e-14));
  // zero residual, sigma^2 = 2
  CHECK(specfun::normal_logpdf(0, 0, 2) ==
        doctest::Approx(-0.5 * std::log(2 * 3.14159265358979323846 * 2)).epsilon(1e-14));
  CHECK_THROWS_AS(specfun::normal_logpdf(0, 0, 0), DomainError);
  CHECK_THROWS_AS(specfun::normal_logpdf(0, 0, -1), DomainError);
}

TEST_CASE("normal_logpdf integrates to one") {
  const double mu = 1.7, var = 2.3, sd = std::sqrt(var);
  const double mass = oracle::trapezoid_uniform(
      [&](double x) { return std::exp(specfun::normal_logpdf(x, mu, var)); }, mu - 10 * sd,
      mu + 10 * sd, 200000);
  CHECK(std::abs(mass - 1.0) < 1e-8);
}

TEST_CASE("lognormal_logpdf values and identity") {
  CHECK(specfun::lognormal_logpdf(1.0, 0.0, 0.25) ==
        doctest::Approx(-0.5 * std::log(2 * 3.14159265358979323846 * 0.25)).epsilon(1e-14));
  const double e = std::exp(1.0);
  CHECK(specfun::lognormal_logpdf(e, 1.0, 1.0) ==
        doctest::Approx(-1.0 - kHalfLog2Pi).epsilon(1e-14));
  CHECK(specfun::lognormal_logpdf(2.0, 0.0, 0.04) ==
        doctest::Approx(kLognormalAt2).epsilon(1e-14));

  // exact relation to the normal density
  for (double x : {0.1, 0.5, 1.0, 2.0, 7.3})
    for (double var : {0.04, 0.25, 1.0})
      CHECK(specfun::lognormal_logpdf(x, 0.3, var) ==
            doctest::Approx(specfun::normal_logpdf(std::log(x), 0.3, var) - std::log(x))
                .epsilon(1e-14));

  CHECK_THROWS_AS(specfun::lognormal_logpdf(0.0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(specfun::lognormal_logpdf(-1.0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(specfun::lognormal_logpdf(1.0, 0.0, 0.0), DomainError);
}

TEST_CASE("normal_quantile inverts the CDF") {
  CHECK(specfun::normal_quantile(0.5) == 0.0);
  CHECK(oracle::normal_quantile_bisection(0.95) == doctest::Approx(kZ95).epsilon(1e-9));
  CHECK(std::abs(specfun::normal_quantile(0.95) - kZ95) < 1e-10);
  CHECK(specfun::normal_quantile(0.05) == doctest::Approx(-specfun::normal_quantile(0.95)));

  for (int i = 1; i <= 99; ++i) {
    const double p = i / 100.0;
    const double z = specfun::normal_quantile(p);
    CHECK(std::abs(specfun::normal_cdf(z) - p) < 1e-9);
  }
  // sharper spot checks against bisection on the quadrature CDF
  for (double p : {0.01, 0.2, 0.5, 0.77, 0.999})
    CHECK(std::abs(specfun::normal_quantile(p) - oracle::normal_quantile_bisection(p, 1e-12)) <
          1e-10);

  CHECK_THROWS_AS(specfun::normal_quantile(0.0), DomainError);
  CHECK_THROWS_AS(specfun::normal_quantile(1.0), DomainError);
  CHECK_THROWS_AS(specfun::normal_quantile(-0.2), DomainError);
}

TEST_CASE("chi-square half-quantiles") {
  CHECK(std::abs(specfun::chi2_quantile_halved(0.95, 1) - kHalfChi2_95_1) < 1e-12);
  CHECK(std::abs(specfun::chi2_quantile_halved(0.95, 2) - kHalfChi2_95_2) < 1e-12);
  CHECK(specfun::chi2_quantile_halved(0.5, 2) == doctest::Approx(std::log(2.0)).epsilon(1e-14));

  // dof 1 threshold sits below dof 2 at every level
  for (int i = 1; i <= 99; ++i) {
    const double q = i / 100.0;
    CHECK(specfun::chi2_quantile_halved(q, 1) < specfun::chi2_quantile_halved(q, 2));
  }

  CHECK_THROWS_AS(specfun::chi2_quantile_halved(0.95, 0), DomainError);
  CHECK_THROWS_AS(specfun::chi2_quantile_halved(0.95, 3), DomainError);
  CHECK_THROWS_AS(specfun::chi2_quantile_halved(0.0, 1), DomainError);
  CHECK_THROWS_AS(specfun::chi2_quantile_halved(1.0, 2), DomainError);
}

TEST_CASE("quantile struct carries its probability") {
  const auto q = specfun::normal_quantile_point(0.95);
  CHECK(q.probability == 0.95);
  CHECK(q.value == specfun::normal_quantile(0.95));
}
