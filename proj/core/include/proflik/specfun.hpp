#pragma once

namespace proflik::specfun {

// A probability paired with the abscissa it maps to under some inverse CDF.
struct Quantile {
  double probability;  // strictly inside (0, 1)
  double value;
};

// Error function, |abs error| < 1e-15 on the whole real line.
double erf(double x);

// Complementary error function, accurate in the far tail (relative error
// ~1e-16 down to erfc(26) ~ 1e-296).
double erfc(double x);

// Standard normal CDF, evaluated through erfc for tail accuracy.
double normal_cdf(double x);

// Inverse standard normal CDF on (0, 1), |abs error| < 1e-12.
// Throws DomainError outside (0, 1).
double normal_quantile(double p);

// Same, bundled with the probability it inverts.
Quantile normal_quantile_point(double p);

// log of the normal density with the given mean and variance (> 0).
double normal_logpdf(double x, double mean, double variance);

// log of the log-normal(logmean, variance) density at x > 0:
//   -log(x) - log(2 pi variance)/2 - (log x - logmean)^2 / (2 variance)
double lognormal_logpdf(double x, double logmean, double variance);

// Half the q-th quantile of a chi-square distribution with dof degrees of
// freedom, i.e. the likelihood-ratio confidence threshold magnitude.
// Only dof 1 and 2 are supported:
//   dof 2: -log(1 - q) exactly; dof 1: normal_quantile((1+q)/2)^2 / 2.
double chi2_quantile_halved(double q, int dof);

}  // namespace proflik::specfun
