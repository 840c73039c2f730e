#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "proflik/rng.hpp"

namespace proflik {

enum class NoiseKind { additive_gaussian, multiplicative_lognormal };

NoiseKind noise_kind_from_string(std::string_view kind);
std::string to_string(NoiseKind kind);

// Observation model on top of a process-model mean.  sigma is the fixed,
// known standard-deviation parameter (of the log for the log-normal kind).
struct NoiseSpec {
  NoiseKind kind;
  double sigma;

  static NoiseSpec gaussian(double sigma);
  static NoiseSpec lognormal(double sigma);
  static NoiseSpec make(NoiseKind kind, double sigma);

  bool operator==(const NoiseSpec&) const = default;
};

// log density of one observation given the model mean:
//   gaussian:   log phi(observed; mean, sigma^2)
//   lognormal:  log of the log-normal(log(mean), sigma^2) density at observed
double observation_logdensity(const NoiseSpec& noise, double observed, double mean);

// (lower, upper) quantile interval of the observation distribution around one
// model mean.  Requires 0 < lower_p < upper_p < 1.
std::pair<double, double> noise_quantile_band(const NoiseSpec& noise, double mean,
                                              double lower_p, double upper_p);

// One draw from the observation distribution.
double sample_observation(const NoiseSpec& noise, double mean, RngStream& rng);

}  // namespace proflik
