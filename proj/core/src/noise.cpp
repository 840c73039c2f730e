#include "proflik/noise.hpp"

#include <cmath>
#include <string>

#include "proflik/errors.hpp"
#include "proflik/specfun.hpp"

namespace proflik {

NoiseKind noise_kind_from_string(std::string_view kind) {
  if (kind == "additive_gaussian") return NoiseKind::additive_gaussian;
  if (kind == "multiplicative_lognormal") return NoiseKind::multiplicative_lognormal;
  throw SchemaError("unknown noise kind '" + std::string(kind) + "'");
}

std::string to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::additive_gaussian: return "additive_gaussian";
    case NoiseKind::multiplicative_lognormal: return "multiplicative_lognormal";
  }
  throw SchemaError("unknown noise kind");
}

NoiseSpec NoiseSpec::make(NoiseKind kind, double sigma) {
  if (!(sigma > 0.0))
    throw DomainError("noise: sigma must be positive, got " + std::to_string(sigma));
  return NoiseSpec{kind, sigma};
}

NoiseSpec NoiseSpec::gaussian(double sigma) {
  return make(NoiseKind::additive_gaussian, sigma);
}

NoiseSpec NoiseSpec::lognormal(double sigma) {
  return make(NoiseKind::multiplicative_lognormal, sigma);
}

double observation_logdensity(const NoiseSpec& noise, double observed, double mean) {
  const double variance = noise.sigma * noise.sigma;
  switch (noise.kind) {
    case NoiseKind::additive_gaussian:
      return specfun::normal_logpdf(observed, mean, variance);
    case NoiseKind::multiplicative_lognormal:
      if (!(mean > 0.0))
        throw DomainError("log-normal noise: model mean must be positive, got " +
                          std::to_string(mean));
      return specfun::lognormal_logpdf(observed, std::log(mean), variance);
  }
  throw SchemaError("unknown noise kind");
}

std::pair<double, double> noise_quantile_band(const NoiseSpec& noise, double mean,
                                              double lower_p, double upper_p) {
  if (!(lower_p > 0.0 && lower_p < upper_p && upper_p < 1.0))
    throw DomainError("noise band: need 0 < lower_p < upper_p < 1");
  const double z_lo = specfun::normal_quantile(lower_p);
  const double z_hi = specfun::normal_quantile(upper_p);
  switch (noise.kind) {
    case NoiseKind::additive_gaussian:
      return {mean + noise.sigma * z_lo, mean + noise.sigma * z_hi};
    case NoiseKind::multiplicative_lognormal:
      if (!(mean > 0.0))
        throw DomainError("log-normal noise: model mean must be positive");
      return {mean * std::exp(noise.sigma * z_lo), mean * std::exp(noise.sigma * z_hi)};
  }
  throw SchemaError("unknown noise kind");
}

double sample_observation(const NoiseSpec& noise, double mean, RngStream& rng) {
  const double z = rng.standard_normal();
  switch (noise.kind) {
    case NoiseKind::additive_gaussian: return mean + noise.sigma * z;
    case NoiseKind::multiplicative_lognormal:
      if (!(mean > 0.0))
        throw DomainError("log-normal noise: model mean must be positive");
      return mean * std::exp(noise.sigma * z);
  }
  throw SchemaError("unknown noise kind");
}

}  // namespace proflik
