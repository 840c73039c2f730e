#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <vector>

#include "proflik/likelihood.hpp"
#include "proflik/noise.hpp"
#include "proflik/parameter_vector.hpp"

namespace proflik {

// Parameter vectors drawn uniformly from the bounds box and kept when the
// normalized log-likelihood clears the threshold.
struct ConfidenceSetSample {
  std::vector<ParameterVector> samples;
  double threshold = 0.0;
  long long attempts = 0;
};

// Per-coordinate envelope of noise quantile bands over the accepted samples,
// plus the model curve at the MLE.
struct PredictionBand {
  std::vector<double> coordinates;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<double> mle_curve;
  double confidence_level = 0.0;
};

// Rejection sampling of the confidence set {theta : lbar(theta) >= threshold}.
// Proposals are uniform over the box.  Workers draw from independent
// sub-streams of the seed and their acceptances merge in (stream, draw)
// order, so results are reproducible for a fixed seed and worker count.
// Throws StarvationError when max_attempts runs out short of M samples.
ConfidenceSetSample sample_confidence_set(const NormalizedLikelihood& nl, double threshold,
                                          int M, long long max_attempts, std::uint64_t seed,
                                          int workers = 1);

// Same machinery over an arbitrary normalized objective (the box comes from
// the schema's bounds; its values are ignored).
ConfidenceSetSample sample_confidence_set(
    const std::function<double(const ParameterVector&)>& normalized_loglik,
    const ParameterVector& box, double threshold, int M, long long max_attempts,
    std::uint64_t seed, int workers = 1);

// Band construction: for every sample (the MLE is always included as a
// trajectory, since it lies in every confidence set) take the noise quantile
// band around the model curve and envelope them across samples.
PredictionBand prediction_band(const ProcessModelSpec& spec, const ConfidenceSetSample& samples,
                               const NoiseSpec& noise, std::span<const double> coordinates,
                               double lower_p, double upper_p, const ParameterVector& mle,
                               double confidence_level);

// CSV: coordinate, lower, mle, upper.
void write_band_csv(const PredictionBand& band, const std::filesystem::path& path);

}  // namespace proflik
