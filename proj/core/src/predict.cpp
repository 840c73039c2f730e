#include "proflik/predict.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>

#include "proflik/errors.hpp"
#include "proflik/numfmt.hpp"
#include "proflik/rng.hpp"

namespace proflik {

namespace {

struct Worker {
  RngStream stream;
  long long attempts = 0;
  std::vector<std::vector<double>> accepted;  // in draw order within the stream

  explicit Worker(RngStream s) : stream(std::move(s)) {}

  void run_batch(const std::function<double(const ParameterVector&)>& objective,
                 const ParameterVector& box, double threshold, long long batch) {
    const std::size_t n = box.size();
    ParameterVector scratch = box;
    std::vector<double> draw(n);
    for (long long b = 0; b < batch; ++b) {
      for (std::size_t i = 0; i < n; ++i)
        draw[i] = stream.uniform(box.lower_bound(i), box.upper_bound(i));
      ++attempts;
      scratch.set_values(draw);
      if (objective(scratch) >= threshold) accepted.push_back(draw);
    }
  }
};

}  // namespace

ConfidenceSetSample sample_confidence_set(
    const std::function<double(const ParameterVector&)>& normalized_loglik,
    const ParameterVector& box, double threshold, int M, long long max_attempts,
    std::uint64_t seed, int workers) {
  if (M < 1) throw SchemaError("sample_confidence_set: M must be at least 1");
  if (threshold > 0.0)
    throw DomainError("sample_confidence_set: threshold must be nonpositive");
  if (max_attempts < M)
    throw SchemaError("sample_confidence_set: max_attempts below the requested sample count");
  workers = std::max(1, workers);

  // Workers consume independent sub-streams in doubling batch rounds; the
  // round at which enough acceptances exist depends only on (seed, workers),
  // so the merged result is reproducible for that pair.
  const long long quota = (max_attempts + workers - 1) / workers;
  std::vector<Worker> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back(RngStream(seed, static_cast<std::uint64_t>(w)));

  long long batch = 8192;
  while (true) {
    long long accepted_total = 0;
    long long attempts_total = 0;
    for (const Worker& w : pool) {
      accepted_total += static_cast<long long>(w.accepted.size());
      attempts_total += w.attempts;
    }
    if (accepted_total >= M || attempts_total >= static_cast<long long>(workers) * quota) break;

    const long long this_batch = std::min(batch, quota - pool.front().attempts);
    if (workers == 1) {
      pool[0].run_batch(normalized_loglik, box, threshold, this_batch);
    } else {
      std::vector<std::future<void>> futures;
      futures.reserve(workers);
      for (Worker& w : pool)
        futures.push_back(std::async(std::launch::async, [&, this_batch]() {
          w.run_batch(normalized_loglik, box, threshold,
                      std::min(this_batch, quota - w.attempts));
        }));
      for (auto& f : futures) f.get();
    }
    batch = std::min(batch * 2, static_cast<long long>(1) << 22);
  }

  ConfidenceSetSample out;
  out.threshold = threshold;
  for (const Worker& w : pool) {
    out.attempts += w.attempts;
    for (const std::vector<double>& draw : w.accepted) {
      if (static_cast<int>(out.samples.size()) >= M) break;
      out.samples.push_back(box.with_values(draw));
    }
  }
  if (static_cast<int>(out.samples.size()) < M)
    throw StarvationError(
        "rejection sampling starved: accepted " + std::to_string(out.samples.size()) + " of " +
            std::to_string(M) + " samples in " + std::to_string(out.attempts) +
            " attempts (acceptance rate " +
            format_double(out.attempts > 0 ? static_cast<double>(out.samples.size()) /
                                                 static_cast<double>(out.attempts)
                                           : 0.0) +
            ")",
        out.attempts, static_cast<long long>(out.samples.size()));
  return out;
}

ConfidenceSetSample sample_confidence_set(const NormalizedLikelihood& nl, double threshold,
                                          int M, long long max_attempts, std::uint64_t seed,
                                          int workers) {
  return sample_confidence_set(
      [&nl](const ParameterVector& theta) { return nl.value(theta); },
      nl.problem().parameters(), threshold, M, max_attempts, seed, workers);
}

PredictionBand prediction_band(const ProcessModelSpec& spec, const ConfidenceSetSample& samples,
                               const NoiseSpec& noise, std::span<const double> coordinates,
                               double lower_p, double upper_p, const ParameterVector& mle,
                               double confidence_level) {
  if (samples.samples.empty()) throw SchemaError("prediction_band: no samples");
  if (coordinates.empty()) throw SchemaError("prediction_band: no coordinates");
  for (std::size_t i = 1; i < coordinates.size(); ++i)
    if (!(coordinates[i] > coordinates[i - 1]))
      throw SchemaError("prediction_band: coordinates must be strictly increasing");

  PredictionBand band;
  band.confidence_level = confidence_level;
  band.coordinates.assign(coordinates.begin(), coordinates.end());
  band.lower.assign(coordinates.size(), std::numeric_limits<double>::infinity());
  band.upper.assign(coordinates.size(), -std::numeric_limits<double>::infinity());
  band.mle_curve.resize(coordinates.size());

  auto widen = [&](const ParameterVector& theta) {
    const auto curve = curve_evaluator(spec, theta);
    for (std::size_t i = 0; i < band.coordinates.size(); ++i) {
      const auto [lo, hi] = noise_quantile_band(noise, curve(band.coordinates[i]), lower_p,
                                                upper_p);
      band.lower[i] = std::min(band.lower[i], lo);
      band.upper[i] = std::max(band.upper[i], hi);
    }
  };

  widen(mle);  // the MLE trajectory is part of every confidence set
  for (const ParameterVector& theta : samples.samples) widen(theta);
  for (std::size_t i = 0; i < band.coordinates.size(); ++i)
    band.mle_curve[i] = evaluate_model(spec, mle, band.coordinates[i]);
  return band;
}

void write_band_csv(const PredictionBand& band, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << "coordinate,lower,mle,upper\n";
  for (std::size_t i = 0; i < band.coordinates.size(); ++i)
    out << format_double(band.coordinates[i]) << ',' << format_double(band.lower[i]) << ','
        << format_double(band.mle_curve[i]) << ',' << format_double(band.upper[i]) << '\n';
  if (!out) throw std::runtime_error("failed while writing '" + path.string() + "'");
}

}  // namespace proflik
