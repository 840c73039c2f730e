#include "proflik/likelihood.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "proflik/errors.hpp"
#include "proflik/specfun.hpp"

namespace proflik {

LikelihoodProblem::LikelihoodProblem(ProcessModelSpec model, Dataset dataset,
                                     ParameterVector parameters)
    : model_(std::move(model)), dataset_(std::move(dataset)), parameters_(std::move(parameters)) {
  if (parameters_.names() != model_.parameter_names())
    throw SchemaError("likelihood problem: parameter schema does not match model '" +
                      to_string(model_.id()) + "'");
  if (dataset_.size() < parameters_.size() + 1)
    throw SchemaError("likelihood problem: need more records than parameters (got " +
                      std::to_string(dataset_.size()) + " records for " +
                      std::to_string(parameters_.size()) + " parameters)");
  if (dataset_.noise().kind == NoiseKind::multiplicative_lognormal) {
    // Spot-check model positivity over the data coordinates at an interior
    // point of the box; out-of-domain means elsewhere become -inf sentinels.
    const ParameterVector midpoint = parameters_.at_box_midpoint();
    for (const DataRecord& r : dataset_.records())
      if (!(evaluate_model(model_, midpoint, r.coordinate) > 0.0))
        throw SchemaError(
            "likelihood problem: log-normal noise needs a positive model mean, but the "
            "box-midpoint solution is nonpositive at coordinate " +
            std::to_string(r.coordinate));
  }
  if (dataset_.noise().kind == NoiseKind::multiplicative_lognormal) {
    log_observations_.reserve(dataset_.size());
    for (const DataRecord& r : dataset_.records())
      log_observations_.push_back(std::log(r.observation));
  }
}

double loglikelihood(const LikelihoodProblem& problem, const ParameterVector& theta) {
  if (theta.names() != problem.parameters().names())
    throw SchemaError("loglikelihood: parameter vector does not match the problem schema");
  const auto curve = curve_evaluator(problem.model(), theta);
  const NoiseSpec& noise = problem.noise();
  const double variance = noise.sigma * noise.sigma;
  const double log_norm = -0.5 * std::log(6.2831853071795864769 * variance);
  double total = 0.0;
  if (noise.kind == NoiseKind::multiplicative_lognormal) {
    const auto& records = problem.dataset().records();
    const auto& log_obs = problem.log_observations();
    for (std::size_t i = 0; i < records.size(); ++i) {
      const double mean = curve(records[i].coordinate);
      if (!(mean > 0.0)) return -std::numeric_limits<double>::infinity();
      const double resid = log_obs[i] - std::log(mean);
      total += -log_obs[i] + log_norm - resid * resid / (2.0 * variance);
    }
  } else {
    for (const DataRecord& r : problem.dataset().records()) {
      const double resid = r.observation - curve(r.coordinate);
      total += log_norm - resid * resid / (2.0 * variance);
    }
  }
  return total;
}

double loglikelihood_gaussian_closedform(const LikelihoodProblem& problem,
                                         const ParameterVector& theta) {
  if (problem.noise().kind != NoiseKind::additive_gaussian)
    throw SchemaError("closed-form likelihood is only defined for additive Gaussian noise");
  if (theta.names() != problem.parameters().names())
    throw SchemaError("loglikelihood: parameter vector does not match the problem schema");
  const double variance = problem.noise().sigma * problem.noise().sigma;
  double sse = 0.0;
  for (const DataRecord& r : problem.dataset().records()) {
    const double resid = r.observation - evaluate_model(problem.model(), theta, r.coordinate);
    sse += resid * resid;
  }
  const double n = static_cast<double>(problem.dataset().size());
  return -0.5 * n * std::log(6.2831853071795864769 * variance) - sse / (2.0 * variance);
}

NormalizedLikelihood::NormalizedLikelihood(LikelihoodProblem problem, ParameterVector mle)
    : problem_(std::move(problem)), mle_(std::move(mle)) {
  if (mle_.names() != problem_.parameters().names())
    throw SchemaError("normalize: MLE does not match the problem schema");
  mle_loglik_ = loglikelihood(problem_, mle_);
  if (!std::isfinite(mle_loglik_))
    throw DomainError("normalize: log-likelihood at the MLE is not finite");
}

NormalizedLikelihood normalize(const LikelihoodProblem& problem, const ParameterVector& mle) {
  return NormalizedLikelihood(problem, mle);
}

}  // namespace proflik
