#pragma once

#include "proflik/dataset.hpp"
#include "proflik/model.hpp"
#include "proflik/parameter_vector.hpp"

namespace proflik {

// A process model, a dataset observed under a noise model, and the parameter
// schema (with box bounds) the likelihood is defined over.  Immutable.
class LikelihoodProblem {
public:
  LikelihoodProblem(ProcessModelSpec model, Dataset dataset, ParameterVector parameters);

  const ProcessModelSpec& model() const { return model_; }
  const Dataset& dataset() const { return dataset_; }
  // Schema + bounds; the stored values double as the default start point.
  const ParameterVector& parameters() const { return parameters_; }
  const NoiseSpec& noise() const { return dataset_.noise(); }

  // log of each observation, cached for the log-normal likelihood loop
  const std::vector<double>& log_observations() const { return log_observations_; }

private:
  ProcessModelSpec model_;
  Dataset dataset_;
  ParameterVector parameters_;
  std::vector<double> log_observations_;
};

// Sum of per-record observation log densities at theta.  Returns -infinity
// when a model mean violates the noise model's domain (so bounded searches
// can treat such points as infeasible instead of erroring).
double loglikelihood(const LikelihoodProblem& problem, const ParameterVector& theta);

// The algebraically equivalent least-squares form for Gaussian noise:
//   -(I/2) log(2 pi sigma^2) - SSE / (2 sigma^2).
// Throws SchemaError for non-Gaussian problems.
double loglikelihood_gaussian_closedform(const LikelihoodProblem& problem,
                                         const ParameterVector& theta);

// Log-likelihood shifted so its value at the stored MLE is exactly zero.
class NormalizedLikelihood {
public:
  NormalizedLikelihood(LikelihoodProblem problem, ParameterVector mle);

  const LikelihoodProblem& problem() const { return problem_; }
  const ParameterVector& mle() const { return mle_; }
  double mle_loglik() const { return mle_loglik_; }

  // l(theta) - l(mle); never positive up to optimizer tolerance.
  double value(const ParameterVector& theta) const {
    return loglikelihood(problem_, theta) - mle_loglik_;
  }

private:
  LikelihoodProblem problem_;
  ParameterVector mle_;
  double mle_loglik_;
};

NormalizedLikelihood normalize(const LikelihoodProblem& problem, const ParameterVector& mle);

}  // namespace proflik
