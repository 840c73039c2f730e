#pragma once

#include <functional>

#include "proflik/likelihood.hpp"
#include "proflik/parameter_vector.hpp"

namespace proflik {

struct OptimizerSettings {
  double x_tolerance = 1e-8;          // simplex diameter stop
  double f_tolerance = 1e-10;         // best-to-worst value spread stop
  long max_evaluations = 0;           // 0 means 10^4 * dimension
  double initial_simplex_scale = 0.1; // fraction of each box width
  int restarts = 2;                   // re-seed the simplex at the incumbent

  void validate(std::size_t dimension) const;
};

struct OptimResult {
  ParameterVector argmax;
  double value = 0.0;
  long evaluations = 0;
  bool converged = false;  // false when the evaluation budget ran out
};

// Derivative-free simplex maximization with box constraints enforced by
// projecting proposed vertices onto the box.  Standard reflection/expansion/
// contraction/shrink coefficients (1, 2, 0.5, 0.5).  Deterministic: no
// internal randomness, so identical inputs give identical results.
OptimResult nelder_mead_maximize(const std::function<double(const ParameterVector&)>& objective,
                                 const ParameterVector& start,
                                 const OptimizerSettings& settings = {});

// MLE driver: maximizes loglikelihood(problem, .) from the given start.
OptimResult find_mle(const LikelihoodProblem& problem, const ParameterVector& start,
                     const OptimizerSettings& settings = {});

// Same, starting from the box midpoint.
OptimResult find_mle(const LikelihoodProblem& problem, const OptimizerSettings& settings = {});

}  // namespace proflik
