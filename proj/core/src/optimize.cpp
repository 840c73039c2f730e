#include "proflik/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "proflik/errors.hpp"

namespace proflik {

void OptimizerSettings::validate(std::size_t dimension) const {
  if (!(x_tolerance > 0.0) || !(f_tolerance > 0.0))
    throw SchemaError("optimizer: tolerances must be positive");
  if (max_evaluations != 0 && max_evaluations < static_cast<long>(dimension) + 1)
    throw SchemaError("optimizer: evaluation budget below dimension+1");
  if (!(initial_simplex_scale > 0.0) || initial_simplex_scale > 0.5)
    throw SchemaError("optimizer: initial simplex scale must lie in (0, 0.5]");
  if (restarts < 0) throw SchemaError("optimizer: restarts must be nonnegative");
}

namespace {

struct Simplex {
  std::vector<std::vector<double>> vertices;
  std::vector<double> values;  // objective (to be maximized)
};

// Axis-aligned initial simplex around x0, displaced by scale * box width per
// coordinate and flipped inward when a displacement would leave the box.
Simplex initial_simplex(const std::vector<double>& x0, const ParameterVector& box, double scale) {
  const std::size_t n = x0.size();
  Simplex s;
  s.vertices.assign(n + 1, x0);
  s.values.assign(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double width = box.upper_bound(i) - box.lower_bound(i);
    double step = scale * width;
    if (step == 0.0) continue;  // degenerate (pinned) coordinate
    double moved = x0[i] + step;
    if (moved > box.upper_bound(i)) moved = x0[i] - step;
    moved = std::clamp(moved, box.lower_bound(i), box.upper_bound(i));
    s.vertices[i + 1][i] = moved;
  }
  return s;
}

double simplex_diameter(const Simplex& s, std::size_t best) {
  double d = 0.0;
  for (std::size_t v = 0; v < s.vertices.size(); ++v) {
    if (v == best) continue;
    for (std::size_t i = 0; i < s.vertices[v].size(); ++i)
      d = std::max(d, std::abs(s.vertices[v][i] - s.vertices[best][i]));
  }
  return d;
}

}  // namespace

OptimResult nelder_mead_maximize(const std::function<double(const ParameterVector&)>& objective,
                                 const ParameterVector& start, const OptimizerSettings& settings) {
  const std::size_t n = start.size();
  if (n == 0) throw SchemaError("nelder_mead_maximize: empty parameter vector");
  settings.validate(n);
  const long budget =
      settings.max_evaluations > 0 ? settings.max_evaluations : 10000L * static_cast<long>(n);

  ParameterVector scratch = start;
  long evaluations = 0;
  auto eval = [&](const std::vector<double>& x) {
    scratch.set_values(x);
    ++evaluations;
    return objective(scratch);
  };

  std::vector<double> incumbent = start.values();
  double incumbent_value = eval(incumbent);
  if (!std::isfinite(incumbent_value))
    throw DomainError("nelder_mead_maximize: objective is not finite at the start point");

  bool converged_all = true;
  for (int round = 0; round <= settings.restarts; ++round) {
    // Restart rounds use a geometrically smaller simplex around the incumbent,
    // so a first round that collapsed against a bound gets refined locally.
    const double scale =
        settings.initial_simplex_scale * std::pow(0.25, static_cast<double>(round));
    Simplex s = initial_simplex(incumbent, start, scale);
    s.values[0] = incumbent_value;
    for (std::size_t v = 1; v <= n; ++v) s.values[v] = eval(s.vertices[v]);

    // index ordering: order[0] best (largest value), order[n] worst
    std::vector<std::size_t> order(n + 1);
    bool round_converged = false;
    while (true) {
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return s.values[a] > s.values[b]; });
      const std::size_t best = order[0], worst = order[n], second_worst = order[n - 1];

      const double spread = s.values[best] - s.values[worst];
      if (simplex_diameter(s, best) < settings.x_tolerance ||
          (std::isfinite(spread) && spread < settings.f_tolerance)) {
        round_converged = true;
        break;
      }
      if (evaluations >= budget) break;

      std::vector<double> centroid(n, 0.0);
      for (std::size_t v = 0; v <= n; ++v) {
        if (v == worst) continue;
        for (std::size_t i = 0; i < n; ++i) centroid[i] += s.vertices[v][i];
      }
      for (double& c : centroid) c /= static_cast<double>(n);

      auto propose = [&](double coeff) {
        std::vector<double> x(n);
        for (std::size_t i = 0; i < n; ++i)
          x[i] = centroid[i] + coeff * (centroid[i] - s.vertices[worst][i]);
        start.project_onto_box(x);
        return x;
      };

      std::vector<double> reflected = propose(1.0);
      const double f_reflected = eval(reflected);

      if (f_reflected > s.values[best]) {
        std::vector<double> expanded = propose(2.0);
        const double f_expanded = eval(expanded);
        if (f_expanded > f_reflected) {
          s.vertices[worst] = std::move(expanded);
          s.values[worst] = f_expanded;
        } else {
          s.vertices[worst] = std::move(reflected);
          s.values[worst] = f_reflected;
        }
      } else if (f_reflected > s.values[second_worst]) {
        s.vertices[worst] = std::move(reflected);
        s.values[worst] = f_reflected;
      } else if (f_reflected > s.values[worst]) {
        // outside contraction
        std::vector<double> contracted = propose(0.5);
        const double f_contracted = eval(contracted);
        if (f_contracted >= f_reflected) {
          s.vertices[worst] = std::move(contracted);
          s.values[worst] = f_contracted;
        } else {
          s.vertices[worst] = std::move(reflected);
          s.values[worst] = f_reflected;
        }
      } else {
        // inside contraction
        std::vector<double> contracted = propose(-0.5);
        const double f_contracted = eval(contracted);
        if (f_contracted > s.values[worst]) {
          s.vertices[worst] = std::move(contracted);
          s.values[worst] = f_contracted;
        } else {
          // shrink toward the best vertex
          for (std::size_t v = 0; v <= n; ++v) {
            if (v == best) continue;
            for (std::size_t i = 0; i < n; ++i)
              s.vertices[v][i] =
                  s.vertices[best][i] + 0.5 * (s.vertices[v][i] - s.vertices[best][i]);
            start.project_onto_box(s.vertices[v]);
            s.values[v] = eval(s.vertices[v]);
            if (evaluations >= budget) break;
          }
        }
      }
      if (evaluations >= budget && !round_converged) break;
    }

    const std::size_t best =
        std::max_element(s.values.begin(), s.values.end()) - s.values.begin();
    if (s.values[best] > incumbent_value) {
      incumbent = s.vertices[best];
      incumbent_value = s.values[best];
    }
    if (!round_converged) {
      converged_all = false;
      break;  // budget exhausted; further restarts would starve too
    }
  }

  OptimResult result;
  result.argmax = start.with_values(incumbent);
  result.value = incumbent_value;
  result.evaluations = evaluations;
  result.converged = converged_all;
  return result;
}

OptimResult find_mle(const LikelihoodProblem& problem, const ParameterVector& start,
                     const OptimizerSettings& settings) {
  return nelder_mead_maximize(
      [&problem](const ParameterVector& theta) { return loglikelihood(problem, theta); }, start,
      settings);
}

OptimResult find_mle(const LikelihoodProblem& problem, const OptimizerSettings& settings) {
  return find_mle(problem, problem.parameters().at_box_midpoint(), settings);
}

}  // namespace proflik
