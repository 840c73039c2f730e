#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "proflik/likelihood.hpp"
#include "proflik/optimize.hpp"

namespace proflik {

// Values of one interest parameter at which the profile is evaluated.
// Strictly increasing, at least 5 points, inside the parameter's box.
struct ProfileGrid {
  std::string interest_parameter;
  std::vector<double> grid_points;

  static ProfileGrid uniform(std::string interest_parameter, double lo, double hi,
                             std::size_t points);
};

enum class Identifiability { identifiable, one_sided, flat };

std::string to_string(Identifiability id);

struct ProfileResult {
  ProfileGrid grid;
  std::vector<double> profiled_values;        // normalized profile log-likelihood per point
  std::vector<ParameterVector> nuisance_argmax;  // full vector: interest fixed + optimized rest
  std::vector<bool> point_ok;                 // false for dropped (non-converged) points
  std::vector<std::string> warnings;

  // Filled in by threshold_interval:
  double threshold = 0.0;
  std::optional<std::pair<double, double>> ci;
  Identifiability identifiability = Identifiability::flat;
};

struct ProfileOptions {
  // Sweep outward from the grid point nearest the MLE, warm-starting each
  // nuisance search at the neighbor's solution.  When disabled every point
  // starts at the MLE nuisance values and points may run in parallel.
  bool warm_start = true;
  int threads = 1;
  // A profile whose range over the grid is below this fraction of |threshold|
  // is classified flat.
  double flatness_fraction = 0.25;
};

// Profile the interest parameter over the grid, maximizing the normalized
// log-likelihood over the remaining (nuisance) parameters at each point.
ProfileResult profile_parameter(const NormalizedLikelihood& nl, const ProfileGrid& grid,
                                const OptimizerSettings& settings = {},
                                const ProfileOptions& options = {});

// Locate the confidence interval where the profile crosses the threshold
// (linear interpolation between adjacent grid points) and classify the
// parameter.  threshold must be negative, e.g. -1.9207 for 95% with dof 1.
ProfileResult threshold_interval(ProfileResult result, double threshold,
                                 double flatness_fraction = 0.25);

// CSV: interest value, profiled normalized log-likelihood, then one column
// per parameter with the per-point optimum.  Dropped points are omitted.
void write_profile_csv(const ProfileResult& result, const std::filesystem::path& path);

}  // namespace proflik
