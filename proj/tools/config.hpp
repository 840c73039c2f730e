#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "proflik/model.hpp"
#include "proflik/noise.hpp"
#include "proflik/optimize.hpp"
#include "proflik/parameter_vector.hpp"

namespace proflik::cli {

struct SyntheticRecipe {
  std::map<std::string, double> true_theta;
  std::vector<double> coordinates;
  std::uint64_t seed = 1;
};

struct ProfileConfig {
  double confidence_level = 0.95;
  std::size_t default_points = 40;
  std::map<std::string, std::vector<double>> grids;  // per-parameter overrides
  bool warm_start = true;
  double flatness_fraction = 0.25;
};

struct PredictConfig {
  int samples = 1000;           // M
  double confidence_level = 0.95;
  std::optional<int> dof;       // defaults to the parameter count
  std::vector<double> coordinates;
  double lower_quantile = 0.05;
  double upper_quantile = 0.95;
  long long max_attempts = 0;   // 0 -> 10^6 * samples
};

// One fully validated run description.  Parse errors carry the offending
// field's JSON path.
struct RunConfig {
  ProcessModelSpec model = ProcessModelSpec::make(ModelId::cooling);
  ParameterVector parameters;       // schema with bounds; values = start point
  bool explicit_start = false;
  NoiseSpec noise = NoiseSpec::gaussian(1.0);

  std::optional<std::filesystem::path> data_path;
  std::optional<SyntheticRecipe> synthetic;

  OptimizerSettings optimizer;
  ProfileConfig profile;
  PredictConfig predict;

  std::filesystem::path output_dir = "out";

  static RunConfig load(const std::filesystem::path& path);
};

}  // namespace proflik::cli
