#include "proflik/profile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <limits>

#include "proflik/errors.hpp"
#include "proflik/numfmt.hpp"

namespace proflik {

ProfileGrid ProfileGrid::uniform(std::string interest_parameter, double lo, double hi,
                                 std::size_t points) {
  if (points < 5) throw SchemaError("profile grid: need at least 5 points");
  if (!(lo < hi)) throw SchemaError("profile grid: need lo < hi");
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i)
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  return ProfileGrid{std::move(interest_parameter), std::move(grid)};
}

std::string to_string(Identifiability id) {
  switch (id) {
    case Identifiability::identifiable: return "identifiable";
    case Identifiability::one_sided: return "one_sided";
    case Identifiability::flat: return "flat";
  }
  throw SchemaError("unknown identifiability class");
}

namespace {

void validate_grid(const ProfileGrid& grid, const ParameterVector& schema) {
  if (grid.grid_points.size() < 5)
    throw SchemaError("profile grid: need at least 5 points, got " +
                      std::to_string(grid.grid_points.size()));
  const std::size_t idx = schema.index_of(grid.interest_parameter);
  for (std::size_t i = 0; i < grid.grid_points.size(); ++i) {
    const double g = grid.grid_points[i];
    if (i > 0 && !(g > grid.grid_points[i - 1]))
      throw SchemaError("profile grid: points must be strictly increasing");
    if (g < schema.lower_bound(idx) || g > schema.upper_bound(idx))
      throw SchemaError("profile grid: point " + format_double(g) + " outside the bounds of '" +
                        grid.interest_parameter + "'");
  }
}

struct PointOutcome {
  double value = std::numeric_limits<double>::quiet_NaN();
  ParameterVector argmax;
  bool ok = false;
  std::string warning;
};

// One profile point: fix the interest parameter, maximize over the rest.
PointOutcome solve_point(const NormalizedLikelihood& nl, std::size_t interest_index, double psi,
                         const ParameterVector& nuisance_start,
                         const OptimizerSettings& settings) {
  const ParameterVector& schema = nl.problem().parameters();
  ParameterVector full = schema;  // scratch for assembling complete vectors

  auto assemble = [&](const ParameterVector& nuisance) {
    std::vector<double> values(schema.size());
    std::size_t j = 0;
    for (std::size_t i = 0; i < schema.size(); ++i)
      values[i] = (i == interest_index) ? psi : nuisance.value(j++);
    return values;
  };

  PointOutcome out;
  try {
    OptimResult res = nelder_mead_maximize(
        [&](const ParameterVector& nuisance) {
          full.set_values(assemble(nuisance));
          return nl.value(full);
        },
        nuisance_start, settings);
    out.value = res.value;
    out.argmax = schema.with_values(assemble(res.argmax));
    out.ok = res.converged;
    if (!res.converged)
      out.warning = "profile point " + format_double(psi) + ": evaluation budget exhausted";
  } catch (const std::exception& e) {
    out.argmax = schema.with_values(assemble(nuisance_start));
    out.warning = "profile point " + format_double(psi) + ": " + e.what();
  }
  return out;
}

// Zero-nuisance specialization: the profile is just the normalized
// log-likelihood along the single parameter.
PointOutcome evaluate_point(const NormalizedLikelihood& nl, std::size_t interest_index,
                            double psi) {
  const ParameterVector& schema = nl.problem().parameters();
  PointOutcome out;
  std::vector<double> values = schema.values();
  values[interest_index] = psi;
  out.argmax = schema.with_values(values);
  out.value = nl.value(out.argmax);
  out.ok = true;
  return out;
}

}  // namespace

ProfileResult profile_parameter(const NormalizedLikelihood& nl, const ProfileGrid& grid,
                                const OptimizerSettings& settings, const ProfileOptions& options) {
  const ParameterVector& schema = nl.problem().parameters();
  validate_grid(grid, schema);
  const std::size_t interest_index = schema.index_of(grid.interest_parameter);
  const std::size_t n_points = grid.grid_points.size();
  const bool no_nuisance = schema.size() == 1;
  const ParameterVector mle_nuisance =
      no_nuisance ? ParameterVector() : nl.mle().without(grid.interest_parameter);

  ProfileResult result;
  result.grid = grid;
  result.profiled_values.assign(n_points, std::numeric_limits<double>::quiet_NaN());
  result.nuisance_argmax.assign(n_points, schema);
  result.point_ok.assign(n_points, false);

  std::vector<PointOutcome> outcomes(n_points);

  if (no_nuisance) {
    for (std::size_t i = 0; i < n_points; ++i)
      outcomes[i] = evaluate_point(nl, interest_index, grid.grid_points[i]);
  } else if (options.warm_start) {
    // Start at the grid point nearest the MLE and sweep outward in both
    // directions, chaining each point's solution into the next start.
    const double mle_component = nl.mle().value(interest_index);
    std::size_t origin = 0;
    for (std::size_t i = 1; i < n_points; ++i)
      if (std::abs(grid.grid_points[i] - mle_component) <
          std::abs(grid.grid_points[origin] - mle_component))
        origin = i;

    auto sweep = [&](std::size_t begin, bool rightward) {
      ParameterVector warm = mle_nuisance;
      if (rightward) {
        for (std::size_t i = begin; i < n_points; ++i) {
          outcomes[i] = solve_point(nl, interest_index, grid.grid_points[i], warm, settings);
          if (outcomes[i].ok) warm = outcomes[i].argmax.without(grid.interest_parameter);
        }
      } else {
        for (std::size_t i = begin + 1; i-- > 0;) {
          outcomes[i] = solve_point(nl, interest_index, grid.grid_points[i], warm, settings);
          if (outcomes[i].ok) warm = outcomes[i].argmax.without(grid.interest_parameter);
        }
      }
    };

    if (options.threads > 1 && origin > 0) {
      auto left = std::async(std::launch::async, sweep, origin - 1, false);
      sweep(origin, true);
      left.get();
    } else {
      sweep(origin, true);
      if (origin > 0) sweep(origin - 1, false);
    }
  } else {
    // Independent cold starts from the MLE nuisance values; safe to fan out.
    const int workers = std::max(1, options.threads);
    auto run_chunk = [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i)
        outcomes[i] =
            solve_point(nl, interest_index, grid.grid_points[i], mle_nuisance, settings);
    };
    if (workers == 1) {
      run_chunk(0, n_points);
    } else {
      std::vector<std::future<void>> futures;
      const std::size_t chunk = (n_points + workers - 1) / workers;
      for (std::size_t begin = 0; begin < n_points; begin += chunk)
        futures.push_back(std::async(std::launch::async, run_chunk, begin,
                                     std::min(begin + chunk, n_points)));
      for (auto& f : futures) f.get();
    }
  }

  for (std::size_t i = 0; i < n_points; ++i) {
    result.profiled_values[i] = outcomes[i].value;
    result.nuisance_argmax[i] = std::move(outcomes[i].argmax);
    result.point_ok[i] = outcomes[i].ok;
    if (!outcomes[i].warning.empty()) result.warnings.push_back(std::move(outcomes[i].warning));
  }
  return result;
}

ProfileResult threshold_interval(ProfileResult result, double threshold,
                                 double flatness_fraction) {
  if (!(threshold < 0.0))
    throw DomainError("threshold_interval: threshold must be negative, got " +
                      format_double(threshold));
  result.threshold = threshold;
  result.ci.reset();

  std::vector<std::pair<double, double>> pts;  // (grid value, profile value), kept points only
  for (std::size_t i = 0; i < result.grid.grid_points.size(); ++i)
    if (result.point_ok[i] && std::isfinite(result.profiled_values[i]))
      pts.emplace_back(result.grid.grid_points[i], result.profiled_values[i]);

  if (pts.size() < 2) {
    result.identifiability = Identifiability::flat;
    result.warnings.push_back("threshold_interval: fewer than 2 usable profile points");
    return result;
  }

  double vmin = pts[0].second, vmax = pts[0].second;
  for (const auto& [x, v] : pts) {
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
  }
  if (vmax - vmin < flatness_fraction * std::abs(threshold)) {
    result.identifiability = Identifiability::flat;
    return result;
  }

  std::vector<double> crossings;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const bool above_l = pts[i].second >= threshold;
    const bool above_r = pts[i + 1].second >= threshold;
    if (above_l == above_r) continue;
    const double t = (threshold - pts[i].second) / (pts[i + 1].second - pts[i].second);
    crossings.push_back(pts[i].first + t * (pts[i + 1].first - pts[i].first));
  }

  if (crossings.size() >= 2) {
    result.identifiability = Identifiability::identifiable;
    result.ci = std::make_pair(crossings.front(), crossings.back());
  } else if (crossings.size() == 1) {
    result.identifiability = Identifiability::one_sided;
    const bool rising = pts.front().second < threshold;  // profile enters from below
    if (rising)
      result.ci = std::make_pair(crossings.front(), pts.back().first);
    else
      result.ci = std::make_pair(pts.front().first, crossings.front());
  } else {
    // Never descends below the threshold anywhere on the grid.
    result.identifiability = Identifiability::flat;
  }
  return result;
}

void write_profile_csv(const ProfileResult& result, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");

  out << result.grid.interest_parameter << ",profile_loglik";
  std::vector<std::size_t> nuisance_cols;
  if (!result.nuisance_argmax.empty()) {
    const ParameterVector& first = result.nuisance_argmax.front();
    for (std::size_t i = 0; i < first.size(); ++i) {
      if (first.name(i) == result.grid.interest_parameter) continue;
      nuisance_cols.push_back(i);
      out << ',' << first.name(i);
    }
  }
  out << '\n';
  for (std::size_t i = 0; i < result.grid.grid_points.size(); ++i) {
    if (!result.point_ok[i]) continue;
    out << format_double(result.grid.grid_points[i]) << ','
        << format_double(result.profiled_values[i]);
    for (std::size_t c : nuisance_cols)
      out << ',' << format_double(result.nuisance_argmax[i].value(c));
    out << '\n';
  }
  if (!out) throw std::runtime_error("failed while writing '" + path.string() + "'");
}

}  // namespace proflik
