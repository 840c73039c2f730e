#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <json.hpp>

#include "chi2_threshold.hpp"
#include "proflik/proflik.hpp"
#include "svg.hpp"

namespace proflik::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

std::uint64_t effective_seed(const RunContext& ctx) {
  if (ctx.seed_override) return *ctx.seed_override;
  if (ctx.config.synthetic) return ctx.config.synthetic->seed;
  return 1;
}

Dataset synthesize_dataset(const RunContext& ctx) {
  const RunConfig& cfg = ctx.config;
  ParameterVector truth = cfg.parameters;
  std::vector<double> values(truth.size());
  for (std::size_t i = 0; i < truth.size(); ++i)
    values[i] = cfg.synthetic->true_theta.at(truth.name(i));
  truth.set_values(values);
  return generate_synthetic(cfg.model, truth, cfg.synthetic->coordinates, cfg.noise,
                            effective_seed(ctx));
}

Dataset obtain_dataset(const RunContext& ctx) {
  const RunConfig& cfg = ctx.config;
  if (cfg.data_path) {
    Dataset data = read_dataset(*cfg.data_path);
    if (data.noise() != cfg.noise)
      throw SchemaError("config: noise declaration does not match the dataset file '" +
                        cfg.data_path->string() + "'");
    return data;
  }
  return synthesize_dataset(ctx);
}

struct FittedRun {
  LikelihoodProblem problem;
  OptimResult mle;
  NormalizedLikelihood nl;
};

FittedRun run_fit(const RunContext& ctx, Dataset dataset) {
  LikelihoodProblem problem(ctx.config.model, std::move(dataset), ctx.config.parameters);
  OptimResult mle = find_mle(problem, ctx.config.parameters, ctx.config.optimizer);
  if (!mle.converged)
    throw std::runtime_error(
        "fit: optimizer exhausted its evaluation budget without converging (" +
        std::to_string(mle.evaluations) + " evaluations)");
  NormalizedLikelihood nl = normalize(problem, mle.argmax);
  return {std::move(problem), std::move(mle), std::move(nl)};
}

std::vector<double> prediction_coordinates(const RunContext& ctx) {
  if (!ctx.config.predict.coordinates.empty()) return ctx.config.predict.coordinates;
  std::vector<double> out;
  switch (ctx.config.model.id()) {
    case ModelId::cooling:
      for (double t = 0.0; t <= 100.0; t += 1.0) out.push_back(t);
      break;
    case ModelId::advection_diffusion:
      for (double x = -200.0; x <= 200.0; x += 1.0) out.push_back(x);
      break;
    case ModelId::morphogen_bvp:
    case ModelId::morphogen_bvp_reparam:
      for (int i = 0; i <= 100; ++i) out.push_back(0.2 * i);
      break;
  }
  return out;
}

ordered_json named_values(const ParameterVector& theta) {
  ordered_json out;
  for (std::size_t i = 0; i < theta.size(); ++i) out[theta.name(i)] = theta.value(i);
  return out;
}

void dump_json(const ordered_json& doc, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << doc.dump(2) << '\n';
}

void write_mle_curve(const FittedRun& fit, const std::vector<double>& coords,
                     const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << "coordinate,mle\n";
  for (double c : coords)
    out << format_double(c) << ','
        << format_double(evaluate_model(fit.problem.model(), fit.mle.argmax, c)) << '\n';
}

std::vector<std::string> write_fit_artifacts(const RunContext& ctx, const FittedRun& fit) {
  ordered_json doc;
  doc["model"] = to_string(ctx.config.model.id());
  doc["noise"] = {{"kind", to_string(ctx.config.noise.kind)}, {"sigma", ctx.config.noise.sigma}};
  doc["mle"] = named_values(fit.mle.argmax);
  doc["loglik"] = fit.mle.value;
  doc["evaluations"] = fit.mle.evaluations;
  doc["converged"] = fit.mle.converged;
  doc["start"] = named_values(ctx.config.parameters);
  ordered_json bounds;
  for (std::size_t i = 0; i < fit.mle.argmax.size(); ++i)
    bounds[fit.mle.argmax.name(i)] = {fit.mle.argmax.lower_bound(i),
                                      fit.mle.argmax.upper_bound(i)};
  doc["bounds"] = bounds;
  dump_json(doc, ctx.output_dir / "fit.json");
  write_mle_curve(fit, prediction_coordinates(ctx), ctx.output_dir / "mle_curve.csv");
  return {"fit.json", "mle_curve.csv"};
}

ProfileGrid grid_for(const RunContext& ctx, const std::string& name) {
  const auto it = ctx.config.profile.grids.find(name);
  if (it != ctx.config.profile.grids.end()) return ProfileGrid{name, it->second};
  const ParameterVector& schema = ctx.config.parameters;
  const std::size_t i = schema.index_of(name);
  return ProfileGrid::uniform(name, schema.lower_bound(i), schema.upper_bound(i),
                              ctx.config.profile.default_points);
}

void write_profile_svg(const ProfileResult& result, double mle_component,
                       const std::filesystem::path& path) {
  Figure fig;
  fig.x_label = result.grid.interest_parameter;
  fig.y_label = "normalized log-likelihood";
  fig.title = "profile: " + result.grid.interest_parameter;
  Series curve;
  curve.style = Series::Style::line;
  curve.color = "#d62728";
  for (std::size_t i = 0; i < result.grid.grid_points.size(); ++i) {
    if (!result.point_ok[i]) continue;
    curve.x.push_back(result.grid.grid_points[i]);
    curve.y.push_back(result.profiled_values[i]);
  }
  fig.series.push_back(std::move(curve));
  fig.h_lines.push_back(result.threshold);
  fig.v_lines.push_back(mle_component);
  write_svg(fig, path);
}

std::vector<std::string> write_profile_artifacts(const RunContext& ctx, const FittedRun& fit) {
  const double level = ctx.config.profile.confidence_level;
  const double threshold = -specfun::chi2_quantile_halved(level, 1);

  ProfileOptions options;
  options.warm_start = ctx.config.profile.warm_start;
  options.threads = ctx.threads;
  options.flatness_fraction = ctx.config.profile.flatness_fraction;

  std::vector<std::string> artifacts;
  ordered_json summary;
  summary["confidence_level"] = level;
  summary["threshold"] = threshold;
  ordered_json per_parameter;

  for (const std::string& name : ctx.config.model.parameter_names()) {
    ProfileResult result = profile_parameter(fit.nl, grid_for(ctx, name), ctx.config.optimizer,
                                             options);
    result = threshold_interval(std::move(result), threshold,
                                ctx.config.profile.flatness_fraction);
    for (const std::string& w : result.warnings) std::cerr << "warning: " << w << '\n';

    const std::string csv_name = "profile_" + name + ".csv";
    const std::string svg_name = "profile_" + name + ".svg";
    write_profile_csv(result, ctx.output_dir / csv_name);
    write_profile_svg(result, fit.mle.argmax.value_of(name), ctx.output_dir / svg_name);
    artifacts.push_back(csv_name);
    artifacts.push_back(svg_name);

    ordered_json entry;
    entry["mle"] = fit.mle.argmax.value_of(name);
    entry["identifiability"] = to_string(result.identifiability);
    if (result.ci)
      entry["ci"] = {result.ci->first, result.ci->second};
    else
      entry["ci"] = nullptr;
    entry["csv"] = csv_name;
    entry["svg"] = svg_name;
    per_parameter[name] = entry;
  }
  summary["parameters"] = per_parameter;
  dump_json(summary, ctx.output_dir / "profiles.json");
  artifacts.push_back("profiles.json");
  return artifacts;
}

std::vector<std::string> write_predict_artifacts(const RunContext& ctx, const FittedRun& fit) {
  const PredictConfig& pc = ctx.config.predict;
  const int dof = pc.dof.value_or(static_cast<int>(ctx.config.model.parameter_count()));
  const double threshold = -chi2_quantile_halved_small_dof(pc.confidence_level, dof);
  const long long max_attempts =
      pc.max_attempts > 0 ? pc.max_attempts : 1000000LL * pc.samples;

  // sampling runs on its own seed stream family, decoupled from the stream
  // that generated the data
  const std::uint64_t sampling_seed = effective_seed(ctx) ^ 0x9e3779b97f4a7c15ULL;
  const auto sample = sample_confidence_set(fit.nl, threshold, pc.samples, max_attempts,
                                            sampling_seed, ctx.threads);

  const auto coords = prediction_coordinates(ctx);
  const auto band = prediction_band(fit.problem.model(), sample, ctx.config.noise, coords,
                                    pc.lower_quantile, pc.upper_quantile, fit.mle.argmax,
                                    pc.confidence_level);
  write_band_csv(band, ctx.output_dir / "band.csv");

  Figure fig;
  fig.x_label = fit.problem.dataset().coordinate_kind() == CoordinateKind::time ? "time"
                                                                                 : "position";
  fig.y_label = "observation";
  fig.title = "prediction band (" + format_double(100.0 * pc.confidence_level) + "%)";
  Series shade;
  shade.style = Series::Style::band_fill;
  shade.color = "#2ca02c";
  shade.x = band.coordinates;
  shade.y = band.lower;
  shade.y2 = band.upper;
  fig.series.push_back(std::move(shade));
  Series curve;
  curve.style = Series::Style::line;
  curve.color = "#d62728";
  curve.x = band.coordinates;
  curve.y = band.mle_curve;
  fig.series.push_back(std::move(curve));
  Series dots;
  dots.style = Series::Style::dots;
  dots.color = "#1f77b4";
  for (const DataRecord& r : fit.problem.dataset().records()) {
    dots.x.push_back(r.coordinate);
    dots.y.push_back(r.observation);
  }
  fig.series.push_back(std::move(dots));
  write_svg(fig, ctx.output_dir / "band.svg");

  return {"band.csv", "band.svg"};
}

}  // namespace

std::vector<std::string> cmd_simulate(const RunContext& ctx) {
  if (!ctx.config.synthetic)
    throw SchemaError("config: 'simulate' needs a data.synthetic recipe");
  std::filesystem::create_directories(ctx.output_dir);
  write_dataset(synthesize_dataset(ctx), ctx.output_dir / "dataset.csv");
  return {"dataset.csv"};
}

std::vector<std::string> cmd_fit(const RunContext& ctx) {
  std::filesystem::create_directories(ctx.output_dir);
  const FittedRun fit = run_fit(ctx, obtain_dataset(ctx));
  return write_fit_artifacts(ctx, fit);
}

std::vector<std::string> cmd_profile(const RunContext& ctx) {
  std::filesystem::create_directories(ctx.output_dir);
  const FittedRun fit = run_fit(ctx, obtain_dataset(ctx));
  return write_profile_artifacts(ctx, fit);
}

std::vector<std::string> cmd_predict(const RunContext& ctx) {
  std::filesystem::create_directories(ctx.output_dir);
  const FittedRun fit = run_fit(ctx, obtain_dataset(ctx));
  return write_predict_artifacts(ctx, fit);
}

std::vector<std::string> cmd_report(const RunContext& ctx) {
  std::filesystem::create_directories(ctx.output_dir);
  std::vector<std::string> artifacts;

  Dataset data = obtain_dataset(ctx);
  if (ctx.config.synthetic && !ctx.config.data_path) {
    write_dataset(data, ctx.output_dir / "dataset.csv");
    artifacts.push_back("dataset.csv");
  }
  const FittedRun fit = run_fit(ctx, std::move(data));

  for (auto&& name : write_fit_artifacts(ctx, fit)) artifacts.push_back(name);
  for (auto&& name : write_profile_artifacts(ctx, fit)) artifacts.push_back(name);
  for (auto&& name : write_predict_artifacts(ctx, fit)) artifacts.push_back(name);

  ordered_json manifest;
  manifest["output"] = ctx.output_dir.string();
  manifest["artifacts"] = artifacts;
  dump_json(manifest, ctx.output_dir / "manifest.json");
  artifacts.push_back("manifest.json");
  return artifacts;
}

}  // namespace proflik::cli
