#include <CLI11.hpp>
#include <functional>
#include <iostream>
#include <string>

#include "commands.hpp"
#include "proflik/errors.hpp"

namespace {

using proflik::cli::RunContext;

constexpr int kExitConfigError = 2;
constexpr int kExitNumericalError = 3;

int dispatch(const std::function<std::vector<std::string>(const RunContext&)>& command,
             const std::string& config_path, const std::string& output_override,
             std::int64_t seed, bool seed_set, int threads) {
  try {
    RunContext ctx;
    ctx.config = proflik::cli::RunConfig::load(config_path);
    ctx.output_dir = output_override.empty() ? ctx.config.output_dir
                                             : std::filesystem::path(output_override);
    if (seed_set) ctx.seed_override = static_cast<std::uint64_t>(seed);
    ctx.threads = threads;
    const auto artifacts = command(ctx);
    for (const std::string& name : artifacts)
      std::cout << (ctx.output_dir / name).string() << '\n';
    return 0;
  } catch (const proflik::SchemaError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const proflik::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumericalError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Likelihood-based parameter inference, practical-identifiability profiling\n"
               "and prediction bands for closed-form process models"};
  app.require_subcommand(1);
  app.fallthrough(true);  // let `proflik <cmd> --config ...` reach the global flags

  std::string config_path;
  std::string output_override;
  std::int64_t seed = 0;
  int threads = 1;

  app.add_option("--config", config_path, "run configuration (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--output", output_override, "output directory (overrides the config)");
  auto* seed_opt = app.add_option("--seed", seed, "seed override for synthetic data and sampling");
  app.add_option("--threads", threads, "worker threads for profiling and rejection sampling")
      ->check(CLI::PositiveNumber);

  struct Sub {
    const char* name;
    const char* help;
    std::vector<std::string> (*fn)(const RunContext&);
  };
  const Sub subs[] = {
      {"simulate", "generate a synthetic dataset CSV from the config recipe",
       proflik::cli::cmd_simulate},
      {"fit", "maximum likelihood fit; writes fit.json and the MLE curve",
       proflik::cli::cmd_fit},
      {"profile", "univariate profile likelihoods with confidence intervals",
       proflik::cli::cmd_profile},
      {"predict", "confidence-set sampling and the prediction band",
       proflik::cli::cmd_predict},
      {"report", "simulate (if synthetic), fit, profile and predict in one run",
       proflik::cli::cmd_report},
  };
  for (const Sub& sub : subs) app.add_subcommand(sub.name, sub.help);

  CLI11_PARSE(app, argc, argv);

  for (const Sub& sub : subs)
    if (app.get_subcommand(sub.name)->parsed())
      return dispatch(sub.fn, config_path, output_override, seed, seed_opt->count() > 0,
                      threads);
  return kExitConfigError;
}
