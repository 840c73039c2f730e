#include "config.hpp"

#include <fstream>
#include <json.hpp>

#include "proflik/errors.hpp"

namespace proflik::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& why) {
  throw SchemaError("config: field '" + field + "' " + why);
}

const json& require(const json& parent, const std::string& key, const std::string& path) {
  if (!parent.contains(key)) fail(path + key, "is missing");
  return parent.at(key);
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "must be a number");
  return j.get<double>();
}

std::string text(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "must be a string");
  return j.get<std::string>();
}

// {"from": a, "to": b, "step": s} | {"from": a, "to": b, "points": n} | [..]
std::vector<double> coordinate_list(const json& j, const std::string& path) {
  std::vector<double> out;
  if (j.is_array()) {
    for (const auto& v : j) out.push_back(number(v, path + "[]"));
  } else if (j.is_object()) {
    const double from = number(require(j, "from", path + "."), path + ".from");
    const double to = number(require(j, "to", path + "."), path + ".to");
    if (!(to > from)) fail(path, "needs to > from");
    if (j.contains("step")) {
      const double step = number(j.at("step"), path + ".step");
      if (!(step > 0.0)) fail(path + ".step", "must be positive");
      for (double x = from; x <= to + 0.5 * step; x += step) out.push_back(x);
    } else if (j.contains("points")) {
      const auto n = j.at("points").get<std::size_t>();
      if (n < 2) fail(path + ".points", "must be at least 2");
      for (std::size_t i = 0; i < n; ++i)
        out.push_back(from + (to - from) * static_cast<double>(i) / static_cast<double>(n - 1));
    } else {
      fail(path, "needs either 'step' or 'points'");
    }
  } else {
    fail(path, "must be an array or a {from,to,step|points} object");
  }
  if (out.size() < 2) fail(path, "produced fewer than 2 coordinates");
  for (std::size_t i = 1; i < out.size(); ++i)
    if (!(out[i] > out[i - 1])) fail(path, "must be strictly increasing");
  return out;
}

}  // namespace

RunConfig RunConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("config: cannot open '" + path.string() + "'");
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config: ") + e.what());
  }

  RunConfig cfg;

  // --- model ---
  const json& jmodel = require(root, "model", "");
  const std::string model_id = text(require(jmodel, "id", "model."), "model.id");
  ModelContext context;
  if (jmodel.contains("context")) {
    if (!jmodel.at("context").is_object()) fail("model.context", "must be an object");
    for (const auto& [key, value] : jmodel.at("context").items())
      context.set(key, number(value, "model.context." + key));
  }
  cfg.model = ProcessModelSpec::make(model_id, context);

  std::vector<double> lower = cfg.model.make_parameters().lower_bounds();
  std::vector<double> upper = cfg.model.make_parameters().upper_bounds();
  const auto& names = cfg.model.parameter_names();
  if (jmodel.contains("bounds")) {
    const json& jbounds = jmodel.at("bounds");
    if (!jbounds.is_object()) fail("model.bounds", "must be an object");
    for (const auto& [key, value] : jbounds.items()) {
      const auto it = std::find(names.begin(), names.end(), key);
      if (it == names.end()) fail("model.bounds." + key, "is not a parameter of " + model_id);
      if (!value.is_array() || value.size() != 2)
        fail("model.bounds." + key, "must be [lower, upper]");
      const std::size_t i = it - names.begin();
      lower[i] = number(value.at(0), "model.bounds." + key + "[0]");
      upper[i] = number(value.at(1), "model.bounds." + key + "[1]");
      if (!(lower[i] < upper[i])) fail("model.bounds." + key, "needs lower < upper");
    }
  }
  std::vector<double> start(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) start[i] = 0.5 * (lower[i] + upper[i]);
  if (jmodel.contains("start")) {
    const json& jstart = jmodel.at("start");
    if (!jstart.is_object()) fail("model.start", "must be an object");
    for (const auto& [key, value] : jstart.items()) {
      const auto it = std::find(names.begin(), names.end(), key);
      if (it == names.end()) fail("model.start." + key, "is not a parameter of " + model_id);
      start[it - names.begin()] = number(value, "model.start." + key);
    }
    cfg.explicit_start = true;
  }
  try {
    cfg.parameters = cfg.model.make_parameters(start, lower, upper);
  } catch (const SchemaError& e) {
    throw SchemaError(std::string("config: model bounds/start invalid: ") + e.what());
  }

  // --- noise ---
  const json& jnoise = require(root, "noise", "");
  cfg.noise = NoiseSpec::make(
      noise_kind_from_string(text(require(jnoise, "kind", "noise."), "noise.kind")),
      number(require(jnoise, "sigma", "noise."), "noise.sigma"));

  // --- data ---
  const json& jdata = require(root, "data", "");
  if (jdata.contains("path")) cfg.data_path = text(jdata.at("path"), "data.path");
  if (jdata.contains("synthetic")) {
    const json& js = jdata.at("synthetic");
    SyntheticRecipe recipe;
    const json& jtheta = require(js, "true_theta", "data.synthetic.");
    if (!jtheta.is_object()) fail("data.synthetic.true_theta", "must be an object");
    for (const auto& [key, value] : jtheta.items())
      recipe.true_theta[key] = number(value, "data.synthetic.true_theta." + key);
    for (const std::string& name : names)
      if (!recipe.true_theta.count(name))
        fail("data.synthetic.true_theta." + name, "is missing");
    recipe.coordinates = coordinate_list(require(js, "coordinates", "data.synthetic."),
                                         "data.synthetic.coordinates");
    if (js.contains("seed")) recipe.seed = js.at("seed").get<std::uint64_t>();
    cfg.synthetic = std::move(recipe);
  }
  if (!cfg.data_path && !cfg.synthetic)
    fail("data", "needs either 'path' or a 'synthetic' recipe");

  // --- optimizer ---
  if (root.contains("optimizer")) {
    const json& jopt = root.at("optimizer");
    if (jopt.contains("x_tolerance"))
      cfg.optimizer.x_tolerance = number(jopt.at("x_tolerance"), "optimizer.x_tolerance");
    if (jopt.contains("f_tolerance"))
      cfg.optimizer.f_tolerance = number(jopt.at("f_tolerance"), "optimizer.f_tolerance");
    if (jopt.contains("max_evaluations"))
      cfg.optimizer.max_evaluations = jopt.at("max_evaluations").get<long>();
    if (jopt.contains("initial_simplex_scale"))
      cfg.optimizer.initial_simplex_scale =
          number(jopt.at("initial_simplex_scale"), "optimizer.initial_simplex_scale");
    if (jopt.contains("restarts")) cfg.optimizer.restarts = jopt.at("restarts").get<int>();
    try {
      cfg.optimizer.validate(names.size());
    } catch (const SchemaError& e) {
      throw SchemaError(std::string("config: optimizer settings invalid: ") + e.what());
    }
  }

  // --- profile ---
  if (root.contains("profile")) {
    const json& jp = root.at("profile");
    if (jp.contains("confidence_level")) {
      cfg.profile.confidence_level = number(jp.at("confidence_level"), "profile.confidence_level");
      if (!(cfg.profile.confidence_level > 0.0 && cfg.profile.confidence_level < 1.0))
        fail("profile.confidence_level", "must lie inside (0,1)");
    }
    if (jp.contains("points")) {
      cfg.profile.default_points = jp.at("points").get<std::size_t>();
      if (cfg.profile.default_points < 5) fail("profile.points", "must be at least 5");
    }
    if (jp.contains("warm_start")) cfg.profile.warm_start = jp.at("warm_start").get<bool>();
    if (jp.contains("flatness_fraction"))
      cfg.profile.flatness_fraction =
          number(jp.at("flatness_fraction"), "profile.flatness_fraction");
    if (jp.contains("grids")) {
      const json& jg = jp.at("grids");
      if (!jg.is_object()) fail("profile.grids", "must be an object");
      for (const auto& [key, value] : jg.items()) {
        if (std::find(names.begin(), names.end(), key) == names.end())
          fail("profile.grids." + key, "is not a parameter of " + model_id);
        cfg.profile.grids[key] = coordinate_list(value, "profile.grids." + key);
      }
    }
  }

  // --- predict ---
  if (root.contains("predict")) {
    const json& jp = root.at("predict");
    if (jp.contains("samples")) {
      cfg.predict.samples = jp.at("samples").get<int>();
      if (cfg.predict.samples < 1) fail("predict.samples", "must be at least 1");
    }
    if (jp.contains("confidence_level")) {
      cfg.predict.confidence_level =
          number(jp.at("confidence_level"), "predict.confidence_level");
      if (!(cfg.predict.confidence_level > 0.0 && cfg.predict.confidence_level < 1.0))
        fail("predict.confidence_level", "must lie inside (0,1)");
    }
    if (jp.contains("dof")) cfg.predict.dof = jp.at("dof").get<int>();
    if (jp.contains("coordinates"))
      cfg.predict.coordinates = coordinate_list(jp.at("coordinates"), "predict.coordinates");
    if (jp.contains("quantiles")) {
      const json& jq = jp.at("quantiles");
      if (!jq.is_array() || jq.size() != 2) fail("predict.quantiles", "must be [lower, upper]");
      cfg.predict.lower_quantile = number(jq.at(0), "predict.quantiles[0]");
      cfg.predict.upper_quantile = number(jq.at(1), "predict.quantiles[1]");
      if (!(cfg.predict.lower_quantile > 0.0 &&
            cfg.predict.lower_quantile < cfg.predict.upper_quantile &&
            cfg.predict.upper_quantile < 1.0))
        fail("predict.quantiles", "needs 0 < lower < upper < 1");
    }
    if (jp.contains("max_attempts"))
      cfg.predict.max_attempts = jp.at("max_attempts").get<long long>();
  }

  // --- output ---
  if (root.contains("output")) cfg.output_dir = text(root.at("output"), "output");

  return cfg;
}

}  // namespace proflik::cli
