#include "proflik/model.hpp"

#include <cmath>
#include <string>

#include "proflik/errors.hpp"
#include "proflik/specfun.hpp"

namespace proflik {

ModelId model_id_from_string(std::string_view id) {
  if (id == "cooling") return ModelId::cooling;
  if (id == "advection_diffusion") return ModelId::advection_diffusion;
  if (id == "morphogen_bvp") return ModelId::morphogen_bvp;
  if (id == "morphogen_bvp_reparam") return ModelId::morphogen_bvp_reparam;
  throw SchemaError("unknown model id '" + std::string(id) + "'");
}

std::string to_string(ModelId id) {
  switch (id) {
    case ModelId::cooling: return "cooling";
    case ModelId::advection_diffusion: return "advection_diffusion";
    case ModelId::morphogen_bvp: return "morphogen_bvp";
    case ModelId::morphogen_bvp_reparam: return "morphogen_bvp_reparam";
  }
  throw SchemaError("unknown model id");
}

double ModelContext::at(std::string_view name) const {
  auto it = constants_.find(std::string(name));
  if (it == constants_.end())
    throw SchemaError("model context: missing constant '" + std::string(name) + "'");
  return it->second;
}

bool ModelContext::has(std::string_view name) const {
  return constants_.count(std::string(name)) > 0;
}

namespace {

struct RegistryEntry {
  std::vector<std::string> names;
  std::vector<double> lower;
  std::vector<double> upper;
  std::map<std::string, double> default_context;
  std::vector<std::string> required_context;
};

const RegistryEntry& registry_entry(ModelId id) {
  // Default boxes are generous enough to contain the usual estimates and
  // interval endpoints for each model; configs may override them.
  static const RegistryEntry cooling{
      {"T_a", "k"}, {0.0, 0.001}, {50.0, 0.5}, {{"T0", 180.0}}, {"T0"}};
  static const RegistryEntry advdiff{{"u0", "h", "D", "v"},
                                     {0.1, 20.0, 1.0, 0.1},
                                     {3.0, 80.0, 30.0, 3.0},
                                     {{"u_b", 1.0}, {"t", 50.0}},
                                     {"u_b", "t"}};
  static const RegistryEntry bvp{
      {"J", "D", "k"}, {0.01, 0.01, 0.001}, {10.0, 10.0, 1.0}, {}, {}};
  static const RegistryEntry reparam{
      {"alpha", "beta"}, {0.1, 0.01}, {20.0, 2.0}, {}, {}};
  switch (id) {
    case ModelId::cooling: return cooling;
    case ModelId::advection_diffusion: return advdiff;
    case ModelId::morphogen_bvp: return bvp;
    case ModelId::morphogen_bvp_reparam: return reparam;
  }
  throw SchemaError("unknown model id");
}

}  // namespace

ProcessModelSpec ProcessModelSpec::make(ModelId id, const ModelContext& context_overrides) {
  const RegistryEntry& entry = registry_entry(id);
  std::map<std::string, double> constants = entry.default_context;
  for (const auto& [name, value] : context_overrides.constants()) constants[name] = value;
  ModelContext context(std::move(constants));
  for (const std::string& required : entry.required_context)
    if (!context.has(required))
      throw SchemaError("model '" + to_string(id) + "' requires context constant '" + required +
                        "'");
  std::vector<double> mid(entry.names.size());
  for (std::size_t i = 0; i < mid.size(); ++i) mid[i] = 0.5 * (entry.lower[i] + entry.upper[i]);
  ParameterVector schema(entry.names, std::move(mid), entry.lower, entry.upper);
  return ProcessModelSpec(id, std::move(schema), std::move(context));
}

ProcessModelSpec ProcessModelSpec::make(std::string_view id,
                                        const ModelContext& context_overrides) {
  return make(model_id_from_string(id), context_overrides);
}

ParameterVector ProcessModelSpec::make_parameters(std::vector<double> values) const {
  return schema_.with_values(std::move(values));
}

ParameterVector ProcessModelSpec::make_parameters(std::vector<double> values,
                                                  std::vector<double> lower,
                                                  std::vector<double> upper) const {
  return ParameterVector(schema_.names(), std::move(values), std::move(lower), std::move(upper));
}

double cooling_solution(const ParameterVector& theta, double t, const ModelContext& context) {
  const double ambient = theta.value(0);
  const double rate = theta.value(1);
  if (!(rate > 0.0)) throw DomainError("cooling: heat transfer coefficient must be positive");
  if (t < 0.0) throw DomainError("cooling: time must be nonnegative, got " + std::to_string(t));
  const double initial = context.at("T0");
  return (initial - ambient) * std::exp(-rate * t) + ambient;
}

double advection_diffusion_solution(const ParameterVector& theta, double x,
                                    const ModelContext& context) {
  const double amplitude = theta.value(0);
  const double halfwidth = theta.value(1);
  const double diffusivity = theta.value(2);
  const double velocity = theta.value(3);
  const double background = context.at("u_b");
  const double time = context.at("t");
  if (!(diffusivity > 0.0))
    throw DomainError("advection-diffusion: diffusivity must be positive");
  if (!(time > 0.0)) throw DomainError("advection-diffusion: snapshot time must be positive");
  const double spread = 2.0 * std::sqrt(diffusivity * time);
  const double xi = x - velocity * time;
  return background + 0.5 * amplitude *
                          (specfun::erf((halfwidth - xi) / spread) +
                           specfun::erf((halfwidth + xi) / spread));
}

double morphogen_bvp_solution(const ParameterVector& theta, double x) {
  const double flux = theta.value(0);
  const double diffusivity = theta.value(1);
  const double decay = theta.value(2);
  if (!(flux > 0.0 && diffusivity > 0.0 && decay > 0.0))
    throw DomainError("morphogen BVP: J, D and k must all be positive");
  if (x < 0.0) throw DomainError("morphogen BVP: position must be nonnegative");
  return flux / std::sqrt(diffusivity * decay) * std::exp(-x * std::sqrt(decay / diffusivity));
}

double morphogen_reparam_solution(const ParameterVector& theta, double x) {
  const double amplitude = theta.value(0);
  const double decay_length_inv = theta.value(1);
  if (!(amplitude > 0.0 && decay_length_inv > 0.0))
    throw DomainError("morphogen reparam: alpha and beta must be positive");
  if (x < 0.0) throw DomainError("morphogen reparam: position must be nonnegative");
  return amplitude * std::exp(-decay_length_inv * x);
}

ParameterVector reparam_map(const ParameterVector& theta) {
  const double flux = theta.value(0);
  const double diffusivity = theta.value(1);
  const double decay = theta.value(2);
  if (!(flux > 0.0 && diffusivity > 0.0 && decay > 0.0))
    throw DomainError("reparam map: J, D and k must all be positive");
  const double alpha = flux / std::sqrt(decay * diffusivity);
  const double beta = std::sqrt(decay / diffusivity);
  // Bounds transform as the image of the (J, D, k) box corners, so the
  // mapped point is always inside its own box.
  const double a_lo = theta.lower_bound(0) /
                      std::sqrt(theta.upper_bound(2) * theta.upper_bound(1));
  const double a_hi = theta.upper_bound(0) /
                      std::sqrt(theta.lower_bound(2) * theta.lower_bound(1));
  const double b_lo = std::sqrt(theta.lower_bound(2) / theta.upper_bound(1));
  const double b_hi = std::sqrt(theta.upper_bound(2) / theta.lower_bound(1));
  return ParameterVector({"alpha", "beta"}, {alpha, beta}, {a_lo, b_lo}, {a_hi, b_hi});
}

double evaluate_model(const ProcessModelSpec& spec, const ParameterVector& theta,
                      double coordinate) {
  if (theta.names() != spec.parameter_names())
    throw SchemaError("parameter vector does not match the '" + to_string(spec.id()) +
                      "' schema");
  switch (spec.id()) {
    case ModelId::cooling: return cooling_solution(theta, coordinate, spec.context());
    case ModelId::advection_diffusion:
      return advection_diffusion_solution(theta, coordinate, spec.context());
    case ModelId::morphogen_bvp: return morphogen_bvp_solution(theta, coordinate);
    case ModelId::morphogen_bvp_reparam: return morphogen_reparam_solution(theta, coordinate);
  }
  throw SchemaError("unknown model id");
}

std::function<double(double)> curve_evaluator(const ProcessModelSpec& spec,
                                              const ParameterVector& theta) {
  if (theta.names() != spec.parameter_names())
    throw SchemaError("parameter vector does not match the '" + to_string(spec.id()) +
                      "' schema");
  switch (spec.id()) {
    case ModelId::cooling: {
      const double ambient = theta.value(0), rate = theta.value(1);
      if (!(rate > 0.0)) throw DomainError("cooling: heat transfer coefficient must be positive");
      const double initial = spec.context().at("T0");
      return [=](double t) {
        if (t < 0.0)
          throw DomainError("cooling: time must be nonnegative, got " + std::to_string(t));
        return (initial - ambient) * std::exp(-rate * t) + ambient;
      };
    }
    case ModelId::advection_diffusion: {
      const double amplitude = theta.value(0), halfwidth = theta.value(1);
      const double diffusivity = theta.value(2), velocity = theta.value(3);
      const double background = spec.context().at("u_b");
      const double time = spec.context().at("t");
      if (!(diffusivity > 0.0))
        throw DomainError("advection-diffusion: diffusivity must be positive");
      if (!(time > 0.0)) throw DomainError("advection-diffusion: snapshot time must be positive");
      const double spread = 2.0 * std::sqrt(diffusivity * time);
      const double shift = velocity * time;
      return [=](double x) {
        const double xi = x - shift;
        return background + 0.5 * amplitude * (specfun::erf((halfwidth - xi) / spread) +
                                               specfun::erf((halfwidth + xi) / spread));
      };
    }
    case ModelId::morphogen_bvp: {
      const double flux = theta.value(0), diffusivity = theta.value(1), decay = theta.value(2);
      if (!(flux > 0.0 && diffusivity > 0.0 && decay > 0.0))
        throw DomainError("morphogen BVP: J, D and k must all be positive");
      const double amplitude = flux / std::sqrt(diffusivity * decay);
      const double rate = std::sqrt(decay / diffusivity);
      return [=](double x) {
        if (x < 0.0) throw DomainError("morphogen BVP: position must be nonnegative");
        return amplitude * std::exp(-rate * x);
      };
    }
    case ModelId::morphogen_bvp_reparam: {
      const double amplitude = theta.value(0), rate = theta.value(1);
      if (!(amplitude > 0.0 && rate > 0.0))
        throw DomainError("morphogen reparam: alpha and beta must be positive");
      return [=](double x) {
        if (x < 0.0) throw DomainError("morphogen reparam: position must be nonnegative");
        return amplitude * std::exp(-rate * x);
      };
    }
  }
  throw SchemaError("unknown model id");
}

}  // namespace proflik
