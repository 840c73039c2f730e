#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "proflik/parameter_vector.hpp"

namespace proflik {

// The closed-form process models the library knows how to evaluate.
enum class ModelId {
  cooling,               // Newton cooling, T(t) over time
  advection_diffusion,   // spreading pulse concentration u(x) at a fixed time
  morphogen_bvp,         // steady-state morphogen gradient U(x), (J, D, k)
  morphogen_bvp_reparam  // same gradient in identifiable (alpha, beta) form
};

ModelId model_id_from_string(std::string_view id);
std::string to_string(ModelId id);

// Named constants a model needs besides its fitted parameters (initial
// temperature, background concentration, snapshot time).
class ModelContext {
public:
  ModelContext() = default;
  explicit ModelContext(std::map<std::string, double> constants)
      : constants_(std::move(constants)) {}

  double at(std::string_view name) const;
  bool has(std::string_view name) const;
  void set(const std::string& name, double value) { constants_[name] = value; }
  const std::map<std::string, double>& constants() const { return constants_; }

private:
  std::map<std::string, double> constants_;
};

// A registered model together with its parameter schema, default box bounds
// and context constants.  Immutable once built; cheap to copy and share.
class ProcessModelSpec {
public:
  // Registry entry with the model's default bounds and default context; any
  // constants passed in override the defaults.  Missing required constants
  // throw SchemaError.
  static ProcessModelSpec make(ModelId id, const ModelContext& context_overrides = {});
  static ProcessModelSpec make(std::string_view id, const ModelContext& context_overrides = {});

  ModelId id() const { return id_; }
  const std::vector<std::string>& parameter_names() const { return schema_.names(); }
  std::size_t parameter_count() const { return schema_.size(); }
  const ModelContext& context() const { return context_; }

  // True when data coordinates are times rather than positions.
  bool time_coordinate() const { return id_ == ModelId::cooling; }

  // Default-bounds schema with the given values (defaults to box midpoint).
  ParameterVector make_parameters() const { return schema_.at_box_midpoint(); }
  ParameterVector make_parameters(std::vector<double> values) const;

  // Same schema with user-supplied bounds.
  ParameterVector make_parameters(std::vector<double> values, std::vector<double> lower,
                                  std::vector<double> upper) const;

private:
  ProcessModelSpec(ModelId id, ParameterVector schema, ModelContext context)
      : id_(id), schema_(std::move(schema)), context_(std::move(context)) {}

  ModelId id_;
  ParameterVector schema_;  // names + default bounds; values unused
  ModelContext context_;
};

// (T0 - T_a) exp(-k t) + T_a.  theta = [T_a, k]; context: T0.
double cooling_solution(const ParameterVector& theta, double t, const ModelContext& context);

// u_b + (u0/2)[erf((h-(x-vt))/(2 sqrt(Dt))) + erf((h+(x-vt))/(2 sqrt(Dt)))].
// theta = [u0, h, D, v]; context: u_b and the snapshot time t.
double advection_diffusion_solution(const ParameterVector& theta, double x,
                                    const ModelContext& context);

// (J/sqrt(Dk)) exp(-x sqrt(k/D)).  theta = [J, D, k].
double morphogen_bvp_solution(const ParameterVector& theta, double x);

// alpha exp(-beta x).  theta = [alpha, beta].
double morphogen_reparam_solution(const ParameterVector& theta, double x);

// (J, D, k) -> (alpha, beta) = (J/sqrt(kD), sqrt(k/D)).
ParameterVector reparam_map(const ParameterVector& theta);

// Uniform dispatch over the registry; validates theta against the schema.
double evaluate_model(const ProcessModelSpec& spec, const ParameterVector& theta,
                      double coordinate);

// theta and context folded into a plain coordinate function, for tight loops
// over many coordinates (likelihood sums, band envelopes).  Equivalent to
// evaluate_model at every point.
std::function<double(double)> curve_evaluator(const ProcessModelSpec& spec,
                                              const ParameterVector& theta);

}  // namespace proflik
