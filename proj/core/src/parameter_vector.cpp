#include "proflik/parameter_vector.hpp"

#include <algorithm>
#include <cmath>

#include "proflik/errors.hpp"

namespace proflik {

ParameterVector::ParameterVector(std::vector<std::string> names, std::vector<double> values,
                                 std::vector<double> lower_bounds,
                                 std::vector<double> upper_bounds)
    : names_(std::move(names)),
      values_(std::move(values)),
      lower_(std::move(lower_bounds)),
      upper_(std::move(upper_bounds)) {
  validate();
}

void ParameterVector::validate() const {
  const std::size_t n = names_.size();
  if (values_.size() != n || lower_.size() != n || upper_.size() != n)
    throw SchemaError("parameter vector: names, values and bounds must have equal length");
  for (std::size_t i = 0; i < n; ++i) {
    if (names_[i].empty()) throw SchemaError("parameter vector: empty parameter name");
    for (std::size_t j = i + 1; j < n; ++j)
      if (names_[i] == names_[j])
        throw SchemaError("parameter vector: duplicate parameter name '" + names_[i] + "'");
    if (!std::isfinite(lower_[i]) || !std::isfinite(upper_[i]))
      throw SchemaError("parameter vector: bounds for '" + names_[i] + "' must be finite");
    if (lower_[i] > upper_[i])
      throw SchemaError("parameter vector: lower bound exceeds upper bound for '" + names_[i] +
                        "'");
    if (!std::isfinite(values_[i]) || values_[i] < lower_[i] || values_[i] > upper_[i])
      throw SchemaError("parameter vector: value " + std::to_string(values_[i]) + " for '" +
                        names_[i] + "' outside bounds [" + std::to_string(lower_[i]) + ", " +
                        std::to_string(upper_[i]) + "]");
  }
}

std::size_t ParameterVector::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw SchemaError("parameter vector: no parameter named '" + std::string(name) + "'");
}

bool ParameterVector::has(std::string_view name) const {
  return std::any_of(names_.begin(), names_.end(),
                     [&](const std::string& n) { return n == name; });
}

void ParameterVector::set_values(std::span<const double> values) {
  if (values.size() != names_.size())
    throw SchemaError("parameter vector: wrong number of values");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] < lower_[i] || values[i] > upper_[i])
      throw SchemaError("parameter vector: value " + std::to_string(values[i]) + " for '" +
                        names_[i] + "' outside bounds");
  }
  values_.assign(values.begin(), values.end());
}

void ParameterVector::set_value(std::size_t i, double v) {
  if (i >= names_.size()) throw SchemaError("parameter vector: index out of range");
  if (!std::isfinite(v) || v < lower_[i] || v > upper_[i])
    throw SchemaError("parameter vector: value " + std::to_string(v) + " for '" + names_[i] +
                      "' outside bounds");
  values_[i] = v;
}

ParameterVector ParameterVector::with_values(std::vector<double> values) const {
  return ParameterVector(names_, std::move(values), lower_, upper_);
}

ParameterVector ParameterVector::with_value(std::string_view name, double v) const {
  ParameterVector out = *this;
  out.set_value(index_of(name), v);
  return out;
}

void ParameterVector::project_onto_box(std::span<double> point) const {
  if (point.size() != names_.size())
    throw SchemaError("parameter vector: wrong point dimension for projection");
  for (std::size_t i = 0; i < point.size(); ++i)
    point[i] = std::clamp(point[i], lower_[i], upper_[i]);
}

bool ParameterVector::contains(std::span<const double> point) const {
  if (point.size() != names_.size()) return false;
  for (std::size_t i = 0; i < point.size(); ++i)
    if (!(point[i] >= lower_[i] && point[i] <= upper_[i])) return false;
  return true;
}

ParameterVector ParameterVector::at_box_midpoint() const {
  std::vector<double> mid(size());
  for (std::size_t i = 0; i < size(); ++i) mid[i] = 0.5 * (lower_[i] + upper_[i]);
  return with_values(std::move(mid));
}

ParameterVector ParameterVector::without(std::string_view name) const {
  const std::size_t drop = index_of(name);
  std::vector<std::string> names;
  std::vector<double> values, lower, upper;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i == drop) continue;
    names.push_back(names_[i]);
    values.push_back(values_[i]);
    lower.push_back(lower_[i]);
    upper.push_back(upper_[i]);
  }
  return ParameterVector(std::move(names), std::move(values), std::move(lower), std::move(upper));
}

}  // namespace proflik
