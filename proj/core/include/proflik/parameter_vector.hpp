#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace proflik {

// Ordered, named real parameters with finite box bounds.  Values always
// satisfy lower <= value <= upper componentwise; violations throw SchemaError
// on construction or mutation.
class ParameterVector {
public:
  ParameterVector() = default;
  ParameterVector(std::vector<std::string> names, std::vector<double> values,
                  std::vector<double> lower_bounds, std::vector<double> upper_bounds);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }

  const std::vector<std::string>& names() const { return names_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& lower_bounds() const { return lower_; }
  const std::vector<double>& upper_bounds() const { return upper_; }

  const std::string& name(std::size_t i) const { return names_.at(i); }
  double value(std::size_t i) const { return values_.at(i); }
  double lower_bound(std::size_t i) const { return lower_.at(i); }
  double upper_bound(std::size_t i) const { return upper_.at(i); }

  // Index of a named parameter; throws SchemaError when absent.
  std::size_t index_of(std::string_view name) const;
  bool has(std::string_view name) const;
  double value_of(std::string_view name) const { return values_[index_of(name)]; }

  // Replace all values at once (bounds revalidated).
  void set_values(std::span<const double> values);
  void set_value(std::size_t i, double v);

  ParameterVector with_values(std::vector<double> values) const;
  ParameterVector with_value(std::string_view name, double v) const;

  // Same names in the same order (bounds may differ).
  bool same_schema(const ParameterVector& other) const { return names_ == other.names_; }

  // Componentwise clamp of an arbitrary point onto the box.
  void project_onto_box(std::span<double> point) const;

  bool contains(std::span<const double> point) const;

  // Copy of this vector with every value at the center of its box.
  ParameterVector at_box_midpoint() const;

  // Drop the named component (used to build nuisance subproblems).
  ParameterVector without(std::string_view name) const;

private:
  void validate() const;

  std::vector<std::string> names_;
  std::vector<double> values_;
  std::vector<double> lower_;
  std::vector<double> upper_;
};

}  // namespace proflik
