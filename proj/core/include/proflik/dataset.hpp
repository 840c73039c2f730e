#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "proflik/model.hpp"
#include "proflik/noise.hpp"
#include "proflik/parameter_vector.hpp"

namespace proflik {

enum class CoordinateKind { time, space };

CoordinateKind coordinate_kind_from_string(std::string_view kind);
std::string to_string(CoordinateKind kind);

struct DataRecord {
  double coordinate;
  double observation;
  bool operator==(const DataRecord&) const = default;
};

// How a synthetic dataset was produced; written into the CSV header so
// fixtures are self-describing.
struct Provenance {
  std::string model_id;                                     // empty when unknown
  std::vector<std::pair<std::string, double>> context;      // model constants used
  std::vector<std::pair<std::string, double>> true_theta;   // generating parameters
  std::optional<std::uint64_t> seed;
  bool operator==(const Provenance&) const = default;
};

// Immutable set of (coordinate, observation) records under one noise model.
// Coordinates are strictly increasing; log-normal data is strictly positive.
class Dataset {
public:
  Dataset(CoordinateKind kind, std::vector<DataRecord> records, NoiseSpec noise,
          std::optional<Provenance> provenance = std::nullopt);

  CoordinateKind coordinate_kind() const { return kind_; }
  const std::vector<DataRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  const NoiseSpec& noise() const { return noise_; }
  const std::optional<Provenance>& provenance() const { return provenance_; }

  bool operator==(const Dataset&) const = default;

private:
  CoordinateKind kind_;
  std::vector<DataRecord> records_;
  NoiseSpec noise_;
  std::optional<Provenance> provenance_;
};

// Corrupt the model solution at each coordinate with one noise draw, using a
// sub-stream derived from the seed.  Pure function of its inputs: the same
// arguments always produce bit-identical datasets.
Dataset generate_synthetic(const ProcessModelSpec& spec, const ParameterVector& true_theta,
                           std::span<const double> coordinates, const NoiseSpec& noise,
                           std::uint64_t seed);

// CSV with `# key=value` header comments followed by coordinate,observation
// rows; numbers in shortest round-trip form.
Dataset read_dataset(const std::filesystem::path& path);
void write_dataset(const Dataset& dataset, const std::filesystem::path& path);

}  // namespace proflik
