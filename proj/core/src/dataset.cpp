#include "proflik/dataset.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "proflik/errors.hpp"
#include "proflik/numfmt.hpp"

namespace proflik {

CoordinateKind coordinate_kind_from_string(std::string_view kind) {
  if (kind == "time") return CoordinateKind::time;
  if (kind == "space") return CoordinateKind::space;
  throw SchemaError("unknown coordinate kind '" + std::string(kind) + "'");
}

std::string to_string(CoordinateKind kind) {
  return kind == CoordinateKind::time ? "time" : "space";
}

Dataset::Dataset(CoordinateKind kind, std::vector<DataRecord> records, NoiseSpec noise,
                 std::optional<Provenance> provenance)
    : kind_(kind), records_(std::move(records)), noise_(noise), provenance_(std::move(provenance)) {
  std::size_t min_records = 2;
  if (provenance_ && !provenance_->model_id.empty()) {
    // With a known generating model the data must at least determine the
    // parameters: one record more than the parameter count.
    const auto spec = ProcessModelSpec::make(provenance_->model_id);
    min_records = spec.parameter_count() + 1;
  }
  if (records_.size() < min_records)
    throw SchemaError("dataset: need at least " + std::to_string(min_records) +
                      " records, got " + std::to_string(records_.size()));
  for (std::size_t i = 0; i < records_.size(); ++i) {
    if (!std::isfinite(records_[i].coordinate) || !std::isfinite(records_[i].observation))
      throw SchemaError("dataset: non-finite record at index " + std::to_string(i));
    if (i > 0 && !(records_[i].coordinate > records_[i - 1].coordinate))
      throw SchemaError("dataset: coordinates must be strictly increasing (record " +
                        std::to_string(i) + ")");
    if (noise_.kind == NoiseKind::multiplicative_lognormal && !(records_[i].observation > 0.0))
      throw SchemaError("dataset: log-normal noise requires positive observations (record " +
                        std::to_string(i) + ")");
  }
}

Dataset generate_synthetic(const ProcessModelSpec& spec, const ParameterVector& true_theta,
                           std::span<const double> coordinates, const NoiseSpec& noise,
                           std::uint64_t seed) {
  if (coordinates.empty()) throw SchemaError("generate_synthetic: empty coordinate grid");
  RngStream stream(seed);
  std::vector<DataRecord> records;
  records.reserve(coordinates.size());
  for (double c : coordinates) {
    const double mean = evaluate_model(spec, true_theta, c);
    records.push_back({c, sample_observation(noise, mean, stream)});
  }

  Provenance prov;
  prov.model_id = to_string(spec.id());
  for (const auto& [name, value] : spec.context().constants()) prov.context.emplace_back(name, value);
  for (std::size_t i = 0; i < true_theta.size(); ++i)
    prov.true_theta.emplace_back(true_theta.name(i), true_theta.value(i));
  prov.seed = seed;

  const CoordinateKind kind =
      spec.time_coordinate() ? CoordinateKind::time : CoordinateKind::space;
  return Dataset(kind, std::move(records), noise, std::move(prov));
}

namespace {

std::vector<std::pair<std::string, double>> parse_named_values(const std::string& text,
                                                               long line_no) {
  // "name:value,name:value"
  std::vector<std::pair<std::string, double>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected name:value in '" + item + "'", line_no);
    out.emplace_back(item.substr(0, colon), parse_double(item.substr(colon + 1)));
  }
  return out;
}

std::string format_named_values(const std::vector<std::pair<std::string, double>>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += values[i].first + ':' + format_double(values[i].second);
  }
  return out;
}

}  // namespace

Dataset read_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open dataset file '" + path.string() + "'");

  std::optional<CoordinateKind> kind;
  std::optional<NoiseSpec> noise;
  Provenance prov;
  bool has_prov = false;
  std::vector<DataRecord> records;
  bool header_seen = false;

  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string body = line.substr(1);
      if (!body.empty() && body.front() == ' ') body.erase(0, 1);
      const auto eq = body.find('=');
      if (eq == std::string::npos) continue;  // free-form comment
      const std::string key = body.substr(0, eq);
      const std::string value = body.substr(eq + 1);
      if (key == "model") {
        prov.model_id = value;
        has_prov = true;
      } else if (key == "context") {
        prov.context = parse_named_values(value, line_no);
        has_prov = true;
      } else if (key == "coordinate") {
        kind = coordinate_kind_from_string(value);
      } else if (key == "noise") {
        const auto comma = value.find(",sigma=");
        if (comma == std::string::npos)
          throw ParseError("noise header must be 'kind,sigma=value'", line_no);
        noise = NoiseSpec::make(noise_kind_from_string(value.substr(0, comma)),
                                parse_double(value.substr(comma + 7)));
      } else if (key == "seed") {
        prov.seed = static_cast<std::uint64_t>(parse_integer(value));
        has_prov = true;
      } else if (key == "true_theta") {
        prov.true_theta = parse_named_values(value, line_no);
        has_prov = true;
      }
      continue;
    }
    if (!header_seen) {
      if (line != "coordinate,observation")
        throw ParseError("expected header 'coordinate,observation', got '" + line + "'", line_no);
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw ParseError("expected 'coordinate,observation' row", line_no);
    try {
      records.push_back(
          {parse_double(line.substr(0, comma)), parse_double(line.substr(comma + 1))});
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (!noise) throw ParseError("dataset file is missing the '# noise=' header");
  if (!kind) throw ParseError("dataset file is missing the '# coordinate=' header");
  if (!header_seen) throw ParseError("dataset file has no 'coordinate,observation' header row");

  return Dataset(*kind, std::move(records), *noise,
                 has_prov ? std::optional<Provenance>(std::move(prov)) : std::nullopt);
}

void write_dataset(const Dataset& dataset, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // '\n' line endings everywhere
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");

  if (dataset.provenance()) {
    const Provenance& prov = *dataset.provenance();
    if (!prov.model_id.empty()) out << "# model=" << prov.model_id << '\n';
    if (!prov.context.empty()) out << "# context=" << format_named_values(prov.context) << '\n';
  }
  out << "# coordinate=" << to_string(dataset.coordinate_kind()) << '\n';
  out << "# noise=" << to_string(dataset.noise().kind)
      << ",sigma=" << format_double(dataset.noise().sigma) << '\n';
  if (dataset.provenance()) {
    const Provenance& prov = *dataset.provenance();
    if (prov.seed) out << "# seed=" << *prov.seed << '\n';
    if (!prov.true_theta.empty())
      out << "# true_theta=" << format_named_values(prov.true_theta) << '\n';
  }
  out << "coordinate,observation\n";
  for (const DataRecord& r : dataset.records())
    out << format_double(r.coordinate) << ',' << format_double(r.observation) << '\n';
  if (!out) throw std::runtime_error("failed while writing '" + path.string() + "'");
}

}  // namespace proflik
