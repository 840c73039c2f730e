#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "proflik/dataset.hpp"
#include "proflik/errors.hpp"

using namespace proflik;

namespace {

std::vector<double> arange(double from, double to, double step) {
  std::vector<double> out;
  for (double x = from; x <= to + 1e-12; x += step) out.push_back(x);
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("synthetic cooling data reproduces the measurement grid") {
  const auto spec = ProcessModelSpec::make(ModelId::cooling);
  const auto truth = spec.make_parameters({20.0, 0.05});
  const auto grid = arange(0, 100, 10);
  const auto data = generate_synthetic(spec, truth, grid, NoiseSpec::gaussian(8.0), 1);

  CHECK(data.size() == 11);
  CHECK(data.coordinate_kind() == CoordinateKind::time);
  REQUIRE(data.provenance().has_value());
  CHECK(data.provenance()->model_id == "cooling");
  CHECK(data.provenance()->seed == 1);
  for (std::size_t i = 0; i < data.size(); ++i)
    CHECK(data.records()[i].coordinate == grid[i]);
}

TEST_CASE("synthetic generation is deterministic and noise-free in the sigma->0 limit") {
  const auto spec = ProcessModelSpec::make(ModelId::morphogen_bvp);
  const auto truth = spec.make_parameters({1.0, 1.0, 0.1});
  const auto grid = arange(0, 20, 2);

  const auto a = generate_synthetic(spec, truth, grid, NoiseSpec::lognormal(0.5), 99);
  const auto b = generate_synthetic(spec, truth, grid, NoiseSpec::lognormal(0.5), 99);
  CHECK(a == b);
  const auto c = generate_synthetic(spec, truth, grid, NoiseSpec::lognormal(0.5), 100);
  CHECK(a != c);

  const auto quiet = generate_synthetic(spec, truth, grid, NoiseSpec::lognormal(1e-12), 7);
  for (const auto& r : quiet.records())
    CHECK(std::abs(r.observation - morphogen_bvp_solution(truth, r.coordinate)) < 1e-9);
}

TEST_CASE("generated gaussian residuals have the right spread") {
  const auto spec = ProcessModelSpec::make(ModelId::cooling);
  const auto truth = spec.make_parameters({20.0, 0.05});
  std::vector<double> grid(10000);
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = 0.01 * static_cast<double>(i);
  const double sigma = 8.0;
  const auto data = generate_synthetic(spec, truth, grid, NoiseSpec::gaussian(sigma), 5);

  double ss = 0.0;
  for (const auto& r : data.records()) {
    const double resid = r.observation - cooling_solution(truth, r.coordinate, spec.context());
    ss += resid * resid;
  }
  const double sd = std::sqrt(ss / static_cast<double>(data.size() - 1));
  CHECK(std::abs(sd - sigma) / sigma < 0.03);
}

TEST_CASE("dataset invariants reject malformed inputs") {
  const auto noise = NoiseSpec::gaussian(1.0);
  CHECK_THROWS_AS(Dataset(CoordinateKind::time, {}, noise), SchemaError);
  CHECK_THROWS_AS(Dataset(CoordinateKind::time, {{0, 1}}, noise), SchemaError);
  CHECK_THROWS_AS(Dataset(CoordinateKind::time, {{0, 1}, {0, 2}}, noise), SchemaError);
  CHECK_THROWS_AS(Dataset(CoordinateKind::time, {{1, 1}, {0, 2}}, noise), SchemaError);
  CHECK_THROWS_AS(
      Dataset(CoordinateKind::space, {{0, 1}, {1, -2}}, NoiseSpec::lognormal(0.5)),
      SchemaError);
  // provenance model pins the minimum record count at parameters + 1
  Provenance prov;
  prov.model_id = "morphogen_bvp";
  CHECK_THROWS_AS(Dataset(CoordinateKind::space, {{0, 1}, {1, 2}, {2, 1}},
                          NoiseSpec::lognormal(0.5), prov),
                  SchemaError);
}

TEST_CASE("dataset round-trips through CSV byte-identically") {
  const auto spec = ProcessModelSpec::make(ModelId::advection_diffusion);
  const auto truth = spec.make_parameters({1.0, 50.0, 10.0, 1.0});
  const auto data =
      generate_synthetic(spec, truth, arange(-200, 200, 5), NoiseSpec::gaussian(0.05), 3);
  CHECK(data.size() == 81);

  const auto p1 = temp_file("proflik_ds_roundtrip1.csv");
  const auto p2 = temp_file("proflik_ds_roundtrip2.csv");
  write_dataset(data, p1);
  const auto back = read_dataset(p1);
  CHECK(back == data);
  write_dataset(back, p2);
  CHECK(slurp(p1) == slurp(p2));
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
}

TEST_CASE("reader reports malformed files with line numbers") {
  const auto path = temp_file("proflik_ds_bad.csv");
  {
    std::ofstream out(path);
    out << "# coordinate=time\n# noise=additive_gaussian,sigma=1\n"
        << "coordinate,observation\n1,2\n0,3\n";
  }
  CHECK_THROWS_AS(read_dataset(path), SchemaError);  // unsorted coordinates

  {
    std::ofstream out(path);
    out << "# coordinate=space\n# noise=multiplicative_lognormal,sigma=0.5\n"
        << "coordinate,observation\n0,1\n1,-3\n";
  }
  CHECK_THROWS_AS(read_dataset(path), SchemaError);  // nonpositive under log-normal

  {
    std::ofstream out(path);
    out << "# coordinate=time\n# noise=additive_gaussian,sigma=1\n"
        << "coordinate,observation\n0,1\nnot,a,number\n";
  }
  CHECK_THROWS_AS(read_dataset(path), ParseError);

  {
    std::ofstream out(path);
    out << "coordinate,observation\n0,1\n1,2\n";  // missing noise header
  }
  CHECK_THROWS_AS(read_dataset(path), ParseError);
  std::filesystem::remove(path);
}
