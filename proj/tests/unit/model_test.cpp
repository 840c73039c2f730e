#include <doctest.h>

#include <cmath>
#include <random>

#include "../oracle/oracles.hpp"
#include "proflik/errors.hpp"
#include "proflik/model.hpp"

using namespace proflik;

namespace {

ParameterVector cooling_theta(double ambient, double rate) {
  return ParameterVector({"T_a", "k"}, {ambient, rate}, {0.0, 0.001}, {50.0, 0.5});
}

// wide boxes so tests can probe v = 0 and large scalings
ParameterVector advdiff_theta(double u0, double h, double D, double v) {
  return ParameterVector({"u0", "h", "D", "v"}, {u0, h, D, v}, {0.0, 1.0, 0.1, 0.0},
                         {10.0, 100.0, 50.0, 5.0});
}

ParameterVector bvp_theta(double J, double D, double k) {
  return ParameterVector({"J", "D", "k"}, {J, D, k}, {1e-4, 1e-4, 1e-5}, {500.0, 500.0, 50.0});
}

const ModelContext kCoolingCtx({{"T0", 180.0}});
const ModelContext kAdvDiffCtx({{"u_b", 1.0}, {"t", 50.0}});

}  // namespace

TEST_CASE("cooling solution anchors") {
  const auto theta = cooling_theta(20.0, 0.05);
  CHECK(cooling_solution(theta, 0.0, kCoolingCtx) == 180.0);
  // 160 e^{-1/2} + 20 at 50-digit precision
  CHECK(cooling_solution(theta, 10.0, kCoolingCtx) ==
        doctest::Approx(117.04490555402135).epsilon(1e-14));
  CHECK(std::abs(cooling_solution(theta, 1e6, kCoolingCtx) - 20.0) < 1e-10);
  CHECK_THROWS_AS(cooling_solution(theta, -1.0, kCoolingCtx), DomainError);
}

TEST_CASE("cooling is monotone and bounded between start and ambient") {
  const auto theta = cooling_theta(20.0, 0.05);
  double prev = cooling_solution(theta, 0.0, kCoolingCtx);
  for (double t = 1.0; t <= 200.0; t += 1.0) {
    const double v = cooling_solution(theta, t, kCoolingCtx);
    CHECK(v < prev);
    CHECK(v > 20.0);
    CHECK(v <= 180.0);
    prev = v;
  }
}

TEST_CASE("cooling satisfies its own ODE") {
  std::mt19937 gen(42);
  std::uniform_real_distribution<double> ambient(0.0, 50.0), rate(0.01, 0.4), time(0.5, 100.0);
  const double h = 1e-4;
  for (int i = 0; i < 20; ++i) {
    const auto theta = cooling_theta(ambient(gen), rate(gen));
    const double t = time(gen);
    const double dT = (cooling_solution(theta, t + h, kCoolingCtx) -
                       cooling_solution(theta, t - h, kCoolingCtx)) /
                      (2.0 * h);
    const double residual =
        dT + theta.value(1) * (cooling_solution(theta, t, kCoolingCtx) - theta.value(0));
    CHECK(std::abs(residual) < 1e-6);
  }
}

TEST_CASE("advection-diffusion anchors") {
  const auto theta = advdiff_theta(1.0, 50.0, 10.0, 1.0);
  // at x = vt the two erf arguments coincide: u = 1 + erf(50/(2 sqrt(500)))
  CHECK(advection_diffusion_solution(theta, 50.0, kAdvDiffCtx) ==
        doctest::Approx(1.8861537019933419).epsilon(1e-13));
  CHECK(std::abs(advection_diffusion_solution(theta, 1e6, kAdvDiffCtx) - 1.0) < 1e-12);
  CHECK(std::abs(advection_diffusion_solution(theta, -1e6, kAdvDiffCtx) - 1.0) < 1e-12);

  const auto still = advdiff_theta(1.0, 50.0, 10.0, 0.0);
  CHECK(advection_diffusion_solution(still, 25.0, kAdvDiffCtx) ==
        advection_diffusion_solution(still, -25.0, kAdvDiffCtx));

  CHECK_THROWS_AS(advection_diffusion_solution(advdiff_theta(1, 50, 0.1, 1), 0.0,
                                               ModelContext({{"u_b", 1.0}, {"t", -1.0}})),
                  DomainError);
}

TEST_CASE("advection-diffusion obeys the maximum principle") {
  const auto theta = advdiff_theta(1.0, 50.0, 10.0, 1.0);
  for (double x = -250.0; x <= 350.0; x += 0.5) {
    const double u = advection_diffusion_solution(theta, x, kAdvDiffCtx);
    CHECK(u > 1.0);
    CHECK(u < 2.0);
  }
}

TEST_CASE("advection-diffusion conserves mass") {
  const auto theta = advdiff_theta(1.0, 50.0, 10.0, 1.0);
  const double expected = 2.0 * 50.0 * 1.0;  // 2 h u0
  for (double t : {1.0, 50.0, 200.0}) {
    const ModelContext ctx({{"u_b", 1.0}, {"t", t}});
    const double spread = 40.0 * std::sqrt(10.0 * t);
    const double lo = 1.0 * t - spread - 50.0;
    const double hi = 1.0 * t + spread + 50.0;
    const double mass = oracle::trapezoid_uniform(
        [&](double x) { return advection_diffusion_solution(theta, x, ctx) - 1.0; }, lo, hi,
        1000000);
    CHECK(std::abs(mass - expected) / expected < 1e-8);
  }
}

TEST_CASE("advection with velocity v is the still solution translated by vt") {
  const auto moving = advdiff_theta(1.3, 42.0, 7.5, 2.0);
  const auto still = advdiff_theta(1.3, 42.0, 7.5, 0.0);
  for (double x = -150.0; x <= 350.0; x += 7.0)
    CHECK(std::abs(advection_diffusion_solution(moving, x, kAdvDiffCtx) -
                   advection_diffusion_solution(still, x - 2.0 * 50.0, kAdvDiffCtx)) < 1e-12);
}

TEST_CASE("morphogen BVP anchors") {
  const auto theta = bvp_theta(1.0, 1.0, 0.1);
  CHECK(morphogen_bvp_solution(theta, 0.0) == doctest::Approx(3.1622776601683793).epsilon(1e-14));
  CHECK(std::abs(morphogen_bvp_solution(theta, 1e3)) < 1e-12);
  CHECK_THROWS_AS(morphogen_bvp_solution(theta, -0.5), DomainError);
  const ParameterVector degenerate({"J", "D", "k"}, {1.0, 1.0, 0.0}, {0.0, 0.0, 0.0},
                                   {10.0, 10.0, 10.0});
  CHECK_THROWS_AS(morphogen_bvp_solution(degenerate, 0.0), DomainError);
}

TEST_CASE("morphogen BVP satisfies flux condition and steady-state equation") {
  const auto theta = bvp_theta(1.0, 1.0, 0.1);
  const double D = theta.value(1), k = theta.value(2), J = theta.value(0);

  const double h = 1e-5;
  const double deriv0 = (-3.0 * morphogen_bvp_solution(theta, 0.0) +
                         4.0 * morphogen_bvp_solution(theta, h) -
                         morphogen_bvp_solution(theta, 2.0 * h)) /
                        (2.0 * h);
  CHECK(std::abs(-D * deriv0 - J) / J < 1e-6);

  const double hh = 1e-3;
  for (double x : {0.5, 2.0, 5.0, 11.0}) {
    const double u = morphogen_bvp_solution(theta, x);
    const double second = (morphogen_bvp_solution(theta, x - hh) - 2.0 * u +
                           morphogen_bvp_solution(theta, x + hh)) /
                          (hh * hh);
    CHECK(std::abs(D * second - k * u) < 1e-5);
  }
}

TEST_CASE("morphogen BVP is invariant under (cJ, cD, ck)") {
  const auto base = bvp_theta(1.0, 1.0, 0.1);
  for (double c : {0.1, 3.0, 40.0}) {
    const auto scaled = bvp_theta(c * 1.0, c * 1.0, c * 0.1);
    for (double x = 0.0; x <= 20.0; x += 0.8)
      CHECK(std::abs(morphogen_bvp_solution(scaled, x) - morphogen_bvp_solution(base, x)) <
            1e-12);
  }
  // spot anchor from the spec's example, c = 7 at x = 2
  CHECK(morphogen_bvp_solution(bvp_theta(7.0, 7.0, 0.7), 2.0) ==
        doctest::Approx(morphogen_bvp_solution(base, 2.0)).epsilon(1e-13));
}

TEST_CASE("reparam map and solution") {
  const auto theta = bvp_theta(1.0, 1.0, 0.1);
  const auto mapped = reparam_map(theta);
  CHECK(mapped.name(0) == "alpha");
  CHECK(mapped.name(1) == "beta");
  CHECK(mapped.value(0) == doctest::Approx(3.1622776601683793).epsilon(1e-14));
  CHECK(mapped.value(1) == doctest::Approx(0.31622776601683793).epsilon(1e-14));

  // scaling invariance of the map, c = 3
  const auto mapped3 = reparam_map(bvp_theta(3.0, 3.0, 0.3));
  CHECK(mapped3.value(0) == doctest::Approx(mapped.value(0)).epsilon(1e-13));
  CHECK(mapped3.value(1) == doctest::Approx(mapped.value(1)).epsilon(1e-13));

  const auto identity = reparam_map(bvp_theta(1.0, 1.0, 1.0));
  CHECK(identity.value(0) == doctest::Approx(1.0));
  CHECK(identity.value(1) == doctest::Approx(1.0));

  // reparam solution agrees with the steady state at the mapped parameters
  CHECK(morphogen_reparam_solution(mapped, 0.0) ==
        doctest::Approx(morphogen_bvp_solution(theta, 0.0)).epsilon(1e-13));
  for (double x = 0.0; x <= 20.0; x += 1.1)
    CHECK(std::abs(morphogen_reparam_solution(mapped, x) - morphogen_bvp_solution(theta, x)) <
          1e-12);

  // half-life identity: beta x = log 2 halves the origin value
  const auto r = ParameterVector({"alpha", "beta"}, {3.389, 0.3141}, {0.1, 0.01}, {20.0, 2.0});
  CHECK(morphogen_reparam_solution(r, 0.0) == doctest::Approx(3.389));
  CHECK(morphogen_reparam_solution(r, std::log(2.0) / 0.3141) ==
        doctest::Approx(3.389 / 2.0).epsilon(1e-13));
}

TEST_CASE("evaluate_model dispatches over the registry") {
  const auto cooling = ProcessModelSpec::make(ModelId::cooling);
  CHECK(evaluate_model(cooling, cooling.make_parameters({20.0, 0.05}), 0.0) == 180.0);

  const auto bvp = ProcessModelSpec::make("morphogen_bvp");
  CHECK(evaluate_model(bvp, bvp.make_parameters({1.0, 1.0, 0.1}), 0.0) ==
        doctest::Approx(3.1622776601683793).epsilon(1e-14));

  const auto advdiff = ProcessModelSpec::make(ModelId::advection_diffusion);
  CHECK(evaluate_model(advdiff, advdiff.make_parameters({1.0, 50.0, 10.0, 1.0}), -1e6) ==
        doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(model_id_from_string("heat_equation"), SchemaError);
  CHECK_THROWS_AS(evaluate_model(cooling, bvp.make_parameters({1.0, 1.0, 0.1}), 0.0),
                  SchemaError);
}

TEST_CASE("model registry context handling") {
  CHECK(ProcessModelSpec::make(ModelId::cooling).context().at("T0") == 180.0);
  const auto overridden =
      ProcessModelSpec::make(ModelId::cooling, ModelContext({{"T0", 90.0}}));
  CHECK(overridden.context().at("T0") == 90.0);
  const auto pde = ProcessModelSpec::make(ModelId::advection_diffusion,
                                          ModelContext({{"u_b", 0.0}, {"t", 50.0}}));
  CHECK(pde.context().at("u_b") == 0.0);
  CHECK_THROWS_AS(pde.context().at("missing"), SchemaError);
}
