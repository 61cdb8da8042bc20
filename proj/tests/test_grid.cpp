#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "msdiff/errors.hpp"
#include "msdiff/grid.hpp"
#include "oracles.hpp"

using namespace msdiff;

TEST_CASE("benchmark grid") {
  const auto g = build_grid(0.0, 1.0, 0.05);
  CHECK(g.intervals == 20);
  CHECK(g.nodes.size() == 21);
  CHECK(g.half_nodes.size() == 20);
  CHECK(g.nodes[0] == 0.0);
  CHECK(g.nodes[10] == 0.5);
  CHECK(g.nodes[20] == 1.0);
  CHECK(g.half_nodes[0] == doctest::Approx(0.025));
  CHECK(std::abs(static_cast<double>(g.intervals) * g.dx - 1.0) <= 1e-12);
}

TEST_CASE("minimal grid") {
  const auto g = build_grid(0.0, 1.0, 0.5);
  CHECK(g.intervals == 2);
  CHECK(g.half_nodes == std::vector<double>{0.25, 0.75});
}

TEST_CASE("grid errors") {
  CHECK_THROWS_WITH_AS(build_grid(0.0, 1.0, 0.3), doctest::Contains("residual"), ConfigError);
  CHECK_THROWS_AS(build_grid(1.0, 0.0, 0.1), ConfigError);
  CHECK_THROWS_AS(build_grid(0.0, 1.0, 0.0), ConfigError);
  CHECK_THROWS_AS(build_grid(0.0, 1.0, 1.0), ConfigError);
}

TEST_CASE("benchmark initial state") {
  const auto grid = build_grid(0.0, 1.0, 0.05);
  const auto spec = testing::benchmark_spec();

  SUBCASE("interface node takes the average") {
    const auto st = initial_state(grid, InitialCondition::duncan_toor(), spec, Model::kMs);
    for (std::size_t l = 0; l < 10; ++l) {
      CHECK(st.n.column(l) == std::vector<double>{0.8, 0.2, 0.0});
    }
    for (std::size_t l = 11; l <= 20; ++l) {
      CHECK(st.n(0, l) == 0.0);
      CHECK(st.n(1, l) == 0.2);
      CHECK(st.n(2, l) == doctest::Approx(0.8).epsilon(1e-15));
    }
    CHECK(st.n(0, 10) == 0.4);
    CHECK(st.n(1, 10) == 0.2);
    CHECK(st.n(2, 10) == doctest::Approx(0.4).epsilon(1e-15));
    for (double j : st.flux.data()) CHECK(j == 0.0);
    for (double p : st.deviator.data()) CHECK(p == 0.0);
    CHECK(st.time == 0.0);
  }

  SUBCASE("left rule reproduces the indicator on [0, 0.5]") {
    auto ic = InitialCondition::duncan_toor();
    ic.interface_value = InterfaceValue::kLeft;
    const auto st = initial_state(grid, ic, spec, Model::kMs);
    CHECK(st.n.column(10) == std::vector<double>{0.8, 0.2, 0.0});
    CHECK(st.n(0, 11) == 0.0);
  }
}

TEST_CASE("MixtureState invariants hold on initial states") {
  std::mt19937_64 rng(5);
  const auto grid = build_grid(0.0, 2.0, 0.1);
  const auto spec = testing::benchmark_spec();
  for (int trial = 0; trial < 50; ++trial) {
    InitialCondition ic;
    ic.species_segments.resize(3);
    const double cut = 0.2 + 0.1 * static_cast<double>(trial % 16);
    const auto left = oracle::random_composition(rng, 3, 1.0);
    const auto right = oracle::random_composition(rng, 3, 1.0);
    for (std::size_t i = 0; i < 3; ++i) {
      ic.species_segments[i] = {{0.0, cut, left[i]}, {cut, 2.0, right[i]}};
    }
    const auto st = initial_state(grid, ic, spec, Model::kHoms);
    for (std::size_t l = 0; l < grid.node_count(); ++l) {
      double sum = 0.0;
      for (std::size_t i = 0; i < 3; ++i) {
        CHECK(st.n(i, l) >= -1e-15);
        sum += st.n(i, l);
      }
      CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
    for (double j : st.flux.data()) CHECK(j == 0.0);
  }
}

TEST_CASE("constant state") {
  const auto grid = build_grid(0.0, 1.0, 0.05);
  const auto st = testing::uniform_state(grid, testing::benchmark_spec(), {0.4, 0.2, 0.4}, Model::kMs);
  for (std::size_t l = 0; l < grid.node_count(); ++l) {
    CHECK(st.n.column(l) == st.n.column(0));
  }
  CHECK(st.n(0, 0) == 0.4);
  CHECK(st.n(2, 0) == doctest::Approx(0.4).epsilon(1e-15));
}

TEST_CASE("HOMS initial deviators") {
  const auto grid = build_grid(0.0, 1.0, 0.05);
  SUBCASE("gamma = 1/3 gives zero deviators") {
    const auto st = initial_state(grid, InitialCondition::duncan_toor(),
                                  testing::benchmark_spec(1.0 / 3.0), Model::kHoms);
    for (double p : st.deviator.data()) CHECK(p == 0.0);
  }
  SUBCASE("gamma = 0.1 gives P = -0.35 n") {
    const auto st = initial_state(grid, InitialCondition::duncan_toor(), testing::benchmark_spec(),
                                  Model::kHoms);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t l = 0; l < grid.node_count(); ++l) {
        CHECK(st.deviator(i, l) == doctest::Approx(-0.35 * st.n(i, l)).epsilon(1e-12));
      }
    }
  }
  SUBCASE("zero reading") {
    const auto st = initial_state(grid, InitialCondition::duncan_toor(), testing::benchmark_spec(),
                                  Model::kHoms, InitialDeviator::kZero);
    for (double p : st.deviator.data()) CHECK(p == 0.0);
  }
}

TEST_CASE("initial condition errors") {
  const auto grid = build_grid(0.0, 1.0, 0.05);
  const auto spec = testing::benchmark_spec();
  const std::vector<double> bad{0.4, 0.2, 0.3};
  CHECK_THROWS_WITH_AS(testing::uniform_state(grid, spec, bad, Model::kMs),
                       doctest::Contains("node 0"), ConfigError);

  InitialCondition gap;
  gap.species_segments = {{{0.0, 0.4, 0.5}, {0.6, 1.0, 0.5}}, {{0.0, 1.0, 0.5}}, {{0.0, 1.0, 0.0}}};
  CHECK_THROWS_WITH_AS(initial_state(grid, gap, spec, Model::kMs), doctest::Contains("gap"),
                       ConfigError);

  InitialCondition two;
  two.species_segments = {{{0.0, 1.0, 0.5}}, {{0.0, 1.0, 0.5}}};
  CHECK_THROWS_AS(initial_state(grid, two, spec, Model::kMs), ConfigError);
}

TEST_CASE("midpoint densities") {
  CHECK(midpoint_densities(std::vector<double>(5, 0.3)) == std::vector<double>(4, 0.3));
  CHECK(midpoint_densities(std::vector<double>{0.8, 0.0}) == std::vector<double>{0.4});

  const auto grid = build_grid(0.0, 1.0, 0.05);
  auto ic = InitialCondition::duncan_toor();
  ic.interface_value = InterfaceValue::kLeft;
  const auto st = initial_state(grid, ic, testing::benchmark_spec(), Model::kMs);
  const auto mids = midpoint_densities(st.n.row(0));
  for (std::size_t l = 0; l < 10; ++l) CHECK(mids[l] == 0.8);
  CHECK(mids[10] == 0.4);
  for (std::size_t l = 11; l < 20; ++l) CHECK(mids[l] == 0.0);
}

TEST_CASE("midpoint averaging preserves the species sum") {
  std::mt19937_64 rng(9);
  const std::size_t points = 12;
  SpeciesField n(4, points);
  for (std::size_t l = 0; l < points; ++l) {
    const auto c = oracle::random_composition(rng, 4, 1.0);
    for (std::size_t i = 0; i < 4; ++i) n(i, l) = c[i];
  }
  const auto mids = midpoint_densities(n);
  for (std::size_t l = 0; l + 1 < points; ++l) {
    double sum = 0.0;
    for (std::size_t i = 0; i < 4; ++i) sum += mids(i, l);
    CHECK(std::abs(sum - 1.0) <= 1e-14);
  }
}
