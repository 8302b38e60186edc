#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "irsplan/snr_core.hpp"
#include "irsplan/units.hpp"

using namespace irsplan;

namespace {

// Eq.-(17) transcription used as an independent check of hybrid_path_snr.
double hybrid_oracle(const RadioParams& radio, const std::vector<double>& g,
                     const std::vector<int>& t, int l) {
  const int L = static_cast<int>(t.size());
  const double n2 = radio.elements_per_tile(), n4 = n2 * n2;
  double x = g[0];
  for (int m = 1; m < l; ++m) x *= g[m] * n4 * t[m - 1] * t[m - 1];
  double y = 1.0;
  for (int m = l; m <= L; ++m) y *= g[m] * n4 * t[m - 1] * t[m - 1];
  const double inv = 1.0 / (radio.c0() * n2 * t[l - 1] * x) + 1.0 / (radio.ca() * y) +
                     1.0 / (radio.c0() * radio.ca() * x * y);
  return 1.0 / inv;
}

}  // namespace

TEST_CASE("path gain") {
  const RadioParams radio = testutil::base_scenario(1, 1, 10.0).radio;
  CHECK(path_gain_sq(10.0, radio) == doctest::Approx(std::pow(10.0, -6.3)).epsilon(1e-12));
  CHECK(path_gain_sq(1.0, radio) == doctest::Approx(std::pow(10.0, -4.3)).epsilon(1e-12));
  CHECK_THROWS_AS(path_gain_sq(0.0, radio), std::invalid_argument);
}

TEST_CASE("deployment cost") {
  const CostModel costs{5.0, 12.0, 1.0, 3.0};

  DeploymentPlan p;
  p.passive_cells = {2, 3, 4, 5};
  p.active_cells = {6};
  p.tiles = {{2, 1}, {3, 2}, {4, 2}, {5, 3}, {6, 2}};
  const Cost c = total_cost(p, costs);
  CHECK(c.cell_use == doctest::Approx(32.0));
  CHECK(c.hardware == doctest::Approx(14.0));
  CHECK(c.total == doctest::Approx(46.0));

  const DeploymentPlan q = DeploymentPlan::uniform({1, 2, 3, 4, 5}, {}, 5, 1);
  CHECK(total_cost(q, costs).total == doctest::Approx(50.0));

  CHECK(total_cost({}, costs).total == doctest::Approx(0.0));
}

TEST_CASE("plan validation") {
  Scenario sc = testutil::base_scenario(1, 4, 10.0);
  sc.bs_cell = 0;
  sc.bs_pos = {5.0, 5.0, 3.0};
  sc.candidate_cells = {1, 2};
  sc.candidate_pos[1] = {15.0, 5.0, 3.0};
  sc.candidate_pos[2] = {25.0, 5.0, 3.0};

  DeploymentPlan ok;
  ok.passive_cells = {1};
  ok.tiles = {{1, 9}};
  CHECK_NOTHROW(ok.validate(sc));

  DeploymentPlan both = ok;
  both.active_cells = {1};
  both.tiles[1] = 1;
  CHECK_THROWS_AS(both.validate(sc), std::invalid_argument);

  DeploymentPlan stranger;
  stranger.passive_cells = {3};
  stranger.tiles = {{3, 1}};
  CHECK_THROWS_AS(stranger.validate(sc), std::invalid_argument);

  DeploymentPlan overload = ok;
  overload.tiles[1] = 10;
  CHECK_THROWS_AS(overload.validate(sc), std::invalid_argument);

  DeploymentPlan dangling = ok;
  dangling.tiles[2] = 1;
  CHECK_THROWS_AS(dangling.validate(sc), std::invalid_argument);
}

TEST_CASE("direct SNR") {
  Scenario sc = testutil::base_scenario(1, 3, 10.0);
  sc.bs_cell = 0;
  sc.bs_pos = {5.0, 5.0, 0.0};
  sc.los_user_pairs = {{0, 0}, {0, 1}};
  sc.dmax_overrides[{0, 1}] = 10.0;

  const auto g1 = direct_snr(sc, 1);
  REQUIRE(g1.has_value());
  CHECK(*g1 == doctest::Approx(1e10 * std::pow(10.0, -6.3)).epsilon(1e-12));
  CHECK(linear_to_db(*g1) == doctest::Approx(37.0).epsilon(1e-12));
  CHECK_FALSE(direct_snr(sc, 2).has_value());
}

TEST_CASE("all-passive closed form") {
  const RadioParams radio = testutil::base_scenario(1, 1, 10.0).radio;
  const double g10 = path_gain_sq(10.0, radio);

  SUBCASE("single reflection, d = 10/10, T = 9") {
    const std::vector<double> gains{g10, g10};
    const std::vector<int> tiles{9};
    const double snr = all_passive_path_snr(radio, gains, tiles);
    CHECK(snr == doctest::Approx(1e10 * g10 * g10 * 1e4 * 81).epsilon(1e-12));
    CHECK(linear_to_db(snr) == doctest::Approx(33.085).epsilon(1e-3));
  }
  SUBCASE("each reflection multiplies by its factor") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dd(5.0, 30.0);
    std::uniform_int_distribution<int> td(1, 9);
    std::vector<double> gains{path_gain_sq(dd(rng), radio)};
    std::vector<int> tiles;
    double expect = radio.c0() * gains[0];
    for (int L = 1; L <= 4; ++L) {
      const double g = path_gain_sq(dd(rng), radio);
      const int t = td(rng);
      gains.push_back(g);
      tiles.push_back(t);
      expect *= g * 1e4 * t * t;
      CHECK(testutil::close_rel(all_passive_path_snr(radio, gains, tiles), expect, 1e-12));
    }
  }
}

TEST_CASE("hybrid closed form") {
  const RadioParams radio = testutil::base_scenario(1, 1, 10.0).radio;
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> dd(5.0, 30.0);
  std::uniform_int_distribution<int> td(1, 9);

  SUBCASE("matches the transcription on random chains") {
    for (int it = 0; it < 100; ++it) {
      std::uniform_int_distribution<int> Ld(1, 4);
      const int L = Ld(rng);
      std::uniform_int_distribution<int> ld(1, L);
      const int l = ld(rng);
      std::vector<double> gains;
      std::vector<int> tiles;
      for (int m = 0; m <= L; ++m) gains.push_back(path_gain_sq(dd(rng), radio));
      for (int m = 0; m < L; ++m) tiles.push_back(td(rng));
      CHECK(testutil::close_rel(hybrid_path_snr(radio, gains, tiles, l),
                                hybrid_oracle(radio, gains, tiles, l), 1e-14));
    }
  }
  SUBCASE("monotone in every tile count") {
    const std::vector<double> gains{path_gain_sq(12.0, radio), path_gain_sq(9.0, radio),
                                    path_gain_sq(15.0, radio)};
    for (int l = 1; l <= 2; ++l)
      for (int pos = 0; pos < 2; ++pos)
        for (int t = 1; t < 9; ++t) {
          std::vector<int> lo{3, 3}, hi{3, 3};
          lo[pos] = t;
          hi[pos] = t + 1;
          CHECK(hybrid_path_snr(radio, gains, hi, l) > hybrid_path_snr(radio, gains, lo, l));
        }
  }
  SUBCASE("large amplifier power recovers the upstream limit") {
    RadioParams big = radio;
    big.amp_power_per_element_w = 1e12;
    const std::vector<double> gains{path_gain_sq(10.0, radio), path_gain_sq(14.0, radio)};
    const std::vector<int> tiles{4};
    const double limit = big.c0() * big.elements_per_tile() * 4 * gains[0];
    CHECK(hybrid_path_snr(big, gains, tiles, 1) == doctest::Approx(limit).epsilon(1e-6));
  }
  SUBCASE("argument validation") {
    const std::vector<double> gains{1e-6, 1e-6};
    const std::vector<int> tiles{3};
    CHECK_THROWS_AS(hybrid_path_snr(radio, gains, tiles, 0), std::invalid_argument);
    CHECK_THROWS_AS(hybrid_path_snr(radio, gains, tiles, 2), std::invalid_argument);
    CHECK_THROWS_AS(hybrid_path_snr(radio, std::vector<double>{1e-6}, tiles, 1),
                    std::invalid_argument);
  }
}

TEST_CASE("active/passive tradeoff ratio") {
  const RadioParams radio = testutil::base_scenario(1, 1, 10.0).radio;

  SUBCASE("closed form transcription") {
    for (int L : {1, 2, 3})
      for (int l = 1; l <= L; ++l)
        for (double d0 : {5.0, 10.0, 20.0}) {
          const int T0 = 9;
          const double cp = 0.4;
          const double kappa2 = path_gain_sq(d0, radio);
          const double n0 = radio.elements_per_tile() * T0;
          const double kn2 = kappa2 * n0 * n0;
          const double denom = radio.ca() * cp * n0 * std::pow(kn2, L + 1 - l) +
                               radio.c0() * std::pow(kn2, l) + n0 * n0;
          const double expect = radio.ca() * cp * cp * n0 * n0 / denom;
          CHECK(testutil::close_rel(tradeoff_ratio(L, l, d0, T0, cp, radio), expect, 1e-12));
        }
  }
  SUBCASE("consistent with the path closed forms on an equal-spacing chain") {
    const int T0 = 9, L = 3;
    const double cp = 1.0 / 3.0;  // T0 * cp integer
    for (int l = 1; l <= L; ++l)
      for (double d0 : {8.0, 15.0, 25.0}) {
        const double g = path_gain_sq(d0, radio);
        const std::vector<double> gains(L + 1, g);
        std::vector<int> passive_tiles(L, T0);
        std::vector<int> hybrid_tiles = passive_tiles;
        hybrid_tiles[l - 1] = static_cast<int>(T0 * cp + 0.5);
        const double ratio = hybrid_path_snr(radio, gains, hybrid_tiles, l) /
                             all_passive_path_snr(radio, gains, passive_tiles);
        CHECK(testutil::close_rel(tradeoff_ratio(L, l, d0, T0, cp, radio), ratio, 1e-12));
      }
  }
  SUBCASE("sampled monotonicity") {
    for (int T0 = 1; T0 < 9; ++T0)
      CHECK(tradeoff_ratio(2, 1, 10.0, T0 + 1, 0.5, radio) <=
            tradeoff_ratio(2, 1, 10.0, T0, 0.5, radio) + 1e-15);
    for (double d0 = 5.0; d0 < 30.0; d0 += 5.0)
      CHECK(tradeoff_ratio(2, 1, d0 + 5.0, 9, 0.5, radio) >=
            tradeoff_ratio(2, 1, d0, 9, 0.5, radio) - 1e-15);
  }
  CHECK_THROWS_AS(tradeoff_ratio(2, 3, 10.0, 9, 0.5, radio), std::invalid_argument);
}

TEST_CASE("snr ordering treats unreachable as bottom") {
  PathSolution u;  // unreachable
  PathSolution a;
  a.kind = PathKind::direct;
  a.snr_linear = 1e-9;
  PathSolution b = a;
  b.snr_linear = 2e-9;
  CHECK(snr_less(u, a));
  CHECK_FALSE(snr_less(a, u));
  CHECK_FALSE(snr_less(u, u));
  CHECK(snr_less(a, b));
  CHECK_FALSE(snr_less(b, a));
}
