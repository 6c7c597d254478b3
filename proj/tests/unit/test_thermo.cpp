/* Copyright 2026 The Textherm Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "synthetic.hpp"
#include "textherm/error.hpp"
#include "textherm/thermo.hpp"

using namespace textherm;
using namespace textherm::testing;

namespace {

const double kLn2 = std::log(2.0);

EnergyModel model_of(std::initializer_list<std::pair<double, std::uint64_t>> ws) {
  EnergyModel m;
  int i = 0;
  for (auto [delta, n] : ws) {
    WordEnergy we;
    we.word = "w" + std::to_string(i++);
    we.delta = delta;
    we.n = n;
    m.words.push_back(we);
  }
  return m;
}

}  // namespace

TEST_SUITE("energy gap") {
  TEST_CASE("values") {
    CHECK(energy_gap(0.3, 0.3) == 0.0);
    CHECK(energy_gap(std::exp(1.0) * 0.1, 0.1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(energy_gap(0.05, 1e-5) == doctest::Approx(8.517193191416238).epsilon(1e-14));
    CHECK(energy_gap(0.01, 0.1) < 0);
  }

  TEST_CASE("non-positive or excessive probability is rejected") {
    CHECK_THROWS_AS(energy_gap(0.0, 0.1), Error);
    CHECK_THROWS_AS(energy_gap(0.1, -0.1), Error);
    CHECK_THROWS_AS(energy_gap(1.5, 0.1), Error);
    CHECK_THROWS_AS(energy_gap(std::nan(""), 0.1), Error);
  }

  TEST_CASE("property: common scale factor leaves the gap unchanged") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 500; ++i) {
      const double pd = 0.5 * unit_uniform(rng) + 1e-9;
      const double pc = 0.5 * unit_uniform(rng) + 1e-9;
      const double k = std::ldexp(1.0, -static_cast<int>(unit_uniform(rng) * 20));
      // Powers of two scale exactly, so the quotient is bit-identical.
      CHECK(energy_gap(pd * k, pc * k) == energy_gap(pd, pc));
    }
  }
}

TEST_SUITE("occupancy") {
  TEST_CASE("values") {
    CHECK(occupancy(0.0, 0.3) == 0.5);
    CHECK(occupancy(0.0, 1e6) == 0.5);
    CHECK(occupancy(1.0, 1.0) == doctest::Approx(0.7310585786300049).epsilon(1e-15));
    CHECK(std::fabs(occupancy(10.0, 0.01) - 1.0) <= 1e-12);
    CHECK(occupancy(-1e4, 1e-3) == 0.0);
  }

  TEST_CASE("limits and monotonicity") {
    CHECK(occupancy(3.0, 1e9) == doctest::Approx(0.5).epsilon(1e-8));
    double prev = 0;
    for (double d = -30; d <= 30; d += 0.25) {
      const double r = occupancy(d, 1.7);
      CHECK(r >= prev);
      prev = r;
    }
  }

  TEST_CASE("non-positive temperature is rejected") {
    CHECK_THROWS_AS(occupancy(1.0, 0.0), Error);
    CHECK_THROWS_AS(occupancy(1.0, -2.0), Error);
    CHECK_THROWS_AS(subsystem_state(1.0, 0.0), Error);
  }
}

TEST_SUITE("subsystem state") {
  TEST_CASE("degenerate levels") {
    for (double t : {1e-3, 0.3, 1.0, 50.0}) {
      const SubsystemState st = subsystem_state(0.0, t);
      CHECK(st.specific_heat == 0.0);
      CHECK(st.energy == 0.0);
      CHECK(st.entropy == doctest::Approx(kLn2).epsilon(1e-15));
      CHECK(st.partition() == doctest::Approx(2.0).epsilon(1e-15));
    }
  }

  TEST_CASE("infinite-temperature limits") {
    const SubsystemState st = subsystem_state(1.0, 1e8);
    CHECK(st.entropy == doctest::Approx(kLn2).epsilon(1e-12));
    CHECK(st.energy == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(st.specific_heat < 1e-15);
  }

  TEST_CASE("Schottky maximum at T = 0.41678 for a unit gap") {
    // Oracle: brute-force maximization of the variance form on a fine grid.
    const GridMax best = grid_argmax_heat(1.0, log_grid(0.1, 2.0, 200001));
    CHECK(best.temperature == doctest::Approx(0.41678).epsilon(1e-5));
    CHECK(best.value == doctest::Approx(0.4392).epsilon(1e-4));
    CHECK(subsystem_state(1.0, 0.41678).specific_heat ==
          doctest::Approx(0.4392).epsilon(1e-4));
  }

  TEST_CASE("frozen limit beyond the reduced-gap guard") {
    const SubsystemState hot = subsystem_state(20.0, 0.01);
    CHECK(hot.occupancy == 1.0);
    CHECK(hot.energy == 0.0);
    CHECK(hot.entropy == 0.0);
    CHECK(hot.specific_heat == 0.0);
    const SubsystemState neg = subsystem_state(-20.0, 0.01);
    CHECK(neg.occupancy == 0.0);
    CHECK(neg.energy == -20.0);
    CHECK(neg.entropy == 0.0);
    CHECK(neg.log_partition == doctest::Approx(2000.0));
  }

  TEST_CASE("property: closed form matches the energy variance") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 2000; ++i) {
      const double delta = 20.0 * (1.0 - unit_uniform(rng));
      const double t = 0.01 + (100.0 - 0.01) * unit_uniform(rng);
      const SubsystemState st = subsystem_state(delta, t);
      CHECK(rel_close(st.specific_heat, variance_heat_capacity(delta, t), 1e-12));
      CHECK(rel_close(st.specific_heat, occupancy_heat_capacity(delta, t), 1e-12));
      CHECK(rel_close(st.specific_heat, occupancy_heat_capacity(-delta, t), 1e-12));
      CHECK(rel_close(subsystem_state(-delta, t).specific_heat,
                      occupancy_heat_capacity(-delta, t), 1e-12));
    }
  }

  TEST_CASE("property: heat capacity is dU/dT") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 2000; ++i) {
      // Positive gaps only: for delta < 0, U sits next to delta and the
      // difference quotient cancels catastrophically. Keep delta/T below ~100,
      // where the truncation error stays under the tolerance.
      const double delta = 20.0 * (1.0 - unit_uniform(rng));
      const double t = std::max(delta / 100.0, 0.01) *
                       std::exp(unit_uniform(rng) * 8.0);
      const SubsystemState st = subsystem_state(delta, t);
      CHECK(rel_close(st.specific_heat, central_difference_heat(delta, t), 1e-4));
    }
  }

  TEST_CASE("property: both entropy forms agree") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 2000; ++i) {
      const double delta = (unit_uniform(rng) - 0.5) * 40.0;
      const double t = 0.05 * std::exp(unit_uniform(rng) * 10.0);
      const SubsystemState st = subsystem_state(delta, t);
      const double thermo_form = st.log_partition + st.energy / t;
      CHECK(std::fabs(st.entropy - thermo_form) <= 1e-12);
      CHECK(std::fabs(st.entropy - gibbs_entropy(delta, t)) <= 1e-12);
    }
  }

  TEST_CASE("property: state ranges") {
    std::mt19937_64 rng(34);
    for (int i = 0; i < 2000; ++i) {
      const double delta = (unit_uniform(rng) - 0.5) * 40.0;
      const double t = 1e-3 * std::exp(unit_uniform(rng) * 14.0);
      const SubsystemState st = subsystem_state(delta, t);
      CHECK(st.occupancy >= 0.0);
      CHECK(st.occupancy <= 1.0);
      CHECK(std::fabs(st.energy) <= std::fabs(delta));
      CHECK(st.energy * delta >= 0.0);
      CHECK(st.entropy >= 0.0);
      CHECK(st.entropy <= kLn2 + 1e-15);
      CHECK(st.specific_heat >= 0.0);
    }
  }

  TEST_CASE("entropy limits") {
    for (double delta : {0.1, 1.0, 7.5, -3.0}) {
      CHECK(subsystem_state(delta, 1e-3 * std::fabs(delta)).entropy < 1e-12);
      CHECK(std::fabs(subsystem_state(delta, 1e6 * std::fabs(delta)).entropy - kLn2) < 1e-9);
      CHECK(subsystem_state(delta, 1e7 * std::fabs(delta)).energy ==
            doctest::Approx(delta / 2).epsilon(1e-6));
    }
  }

  TEST_CASE("property: scaling law") {
    std::mt19937_64 rng(35);
    for (int i = 0; i < 1000; ++i) {
      const double delta = (unit_uniform(rng) - 0.5) * 20.0;
      const double t = 0.01 + unit_uniform(rng) * 10.0;
      const double k = std::exp((unit_uniform(rng) - 0.5) * 6.0);
      const SubsystemState a = subsystem_state(delta, t);
      const SubsystemState b = subsystem_state(k * delta, k * t);
      CHECK(rel_close(a.occupancy, b.occupancy, 1e-12));
      CHECK(rel_close(a.entropy, b.entropy, 1e-12));
      CHECK(rel_close(a.specific_heat, b.specific_heat, 1e-12));
      CHECK(rel_close(k * a.energy, b.energy, 1e-12));
    }
  }
}

TEST_SUITE("energy model") {
  TEST_CASE("gaps follow the document and corpus frequencies") {
    CorpusStats stats(0.0);
    stats.add("a", 50);
    stats.add("b", 50);
    const DocProfile doc = doc_profile(tokenize("a a a b"));
    const EnergyModel m = build_energy_model(doc, stats);
    REQUIRE(m.words.size() == 2);
    CHECK(m.words[0].word == "a");
    CHECK(m.words[0].n == 3);
    CHECK(m.words[0].delta == doctest::Approx(std::log(0.75 / 0.5)));
    CHECK(m.words[1].delta == doctest::Approx(std::log(0.25 / 0.5)));
    CHECK(m.words[1].p_corpus == 0.5);
  }

  TEST_CASE("unseen document words get a finite gap") {
    CorpusStats stats(0.5);
    stats.add("a", 10);
    const EnergyModel m = build_energy_model(doc_profile(tokenize("zzz")), stats);
    CHECK(std::isfinite(m.words[0].delta));
    CHECK(m.words[0].delta > 0);
  }
}

TEST_SUITE("ensemble curves") {
  TEST_CASE("a single word reproduces the subsystem") {
    const EnergyModel m = model_of({{1.3, 1}});
    const auto grid = make_temperature_grid(0.01, 10, 50, true);
    const ThermoCurve c = ensemble_curves(m, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const SubsystemState st = subsystem_state(1.3, grid[i]);
      CHECK(c.u[i] == st.energy);
      CHECK(c.s[i] == st.entropy);
      CHECK(c.cv[i] == st.specific_heat);
    }
    CHECK(c.label == "total");
  }

  TEST_CASE("doubling the degeneracy doubles every total") {
    const EnergyModel m1 = model_of({{0.4, 3}, {2.0, 1}, {-0.7, 5}});
    const EnergyModel m2 = model_of({{0.4, 6}, {2.0, 2}, {-0.7, 10}});
    const auto grid = make_temperature_grid(0.005, 200, 200, true);
    const ThermoCurve a = ensemble_curves(m1, grid);
    const ThermoCurve b = ensemble_curves(m2, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      CHECK(b.u[i] == doctest::Approx(2 * a.u[i]).epsilon(1e-14));
      CHECK(b.s[i] == doctest::Approx(2 * a.s[i]).epsilon(1e-14));
      CHECK(b.cv[i] == doctest::Approx(2 * a.cv[i]).epsilon(1e-14));
    }
  }

  TEST_CASE("two gaps give two local maxima") {
    // The overlap pulls the upper maximum below the isolated 8/x* = 3.334;
    // 0.41679 and 3.2168 come from a 2e6-point grid search of the sum.
    const EnergyModel m = model_of({{1.0, 1}, {8.0, 1}});
    const auto grid = make_temperature_grid(0.01, 100, 400, true);
    const ThermoCurve c = ensemble_curves(m, grid);
    std::vector<double> maxima;
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
      if (c.cv[i] > c.cv[i - 1] && c.cv[i] > c.cv[i + 1]) maxima.push_back(grid[i]);
    }
    REQUIRE(maxima.size() == 2);
    const double step = grid[1] / grid[0];
    CHECK(maxima[0] == doctest::Approx(0.41679).epsilon(step - 1));
    CHECK(maxima[1] == doctest::Approx(3.2168).epsilon(step - 1));
    CHECK(maxima[1] == doctest::Approx(3.33).epsilon(0.05));
  }

  TEST_CASE("filter and errors") {
    const EnergyModel m = model_of({{1.0, 1}, {8.0, 1}});
    const auto grid = make_temperature_grid(0.1, 10, 10, false);
    std::set<std::string, std::less<>> only = {"w1"};
    const ThermoCurve c = ensemble_curves(m, grid, &only, "kw");
    CHECK(c.cv[4] == subsystem_state(8.0, grid[4]).specific_heat);
    std::set<std::string, std::less<>> none = {"nope"};
    CHECK_THROWS_WITH_AS(ensemble_curves(m, grid, &none), "empty ensemble", Error);
    const std::vector<double> bad = {0.1, 0.1, 0.2};
    CHECK_THROWS_AS(ensemble_curves(m, bad), Error);
    const std::vector<double> neg = {-0.1, 0.2};
    CHECK_THROWS_AS(ensemble_curves(m, neg), Error);
  }

  TEST_CASE("grid construction") {
    const auto g = make_temperature_grid(0.005, 200, 200, true);
    CHECK(g.size() == 200);
    CHECK(g.front() == 0.005);
    CHECK(g.back() == 200);
    CHECK(g[1] / g[0] == doctest::Approx(g[100] / g[99]));
    CHECK_THROWS_AS(make_temperature_grid(0.0, 1, 10, true), Error);
    CHECK_THROWS_AS(make_temperature_grid(1, 1, 10, true), Error);
    CHECK_THROWS_AS(make_temperature_grid(0.1, 1, 1, true), Error);
  }

  TEST_CASE("csv export") {
    const EnergyModel m = model_of({{1.0, 1}});
    const std::vector<double> grid = {0.5, 1.0};
    std::ostringstream out;
    write_curve_csv(out, ensemble_curves(m, grid));
    std::istringstream in(out.str());
    std::string header, row1, row2, extra;
    std::getline(in, header);
    std::getline(in, row1);
    std::getline(in, row2);
    CHECK(header == "T,U,S,Cv");
    CHECK(row2.rfind("1,", 0) == 0);
    CHECK_FALSE(std::getline(in, extra));
    // 17 significant digits round-trip exactly.
    const double u = std::stod(row1.substr(row1.find(',') + 1));
    CHECK(u == subsystem_state(1.0, 0.5).energy);
  }
}
