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

#include "textherm/thermo.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "textherm/error.hpp"

namespace textherm {
namespace {

void check_temperature(double temperature) {
  if (!(temperature > 0) || !std::isfinite(temperature)) {
    throw Error("temperature must be finite and > 0, got " +
                std::to_string(temperature));
  }
}

void check_probability(double p, const char* name) {
  if (!(p > 0) || !(p <= 1)) {
    throw Error(std::string(name) + " must lie in (0, 1], got " +
                std::to_string(p));
  }
}

}  // namespace

double energy_gap(double p_doc, double p_corpus) {
  check_probability(p_doc, "p_doc");
  check_probability(p_corpus, "p_corpus");
  return std::log(p_doc / p_corpus);
}

double occupancy(double delta, double temperature) {
  check_temperature(temperature);
  const double x = delta / temperature;
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double SubsystemState::partition() const { return std::exp(log_partition); }

SubsystemState subsystem_state(double delta, double temperature) {
  check_temperature(temperature);
  SubsystemState st;
  st.temperature = temperature;
  const double x = delta / temperature;
  const double ax = std::fabs(x);

  if (ax > kMaxReducedGap) {
    // Frozen into the lower level: no entropy, no heat capacity.
    st.log_partition = x >= 0 ? 0.0 : ax;
    st.occupancy = x >= 0 ? 1.0 : 0.0;
    st.energy = x >= 0 ? 0.0 : delta;
    return st;
  }

  // e = Boltzmann weight of the upper level relative to the lower one.
  const double e = std::exp(-ax);
  const double upper = e / (1.0 + e);
  const double lower = 1.0 / (1.0 + e);
  st.log_partition = (x >= 0 ? 0.0 : ax) + std::log1p(e);
  st.occupancy = x >= 0 ? lower : upper;
  st.energy = delta * (x >= 0 ? upper : lower);
  // ln Z + U/T, rearranged to avoid cancellation for negative gaps.
  st.entropy = std::log1p(e) + ax * upper;
  st.specific_heat = x * x * upper * lower;
  return st;
}

EnergyModel build_energy_model(const DocProfile& profile,
                               const CorpusStats& stats) {
  EnergyModel model;
  if (profile.length == 0) return model;
  model.words.reserve(profile.word_counts.size());
  const auto length = static_cast<double>(profile.length);
  for (const auto& [word, n] : profile.word_counts) {
    WordEnergy we;
    we.word = word;
    we.n = n;
    we.p_doc = static_cast<double>(n) / length;
    we.p_corpus = corpus_probability(stats, word);
    we.delta = energy_gap(we.p_doc, we.p_corpus);
    model.words.push_back(std::move(we));
  }
  return model;
}

std::vector<double> make_temperature_grid(double t_min, double t_max,
                                          std::size_t steps, bool log_spaced) {
  if (!(t_min > 0) || !std::isfinite(t_max) || !(t_max > t_min)) {
    throw Error("temperature grid needs 0 < t_min < t_max");
  }
  if (steps < 2) throw Error("temperature grid needs at least 2 steps");
  std::vector<double> grid(steps);
  const double last = static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) {
    const double f = static_cast<double>(i) / last;
    grid[i] = log_spaced
                  ? std::exp(std::log(t_min) +
                             f * (std::log(t_max) - std::log(t_min)))
                  : t_min + f * (t_max - t_min);
  }
  grid.front() = t_min;
  grid.back() = t_max;
  return grid;
}

ThermoCurve ensemble_curves(
    const EnergyModel& model, std::span<const double> grid,
    const std::set<std::string, std::less<>>* filter, std::string label) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0) || !std::isfinite(grid[i]) ||
        (i > 0 && !(grid[i] > grid[i - 1]))) {
      throw Error("temperature grid must be positive and strictly increasing");
    }
  }
  std::vector<const WordEnergy*> members;
  for (const WordEnergy& we : model.words) {
    if (filter == nullptr || filter->contains(we.word)) members.push_back(&we);
  }
  if (members.empty()) throw Error("empty ensemble");

  ThermoCurve curve;
  curve.label = std::move(label);
  curve.grid.assign(grid.begin(), grid.end());
  curve.u.assign(grid.size(), 0.0);
  curve.s.assign(grid.size(), 0.0);
  curve.cv.assign(grid.size(), 0.0);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (const WordEnergy* we : members) {
      const SubsystemState st = subsystem_state(we->delta, grid[i]);
      const auto n = static_cast<double>(we->n);
      curve.u[i] += n * st.energy;
      curve.s[i] += n * st.entropy;
      curve.cv[i] += n * st.specific_heat;
    }
  }
  return curve;
}

void write_curve_csv(std::ostream& out, const ThermoCurve& curve) {
  out << "T,U,S,Cv\n";
  char line[128];
  for (std::size_t i = 0; i < curve.grid.size(); ++i) {
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n",
                  curve.grid[i], curve.u[i], curve.s[i], curve.cv[i]);
    out << line;
  }
}

}  // namespace textherm
