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

// Closed-form thermodynamics of a document seen as a gas of independent
// two-level word subsystems in contact with a reference corpus.
//
// Each word occurrence has a text-bound state at energy 0 and a free
// (language) state at energy delta = ln(p_doc / p_corpus), measured in nats.
// Temperature shares the units of delta. A word that occurs n times in the
// document contributes n identical copies of its subsystem.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "textherm/textcorpus.hpp"

namespace textherm {

// Beyond this |delta|/T every quantity is replaced by its exact limit.
inline constexpr double kMaxReducedGap = 700.0;

// ln(p_doc / p_corpus). Both probabilities must lie in (0, 1].
double energy_gap(double p_doc, double p_corpus);

// Probability of the text-bound state, 1 / (1 + exp(-delta/T)).
double occupancy(double delta, double temperature);

struct SubsystemState {
  double temperature = 0;
  double log_partition = 0;  // ln Z, Z = 1 + exp(-delta/T)
  double occupancy = 0;      // r
  double energy = 0;         // U = delta * (1 - r)
  double entropy = 0;        // S = ln Z + U/T
  double specific_heat = 0;  // C = (delta/T)^2 r (1 - r)

  // Z itself; overflows to +inf for strongly negative delta/T.
  double partition() const;
};

SubsystemState subsystem_state(double delta, double temperature);

struct WordEnergy {
  std::string word;
  std::uint64_t n = 0;
  double p_doc = 0;
  double p_corpus = 0;
  double delta = 0;
};

// One entry per distinct document word, in lexicographic order. p_doc is the
// maximum-likelihood n_w / N; p_corpus comes from corpus_probability.
struct EnergyModel {
  std::vector<WordEnergy> words;
};

EnergyModel build_energy_model(const DocProfile& profile,
                               const CorpusStats& stats);

struct ThermoCurve {
  std::string label;
  std::vector<double> grid;
  std::vector<double> u;
  std::vector<double> s;
  std::vector<double> cv;
};

// Throws unless min > 0, max > min and steps >= 2.
std::vector<double> make_temperature_grid(double t_min, double t_max,
                                          std::size_t steps, bool log_spaced);

// Degeneracy-weighted totals U, S and C_V over the words that pass the filter
// (all words when the filter is null). Throws "empty ensemble" when no word
// passes and rejects grids that are not strictly increasing and positive.
ThermoCurve ensemble_curves(const EnergyModel& model,
                            std::span<const double> grid,
                            const std::set<std::string, std::less<>>* filter =
                                nullptr,
                            std::string label = "total");

// "T,U,S,Cv" header, one row per grid point, 17 significant digits.
void write_curve_csv(std::ostream& out, const ThermoCurve& curve);

}  // namespace textherm
