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

// Specific-heat peaks, word classes and keyword ranking.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "textherm/textcorpus.hpp"
#include "textherm/thermo.hpp"

namespace textherm {

// Positive root of x * tanh(x / 2) = 2, where the two-level specific heat
// x^2 e^x / (1 + e^x)^2 peaks as a function of x = delta / T.
double schottky_peak_ratio();
// Height of that peak, about 0.4392.
double schottky_peak_height();

// delta / x* for delta > 0, nothing otherwise.
std::optional<double> peak_temperature(double delta);

struct Peak {
  double temperature = 0;
  double cv = 0;
  double prominence = 0;
};

// Strict local maxima of the sampled C_V whose topographic prominence
// exceeds min_prominence * max(cv), hottest first. Requires >= 3 points.
std::vector<Peak> find_peaks(const ThermoCurve& curve, double min_prominence);

enum class WordClass { kKeyword, kCommon, kFunction };

std::string_view to_string(WordClass word_class);

struct Bands {
  double t_lo = 0.03;
  double t_hi = 0.12;
};

struct WordThermo {
  std::string word;
  double delta = 0;
  std::uint64_t n = 0;
  std::optional<double> t_star;
  double score = 0;  // n * delta
  WordClass word_class = WordClass::kFunction;
};

// keyword when t_star >= t_hi, function when t_star is absent or below t_lo,
// common otherwise. Output is in lexicographic word order.
std::vector<WordThermo> classify_words(const DocProfile& profile,
                                       const CorpusStats& stats,
                                       const Bands& bands = {});
std::vector<WordThermo> classify_words(const EnergyModel& model,
                                       const Bands& bands = {});

// Top k by score, ties broken by word. The result does not depend on the
// input order.
std::vector<WordThermo> rank_keywords(std::span<const WordThermo> words,
                                      std::size_t k);

// Aggregate curve restricted to one class; nullopt when the class is empty.
std::optional<ThermoCurve> class_curve(const EnergyModel& model,
                                       std::span<const WordThermo> words,
                                       WordClass word_class,
                                       std::span<const double> grid);

// Keyword report as JSON text, words sorted by descending score.
std::string keyword_report_json(std::string_view document, const Bands& bands,
                                std::span<const WordThermo> words);

}  // namespace textherm
