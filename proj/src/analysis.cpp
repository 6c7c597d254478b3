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

#include "textherm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "json.hpp"
#include "textherm/error.hpp"

namespace textherm {
namespace {

double solve_peak_ratio() {
  // Newton on g(x) = x tanh(x/2) - 2, which is convex and increasing for
  // x > 0; starting right of the root the iteration decreases monotonically.
  double x = 3.0;
  for (int i = 0; i < 64; ++i) {
    const double th = std::tanh(0.5 * x);
    const double g = x * th - 2.0;
    const double dg = th + 0.5 * x * (1.0 - th * th);
    const double next = x - g / dg;
    if (next == x) break;
    x = next;
  }
  return x;
}

bool ranks_before(const WordThermo& a, const WordThermo& b) {
  if (a.score != b.score) return a.score > b.score;
  return a.word < b.word;
}

}  // namespace

double schottky_peak_ratio() {
  static const double ratio = solve_peak_ratio();
  return ratio;
}

double schottky_peak_height() {
  const double x = schottky_peak_ratio();
  const double e = std::exp(-x);
  return x * x * e / ((1.0 + e) * (1.0 + e));
}

std::optional<double> peak_temperature(double delta) {
  if (!(delta > 0)) return std::nullopt;
  return delta / schottky_peak_ratio();
}

std::vector<Peak> find_peaks(const ThermoCurve& curve, double min_prominence) {
  const std::vector<double>& cv = curve.cv;
  const std::size_t n = cv.size();
  if (n < 3 || curve.grid.size() != n) {
    throw Error("peak search needs a curve with at least 3 aligned points");
  }
  const double threshold =
      min_prominence * *std::max_element(cv.begin(), cv.end());

  std::vector<Peak> peaks;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(cv[i] > cv[i - 1] && cv[i] > cv[i + 1])) continue;
    // Lowest point on each side before the curve climbs above this peak.
    double left_min = cv[i];
    for (std::size_t j = i; j-- > 0 && cv[j] <= cv[i];) {
      left_min = std::min(left_min, cv[j]);
    }
    double right_min = cv[i];
    for (std::size_t j = i + 1; j < n && cv[j] <= cv[i]; ++j) {
      right_min = std::min(right_min, cv[j]);
    }
    const double prominence = cv[i] - std::max(left_min, right_min);
    if (prominence > threshold) {
      peaks.push_back({curve.grid[i], cv[i], prominence});
    }
  }
  std::sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) {
    return a.temperature > b.temperature;
  });
  return peaks;
}

std::string_view to_string(WordClass word_class) {
  switch (word_class) {
    case WordClass::kKeyword:
      return "keyword";
    case WordClass::kCommon:
      return "common";
    case WordClass::kFunction:
      return "function";
  }
  return "unknown";
}

std::vector<WordThermo> classify_words(const EnergyModel& model,
                                       const Bands& bands) {
  if (!(bands.t_lo < bands.t_hi)) {
    throw Error("temperature bands need t_lo < t_hi");
  }
  if (model.words.empty()) throw Error("cannot classify an empty document");
  std::vector<WordThermo> out;
  out.reserve(model.words.size());
  for (const WordEnergy& we : model.words) {
    WordThermo wt;
    wt.word = we.word;
    wt.delta = we.delta;
    wt.n = we.n;
    wt.t_star = peak_temperature(we.delta);
    wt.score = static_cast<double>(we.n) * we.delta;
    if (!wt.t_star || *wt.t_star < bands.t_lo) {
      wt.word_class = WordClass::kFunction;
    } else if (*wt.t_star >= bands.t_hi) {
      wt.word_class = WordClass::kKeyword;
    } else {
      wt.word_class = WordClass::kCommon;
    }
    out.push_back(std::move(wt));
  }
  return out;
}

std::vector<WordThermo> classify_words(const DocProfile& profile,
                                       const CorpusStats& stats,
                                       const Bands& bands) {
  if (profile.length == 0) throw Error("cannot classify an empty document");
  return classify_words(build_energy_model(profile, stats), bands);
}

std::vector<WordThermo> rank_keywords(std::span<const WordThermo> words,
                                      std::size_t k) {
  if (k == 0) throw Error("keyword count must be >= 1");
  std::vector<WordThermo> ranked(words.begin(), words.end());
  const std::size_t keep = std::min(k, ranked.size());
  std::partial_sort(ranked.begin(), ranked.begin() + keep, ranked.end(),
                    ranks_before);
  ranked.resize(keep);
  return ranked;
}

std::optional<ThermoCurve> class_curve(const EnergyModel& model,
                                       std::span<const WordThermo> words,
                                       WordClass word_class,
                                       std::span<const double> grid) {
  std::set<std::string, std::less<>> members;
  for (const WordThermo& wt : words) {
    if (wt.word_class == word_class) members.insert(wt.word);
  }
  if (members.empty()) return std::nullopt;
  return ensemble_curves(model, grid, &members, std::string(to_string(word_class)));
}

std::string keyword_report_json(std::string_view document, const Bands& bands,
                                std::span<const WordThermo> words) {
  std::vector<WordThermo> sorted(words.begin(), words.end());
  std::sort(sorted.begin(), sorted.end(), ranks_before);
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const WordThermo& wt : sorted) {
    nlohmann::ordered_json entry;
    entry["word"] = wt.word;
    entry["n"] = wt.n;
    entry["delta"] = wt.delta;
    entry["t_star"] = wt.t_star ? nlohmann::ordered_json(*wt.t_star)
                                : nlohmann::ordered_json(nullptr);
    entry["class"] = to_string(wt.word_class);
    entry["score"] = wt.score;
    entries.push_back(std::move(entry));
  }
  nlohmann::ordered_json report;
  report["document"] = document;
  report["bands"] = {bands.t_lo, bands.t_hi};
  report["words"] = std::move(entries);
  return report.dump(2) + "\n";
}

}  // namespace textherm
