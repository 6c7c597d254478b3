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

#include "textherm/extraction.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "textherm/analysis.hpp"
#include "textherm/counter_rng.hpp"
#include "textherm/error.hpp"
#include "textherm/thermo.hpp"

namespace textherm {

std::string_view to_string(ExtractionMode mode) {
  return mode == ExtractionMode::kSample ? "sample" : "threshold";
}

ExtractionMode parse_extraction_mode(std::string_view text) {
  if (text == "threshold") return ExtractionMode::kThreshold;
  if (text == "sample") return ExtractionMode::kSample;
  throw Error("unknown extraction mode \"" + std::string(text) +
              "\" (expected threshold or sample)");
}

double ExtractionResult::retained_word_fraction() const {
  std::size_t words = 0;
  std::size_t kept = 0;
  for (const ExtractedToken& item : items) {
    if (!item.token.is_word()) continue;
    ++words;
    kept += item.retained ? 1 : 0;
  }
  return words == 0 ? 0.0 : static_cast<double>(kept) / static_cast<double>(words);
}

ExtractionResult extract_at_temperature(const DocProfile& profile,
                                        const CorpusStats& stats,
                                        double temperature,
                                        const ExtractionOptions& options) {
  if (!(temperature > 0) || !std::isfinite(temperature)) {
    throw Error("extraction temperature must be finite and > 0");
  }
  ExtractionResult result;
  result.temperature = temperature;
  result.mode = options.mode;
  result.seed = options.seed;
  result.items.reserve(profile.tokens.size());
  for (const Token& token : profile.tokens) result.items.push_back({token, true});
  if (profile.length == 0) return result;

  const EnergyModel model = build_energy_model(profile, stats);
  auto gap_of = [&model](const std::string& word) {
    auto it = std::lower_bound(
        model.words.begin(), model.words.end(), word,
        [](const WordEnergy& we, const std::string& w) { return we.word < w; });
    return it->delta;
  };

  // Word occurrences in document order; the position is the draw index.
  std::vector<std::size_t> occurrences;
  std::vector<double> gaps;
  occurrences.reserve(profile.length);
  gaps.reserve(profile.length);
  for (std::size_t i = 0; i < profile.tokens.size(); ++i) {
    if (!profile.tokens[i].is_word()) continue;
    occurrences.push_back(i);
    gaps.push_back(gap_of(profile.tokens[i].normalized));
  }

  const double cutoff = schottky_peak_ratio() * temperature;
  auto decide = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      bool keep;
      if (options.mode == ExtractionMode::kThreshold) {
        keep = gaps[k] >= cutoff;
      } else {
        keep = uniform_at(options.seed, k) < occupancy(gaps[k], temperature);
      }
      result.items[occurrences[k]].retained = keep;
    }
  };

  const std::size_t total = occurrences.size();
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1 || total < 2 * threads) {
    decide(0, total);
    return result;
  }
  const std::size_t chunk = (total + threads - 1) / threads;
  std::vector<std::jthread> workers;
  for (std::size_t begin = 0; begin < total; begin += chunk) {
    workers.emplace_back(decide, begin, std::min(total, begin + chunk));
  }
  workers.clear();  // joins
  return result;
}

RenderFormat parse_render_format(std::string_view text) {
  if (text == "plain") return RenderFormat::kPlain;
  if (text == "tty") return RenderFormat::kTty;
  if (text == "html") return RenderFormat::kHtml;
  if (text == "latex") return RenderFormat::kLatex;
  throw Error("unknown render format \"" + std::string(text) +
              "\" (expected plain, tty, html or latex)");
}

namespace {

std::string escape_html(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string escape_latex(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '#': case '$': case '%': case '&': case '_': case '{': case '}':
        out.push_back('\\');
        out.push_back(c);
        break;
      case '~': out += "\\textasciitilde{}"; break;
      case '^': out += "\\textasciicircum{}"; break;
      case '\\': out += "\\textbackslash{}"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string render(const ExtractionResult& result, RenderFormat format) {
  std::string out;
  for (std::size_t i = 0; i < result.items.size(); ++i) {
    if (i > 0) out.push_back(' ');
    const ExtractedToken& item = result.items[i];
    const std::string& text = item.token.surface;
    switch (format) {
      case RenderFormat::kPlain:
        out += item.retained ? text : "~~" + text + "~~";
        break;
      case RenderFormat::kTty:
        out += item.retained ? text : "\x1b[9m" + text + "\x1b[29m";
        break;
      case RenderFormat::kHtml:
        out += item.retained ? escape_html(text)
                             : "<s>" + escape_html(text) + "</s>";
        break;
      case RenderFormat::kLatex:
        out += item.retained ? escape_latex(text)
                             : "\\sout{" + escape_latex(text) + "}";
        break;
    }
  }
  return out;
}

}  // namespace textherm
