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

// Renders a document at a given temperature, striking out the word
// occurrences that have not condensed into the text.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "textherm/textcorpus.hpp"

namespace textherm {

enum class ExtractionMode {
  kThreshold,  // keep w iff delta_w >= x* T, i.e. T <= T*_w
  kSample,     // keep each occurrence with probability occupancy(delta_w, T)
};

std::string_view to_string(ExtractionMode mode);
ExtractionMode parse_extraction_mode(std::string_view text);

struct ExtractedToken {
  Token token;
  bool retained = true;
};

struct ExtractionResult {
  std::vector<ExtractedToken> items;
  double temperature = 0;
  ExtractionMode mode = ExtractionMode::kThreshold;
  std::uint64_t seed = 0;

  // Share of word occurrences retained; 0 for a document without words.
  double retained_word_fraction() const;
};

struct ExtractionOptions {
  ExtractionMode mode = ExtractionMode::kThreshold;
  std::uint64_t seed = 0;
  // Worker threads for sample mode; the result does not depend on it.
  unsigned threads = 1;
};

// Punctuation and numbers are always retained. In sample mode the k-th word
// occurrence of the document draws uniform_at(seed, k).
ExtractionResult extract_at_temperature(const DocProfile& profile,
                                        const CorpusStats& stats,
                                        double temperature,
                                        const ExtractionOptions& options = {});

enum class RenderFormat { kPlain, kTty, kHtml, kLatex };

RenderFormat parse_render_format(std::string_view text);

// Tokens joined by single spaces. Struck tokens are wrapped as ~~w~~
// (plain), ANSI strikethrough (tty), <s>w</s> (html) or \sout{w} (latex).
// html and latex output escape the characters special to those formats.
std::string render(const ExtractionResult& result, RenderFormat format);

}  // namespace textherm
