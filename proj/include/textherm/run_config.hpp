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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "textherm/analysis.hpp"
#include "textherm/extraction.hpp"
#include "textherm/textcorpus.hpp"

namespace textherm {

// Everything a CLI invocation needs. Defaults mirror the library defaults.
struct RunConfig {
  std::string corpus_path;
  std::string document_path;
  double alpha = kDefaultAlpha;
  bool alpha_set = false;  // overrides the corpus file's alpha when true

  double t_min = 0.005;
  double t_max = 200.0;
  std::size_t t_steps = 200;
  bool log_grid = true;

  Bands bands;
  std::vector<double> temperatures;  // extraction temperatures
  std::size_t top = 20;

  ExtractionMode mode = ExtractionMode::kThreshold;
  std::uint64_t seed = 0;
  RenderFormat format = RenderFormat::kPlain;
  std::string output_path;  // stdout when empty

  // Throws on t_min <= 0, t_max <= t_min, t_steps < 2, t_lo >= t_hi or a
  // non-positive extraction temperature.
  void validate() const;
  std::vector<double> grid() const;
};

}  // namespace textherm
