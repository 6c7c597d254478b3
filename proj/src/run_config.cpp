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

#include "textherm/run_config.hpp"

#include <cmath>

#include "textherm/error.hpp"
#include "textherm/thermo.hpp"

namespace textherm {

void RunConfig::validate() const {
  if (!(t_min > 0)) throw Error("--t-min must be > 0");
  if (!(t_max > t_min) || !std::isfinite(t_max)) {
    throw Error("--t-max must exceed --t-min");
  }
  if (t_steps < 2) throw Error("--t-steps must be >= 2");
  if (!(bands.t_lo < bands.t_hi)) throw Error("--t-lo must be below --t-hi");
  if (!std::isfinite(alpha) || alpha < 0) throw Error("--alpha must be >= 0");
  if (top == 0) throw Error("--top must be >= 1");
  for (double t : temperatures) {
    if (!(t > 0) || !std::isfinite(t)) throw Error("-T values must be > 0");
  }
}

std::vector<double> RunConfig::grid() const {
  return make_temperature_grid(t_min, t_max, t_steps, log_grid);
}

}  // namespace textherm
