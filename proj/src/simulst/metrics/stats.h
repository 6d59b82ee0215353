// Copyright (c) 2026 The simulst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SIMULST_METRICS_STATS_H_
#define SIMULST_METRICS_STATS_H_

#include <string>
#include <vector>

namespace simulst {

using WordSeq = std::vector<std::string>;

// Mean of |hyp| - |ref| in words; positive means over-generation.
double LengthDifference(const std::vector<WordSeq>& hyps,
                        const std::vector<WordSeq>& refs);

enum class Regime { kLow, kMedium, kHigh };

// low < 1000 ms <= medium < 2000 ms <= high. Boundary values go to the higher
// regime.
Regime LatencyRegime(double delay_ms);
const char* RegimeName(Regime r);

}  // namespace simulst

#endif  // SIMULST_METRICS_STATS_H_
