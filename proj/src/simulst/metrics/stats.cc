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

#include "simulst/metrics/stats.h"

#include "fmt/format.h"
#include "simulst/error.h"

namespace simulst {

double LengthDifference(const std::vector<WordSeq>& hyps,
                        const std::vector<WordSeq>& refs) {
  if (hyps.size() != refs.size()) {
    throw InvalidArgument(fmt::format("{} hypotheses but {} references",
                                      hyps.size(), refs.size()));
  }
  if (hyps.empty()) throw InvalidArgument("empty corpus");
  double sum = 0.0;
  for (size_t i = 0; i < hyps.size(); ++i) {
    sum += static_cast<double>(hyps[i].size()) - static_cast<double>(refs[i].size());
  }
  return sum / static_cast<double>(hyps.size());
}

Regime LatencyRegime(double delay_ms) {
  if (delay_ms < 0) throw InvalidArgument("delay must be >= 0");
  if (delay_ms < 1000.0) return Regime::kLow;
  if (delay_ms < 2000.0) return Regime::kMedium;
  return Regime::kHigh;
}

const char* RegimeName(Regime r) {
  switch (r) {
    case Regime::kLow:
      return "low";
    case Regime::kMedium:
      return "medium";
    case Regime::kHigh:
      return "high";
  }
  return "unknown";
}

}  // namespace simulst
