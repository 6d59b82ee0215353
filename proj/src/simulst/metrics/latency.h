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

#ifndef SIMULST_METRICS_LATENCY_H_
#define SIMULST_METRICS_LATENCY_H_

#include <optional>
#include <vector>

namespace simulst {

// Per-target-word delays of one hypothesis. ideal_ms is source time at
// emission, wall_ms adds the compute time spent so far (computation-aware).
struct DelaySequence {
  std::vector<double> ideal_ms;
  std::vector<double> wall_ms;
  double source_ms = 0.0;  // T, the source duration
  int ref_len = 0;         // |Y*| in words

  int hyp_len() const { return static_cast<int>(ideal_ms.size()); }
  // Throws InvalidArgument if the sequence breaks its invariants.
  void Validate(bool use_ca) const;
};

// Number of delays that enter the lagging sum: up to and including the first
// word emitted with the whole source read, or all of them.
int LaggingCutoff(const DelaySequence& d);

// AL = 1/tau * sum_{i<=tau} (d_i - (i-1) * T / |Y*|)
// nullopt for an empty hypothesis.
std::optional<double> AverageLagging(const DelaySequence& d, bool use_ca);

// LAAL: as AL with the oracle rate T / max(|Y|, |Y*|), so over-generation is
// not rewarded.
std::optional<double> LengthAdaptiveAverageLagging(const DelaySequence& d,
                                                   bool use_ca);

}  // namespace simulst

#endif  // SIMULST_METRICS_LATENCY_H_
