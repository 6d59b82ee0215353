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

#include "simulst/metrics/latency.h"

#include <algorithm>

#include "fmt/format.h"
#include "simulst/error.h"

namespace simulst {

void DelaySequence::Validate(bool use_ca) const {
  if (ref_len < 1) throw InvalidArgument("reference length must be >= 1");
  if (source_ms < 0) throw InvalidArgument("source duration must be >= 0");
  for (size_t i = 0; i < ideal_ms.size(); ++i) {
    if (ideal_ms[i] > source_ms) {
      throw InvalidArgument(fmt::format("delay {} = {} exceeds source duration {}",
                                        i, ideal_ms[i], source_ms));
    }
    if (i > 0 && ideal_ms[i] < ideal_ms[i - 1]) {
      throw InvalidArgument(fmt::format("delays decrease at word {}", i));
    }
  }
  if (use_ca) {
    if (wall_ms.size() != ideal_ms.size()) {
      throw InvalidArgument("wall-clock delays must match ideal delays in length");
    }
    for (double w : wall_ms) {
      if (w < 0) throw InvalidArgument("wall-clock delays must be >= 0");
    }
  }
}

int LaggingCutoff(const DelaySequence& d) {
  for (int i = 0; i < d.hyp_len(); ++i) {
    if (d.ideal_ms[i] >= d.source_ms) return i + 1;
  }
  return d.hyp_len();
}

namespace {

std::optional<double> Lagging(const DelaySequence& d, bool use_ca,
                              double oracle_len) {
  d.Validate(use_ca);
  if (d.hyp_len() == 0) return std::nullopt;
  const std::vector<double>& delays = use_ca ? d.wall_ms : d.ideal_ms;
  const int tau = LaggingCutoff(d);
  const double rate = d.source_ms / oracle_len;
  double sum = 0.0;
  for (int i = 0; i < tau; ++i) sum += delays[i] - i * rate;
  return sum / tau;
}

}  // namespace

std::optional<double> AverageLagging(const DelaySequence& d, bool use_ca) {
  return Lagging(d, use_ca, d.ref_len);
}

std::optional<double> LengthAdaptiveAverageLagging(const DelaySequence& d,
                                                   bool use_ca) {
  return Lagging(d, use_ca, std::max(d.hyp_len(), d.ref_len));
}

}  // namespace simulst
