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

#ifndef SIMULST_HARNESS_SWEEP_H_
#define SIMULST_HARNESS_SWEEP_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simulst/harness/evaluate.h"
#include "simulst/metrics/stats.h"

namespace simulst {

struct SweepSpec {
  std::vector<int64_t> k_values{3, 5, 7, 9, 11};
  std::vector<Detection> strategies{Detection::kFixed, Detection::kAdaptive};
  // Wall-clock metrics are averaged over this many runs per point.
  int runs_per_point = 1;
  // step_ms, avg_word_ms, force_finish and max_target_words come from here.
  PolicyConfig base;
  // Unset: each strategy uses its default (on for adaptive, off for fixed).
  std::optional<bool> avoid_eos_while_reading;

  // k_values non-empty and strictly increasing, runs >= 1.
  void Validate() const;
};

struct CurvePoint {
  std::string strategy;
  int64_t k = 0;
  double bleu = 0.0;
  double al_ms = 0.0;
  double laal_ms = 0.0;
  double al_ca_ms = 0.0;
  double laal_ca_ms = 0.0;

  bool operator==(const CurvePoint&) const = default;
};

struct SweepResult {
  std::vector<CurvePoint> points;                // sorted by strategy, then k
  std::vector<std::vector<CurvePoint>> per_run;  // [run][point]
  std::vector<std::string> errors;
};

// One corpus evaluation per (strategy, k, run), serialized so wall-clock
// numbers stay honest. Failing points are reported and skipped.
SweepResult Sweep(const Manifest& manifest, const ModelFactory& factory,
                  const SweepSpec& spec);

// strategy,k,bleu,AL_ms,LAAL_ms,AL_CA_ms,LAAL_CA_ms
inline constexpr std::string_view kCurveCsvHeader =
    "strategy,k,bleu,AL_ms,LAAL_ms,AL_CA_ms,LAAL_CA_ms";
std::string CurveCsv(const std::vector<CurvePoint>& points);
std::vector<CurvePoint> ParseCurveCsv(std::string_view csv);

// Writes DIR/curve.csv, DIR/regimes.json and DIR/runs/<n>/curve.csv, runs
// numbered from 1.
void WriteSweepOutput(const SweepResult& result, const std::filesystem::path& dir);

std::vector<std::pair<CurvePoint, Regime>> ReportRegimes(
    const std::vector<CurvePoint>& points);

}  // namespace simulst

#endif  // SIMULST_HARNESS_SWEEP_H_
