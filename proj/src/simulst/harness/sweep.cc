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

#include "simulst/harness/sweep.h"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "fmt/format.h"
#include "spdlog/spdlog.h"
#include "simulst/core/subword.h"
#include "simulst/harness/output.h"

namespace simulst {

using nlohmann::json;

void SweepSpec::Validate() const {
  if (k_values.empty()) throw InvalidArgument("k list is empty");
  for (size_t i = 0; i < k_values.size(); ++i) {
    if (k_values[i] < 1) throw InvalidArgument("k values must be >= 1");
    if (i > 0 && k_values[i] <= k_values[i - 1]) {
      throw InvalidArgument("k values must be strictly increasing");
    }
  }
  if (strategies.empty()) throw InvalidArgument("no detection strategy selected");
  if (runs_per_point < 1) throw InvalidArgument("runs per point must be >= 1");
  base.Validate();
}

SweepResult Sweep(const Manifest& manifest, const ModelFactory& factory,
                  const SweepSpec& spec) {
  spec.Validate();
  std::vector<Detection> strategies = spec.strategies;
  std::sort(strategies.begin(), strategies.end(), [](Detection a, Detection b) {
    return std::string_view(DetectionName(a)) < std::string_view(DetectionName(b));
  });

  SweepResult result;
  result.per_run.resize(spec.runs_per_point);
  for (Detection strategy : strategies) {
    for (int64_t k : spec.k_values) {
      PolicyConfig cfg = spec.base;
      cfg.detection = strategy;
      cfg.k_test = k;
      cfg.avoid_eos_while_reading = spec.avoid_eos_while_reading.value_or(
          PolicyConfig::Defaults(strategy).avoid_eos_while_reading);

      CurvePoint point{DetectionName(strategy), k};
      std::vector<CurvePoint> runs;
      try {
        for (int run = 0; run < spec.runs_per_point; ++run) {
          const EvalResult r = EvaluateCorpus(manifest, factory, cfg);
          if (!r.ok()) {
            result.errors.push_back(fmt::format("{} k={} run {}: {} utterance(s) failed",
                                                point.strategy, k, run + 1, r.report.n_failed));
          }
          CurvePoint p = point;
          p.bleu = r.report.bleu;
          p.al_ms = r.report.al_ms;
          p.laal_ms = r.report.laal_ms;
          p.al_ca_ms = r.report.al_ca_ms.value_or(0.0);
          p.laal_ca_ms = r.report.laal_ca_ms.value_or(0.0);
          runs.push_back(p);
        }
      } catch (const std::exception& e) {
        result.errors.push_back(fmt::format("{} k={}: {}", point.strategy, k, e.what()));
        spdlog::error("sweep point {} k={} failed: {}", point.strategy, k, e.what());
        continue;
      }
      // Ideal-time metrics are deterministic; wall-clock ones are averaged.
      point = runs.front();
      point.al_ca_ms = point.laal_ca_ms = 0.0;
      for (const auto& p : runs) {
        point.al_ca_ms += p.al_ca_ms / static_cast<double>(runs.size());
        point.laal_ca_ms += p.laal_ca_ms / static_cast<double>(runs.size());
      }
      for (size_t run = 0; run < runs.size(); ++run) result.per_run[run].push_back(runs[run]);
      result.points.push_back(point);
      spdlog::info("{} k={}: BLEU {:.2f} LAAL {:.1f} ms LAAL_CA {:.1f} ms",
                   point.strategy, k, point.bleu, point.laal_ms, point.laal_ca_ms);
    }
  }
  return result;
}

namespace {

std::string FormatDouble(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

double ParseDouble(std::string_view s, size_t line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParse,
                fmt::format("bad number '{}' at line {}", std::string(s), line));
  }
  return v;
}

std::vector<std::string_view> SplitComma(std::string_view line) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    const size_t pos = line.find(',', start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::string CurveCsv(const std::vector<CurvePoint>& points) {
  std::string out(kCurveCsvHeader);
  out += '\n';
  for (const auto& p : points) {
    out += fmt::format("{},{},{},{},{},{},{}\n", p.strategy, p.k,
                       FormatDouble(p.bleu), FormatDouble(p.al_ms),
                       FormatDouble(p.laal_ms), FormatDouble(p.al_ca_ms),
                       FormatDouble(p.laal_ca_ms));
  }
  return out;
}

std::vector<CurvePoint> ParseCurveCsv(std::string_view csv) {
  std::vector<CurvePoint> points;
  size_t line_no = 0;
  size_t start = 0;
  while (start < csv.size()) {
    size_t end = csv.find('\n', start);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view line = csv.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no == 1) {
      if (line != kCurveCsvHeader) {
        throw Error(ErrorCode::kParse, "unexpected curve CSV header");
      }
      continue;
    }
    if (line.empty()) continue;
    const auto f = SplitComma(line);
    if (f.size() != 7) {
      throw Error(ErrorCode::kParse,
                  fmt::format("expected 7 fields at line {}, got {}", line_no, f.size()));
    }
    CurvePoint p;
    p.strategy = std::string(f[0]);
    int64_t k = 0;
    auto [ptr, ec] = std::from_chars(f[1].data(), f[1].data() + f[1].size(), k);
    if (ec != std::errc() || ptr != f[1].data() + f[1].size()) {
      throw Error(ErrorCode::kParse, fmt::format("bad k at line {}", line_no));
    }
    p.k = k;
    p.bleu = ParseDouble(f[2], line_no);
    p.al_ms = ParseDouble(f[3], line_no);
    p.laal_ms = ParseDouble(f[4], line_no);
    p.al_ca_ms = ParseDouble(f[5], line_no);
    p.laal_ca_ms = ParseDouble(f[6], line_no);
    points.push_back(std::move(p));
  }
  if (line_no == 0) throw Error(ErrorCode::kParse, "empty curve CSV");
  return points;
}

std::vector<std::pair<CurvePoint, Regime>> ReportRegimes(
    const std::vector<CurvePoint>& points) {
  std::vector<std::pair<CurvePoint, Regime>> out;
  out.reserve(points.size());
  for (const auto& p : points) out.emplace_back(p, LatencyRegime(p.laal_ms));
  return out;
}

void WriteSweepOutput(const SweepResult& result, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  WriteTextFile(dir / "curve.csv", CurveCsv(result.points));

  json regimes = json::array();
  for (const auto& [p, r] : ReportRegimes(result.points)) {
    regimes.push_back({{"strategy", p.strategy}, {"k", p.k},
                       {"LAAL_ms", p.laal_ms}, {"regime", RegimeName(r)}});
  }
  WriteTextFile(dir / "regimes.json", regimes.dump(2) + "\n");

  for (size_t run = 0; run < result.per_run.size(); ++run) {
    const auto run_dir = dir / "runs" / std::to_string(run + 1);
    std::filesystem::create_directories(run_dir);
    WriteTextFile(run_dir / "curve.csv", CurveCsv(result.per_run[run]));
  }
  if (!result.errors.empty()) {
    WriteTextFile(dir / "errors.json", json(result.errors).dump(2) + "\n");
  }
}

}  // namespace simulst
