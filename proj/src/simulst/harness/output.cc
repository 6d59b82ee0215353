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

#include "simulst/harness/output.h"

#include <fstream>

#include "fmt/format.h"
#include "simulst/core/subword.h"
#include "simulst/error.h"

namespace simulst {

using nlohmann::json;

std::string LogFileName(const std::string& utterance_id) {
  std::string name = utterance_id;
  for (char& c : name) {
    if (c == '/' || c == '\\' || c == '\0') c = '_';
  }
  if (name.empty() || name == "." || name == "..") name = "_" + name;
  return name + ".jsonl";
}

void WriteTextFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, fmt::format("cannot write '{}'", path.string()));
  out << text;
}

void WriteEvalOutput(const EvalResult& result, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir / "logs", ec);
  if (ec) {
    throw Error(ErrorCode::kIo, fmt::format("cannot create '{}': {}",
                                            (dir / "logs").string(), ec.message()));
  }

  json metrics = result.report.ToJson();
  metrics["config"] = result.config.ToJson();
  WriteTextFile(dir / "metrics.json", metrics.dump(2) + "\n");

  std::string hyps;
  json errors = json::array();
  for (const auto& o : result.utterances) {
    WriteActionLog(o.log, dir / "logs" / LogFileName(o.id));
    if (o.ok) {
      hyps += o.id + "\t" + JoinWords(o.hypothesis.words) + "\n";
    } else {
      errors.push_back({{"id", o.id}, {"error", o.error}});
    }
  }
  WriteTextFile(dir / "hyps.txt", hyps);
  if (!errors.empty()) WriteTextFile(dir / "errors.json", errors.dump(2) + "\n");
}

}  // namespace simulst
