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

#include "simulst/policy/action_log.h"

#include <fstream>

#include "fmt/format.h"
#include "simulst/error.h"

namespace simulst {

using nlohmann::json;

json EventToJson(const Event& e) {
  json j;
  if (e.kind == EventKind::kRead) {
    j["kind"] = "READ";
    j["payload"] = {{"begin", e.chunk_begin}, {"end", e.chunk_end},
                    {"detected", e.detected}};
  } else {
    j["kind"] = "WRITE";
    j["payload"] = {{"word", e.word}, {"tokens", e.tokens}};
  }
  j["ideal_ms"] = e.ideal_ms;
  j["wall_ms"] = e.wall_ms;
  return j;
}

Event EventFromJson(const json& j) {
  Event e;
  try {
    const std::string kind = j.at("kind").get<std::string>();
    const json& p = j.at("payload");
    if (kind == "READ") {
      e.kind = EventKind::kRead;
      e.chunk_begin = p.at("begin").get<size_t>();
      e.chunk_end = p.at("end").get<size_t>();
      e.detected = p.at("detected").get<int>();
    } else if (kind == "WRITE") {
      e.kind = EventKind::kWrite;
      e.word = p.at("word").get<std::string>();
      e.tokens = p.at("tokens").get<std::vector<std::string>>();
    } else {
      throw Error(ErrorCode::kParse, fmt::format("unknown event kind '{}'", kind));
    }
    e.ideal_ms = j.at("ideal_ms").get<int64_t>();
    e.wall_ms = j.at("wall_ms").get<double>();
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::kParse, fmt::format("malformed event: {}", ex.what()));
  }
  return e;
}

void WriteActionLog(const ActionLog& log, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::kIo, fmt::format("cannot write '{}'", path.string()));
  }
  for (const Event& e : log) out << EventToJson(e).dump() << '\n';
}

ActionLog ReadActionLog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo, fmt::format("cannot open '{}'", path.string()));
  }
  ActionLog log;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      log.push_back(EventFromJson(json::parse(line)));
    } catch (const json::exception& ex) {
      throw Error(ErrorCode::kParse, fmt::format("malformed event: {}", ex.what()));
    }
  }
  return log;
}

}  // namespace simulst
