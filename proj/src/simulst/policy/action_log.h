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

#ifndef SIMULST_POLICY_ACTION_LOG_H_
#define SIMULST_POLICY_ACTION_LOG_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace simulst {

enum class EventKind { kRead, kWrite };

struct Event {
  EventKind kind = EventKind::kRead;
  // READ: frames [chunk_begin, chunk_end) and the word count detected after.
  size_t chunk_begin = 0;
  size_t chunk_end = 0;
  int detected = 0;
  // WRITE: the emitted word and its subword tokens.
  std::string word;
  std::vector<std::string> tokens;
  // Source time at the decision, and that plus model compute time so far.
  int64_t ideal_ms = 0;
  double wall_ms = 0.0;

  bool operator==(const Event&) const = default;
};

using ActionLog = std::vector<Event>;

// {"kind":"READ"|"WRITE","payload":...,"ideal_ms":int,"wall_ms":float}
nlohmann::json EventToJson(const Event& e);
Event EventFromJson(const nlohmann::json& j);

void WriteActionLog(const ActionLog& log, const std::filesystem::path& path);
ActionLog ReadActionLog(const std::filesystem::path& path);

}  // namespace simulst

#endif  // SIMULST_POLICY_ACTION_LOG_H_
