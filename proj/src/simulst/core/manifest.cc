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

#include "simulst/core/manifest.h"

#include <fstream>
#include <unordered_set>

#include "fmt/format.h"
#include "simulst/error.h"

namespace simulst {

using nlohmann::json;

namespace {

Error ParseError(size_t line, const std::string& what) {
  return Error(ErrorCode::kParse, fmt::format("{} at line {}", what, line));
}

std::vector<std::string> WordList(const json& v, const char* field,
                                  size_t line) {
  if (!v.is_array()) {
    throw ParseError(line, fmt::format("field '{}' must be an array of strings",
                                       field));
  }
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& w : v) {
    if (!w.is_string()) {
      throw ParseError(line, fmt::format("field '{}' must be an array of strings",
                                         field));
    }
    out.push_back(w.get<std::string>());
  }
  return out;
}

std::vector<Frame> FramesFromJson(const json& v, int frame_ms, size_t line) {
  if (!v.is_array()) {
    throw ParseError(line, "field 'frames' must be a path or an array of arrays");
  }
  std::vector<Frame> frames;
  frames.reserve(v.size());
  for (const auto& row : v) {
    if (!row.is_array()) {
      throw ParseError(line, "field 'frames' must contain float arrays");
    }
    Frame f;
    f.duration_ms = frame_ms;
    f.features.reserve(row.size());
    for (const auto& x : row) {
      if (!x.is_number()) {
        throw ParseError(line, "field 'frames' must contain float arrays");
      }
      f.features.push_back(x.get<float>());
    }
    frames.push_back(std::move(f));
  }
  return frames;
}

std::vector<Frame> FramesFromFile(const std::filesystem::path& path,
                                  int frame_ms, size_t line) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo, fmt::format("cannot open frame file '{}' at line {}",
                                            path.string(), line));
  }
  json v;
  try {
    in >> v;
  } catch (const json::exception& e) {
    throw ParseError(line, fmt::format("malformed frame file '{}': {}",
                                       path.string(), e.what()));
  }
  return FramesFromJson(v, frame_ms, line);
}

Utterance ParseRecord(const std::string& text, size_t line,
                      const std::filesystem::path& base_dir) {
  json rec;
  try {
    rec = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(line, fmt::format("malformed JSON ({})", e.what()));
  }
  if (!rec.is_object()) throw ParseError(line, "record must be a JSON object");

  for (const char* field : {"id", "frames", "reference"}) {
    if (!rec.contains(field)) {
      throw ParseError(line, fmt::format("missing field '{}'", field));
    }
  }

  Utterance u;
  if (!rec["id"].is_string()) throw ParseError(line, "field 'id' must be a string");
  u.id = rec["id"].get<std::string>();

  if (rec.contains("frame_ms")) {
    if (!rec["frame_ms"].is_number_integer() || rec["frame_ms"].get<int>() <= 0) {
      throw ParseError(line, "field 'frame_ms' must be a positive integer");
    }
    u.frame_ms = rec["frame_ms"].get<int>();
  }

  const json& frames = rec["frames"];
  if (frames.is_string()) {
    u.frames = FramesFromFile(base_dir / frames.get<std::string>(), u.frame_ms, line);
  } else {
    u.frames = FramesFromJson(frames, u.frame_ms, line);
  }

  if (rec.contains("transcript") && !rec["transcript"].is_null()) {
    u.transcript = WordList(rec["transcript"], "transcript", line);
  }
  u.reference = WordList(rec["reference"], "reference", line);

  try {
    u.Validate();
  } catch (const Error& e) {
    throw ParseError(line, e.what());
  }
  return u;
}

}  // namespace

Manifest ParseManifest(std::istream& in, const std::filesystem::path& base_dir) {
  Manifest m;
  std::unordered_set<std::string> ids;
  std::string text;
  size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    Utterance u = ParseRecord(text, line, base_dir);
    if (!ids.insert(u.id).second) {
      throw ParseError(line, fmt::format("duplicate id '{}'", u.id));
    }
    if (!u.frames.empty()) {
      if (m.feature_dim == 0) {
        m.feature_dim = u.feature_dim();
      } else if (u.feature_dim() != m.feature_dim) {
        throw ParseError(line, fmt::format("feature dimension {} differs from {}",
                                           u.feature_dim(), m.feature_dim));
      }
    }
    m.utterances.push_back(std::move(u));
  }
  return m;
}

Manifest LoadManifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo,
                fmt::format("cannot open manifest '{}'", path.string()));
  }
  return ParseManifest(in, path.parent_path());
}

json UtteranceToJson(const Utterance& u) {
  json frames = json::array();
  for (const Frame& f : u.frames) frames.push_back(f.features);
  json rec = {{"id", u.id},
              {"frames", std::move(frames)},
              {"frame_ms", u.frame_ms},
              {"reference", u.reference}};
  if (u.transcript) rec["transcript"] = *u.transcript;
  return rec;
}

void WriteManifest(const Manifest& manifest, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::kIo,
                fmt::format("cannot write manifest '{}'", path.string()));
  }
  for (const Utterance& u : manifest.utterances) {
    out << UtteranceToJson(u).dump() << '\n';
  }
}

}  // namespace simulst
