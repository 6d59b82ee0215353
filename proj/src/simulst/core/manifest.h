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

#ifndef SIMULST_CORE_MANIFEST_H_
#define SIMULST_CORE_MANIFEST_H_

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "json.hpp"
#include "simulst/core/types.h"

namespace simulst {

struct Manifest {
  std::vector<Utterance> utterances;
  // Shared feature dimension (0 when every utterance is empty).
  size_t feature_dim = 0;

  size_t size() const { return utterances.size(); }
};

// Line-delimited JSON, one utterance per line:
//   {"id": str, "frames": path-or-inline-array, "frame_ms": int,
//    "transcript": [str...], "reference": [str...]}
// Frame paths resolve relative to the manifest's directory and point to a JSON
// file holding an array of float arrays. Blank lines are skipped. Errors name
// the 1-based line number.
Manifest LoadManifest(const std::filesystem::path& path);
Manifest ParseManifest(std::istream& in, const std::filesystem::path& base_dir);

// Record with frames inlined.
nlohmann::json UtteranceToJson(const Utterance& u);
void WriteManifest(const Manifest& manifest, const std::filesystem::path& path);

}  // namespace simulst

#endif  // SIMULST_CORE_MANIFEST_H_
