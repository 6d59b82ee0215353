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

#ifndef SIMULST_HARNESS_OUTPUT_H_
#define SIMULST_HARNESS_OUTPUT_H_

#include <filesystem>
#include <string>

#include "simulst/harness/evaluate.h"

namespace simulst {

// Writes DIR/metrics.json, DIR/hyps.txt, DIR/logs/<utt-id>.jsonl and, when
// some utterance failed, DIR/errors.json.
void WriteEvalOutput(const EvalResult& result, const std::filesystem::path& dir);

// Utterance id made safe for use as a file name.
std::string LogFileName(const std::string& utterance_id);

void WriteTextFile(const std::filesystem::path& path, const std::string& text);

}  // namespace simulst

#endif  // SIMULST_HARNESS_OUTPUT_H_
