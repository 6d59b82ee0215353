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

#ifndef SIMULST_MODEL_OFFLINE_H_
#define SIMULST_MODEL_OFFLINE_H_

#include "simulst/core/types.h"
#include "simulst/model/model.h"

namespace simulst {

struct OfflineResult {
  Hypothesis hypothesis;
  bool truncated = false;
};

// Encodes the whole utterance once, then decodes greedily to EOS. Stops with
// truncated=true after max_target_words words.
OfflineResult OfflineGreedyTranslate(Model& model, const Utterance& u,
                                     int max_target_words);

}  // namespace simulst

#endif  // SIMULST_MODEL_OFFLINE_H_
