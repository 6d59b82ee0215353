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

#ifndef SIMULST_CORE_ARGMAX_H_
#define SIMULST_CORE_ARGMAX_H_

#include <span>

namespace simulst {

// Index of the maximum score; ties go to the lowest index. Entries equal to
// `skip` are ignored. Returns -1 if nothing is eligible.
inline int ArgmaxLowest(std::span<const float> scores, int skip = -1) {
  int best = -1;
  for (int i = 0; i < static_cast<int>(scores.size()); ++i) {
    if (i == skip) continue;
    if (best < 0 || scores[i] > scores[best]) best = i;
  }
  return best;
}

}  // namespace simulst

#endif  // SIMULST_CORE_ARGMAX_H_
