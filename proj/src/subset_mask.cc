// Copyright 2026 The Authors.
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

#include "madj/subset_mask.h"

namespace madj {

std::string ToBitString(SubsetMask s, int m) {
  std::string out(m, '0');
  for (int i = 0; i < m; ++i) {
    if (s.Contains(i)) out[i] = '1';
  }
  return out;
}

std::string ToElementList(SubsetMask s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.Elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace madj
