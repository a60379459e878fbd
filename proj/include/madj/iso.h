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

// Isomorphism testing for small matroids.

#ifndef MADJ_ISO_H_
#define MADJ_ISO_H_

#include <optional>
#include <string>
#include <vector>

#include "madj/matroid.h"

namespace madj {

inline constexpr int kMaxIsoSize = 16;

// Isomorphism-invariant summary. Equal fingerprints do not imply
// isomorphism.
struct Fingerprint {
  int size = 0;
  int rank = 0;
  std::vector<int> flat_counts;     // indexed by rank
  std::vector<int> circuit_sizes;   // histogram indexed by size
  // For each element, the number of flats of each rank containing it;
  // the list of profiles is sorted.
  std::vector<std::vector<int>> profiles;

  bool operator==(const Fingerprint&) const = default;
  std::string DebugString() const;
};

// Requires m.size() <= kEnumerationCap.
Fingerprint ComputeFingerprint(const Matroid& m);

// A bijection f (element e of `a` to element f[e] of `b`) with
// r_a(S) = r_b(f(S)) for all S, or nullopt. Found by backtracking on
// per-element profiles, then verified exhaustively for m <= 10 and on 10^4
// random subsets otherwise; a failed verification is an InternalError.
// Throws ResourceError above kMaxIsoSize elements.
std::optional<std::vector<int>> MatroidIso(const Matroid& a, const Matroid& b);

inline bool AreIsomorphic(const Matroid& a, const Matroid& b) {
  return MatroidIso(a, b).has_value();
}

}  // namespace madj

#endif  // MADJ_ISO_H_
