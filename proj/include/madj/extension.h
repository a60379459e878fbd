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

// Linear subclasses of hyperplanes and the lattice they form under
// inclusion, compared with the flats through X -> {H : X subset H}.
//
// Sets of hyperplanes are masks over indices into Hyperplanes(m).

#ifndef MADJ_EXTENSION_H_
#define MADJ_EXTENSION_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "madj/lattice.h"
#include "madj/matroid.h"

namespace madj {

inline constexpr int kMaxSubclassHyperplanes = 13;

struct SubclassCheck {
  bool linear = false;
  // (H1, H2, H3): H1, H2 in the set meet in rank r-2, H3 contains the
  // intersection and is missing.
  std::optional<std::array<int, 3>> witness;
};

SubclassCheck IsLinearSubclass(const Matroid& m, SubsetMask members);

class ExtensionLattice {
 public:
  // Filters all 2^|H| hyperplane sets. Throws ResourceError above
  // kMaxSubclassHyperplanes hyperplanes.
  static ExtensionLattice Build(const Matroid& m);

  const std::vector<Flat>& hyperplanes() const { return hyperplanes_; }
  // In mask order.
  const std::vector<SubsetMask>& subclasses() const { return subclasses_; }
  const Lattice& order() const { return order_; }
  int size() const { return static_cast<int>(subclasses_.size()); }
  int IndexOf(SubsetMask members) const;
  std::vector<std::string> Labels() const;  // bitstring over hyperplanes

 private:
  ExtensionLattice(std::vector<Flat> hyperplanes, std::vector<SubsetMask> subclasses,
                   Lattice order)
      : hyperplanes_(std::move(hyperplanes)),
        subclasses_(std::move(subclasses)),
        order_(std::move(order)) {}

  std::vector<Flat> hyperplanes_;
  std::vector<SubsetMask> subclasses_;
  Lattice order_;
};

// {H : X subset H} as a hyperplane mask.
SubsetMask HyperplanesThrough(const std::vector<Flat>& hyperplanes, SubsetMask x);

struct LambdaReport {
  int flat_count = 0;
  int subclass_count = 0;
  bool well_defined = false;  // every image is a linear subclass
  bool injective = false;
  bool surjective = false;
  bool order_isomorphism = false;  // X <= Y iff image(Y) <= image(X)
  std::vector<SubsetMask> images;   // per flat, AllFlats order
  std::vector<SubsetMask> missing;  // linear subclasses that are no image

  bool ok() const { return well_defined && injective && surjective && order_isomorphism; }
};

// X -> {H : X subset H} against the enumerated linear subclasses. Reports
// without judging; works for any matroid within the caps.
LambdaReport CompareLambda(const Matroid& m);

// The same map for a modular matroid, where it must be an order
// isomorphism from the opposite of the flat lattice. Throws
// std::invalid_argument on non-modular input and RefutationError if the
// map fails.
LambdaReport LambdaMap(const Matroid& m);

}  // namespace madj

#endif  // MADJ_EXTENSION_H_
