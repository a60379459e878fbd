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

#include "madj/extension.h"

#include <algorithm>
#include <stdexcept>

#include "madj/errors.h"

namespace madj {
namespace {

// For each pair of hyperplanes meeting in rank r-2, the mask of hyperplanes
// containing their intersection.
struct PairConstraint {
  int first;
  int second;
  SubsetMask required;
};

std::vector<PairConstraint> Constraints(const Matroid& m, const std::vector<Flat>& hyperplanes) {
  std::vector<PairConstraint> out;
  const int h = static_cast<int>(hyperplanes.size());
  for (int i = 0; i < h; ++i) {
    for (int j = i + 1; j < h; ++j) {
      const SubsetMask meet = hyperplanes[i].mask & hyperplanes[j].mask;
      if (m.Rank(meet) != m.rank() - 2) continue;
      out.push_back({i, j, HyperplanesThrough(hyperplanes, meet)});
    }
  }
  return out;
}

SubclassCheck Check(const std::vector<PairConstraint>& constraints, SubsetMask members) {
  for (const PairConstraint& c : constraints) {
    if (!members.Contains(c.first) || !members.Contains(c.second)) continue;
    const SubsetMask missing = c.required - members;
    if (!missing.empty()) {
      return SubclassCheck{false, std::array<int, 3>{c.first, c.second, missing.Lowest()}};
    }
  }
  return SubclassCheck{true, std::nullopt};
}

}  // namespace

SubsetMask HyperplanesThrough(const std::vector<Flat>& hyperplanes, SubsetMask x) {
  SubsetMask out;
  for (size_t i = 0; i < hyperplanes.size(); ++i) {
    if (x.IsSubsetOf(hyperplanes[i].mask)) out = out.With(static_cast<int>(i));
  }
  return out;
}

SubclassCheck IsLinearSubclass(const Matroid& m, SubsetMask members) {
  const std::vector<Flat> hyperplanes = Hyperplanes(m);
  if (!members.IsSubsetOf(SubsetMask::Full(static_cast<int>(hyperplanes.size())))) {
    throw std::invalid_argument("hyperplane set " + ToElementList(members) +
                                " indexes past the hyperplane list");
  }
  return Check(Constraints(m, hyperplanes), members);
}

ExtensionLattice ExtensionLattice::Build(const Matroid& m) {
  std::vector<Flat> hyperplanes = Hyperplanes(m);
  const int h = static_cast<int>(hyperplanes.size());
  if (h > kMaxSubclassHyperplanes) {
    throw ResourceError(std::to_string(h) + " hyperplanes; linear subclass enumeration is capped "
                        "at " + std::to_string(kMaxSubclassHyperplanes));
  }
  const std::vector<PairConstraint> constraints = Constraints(m, hyperplanes);
  std::vector<SubsetMask> subclasses;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << h); ++s) {
    if (Check(constraints, SubsetMask(s)).linear) subclasses.push_back(SubsetMask(s));
  }
  Lattice order = Lattice::FromOrder(static_cast<int>(subclasses.size()), [&](int a, int b) {
    return subclasses[a].IsSubsetOf(subclasses[b]);
  });
  return ExtensionLattice(std::move(hyperplanes), std::move(subclasses), std::move(order));
}

int ExtensionLattice::IndexOf(SubsetMask members) const {
  auto it = std::lower_bound(subclasses_.begin(), subclasses_.end(), members);
  if (it == subclasses_.end() || *it != members) return -1;
  return static_cast<int>(it - subclasses_.begin());
}

std::vector<std::string> ExtensionLattice::Labels() const {
  std::vector<std::string> labels;
  for (SubsetMask s : subclasses_) {
    labels.push_back(ToBitString(s, static_cast<int>(hyperplanes_.size())));
  }
  return labels;
}

LambdaReport CompareLambda(const Matroid& m) {
  const ExtensionLattice lattice = ExtensionLattice::Build(m);
  const std::vector<Flat> flats = AllFlats(m);
  LambdaReport report;
  report.flat_count = static_cast<int>(flats.size());
  report.subclass_count = lattice.size();
  report.well_defined = true;
  std::vector<bool> hit(lattice.size(), false);
  for (const Flat& x : flats) {
    const SubsetMask image = HyperplanesThrough(lattice.hyperplanes(), x.mask);
    report.images.push_back(image);
    const int index = lattice.IndexOf(image);
    if (index < 0) {
      report.well_defined = false;
    } else {
      hit[index] = true;
    }
  }
  std::vector<SubsetMask> sorted = report.images;
  std::sort(sorted.begin(), sorted.end());
  report.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  for (int i = 0; i < lattice.size(); ++i) {
    if (!hit[i]) report.missing.push_back(lattice.subclasses()[i]);
  }
  report.surjective = report.missing.empty();
  report.order_isomorphism = report.injective;
  for (size_t i = 0; i < flats.size() && report.order_isomorphism; ++i) {
    for (size_t j = 0; j < flats.size(); ++j) {
      const bool below = flats[i].mask.IsSubsetOf(flats[j].mask);
      const bool reversed = report.images[j].IsSubsetOf(report.images[i]);
      if (below != reversed) {
        report.order_isomorphism = false;
        break;
      }
    }
  }
  report.order_isomorphism = report.order_isomorphism && report.surjective;
  return report;
}

LambdaReport LambdaMap(const Matroid& m) {
  if (!IsModular(m).modular) {
    throw std::invalid_argument("hyperplanes-through map needs a modular matroid");
  }
  LambdaReport report = CompareLambda(m);
  if (!report.ok()) {
    std::string what = !report.well_defined ? "an image is not a linear subclass"
                       : !report.injective  ? "not injective"
                       : !report.surjective ? "misses a linear subclass"
                                            : "does not reverse order";
    throw RefutationError(
        "hyperplanes-through map on a modular matroid " + what,
        report.missing.empty() ? "" : "missing " + ToElementList(report.missing.front()));
  }
  return report;
}

}  // namespace madj
