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

// Finite lattices given by their order relation, the lattice of flats of a
// matroid, and its opposite.

#ifndef MADJ_LATTICE_H_
#define MADJ_LATTICE_H_

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "madj/matroid.h"

namespace madj {

inline constexpr int kMaxLatticeSize = 1 << 14;

// A finite lattice on {0, ..., n-1}. Stores up-sets and down-sets as
// bitsets; meet and join are read off the order, so reversing the order
// swaps them without re-deriving anything.
class Lattice {
 public:
  // Throws std::invalid_argument if `leq` is not a partial order with a
  // least and a greatest element.
  static Lattice FromOrder(int n, const std::function<bool(int, int)>& leq);

  int size() const { return static_cast<int>(down_.size()); }
  bool Leq(int a, int b) const { return down_[b].test(a); }

  // Greatest lower bound / least upper bound. Throw std::invalid_argument
  // when the bound does not exist (the poset is not a lattice).
  int Meet(int a, int b) const;
  int Join(int a, int b) const;

  const std::vector<int>& UpperCovers(int a) const { return upper_covers_[a]; }
  const std::vector<int>& LowerCovers(int a) const { return lower_covers_[a]; }
  bool Covers(int upper, int lower) const;

  int bottom() const { return bottom_; }
  int top() const { return top_; }
  std::vector<int> Atoms() const { return upper_covers_[bottom_]; }
  std::vector<int> Coatoms() const { return lower_covers_[top_]; }

  // Length of the longest chain from bottom() to a.
  int Height(int a) const { return height_[a]; }
  int height() const { return height_[top_]; }
  int CoverCount() const;

  const boost::dynamic_bitset<>& DownSet(int a) const { return down_[a]; }
  const boost::dynamic_bitset<>& UpSet(int a) const { return up_[a]; }

  // Same elements, order reversed.
  Lattice Reversed() const;

  // Checks that every pair has a meet and a join. Throws
  // std::invalid_argument naming the first pair without one.
  void ValidateBounds() const;

 private:
  Lattice() = default;
  void Finish();
  int BoundOf(const boost::dynamic_bitset<>& candidates,
              const std::vector<boost::dynamic_bitset<>>& sets) const;

  std::vector<boost::dynamic_bitset<>> down_;
  std::vector<boost::dynamic_bitset<>> up_;
  std::vector<std::vector<int>> upper_covers_;
  std::vector<std::vector<int>> lower_covers_;
  std::vector<int> height_;
  int bottom_ = 0;
  int top_ = 0;
};

struct GeometricCheck {
  bool geometric = false;
  // "graded", "atomic" or "semimodular" on failure.
  std::string failed_property;
  // Elements involved in the failure: one element for graded/atomic, the
  // offending pair for semimodularity.
  std::vector<int> witness;
};

// Graded, atomic and semimodular. Requires size() <= 2^14.
GeometricCheck IsGeometric(const Lattice& l);

// The lattice of flats of a simple matroid.
class FlatLattice {
 public:
  // Throws std::invalid_argument("simplify first") for non-simple input.
  // Verifies meet = intersection and join = closure of union against the
  // order, and that the result is geometric; a mismatch is an
  // InternalError.
  static FlatLattice Build(const Matroid& m);

  const Matroid& matroid() const { return *matroid_; }
  const Lattice& order() const { return order_; }
  const std::vector<Flat>& flats() const { return flats_; }
  int size() const { return static_cast<int>(flats_.size()); }

  // Index of the flat with this mask; -1 if it is not a flat.
  int IndexOf(SubsetMask mask) const;

  // Set-theoretic meet (intersection) and join (closure of the union).
  int Meet(int a, int b) const;
  int Join(int a, int b) const;

  std::vector<std::string> Labels() const;  // "rank:bitstring"

 private:
  FlatLattice(std::shared_ptr<const Matroid> m, std::vector<Flat> flats, Lattice order);

  std::shared_ptr<const Matroid> matroid_;
  std::vector<Flat> flats_;
  Lattice order_;
  std::map<SubsetMask, int> index_;
};

// L(M) with the order reversed. Meet and join are the base lattice's join
// and meet.
class OppositeLattice {
 public:
  explicit OppositeLattice(FlatLattice base)
      : base_(std::move(base)), order_(base_.order().Reversed()) {}

  const FlatLattice& base() const { return base_; }
  const Lattice& order() const { return order_; }
  int size() const { return base_.size(); }
  int Meet(int a, int b) const { return base_.Join(a, b); }
  int Join(int a, int b) const { return base_.Meet(a, b); }
  // The hyperplanes of the base matroid.
  std::vector<int> Atoms() const { return base_.order().Coatoms(); }

  const FlatLattice& Opposite() const { return base_; }

 private:
  FlatLattice base_;
  Lattice order_;
};

inline OppositeLattice Opposite(FlatLattice l) { return OppositeLattice(std::move(l)); }

bool IsModularPair(const Matroid& m, const Flat& x, const Flat& y);

struct ModularityReport {
  bool modular = false;
  int element_count = 0;
  int hyperplane_count = 0;
  // A non-modular pair of flats when modular is false.
  std::optional<std::pair<Flat, Flat>> witness;
};

// Tests every pair of flats and cross-checks |H(M)| = |E(M)|. Throws
// std::invalid_argument("simplify first") on non-simple input and
// InternalError if the two tests disagree.
ModularityReport IsModular(const Matroid& m);

// An order isomorphism a -> b as image indices, or nullopt.
std::optional<std::vector<int>> LatticeIso(const Lattice& a, const Lattice& b);

// Hasse diagram in DOT: nodes in index order labeled with `labels`, one
// edge per cover relation pointing from the lower to the upper element.
std::string ExportDot(const Lattice& l, const std::vector<std::string>& labels,
                      const std::string& graph_name = "lattice");

}  // namespace madj

#endif  // MADJ_LATTICE_H_
