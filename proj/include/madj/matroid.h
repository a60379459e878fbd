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

// Matroids on at most 64 labeled elements, given either by a column matrix
// over GF(p) or by an explicit list of bases.
//
// A Matroid is an immutable value: copies share one implementation object,
// and derived data (rank table, flats, circuits) is computed once on first
// use under std::call_once, so concurrent readers are safe.
//
// Anything that enumerates subsets (flats, circuits, components, ...) is
// capped at kEnumerationCap elements and throws ResourceError beyond it.

#ifndef MADJ_MATROID_H_
#define MADJ_MATROID_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "madj/field.h"
#include "madj/subset_mask.h"

namespace madj {

inline constexpr int kEnumerationCap = 20;

struct Flat {
  SubsetMask mask;
  int rank = 0;

  auto operator<=>(const Flat&) const = default;
};

class Matroid {
 public:
  // Vector matroid of the columns of `a`; column i is element i. If `a` is
  // not of full row rank it is replaced by the nonzero rows of its RREF.
  static Matroid FromMatrix(const FieldMatrix& a, std::vector<std::string> names = {});

  // Matroid whose bases are exactly `bases` (duplicates ignored). Throws
  // NotAMatroidError if the list is empty, mixes sizes, or violates basis
  // exchange; the message names a violating pair.
  static Matroid FromBases(int m, std::vector<SubsetMask> bases,
                           std::vector<std::string> names = {});

  int size() const;
  int rank() const;
  SubsetMask ground() const { return SubsetMask::Full(size()); }

  int Rank(SubsetMask s) const;
  bool IsIndependent(SubsetMask s) const { return Rank(s) == s.size(); }
  bool IsBasis(SubsetMask s) const { return s.size() == rank() && IsIndependent(s); }

  bool is_linear() const;
  // Throws std::logic_error on a basis-backed matroid.
  const FieldMatrix& matrix() const;
  std::optional<PrimeModulus> modulus() const;
  // Throws std::logic_error on a linear matroid.
  const std::vector<SubsetMask>& basis_list() const;

  // Display name for element e: the stored name, or its index.
  std::string ElementName(int e) const;
  const std::vector<std::string>& names() const;

  SubsetMask loops() const;

  // Cached enumerations; see the free functions below for the contracts.
  const std::vector<std::vector<Flat>>& flats_by_rank() const;
  const std::vector<SubsetMask>& circuits() const;
  const std::vector<SubsetMask>& bases() const;

 private:
  struct Impl;
  explicit Matroid(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

// {e : r(S + e) = r(S)}.
Flat Closure(const Matroid& m, SubsetMask s);
bool IsFlat(const Matroid& m, SubsetMask s);

// Layer k holds every rank-k flat in mask order. Layer 0 is cl(empty) and
// layer r is {E}.
std::vector<std::vector<Flat>> FlatsByRank(const Matroid& m);
std::vector<Flat> AllFlats(const Matroid& m);  // by rank, then mask

// Rank-(r-1) flats in mask order. Empty for rank 0.
std::vector<Flat> Hyperplanes(const Matroid& m);

// Minimal dependent sets, by size then mask.
std::vector<SubsetMask> Circuits(const Matroid& m);

// Complements of Hyperplanes(m), in the same order.
std::vector<SubsetMask> Cocircuits(const Matroid& m);

// All bases in mask order.
std::vector<SubsetMask> Bases(const Matroid& m);

// Linear input: the matroid of a kernel-basis matrix (same labels).
// Basis input: complements of bases.
Matroid Dual(const Matroid& m);

// Ground sets concatenated, a's elements first. Linear over a common prime
// stays linear (block-diagonal), otherwise the result is basis-backed.
Matroid DirectSum(const Matroid& a, const Matroid& b);

// Relabels element e as perm[e].
Matroid Permute(const Matroid& m, const std::vector<int>& perm);

struct Simplification {
  Matroid matroid;
  // old element -> new element, nullopt for dropped loops and parallels.
  std::vector<std::optional<int>> element_map;
};

// Drops loops and keeps the least element of each parallel class.
Simplification Simplify(const Matroid& m);
bool IsSimple(const Matroid& m);

// Classes of the "share a circuit" relation on non-loops; coloops are
// singletons. Ordered by least element.
std::vector<SubsetMask> Components(const Matroid& m);
bool IsConnected(const Matroid& m);

// Throws ResourceError when m.size() exceeds `cap`.
void RequireEnumerable(const Matroid& m, const char* what, int cap = kEnumerationCap);

}  // namespace madj

#endif  // MADJ_MATROID_H_
