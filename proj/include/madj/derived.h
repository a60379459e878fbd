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

// Derived matroids: the matroid of circuit vectors of a represented matroid,
// the combinatorial derived matroid defined by a dependent-set fixpoint,
// the duality between circuit vectors and hyperplane normals of the dual,
// and fundamental circuits and cocircuits.

#ifndef MADJ_DERIVED_H_
#define MADJ_DERIVED_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "madj/adjoint.h"
#include "madj/field.h"
#include "madj/matroid.h"

namespace madj {

inline constexpr int kMaxCircuitVectors = 64;
inline constexpr int kMaxDerivedCircuits = 16;
inline constexpr int kMaxDualityCircuits = 14;

struct CircuitVector {
  SubsetMask circuit;
  FieldVector vector;  // length m, projectively normalized, support = circuit
};

// The kernel vector of the represented matroid supported exactly on C.
// Throws std::invalid_argument if C is not a circuit.
CircuitVector ComputeCircuitVector(const Matroid& m, SubsetMask circuit);

struct CircuitVectorMatroid {
  Matroid matroid;                     // element i is circuits[i]
  std::vector<SubsetMask> circuits;    // Circuits(m) order
  std::vector<FieldVector> vectors;
};

// Vector matroid of all circuit vectors. Throws std::invalid_argument for
// basis-backed or circuit-free input and ResourceError above
// kMaxCircuitVectors circuits.
CircuitVectorMatroid CircuitVectorDerived(const Matroid& m);

// Which circuits C in D1 ^ D2 an epsilon step removes from D1 u D2.
enum class EpsilonWitness {
  kAllCircuits,    // every C in the intersection
  kLowestCircuit,  // only the first one in circuit order
};

// An up-closed family of sets of circuits, stored by its minimal members.
struct DependentFamily {
  std::vector<SubsetMask> universe;  // circuits of M; bit i is universe[i]
  std::vector<SubsetMask> minimal;   // antichain over circuit indices

  bool Contains(SubsetMask d) const;
};

struct CombinatorialDerived {
  Matroid matroid;  // basis-backed; element i is circuits[i]
  std::vector<SubsetMask> circuits;
  DependentFamily dependent;
  int rounds = 0;  // epsilon rounds until nothing new appeared
};

// Seeds with D0 = {D : |D| > |U D| - r(U D)}, applies
// D_{i+1} = up(epsilon(D_i)) until it stops growing, and takes the
// complements of the union as independent sets. The result is checked
// against the independence axioms over all 2^|C| subsets; a failure is a
// RefutationError. Throws ResourceError above kMaxDerivedCircuits circuits.
CombinatorialDerived CombinatorialDerivedMatroid(
    const Matroid& m, EpsilonWitness witness = EpsilonWitness::kAllCircuits);

struct DualityReport {
  int circuit_count = 0;
  long subsets_checked = 0;
  // Circuits where c_C is not a multiple of h_{E-C} A'.
  int identity_failures = 0;
  // First subset of circuit labels whose ranks differ on the two sides.
  std::optional<SubsetMask> counterexample;
  // Isomorphism of the two matroids as a cross-check (m <= 16).
  std::optional<bool> isomorphic;

  bool ok() const { return identity_failures == 0 && !counterexample && isomorphic != false; }
};

// Compares the circuit-vector matroid of M with the normal-vector adjoint of
// the dual under c_C <-> h_{E-C}, on every subset of circuit labels. Throws
// ResourceError above kMaxDualityCircuits circuits.
DualityReport VerifyDuality(const Matroid& m);

// The unique circuit in B + e. Throws std::invalid_argument unless B is a
// basis and e is outside it.
SubsetMask FundamentalCircuit(const Matroid& m, SubsetMask basis, int e);

// The fundamental circuit of e with respect to E - B in the dual; equal to
// E - cl(B - e), which is checked (InternalError otherwise).
SubsetMask FundamentalCocircuit(const Matroid& m, SubsetMask basis, int e);

// Reads the certificate's candidate as a matroid on the cocircuits of the
// base (hyperplane H <-> E - H) and checks that the fundamental cocircuits
// of B form a basis.
bool CheckCocircuitBasis(const AdjointCertificate& cert, SubsetMask basis);

// Whether the fundamental circuits {C(e;B) : e not in B} form a basis of the
// circuit-vector matroid.
bool CheckFundamentalCircuitBasis(const CircuitVectorMatroid& derived, const Matroid& m,
                                  SubsetMask basis);

// One record comparing the combinatorial derived matroid with m - r and
// with the adjoint of the dual. Fields are empty when out of reach.
struct ConjectureRecord {
  std::string fixture;
  int size = 0;
  int rank = 0;
  int circuit_count = 0;
  std::optional<int> combinatorial_rank;
  std::optional<int> circuit_vector_rank;
  std::optional<bool> rank_is_corank;             // rank(dM) == m - r
  std::optional<bool> isomorphic_to_dual_adjoint;  // dM ~ sigma(M*)
  std::optional<bool> isomorphic_to_circuit_vector;
  std::string note;
};

ConjectureRecord RunConjectureHarness(const std::string& fixture, const Matroid& m);

}  // namespace madj

#endif  // MADJ_DERIVED_H_
