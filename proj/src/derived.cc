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

#include "madj/derived.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "madj/errors.h"
#include "madj/iso.h"

namespace madj {
namespace {

// Unordered pairs of members beyond which a literal epsilon step is refused.
constexpr double kMaxEpsilonPairs = 4e8;

using Family = std::vector<char>;  // indicator over subsets of circuit labels

bool IsCircuit(const Matroid& m, SubsetMask c) {
  if (c.empty() || m.Rank(c) != c.size() - 1) return false;
  for (int e : c.Elements()) {
    if (m.Rank(c.Without(e)) != c.size() - 1) return false;
  }
  return true;
}

void UpClose(Family& f, int k) {
  const std::uint32_t n = std::uint32_t{1} << k;
  for (int b = 0; b < k; ++b) {
    const std::uint32_t bit = std::uint32_t{1} << b;
    for (std::uint32_t s = 0; s < n; ++s) {
      if ((s & bit) == 0 && f[s]) f[s | bit] = 1;
    }
  }
}

std::vector<std::uint32_t> Members(const Family& f) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < f.size(); ++s) {
    if (f[s]) out.push_back(s);
  }
  return out;
}

// Minimal members of an up-closed family.
std::vector<std::uint32_t> MinimalMembers(const Family& f) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < f.size(); ++s) {
    if (!f[s]) continue;
    bool minimal = true;
    for (std::uint32_t rest = s; rest != 0 && minimal; rest &= rest - 1) {
      if (f[s & ~(rest & -rest)]) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

// epsilon(D) read literally: every pair of members.
Family EpsilonLiteral(const Family& d, EpsilonWitness witness) {
  Family out = d;
  const std::vector<std::uint32_t> members = Members(d);
  const double pairs = 0.5 * static_cast<double>(members.size()) * members.size();
  if (pairs > kMaxEpsilonPairs) {
    throw ResourceError("epsilon step over " + std::to_string(members.size()) +
                        " dependent sets exceeds the pair budget");
  }
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = i + 1; j < members.size(); ++j) {
      const std::uint32_t meet = members[i] & members[j];
      if (meet == 0 || d[meet]) continue;
      const std::uint32_t join = members[i] | members[j];
      if (witness == EpsilonWitness::kLowestCircuit) {
        out[join & ~(meet & -meet)] = 1;
        continue;
      }
      for (std::uint32_t rest = meet; rest != 0; rest &= rest - 1) {
        out[join & ~(rest & -rest)] = 1;
      }
    }
  }
  return out;
}

// epsilon(D) for up-closed D with every witness allowed, up to up-closure.
// The smallest members containing C are m + C for minimal m, so the
// minimal outputs are (m1 u m2) - C whenever (m1 ^ m2) + C is not in D.
Family EpsilonUpClosed(const Family& d, int k) {
  Family out = d;
  const std::vector<std::uint32_t> minimal = MinimalMembers(d);
  for (size_t i = 0; i < minimal.size(); ++i) {
    for (size_t j = i + 1; j < minimal.size(); ++j) {
      const std::uint32_t meet = minimal[i] & minimal[j];
      const std::uint32_t join = minimal[i] | minimal[j];
      for (int c = 0; c < k; ++c) {
        const std::uint32_t bit = std::uint32_t{1} << c;
        if (!d[meet | bit]) out[join & ~bit] = 1;
      }
    }
  }
  return out;
}

// Rank table of the hereditary family {S : !dependent[S]}; throws
// RefutationError if it is not a matroid.
std::vector<int> VerifiedRanks(const Family& dependent, int k) {
  const std::uint32_t n = std::uint32_t{1} << k;
  if (dependent[0]) throw RefutationError("derived family makes the empty set dependent", "{}");
  std::vector<int> rank(n, 0);
  for (std::uint32_t s = 1; s < n; ++s) {
    if (!dependent[s]) {
      rank[s] = std::popcount(s);
      continue;
    }
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      rank[s] = std::max(rank[s], rank[s & ~(rest & -rest)]);
    }
  }
  for (std::uint32_t s = 0; s < n; ++s) {
    for (int a = 0; a < k; ++a) {
      const std::uint32_t sa = s | (std::uint32_t{1} << a);
      if (sa == s) continue;
      if (dependent[s] && !dependent[sa]) {
        throw RefutationError("derived dependent sets are not up-closed",
                              ToElementList(SubsetMask(s)));
      }
      for (int b = a + 1; b < k; ++b) {
        const std::uint32_t sb = s | (std::uint32_t{1} << b);
        if (sb == s) continue;
        if (rank[sa] + rank[sb] < rank[sa | sb] + rank[s]) {
          throw RefutationError("derived independent sets violate augmentation",
                                "S=" + ToElementList(SubsetMask(s)) + " a=" +
                                    std::to_string(a) + " b=" + std::to_string(b));
        }
      }
    }
  }
  return rank;
}

std::vector<std::string> CircuitNames(const std::vector<SubsetMask>& circuits, int m) {
  std::vector<std::string> names;
  for (SubsetMask c : circuits) names.push_back(ToBitString(c, m));
  return names;
}

int IndexOfCircuit(const std::vector<SubsetMask>& circuits, SubsetMask c) {
  auto it = std::find(circuits.begin(), circuits.end(), c);
  return it == circuits.end() ? -1 : static_cast<int>(it - circuits.begin());
}

FieldMatrix KernelRows(const Matroid& m) {
  const FieldMatrix& a = m.matrix();
  return FieldMatrix::FromRowVectors(a.modulus(), a.cols(), KernelBasis(a));
}

}  // namespace

CircuitVector ComputeCircuitVector(const Matroid& m, SubsetMask circuit) {
  if (!m.is_linear()) throw std::invalid_argument("circuit vectors need a represented matroid");
  if (!IsCircuit(m, circuit)) {
    throw std::invalid_argument(ToElementList(circuit) + " is not a circuit");
  }
  const FieldMatrix& a = m.matrix();
  const std::vector<int> columns = circuit.Elements();
  const std::vector<FieldVector> kernel = KernelBasis(a.SelectColumns(columns));
  if (kernel.size() != 1) {
    throw InternalError("circuit " + ToElementList(circuit) + " has a " +
                        std::to_string(kernel.size()) + "-dimensional kernel");
  }
  FieldVector v(a.modulus(), a.cols());
  for (size_t i = 0; i < columns.size(); ++i) v[columns[i]] = kernel.front()[i];
  v.NormalizeProjective();
  if (v.Support() != circuit || !a.Apply(v).IsZero()) {
    throw InternalError("circuit vector of " + ToElementList(circuit) +
                        " has the wrong support or is not in the kernel");
  }
  return CircuitVector{circuit, v};
}

CircuitVectorMatroid CircuitVectorDerived(const Matroid& m) {
  if (!m.is_linear()) throw std::invalid_argument("circuit vectors need a represented matroid");
  std::vector<SubsetMask> circuits = Circuits(m);
  if (circuits.empty()) throw std::invalid_argument("matroid has no circuits");
  if (static_cast<int>(circuits.size()) > kMaxCircuitVectors) {
    throw ResourceError(std::to_string(circuits.size()) + " circuits; limit is " +
                        std::to_string(kMaxCircuitVectors));
  }
  std::vector<FieldVector> vectors;
  for (SubsetMask c : circuits) vectors.push_back(ComputeCircuitVector(m, c).vector);
  const PrimeModulus p = m.matrix().modulus();
  Matroid derived = Matroid::FromMatrix(FieldMatrix::FromColumnVectors(p, m.size(), vectors),
                                        CircuitNames(circuits, m.size()));
  return CircuitVectorMatroid{derived, circuits, vectors};
}

bool DependentFamily::Contains(SubsetMask d) const {
  return std::any_of(minimal.begin(), minimal.end(),
                     [&](SubsetMask x) { return x.IsSubsetOf(d); });
}

CombinatorialDerived CombinatorialDerivedMatroid(const Matroid& m, EpsilonWitness witness) {
  RequireEnumerable(m, "combinatorial derived matroid");
  const std::vector<SubsetMask> circuits = Circuits(m);
  const int k = static_cast<int>(circuits.size());
  if (k > kMaxDerivedCircuits) {
    throw ResourceError(std::to_string(k) + " circuits; limit is " +
                        std::to_string(kMaxDerivedCircuits));
  }
  const std::uint32_t n = std::uint32_t{1} << k;

  // D0, membership straight from the definition.
  Family current(n, 0);
  std::vector<SubsetMask> support(n);
  for (std::uint32_t s = 1; s < n; ++s) {
    const int low = std::countr_zero(s);
    support[s] = support[s & (s - 1)] | circuits[low];
    const int nullity = support[s].size() - m.Rank(support[s]);
    current[s] = std::popcount(s) > nullity ? 1 : 0;
  }

  int rounds = 0;
  for (bool up_closed = false;; up_closed = true) {
    Family next = (up_closed && witness == EpsilonWitness::kAllCircuits)
                      ? EpsilonUpClosed(current, k)
                      : EpsilonLiteral(current, witness);
    UpClose(next, k);
    if (next == current) break;
    current = std::move(next);
    ++rounds;
  }

  const std::vector<int> rank = VerifiedRanks(current, k);
  const int r = rank[n - 1];
  std::vector<SubsetMask> bases;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (!current[s] && std::popcount(s) == r) bases.push_back(SubsetMask(s));
  }
  CombinatorialDerived result{Matroid::FromBases(k, bases, CircuitNames(circuits, m.size())),
                              circuits,
                              DependentFamily{circuits, {}},
                              rounds};
  for (std::uint32_t s : MinimalMembers(current)) {
    result.dependent.minimal.push_back(SubsetMask(s));
  }
  return result;
}

DualityReport VerifyDuality(const Matroid& m) {
  if (!m.is_linear()) throw std::invalid_argument("duality check needs a represented matroid");
  const std::vector<SubsetMask> circuits = Circuits(m);
  const int k = static_cast<int>(circuits.size());
  if (k > kMaxDualityCircuits) {
    throw ResourceError(std::to_string(k) + " circuits; limit is " +
                        std::to_string(kMaxDualityCircuits));
  }
  const PrimeModulus p = m.matrix().modulus();
  const FieldMatrix dual_rows = KernelRows(m);  // A'
  const SubsetMask ground = m.ground();

  DualityReport report;
  report.circuit_count = k;
  std::vector<FieldVector> circuit_vectors;
  std::vector<FieldVector> normals;
  for (SubsetMask c : circuits) {
    circuit_vectors.push_back(ComputeCircuitVector(m, c).vector);
    // E - C is a hyperplane of the dual; its normal in the row space of A'.
    const std::vector<FieldVector> kernel =
        KernelBasis(dual_rows.SelectColumns((ground - c).Elements()).Transposed());
    if (kernel.size() != 1) {
      throw InternalError("complement of circuit " + ToElementList(c) +
                          " is not a hyperplane of the dual");
    }
    normals.push_back(kernel.front());
    if (dual_rows.LeftApply(kernel.front()).ProjectivelyNormalized() != circuit_vectors.back()) {
      ++report.identity_failures;
    }
  }

  for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
    std::vector<FieldVector> left;
    std::vector<FieldVector> right;
    for (int i : SubsetMask(s).Elements()) {
      left.push_back(circuit_vectors[i]);
      right.push_back(normals[i]);
    }
    ++report.subsets_checked;
    if (VectorRank(p, left) != VectorRank(p, right)) {
      report.counterexample = SubsetMask(s);
      break;
    }
  }
  if (k <= kMaxIsoSize) {
    const int dual_rank = dual_rows.rows();
    report.isomorphic = AreIsomorphic(
        Matroid::FromMatrix(FieldMatrix::FromColumnVectors(p, m.size(), circuit_vectors)),
        Matroid::FromMatrix(FieldMatrix::FromColumnVectors(p, dual_rank, normals)));
  }
  return report;
}

SubsetMask FundamentalCircuit(const Matroid& m, SubsetMask basis, int e) {
  if (!m.IsBasis(basis)) throw std::invalid_argument(ToElementList(basis) + " is not a basis");
  if (basis.Contains(e) || e < 0 || e >= m.size()) {
    throw std::invalid_argument("element " + std::to_string(e) + " must lie outside the basis");
  }
  SubsetMask circuit = SubsetMask::Singleton(e);
  for (int f : basis.Elements()) {
    if (m.IsIndependent(basis.With(e).Without(f))) circuit = circuit.With(f);
  }
  return circuit;
}

SubsetMask FundamentalCocircuit(const Matroid& m, SubsetMask basis, int e) {
  if (!m.IsBasis(basis)) throw std::invalid_argument(ToElementList(basis) + " is not a basis");
  if (!basis.Contains(e)) {
    throw std::invalid_argument("element " + std::to_string(e) + " must lie in the basis");
  }
  const SubsetMask cocircuit = FundamentalCircuit(Dual(m), m.ground() - basis, e);
  if (cocircuit != m.ground() - Closure(m, basis.Without(e)).mask) {
    throw InternalError("fundamental cocircuit disagrees with the complement of cl(B - e)");
  }
  return cocircuit;
}

bool CheckCocircuitBasis(const AdjointCertificate& cert, SubsetMask basis) {
  const Matroid& m = cert.base();
  SubsetMask labels;
  for (int e : basis.Elements()) {
    const SubsetMask hyperplane = m.ground() - FundamentalCocircuit(m, basis, e);
    int index = -1;
    for (size_t h = 0; h < cert.hyperplanes().size(); ++h) {
      if (cert.hyperplanes()[h].mask == hyperplane) index = static_cast<int>(h);
    }
    if (index < 0) throw InternalError("fundamental cocircuit has no hyperplane label");
    labels = labels.With(cert.element_of_hyperplane()[index]);
  }
  return labels.size() == basis.size() && cert.candidate().IsBasis(labels);
}

bool CheckFundamentalCircuitBasis(const CircuitVectorMatroid& derived, const Matroid& m,
                                  SubsetMask basis) {
  SubsetMask labels;
  for (int e : (m.ground() - basis).Elements()) {
    const int index = IndexOfCircuit(derived.circuits, FundamentalCircuit(m, basis, e));
    if (index < 0) throw InternalError("fundamental circuit missing from the circuit list");
    labels = labels.With(index);
  }
  return derived.matroid.IsBasis(labels);
}

ConjectureRecord RunConjectureHarness(const std::string& fixture, const Matroid& m) {
  ConjectureRecord record;
  record.fixture = fixture;
  record.size = m.size();
  record.rank = m.rank();
  std::optional<Matroid> combinatorial;
  try {
    record.circuit_count = static_cast<int>(Circuits(m).size());
    combinatorial = CombinatorialDerivedMatroid(m).matroid;
    record.combinatorial_rank = combinatorial->rank();
    record.rank_is_corank = combinatorial->rank() == m.size() - m.rank();
  } catch (const ResourceError& e) {
    record.note = e.what();
    return record;
  }
  if (!m.is_linear()) return record;
  try {
    if (record.circuit_count > 0) {
      const CircuitVectorMatroid ow = CircuitVectorDerived(m);
      record.circuit_vector_rank = ow.matroid.rank();
      if (combinatorial->size() <= kMaxIsoSize) {
        record.isomorphic_to_circuit_vector = AreIsomorphic(*combinatorial, ow.matroid);
      }
    }
    const Matroid dual_adjoint = Sigma(Dual(m)).matroid;
    if (combinatorial->size() <= kMaxIsoSize && dual_adjoint.size() <= kMaxIsoSize) {
      record.isomorphic_to_dual_adjoint = AreIsomorphic(*combinatorial, dual_adjoint);
    }
  } catch (const ResourceError& e) {
    record.note = e.what();
  }
  return record;
}

}  // namespace madj
