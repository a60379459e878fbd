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
#include <cstdint>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "madj/catalogue.h"
#include "madj/errors.h"
#include "madj/iso.h"
#include "test_util.h"

namespace madj {
namespace {

// The dependent family straight from the definition, as a 2^k table:
// D0 by the counting condition, then rounds of epsilon over every pair of
// members followed by up-closure.
std::vector<char> LiteralDependentTable(const Matroid& m, bool all_witnesses) {
  const std::vector<SubsetMask> circuits = Circuits(m);
  const int k = static_cast<int>(circuits.size());
  const std::uint32_t n = std::uint32_t{1} << k;
  std::vector<char> d(n, 0);
  for (std::uint32_t s = 1; s < n; ++s) {
    SubsetMask support;
    for (int i = 0; i < k; ++i) {
      if (s >> i & 1) support = support | circuits[i];
    }
    d[s] = std::popcount(s) > support.size() - m.Rank(support);
  }
  while (true) {
    std::vector<std::uint32_t> members;
    for (std::uint32_t s = 0; s < n; ++s) {
      if (d[s]) members.push_back(s);
    }
    std::vector<char> next = d;
    for (std::uint32_t a : members) {
      for (std::uint32_t b : members) {
        const std::uint32_t meet = a & b;
        if (meet == 0 || d[meet]) continue;
        for (int c = 0; c < k; ++c) {
          if (!(meet >> c & 1)) continue;
          next[(a | b) & ~(std::uint32_t{1} << c)] = 1;
          if (!all_witnesses) break;
        }
      }
    }
    for (int bit = 0; bit < k; ++bit) {
      for (std::uint32_t s = 0; s < n; ++s) {
        if (next[s]) next[s | (std::uint32_t{1} << bit)] = 1;
      }
    }
    if (next == d) return d;
    d = std::move(next);
  }
}

void ExpectMatchesLiteral(const Matroid& m, EpsilonWitness witness) {
  const std::vector<char> table =
      LiteralDependentTable(m, witness == EpsilonWitness::kAllCircuits);
  const CombinatorialDerived derived = CombinatorialDerivedMatroid(m, witness);
  const int k = static_cast<int>(derived.circuits.size());
  int rank = 0;
  for (std::uint32_t s = 0; s < table.size(); ++s) {
    const SubsetMask set(s);
    ASSERT_EQ(derived.dependent.Contains(set), table[s] != 0) << ToBitString(set, k);
    ASSERT_EQ(derived.matroid.IsIndependent(set), table[s] == 0) << ToBitString(set, k);
    if (!table[s]) rank = std::max(rank, std::popcount(s));
  }
  EXPECT_EQ(derived.matroid.rank(), rank);
}

TEST(CircuitVectorTest, Examples) {
  const Matroid a =
      Matroid::FromMatrix(FieldMatrix::FromRows(PrimeModulus(2), {{1, 0, 1}, {0, 1, 1}}));
  const CircuitVector c = ComputeCircuitVector(a, SubsetMask{0, 1, 2});
  EXPECT_EQ(c.vector[0], 1);
  EXPECT_EQ(c.vector[1], 1);
  EXPECT_EQ(c.vector[2], 1);

  const Matroid u24 = Matroid::FromMatrix(
      FieldMatrix::FromColumns(PrimeModulus(5), 2, {{1, 0}, {0, 1}, {1, 1}, {1, 2}}));
  const CircuitVector d = ComputeCircuitVector(u24, SubsetMask{0, 1, 2});
  EXPECT_EQ(d.vector[3], 0);
  EXPECT_NE(d.vector[0], 0);
  EXPECT_NE(d.vector[1], 0);
  EXPECT_NE(d.vector[2], 0);
  EXPECT_THROW(ComputeCircuitVector(u24, SubsetMask{0, 1}), std::invalid_argument);
}

TEST(CircuitVectorTest, SupportAndKernelOnFixtures) {
  for (const char* name : {"fano", "nonfano", "u:2,4:p=5", "u:3,5", "u:2,3+u:1,2", "pg:2,3"}) {
    const Matroid m = ResolveFixture(name);
    const int p = m.modulus()->value();
    for (SubsetMask circuit : Circuits(m)) {
      const CircuitVector c = ComputeCircuitVector(m, circuit);
      for (int e = 0; e < m.size(); ++e) EXPECT_EQ(c.vector[e] != 0, circuit.Contains(e));
      for (int r = 0; r < m.matrix().rows(); ++r) {
        long long sum = 0;
        for (int e = 0; e < m.size(); ++e) sum += m.matrix().at(r, e) * c.vector[e];
        EXPECT_EQ(sum % p, 0) << name;
      }
    }
  }
}

TEST(CircuitVectorDerivedTest, Examples) {
  const CircuitVectorMatroid u24 = CircuitVectorDerived(ResolveFixture("u:2,4:p=5"));
  EXPECT_EQ(u24.matroid.size(), 4);
  EXPECT_EQ(u24.matroid.rank(), 2);
  EXPECT_TRUE(AreIsomorphic(u24.matroid, ResolveFixture("u:2,4")));
  const CircuitVectorMatroid u12 = CircuitVectorDerived(ResolveFixture("u:1,2:p=3"));
  EXPECT_EQ(u12.matroid.size(), 1);
  EXPECT_EQ(u12.matroid.rank(), 1);
  const CircuitVectorMatroid fano = CircuitVectorDerived(ResolveFixture("fano"));
  EXPECT_EQ(fano.matroid.size(), 14);
  EXPECT_EQ(fano.matroid.rank(), 4);
  EXPECT_THROW(CircuitVectorDerived(ResolveFixture("u:2,2")), std::invalid_argument);
  EXPECT_THROW(CircuitVectorDerived(ResolveFixture("vamos")), std::invalid_argument);
}

TEST(CircuitVectorDerivedTest, RankIsCorankWhenConnected) {
  for (const char* name : {"fano", "nonfano", "u:2,5", "u:3,5", "u:3,6", "u:2,4"}) {
    const Matroid m = ResolveFixture(name);
    ASSERT_TRUE(IsConnected(m));
    EXPECT_EQ(CircuitVectorDerived(m).matroid.rank(), m.size() - m.rank()) << name;
  }
}

TEST(DualityTest, Examples) {
  for (const char* name : {"u:2,4:p=5", "u:1,2:p=3", "u:2,5", "u:3,5", "u:3,4"}) {
    const DualityReport r = VerifyDuality(ResolveFixture(name));
    EXPECT_TRUE(r.ok()) << name;
    EXPECT_EQ(r.subsets_checked, static_cast<long>(1) << r.circuit_count) << name;
  }
  const DualityReport u24 = VerifyDuality(ResolveFixture("u:2,4:p=5"));
  EXPECT_EQ(u24.circuit_count, 4);
  EXPECT_EQ(u24.identity_failures, 0);
  EXPECT_EQ(u24.isomorphic, true);
}

TEST(DualityTest, FanoExhaustive) {
  const DualityReport r = VerifyDuality(ResolveFixture("fano"));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.subsets_checked, 16384);
}

TEST(DualityTest, CircuitCap) {
  EXPECT_THROW(VerifyDuality(ResolveFixture("pg:2,3")), ResourceError);
}

TEST(CombinatorialDerivedTest, Examples) {
  const CombinatorialDerived u11 = CombinatorialDerivedMatroid(ResolveFixture("u:1,1"));
  EXPECT_EQ(u11.matroid.size(), 0);
  EXPECT_EQ(u11.matroid.rank(), 0);

  const Matroid u24 = ResolveFixture("u:2,4:p=5");
  const CombinatorialDerived d24 = CombinatorialDerivedMatroid(u24);
  EXPECT_EQ(d24.matroid.size(), 4);
  EXPECT_EQ(d24.matroid.rank(), 2);
  EXPECT_TRUE(AreIsomorphic(d24.matroid, ResolveFixture("u:2,4")));
  EXPECT_TRUE(AreIsomorphic(d24.matroid, Sigma(Dual(u24)).matroid));

  // The single circuit of U_{2,3} gives |D| = 1, not > 3 - 2: independent.
  const CombinatorialDerived d23 = CombinatorialDerivedMatroid(ResolveFixture("u:2,3"));
  EXPECT_EQ(d23.matroid.size(), 1);
  EXPECT_EQ(d23.matroid.rank(), 1);
  EXPECT_TRUE(d23.dependent.minimal.empty());
}

TEST(CombinatorialDerivedTest, VariantsAgreeOnSmallUniforms) {
  for (const char* name : {"u:2,3", "u:2,4", "u:3,5", "u:2,5", "u:1,3"}) {
    const Matroid m = ResolveFixture(name);
    const CombinatorialDerived all = CombinatorialDerivedMatroid(m, EpsilonWitness::kAllCircuits);
    const CombinatorialDerived low =
        CombinatorialDerivedMatroid(m, EpsilonWitness::kLowestCircuit);
    EXPECT_EQ(all.dependent.minimal, low.dependent.minimal) << name;
  }
}

TEST(CombinatorialDerivedTest, MatchesLiteralDefinition) {
  for (const char* name : {"u:2,3", "u:2,4", "u:3,5", "u:2,5", "u:1,3", "u:2,3+u:2,3",
                           "u:1,2+u:2,4", "u:3,4"}) {
    SCOPED_TRACE(name);
    ExpectMatchesLiteral(ResolveFixture(name), EpsilonWitness::kAllCircuits);
    ExpectMatchesLiteral(ResolveFixture(name), EpsilonWitness::kLowestCircuit);
  }
}

TEST(CombinatorialDerivedTest, MatchesLiteralDefinitionOnRandomMatroids) {
  std::mt19937_64 rng(71);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 25; ++trial) {
    const Matroid m = Matroid::FromMatrix(testing::RandomMatrix(rng, 2 + trial % 2, 3, 6));
    const int k = static_cast<int>(Circuits(m).size());
    if (k == 0 || k > 10) continue;
    ++checked;
    SCOPED_TRACE(m.matrix().DebugString());
    ExpectMatchesLiteral(m, EpsilonWitness::kAllCircuits);
  }
  EXPECT_GE(checked, 10);
}

TEST(CombinatorialDerivedTest, FamilyProperties) {
  for (const char* name : {"u:2,5", "u:3,5", "u:2,3+u:2,3", "u:3,4+u:1,2"}) {
    const CombinatorialDerived d = CombinatorialDerivedMatroid(ResolveFixture(name));
    const int k = static_cast<int>(d.circuits.size());
    const auto& minimal = d.dependent.minimal;
    for (SubsetMask a : minimal) {
      for (SubsetMask b : minimal) {
        if (a != b) EXPECT_NE(a & b, a) << name;
      }
    }
    // Circuits of the result are the minimal dependent members.
    std::vector<SubsetMask> circuits = Circuits(d.matroid);
    std::vector<SubsetMask> sorted = minimal;
    std::sort(circuits.begin(), circuits.end());
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(circuits, sorted) << name;
    for (std::uint64_t s = 0; s < testing::AllSubsets(k); ++s) {
      const SubsetMask set(s);
      if (!d.dependent.Contains(set)) continue;
      for (int i = 0; i < k; ++i) EXPECT_TRUE(d.dependent.Contains(set.With(i)));
    }
  }
}

TEST(CombinatorialDerivedTest, LowestWitnessOnFanoIsNotAMatroid) {
  EXPECT_THROW(CombinatorialDerivedMatroid(ResolveFixture("fano"), EpsilonWitness::kLowestCircuit),
               RefutationError);
}

TEST(CombinatorialDerivedTest, CircuitCap) {
  EXPECT_THROW(CombinatorialDerivedMatroid(ResolveFixture("u:2,7")), ResourceError);
}

TEST(FundamentalCircuitTest, Examples) {
  const Matroid u24 = ResolveFixture("u:2,4");
  EXPECT_EQ(FundamentalCircuit(u24, SubsetMask{0, 1}, 2), (SubsetMask{0, 1, 2}));
  EXPECT_THROW(FundamentalCircuit(u24, SubsetMask{0, 1}, 1), std::invalid_argument);
  EXPECT_EQ(FundamentalCocircuit(u24, SubsetMask{0, 1}, 1), (SubsetMask{1, 2, 3}));
  EXPECT_THROW(FundamentalCocircuit(u24, SubsetMask{0, 1}, 2), std::invalid_argument);

  const Matroid fano = ResolveFixture("fano");
  // Elements are named by coordinates; 001, 010, 011, 100 are 0, 1, 2, 3.
  ASSERT_EQ(fano.ElementName(3), "100");
  EXPECT_EQ(FundamentalCircuit(fano, SubsetMask{0, 1, 3}, 2), (SubsetMask{0, 1, 2}));
  const SubsetMask cocircuit = FundamentalCocircuit(fano, SubsetMask{0, 1, 3}, 3);
  EXPECT_EQ(cocircuit.size(), 4);
  EXPECT_EQ(cocircuit & (SubsetMask{0, 1, 2}), SubsetMask());
}

TEST(FundamentalCircuitTest, Properties) {
  for (const char* name : {"fano", "vamos", "u:3,6", "nonfano"}) {
    const Matroid m = ResolveFixture(name);
    const std::vector<SubsetMask> circuits = Circuits(m);
    const std::vector<SubsetMask> cocircuits = Cocircuits(m);
    for (SubsetMask basis : Bases(m)) {
      for (int e = 0; e < m.size(); ++e) {
        if (basis.Contains(e)) {
          const SubsetMask c = FundamentalCocircuit(m, basis, e);
          EXPECT_TRUE(c.Contains(e));
          EXPECT_EQ(c & basis, SubsetMask::Singleton(e));
          EXPECT_NE(std::find(cocircuits.begin(), cocircuits.end(), c), cocircuits.end());
        } else {
          const SubsetMask c = FundamentalCircuit(m, basis, e);
          EXPECT_TRUE(c.Contains(e));
          EXPECT_EQ(c - basis, SubsetMask::Singleton(e));
          EXPECT_NE(std::find(circuits.begin(), circuits.end(), c), circuits.end());
        }
      }
    }
  }
}

TEST(FundamentalCircuitTest, BasesOfDerivedMatroids) {
  for (const char* name : {"u:2,4", "fano", "u:3,5"}) {
    const Matroid m = ResolveFixture(name);
    const CircuitVectorMatroid derived = CircuitVectorDerived(m);
    for (SubsetMask basis : Bases(m)) {
      EXPECT_TRUE(CheckFundamentalCircuitBasis(derived, m, basis)) << name;
    }
  }
}

TEST(CocircuitBasisTest, Fixtures) {
  for (const char* name : {"fano", "u:2,4", "pg:2,3"}) {
    const Matroid m = ResolveFixture(name);
    const AdjointCertificate cert = SigmaCertificate(Sigma(m));
    for (SubsetMask basis : Bases(m)) EXPECT_TRUE(CheckCocircuitBasis(cert, basis)) << name;
  }
}

TEST(ConjectureHarnessTest, Records) {
  const ConjectureRecord u24 = RunConjectureHarness("u:2,4", ResolveFixture("u:2,4:p=5"));
  EXPECT_EQ(u24.size, 4);
  EXPECT_EQ(u24.rank, 2);
  EXPECT_EQ(u24.circuit_count, 4);
  EXPECT_EQ(u24.combinatorial_rank, 2);
  EXPECT_EQ(u24.circuit_vector_rank, 2);
  EXPECT_EQ(u24.rank_is_corank, true);
  EXPECT_EQ(u24.isomorphic_to_dual_adjoint, true);

  const ConjectureRecord vamos = RunConjectureHarness("vamos", ResolveFixture("vamos"));
  EXPECT_FALSE(vamos.circuit_vector_rank.has_value());
  EXPECT_FALSE(vamos.isomorphic_to_dual_adjoint.has_value());
}

}  // namespace
}  // namespace madj
