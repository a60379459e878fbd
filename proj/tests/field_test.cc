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

#include "madj/field.h"

#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "test_util.h"

namespace madj {
namespace {

TEST(PrimeModulusTest, RejectsNonPrimes) {
  EXPECT_THROW(PrimeModulus(1), std::invalid_argument);
  EXPECT_THROW(PrimeModulus(4), std::invalid_argument);
  EXPECT_THROW(PrimeModulus(253), std::invalid_argument);
  EXPECT_EQ(PrimeModulus(251).value(), 251);
}

TEST(InverseTest, SmallCases) {
  EXPECT_EQ(Inverse(3, PrimeModulus(7)), 5);
  EXPECT_EQ(Inverse(1, PrimeModulus(2)), 1);
  EXPECT_EQ(Inverse(-1, PrimeModulus(5)), 4);
  EXPECT_THROW(Inverse(0, PrimeModulus(5)), std::domain_error);
  EXPECT_THROW(Inverse(10, PrimeModulus(5)), std::domain_error);
}

TEST(InverseTest, EveryUnitOfEveryPrimeField) {
  for (int p : {2, 3, 5, 7, 11, 13, 101, 251}) {
    const PrimeModulus mod(p);
    for (int a = 1; a < p; ++a) EXPECT_EQ(mod.Mul(a, Inverse(a, mod)), 1) << p << " " << a;
  }
}

TEST(RrefTest, KnownMatrix) {
  // [1 2 3; 2 4 6] over GF(7) has rank 1 with pivot in column 0.
  const FieldMatrix a = FieldMatrix::FromRows(PrimeModulus(7), {{1, 2, 3}, {2, 4, 6}});
  const RrefResult r = Rref(a);
  EXPECT_EQ(r.rank, 1);
  EXPECT_EQ(r.pivots, std::vector<int>{0});
  EXPECT_EQ(r.reduced.at(0, 0), 1);
  EXPECT_EQ(r.reduced.at(1, 1), 0);
}

TEST(RrefTest, ZeroDimensions) {
  EXPECT_EQ(Rref(FieldMatrix(PrimeModulus(3), 0, 4)).rank, 0);
  EXPECT_EQ(Rref(FieldMatrix(PrimeModulus(3), 2, 0)).rank, 0);
  EXPECT_EQ(KernelBasis(FieldMatrix(PrimeModulus(3), 0, 2)).size(), 2u);
}

TEST(KernelBasisTest, CircuitExample) {
  // Columns (1,0), (0,1), (1,1) over GF(2): the kernel is spanned by (1,1,1).
  const FieldMatrix a = FieldMatrix::FromRows(PrimeModulus(2), {{1, 0, 1}, {0, 1, 1}});
  const std::vector<FieldVector> k = KernelBasis(a);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], FieldVector::FromInts(PrimeModulus(2), {1, 1, 1}));
}

TEST(KernelBasisTest, RandomMatricesSatisfyRankNullity) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int p = std::vector<int>{2, 3, 5, 7}[trial % 4];
    const FieldMatrix a = testing::RandomMatrix(rng, p, 1 + trial % 4, 1 + trial % 7);
    const std::vector<FieldVector> k = KernelBasis(a);
    EXPECT_EQ(static_cast<int>(k.size()), a.cols() - Rref(a).rank);
    for (const FieldVector& v : k) {
      EXPECT_TRUE(a.Apply(v).IsZero());
      EXPECT_EQ(v, v.ProjectivelyNormalized());
    }
    EXPECT_EQ(VectorRank(a.modulus(), k), static_cast<int>(k.size()));
  }
}

TEST(SubsetRankTest, AgreesWithSpanEnumeration) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int p = std::vector<int>{2, 3, 5}[trial % 3];
    const FieldMatrix a = testing::RandomMatrix(rng, p, 3, 6);
    for (std::uint64_t s = 0; s < testing::AllSubsets(6); ++s) {
      ASSERT_EQ(SubsetRank(a, SubsetMask(s)), testing::SpanRank(a, SubsetMask(s)))
          << a.DebugString() << " subset " << s;
    }
  }
}

TEST(EchelonBasisTest, ReportsGrowth) {
  const PrimeModulus p(3);
  EchelonBasis basis(p, 2);
  const std::vector<Residue> x{1, 2};
  const std::vector<Residue> twice_x{2, 1};
  const std::vector<Residue> y{0, 1};
  EXPECT_TRUE(basis.Insert(x));
  EXPECT_FALSE(basis.Insert(twice_x));
  EXPECT_TRUE(basis.Insert(y));
  EXPECT_EQ(basis.rank(), 2);
}

TEST(FieldMatrixTest, TransposeAndApply) {
  const PrimeModulus p(5);
  const FieldMatrix a = FieldMatrix::FromRows(p, {{1, 2, 3}, {4, 0, 1}});
  EXPECT_EQ(a.Transposed().Transposed(), a);
  const FieldVector v = FieldVector::FromInts(p, {1, 1, 1});
  EXPECT_EQ(a.Apply(v), FieldVector::FromInts(p, {6, 5}));
  EXPECT_EQ(a.LeftApply(FieldVector::FromInts(p, {1, 1})), FieldVector::FromInts(p, {5, 2, 4}));
}

}  // namespace
}  // namespace madj
