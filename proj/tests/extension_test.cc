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
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "madj/catalogue.h"
#include "madj/errors.h"

namespace madj {
namespace {

// Linear subclasses via modular cuts: up-closed families of flats that
// contain the meet of every modular pair in them. The hyperplanes of a
// modular cut form a linear subclass and every subclass arises once.
std::set<SubsetMask> SubclassesFromModularCuts(const Matroid& m) {
  const std::vector<Flat> flats = AllFlats(m);
  const std::vector<Flat> hyperplanes = Hyperplanes(m);
  const int n = static_cast<int>(flats.size());
  std::set<SubsetMask> result;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    auto in = [&](int i) { return (bits >> i & 1) != 0; };
    bool cut = true;
    for (int i = 0; cut && i < n; ++i) {
      if (!in(i)) continue;
      for (int j = 0; cut && j < n; ++j) {
        const SubsetMask x = flats[i].mask;
        const SubsetMask y = flats[j].mask;
        if ((x & y) == x && !in(j)) cut = false;  // up-closed
        if (!cut || !in(j)) continue;
        const int join_rank = m.Rank(x | y);
        const int meet_rank = m.Rank(x & y);
        if (join_rank + meet_rank == flats[i].rank + flats[j].rank) {
          const auto meet = std::find_if(flats.begin(), flats.end(),
                                         [&](const Flat& f) { return f.mask == (x & y); });
          if (!in(static_cast<int>(meet - flats.begin()))) cut = false;
        }
      }
    }
    if (!cut) continue;
    SubsetMask members;
    for (size_t h = 0; h < hyperplanes.size(); ++h) {
      for (int i = 0; i < n; ++i) {
        if (in(i) && flats[i].mask == hyperplanes[h].mask) {
          members = members.With(static_cast<int>(h));
        }
      }
    }
    result.insert(members);
  }
  return result;
}

TEST(LinearSubclassTest, FanoExamples) {
  const Matroid fano = ResolveFixture("fano");
  const std::vector<Flat> hyperplanes = Hyperplanes(fano);
  EXPECT_TRUE(IsLinearSubclass(fano, SubsetMask()).linear);
  EXPECT_TRUE(IsLinearSubclass(fano, SubsetMask::Full(7)).linear);
  const SubsetMask through0 = HyperplanesThrough(hyperplanes, SubsetMask{0});
  EXPECT_EQ(through0.size(), 3);
  EXPECT_TRUE(IsLinearSubclass(fano, through0).linear);

  const std::vector<int> lines = through0.Elements();
  const SubclassCheck partial = IsLinearSubclass(fano, SubsetMask{lines[0], lines[1]});
  EXPECT_FALSE(partial.linear);
  ASSERT_TRUE(partial.witness.has_value());
  EXPECT_EQ((*partial.witness)[2], lines[2]);
  // The witness is a genuine violation.
  const SubsetMask meet =
      hyperplanes[(*partial.witness)[0]].mask & hyperplanes[(*partial.witness)[1]].mask;
  EXPECT_EQ(fano.Rank(meet), 1);
  EXPECT_EQ(hyperplanes[(*partial.witness)[2]].mask & meet, meet);
}

TEST(ExtensionLatticeTest, Counts) {
  EXPECT_EQ(ExtensionLattice::Build(ResolveFixture("fano")).size(), 16);
  EXPECT_EQ(ExtensionLattice::Build(ResolveFixture("u:2,4")).size(), 6);
  EXPECT_EQ(ExtensionLattice::Build(ResolveFixture("u:1,1")).size(), 2);
  EXPECT_EQ(ExtensionLattice::Build(ResolveFixture("u:3,4")).size(), 15);
}

TEST(ExtensionLatticeTest, AgreesWithModularCuts) {
  for (const char* name : {"fano", "u:2,4", "u:3,4", "u:2,3+u:1,1", "u:3,5", "nonfano"}) {
    const Matroid m = ResolveFixture(name);
    const ExtensionLattice e = ExtensionLattice::Build(m);
    const std::set<SubsetMask> expected = SubclassesFromModularCuts(m);
    EXPECT_EQ(std::set<SubsetMask>(e.subclasses().begin(), e.subclasses().end()), expected)
        << name;
  }
}

TEST(ExtensionLatticeTest, ClosedUnderIntersection) {
  for (const char* name : {"fano", "u:3,4", "nonfano"}) {
    const ExtensionLattice e = ExtensionLattice::Build(ResolveFixture(name));
    EXPECT_GE(e.IndexOf(SubsetMask()), 0);
    EXPECT_GE(e.IndexOf(SubsetMask::Full(static_cast<int>(e.hyperplanes().size()))), 0);
    for (SubsetMask a : e.subclasses()) {
      for (SubsetMask b : e.subclasses()) {
        const int meet = e.IndexOf(a & b);
        ASSERT_GE(meet, 0) << name;
        EXPECT_EQ(e.order().Meet(e.IndexOf(a), e.IndexOf(b)), meet);
      }
    }
    EXPECT_EQ(e.Labels().size(), e.subclasses().size());
  }
}

TEST(ExtensionLatticeTest, HyperplaneCap) {
  EXPECT_THROW(ExtensionLattice::Build(ResolveFixture("u:2,14")), ResourceError);
  EXPECT_NO_THROW(ExtensionLattice::Build(ResolveFixture("pg:2,3")));
}

TEST(LambdaTest, Fano) {
  const LambdaReport r = LambdaMap(ResolveFixture("fano"));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.flat_count, 16);
  EXPECT_EQ(r.subclass_count, 16);
  EXPECT_TRUE(r.missing.empty());
  EXPECT_EQ(r.images.front(), SubsetMask::Full(7));
  EXPECT_EQ(r.images.back(), SubsetMask());
}

TEST(LambdaTest, RankTwoUniform) {
  for (int m = 3; m <= 6; ++m) {
    const LambdaReport r = LambdaMap(ResolveFixture("u:2," + std::to_string(m)));
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.subclass_count, m + 2);
  }
}

TEST(LambdaTest, ProjectivePlaneOverThree) {
  const LambdaReport r = LambdaMap(ResolveFixture("pg:2,3"));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.subclass_count, 1 + 13 + 13 + 1);
}

TEST(LambdaTest, NonModularContrast) {
  const Matroid u34 = ResolveFixture("u:3,4");
  EXPECT_THROW(LambdaMap(u34), std::invalid_argument);
  const LambdaReport r = CompareLambda(u34);
  EXPECT_TRUE(r.well_defined);
  EXPECT_TRUE(r.injective);
  EXPECT_FALSE(r.surjective);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.missing.size(), 3u);
  // Each missing subclass is a pair of disjoint lines {a,b} and {c,d}.
  const std::vector<Flat> hyperplanes = Hyperplanes(u34);
  for (SubsetMask missing : r.missing) {
    ASSERT_EQ(missing.size(), 2);
    const std::vector<int> pair = missing.Elements();
    EXPECT_EQ(hyperplanes[pair[0]].mask & hyperplanes[pair[1]].mask, SubsetMask());
  }
}

TEST(LambdaTest, ImagesAreSubclassesEverywhere) {
  for (const char* name : {"u:3,5", "nonfano", "u:3,4+u:1,1", "u:2,3+u:2,3"}) {
    const LambdaReport r = CompareLambda(ResolveFixture(name));
    EXPECT_TRUE(r.well_defined) << name;
    EXPECT_TRUE(r.injective) << name;
  }
}

}  // namespace
}  // namespace madj
