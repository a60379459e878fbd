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

// Acceptance run: one PASS/FAIL line per criterion with its wall time and
// time limit. Exits 1 if any criterion fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "madj/adjoint.h"
#include "madj/catalogue.h"
#include "madj/derived.h"
#include "madj/errors.h"
#include "madj/extension.h"
#include "madj/iso.h"
#include "madj/lattice.h"
#include "madj/matroid.h"
#include "test_util.h"

namespace madj {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  // Records a sub-check; the first failure message wins the detail slot.
  void Check(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = "failed: " + what;
      pass = false;
    }
  }
};

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Criterion {
  int number;
  std::string title;
  double limit_ms;  // 0: untimed
  std::function<Outcome()> run;
};

bool RunCriterion(const Criterion& c) {
  const Clock::time_point start = Clock::now();
  Outcome outcome;
  try {
    outcome = c.run();
  } catch (const std::exception& e) {
    outcome.pass = false;
    outcome.detail = std::string("exception: ") + e.what();
  }
  const double ms = MillisSince(start);
  if (c.limit_ms > 0 && ms > c.limit_ms) {
    if (outcome.pass) outcome.detail = "over the time limit";
    outcome.pass = false;
  }
  char timing[96];
  if (c.limit_ms > 0) {
    std::snprintf(timing, sizeof timing, "%.1f ms, limit %.0f ms", ms, c.limit_ms);
  } else {
    std::snprintf(timing, sizeof timing, "%.1f ms, untimed", ms);
  }
  std::printf("%s %2d %s [%s]%s%s\n", outcome.pass ? "PASS" : "FAIL", c.number, c.title.c_str(),
              timing, outcome.detail.empty() ? "" : " ", outcome.detail.c_str());
  std::fflush(stdout);
  return outcome.pass;
}

// Per-fixture timing inside one criterion.
template <typename Fn>
double Timed(Fn&& fn) {
  const Clock::time_point start = Clock::now();
  fn();
  return MillisSince(start);
}

// Rank-2 simple matroid with every pair independent: U_{2,m}.
bool IsRankTwoUniform(const Matroid& m, int size) {
  if (m.size() != size || m.rank() != 2) return false;
  for (int a = 0; a < size; ++a) {
    for (int b = a + 1; b < size; ++b) {
      if (m.Rank(SubsetMask{a, b}) != 2) return false;
    }
  }
  return true;
}

Outcome ProjectiveFixedPoints() {
  Outcome out;
  std::ostringstream times;
  for (const char* name : {"pg:2,2", "pg:2,3", "pg:3,2"}) {
    const double ms = Timed([&] {
      const Matroid m = ResolveFixture(name);
      const SigmaResult sigma = Sigma(m);
      const AdjointCertificate cert = SigmaCertificate(sigma);
      out.Check(cert.ok(), std::string(name) + " certificate");
      AdjointMap::Build(cert);
      const auto iso = MatroidIso(sigma.matroid, m);
      out.Check(iso.has_value(), std::string(name) + " sigma not isomorphic");
    });
    out.Check(ms < 5000, std::string(name) + " over 5000 ms");
    times << (times.tellp() > 0 ? ", " : "") << name << " " << static_cast<int>(ms) << " ms";
  }
  if (out.pass) out.detail = times.str();
  return out;
}

Outcome RankTwoStability() {
  Outcome out;
  Matroid current = ResolveFixture("u:2,5:p=7");
  for (int k = 1; k <= 4; ++k) {
    const SigmaResult sigma = Sigma(current);
    out.Check(SigmaCertificate(sigma).ok(), "certificate at step " + std::to_string(k));
    current = sigma.matroid;
    out.Check(IsRankTwoUniform(current, 5), "iterate " + std::to_string(k) + " is not U_{2,5}");
    out.Check(AreIsomorphic(current, ResolveFixture("u:2,5:p=7")),
              "iso search disagrees at step " + std::to_string(k));
  }
  return out;
}

Outcome SaturationToProjectivePlane() {
  Outcome out;
  const SequenceReport r = SigmaSequence(ResolveFixture("uniform:3,4:p=3"));
  std::vector<int> sizes;
  for (const IterateSummary& it : r.iterates) sizes.push_back(it.size);
  std::ostringstream seq;
  for (size_t i = 0; i < sizes.size(); ++i) seq << (i ? "->" : "") << sizes[i];
  out.Check(r.verdict == SequenceReport::Verdict::kStabilized, "verdict " + r.VerdictString());
  out.Check(sizes.size() >= 2 && sizes.front() == 4 && sizes.back() == 13 &&
                sizes[sizes.size() - 2] == 13,
            "sizes " + seq.str());
  for (size_t i = 1; i + 1 < sizes.size(); ++i) {
    out.Check(sizes[i] > sizes[i - 1], "sizes not strictly increasing: " + seq.str());
  }
  const IterateSummary& last = r.iterates.back();
  out.Check(last.projective && last.projective->Name() == "PG(2,3)", "last iterate not PG(2,3)");
  // Re-run the iteration and compare with the catalogue plane directly.
  Matroid current = ResolveFixture("uniform:3,4:p=3");
  for (int k = 0; k < r.index; ++k) current = Sigma(current).matroid;
  out.Check(AreIsomorphic(current, ResolveFixture("pg:2,3")), "iterate is not PG(2,3)");
  out.Check(AreIsomorphic(Sigma(current).matroid, current), "PG(2,3) iterate not fixed");
  if (out.pass) out.detail = seq.str() + " " + r.VerdictString();
  return out;
}

Outcome Duality() {
  Outcome out;
  std::ostringstream times;
  for (const char* name : {"u:2,4:p=5", "u:1,2:p=3", "fano"}) {
    DualityReport r;
    const double ms = Timed([&] { r = VerifyDuality(ResolveFixture(name)); });
    out.Check(r.ok(), std::string(name) + " duality");
    out.Check(r.subsets_checked == (long{1} << r.circuit_count),
              std::string(name) + " not exhaustive");
    if (std::string(name) == "fano") out.Check(ms < 30000, "fano over 30000 ms");
    times << (times.tellp() > 0 ? ", " : "") << name << " 2^" << r.circuit_count << " subsets "
          << static_cast<int>(ms) << " ms";
  }
  if (out.pass) out.detail = times.str();
  return out;
}

Outcome ExtensionLatticeOfFano() {
  Outcome out;
  const Matroid fano = ResolveFixture("fano");
  const ExtensionLattice e = ExtensionLattice::Build(fano);
  out.Check(e.size() == 16, "Fano has " + std::to_string(e.size()) + " linear subclasses");
  const LambdaReport r = LambdaMap(fano);
  out.Check(r.ok(), "lambda is not an order isomorphism");
  // The opposite lattice and the extension lattice are isomorphic as orders.
  const OppositeLattice op = Opposite(FlatLattice::Build(fano));
  out.Check(LatticeIso(op.order(), e.order()).has_value(), "no order isomorphism found");
  const LambdaReport u34 = CompareLambda(ResolveFixture("u:3,4"));
  out.Check(!u34.surjective, "lambda onto for U_{3,4}");
  if (out.pass) {
    out.detail = "16 subclasses; U_{3,4}: " + std::to_string(u34.missing.size()) +
                 " subclasses outside the image";
  }
  return out;
}

Outcome GreeneCrossCheck() {
  Outcome out;
  int disagreements = 0;
  int fixtures = 0;
  for (const char* name : {"fano", "pg:2,3", "pg:3,2", "u:2,3", "u:2,4", "u:2,5", "u:2,6",
                           "u:3,4", "u:3,6", "fano+u:2,3"}) {
    const Matroid m = ResolveFixture(name);
    ++fixtures;
    try {
      const ModularityReport r = IsModular(m);
      const bool greene = Hyperplanes(m).size() == static_cast<size_t>(m.size());
      if (r.modular != greene) ++disagreements;
    } catch (const InternalError&) {
      ++disagreements;
    }
  }
  out.Check(disagreements == 0, std::to_string(disagreements) + " disagreements");
  if (out.pass) out.detail = std::to_string(fixtures) + " fixtures, 0 disagreements";
  return out;
}

Outcome Connectivity() {
  Outcome out;
  const Matroid u23 = ResolveFixture("u:2,3");
  const AdjointCertificate c = SigmaCertificate(Sigma(u23));
  out.Check(c.ok(), "U_{2,3} certificate");
  const AdjointCertificate sum = ComposeDirectSumAdjoint(c, c);
  out.Check(sum.ok(), "composed certificate");
  const std::vector<SubsetMask> blocks = Components(sum.candidate());
  out.Check(blocks.size() == 2, std::to_string(blocks.size()) + " components");
  // Each block carries exactly the hyperplanes H + E2 or E1 + H of one summand.
  const int m1 = u23.size();
  for (SubsetMask block : blocks) {
    int first = 0;
    int second = 0;
    for (int n : block.Elements()) {
      const SubsetMask h = sum.hyperplanes()[sum.labeling()[n]].mask;
      const SubsetMask e1 = SubsetMask::Full(m1);
      if ((h & e1) != e1) ++first;
      if ((h & e1) == e1) ++second;
    }
    out.Check(first == 0 || second == 0, "block mixes summands");
  }
  for (const char* name : {"fano", "nonfano", "pg:2,3", "pg:3,2", "u:2,3", "u:2,5", "u:3,4",
                           "u:3,5", "u:3,6"}) {
    const Matroid m = ResolveFixture(name);
    if (!IsConnected(m)) continue;
    out.Check(IsConnected(Sigma(m).matroid), std::string("sigma of ") + name + " disconnected");
  }
  return out;
}

Outcome FundamentalBases() {
  Outcome out;
  const Matroid fano = ResolveFixture("fano");
  const AdjointCertificate cert = SigmaCertificate(Sigma(fano));
  const std::vector<SubsetMask> bases = Bases(fano);
  out.Check(bases.size() == 28, std::to_string(bases.size()) + " Fano bases");
  int hyperplane_ok = 0;
  int cocircuit_ok = 0;
  for (SubsetMask b : bases) {
    hyperplane_ok += CheckFundamentalBasis(cert, b);
    cocircuit_ok += CheckCocircuitBasis(cert, b);
  }
  out.Check(hyperplane_ok == 28, std::to_string(hyperplane_ok) + "/28 hyperplane bases");
  out.Check(cocircuit_ok == 28, std::to_string(cocircuit_ok) + "/28 cocircuit bases");
  const Matroid u24 = ResolveFixture("u:2,4:p=5");
  const CircuitVectorMatroid derived = CircuitVectorDerived(u24);
  int circuit_ok = 0;
  const std::vector<SubsetMask> u24_bases = Bases(u24);
  for (SubsetMask b : u24_bases) circuit_ok += CheckFundamentalCircuitBasis(derived, u24, b);
  out.Check(circuit_ok == static_cast<int>(u24_bases.size()), "fundamental circuit bases");
  if (out.pass) {
    out.detail = "28/28, 28/28, " + std::to_string(circuit_ok) + "/" +
                 std::to_string(u24_bases.size());
  }
  return out;
}

Outcome Embedding() {
  Outcome out;
  for (const char* name : {"fano", "uniform:3,4:p=3"}) {
    const Matroid m = ResolveFixture(name);
    const EmbeddingReport r = CheckSecondAdjointEmbedding(m);
    out.Check(r.independence_failures == 0, std::string(name) + " independence");
    out.Check(r.subsets_checked == static_cast<long>(testing::AllSubsets(m.size())),
              std::string(name) + " not exhaustive");
  }
  return out;
}

// Independence axioms over every pair of subsets of a small ground set.
bool SatisfiesIndependenceAxioms(const Matroid& m) {
  const std::uint64_t n = testing::AllSubsets(m.size());
  if (!m.IsIndependent(SubsetMask())) return false;
  for (std::uint64_t a = 0; a < n; ++a) {
    const SubsetMask sa(a);
    if (!m.IsIndependent(sa)) continue;
    for (int e : sa.Elements()) {
      if (!m.IsIndependent(sa.Without(e))) return false;
    }
    for (std::uint64_t b = 0; b < n; ++b) {
      const SubsetMask sb(b);
      if (!m.IsIndependent(sb) || sb.size() <= sa.size()) continue;
      bool augments = false;
      for (int e : (sb - sa).Elements()) augments |= m.IsIndependent(sa.With(e));
      if (!augments) return false;
    }
  }
  return true;
}

Outcome CombinatorialDerivedChecks() {
  Outcome out;
  std::ostringstream notes;
  const Matroid u24 = ResolveFixture("u:2,4:p=5");
  const CombinatorialDerived d24 = CombinatorialDerivedMatroid(u24);
  out.Check(SatisfiesIndependenceAxioms(d24.matroid), "U_{2,4} axioms");
  out.Check(d24.matroid.rank() == 2 && u24.size() - u24.rank() == 2, "U_{2,4} rank");
  out.Check(AreIsomorphic(d24.matroid, Sigma(Dual(u24)).matroid), "U_{2,4} vs sigma of dual");

  const CombinatorialDerived d23 = CombinatorialDerivedMatroid(ResolveFixture("u:2,3"));
  notes << "delta(U_{2,3}) has " << d23.matroid.size() << " label(s) and rank "
        << d23.matroid.rank();
  out.Check(d23.matroid.size() == 1 && d23.matroid.rank() == 0,
            "expected rank 0 on one label for U_{2,3}; " + notes.str() +
                " (its one circuit D={C} has |D|=1, not > |C|-r(C)=1, so {C} is independent)");

  for (const char* name : {"u:2,4", "u:2,3"}) {
    const Matroid m = ResolveFixture(name);
    const auto all = CombinatorialDerivedMatroid(m, EpsilonWitness::kAllCircuits);
    const auto low = CombinatorialDerivedMatroid(m, EpsilonWitness::kLowestCircuit);
    out.Check(all.dependent.minimal == low.dependent.minimal,
              std::string("epsilon variants differ on ") + name);
  }
  if (out.pass) out.detail = notes.str();
  return out;
}

// Rank, closure and circuit axioms on one matroid, with the rank function
// compared against span enumeration.
std::string AxiomViolation(const Matroid& m) {
  const int size = m.size();
  const std::uint64_t n = testing::AllSubsets(size);
  std::vector<int> rank(n);
  for (std::uint64_t s = 0; s < n; ++s) {
    rank[s] = m.Rank(SubsetMask(s));
    if (rank[s] != testing::SpanRank(m.matrix(), SubsetMask(s))) return "rank vs span";
  }
  for (std::uint64_t s = 0; s < n; ++s) {
    if (rank[s] < 0 || rank[s] > std::popcount(s)) return "rank bound";
    for (int e = 0; e < size; ++e) {
      const std::uint64_t t = s | (std::uint64_t{1} << e);
      if (rank[t] < rank[s] || rank[t] > rank[s] + 1) return "unit increase";
    }
    for (std::uint64_t t = 0; t < n; ++t) {
      if (rank[s | t] + rank[s & t] > rank[s] + rank[t]) return "submodularity";
    }
    const SubsetMask cl = Closure(m, SubsetMask(s)).mask;
    if ((cl & SubsetMask(s)) != SubsetMask(s)) return "closure extensive";
    if (Closure(m, cl).mask != cl) return "closure idempotent";
    if (rank[cl.bits()] != rank[s]) return "closure rank";
    for (int e = 0; e < size; ++e) {
      const SubsetMask up = Closure(m, SubsetMask(s).With(e)).mask;
      if ((up & cl) != cl) return "closure monotone";
      for (int f : (up - cl).Elements()) {
        if (f == e) continue;
        if (!Closure(m, SubsetMask(s).With(f)).mask.Contains(e)) return "closure exchange";
      }
    }
  }
  const std::vector<SubsetMask> circuits = Circuits(m);
  for (SubsetMask c : circuits) {
    if (rank[c.bits()] != c.size() - 1) return "circuit rank";
    for (int e : c.Elements()) {
      if (rank[c.Without(e).bits()] != c.size() - 1) return "circuit minimality";
    }
  }
  for (size_t i = 0; i < circuits.size(); ++i) {
    for (size_t j = i + 1; j < circuits.size(); ++j) {
      for (int e : (circuits[i] & circuits[j]).Elements()) {
        const SubsetMask rest = (circuits[i] | circuits[j]).Without(e);
        bool found = false;
        for (SubsetMask c : circuits) found |= (c & rest) == c;
        if (!found) return "circuit elimination";
      }
    }
  }
  return "";
}

Outcome AxiomSuites() {
  Outcome out;
  std::mt19937_64 rng(0xacce);
  const int primes[] = {2, 3, 5};
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int p = primes[trial % 3];
    const int size = 1 + static_cast<int>(rng() % 9);
    const int rows = 1 + static_cast<int>(rng() % 4);
    const Matroid m = Matroid::FromMatrix(testing::RandomMatrix(rng, p, rows, size));
    const std::string violation = AxiomViolation(m);
    out.Check(violation.empty(), violation + " on trial " + std::to_string(trial));
    ++checked;
  }
  if (out.pass) out.detail = std::to_string(checked) + " matroids, 0 violations";
  return out;
}

int Main() {
  const std::vector<Criterion> criteria = {
      {1, "sigma fixes PG(2,2), PG(2,3), PG(3,2), 5 s each", 15000, ProjectiveFixedPoints},
      {2, "sigma^k U_{2,5}/GF(7) = U_{2,5}, k=1..4", 1000, RankTwoStability},
      {3, "sigma sequence of U_{3,4}/GF(3) saturates at PG(2,3)", 10000,
       SaturationToProjectivePlane},
      {4, "circuit vectors vs adjoint of the dual, exhaustive, Fano in 30 s", 0, Duality},
      {5, "extension lattice of Fano", 1000, ExtensionLatticeOfFano},
      {6, "pairwise modularity vs |H| = |E|", 0, GreeneCrossCheck},
      {7, "connectivity of composed and sigma adjoints", 0, Connectivity},
      {8, "fundamental hyperplane, cocircuit and circuit bases", 0, FundamentalBases},
      {9, "embedding into the second adjoint", 10000, Embedding},
      {10, "combinatorial derived matroid", 0, CombinatorialDerivedChecks},
      {11, "axiom suites on 200 random matroids", 60000, AxiomSuites},
  };
  int failed = 0;
  for (const Criterion& c : criteria) failed += !RunCriterion(c);
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace madj

int main() { return madj::Main(); }
