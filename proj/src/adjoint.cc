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

#include "madj/adjoint.h"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "madj/errors.h"
#include "madj/lattice.h"

namespace madj {
namespace {

constexpr long kMaxChainStates = 2'000'000;

// Index of `mask` in a mask-sorted list of flats, or -1.
int FindFlat(const std::vector<Flat>& sorted, SubsetMask mask) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), mask,
                             [](const Flat& f, SubsetMask s) { return f.mask < s; });
  if (it == sorted.end() || it->mask != mask) return -1;
  return static_cast<int>(it - sorted.begin());
}

SubsetMask Shifted(SubsetMask s, int offset) { return SubsetMask(s.bits() << offset); }

// rows == rank, as the normal-vector construction needs.
FieldMatrix FullRowRank(const FieldMatrix& a) {
  RrefResult rref = Rref(a);
  if (rref.rank == a.rows()) return a;
  std::vector<int> rows(rref.rank);
  for (int i = 0; i < rref.rank; ++i) rows[i] = i;
  return rref.reduced.SelectRows(rows);
}

}  // namespace

bool AdjointCertificate::ok() const {
  return rank_equal_ &&
         std::all_of(element_ok_.begin(), element_ok_.end(), [](bool b) { return b; });
}

int AdjointCertificate::failing_element() const {
  for (size_t e = 0; e < element_ok_.size(); ++e) {
    if (!element_ok_[e]) return static_cast<int>(e);
  }
  return -1;
}

std::string AdjointCertificate::failure() const {
  if (!rank_equal_) {
    return "candidate has rank " + std::to_string(candidate_.rank()) + ", base has rank " +
           std::to_string(base_.rank());
  }
  const int e = failing_element();
  if (e < 0) return "";
  const SubsetMask house = House(e);
  return "hyperplanes through element " + base_.ElementName(e) + " label " +
         ToElementList(house) + ", which is not a hyperplane of the candidate (rank " +
         std::to_string(candidate_.Rank(house)) + ")";
}

SubsetMask AdjointCertificate::House(int e) const { return ImageOf(SubsetMask::Singleton(e)); }

SubsetMask AdjointCertificate::ImageOf(SubsetMask flat) const {
  SubsetMask out;
  for (size_t h = 0; h < hyperplanes_.size(); ++h) {
    if (flat.IsSubsetOf(hyperplanes_[h].mask)) out = out.With(element_of_[h]);
  }
  return out;
}

AdjointCertificate VerifyAdjoint(const Matroid& m, const Matroid& n,
                                 const std::vector<int>& labeling) {
  if (!m.loops().empty()) {
    throw std::invalid_argument("base matroid has loops " + ToElementList(m.loops()));
  }
  AdjointCertificate cert(m, n);
  cert.hyperplanes_ = Hyperplanes(m);
  const int h = static_cast<int>(cert.hyperplanes_.size());
  if (static_cast<int>(labeling.size()) != n.size() || n.size() != h) {
    throw std::invalid_argument("labeling is not a bijection: candidate has " +
                                std::to_string(n.size()) + " elements, base has " +
                                std::to_string(h) + " hyperplanes");
  }
  cert.element_of_.assign(h, -1);
  for (int i = 0; i < n.size(); ++i) {
    const int label = labeling[i];
    if (label < 0 || label >= h || cert.element_of_[label] >= 0) {
      throw std::invalid_argument("labeling is not a bijection at candidate element " +
                                  std::to_string(i));
    }
    cert.element_of_[label] = i;
  }
  cert.labeling_ = labeling;
  cert.rank_equal_ = n.rank() == m.rank();
  cert.element_ok_.assign(m.size(), false);
  for (int e = 0; e < m.size(); ++e) {
    const SubsetMask house = cert.House(e);
    cert.element_ok_[e] = n.Rank(house) == m.rank() - 1 && IsFlat(n, house);
  }
  return cert;
}

AdjointMap AdjointMap::Build(const AdjointCertificate& cert) {
  if (!cert.ok()) throw std::invalid_argument("invalid certificate: " + cert.failure());
  const Matroid& m = cert.base();
  const Matroid& n = cert.candidate();
  const int r = m.rank();
  AdjointMap map;
  map.flats_ = AllFlats(m);
  const int count = static_cast<int>(map.flats_.size());

  auto refute = [&](const std::string& what, SubsetMask x, SubsetMask y) {
    throw RefutationError("adjoint map fails: " + what,
                          "X=" + ToElementList(x) + " Y=" + ToElementList(y));
  };

  std::set<SubsetMask> seen;
  for (const Flat& x : map.flats_) {
    const SubsetMask image = cert.ImageOf(x.mask);
    const int rank = n.Rank(image);
    if (!IsFlat(n, image)) refute("image is not a flat", x.mask, x.mask);
    if (rank != r - x.rank) refute("rank is not complementary", x.mask, x.mask);
    if (!seen.insert(image).second) refute("not injective", x.mask, x.mask);
    map.images_.push_back(Flat{image, rank});
  }

  for (int i = 0; i < count; ++i) {
    const Flat& x = map.flats_[i];
    const Flat& px = map.images_[i];
    for (int j = 0; j < count; ++j) {
      if (i == j) continue;
      const Flat& y = map.flats_[j];
      const Flat& py = map.images_[j];
      if (x.mask.IsSubsetOf(y.mask)) {
        if (!py.mask.IsSubsetOf(px.mask)) refute("not order-reversing", x.mask, y.mask);
        if (y.rank == x.rank + 1 && py.rank + 1 != px.rank) {
          refute("cover not reversed", x.mask, y.mask);
        }
      }
      if (j < i) continue;
      const SubsetMask join = Closure(m, x.mask | y.mask).mask;
      const SubsetMask meet_image = px.mask & py.mask;
      if (meet_image != cert.ImageOf(join)) refute("meet of images is not image of join",
                                                   x.mask, y.mask);
      if (px.rank + py.rank != n.Rank(meet_image) + n.Rank(px.mask | py.mask)) {
        refute("image pair is not modular", x.mask, y.mask);
      }
    }
  }

  // Labels along strictly decreasing hyperplane-intersection chains are
  // independent. States are keyed by label set: the property does not
  // depend on the order that produced it.
  const std::vector<Flat>& hyperplanes = cert.hyperplanes();
  std::unordered_set<std::uint64_t> visited;
  std::vector<std::pair<SubsetMask, SubsetMask>> stack;  // (intersection, labels)
  for (size_t h = 0; h < hyperplanes.size(); ++h) {
    stack.emplace_back(hyperplanes[h].mask,
                       SubsetMask::Singleton(cert.element_of_hyperplane()[h]));
  }
  while (!stack.empty()) {
    auto [meet, labels] = stack.back();
    stack.pop_back();
    if (!visited.insert(labels.bits()).second) continue;
    if (static_cast<long>(visited.size()) > kMaxChainStates) {
      throw ResourceError("hyperplane chain enumeration exceeds " +
                          std::to_string(kMaxChainStates) + " states");
    }
    if (!n.IsIndependent(labels)) {
      throw RefutationError("adjoint map fails: chain labels are dependent",
                            "labels=" + ToElementList(labels));
    }
    for (size_t h = 0; h < hyperplanes.size(); ++h) {
      const SubsetMask next = meet & hyperplanes[h].mask;
      if (next == meet) continue;
      stack.emplace_back(next, labels.With(cert.element_of_hyperplane()[h]));
    }
  }
  map.chains_checked_ = static_cast<long>(visited.size());
  return map;
}

Flat AdjointMap::Image(SubsetMask flat) const {
  for (size_t i = 0; i < flats_.size(); ++i) {
    if (flats_[i].mask == flat) return images_[i];
  }
  throw std::invalid_argument(ToElementList(flat) + " is not a flat");
}

Flat FundamentalHyperplane(const Matroid& m, SubsetMask basis, int e) {
  if (!m.IsBasis(basis)) throw std::invalid_argument(ToElementList(basis) + " is not a basis");
  if (!basis.Contains(e)) {
    throw std::invalid_argument("element " + std::to_string(e) + " is not in the basis");
  }
  return Closure(m, basis.Without(e));
}

bool CheckFundamentalBasis(const AdjointCertificate& cert, SubsetMask basis) {
  SubsetMask labels;
  for (int e : basis.Elements()) {
    const Flat h = FundamentalHyperplane(cert.base(), basis, e);
    const int index = FindFlat(cert.hyperplanes(), h.mask);
    if (index < 0) throw InternalError("fundamental hyperplane missing from hyperplane list");
    labels = labels.With(cert.element_of_hyperplane()[index]);
  }
  return labels.size() == basis.size() && cert.candidate().IsBasis(labels);
}

SigmaResult Sigma(const Matroid& m) {
  if (!m.is_linear()) throw std::invalid_argument("sigma needs a represented matroid");
  SigmaResult result{m, m, {}, {}, std::nullopt, std::nullopt};
  if (!IsSimple(m)) {
    Simplification s = Simplify(m);
    result.base = s.matroid;
    result.simplification = s.element_map;
    result.warning =
        "input has loops or parallel elements; using its simplification, which has the same "
        "adjoints";
  }
  const Matroid& base = result.base;
  const FieldMatrix a = FullRowRank(base.matrix());
  const PrimeModulus p = a.modulus();
  const int r = a.rows();
  result.hyperplanes = Hyperplanes(base);

  std::vector<std::string> names;
  std::set<std::vector<Residue>> distinct;
  for (const Flat& h : result.hyperplanes) {
    const std::vector<int> columns = h.mask.Elements();
    std::vector<FieldVector> kernel = KernelBasis(a.SelectColumns(columns).Transposed());
    if (kernel.size() != 1) {
      throw InternalError("hyperplane " + ToElementList(h.mask) + " has a " +
                          std::to_string(kernel.size()) + "-dimensional normal space");
    }
    const FieldVector& normal = kernel.front();
    if (!distinct.emplace(normal.entries().begin(), normal.entries().end()).second) {
      throw InternalError("two hyperplanes share a normal vector");
    }
    result.normals.push_back(normal);
    names.push_back(ToBitString(h.mask, base.size()));
  }
  result.matroid =
      Matroid::FromMatrix(FieldMatrix::FromColumnVectors(p, r, result.normals), names);
  const AdjointCertificate cert = SigmaCertificate(result);
  if (!cert.ok()) throw InternalError("normal-vector matroid is not an adjoint: " + cert.failure());
  return result;
}

AdjointCertificate SigmaCertificate(const SigmaResult& result) {
  std::vector<int> labeling(result.hyperplanes.size());
  for (size_t i = 0; i < labeling.size(); ++i) labeling[i] = static_cast<int>(i);
  return VerifyAdjoint(result.base, result.matroid, labeling);
}

std::string ProjectiveType::Name() const {
  switch (kind) {
    case Kind::kFree:
      return "U_{1,1}";
    case Kind::kLine:
      return "U_{2," + std::to_string(size) + "}";
    case Kind::kProjectiveGeometry:
      return "PG(" + std::to_string(rank - 1) + "," + std::to_string(q) + ")";
  }
  return "";
}

std::optional<ProjectiveType> RecognizeProjective(const Matroid& m) {
  if (!IsSimple(m)) throw std::invalid_argument("simplify first: matroid is not simple");
  const int r = m.rank();
  if (r == 0) return std::nullopt;
  if (r == 1) return ProjectiveType{ProjectiveType::Kind::kFree, 1, 0, m.size()};
  if (r == 2) return ProjectiveType{ProjectiveType::Kind::kLine, 2, 0, m.size()};
  if (!IsConnected(m) || !IsModular(m).modular) return std::nullopt;
  const std::vector<Flat>& lines = m.flats_by_rank()[2];
  const int line_size = lines.front().mask.size();
  for (const Flat& line : lines) {
    if (line.mask.size() != line_size) {
      throw InternalError("connected modular matroid has lines of sizes " +
                          std::to_string(line_size) + " and " +
                          std::to_string(line.mask.size()));
    }
  }
  const int q = line_size - 1;
  long long points = 0;
  for (int i = 0, power = 1; i < r; ++i, power *= q) points += power;
  if (points != m.size()) {
    throw InternalError("PG(" + std::to_string(r - 1) + "," + std::to_string(q) + ") has " +
                        std::to_string(points) + " points, matroid has " +
                        std::to_string(m.size()));
  }
  return ProjectiveType{ProjectiveType::Kind::kProjectiveGeometry, r, q, m.size()};
}

AdjointCertificate ComposeDirectSumAdjoint(const AdjointCertificate& first,
                                           const AdjointCertificate& second) {
  const Matroid sum = DirectSum(first.base(), second.base());
  const Matroid candidate = DirectSum(first.candidate(), second.candidate());
  const int m1 = first.base().size();
  const SubsetMask e1 = first.base().ground();
  const SubsetMask e2 = Shifted(second.base().ground(), m1);
  const std::vector<Flat> hyperplanes = Hyperplanes(sum);

  std::vector<int> labeling;
  auto add = [&](SubsetMask h) {
    const int index = FindFlat(hyperplanes, h);
    if (index < 0) {
      throw RefutationError("direct-sum hyperplane missing", ToElementList(h));
    }
    labeling.push_back(index);
  };
  for (int label : first.labeling()) add(first.hyperplanes()[label].mask | e2);
  for (int label : second.labeling()) add(e1 | Shifted(second.hyperplanes()[label].mask, m1));

  AdjointCertificate cert = VerifyAdjoint(sum, candidate, labeling);
  if (!cert.ok()) throw RefutationError("composed certificate fails", cert.failure());
  return cert;
}

std::string SequenceReport::VerdictString() const {
  switch (verdict) {
    case Verdict::kStabilized:
      return "stabilized-at(" + std::to_string(index) + ")";
    case Verdict::kTwoCycle:
      return "two-cycle(" + std::to_string(index) + ")";
    case Verdict::kCapExceeded:
      return "cap-exceeded";
  }
  return "";
}

namespace {

IterateSummary Summarize(const Matroid& m) {
  IterateSummary s;
  s.size = m.size();
  s.rank = m.rank();
  if (m.size() <= kEnumerationCap) {
    s.modular = IsModular(m).modular;
    s.projective = RecognizeProjective(m);
    s.fingerprint = ComputeFingerprint(m);
  }
  return s;
}

}  // namespace

SequenceReport SigmaSequence(const Matroid& m, const SequenceOptions& options) {
  if (!m.is_linear()) throw std::invalid_argument("sigma needs a represented matroid");
  const IsoOracle iso = options.iso ? options.iso : IsoOracle(AreIsomorphic);
  SequenceReport report;
  std::vector<Matroid> iterates{IsSimple(m) ? m : Simplify(m).matroid};
  report.iterates.push_back(Summarize(iterates.front()));
  try {
    for (int j = 1; j <= options.max_iter; ++j) {
      Matroid next = Sigma(iterates.back()).matroid;
      if (next.size() > options.size_cap) {
        report.cap_reason = "iterate " + std::to_string(j) + " has " +
                            std::to_string(next.size()) + " elements, above the size cap";
        report.index = j - 1;
        return report;
      }
      iterates.push_back(next);
      report.iterates.push_back(Summarize(next));
      if (j >= 2 && iterates[j].size() < iterates[j - 2].size()) {
        report.shrinking_steps.push_back(j - 2);
      }
      if (iso(iterates[j], iterates[j - 1])) {
        report.verdict = SequenceReport::Verdict::kStabilized;
        report.index = j - 1;
        return report;
      }
      if (j >= 2 && iso(iterates[j], iterates[j - 2])) {
        report.verdict = SequenceReport::Verdict::kTwoCycle;
        report.index = j - 2;
        return report;
      }
    }
    report.cap_reason = "no repetition within " + std::to_string(options.max_iter) + " steps";
  } catch (const ResourceError& e) {
    report.cap_reason = e.what();
  }
  report.verdict = SequenceReport::Verdict::kCapExceeded;
  report.index = static_cast<int>(iterates.size()) - 1;
  return report;
}

EmbeddingReport CheckSecondAdjointEmbedding(const Matroid& m) {
  if (!IsSimple(m)) throw std::invalid_argument("simplify first: matroid is not simple");
  RequireEnumerable(m, "embedding check", 16);
  const SigmaResult first = Sigma(m);
  const SigmaResult second = Sigma(first.matroid);
  const AdjointCertificate cert = SigmaCertificate(first);

  EmbeddingReport report;
  for (int e = 0; e < m.size(); ++e) {
    const int index = FindFlat(second.hyperplanes, cert.House(e));
    if (index < 0) throw InternalError("H[e] is not a hyperplane of the adjoint");
    report.image.push_back(index);
  }
  const Matroid& target = second.matroid;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m.size()); ++bits) {
    const SubsetMask s(bits);
    SubsetMask image;
    for (int e : s.Elements()) image = image.With(report.image[e]);
    const int rank = m.Rank(s);
    const int image_rank = target.Rank(image);
    ++report.subsets_checked;
    if (rank == s.size() && (image.size() != s.size() || image_rank != s.size())) {
      ++report.independence_failures;
    }
    if (rank != image_rank) ++report.rank_failures;
  }
  return report;
}

}  // namespace madj
