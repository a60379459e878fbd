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

#include "madj/matroid.h"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "madj/errors.h"

namespace madj {
namespace {

// Full rank tables are kept for matroids up to this size (64 KiB).
constexpr int kRankTableMax = 16;

// Independence indicator of the down-closure of `bases`, then the rank table.
std::vector<std::uint8_t> RankTableFromBases(int m, const std::vector<SubsetMask>& bases) {
  const std::uint64_t n = std::uint64_t{1} << m;
  std::vector<std::uint8_t> indep(n, 0);
  for (SubsetMask b : bases) indep[b.bits()] = 1;
  for (std::uint64_t s = n; s-- > 0;) {
    if (indep[s]) continue;
    for (int e = 0; e < m; ++e) {
      const std::uint64_t bit = std::uint64_t{1} << e;
      if (!(s & bit) && indep[s | bit]) {
        indep[s] = 1;
        break;
      }
    }
  }
  std::vector<std::uint8_t> rank(n, 0);
  for (std::uint64_t s = 1; s < n; ++s) {
    if (indep[s]) {
      rank[s] = static_cast<std::uint8_t>(std::popcount(s));
      continue;
    }
    std::uint8_t best = 0;
    for (std::uint64_t b = s; b != 0; b &= b - 1) {
      best = std::max(best, rank[s & ~(b & (~b + 1))]);
    }
    rank[s] = best;
  }
  return rank;
}

// Local submodularity of a unit-increase rank table; returns a violating
// (X, e, f) as a message, or an empty string.
std::string LocalSubmodularityViolation(int m, const std::vector<std::uint8_t>& rank) {
  const std::uint64_t n = std::uint64_t{1} << m;
  for (std::uint64_t x = 0; x < n; ++x) {
    for (int e = 0; e < m; ++e) {
      const std::uint64_t be = std::uint64_t{1} << e;
      if (x & be) continue;
      for (int f = e + 1; f < m; ++f) {
        const std::uint64_t bf = std::uint64_t{1} << f;
        if (x & bf) continue;
        if (rank[x | be] + rank[x | bf] < rank[x | be | bf] + rank[x]) {
          return "X=" + ToElementList(SubsetMask(x)) + " e=" + std::to_string(e) +
                 " f=" + std::to_string(f);
        }
      }
    }
  }
  return "";
}

// Pairwise basis exchange; returns a violation message or "".
std::string ExchangeViolation(const std::vector<SubsetMask>& bases) {
  std::unordered_set<std::uint64_t> lookup;
  for (SubsetMask b : bases) lookup.insert(b.bits());
  for (SubsetMask b1 : bases) {
    for (SubsetMask b2 : bases) {
      for (int x : (b1 - b2).Elements()) {
        bool found = false;
        for (int y : (b2 - b1).Elements()) {
          if (lookup.count(b1.Without(x).With(y).bits())) {
            found = true;
            break;
          }
        }
        if (!found) {
          return "bases " + ToElementList(b1) + " and " + ToElementList(b2) +
                 " fail exchange at element " + std::to_string(x);
        }
      }
    }
  }
  return "";
}

std::vector<std::string> ConcatNames(const Matroid& a, const Matroid& b) {
  if (a.names().empty() && b.names().empty()) return {};
  std::vector<std::string> names;
  for (int e = 0; e < a.size(); ++e) names.push_back(a.ElementName(e));
  for (int e = 0; e < b.size(); ++e) names.push_back(b.ElementName(e));
  return names;
}

// Restriction to `keep` when r(keep) = r(M).
Matroid RestrictSpanning(const Matroid& m, SubsetMask keep) {
  const std::vector<int> kept = keep.Elements();
  std::vector<std::string> names;
  if (!m.names().empty()) {
    for (int e : kept) names.push_back(m.names()[e]);
  }
  if (m.is_linear()) {
    return Matroid::FromMatrix(m.matrix().SelectColumns(kept), std::move(names));
  }
  std::vector<int> new_index(m.size(), -1);
  for (size_t i = 0; i < kept.size(); ++i) new_index[kept[i]] = static_cast<int>(i);
  std::vector<SubsetMask> bases;
  for (SubsetMask b : m.bases()) {
    if (!b.IsSubsetOf(keep)) continue;
    SubsetMask nb;
    for (int e : b.Elements()) nb = nb.With(new_index[e]);
    bases.push_back(nb);
  }
  return Matroid::FromBases(static_cast<int>(kept.size()), std::move(bases), std::move(names));
}

}  // namespace

struct Matroid::Impl {
  int m = 0;
  int r = 0;
  std::optional<FieldMatrix> matrix;
  std::vector<SubsetMask> basis_list;
  std::vector<std::string> names;

  mutable std::once_flag rank_once;
  mutable std::vector<std::uint8_t> rank_table;
  mutable std::once_flag flats_once;
  mutable std::vector<std::vector<Flat>> flats;
  mutable std::once_flag circuits_once;
  mutable std::vector<SubsetMask> circuits;
  mutable std::once_flag bases_once;
  mutable std::vector<SubsetMask> bases;

  int DirectRank(SubsetMask s) const {
    if (matrix) return SubsetRank(*matrix, s);
    int best = 0;
    for (SubsetMask b : basis_list) best = std::max(best, (s & b).size());
    return best;
  }

  const std::vector<std::uint8_t>& RankTable() const {
    std::call_once(rank_once, [this] {
      if (!matrix) {
        rank_table = RankTableFromBases(m, basis_list);
        return;
      }
      const std::uint64_t n = std::uint64_t{1} << m;
      rank_table.assign(n, 0);
      for (std::uint64_t s = 1; s < n; ++s) {
        rank_table[s] = static_cast<std::uint8_t>(DirectRank(SubsetMask(s)));
      }
    });
    return rank_table;
  }
};

Matroid Matroid::FromMatrix(const FieldMatrix& a, std::vector<std::string> names) {
  if (a.cols() > kMaxGroundSize) {
    throw ResourceError("matroid has " + std::to_string(a.cols()) +
                        " elements; the limit is " + std::to_string(kMaxGroundSize));
  }
  if (!names.empty() && static_cast<int>(names.size()) != a.cols()) {
    throw std::invalid_argument("name count does not match column count");
  }
  auto impl = std::make_shared<Impl>();
  impl->m = a.cols();
  RrefResult rr = Rref(a);
  impl->r = rr.rank;
  if (rr.rank == a.rows()) {
    impl->matrix = a;
  } else {
    std::vector<int> rows(rr.rank);
    std::iota(rows.begin(), rows.end(), 0);
    impl->matrix = rr.reduced.SelectRows(rows);
  }
  impl->names = std::move(names);
  return Matroid(std::move(impl));
}

Matroid Matroid::FromBases(int m, std::vector<SubsetMask> bases, std::vector<std::string> names) {
  if (m < 0 || m > kMaxGroundSize) {
    throw ResourceError("ground set size " + std::to_string(m) + " outside [0, 64]");
  }
  if (!names.empty() && static_cast<int>(names.size()) != m) {
    throw std::invalid_argument("name count does not match ground set size");
  }
  if (bases.empty()) throw NotAMatroidError("not a matroid: empty basis list");
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  const int r = bases.front().size();
  for (SubsetMask b : bases) {
    if (!b.IsSubsetOf(SubsetMask::Full(m))) {
      throw NotAMatroidError("not a matroid: basis " + ToElementList(b) +
                             " leaves the ground set");
    }
    if (b.size() != r) {
      throw NotAMatroidError("not a matroid: bases " + ToElementList(bases.front()) + " and " +
                             ToElementList(b) + " differ in size");
    }
  }

  auto impl = std::make_shared<Impl>();
  impl->m = m;
  impl->r = r;
  impl->basis_list = bases;
  impl->names = std::move(names);

  // Up to kRankTableMax elements the rank table is needed anyway, and local
  // submodularity of the induced rank function is equivalent to exchange.
  // Only on failure is the slower pairwise search run, to name a pair.
  bool ok;
  if (m <= kRankTableMax) {
    ok = LocalSubmodularityViolation(m, impl->RankTable()).empty();
  } else {
    ok = ExchangeViolation(bases).empty();
  }
  if (!ok) {
    std::string why = ExchangeViolation(bases);
    throw NotAMatroidError("not a matroid: " + why);
  }
  return Matroid(std::move(impl));
}

int Matroid::size() const { return impl_->m; }
int Matroid::rank() const { return impl_->r; }

int Matroid::Rank(SubsetMask s) const {
  if (!s.IsSubsetOf(ground())) {
    throw std::out_of_range("subset " + ToElementList(s) + " leaves the ground set of size " +
                            std::to_string(size()));
  }
  if (impl_->m <= kRankTableMax) return impl_->RankTable()[s.bits()];
  return impl_->DirectRank(s);
}

bool Matroid::is_linear() const { return impl_->matrix.has_value(); }

const FieldMatrix& Matroid::matrix() const {
  if (!impl_->matrix) throw std::logic_error("matroid is not given by a matrix");
  return *impl_->matrix;
}

std::optional<PrimeModulus> Matroid::modulus() const {
  if (!impl_->matrix) return std::nullopt;
  return impl_->matrix->modulus();
}

const std::vector<SubsetMask>& Matroid::basis_list() const {
  if (impl_->matrix) throw std::logic_error("matroid is not given by bases");
  return impl_->basis_list;
}

std::string Matroid::ElementName(int e) const {
  if (e < static_cast<int>(impl_->names.size())) return impl_->names[e];
  return std::to_string(e);
}

const std::vector<std::string>& Matroid::names() const { return impl_->names; }

SubsetMask Matroid::loops() const {
  SubsetMask out;
  for (int e = 0; e < size(); ++e) {
    if (Rank(SubsetMask::Singleton(e)) == 0) out = out.With(e);
  }
  return out;
}

const std::vector<std::vector<Flat>>& Matroid::flats_by_rank() const {
  RequireEnumerable(*this, "flat enumeration");
  std::call_once(impl_->flats_once, [this] {
    const int r = rank();
    std::vector<std::vector<Flat>> layers(r + 1);
    layers[0].push_back(Closure(*this, SubsetMask()));
    for (int k = 0; k < r; ++k) {
      std::set<SubsetMask> next;
      for (const Flat& f : layers[k]) {
        SubsetMask covered = f.mask;
        for (int e = 0; e < size(); ++e) {
          if (covered.Contains(e)) continue;
          Flat g = Closure(*this, f.mask.With(e));
          covered |= g.mask;
          next.insert(g.mask);
        }
      }
      for (SubsetMask s : next) layers[k + 1].push_back(Flat{s, k + 1});
    }
    impl_->flats = std::move(layers);
  });
  return impl_->flats;
}

const std::vector<SubsetMask>& Matroid::circuits() const {
  RequireEnumerable(*this, "circuit enumeration");
  std::call_once(impl_->circuits_once, [this] {
    std::vector<SubsetMask> out;
    const int max_size = std::min(size(), rank() + 1);
    for (int k = 1; k <= max_size; ++k) {
      ForEachSubsetOfSize(size(), k, [&](SubsetMask s) {
        if (Rank(s) != k - 1) return;
        for (int e : s.Elements()) {
          if (Rank(s.Without(e)) != k - 1) return;
        }
        out.push_back(s);
      });
    }
    impl_->circuits = std::move(out);
  });
  return impl_->circuits;
}

const std::vector<SubsetMask>& Matroid::bases() const {
  std::call_once(impl_->bases_once, [this] {
    if (!impl_->matrix) {
      impl_->bases = impl_->basis_list;
      return;
    }
    RequireEnumerable(*this, "basis enumeration");
    std::vector<SubsetMask> out;
    ForEachSubsetOfSize(size(), rank(), [&](SubsetMask s) {
      if (Rank(s) == rank()) out.push_back(s);
    });
    impl_->bases = std::move(out);
  });
  return impl_->bases;
}

void RequireEnumerable(const Matroid& m, const char* what, int cap) {
  if (m.size() > cap) {
    throw ResourceError(std::string(what) + " is capped at " + std::to_string(cap) +
                        " elements; matroid has " + std::to_string(m.size()));
  }
}

Flat Closure(const Matroid& m, SubsetMask s) {
  const int r = m.Rank(s);
  SubsetMask out = s;
  for (int e = 0; e < m.size(); ++e) {
    if (!s.Contains(e) && m.Rank(s.With(e)) == r) out = out.With(e);
  }
  return Flat{out, r};
}

bool IsFlat(const Matroid& m, SubsetMask s) { return Closure(m, s).mask == s; }

std::vector<std::vector<Flat>> FlatsByRank(const Matroid& m) { return m.flats_by_rank(); }

std::vector<Flat> AllFlats(const Matroid& m) {
  std::vector<Flat> out;
  for (const auto& layer : m.flats_by_rank()) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

std::vector<Flat> Hyperplanes(const Matroid& m) {
  if (m.rank() == 0) return {};
  return m.flats_by_rank()[m.rank() - 1];
}

std::vector<SubsetMask> Circuits(const Matroid& m) { return m.circuits(); }

std::vector<SubsetMask> Cocircuits(const Matroid& m) {
  std::vector<SubsetMask> out;
  for (const Flat& h : Hyperplanes(m)) out.push_back(m.ground() - h.mask);
  return out;
}

std::vector<SubsetMask> Bases(const Matroid& m) { return m.bases(); }

Matroid Dual(const Matroid& m) {
  if (m.is_linear()) {
    const FieldMatrix& a = m.matrix();
    std::vector<FieldVector> kernel = KernelBasis(a);
    return Matroid::FromMatrix(FieldMatrix::FromRowVectors(a.modulus(), a.cols(), kernel),
                               m.names());
  }
  std::vector<SubsetMask> bases;
  for (SubsetMask b : m.basis_list()) bases.push_back(m.ground() - b);
  return Matroid::FromBases(m.size(), std::move(bases), m.names());
}

Matroid DirectSum(const Matroid& a, const Matroid& b) {
  const int m1 = a.size();
  const int m2 = b.size();
  if (m1 + m2 > kEnumerationCap) {
    throw ResourceError("direct sum would have " + std::to_string(m1 + m2) +
                        " elements; the limit is " + std::to_string(kEnumerationCap));
  }
  std::vector<std::string> names = ConcatNames(a, b);
  if (a.is_linear() && b.is_linear() && a.modulus() == b.modulus()) {
    const FieldMatrix& x = a.matrix();
    const FieldMatrix& y = b.matrix();
    FieldMatrix sum(x.modulus(), x.rows() + y.rows(), m1 + m2);
    for (int c = 0; c < m1; ++c) {
      for (int r = 0; r < x.rows(); ++r) sum.set(r, c, x.at(r, c));
    }
    for (int c = 0; c < m2; ++c) {
      for (int r = 0; r < y.rows(); ++r) sum.set(x.rows() + r, m1 + c, y.at(r, c));
    }
    return Matroid::FromMatrix(sum, std::move(names));
  }
  std::vector<SubsetMask> bases;
  for (SubsetMask b1 : a.bases()) {
    for (SubsetMask b2 : b.bases()) bases.push_back(b1 | SubsetMask(b2.bits() << m1));
  }
  return Matroid::FromBases(m1 + m2, std::move(bases), std::move(names));
}

Matroid Permute(const Matroid& m, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != m.size()) {
    throw std::invalid_argument("permutation size mismatch");
  }
  std::vector<std::string> names;
  if (!m.names().empty()) {
    names.resize(m.size());
    for (int e = 0; e < m.size(); ++e) names[perm[e]] = m.names()[e];
  }
  if (m.is_linear()) {
    std::vector<int> inverse(m.size());
    for (int e = 0; e < m.size(); ++e) inverse[perm[e]] = e;
    return Matroid::FromMatrix(m.matrix().SelectColumns(inverse), std::move(names));
  }
  std::vector<SubsetMask> bases;
  for (SubsetMask b : m.basis_list()) {
    SubsetMask nb;
    for (int e : b.Elements()) nb = nb.With(perm[e]);
    bases.push_back(nb);
  }
  return Matroid::FromBases(m.size(), std::move(bases), std::move(names));
}

Simplification Simplify(const Matroid& m) {
  std::vector<std::optional<int>> map(m.size());
  SubsetMask keep;
  std::vector<int> kept;
  for (int e = 0; e < m.size(); ++e) {
    if (m.Rank(SubsetMask::Singleton(e)) == 0) continue;
    bool parallel = false;
    for (int f : kept) {
      if (m.Rank(SubsetMask{e, f}) == 1) {
        parallel = true;
        break;
      }
    }
    if (parallel) continue;
    map[e] = static_cast<int>(kept.size());
    kept.push_back(e);
    keep = keep.With(e);
  }
  if (keep == m.ground()) return Simplification{m, std::move(map)};
  return Simplification{RestrictSpanning(m, keep), std::move(map)};
}

bool IsSimple(const Matroid& m) {
  for (int e = 0; e < m.size(); ++e) {
    if (m.Rank(SubsetMask::Singleton(e)) == 0) return false;
    for (int f = 0; f < e; ++f) {
      if (m.Rank(SubsetMask{e, f}) < 2) return false;
    }
  }
  return true;
}

std::vector<SubsetMask> Components(const Matroid& m) {
  RequireEnumerable(m, "component computation");
  std::vector<int> parent(m.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (SubsetMask c : m.circuits()) {
    const int root = find(c.Lowest());
    for (int e : c.Elements()) parent[find(e)] = root;
  }
  const SubsetMask loops = m.loops();
  std::vector<SubsetMask> blocks;
  std::vector<int> block_of_root(m.size(), -1);
  for (int e = 0; e < m.size(); ++e) {
    if (loops.Contains(e)) continue;
    const int root = find(e);
    if (block_of_root[root] < 0) {
      block_of_root[root] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of_root[root]] = blocks[block_of_root[root]].With(e);
  }
  return blocks;
}

bool IsConnected(const Matroid& m) {
  return m.loops().empty() && Components(m).size() == 1;
}

}  // namespace madj
