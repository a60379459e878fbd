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

#include "madj/lattice.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "madj/errors.h"

namespace madj {

Lattice Lattice::FromOrder(int n, const std::function<bool(int, int)>& leq) {
  if (n <= 0) throw std::invalid_argument("a lattice needs at least one element");
  Lattice l;
  l.down_.assign(n, boost::dynamic_bitset<>(n));
  l.up_.assign(n, boost::dynamic_bitset<>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!leq(a, b)) continue;
      if (a != b && leq(b, a)) {
        throw std::invalid_argument("order is not antisymmetric at " + std::to_string(a) +
                                    ", " + std::to_string(b));
      }
      l.down_[b].set(a);
      l.up_[a].set(b);
    }
  }
  l.Finish();
  return l;
}

void Lattice::Finish() {
  const int n = size();
  bottom_ = top_ = -1;
  for (int a = 0; a < n; ++a) {
    if (!down_[a].test(a)) throw std::invalid_argument("order is not reflexive");
    if (static_cast<int>(up_[a].count()) == n) bottom_ = a;
    if (static_cast<int>(down_[a].count()) == n) top_ = a;
  }
  if (bottom_ < 0 || top_ < 0) throw std::invalid_argument("poset lacks a bottom or a top");

  upper_covers_.assign(n, {});
  lower_covers_.assign(n, {});
  for (int a = 0; a < n; ++a) {
    for (size_t b = up_[a].find_first(); b != boost::dynamic_bitset<>::npos;
         b = up_[a].find_next(b)) {
      if (static_cast<int>(b) == a) continue;
      if ((up_[a] & down_[b]).count() == 2) {
        upper_covers_[a].push_back(static_cast<int>(b));
        lower_covers_[b].push_back(a);
      }
    }
  }

  // |down set| is strictly monotone along the order: a linear extension.
  std::vector<int> by_size(n);
  std::iota(by_size.begin(), by_size.end(), 0);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&](int a, int b) { return down_[a].count() < down_[b].count(); });
  height_.assign(n, 0);
  for (int a : by_size) {
    for (int c : lower_covers_[a]) height_[a] = std::max(height_[a], height_[c] + 1);
  }
}

bool Lattice::Covers(int upper, int lower) const {
  const auto& covers = lower_covers_[upper];
  return std::find(covers.begin(), covers.end(), lower) != covers.end();
}

int Lattice::CoverCount() const {
  int total = 0;
  for (const auto& c : upper_covers_) total += static_cast<int>(c.size());
  return total;
}

int Lattice::BoundOf(const boost::dynamic_bitset<>& candidates,
                     const std::vector<boost::dynamic_bitset<>>& sets) const {
  for (size_t k = candidates.find_first(); k != boost::dynamic_bitset<>::npos;
       k = candidates.find_next(k)) {
    if (candidates.is_subset_of(sets[k])) return static_cast<int>(k);
  }
  return -1;
}

int Lattice::Meet(int a, int b) const {
  const int m = BoundOf(down_[a] & down_[b], down_);
  if (m < 0) {
    throw std::invalid_argument("no meet for " + std::to_string(a) + ", " + std::to_string(b));
  }
  return m;
}

int Lattice::Join(int a, int b) const {
  const int j = BoundOf(up_[a] & up_[b], up_);
  if (j < 0) {
    throw std::invalid_argument("no join for " + std::to_string(a) + ", " + std::to_string(b));
  }
  return j;
}

Lattice Lattice::Reversed() const {
  Lattice r;
  r.down_ = up_;
  r.up_ = down_;
  r.Finish();
  return r;
}

void Lattice::ValidateBounds() const {
  for (int a = 0; a < size(); ++a) {
    for (int b = a + 1; b < size(); ++b) {
      Meet(a, b);
      Join(a, b);
    }
  }
}

GeometricCheck IsGeometric(const Lattice& l) {
  if (l.size() > kMaxLatticeSize) {
    throw ResourceError("lattice has " + std::to_string(l.size()) + " elements; limit is " +
                        std::to_string(kMaxLatticeSize));
  }
  const int n = l.size();

  // Graded: shortest and longest chains from the bottom agree everywhere.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return l.DownSet(a).count() < l.DownSet(b).count(); });
  std::vector<int> shortest(n, 0);
  for (int a : order) {
    if (a == l.bottom()) continue;
    int best = n + 1;
    for (int c : l.LowerCovers(a)) best = std::min(best, shortest[c] + 1);
    shortest[a] = best;
    if (shortest[a] != l.Height(a)) return GeometricCheck{false, "graded", {a}};
  }

  // Atomic: the atoms below x have x as their least upper bound.
  const std::vector<int> atoms = l.Atoms();
  for (int x = 0; x < n; ++x) {
    if (x == l.bottom()) continue;
    boost::dynamic_bitset<> upper_bounds(n);
    upper_bounds.set();
    bool any = false;
    for (int a : atoms) {
      if (l.Leq(a, x)) {
        upper_bounds &= l.UpSet(a);
        any = true;
      }
    }
    if (!any || upper_bounds != l.UpSet(x)) return GeometricCheck{false, "atomic", {x}};
  }

  // Semimodular, in the local form valid for finite graded lattices: if x
  // and y both cover z then x v y covers both.
  for (int z = 0; z < n; ++z) {
    const auto& ups = l.UpperCovers(z);
    for (size_t i = 0; i < ups.size(); ++i) {
      for (size_t j = i + 1; j < ups.size(); ++j) {
        const int x = ups[i];
        const int y = ups[j];
        const int join = l.Join(x, y);
        if (!l.Covers(join, x) || !l.Covers(join, y)) {
          return GeometricCheck{false, "semimodular", {x, y}};
        }
      }
    }
  }
  return GeometricCheck{true, "", {}};
}

FlatLattice::FlatLattice(std::shared_ptr<const Matroid> m, std::vector<Flat> flats, Lattice order)
    : matroid_(std::move(m)), flats_(std::move(flats)), order_(std::move(order)) {
  for (int i = 0; i < static_cast<int>(flats_.size()); ++i) index_[flats_[i].mask] = i;
}

FlatLattice FlatLattice::Build(const Matroid& m) {
  if (!IsSimple(m)) throw std::invalid_argument("simplify first: matroid is not simple");
  std::vector<Flat> flats = AllFlats(m);
  const int n = static_cast<int>(flats.size());
  if (n > kMaxLatticeSize) {
    throw ResourceError("matroid has " + std::to_string(n) + " flats; limit is " +
                        std::to_string(kMaxLatticeSize));
  }
  Lattice order = Lattice::FromOrder(
      n, [&](int a, int b) { return flats[a].mask.IsSubsetOf(flats[b].mask); });
  FlatLattice lattice(std::make_shared<const Matroid>(m), std::move(flats), std::move(order));

  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (lattice.order_.Meet(a, b) != lattice.Meet(a, b) ||
          lattice.order_.Join(a, b) != lattice.Join(a, b)) {
        throw InternalError("flat lattice meet/join disagree with the order at " +
                            ToElementList(lattice.flats_[a].mask) + ", " +
                            ToElementList(lattice.flats_[b].mask));
      }
    }
  }
  GeometricCheck check = IsGeometric(lattice.order_);
  if (!check.geometric) {
    throw InternalError("lattice of flats is not " + check.failed_property);
  }
  return lattice;
}

int FlatLattice::IndexOf(SubsetMask mask) const {
  auto it = index_.find(mask);
  return it == index_.end() ? -1 : it->second;
}

int FlatLattice::Meet(int a, int b) const {
  return IndexOf(flats_[a].mask & flats_[b].mask);
}

int FlatLattice::Join(int a, int b) const {
  return IndexOf(Closure(*matroid_, flats_[a].mask | flats_[b].mask).mask);
}

std::vector<std::string> FlatLattice::Labels() const {
  std::vector<std::string> labels;
  labels.reserve(flats_.size());
  for (const Flat& f : flats_) {
    labels.push_back(std::to_string(f.rank) + ":" + ToBitString(f.mask, matroid_->size()));
  }
  return labels;
}

bool IsModularPair(const Matroid& m, const Flat& x, const Flat& y) {
  const int join = Closure(m, x.mask | y.mask).rank;
  const int meet = m.Rank(x.mask & y.mask);
  return join + meet == x.rank + y.rank;
}

ModularityReport IsModular(const Matroid& m) {
  if (!IsSimple(m)) throw std::invalid_argument("simplify first: matroid is not simple");
  ModularityReport report;
  report.element_count = m.size();
  report.hyperplane_count = static_cast<int>(Hyperplanes(m).size());
  const std::vector<Flat> flats = AllFlats(m);
  report.modular = true;
  for (size_t i = 0; i < flats.size() && report.modular; ++i) {
    for (size_t j = i + 1; j < flats.size(); ++j) {
      const Flat& x = flats[i];
      const Flat& y = flats[j];
      if (x.mask.IsSubsetOf(y.mask) || y.mask.IsSubsetOf(x.mask)) continue;
      if (!IsModularPair(m, x, y)) {
        report.modular = false;
        report.witness = std::make_pair(x, y);
        break;
      }
    }
  }
  const bool greene = report.hyperplane_count == report.element_count;
  if (greene != report.modular) {
    throw InternalError("pairwise modularity (" + std::string(report.modular ? "true" : "false") +
                        ") disagrees with |H|=|E| (" + std::to_string(report.hyperplane_count) +
                        " vs " + std::to_string(report.element_count) + ")");
  }
  return report;
}

namespace {

using ElementPrint = std::tuple<int, size_t, size_t, size_t, size_t>;

ElementPrint PrintOf(const Lattice& l, int a) {
  return {l.Height(a), l.UpperCovers(a).size(), l.LowerCovers(a).size(), l.UpSet(a).count(),
          l.DownSet(a).count()};
}

class LatticeIsoSearch {
 public:
  LatticeIsoSearch(const Lattice& a, const Lattice& b) : a_(a), b_(b) {
    const int n = a.size();
    print_a_.resize(n);
    print_b_.resize(n);
    for (int i = 0; i < n; ++i) {
      print_a_[i] = PrintOf(a, i);
      print_b_[i] = PrintOf(b, i);
    }
    // Depth-first order over the undirected Hasse diagram, so every element
    // after the first has an already-placed neighbor (its DFS parent).
    std::vector<bool> seen(n, false);
    std::vector<std::pair<int, int>> stack{{a.bottom(), -1}};
    while (!stack.empty()) {
      auto [x, parent] = stack.back();
      stack.pop_back();
      if (seen[x]) continue;
      seen[x] = true;
      order_.push_back(x);
      parent_.push_back(parent);
      for (auto it = a.LowerCovers(x).rbegin(); it != a.LowerCovers(x).rend(); ++it) {
        if (!seen[*it]) stack.emplace_back(*it, x);
      }
      for (auto it = a.UpperCovers(x).rbegin(); it != a.UpperCovers(x).rend(); ++it) {
        if (!seen[*it]) stack.emplace_back(*it, x);
      }
    }
    image_.assign(n, -1);
    used_.assign(n, false);
  }

  std::optional<std::vector<int>> Run() {
    if (order_.size() != image_.size()) return std::nullopt;
    if (!Place(0)) return std::nullopt;
    return image_;
  }

 private:
  bool Consistent(int x, int y) const {
    if (print_a_[x] != print_b_[y]) return false;
    for (int c : a_.LowerCovers(x)) {
      if (image_[c] >= 0 && !b_.Covers(y, image_[c])) return false;
    }
    for (int c : a_.UpperCovers(x)) {
      if (image_[c] >= 0 && !b_.Covers(image_[c], y)) return false;
    }
    return true;
  }

  bool Place(size_t pos) {
    if (pos == order_.size()) return true;
    const int x = order_[pos];
    const int parent = parent_[pos];
    std::vector<int> candidates;
    if (parent < 0) {
      candidates.push_back(b_.bottom());
    } else if (a_.Covers(x, parent)) {
      candidates = b_.UpperCovers(image_[parent]);
    } else {
      candidates = b_.LowerCovers(image_[parent]);
    }
    for (int y : candidates) {
      if (used_[y] || !Consistent(x, y)) continue;
      image_[x] = y;
      used_[y] = true;
      if (Place(pos + 1)) return true;
      image_[x] = -1;
      used_[y] = false;
    }
    return false;
  }

  const Lattice& a_;
  const Lattice& b_;
  std::vector<ElementPrint> print_a_;
  std::vector<ElementPrint> print_b_;
  std::vector<int> order_;
  std::vector<int> parent_;
  std::vector<int> image_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<int>> LatticeIso(const Lattice& a, const Lattice& b) {
  if (a.size() > kMaxLatticeSize || b.size() > kMaxLatticeSize) {
    throw ResourceError("lattice isomorphism is capped at 2^14 elements");
  }
  if (a.size() != b.size() || a.height() != b.height() || a.Atoms().size() != b.Atoms().size() ||
      a.Coatoms().size() != b.Coatoms().size() || a.CoverCount() != b.CoverCount()) {
    return std::nullopt;
  }
  std::vector<ElementPrint> pa, pb;
  for (int i = 0; i < a.size(); ++i) {
    pa.push_back(PrintOf(a, i));
    pb.push_back(PrintOf(b, i));
  }
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  if (pa != pb) return std::nullopt;
  return LatticeIsoSearch(a, b).Run();
}

std::string ExportDot(const Lattice& l, const std::vector<std::string>& labels,
                      const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n";
  for (int i = 0; i < l.size(); ++i) {
    os << "  n" << i << " [label=\"" << (i < static_cast<int>(labels.size()) ? labels[i] : "")
       << "\"];\n";
  }
  for (int i = 0; i < l.size(); ++i) {
    for (int j : l.UpperCovers(i)) os << "  n" << i << " -> n" << j << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace madj
