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

#include "madj/iso.h"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <unordered_set>

#include "madj/errors.h"

namespace madj {
namespace {

// Number of flats of each rank containing e.
std::vector<int> FlatProfile(const Matroid& m, int e) {
  std::vector<int> profile;
  for (const auto& layer : m.flats_by_rank()) {
    int count = 0;
    for (const Flat& f : layer) count += f.mask.Contains(e) ? 1 : 0;
    profile.push_back(count);
  }
  return profile;
}

// FlatProfile extended by the number of circuits of each size through e.
std::vector<int> SearchProfile(const Matroid& m, int e) {
  std::vector<int> profile = FlatProfile(m, e);
  std::vector<int> by_size(m.rank() + 2, 0);
  for (SubsetMask c : m.circuits()) {
    if (c.Contains(e)) ++by_size[c.size()];
  }
  profile.insert(profile.end(), by_size.begin(), by_size.end());
  return profile;
}

class IsoSearch {
 public:
  IsoSearch(const Matroid& a, const Matroid& b) : a_(a), b_(b), n_(a.size()) {
    for (int e = 0; e < n_; ++e) {
      profile_a_.push_back(SearchProfile(a, e));
      profile_b_.push_back(SearchProfile(b, e));
    }
    circuits_a_.resize(n_);
    circuits_b_.resize(n_);
    for (SubsetMask c : a.circuits()) {
      set_a_.insert(c.bits());
      for (int e : c.Elements()) circuits_a_[e].push_back(c);
    }
    for (SubsetMask c : b.circuits()) {
      set_b_.insert(c.bits());
      for (int e : c.Elements()) circuits_b_[e].push_back(c);
    }
    // Rarest profile first, ties by index.
    std::map<std::vector<int>, int> frequency;
    for (const auto& p : profile_a_) ++frequency[p];
    order_.resize(n_);
    for (int e = 0; e < n_; ++e) order_[e] = e;
    std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
      return frequency[profile_a_[x]] < frequency[profile_a_[y]];
    });
    forward_.assign(n_, -1);
    backward_.assign(n_, -1);
  }

  std::optional<std::vector<int>> Run() {
    if (!Place(0)) return std::nullopt;
    return forward_;
  }

 private:
  SubsetMask Image(SubsetMask s) const {
    SubsetMask out;
    for (int e : s.Elements()) out = out.With(forward_[e]);
    return out;
  }
  SubsetMask Preimage(SubsetMask s) const {
    SubsetMask out;
    for (int e : s.Elements()) out = out.With(backward_[e]);
    return out;
  }

  bool Consistent(int x, int y) const {
    for (SubsetMask c : circuits_a_[x]) {
      if (c.IsSubsetOf(placed_a_) && !set_b_.contains(Image(c).bits())) return false;
    }
    for (SubsetMask c : circuits_b_[y]) {
      if (c.IsSubsetOf(placed_b_) && !set_a_.contains(Preimage(c).bits())) return false;
    }
    return true;
  }

  bool Place(int depth) {
    if (depth == n_) return true;
    const int x = order_[depth];
    for (int y = 0; y < n_; ++y) {
      if (backward_[y] >= 0 || profile_a_[x] != profile_b_[y]) continue;
      forward_[x] = y;
      backward_[y] = x;
      placed_a_ = placed_a_.With(x);
      placed_b_ = placed_b_.With(y);
      if (Consistent(x, y) && Place(depth + 1)) return true;
      forward_[x] = -1;
      backward_[y] = -1;
      placed_a_ = placed_a_.Without(x);
      placed_b_ = placed_b_.Without(y);
    }
    return false;
  }

  const Matroid& a_;
  const Matroid& b_;
  int n_;
  std::vector<std::vector<int>> profile_a_;
  std::vector<std::vector<int>> profile_b_;
  std::vector<std::vector<SubsetMask>> circuits_a_;
  std::vector<std::vector<SubsetMask>> circuits_b_;
  std::unordered_set<std::uint64_t> set_a_;
  std::unordered_set<std::uint64_t> set_b_;
  std::vector<int> order_;
  std::vector<int> forward_;
  std::vector<int> backward_;
  SubsetMask placed_a_;
  SubsetMask placed_b_;
};

void VerifyIso(const Matroid& a, const Matroid& b, const std::vector<int>& f) {
  const int n = a.size();
  auto image = [&](std::uint64_t bits) {
    SubsetMask out;
    for (int e : SubsetMask(bits).Elements()) out = out.With(f[e]);
    return out;
  };
  auto check = [&](std::uint64_t bits) {
    if (a.Rank(SubsetMask(bits)) != b.Rank(image(bits))) {
      throw InternalError("isomorphism search returned a map that changes the rank of " +
                          ToElementList(SubsetMask(bits)));
    }
  };
  if (n <= 10) {
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) check(s);
    return;
  }
  std::mt19937_64 rng(0x5eed);
  const std::uint64_t full = SubsetMask::Full(n).bits();
  for (int trial = 0; trial < 10000; ++trial) check(rng() & full);
}

}  // namespace

std::string Fingerprint::DebugString() const {
  std::ostringstream os;
  auto list = [&](const std::vector<int>& v) {
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
  };
  os << "m=" << size << " r=" << rank << " flats=";
  list(flat_counts);
  os << " circuits=";
  list(circuit_sizes);
  return os.str();
}

Fingerprint ComputeFingerprint(const Matroid& m) {
  RequireEnumerable(m, "fingerprint");
  Fingerprint fp;
  fp.size = m.size();
  fp.rank = m.rank();
  for (const auto& layer : m.flats_by_rank()) {
    fp.flat_counts.push_back(static_cast<int>(layer.size()));
  }
  fp.circuit_sizes.assign(m.rank() + 2, 0);
  for (SubsetMask c : m.circuits()) ++fp.circuit_sizes[c.size()];
  for (int e = 0; e < m.size(); ++e) fp.profiles.push_back(FlatProfile(m, e));
  std::sort(fp.profiles.begin(), fp.profiles.end());
  return fp;
}

std::optional<std::vector<int>> MatroidIso(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return std::nullopt;
  RequireEnumerable(a, "isomorphism test", kMaxIsoSize);
  if (ComputeFingerprint(a) != ComputeFingerprint(b)) return std::nullopt;
  std::optional<std::vector<int>> f = IsoSearch(a, b).Run();
  if (f) VerifyIso(a, b, *f);
  return f;
}

}  // namespace madj
