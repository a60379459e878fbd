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

#ifndef MADJ_SUBSET_MASK_H_
#define MADJ_SUBSET_MASK_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace madj {

// Largest ground set a Matroid can carry.
inline constexpr int kMaxGroundSize = 64;

// A subset of a ground set {0, ..., m-1}, element i <-> bit i. Ordering is
// the numeric order of the bit pattern; this is the canonical "lexicographic
// mask order" used for every enumerated list in the library.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t bits) : bits_(bits) {}
  SubsetMask(std::initializer_list<int> elements) {
    for (int e : elements) bits_ |= Bit(e);
  }

  static constexpr SubsetMask Full(int m) {
    return SubsetMask(m >= 64 ? ~std::uint64_t{0}
                              : ((std::uint64_t{1} << m) - 1));
  }
  static constexpr SubsetMask Singleton(int e) { return SubsetMask(Bit(e)); }
  static SubsetMask FromElements(const std::vector<int>& elements) {
    SubsetMask s;
    for (int e : elements) s.bits_ |= Bit(e);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool Contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  // Index of the least element; -1 for the empty set.
  constexpr int Lowest() const {
    return bits_ == 0 ? -1 : std::countr_zero(bits_);
  }
  constexpr int Highest() const {
    return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_);
  }

  constexpr SubsetMask With(int e) const { return SubsetMask(bits_ | Bit(e)); }
  constexpr SubsetMask Without(int e) const {
    return SubsetMask(bits_ & ~Bit(e));
  }
  constexpr bool IsSubsetOf(SubsetMask other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool Intersects(SubsetMask other) const {
    return (bits_ & other.bits_) != 0;
  }

  std::vector<int> Elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  constexpr SubsetMask operator|(SubsetMask o) const {
    return SubsetMask(bits_ | o.bits_);
  }
  constexpr SubsetMask operator&(SubsetMask o) const {
    return SubsetMask(bits_ & o.bits_);
  }
  // Set difference.
  constexpr SubsetMask operator-(SubsetMask o) const {
    return SubsetMask(bits_ & ~o.bits_);
  }
  SubsetMask& operator|=(SubsetMask o) {
    bits_ |= o.bits_;
    return *this;
  }
  SubsetMask& operator&=(SubsetMask o) {
    bits_ &= o.bits_;
    return *this;
  }

  constexpr auto operator<=>(const SubsetMask&) const = default;

 private:
  static constexpr std::uint64_t Bit(int e) { return std::uint64_t{1} << e; }

  std::uint64_t bits_ = 0;
};

// Width-m bit string, element 0 first, e.g. {0,2} over m=4 -> "1010".
std::string ToBitString(SubsetMask s, int m);

// "{0,2,5}".
std::string ToElementList(SubsetMask s);

// Calls fn(mask) for every k-subset of {0..m-1} in increasing numeric order.
template <typename Fn>
void ForEachSubsetOfSize(int m, int k, Fn&& fn) {
  if (k < 0 || k > m) return;
  if (k == 0) {
    fn(SubsetMask());
    return;
  }
  std::uint64_t s = (k == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
  const std::uint64_t limit_bit = (m >= 64) ? 0 : (std::uint64_t{1} << m);
  while (true) {
    if (limit_bit != 0 && s >= limit_bit) return;
    fn(SubsetMask(s));
    // Gosper's hack.
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    if (r == 0) return;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

}  // namespace madj

#endif  // MADJ_SUBSET_MASK_H_
