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

#include "madj/catalogue.h"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace madj {
namespace {

bool IsPrime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int ParseInt(const std::string& text, const std::string& name) {
  size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || value < 0) {
    throw std::invalid_argument("bad number '" + text + "' in fixture '" + name + "'");
  }
  return value;
}

std::vector<std::string> Split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

// All vectors of length r over GF(q) with first nonzero entry 1, in base-q
// order with the first coordinate most significant.
std::vector<std::vector<long long>> NormalizedVectors(int r, int q) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> v(r, 0);
  long long total = 1;
  for (int i = 0; i < r; ++i) total *= q;
  for (long long code = 0; code < total; ++code) {
    long long rest = code;
    for (int i = r - 1; i >= 0; --i) {
      v[i] = rest % q;
      rest /= q;
    }
    auto first = std::find_if(v.begin(), v.end(), [](long long x) { return x != 0; });
    if (first != v.end() && *first == 1) out.push_back(v);
  }
  return out;
}

class GenericSearch {
 public:
  GenericSearch(int r, int n, PrimeModulus p, std::vector<std::vector<long long>> candidates)
      : r_(r), n_(n), p_(p), candidates_(std::move(candidates)) {}

  bool Run() { return Extend(0); }
  const std::vector<std::vector<long long>>& chosen() const { return chosen_; }

 private:
  // Every r-subset containing the newest column is independent.
  bool NewestIsGeneric() const {
    const int k = static_cast<int>(chosen_.size());
    if (k < r_) {
      FieldMatrix a = FieldMatrix::FromColumns(p_, r_, chosen_);
      return Rref(a).rank == k;
    }
    std::vector<int> pick(r_ - 1);
    for (int i = 0; i < r_ - 1; ++i) pick[i] = i;
    while (true) {
      std::vector<std::vector<long long>> columns;
      for (int i : pick) columns.push_back(chosen_[i]);
      columns.push_back(chosen_.back());
      if (Rref(FieldMatrix::FromColumns(p_, r_, columns)).rank != r_) return false;
      int i = r_ - 2;
      while (i >= 0 && pick[i] == k - 1 - (r_ - 1 - i)) --i;
      if (i < 0) return true;
      ++pick[i];
      for (int j = i + 1; j < r_ - 1; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  bool Extend(size_t from) {
    if (static_cast<int>(chosen_.size()) == n_) return true;
    for (size_t c = from; c < candidates_.size(); ++c) {
      chosen_.push_back(candidates_[c]);
      if (NewestIsGeneric() && Extend(c + 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  int r_;
  int n_;
  PrimeModulus p_;
  std::vector<std::vector<long long>> candidates_;
  std::vector<std::vector<long long>> chosen_;
};

}  // namespace

Matroid ProjectiveGeometry(int dimension, int q) {
  if (dimension < 1 || !IsPrime(q) || q > kMaxPrime) {
    throw std::invalid_argument("PG(" + std::to_string(dimension) + "," + std::to_string(q) +
                                ") needs dimension >= 1 and a prime field");
  }
  const int r = dimension + 1;
  std::vector<std::vector<long long>> columns = NormalizedVectors(r, q);
  if (static_cast<int>(columns.size()) > kMaxGroundSize) {
    throw std::invalid_argument("PG(" + std::to_string(dimension) + "," + std::to_string(q) +
                                ") has more than 64 points");
  }
  std::vector<std::string> names;
  for (const auto& v : columns) {
    std::string name;
    for (long long x : v) name += (q <= 10 ? std::to_string(x) : std::to_string(x) + ".");
    names.push_back(name);
  }
  return Matroid::FromMatrix(FieldMatrix::FromColumns(PrimeModulus(q), r, columns), names);
}

FieldMatrix GenericColumns(int r, int n, int p) {
  const PrimeModulus modulus(p);
  if (r < 0 || n < 0 || r > n) {
    throw std::invalid_argument("uniform matroid needs 0 <= r <= n");
  }
  if (r == 0) return FieldMatrix(modulus, 0, n);
  if (r == 1) return FieldMatrix::FromRows(modulus, {std::vector<long long>(n, 1)});
  std::vector<std::vector<long long>> candidates;
  std::set<std::vector<long long>> seen;
  auto add = [&](std::vector<long long> v) {
    if (seen.insert(v).second) candidates.push_back(std::move(v));
  };
  for (int i = 0; i < r; ++i) {
    std::vector<long long> unit(r, 0);
    unit[i] = 1;
    add(unit);
  }
  for (int x = 0; x < p; ++x) {
    std::vector<long long> v(r, 1);
    for (int i = 1; i < r; ++i) v[i] = (v[i - 1] * x) % p;
    add(v);
  }
  for (auto& v : NormalizedVectors(r, p)) add(v);

  GenericSearch search(r, n, modulus, candidates);
  if (!search.Run()) {
    throw std::invalid_argument("GF(" + std::to_string(p) + ") has no " + std::to_string(n) +
                                " columns in general position in dimension " +
                                std::to_string(r));
  }
  return FieldMatrix::FromColumns(modulus, r, search.chosen());
}

Matroid Uniform(int r, int n, int p) { return Matroid::FromMatrix(GenericColumns(r, n, p)); }

Matroid Uniform(int r, int n) {
  int p = std::max(n - 1, 2);
  while (!IsPrime(p)) ++p;
  return Uniform(r, n, p);
}

Matroid Vamos() {
  const SubsetMask pairs[4] = {SubsetMask{0, 1}, SubsetMask{2, 3}, SubsetMask{4, 5},
                               SubsetMask{6, 7}};
  const std::set<SubsetMask> non_bases = {pairs[0] | pairs[1], pairs[0] | pairs[2],
                                          pairs[0] | pairs[3], pairs[1] | pairs[2],
                                          pairs[2] | pairs[3]};
  std::vector<SubsetMask> bases;
  ForEachSubsetOfSize(8, 4, [&](SubsetMask s) {
    if (!non_bases.contains(s)) bases.push_back(s);
  });
  return Matroid::FromBases(8, bases);
}

Matroid NonFano() {
  std::vector<std::vector<long long>> columns;
  std::vector<std::string> names;
  for (int code = 1; code < 8; ++code) {
    columns.push_back({(code >> 2) & 1, (code >> 1) & 1, code & 1});
    names.push_back(std::to_string((code >> 2) & 1) + std::to_string((code >> 1) & 1) +
                    std::to_string(code & 1));
  }
  return Matroid::FromMatrix(FieldMatrix::FromColumns(PrimeModulus(3), 3, columns), names);
}

Matroid ResolveFixture(const std::string& name) {
  const std::vector<std::string> summands = Split(name, '+');
  if (summands.size() > 1) {
    Matroid sum = ResolveFixture(summands.front());
    for (size_t i = 1; i < summands.size(); ++i) sum = DirectSum(sum, ResolveFixture(summands[i]));
    return sum;
  }
  if (name == "fano") return ProjectiveGeometry(2, 2);
  if (name == "vamos") return Vamos();
  if (name == "nonfano") return NonFano();

  const std::vector<std::string> parts = Split(name, ':');
  const std::string& kind = parts.front();
  if (parts.size() >= 2) {
    const std::vector<std::string> args = Split(parts[1], ',');
    if (kind == "pg" && parts.size() == 2 && args.size() == 2) {
      return ProjectiveGeometry(ParseInt(args[0], name), ParseInt(args[1], name));
    }
    if ((kind == "u" || kind == "uniform") && args.size() == 2 && parts.size() <= 3) {
      const int r = ParseInt(args[0], name);
      const int n = ParseInt(args[1], name);
      if (parts.size() == 2) return Uniform(r, n);
      if (parts[2].rfind("p=", 0) == 0) return Uniform(r, n, ParseInt(parts[2].substr(2), name));
    }
  }
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

std::vector<std::string> FixtureExamples() {
  return {"fano", "pg:2,3", "pg:3,2", "u:2,4:p=5", "uniform:3,4:p=3", "vamos", "nonfano",
          "u:2,3+u:2,3"};
}

}  // namespace madj
