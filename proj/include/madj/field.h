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

// Exact linear algebra over prime fields GF(p), 2 <= p <= 251.
//
// Residues are stored as one byte each. Matrices are column-major because
// every matroid operation works on column subsets.

#ifndef MADJ_FIELD_H_
#define MADJ_FIELD_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "madj/subset_mask.h"

namespace madj {

using Residue = std::uint8_t;

inline constexpr int kMaxPrime = 251;

class PrimeModulus {
 public:
  // Throws std::invalid_argument unless p is a prime in [2, 251].
  explicit PrimeModulus(int p);

  int value() const { return p_; }

  Residue Reduce(long long a) const {
    long long r = a % p_;
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue Add(Residue a, Residue b) const {
    int s = a + b;
    return static_cast<Residue>(s >= p_ ? s - p_ : s);
  }
  Residue Sub(Residue a, Residue b) const {
    int s = a - b;
    return static_cast<Residue>(s < 0 ? s + p_ : s);
  }
  Residue Mul(Residue a, Residue b) const {
    return static_cast<Residue>((static_cast<int>(a) * b) % p_);
  }
  Residue Neg(Residue a) const {
    return static_cast<Residue>(a == 0 ? 0 : p_ - a);
  }

  bool operator==(const PrimeModulus&) const = default;

 private:
  int p_;
};

// Multiplicative inverse of a modulo p. Throws std::domain_error("no
// inverse") when a is 0 mod p.
Residue Inverse(long long a, PrimeModulus p);

class FieldVector {
 public:
  FieldVector(PrimeModulus p, std::vector<Residue> entries);
  FieldVector(PrimeModulus p, int length) : FieldVector(p, std::vector<Residue>(length, 0)) {}

  // Reduces arbitrary integers modulo p.
  static FieldVector FromInts(PrimeModulus p, const std::vector<long long>& v);

  PrimeModulus modulus() const { return p_; }
  int size() const { return static_cast<int>(entries_.size()); }
  Residue operator[](int i) const { return entries_[i]; }
  Residue& operator[](int i) { return entries_[i]; }
  std::span<const Residue> entries() const { return entries_; }

  bool IsZero() const;
  SubsetMask Support() const;
  // Scales so the first nonzero entry is 1. No-op on the zero vector.
  void NormalizeProjective();
  FieldVector ProjectivelyNormalized() const;

  bool operator==(const FieldVector& o) const {
    return p_ == o.p_ && entries_ == o.entries_;
  }

 private:
  PrimeModulus p_;
  std::vector<Residue> entries_;
};

class FieldMatrix {
 public:
  // rows x cols zero matrix. Either dimension may be zero.
  FieldMatrix(PrimeModulus p, int rows, int cols);

  // Each inner vector is one column; all must have length `rows`.
  static FieldMatrix FromColumns(PrimeModulus p, int rows,
                                 const std::vector<std::vector<long long>>& columns);
  static FieldMatrix FromRows(PrimeModulus p,
                              const std::vector<std::vector<long long>>& rows);
  static FieldMatrix FromColumnVectors(PrimeModulus p, int rows,
                                       const std::vector<FieldVector>& columns);
  static FieldMatrix FromRowVectors(PrimeModulus p, int cols,
                                    const std::vector<FieldVector>& rows);
  static FieldMatrix Identity(PrimeModulus p, int n);

  PrimeModulus modulus() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Residue at(int r, int c) const { return data_[static_cast<size_t>(c) * rows_ + r]; }
  void set(int r, int c, long long v) {
    data_[static_cast<size_t>(c) * rows_ + r] = p_.Reduce(v);
  }
  std::span<const Residue> Column(int c) const {
    return std::span<const Residue>(data_).subspan(static_cast<size_t>(c) * rows_, rows_);
  }
  FieldVector ColumnVector(int c) const;
  FieldVector RowVector(int r) const;

  FieldMatrix Transposed() const;
  FieldMatrix SelectColumns(const std::vector<int>& columns) const;
  FieldMatrix SelectRows(const std::vector<int>& rows) const;
  // A * v.
  FieldVector Apply(const FieldVector& v) const;
  // v^T * A, a vector of length cols().
  FieldVector LeftApply(const FieldVector& v) const;

  bool operator==(const FieldMatrix& o) const {
    return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  std::string DebugString() const;

 private:
  PrimeModulus p_;
  int rows_;
  int cols_;
  std::vector<Residue> data_;
};

struct RrefResult {
  FieldMatrix reduced;
  std::vector<int> pivots;  // increasing
  int rank = 0;
};

RrefResult Rref(const FieldMatrix& a);

// Basis of {x : A x = 0}, one vector per free column of rref(A), each
// projectively normalized. Empty iff the columns of A are independent.
std::vector<FieldVector> KernelBasis(const FieldMatrix& a);

// Rank of the columns of A indexed by S.
int SubsetRank(const FieldMatrix& a, SubsetMask s);

// Rank of an arbitrary list of equal-length vectors over p.
int VectorRank(PrimeModulus p, std::span<const FieldVector> vectors);

// Incremental row-echelon basis: inserting a vector reports whether it was
// independent of everything inserted so far.
class EchelonBasis {
 public:
  EchelonBasis(PrimeModulus p, int dim);

  // Returns true iff v enlarged the span. Works on a copy of v.
  bool Insert(std::span<const Residue> v);
  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  PrimeModulus p_;
  int dim_;
  std::vector<std::vector<Residue>> rows_;
  std::vector<int> pivots_;
};

}  // namespace madj

#endif  // MADJ_FIELD_H_
