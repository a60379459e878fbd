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

#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace madj {
namespace {

bool IsPrime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Row-major scratch matrix used by the elimination routines.
struct Dense {
  int rows;
  int cols;
  std::vector<Residue> a;
  Residue& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
};

// In-place reduction to RREF; returns pivot columns.
std::vector<int> ReduceInPlace(Dense& d, PrimeModulus p) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < d.cols && row < d.rows; ++col) {
    int pivot_row = -1;
    for (int r = row; r < d.rows; ++r) {
      if (d.at(r, col) != 0) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != row) {
      for (int c = 0; c < d.cols; ++c) std::swap(d.at(row, c), d.at(pivot_row, c));
    }
    const Residue inv = Inverse(d.at(row, col), p);
    for (int c = col; c < d.cols; ++c) d.at(row, c) = p.Mul(d.at(row, c), inv);
    for (int r = 0; r < d.rows; ++r) {
      if (r == row) continue;
      const Residue f = d.at(r, col);
      if (f == 0) continue;
      for (int c = col; c < d.cols; ++c) {
        d.at(r, c) = p.Sub(d.at(r, c), p.Mul(f, d.at(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Dense ToDense(const FieldMatrix& m) {
  Dense d{m.rows(), m.cols(), std::vector<Residue>(static_cast<size_t>(m.rows()) * m.cols())};
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) d.at(r, c) = m.at(r, c);
  }
  return d;
}

}  // namespace

PrimeModulus::PrimeModulus(int p) : p_(p) {
  if (p < 2 || p > kMaxPrime || !IsPrime(p)) {
    throw std::invalid_argument("modulus must be a prime in [2, 251], got " +
                                std::to_string(p));
  }
}

Residue Inverse(long long a, PrimeModulus p) {
  const long long n = p.value();
  long long x = a % n;
  if (x < 0) x += n;
  if (x == 0) throw std::domain_error("no inverse: 0 mod " + std::to_string(n));
  // Extended Euclid on (x, n).
  long long old_r = x, r = n, old_s = 1, s = 0;
  while (r != 0) {
    const long long q = old_r / r;
    std::tie(old_r, r) = std::pair(r, old_r - q * r);
    std::tie(old_s, s) = std::pair(s, old_s - q * s);
  }
  return p.Reduce(old_s);
}

FieldVector::FieldVector(PrimeModulus p, std::vector<Residue> entries)
    : p_(p), entries_(std::move(entries)) {
  for (Residue& e : entries_) e = p_.Reduce(e);
}

FieldVector FieldVector::FromInts(PrimeModulus p, const std::vector<long long>& v) {
  std::vector<Residue> e(v.size());
  for (size_t i = 0; i < v.size(); ++i) e[i] = p.Reduce(v[i]);
  return FieldVector(p, std::move(e));
}

bool FieldVector::IsZero() const {
  for (Residue e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

SubsetMask FieldVector::Support() const {
  SubsetMask s;
  for (int i = 0; i < size(); ++i) {
    if (entries_[i] != 0) s = s.With(i);
  }
  return s;
}

void FieldVector::NormalizeProjective() {
  for (Residue e : entries_) {
    if (e == 0) continue;
    const Residue inv = Inverse(e, p_);
    for (Residue& x : entries_) x = p_.Mul(x, inv);
    return;
  }
}

FieldVector FieldVector::ProjectivelyNormalized() const {
  FieldVector v = *this;
  v.NormalizeProjective();
  return v;
}

FieldMatrix::FieldMatrix(PrimeModulus p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

FieldMatrix FieldMatrix::FromColumns(PrimeModulus p, int rows,
                                     const std::vector<std::vector<long long>>& columns) {
  FieldMatrix m(p, rows, static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (static_cast<int>(columns[c].size()) != rows) {
      throw std::invalid_argument("column " + std::to_string(c) + " has length " +
                                  std::to_string(columns[c].size()) + ", expected " +
                                  std::to_string(rows));
    }
    for (int r = 0; r < rows; ++r) m.set(r, c, columns[c][r]);
  }
  return m;
}

FieldMatrix FieldMatrix::FromRows(PrimeModulus p,
                                  const std::vector<std::vector<long long>>& rows) {
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  FieldMatrix m(p, static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols) {
      throw std::invalid_argument("ragged rows");
    }
    for (int c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

FieldMatrix FieldMatrix::FromColumnVectors(PrimeModulus p, int rows,
                                           const std::vector<FieldVector>& columns) {
  FieldMatrix m(p, rows, static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (int r = 0; r < rows; ++r) m.set(r, c, columns[c][r]);
  }
  return m;
}

FieldMatrix FieldMatrix::FromRowVectors(PrimeModulus p, int cols,
                                        const std::vector<FieldVector>& rows) {
  FieldMatrix m(p, static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (int c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

FieldMatrix FieldMatrix::Identity(PrimeModulus p, int n) {
  FieldMatrix m(p, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FieldVector FieldMatrix::ColumnVector(int c) const {
  auto col = Column(c);
  return FieldVector(p_, std::vector<Residue>(col.begin(), col.end()));
}

FieldVector FieldMatrix::RowVector(int r) const {
  std::vector<Residue> v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
  return FieldVector(p_, std::move(v));
}

FieldMatrix FieldMatrix::Transposed() const {
  FieldMatrix t(p_, cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  }
  return t;
}

FieldMatrix FieldMatrix::SelectColumns(const std::vector<int>& columns) const {
  FieldMatrix m(p_, rows_, static_cast<int>(columns.size()));
  for (size_t j = 0; j < columns.size(); ++j) {
    for (int r = 0; r < rows_; ++r) m.set(r, static_cast<int>(j), at(r, columns[j]));
  }
  return m;
}

FieldMatrix FieldMatrix::SelectRows(const std::vector<int>& rows) const {
  FieldMatrix m(p_, static_cast<int>(rows.size()), cols_);
  for (size_t i = 0; i < rows.size(); ++i) {
    for (int c = 0; c < cols_; ++c) m.set(static_cast<int>(i), c, at(rows[i], c));
  }
  return m;
}

FieldVector FieldMatrix::Apply(const FieldVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in Apply");
  FieldVector out(p_, rows_);
  for (int c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    for (int r = 0; r < rows_; ++r) out[r] = p_.Add(out[r], p_.Mul(at(r, c), v[c]));
  }
  return out;
}

FieldVector FieldMatrix::LeftApply(const FieldVector& v) const {
  if (v.size() != rows_) throw std::invalid_argument("dimension mismatch in LeftApply");
  FieldVector out(p_, cols_);
  for (int c = 0; c < cols_; ++c) {
    Residue acc = 0;
    for (int r = 0; r < rows_; ++r) acc = p_.Add(acc, p_.Mul(v[r], at(r, c)));
    out[c] = acc;
  }
  return out;
}

std::string FieldMatrix::DebugString() const {
  std::ostringstream os;
  os << "GF(" << p_.value() << ") " << rows_ << "x" << cols_ << " [";
  for (int r = 0; r < rows_; ++r) {
    if (r > 0) os << "; ";
    for (int c = 0; c < cols_; ++c) os << (c > 0 ? " " : "") << int{at(r, c)};
  }
  os << "]";
  return os.str();
}

RrefResult Rref(const FieldMatrix& a) {
  Dense d = ToDense(a);
  std::vector<int> pivots = ReduceInPlace(d, a.modulus());
  FieldMatrix out(a.modulus(), a.rows(), a.cols());
  for (int r = 0; r < d.rows; ++r) {
    for (int c = 0; c < d.cols; ++c) out.set(r, c, d.at(r, c));
  }
  const int rank = static_cast<int>(pivots.size());
  return RrefResult{std::move(out), std::move(pivots), rank};
}

std::vector<FieldVector> KernelBasis(const FieldMatrix& a) {
  const PrimeModulus p = a.modulus();
  RrefResult rr = Rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : rr.pivots) is_pivot[c] = true;

  std::vector<FieldVector> basis;
  for (int free_col = 0; free_col < a.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    FieldVector v(p, a.cols());
    v[free_col] = 1;
    for (int i = 0; i < rr.rank; ++i) {
      v[rr.pivots[i]] = p.Neg(rr.reduced.at(i, free_col));
    }
    v.NormalizeProjective();
    basis.push_back(std::move(v));
  }
  return basis;
}

EchelonBasis::EchelonBasis(PrimeModulus p, int dim) : p_(p), dim_(dim) {}

bool EchelonBasis::Insert(std::span<const Residue> v) {
  std::vector<Residue> w(v.begin(), v.end());
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Residue f = w[pivots_[i]];
    if (f == 0) continue;
    const std::vector<Residue>& row = rows_[i];
    for (int c = pivots_[i]; c < dim_; ++c) w[c] = p_.Sub(w[c], p_.Mul(f, row[c]));
  }
  int lead = -1;
  for (int c = 0; c < dim_; ++c) {
    if (w[c] != 0) {
      lead = c;
      break;
    }
  }
  if (lead < 0) return false;
  const Residue inv = Inverse(w[lead], p_);
  for (int c = lead; c < dim_; ++c) w[c] = p_.Mul(w[c], inv);
  rows_.push_back(std::move(w));
  pivots_.push_back(lead);
  return true;
}

int SubsetRank(const FieldMatrix& a, SubsetMask s) {
  if (s.empty() || a.rows() == 0) return 0;
  EchelonBasis basis(a.modulus(), a.rows());
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) {
    const int c = std::countr_zero(b);
    basis.Insert(a.Column(c));
    if (basis.rank() == a.rows()) break;
  }
  return basis.rank();
}

int VectorRank(PrimeModulus p, std::span<const FieldVector> vectors) {
  if (vectors.empty()) return 0;
  const int dim = vectors[0].size();
  EchelonBasis basis(p, dim);
  for (const FieldVector& v : vectors) {
    if (v.size() != dim) throw std::invalid_argument("vector length mismatch");
    basis.Insert(v.entries());
    if (basis.rank() == dim) break;
  }
  return basis.rank();
}

}  // namespace madj
