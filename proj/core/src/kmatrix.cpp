/* Copyright 2026 The resforge Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "resforge/kmatrix.hpp"

#include <algorithm>
#include <string>

#include "resforge/error.hpp"

namespace resforge {

KMatrix::KMatrix(std::shared_ptr<const RingCtx> ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  a_.assign(rows * cols, KElem::zero(ring_));
}

KMatrix::KMatrix(std::shared_ptr<const RingCtx> ring, std::size_t rows, std::size_t cols,
                 std::vector<KElem> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) throw DomainError("KMatrix: wrong number of entries");
}

KMatrix KMatrix::identity(std::shared_ptr<const RingCtx> ring, std::size_t m) {
  KMatrix r(ring, m, m);
  for (std::size_t i = 0; i < m; ++i) r.at(i, i) = KElem::from_int(ring, 1);
  return r;
}

KMatrix KMatrix::diagonal(const std::vector<KElem>& d) {
  KMatrix r(d.front().ring_ptr(), d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) r.at(i, i) = d[i];
  return r;
}

KMatrix KMatrix::scalar(const KElem& a, std::size_t m) {
  return diagonal(std::vector<KElem>(m, a));
}

KMatrix KMatrix::transpose() const {
  KMatrix r(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  }
  return r;
}

KMatrix KMatrix::inverse() const {
  if (rows_ != cols_) throw DomainError("KMatrix: inverse of a non-square matrix");
  const std::size_t m = rows_;
  KMatrix a = *this;
  KMatrix inv = identity(ring_, m);
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t best = c;
    for (std::size_t r = c + 1; r < m; ++r) {
      if (pivot_before(a.at(r, c), a.at(best, c))) best = r;
    }
    if (a.at(best, c).is_zero()) {
      throw DomainError("KMatrix: matrix is singular at the available precision");
    }
    a.swap_rows(c, best);
    inv.swap_rows(c, best);
    const KElem piv = a.at(c, c).inv();
    for (std::size_t j = 0; j < m; ++j) {
      a.at(c, j) = a.at(c, j) * piv;
      inv.at(c, j) = inv.at(c, j) * piv;
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || a.at(r, c).is_exact_zero()) continue;
      const KElem s = -a.at(r, c);
      a.add_row_multiple(r, c, s);
      inv.add_row_multiple(r, c, s);
    }
  }
  return inv;
}

KElem KMatrix::det() const {
  if (rows_ != cols_) throw DomainError("KMatrix: determinant of a non-square matrix");
  KMatrix a = *this;
  KElem d = KElem::from_int(ring_, 1);
  for (std::size_t c = 0; c < rows_; ++c) {
    std::size_t best = c;
    for (std::size_t r = c + 1; r < rows_; ++r) {
      if (pivot_before(a.at(r, c), a.at(best, c))) best = r;
    }
    if (a.at(best, c).is_zero()) return a.at(best, c) * d;
    if (best != c) {
      a.swap_rows(c, best);
      d = -d;
    }
    const KElem piv = a.at(c, c);
    d = d * piv;
    const KElem pinv = piv.inv();
    for (std::size_t r = c + 1; r < rows_; ++r) {
      if (a.at(r, c).is_exact_zero()) continue;
      a.add_row_multiple(r, c, -(a.at(r, c) * pinv));
    }
  }
  return d;
}

std::vector<KElem> KMatrix::column(std::size_t c) const {
  std::vector<KElem> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void KMatrix::swap_columns(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void KMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void KMatrix::add_column_multiple(std::size_t dst, std::size_t src, const KElem& s) {
  if (s.is_exact_zero()) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (at(r, src).is_exact_zero()) continue;
    at(r, dst) = at(r, dst) + s * at(r, src);
  }
}

void KMatrix::add_row_multiple(std::size_t dst, std::size_t src, const KElem& s) {
  if (s.is_exact_zero()) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (at(src, c).is_exact_zero()) continue;
    at(dst, c) = at(dst, c) + s * at(src, c);
  }
}

void KMatrix::scale_column(std::size_t c, const KElem& s) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = at(r, c) * s;
}

int KMatrix::min_valuation() const {
  int v = KElem::kExact;
  for (const auto& x : a_) v = std::min(v, x.val());
  return v;
}

KMatrix operator*(const KMatrix& a, const KMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("KMatrix: shape mismatch in product");
  KMatrix r(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const KElem& x = a.at(i, k);
      if (x.is_exact_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b.at(k, j).is_exact_zero()) continue;
        r.at(i, j) = r.at(i, j) + x * b.at(k, j);
      }
    }
  }
  return r;
}

KMatrix operator+(const KMatrix& a, const KMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("KMatrix: shape mismatch in sum");
  KMatrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
  return r;
}

std::vector<KElem> KMatrix::apply(const std::vector<KElem>& x) const {
  if (x.size() != cols_) throw DomainError("KMatrix: vector length mismatch");
  std::vector<KElem> y(rows_, KElem::zero(ring_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!at(i, j).is_exact_zero() && !x[j].is_exact_zero()) y[i] = y[i] + at(i, j) * x[j];
    }
  }
  return y;
}

bool KMatrix::same_value(const KMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!a_[i].same_value(other.a_[i])) return false;
  }
  return true;
}

GrElem to_ring(const KElem& x, int e) {
  const RingCtx& ring = x.ring();
  if (x.is_zero()) {
    if (x.val() < e) throw PrecisionError("value known only modulo p^" + std::to_string(x.val()));
    return ring.zero();
  }
  if (x.val() < 0) throw DomainError("element with valuation " + std::to_string(x.val()) + " is not integral");
  if (x.val() >= e) return ring.zero();
  if (x.abs_precision() < e) {
    throw PrecisionError("value known only modulo p^" + std::to_string(x.abs_precision()));
  }
  return ring.shift_up(x.unit(), x.val(), e);
}

}  // namespace resforge
