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

#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "resforge/kelem.hpp"

namespace resforge {

/// Dense rows x cols matrix over K, row-major.
class KMatrix {
 public:
  KMatrix() = default;
  KMatrix(std::shared_ptr<const RingCtx> ring, std::size_t rows, std::size_t cols);
  KMatrix(std::shared_ptr<const RingCtx> ring, std::size_t rows, std::size_t cols,
          std::vector<KElem> entries);

  static KMatrix identity(std::shared_ptr<const RingCtx> ring, std::size_t m);
  static KMatrix diagonal(const std::vector<KElem>& d);
  static KMatrix scalar(const KElem& a, std::size_t m);

  const std::shared_ptr<const RingCtx>& ring_ptr() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  KElem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const KElem& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  const std::vector<KElem>& entries() const { return a_; }

  KMatrix transpose() const;
  /// Throws DomainError when singular to the available precision.
  KMatrix inverse() const;
  KElem det() const;

  std::vector<KElem> column(std::size_t c) const;
  void swap_columns(std::size_t i, std::size_t j);
  void swap_rows(std::size_t i, std::size_t j);
  /// col_dst += s * col_src
  void add_column_multiple(std::size_t dst, std::size_t src, const KElem& s);
  void add_row_multiple(std::size_t dst, std::size_t src, const KElem& s);
  void scale_column(std::size_t c, const KElem& s);

  /// Smallest valuation of an entry (KElem::kExact for the zero matrix).
  int min_valuation() const;

  friend KMatrix operator*(const KMatrix& a, const KMatrix& b);
  friend KMatrix operator+(const KMatrix& a, const KMatrix& b);
  std::vector<KElem> apply(const std::vector<KElem>& x) const;

  /// Entrywise equality at the available precision.
  bool same_value(const KMatrix& other) const;

 private:
  std::shared_ptr<const RingCtx> ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<KElem> a_;
};

/// p^v x mod p^e as a ring element; x must be integral and known mod p^e.
GrElem to_ring(const KElem& x, int e);

}  // namespace resforge
