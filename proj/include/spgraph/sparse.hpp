// Copyright 2026 The spgraph Authors
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

// Compressed-row sparse integer matrices over the (+, x) counting semiring.
//
// Every operation is a pure function returning a new matrix. Results never
// hold an explicit zero, so nnz() and filter_eq() have a single meaning.

#ifndef SPGRAPH_SPARSE_HPP
#define SPGRAPH_SPARSE_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spgraph/error.hpp"

namespace spgraph {

using Index = std::uint32_t;
using Value = std::int64_t;
using DenseVector = std::vector<Value>;

struct Triplet {
  Index row;
  Index col;
  Value value;
};

class SparseMatrix {
 public:
  SparseMatrix() : row_ptr_(1, 0) {}

  /// An all-zero nrows x ncols matrix.
  SparseMatrix(std::size_t nrows, std::size_t ncols)
      : nrows_(nrows), ncols_(ncols), row_ptr_(nrows + 1, 0) {
    check_dims(nrows, ncols);
  }

  /// Builds from unordered triplets. Duplicate coordinates are summed and
  /// resulting zeros dropped.
  static SparseMatrix from_triplets(std::size_t nrows, std::size_t ncols,
                                    std::vector<Triplet> triplets) {
    check_dims(nrows, ncols);
    for (const auto& t : triplets) {
      if (t.row >= nrows || t.col >= ncols) {
        throw ContractError("triplet (" + std::to_string(t.row) + ", " +
                            std::to_string(t.col) + ") outside " +
                            shape_string(nrows, ncols));
      }
    }
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
      return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    SparseMatrix m(nrows, ncols);
    m.cols_.reserve(triplets.size());
    m.vals_.reserve(triplets.size());
    std::size_t i = 0;
    for (std::size_t r = 0; r < nrows; ++r) {
      while (i < triplets.size() && triplets[i].row == r) {
        const Index c = triplets[i].col;
        Value sum = 0;
        for (; i < triplets.size() && triplets[i].row == r && triplets[i].col == c; ++i) {
          sum += triplets[i].value;
        }
        if (sum != 0) {
          m.cols_.push_back(c);
          m.vals_.push_back(sum);
        }
      }
      m.row_ptr_[r + 1] = m.cols_.size();
    }
    return m;
  }

  /// Adopts raw CSR arrays after checking every structural invariant.
  static SparseMatrix from_csr(std::size_t nrows, std::size_t ncols,
                               std::vector<std::size_t> row_ptr, std::vector<Index> cols,
                               std::vector<Value> vals) {
    check_dims(nrows, ncols);
    SparseMatrix m;
    m.nrows_ = nrows;
    m.ncols_ = ncols;
    m.row_ptr_ = std::move(row_ptr);
    m.cols_ = std::move(cols);
    m.vals_ = std::move(vals);
    if (auto problem = m.structural_problem()) throw ContractError(*problem);
    return m;
  }

  static SparseMatrix identity(std::size_t n) {
    std::vector<std::size_t> ptr(n + 1);
    std::iota(ptr.begin(), ptr.end(), std::size_t{0});
    std::vector<Index> cols(n);
    std::iota(cols.begin(), cols.end(), Index{0});
    return from_csr(n, n, std::move(ptr), std::move(cols), std::vector<Value>(n, 1));
  }

  std::size_t nrows() const noexcept { return nrows_; }
  std::size_t ncols() const noexcept { return ncols_; }
  std::size_t nnz() const noexcept { return cols_.size(); }
  bool empty() const noexcept { return cols_.empty(); }

  std::span<const Index> row_cols(std::size_t r) const {
    return {cols_.data() + row_ptr_[r], row_ptr_[r + 1] - row_ptr_[r]};
  }
  std::span<const Value> row_values(std::size_t r) const {
    return {vals_.data() + row_ptr_[r], row_ptr_[r + 1] - row_ptr_[r]};
  }
  std::size_t row_nnz(std::size_t r) const { return row_ptr_[r + 1] - row_ptr_[r]; }

  std::span<const std::size_t> row_ptr() const noexcept { return row_ptr_; }
  std::span<const Index> col_indices() const noexcept { return cols_; }
  std::span<const Value> values() const noexcept { return vals_; }

  /// Entry lookup by binary search; zero when not stored.
  Value at(std::size_t r, std::size_t c) const {
    if (r >= nrows_ || c >= ncols_) {
      throw ContractError("index (" + std::to_string(r) + ", " + std::to_string(c) +
                          ") outside " + shape());
    }
    const auto cols = row_cols(r);
    const auto it = std::lower_bound(cols.begin(), cols.end(), static_cast<Index>(c));
    if (it == cols.end() || *it != c) return 0;
    return row_values(r)[static_cast<std::size_t>(it - cols.begin())];
  }

  std::vector<Triplet> triplets() const {
    std::vector<Triplet> out;
    out.reserve(nnz());
    for (std::size_t r = 0; r < nrows_; ++r) {
      for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
        out.push_back({static_cast<Index>(r), cols_[k], vals_[k]});
      }
    }
    return out;
  }

  std::string shape() const { return shape_string(nrows_, ncols_); }

  /// Describes the first broken invariant, if any. Used by from_csr and tests.
  std::optional<std::string> structural_problem() const {
    if (row_ptr_.size() != nrows_ + 1) return "row pointer length differs from nrows + 1";
    if (row_ptr_.front() != 0) return "row pointer does not start at 0";
    if (row_ptr_.back() != cols_.size()) return "row pointer does not end at nnz";
    if (cols_.size() != vals_.size()) return "column and value arrays differ in length";
    for (std::size_t r = 0; r < nrows_; ++r) {
      if (row_ptr_[r] > row_ptr_[r + 1]) return "row pointer decreases at row " + std::to_string(r);
      for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
        if (cols_[k] >= ncols_) return "column out of range in row " + std::to_string(r);
        if (vals_[k] == 0) return "stored zero in row " + std::to_string(r);
        if (k > row_ptr_[r] && cols_[k - 1] >= cols_[k]) {
          return "columns not strictly increasing in row " + std::to_string(r);
        }
      }
    }
    return std::nullopt;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.nrows_ == b.nrows_ && a.ncols_ == b.ncols_ && a.row_ptr_ == b.row_ptr_ &&
           a.cols_ == b.cols_ && a.vals_ == b.vals_;
  }

  static std::string shape_string(std::size_t nrows, std::size_t ncols) {
    return std::to_string(nrows) + "x" + std::to_string(ncols);
  }

 private:
  static void check_dims(std::size_t nrows, std::size_t ncols) {
    constexpr std::size_t limit = std::numeric_limits<Index>::max();
    if (nrows > limit || ncols > limit) {
      throw ContractError("matrix dimension " + shape_string(nrows, ncols) +
                          " exceeds the 32-bit index range");
    }
  }

  std::size_t nrows_ = 0;
  std::size_t ncols_ = 0;
  std::vector<std::size_t> row_ptr_;
  std::vector<Index> cols_;
  std::vector<Value> vals_;
};

namespace detail {

// Incremental CSR writer; rows must be appended in order.
class CsrBuilder {
 public:
  CsrBuilder(std::size_t nrows, std::size_t ncols, std::size_t reserve = 0)
      : nrows_(nrows), ncols_(ncols) {
    ptr_.reserve(nrows + 1);
    ptr_.push_back(0);
    cols_.reserve(reserve);
    vals_.reserve(reserve);
  }

  void push(Index col, Value v) {
    if (v != 0) {
      cols_.push_back(col);
      vals_.push_back(v);
    }
  }
  void end_row() { ptr_.push_back(cols_.size()); }

  SparseMatrix finish() && {
    return SparseMatrix::from_csr(nrows_, ncols_, std::move(ptr_), std::move(cols_),
                                  std::move(vals_));
  }

 private:
  std::size_t nrows_, ncols_;
  std::vector<std::size_t> ptr_;
  std::vector<Index> cols_;
  std::vector<Value> vals_;
};

inline void require_same_shape(const SparseMatrix& a, const SparseMatrix& b, const char* op) {
  if (a.nrows() != b.nrows() || a.ncols() != b.ncols()) {
    throw ContractError(std::string(op) + ": shape mismatch " + a.shape() + " vs " + b.shape());
  }
}

// Merges two sorted rows, combining values with op and dropping zeros.
template <class Op>
SparseMatrix merge_union(const SparseMatrix& a, const SparseMatrix& b, Op op) {
  CsrBuilder out(a.nrows(), a.ncols(), a.nnz() + b.nnz());
  for (std::size_t r = 0; r < a.nrows(); ++r) {
    const auto ac = a.row_cols(r), bc = b.row_cols(r);
    const auto av = a.row_values(r), bv = b.row_values(r);
    std::size_t i = 0, j = 0;
    while (i < ac.size() || j < bc.size()) {
      if (j == bc.size() || (i < ac.size() && ac[i] < bc[j])) {
        out.push(ac[i], op(av[i], Value{0}));
        ++i;
      } else if (i == ac.size() || bc[j] < ac[i]) {
        out.push(bc[j], op(Value{0}, bv[j]));
        ++j;
      } else {
        out.push(ac[i], op(av[i], bv[j]));
        ++i;
        ++j;
      }
    }
    out.end_row();
  }
  return std::move(out).finish();
}

}  // namespace detail

/// Matrix product a * b, computed row by row with a dense accumulator.
inline SparseMatrix spgemm(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.ncols() != b.nrows()) {
    throw ContractError("spgemm: inner dimensions differ, " + a.shape() + " * " + b.shape());
  }
  const std::size_t n = b.ncols();
  std::vector<Value> acc(n, 0);
  std::vector<std::size_t> mark(n, std::numeric_limits<std::size_t>::max());
  std::vector<Index> touched;
  detail::CsrBuilder out(a.nrows(), n);
  for (std::size_t r = 0; r < a.nrows(); ++r) {
    touched.clear();
    const auto ac = a.row_cols(r);
    const auto av = a.row_values(r);
    for (std::size_t i = 0; i < ac.size(); ++i) {
      const auto bc = b.row_cols(ac[i]);
      const auto bv = b.row_values(ac[i]);
      for (std::size_t j = 0; j < bc.size(); ++j) {
        const Index c = bc[j];
        if (mark[c] != r) {
          mark[c] = r;
          acc[c] = 0;
          touched.push_back(c);
        }
        acc[c] += av[i] * bv[j];
      }
    }
    std::sort(touched.begin(), touched.end());
    for (Index c : touched) out.push(c, acc[c]);
    out.end_row();
  }
  return std::move(out).finish();
}

/// hadamard(spgemm(a, b), mask) without materializing the full product.
/// Only coordinates stored in mask are accumulated.
inline SparseMatrix masked_spgemm(const SparseMatrix& a, const SparseMatrix& b,
                                  const SparseMatrix& mask) {
  if (a.ncols() != b.nrows()) {
    throw ContractError("masked_spgemm: inner dimensions differ, " + a.shape() + " * " +
                        b.shape());
  }
  if (mask.nrows() != a.nrows() || mask.ncols() != b.ncols()) {
    throw ContractError("masked_spgemm: mask " + mask.shape() + " does not match product " +
                        SparseMatrix::shape_string(a.nrows(), b.ncols()));
  }
  const std::size_t n = b.ncols();
  std::vector<Value> acc(n, 0);
  std::vector<std::size_t> mark(n, std::numeric_limits<std::size_t>::max());
  detail::CsrBuilder out(a.nrows(), n, mask.nnz());
  for (std::size_t r = 0; r < a.nrows(); ++r) {
    const auto mc = mask.row_cols(r);
    if (!mc.empty()) {
      for (Index c : mc) {
        mark[c] = r;
        acc[c] = 0;
      }
      const auto ac = a.row_cols(r);
      const auto av = a.row_values(r);
      for (std::size_t i = 0; i < ac.size(); ++i) {
        const auto bc = b.row_cols(ac[i]);
        const auto bv = b.row_values(ac[i]);
        for (std::size_t j = 0; j < bc.size(); ++j) {
          if (mark[bc[j]] == r) acc[bc[j]] += av[i] * bv[j];
        }
      }
      const auto mv = mask.row_values(r);
      for (std::size_t k = 0; k < mc.size(); ++k) out.push(mc[k], acc[mc[k]] * mv[k]);
    }
    out.end_row();
  }
  return std::move(out).finish();
}

/// Entrywise product; the result pattern is the intersection of both patterns.
inline SparseMatrix hadamard(const SparseMatrix& a, const SparseMatrix& b) {
  detail::require_same_shape(a, b, "hadamard");
  detail::CsrBuilder out(a.nrows(), a.ncols(), std::min(a.nnz(), b.nnz()));
  for (std::size_t r = 0; r < a.nrows(); ++r) {
    const auto ac = a.row_cols(r), bc = b.row_cols(r);
    const auto av = a.row_values(r), bv = b.row_values(r);
    std::size_t i = 0, j = 0;
    while (i < ac.size() && j < bc.size()) {
      if (ac[i] < bc[j]) {
        ++i;
      } else if (bc[j] < ac[i]) {
        ++j;
      } else {
        out.push(ac[i], av[i] * bv[j]);
        ++i;
        ++j;
      }
    }
    out.end_row();
  }
  return std::move(out).finish();
}

inline SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b) {
  detail::require_same_shape(a, b, "add");
  return detail::merge_union(a, b, [](Value x, Value y) { return x + y; });
}

inline SparseMatrix subtract(const SparseMatrix& a, const SparseMatrix& b) {
  detail::require_same_shape(a, b, "subtract");
  return detail::merge_union(a, b, [](Value x, Value y) { return x - y; });
}

inline Value sum_all(const SparseMatrix& a) {
  const auto v = a.values();
  return std::accumulate(v.begin(), v.end(), Value{0});
}

inline DenseVector row_reduce(const SparseMatrix& a) {
  DenseVector out(a.nrows(), 0);
  for (std::size_t r = 0; r < a.nrows(); ++r) {
    const auto v = a.row_values(r);
    out[r] = std::accumulate(v.begin(), v.end(), Value{0});
  }
  return out;
}

inline DenseVector col_reduce(const SparseMatrix& a) {
  DenseVector out(a.ncols(), 0);
  const auto cols = a.col_indices();
  const auto vals = a.values();
  for (std::size_t k = 0; k < cols.size(); ++k) out[cols[k]] += vals[k];
  return out;
}

/// 0/1 indicator of the stored entries equal to target.
inline SparseMatrix filter_eq(const SparseMatrix& a, Value target) {
  if (target == 0) {
    throw ContractError("filter_eq: zero entries are not stored and cannot be selected");
  }
  detail::CsrBuilder out(a.nrows(), a.ncols());
  for (std::size_t r = 0; r < a.nrows(); ++r) {
    const auto ac = a.row_cols(r);
    const auto av = a.row_values(r);
    for (std::size_t k = 0; k < ac.size(); ++k) {
      if (av[k] == target) out.push(ac[k], 1);
    }
    out.end_row();
  }
  return std::move(out).finish();
}

inline SparseMatrix transpose(const SparseMatrix& a) {
  std::vector<std::size_t> ptr(a.ncols() + 1, 0);
  for (Index c : a.col_indices()) ++ptr[c + 1];
  std::partial_sum(ptr.begin(), ptr.end(), ptr.begin());
  std::vector<Index> cols(a.nnz());
  std::vector<Value> vals(a.nnz());
  std::vector<std::size_t> next(ptr.begin(), ptr.end() - 1);
  for (std::size_t r = 0; r < a.nrows(); ++r) {
    const auto ac = a.row_cols(r);
    const auto av = a.row_values(r);
    for (std::size_t k = 0; k < ac.size(); ++k) {
      const std::size_t dst = next[ac[k]]++;
      cols[dst] = static_cast<Index>(r);
      vals[dst] = av[k];
    }
  }
  return SparseMatrix::from_csr(a.ncols(), a.nrows(), std::move(ptr), std::move(cols),
                                std::move(vals));
}

/// Rows listed in keep, emitted in their original relative order.
inline SparseMatrix select_rows(const SparseMatrix& a, std::span<const std::size_t> keep) {
  std::vector<std::size_t> rows(keep.begin(), keep.end());
  std::sort(rows.begin(), rows.end());
  if (std::adjacent_find(rows.begin(), rows.end()) != rows.end()) {
    throw ContractError("select_rows: duplicate row index");
  }
  if (!rows.empty() && rows.back() >= a.nrows()) {
    throw ContractError("select_rows: row " + std::to_string(rows.back()) + " outside " +
                        a.shape());
  }
  std::size_t total = 0;
  for (std::size_t r : rows) total += a.row_nnz(r);
  detail::CsrBuilder out(rows.size(), a.ncols(), total);
  for (std::size_t r : rows) {
    const auto ac = a.row_cols(r);
    const auto av = a.row_values(r);
    for (std::size_t k = 0; k < ac.size(); ++k) out.push(ac[k], av[k]);
    out.end_row();
  }
  return std::move(out).finish();
}

inline SparseMatrix diag_from_vector(std::span<const Value> v) {
  detail::CsrBuilder out(v.size(), v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push(static_cast<Index>(i), v[i]);
    out.end_row();
  }
  return std::move(out).finish();
}

struct TriangularParts {
  SparseMatrix lower;  // strictly below the diagonal
  SparseMatrix upper;  // strictly above the diagonal
};

/// Strict lower/upper split of a square matrix. The diagonal goes to neither.
inline TriangularParts triangular_split(const SparseMatrix& a) {
  if (a.nrows() != a.ncols()) {
    throw ContractError("triangular_split: matrix " + a.shape() + " is not square");
  }
  detail::CsrBuilder lower(a.nrows(), a.ncols(), a.nnz() / 2);
  detail::CsrBuilder upper(a.nrows(), a.ncols(), a.nnz() / 2);
  for (std::size_t r = 0; r < a.nrows(); ++r) {
    const auto ac = a.row_cols(r);
    const auto av = a.row_values(r);
    for (std::size_t k = 0; k < ac.size(); ++k) {
      if (ac[k] < r) lower.push(ac[k], av[k]);
      if (ac[k] > r) upper.push(ac[k], av[k]);
    }
    lower.end_row();
    upper.end_row();
  }
  return {std::move(lower).finish(), std::move(upper).finish()};
}

}  // namespace spgraph

#endif  // SPGRAPH_SPARSE_HPP
