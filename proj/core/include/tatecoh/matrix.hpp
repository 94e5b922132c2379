#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tatecoh/integer.hpp"

namespace tatecoh {

using IntVector = std::vector<Integer>;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, IntVector entries);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const Integer> d, std::size_t rows, std::size_t cols);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& cols);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] const IntVector& entries() const noexcept { return data_; }

  [[nodiscard]] IntVector column(std::size_t c) const;
  [[nodiscard]] IntVector row(std::size_t r) const;
  void set_column(std::size_t c, std::span<const Integer> v);

  [[nodiscard]] IntMatrix transpose() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b);
  [[nodiscard]] IntMatrix select_columns(std::span<const std::size_t> idx) const;
  [[nodiscard]] IntMatrix select_rows(std::span<const std::size_t> idx) const;

  // elementary operations used by the normal-form routines
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);  // row dst += k * row src
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);  // col dst += k * col src
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  IntVector data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Integer& k, const IntMatrix& a);
IntVector operator*(const IntMatrix& a, std::span<const Integer> v);
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

IntVector add(std::span<const Integer> a, std::span<const Integer> b);
IntVector scale(const Integer& k, std::span<const Integer> v);
bool is_zero(std::span<const Integer> v);

/// Sparse vector: strictly increasing indices, no stored zeros.
using SparseEntry = std::pair<uint32_t, Integer>;
using SparseVec = std::vector<SparseEntry>;

/// y := y + k * x, merged and with cancellations dropped.
void axpy(SparseVec& y, const Integer& k, const SparseVec& x);
/// Coefficient at `index` (zero if absent).
Integer sparse_at(const SparseVec& v, uint32_t index);
SparseVec to_sparse(std::span<const Integer> v);
IntVector to_dense(const SparseVec& v, std::size_t n);
Integer dot(const SparseVec& a, std::span<const Integer> dense);

/// Column-major sparse integer matrix; the workhorse for large total complexes.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}
  static SparseMatrix from_dense(const IntMatrix& m);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] const SparseVec& column(std::size_t c) const { return columns_[c]; }
  SparseVec& column(std::size_t c) { return columns_[c]; }
  /// Accumulate into entry (r, c); columns must be finalized before use.
  void add(std::size_t r, std::size_t c, const Integer& v);
  /// Sorts and merges each column after a batch of `add` calls.
  void finalize();

  [[nodiscard]] IntMatrix to_dense() const;
  [[nodiscard]] SparseVec apply(const SparseVec& x) const;
  [[nodiscard]] IntVector apply(std::span<const Integer> x) const;
  [[nodiscard]] std::size_t nonzeros() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<SparseVec> columns_;
};

/// Composite a*b computed column by column.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace tatecoh
