#include "tatecoh/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tatecoh {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, IntVector entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("IntMatrix: entry count does not match shape");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> d, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < d.size() && i < rows && i < cols; ++i) m(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& cols) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void IntMatrix::set_column(std::size_t c, std::span<const Integer> v) {
  if (v.size() != rows_) throw std::invalid_argument("set_column: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v.is_zero(); });
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("IntMatrix::block");
  IntMatrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw std::out_of_range("IntMatrix::set_block");
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> idx) const {
  IntMatrix m(rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < idx.size(); ++k) m(r, k) = (*this)(r, idx[k]);
  return m;
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> idx) const {
  IntMatrix m(idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t c = 0; c < cols_; ++c) m(k, c) = (*this)(idx[k], c);
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k.is_zero()) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    const Integer& s = (*this)(src, c);
    if (!s.is_zero()) (*this)(dst, c).add_mul(k, s);
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k.is_zero()) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const Integer& s = (*this)(r, src);
    if (!s.is_zero()) (*this)(r, dst).add_mul(k, s);
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Integer& y = b(k, j);
        if (!y.is_zero()) c(i, j).add_mul(x, y);
      }
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix difference: shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

IntMatrix operator*(const Integer& k, const IntMatrix& a) {
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= k;
  return c;
}

IntVector operator*(const IntMatrix& a, std::span<const Integer> v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!v[k].is_zero() && !a(i, k).is_zero()) out[i].add_mul(a(i, k), v[k]);
  return out;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  IntMatrix c(a.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(0, a.cols(), b);
  return c;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  IntMatrix c(a.rows() + b.rows(), a.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), 0, b);
  return c;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return c;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), a.cols(), b);
  return c;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << m(r, c);
    }
    os << ']';
  }
  return os << ']';
}

IntVector add(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector sum: length mismatch");
  IntVector c(a.begin(), a.end());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

IntVector scale(const Integer& k, std::span<const Integer> v) {
  IntVector c(v.begin(), v.end());
  for (auto& x : c) x *= k;
  return c;
}

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x.is_zero(); });
}

void axpy(SparseVec& y, const Integer& k, const SparseVec& x) {
  if (k.is_zero() || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, k * x[j].second);
      ++j;
    } else {
      Integer v = std::move(y[i].second);
      v.add_mul(k, x[j].second);
      if (!v.is_zero()) out.emplace_back(x[j].first, std::move(v));
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

Integer sparse_at(const SparseVec& v, uint32_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const SparseEntry& e, uint32_t i) { return e.first < i; });
  if (it != v.end() && it->first == index) return it->second;
  return Integer(0);
}

SparseVec to_sparse(std::span<const Integer> v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(static_cast<uint32_t>(i), v[i]);
  return s;
}

IntVector to_dense(const SparseVec& v, std::size_t n) {
  IntVector d(n);
  for (const auto& [i, x] : v) d[i] = x;
  return d;
}

Integer dot(const SparseVec& a, std::span<const Integer> dense) {
  Integer s;
  for (const auto& [i, x] : a)
    if (!dense[i].is_zero()) s.add_mul(x, dense[i]);
  return s;
}

SparseMatrix SparseMatrix::from_dense(const IntMatrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) s.columns_[c].emplace_back(static_cast<uint32_t>(r), m(r, c));
  return s;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Integer& v) {
  if (v.is_zero()) return;
  columns_[c].emplace_back(static_cast<uint32_t>(r), v);
}

void SparseMatrix::finalize() {
  for (auto& col : columns_) {
    std::sort(col.begin(), col.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.first < b.first; });
    SparseVec merged;
    merged.reserve(col.size());
    for (auto& e : col) {
      if (!merged.empty() && merged.back().first == e.first) {
        merged.back().second += e.second;
      } else {
        if (!merged.empty() && merged.back().second.is_zero()) merged.pop_back();
        merged.push_back(std::move(e));
      }
    }
    if (!merged.empty() && merged.back().second.is_zero()) merged.pop_back();
    col = std::move(merged);
  }
}

IntMatrix SparseMatrix::to_dense() const {
  IntMatrix m(rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& [r, v] : columns_[c]) m(r, c) = v;
  return m;
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
  SparseVec y;
  for (const auto& [c, v] : x) axpy(y, v, columns_[c]);
  return y;
}

IntVector SparseMatrix::apply(std::span<const Integer> x) const {
  if (x.size() != cols_) throw std::invalid_argument("SparseMatrix::apply: length mismatch");
  IntVector y(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (x[c].is_zero()) continue;
    for (const auto& [r, v] : columns_[c]) y[r].add_mul(v, x[c]);
  }
  return y;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("sparse product: shape mismatch");
  SparseMatrix c(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) c.column(j) = a.apply(b.column(j));
  return c;
}

}  // namespace tatecoh
