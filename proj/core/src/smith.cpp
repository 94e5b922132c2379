#include "tatecoh/smith.hpp"

#include <stdexcept>

namespace tatecoh {

namespace {

// Row and column operations applied to S while mirroring them on U, U^-1, V, V^-1.
struct SnfState {
  IntMatrix S, U, Ui, V, Vi;

  void swap_rows(std::size_t a, std::size_t b) {
    S.swap_rows(a, b);
    U.swap_rows(a, b);
    Ui.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    S.swap_cols(a, b);
    V.swap_cols(a, b);
    Vi.swap_rows(a, b);
  }
  // row dst += k * row src
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    S.add_row_multiple(dst, src, k);
    U.add_row_multiple(dst, src, k);
    Ui.add_col_multiple(src, dst, -k);
  }
  // col dst += k * col src
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    S.add_col_multiple(dst, src, k);
    V.add_col_multiple(dst, src, k);
    Vi.add_row_multiple(src, dst, -k);
  }
  void negate_row(std::size_t r) {
    S.negate_row(r);
    U.negate_row(r);
    Ui.negate_col(r);
  }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  SnfState st{A, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(n)};
  IntMatrix& S = st.S;
  const std::size_t lim = std::min(m, n);
  std::size_t k = 0;

  for (; k < lim; ++k) {
    bool nonzero_left = true;
    while (true) {
      // minimal |entry| in the trailing block
      std::size_t pr = m, pc = n;
      Integer best;
      for (std::size_t i = k; i < m; ++i)
        for (std::size_t j = k; j < n; ++j) {
          const Integer& v = S(i, j);
          if (v.is_zero()) continue;
          if (pr == m || abs(v) < best) {
            best = abs(v);
            pr = i;
            pc = j;
            if (best.is_unit()) goto found;
          }
        }
    found:
      if (pr == m) {
        nonzero_left = false;
        break;
      }
      st.swap_rows(k, pr);
      st.swap_cols(k, pc);

      bool clean = true;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (S(i, k).is_zero()) continue;
        Integer q = nearest_div(S(i, k), S(k, k));
        st.add_row(i, k, -q);
        if (!S(i, k).is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (S(k, j).is_zero()) continue;
        Integer q = nearest_div(S(k, j), S(k, k));
        st.add_col(j, k, -q);
        if (!S(k, j).is_zero()) clean = false;
      }
      if (!clean) continue;

      // the pivot must divide the whole trailing block
      std::size_t bad = m;
      for (std::size_t i = k + 1; i < m && bad == m; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (!floor_mod(S(i, j), S(k, k)).is_zero()) {
            bad = i;
            break;
          }
      if (bad == m) break;
      st.add_row(k, bad, Integer(1));
    }
    if (!nonzero_left) break;
    if (S(k, k).sign() < 0) st.negate_row(k);
  }

  SnfResult res;
  res.rank = k;
  res.diagonal.resize(lim);
  for (std::size_t i = 0; i < lim; ++i) res.diagonal[i] = S(i, i);
  res.S = std::move(st.S);
  res.U = std::move(st.U);
  res.U_inv = std::move(st.Ui);
  res.V = std::move(st.V);
  res.V_inv = std::move(st.Vi);
  return res;
}

IntMatrix kernel_basis(const IntMatrix& A) {
  SnfResult snf = smith_normal_form(A);
  std::vector<std::size_t> idx;
  for (std::size_t j = snf.rank; j < A.cols(); ++j) idx.push_back(j);
  return snf.V.select_columns(idx);
}

IntegerSolver::IntegerSolver(const IntMatrix& A) : rows_(A.rows()), cols_(A.cols()), snf_(smith_normal_form(A)) {}

std::optional<IntVector> IntegerSolver::solve(std::span<const Integer> b) const {
  if (b.size() != rows_) throw std::invalid_argument("IntegerSolver::solve: right-hand side length mismatch");
  IntVector ub = snf_.U * b;
  IntVector y(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i < snf_.rank) {
      const Integer& d = snf_.diagonal[i];
      if (!floor_mod(ub[i], d).is_zero()) return std::nullopt;
      y[i] = exact_div(ub[i], d);
    } else if (!ub[i].is_zero()) {
      return std::nullopt;
    }
  }
  return snf_.V * std::span<const Integer>(y);
}

std::optional<IntVector> solve_integer(const IntMatrix& A, std::span<const Integer> b) {
  return IntegerSolver(A).solve(b);
}

}  // namespace tatecoh
