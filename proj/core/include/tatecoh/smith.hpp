#pragma once

#include <optional>

#include "tatecoh/matrix.hpp"

namespace tatecoh {

/// U * A * V == S with U, V unimodular and S diagonal, d_1 | d_2 | ... , zeros last.
struct SnfResult {
  IntMatrix U, S, V;
  IntMatrix U_inv, V_inv;
  IntVector diagonal;  // min(rows, cols) entries, nonnegative
  std::size_t rank = 0;
};

/// Smith normal form by minimal-absolute-value pivoting. Deterministic:
/// ties are broken by the first occurrence in row-major order.
SnfResult smith_normal_form(const IntMatrix& A);

/// Z-basis of {x : A x = 0}, as columns.
IntMatrix kernel_basis(const IntMatrix& A);

/// Solves A x = b over the integers; nullopt when no integral solution exists.
std::optional<IntVector> solve_integer(const IntMatrix& A, std::span<const Integer> b);

/// Caches the normal form of one matrix for repeated right-hand sides.
class IntegerSolver {
 public:
  explicit IntegerSolver(const IntMatrix& A);
  [[nodiscard]] std::optional<IntVector> solve(std::span<const Integer> b) const;
  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

 private:
  std::size_t rows_, cols_;
  SnfResult snf_;
};

}  // namespace tatecoh
