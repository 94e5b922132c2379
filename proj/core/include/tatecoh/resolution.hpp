#pragma once

#include <string>
#include <vector>

#include "tatecoh/group.hpp"

namespace tatecoh {

/// One group-ring coefficient: `c * g` in matrix entry (row, column).
struct GRTerm {
  uint32_t row;
  int g;
  Integer c;
};

/// Matrix over Z[G] for a map of free modules, phi(e_b) = sum_a lambda_ab e_a.
///
/// The induced Z-basis of a free module of rank r is g * e_a at index a * |G| + g.
class GroupRingMatrix {
 public:
  GroupRingMatrix() = default;
  GroupRingMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] const std::vector<GRTerm>& column(std::size_t b) const { return columns_[b]; }
  void add(std::size_t row, std::size_t col, int g, const Integer& c);
  /// Sorts each column by (row, g) and merges duplicates.
  void finalize();
  [[nodiscard]] bool is_zero() const;

  /// Matrix on the induced Z-bases: entry[(a, h g), (b, h)] += lambda_ab(g).
  [[nodiscard]] SparseMatrix z_expand(const FiniteGroup& g) const;
  /// The dual map on Z-duals, with lambda_ab(g) moved to entry (b, a) at g^-1.
  [[nodiscard]] GroupRingMatrix conjugate_transpose(const FiniteGroup& g) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::vector<GRTerm>> columns_;
};

/// Free resolution ... -> F_1 -> F_0 -> Z -> 0 truncated at length N.
struct FreeResolution {
  FiniteGroup group;
  std::string kind;
  std::vector<std::size_t> ranks;          // ranks over Z[G], degrees 0..N
  std::vector<GroupRingMatrix> boundary;   // boundary[i] : F_i -> F_{i-1}; boundary[0] unused
  IntVector augmentation;                  // epsilon(e_a) for the basis of F_0
  std::vector<int> h1_labels;              // group element attached to each basis element of F_1

  [[nodiscard]] int length() const noexcept { return static_cast<int>(ranks.size()) - 1; }
};

/// Standard (unnormalized) bar resolution. Throws ComputationError when the top
/// free rank |G|^N exceeds `cap`.
FreeResolution bar_resolution(const FiniteGroup& g, int length, std::size_t cap = 20000);
/// Period-2 resolution of a cyclic group: sigma - 1 in odd degrees, the norm in even ones.
FreeResolution periodic_resolution(const FiniteGroup& g, int length);

/// Doubly infinite exact complex of free modules on the window [-N, N]:
/// X^{-i} = F_i and X^{i} = Hom(F_{i-1}, Z), spliced through Z in degree 0.
class CompleteResolution {
 public:
  CompleteResolution() = default;
  explicit CompleteResolution(const FreeResolution& res);

  [[nodiscard]] const FiniteGroup& group() const noexcept { return group_; }
  [[nodiscard]] int window() const noexcept { return n_; }
  [[nodiscard]] const std::string& kind() const noexcept { return kind_; }
  [[nodiscard]] bool has_degree(int p) const noexcept { return p >= -n_ && p <= n_; }
  [[nodiscard]] std::size_t rank(int p) const;
  /// d^p : X^p -> X^{p+1}, for -N <= p < N.
  [[nodiscard]] const GroupRingMatrix& differential(int p) const;
  [[nodiscard]] const IntVector& augmentation() const noexcept { return augmentation_; }
  [[nodiscard]] const std::vector<int>& h1_labels() const noexcept { return h1_labels_; }

  /// Copy with one differential replaced (used to audit the validator).
  [[nodiscard]] CompleteResolution with_differential(int p, GroupRingMatrix d) const;

 private:
  FiniteGroup group_;
  std::string kind_;
  int n_ = 0;
  std::vector<std::size_t> ranks_;       // index p + N
  std::vector<GroupRingMatrix> diffs_;   // index p + N, p = -N..N-1
  IntVector augmentation_;
  std::vector<int> h1_labels_;
};

CompleteResolution complete_resolution(const FreeResolution& res);

struct ExactnessReport {
  std::vector<int> degrees;            // interior degrees audited
  std::vector<bool> exact;
  std::vector<std::size_t> z_ranks;    // Z-rank of X^p for p = -N..N
  bool augmentation_exact = false;     // X^-1 -> X^0 -> Z -> 0
  bool coaugmentation_exact = false;   // 0 -> Z -> X^1 -> X^2
  bool differentials_compose = false;  // d^{p+1} d^p = 0 throughout
  [[nodiscard]] bool all_pass() const;
  [[nodiscard]] std::vector<int> failures() const;
};
ExactnessReport validate_complete_resolution(const CompleteResolution& x);

enum class Engine { Bar, Periodic, Auto };
Engine parse_engine(const std::string& s);
std::string engine_name(Engine e);
/// Complete resolution on [-N, N] from the chosen engine; Auto picks periodic for cyclic groups.
CompleteResolution make_complete_resolution(const FiniteGroup& g, Engine engine, int window, std::size_t cap = 20000);

}  // namespace tatecoh
