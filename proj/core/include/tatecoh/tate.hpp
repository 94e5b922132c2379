#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tatecoh/gcomplex.hpp"
#include "tatecoh/resolution.hpp"

namespace tatecoh {

using ResolutionPtr = std::shared_ptr<const CompleteResolution>;

/// Smallest complete-resolution window that computes degrees [qmin, qmax] with
/// coefficients supported on [lo, hi]: max(qmax - lo + 1, hi - qmin + 1).
int required_window(const GComplex& c, int qmin, int qmax);

/// Total complex Tot^q = sum_j Hom_H(X^{j-q}, C^j) for a subgroup H, with
/// (Df)_j = d_C f_{j-1} - (-1)^q f_j d_X.
///
/// X is viewed as a free Z[H]-module on the basis t * e_a, t running over right
/// coset representatives of H in G; a cochain stores f(t * e_a) in slot (a, t).
class TotalComplex {
 public:
  TotalComplex(ResolutionPtr x, GComplex c, Subgroup h);

  [[nodiscard]] const CompleteResolution& resolution() const noexcept { return *x_; }
  [[nodiscard]] const ResolutionPtr& resolution_ptr() const noexcept { return x_; }
  [[nodiscard]] const GComplex& coefficients() const noexcept { return c_; }
  [[nodiscard]] const Subgroup& subgroup() const noexcept { return h_; }
  /// Cached term C^j (zero module outside the support).
  [[nodiscard]] const GModule& term(int j) const;
  [[nodiscard]] const std::vector<int>& transversal() const noexcept { return reps_; }
  /// g = h * t with t = transversal()[coset_index(g)] and h = h_part(g) in H.
  [[nodiscard]] std::size_t coset_index(int g) const { return coset_[g]; }
  [[nodiscard]] int h_part(int g) const { return hpart_[g]; }

  /// True when every component of Tot^q lies inside the resolution window.
  [[nodiscard]] bool has_degree(int q) const;
  [[nodiscard]] std::size_t dim(int q) const;
  [[nodiscard]] std::size_t offset(int q, int j) const;
  [[nodiscard]] std::size_t slot(int q, int j, std::size_t a, std::size_t t, std::size_t k) const;
  [[nodiscard]] IntVector torsion(int q) const;
  /// D^q : Tot^q -> Tot^{q+1}.
  [[nodiscard]] SparseMatrix differential(int q) const;

  /// Value of the component f_j of a cochain in degree q on a Z-vector of X^{j-q}.
  [[nodiscard]] IntVector evaluate(int q, int j, std::span<const Integer> cochain, const SparseVec& x) const;
  /// Number of H-basis elements t * e_a of X^p.
  [[nodiscard]] std::size_t basis_size(int p) const { return x_->rank(p) * reps_.size(); }

 private:
  void require(int q) const;
  ResolutionPtr x_;
  GComplex c_;
  Subgroup h_;
  std::vector<int> reps_;
  std::vector<std::size_t> coset_;
  std::vector<int> hpart_;
  std::vector<GModule> terms_;
  std::vector<IntMatrix> dc_;
  GModule zero_;
};

/// A class in a fixed degree, in canonical coordinates.
struct TateClass {
  int degree = 0;
  IntVector coords;
  Integer order;
};

/// Tate hypercohomology groups of C over a subgroup H for q in [qmin, qmax].
class TateCohomology {
 public:
  TateCohomology(ResolutionPtr x, GComplex c, Subgroup h, int qmin, int qmax);
  /// Whole-group convenience.
  TateCohomology(ResolutionPtr x, GComplex c, int qmin, int qmax);

  [[nodiscard]] int qmin() const noexcept { return qmin_; }
  [[nodiscard]] int qmax() const noexcept { return qmax_; }
  [[nodiscard]] bool covers(int q) const noexcept { return q >= qmin_ && q <= qmax_; }
  [[nodiscard]] const AbGroup& group(int q) const { return data(q).group(); }
  [[nodiscard]] const HomologyData& data(int q) const;
  [[nodiscard]] const TotalComplex& total() const noexcept { return tot_; }
  [[nodiscard]] const Subgroup& subgroup() const noexcept { return tot_.subgroup(); }

  [[nodiscard]] IntVector representative(int q, std::span<const Integer> coords) const;
  [[nodiscard]] IntVector coordinates(int q, std::span<const Integer> cocycle) const;
  [[nodiscard]] bool is_cocycle(int q, std::span<const Integer> v) const;
  [[nodiscard]] TateClass make_class(int q, std::span<const Integer> coords) const;

 private:
  TotalComplex tot_;
  int qmin_, qmax_;
  std::vector<HomologyData> data_;
};

/// Convenience: Tate hypercohomology over the whole group.
TateCohomology tate_hypercohomology(const CompleteResolution& x, const GComplex& c, int qmin, int qmax);

/// Cochain-level restriction from a subgroup K to H <= K (both totals over the same X and C).
IntVector restrict_cochain(const TotalComplex& from_k, const TotalComplex& to_h, int q, std::span<const Integer> f);
/// Cochain-level corestriction (transfer) from H to K >= H.
IntVector corestrict_cochain(const TotalComplex& from_h, const TotalComplex& to_k, int q, std::span<const Integer> f);
/// Matrices on canonical coordinates: columns are images of canonical generators.
IntMatrix restriction_matrix(const TateCohomology& from_k, const TateCohomology& to_h, int q);
IntMatrix corestriction_matrix(const TateCohomology& from_h, const TateCohomology& to_k, int q);
TateClass restriction(const TateCohomology& from_k, const TateCohomology& to_h, const TateClass& c);
TateClass corestriction(const TateCohomology& from_h, const TateCohomology& to_k, const TateClass& c);

/// H-equivariant chain map tau : X -> X of degree s attached to a cocycle of
/// Tot^s(H, Z), normalized by epsilon o tau_{-s} = x and d tau = (-1)^s tau d.
class ChainLift {
 public:
  ChainLift(const TotalComplex& z_total, int s, std::span<const Integer> cocycle, int pmin, int pmax);

  [[nodiscard]] int degree() const noexcept { return s_; }
  /// tau_p applied to a Z-vector of X^p.
  [[nodiscard]] SparseVec apply(int p, const SparseVec& x) const;
  /// tau_p on the H-basis element (a, t).
  [[nodiscard]] const SparseVec& on_basis(int p, std::size_t a, std::size_t t) const;
  /// Checks d tau_p = (-1)^s tau_{p+1} d on every basis element where both sides are stored.
  [[nodiscard]] bool verify() const;

 private:
  [[nodiscard]] SparseVec translate(int h, const SparseVec& v) const;
  [[nodiscard]] SparseVec boundary_of_basis(int p, std::size_t b, std::size_t t) const;
  [[nodiscard]] const SparseMatrix& zd(int p) const;  // Z-expanded differential of X in degree p
  void step_down(int p);
  void step_up(int p);
  TotalComplex tot_;
  mutable std::map<int, SparseMatrix> zd_;
  int s_, pmin_, pmax_;
  std::vector<std::vector<SparseVec>> maps_;  // index p - pmin, entry a * |T| + t
};

/// Composite a o tau: class of degree q from a cocycle a in Tot^d(C) and a lift of degree q - d.
IntVector compose_with_lift(const TotalComplex& c_total, int d, std::span<const Integer> a, const ChainLift& tau, int q);

/// Matrix of x -> x cup a : Hhat^{q-d}(H, Z) -> Hhat^q(H, C) for a class a of degree d.
/// The coefficient complex must be supported in at most two adjacent degrees.
IntMatrix cup_matrix(const TateCohomology& z_coh, const TateCohomology& c_coh, int d, std::span<const Integer> a,
                     int q);
/// The map of degree-2 cup product, Hhat^{q-2}(H, Z) -> Hhat^q(H, C).
IntMatrix cup_with(const TateCohomology& z_coh, const TateCohomology& c_coh, std::span<const Integer> a, int q);

/// Equivariant diagonal F -> F (x) F on the nonnegative part of a complete resolution.
///
/// Component n sends each basis element of F_n = X^{-n} to a Z-vector of
/// sum_{i+j=n} F_i (x) F_j, blocks ordered by i; the Z-basis of F_i (x) F_j is
/// (g e_a) (x) (g' e_b) at index (a |G| + g) * rank_Z(F_j) + (b |G| + g').
class DiagonalApproximation {
 public:
  DiagonalApproximation(ResolutionPtr x, int depth);

  [[nodiscard]] int depth() const noexcept { return depth_; }
  [[nodiscard]] const SparseVec& component(int n, std::size_t c) const { return delta_[n][c]; }
  /// Offset of the (i, n - i) block inside degree n.
  [[nodiscard]] std::size_t block_offset(int n, int i) const;
  [[nodiscard]] std::size_t dim(int n) const { return block_offset(n, n + 1); }
  /// (d (x) 1 + (-1)^i 1 (x) d) Delta_n == Delta_{n-1} d and (eps (x) eps) Delta_0 == eps.
  [[nodiscard]] bool verify() const;
  /// Ordinary cup product x (in degree s) with y (in degree t) of cochains Hom_G(F, Z), whole group.
  [[nodiscard]] IntVector cup_cochains(int s, std::span<const Integer> x, int t, std::span<const Integer> y) const;

 private:
  [[nodiscard]] SparseVec act(int n, int h, const SparseVec& v) const;
  [[nodiscard]] SparseMatrix tensor_differential(int n) const;  // degree n -> n-1
  ResolutionPtr x_;
  int depth_;
  std::vector<std::vector<SparseVec>> delta_;
};

/// Map of finite abelian groups given on canonical coordinates is bijective.
bool is_isomorphism(const AbGroup& source, const AbGroup& target, const IntMatrix& m);
/// Order of the image of the map.
Integer image_order(const AbGroup& target, const IntMatrix& m);

/// Verdict of the cup-product criterion with hypotheses (i) and (ii).
struct TnkSubgroupRow {
  Subgroup subgroup;
  std::string h1, h2;
  bool h1_vanishes = false;
  Integer restricted_order;
  bool generates = false;
};
struct TnkReport {
  std::vector<TnkSubgroupRow> rows;
  bool hypothesis_i = false;
  bool hypothesis_ii = false;
  std::map<int, bool> isomorphism;  // per degree q, only when both hypotheses hold
  std::map<int, std::string> source, target;
  [[nodiscard]] bool all_pass() const;
  std::string failure;  // first failing hypothesis, empty otherwise
};
/// `a` in canonical coordinates of Hhat^2(G, C). The window of X must cover the range and degree 2.
TnkReport tate_nakayama_check(const ResolutionPtr& x, const GComplex& c, std::span<const Integer> a, int qmin, int qmax,
                              std::size_t max_order = 24);

struct ConeRow {
  int degree = 0;
  Integer cone_order, quotient_order, torsion_order;  // |H^i(cone)|, |H^i/m|, |_m H^{i+1}|
  Integer inclusion_image, projection_image;          // orders of the images of the induced maps
  bool composite_zero = false;
  bool holds = false;
};
struct ConeReport {
  long long m = 1;
  std::vector<ConeRow> rows;
  [[nodiscard]] bool all_pass() const;
};
/// Order identity |H^i(cone(m))| = |H^i/m| * |_m H^{i+1}| and the maps realizing it, i in [imin, imax].
ConeReport cone_les_check(const ResolutionPtr& x, const GComplex& c, long long m, int imin, int imax);

/// Tate groups in degrees 0 and -1 against M^G / N M and ker N / I_G M.
struct ClassicalComparison {
  std::string hyper_zero, classical_zero, hyper_minus_one, classical_minus_one;
  bool agrees = false;
};
ClassicalComparison compare_with_classical(const ResolutionPtr& x, const GModule& m);

}  // namespace tatecoh
