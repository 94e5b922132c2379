#pragma once

#include <cstdint>
#include <vector>

#include "tatecoh/abgroup.hpp"
#include "tatecoh/group.hpp"

namespace tatecoh {

/// Finitely generated Z[G]-module in normalized diagonal presentation.
///
/// Generator i spans Z/t_i when torsion[i] >= 2 and a free Z when torsion[i] == 0.
/// action(g) acts on coordinate columns; row i is reduced modulo t_i.
class GModule {
 public:
  GModule() = default;

  /// Arbitrary presentation: Z^gens / span(relators) with the given action matrices
  /// (one per element id). Normalized through Smith normal form; throws InputError
  /// when an action is not well defined or violates the group law.
  static GModule from_presentation(const FiniteGroup& g, std::size_t gens, const IntMatrix& relators,
                                   const std::vector<IntMatrix>& actions);
  /// Presentation already diagonal; entries of `torsion` are 0 (free) or >= 1.
  static GModule from_diagonal(const FiniteGroup& g, IntVector torsion, std::vector<IntMatrix> actions);

  [[nodiscard]] const FiniteGroup& group() const noexcept { return group_; }
  [[nodiscard]] std::size_t gens() const noexcept { return torsion_.size(); }
  [[nodiscard]] const IntVector& torsion() const noexcept { return torsion_; }
  [[nodiscard]] const IntMatrix& action(int g) const { return action_.at(g); }
  [[nodiscard]] const std::vector<IntMatrix>& actions() const noexcept { return action_; }
  /// Diagonal relator matrix (gens x number of torsion generators).
  [[nodiscard]] IntMatrix relators() const;
  [[nodiscard]] bool is_torsion_free() const;
  [[nodiscard]] bool is_finite() const;
  /// Underlying abelian group (ambient = module coordinates).
  [[nodiscard]] AbGroup abelian_group() const;
  /// Reduces a coordinate vector into the standard range.
  [[nodiscard]] IntVector reduce(std::span<const Integer> v) const;
  /// Reduces each row of a matrix whose target is this module.
  [[nodiscard]] IntMatrix reduce_rows(IntMatrix m) const;
  [[nodiscard]] bool is_zero_element(std::span<const Integer> v) const;

  friend bool operator==(const GModule& a, const GModule& b) = default;

 private:
  FiniteGroup group_;
  IntVector torsion_;
  std::vector<IntMatrix> action_;
};

GModule trivial_module(const FiniteGroup& g, const AbGroup& a);
/// Z with trivial action, or Z/n when n >= 2 (n == 1 gives the zero module).
GModule trivial_cyclic_module(const FiniteGroup& g, std::size_t n = 0);
GModule zero_module(const FiniteGroup& g);
GModule regular_module(const FiniteGroup& g);
/// Multiplicative group of F_{p^{fn}} as a module over Gal(F_{p^{fn}}/F_{p^f}) = Z/n,
/// the generator acting by x -> x^{p^f}. Throws InputError when p is not prime and
/// ComputationError when p^{fn} exceeds `cap`.
GModule finite_field_units(std::int64_t p, std::int64_t f, std::int64_t n, std::int64_t cap = 1 << 20);
/// M (x)_Z N with the diagonal action.
GModule tensor(const GModule& m, const GModule& n);
/// Hom(M, Z) with the contragredient action; M must be torsion free.
GModule dual_module(const GModule& m);
/// Restriction to a subgroup, reindexed to the subgroup's own table.
GModule restrict_module(const GModule& m, const Subgroup& h);

/// Sum of all action matrices.
IntMatrix norm_endomorphism(const GModule& m);
/// Stacked (action(g) - 1) over all g, a map M -> M^|G|.
IntMatrix invariance_defect_matrix(const GModule& m);
/// M^G with canonical coordinates.
HomologyData fixed_point_data(const GModule& m);
AbGroup fixed_points(const GModule& m);
/// M^G / N M.
HomologyData classical_tate_zero(const GModule& m);
/// ker N / I_G M.
HomologyData classical_tate_minus_one(const GModule& m);

}  // namespace tatecoh
