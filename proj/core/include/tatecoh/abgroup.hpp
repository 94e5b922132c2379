#pragma once

#include <memory>
#include <string>

#include "tatecoh/matrix.hpp"
#include "tatecoh/smith.hpp"

namespace tatecoh {

/// Finitely generated abelian group in invariant-factor form.
///
/// Canonical generators are ordered torsion first (t_1 | t_2 | ...), then the
/// free ones. `basis_lift` sends canonical generators to vectors of the ambient
/// presentation; `coords` goes the other way for vectors in the presented subgroup.
struct AbGroup {
  std::size_t free_rank = 0;
  IntVector torsion;
  IntMatrix basis_lift;  // ambient x ngens
  IntMatrix coords;      // ngens x ambient

  [[nodiscard]] std::size_t ngens() const noexcept { return torsion.size() + free_rank; }
  [[nodiscard]] bool is_trivial() const noexcept { return ngens() == 0; }
  [[nodiscard]] bool is_finite() const noexcept { return free_rank == 0; }
  [[nodiscard]] bool is_cyclic() const noexcept { return ngens() <= 1; }
  /// Group order; throws for infinite groups.
  [[nodiscard]] Integer order() const;
  /// Largest invariant factor (1 for the trivial group); throws for infinite groups.
  [[nodiscard]] Integer exponent() const;
  /// Torsion factors followed by one zero per free generator.
  [[nodiscard]] IntVector invariants() const;
  /// Modulus of canonical coordinate i (0 for free coordinates).
  [[nodiscard]] Integer modulus(std::size_t i) const;

  /// Reduces canonical coordinates into [0, t_i).
  [[nodiscard]] IntVector reduce(std::span<const Integer> c) const;
  /// Canonical coordinates of an ambient vector lying in the presented subgroup.
  [[nodiscard]] IntVector coordinates_of(std::span<const Integer> ambient) const;
  /// Order of the element with the given canonical coordinates (0 if infinite).
  [[nodiscard]] Integer element_order(std::span<const Integer> c) const;
  [[nodiscard]] bool same_structure(const AbGroup& o) const { return free_rank == o.free_rank && torsion == o.torsion; }

  /// "0", "Z/2", "Z/2 + Z/6 + Z^1" ...
  [[nodiscard]] std::string to_string() const;
};

/// Z^rows / (column span of A), i.e. the columns of A are relators.
AbGroup cokernel_structure(const IntMatrix& A);

/// Abstract group with the given invariants (torsion factors and free rank); ambient = canonical.
AbGroup abgroup_from_invariants(std::span<const Integer> torsion, std::size_t free_rank);

/// ker(d_out) / im(d_in) for a complex of free abelian groups, dense route.
/// Throws std::invalid_argument when d_out * d_in != 0.
AbGroup homology_at(const IntMatrix& d_in, const IntMatrix& d_out);

/// Order of the subgroup generated by the given coordinate columns inside a finite group.
Integer subgroup_order(const AbGroup& g, const std::vector<IntVector>& generators);

/// Quotient of `g` by the subgroup generated by coordinate columns; ambient = g's canonical coordinates.
AbGroup quotient_group(const AbGroup& g, const std::vector<IntVector>& generators);

/// Homology of A --d_in--> B --d_out--> C where B and C may carry diagonal
/// relations (torsion[i] = t >= 2 means coordinate i lives in Z/t, 0 means free).
///
/// Built for large sparse inputs: the kernel is found by lowest-row column
/// reduction with tracked transforms, unit pivots of the boundary lattice are
/// eliminated by substitution, and only the remainder goes through a dense
/// Smith normal form.
class HomologyData {
 public:
  HomologyData(const SparseMatrix& d_in, const SparseMatrix& d_out, IntVector torsion_mid, IntVector torsion_out);

  [[nodiscard]] const AbGroup& group() const noexcept { return group_; }
  [[nodiscard]] std::size_t ambient_dim() const noexcept { return mid_dim_; }

  /// A cycle representing canonical generator i.
  [[nodiscard]] IntVector representative(std::size_t i) const;
  /// Representative of the class with the given canonical coordinates.
  [[nodiscard]] IntVector representative_of(std::span<const Integer> coords) const;
  /// True when d_out z vanishes modulo the target relations.
  [[nodiscard]] bool is_cycle(std::span<const Integer> z) const;
  /// Canonical coordinates of the class of a cycle; throws if z is not a cycle.
  [[nodiscard]] IntVector coordinates(std::span<const Integer> z) const;

 private:
  [[nodiscard]] SparseVec kernel_coordinates(const SparseVec& z) const;
  void substitute(IntVector& c) const;

  std::size_t mid_dim_ = 0;
  SparseMatrix d_out_;
  IntVector torsion_mid_, torsion_out_;
  std::vector<std::size_t> out_relator_rows_;    // target rows carrying a relation
  std::vector<SparseVec> kernel_vectors_;        // cycle basis, mid coordinates
  std::vector<SparseVec> vinv_by_column_;        // inverse transform restricted to kernel rows, by column
  // unit-pivot relation e_gen = -unit * sum(relation) used to drop a generator
  struct Elimination {
    std::size_t gen;
    Integer unit;
    SparseVec relation;  // entries strictly below gen
  };
  std::vector<Elimination> eliminations_;        // descending gen
  std::vector<std::size_t> remaining_;           // surviving kernel generators
  std::vector<std::ptrdiff_t> remaining_pos_;    // kernel id -> index in remaining_, or -1
  IntMatrix snf_U_, snf_U_inv_;
  std::vector<std::size_t> canonical_rows_;
  AbGroup group_;
};

}  // namespace tatecoh
