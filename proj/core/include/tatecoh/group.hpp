#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tatecoh/abgroup.hpp"

namespace tatecoh {

/// Finite group stored by its full multiplication table over ids 0..n-1.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(std::vector<std::vector<int>>{{0}}) {}

  /// Validates the table; throws InputError naming the failing law.
  static FiniteGroup from_table(std::vector<std::vector<int>> table, std::string name = {});

  [[nodiscard]] std::size_t order() const noexcept { return table_.size(); }
  [[nodiscard]] int identity() const noexcept { return identity_; }
  [[nodiscard]] int mul(int a, int b) const { return table_[a][b]; }
  [[nodiscard]] int inv(int a) const { return inverse_[a]; }
  [[nodiscard]] int pow(int a, long long k) const;
  [[nodiscard]] int conj(int g, int h) const { return mul(mul(g, h), inv(g)); }  // g h g^-1
  [[nodiscard]] std::size_t element_order(int a) const;
  [[nodiscard]] const std::vector<std::vector<int>>& table() const noexcept { return table_; }
  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  [[nodiscard]] bool is_abelian() const;
  [[nodiscard]] bool is_cyclic() const { return cyclic_generator() >= 0; }
  /// Smallest id generating the group, or -1.
  [[nodiscard]] int cyclic_generator() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  explicit FiniteGroup(std::vector<std::vector<int>> table);
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
  std::string name_;
};

FiniteGroup make_cyclic(std::size_t n);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
/// Symmetric group on n <= 5 letters, permutations in lexicographic order (id 0 = identity).
FiniteGroup make_symmetric(std::size_t n);

/// A subgroup given by its sorted element ids in the parent.
struct Subgroup {
  std::vector<int> elements;
  bool is_normal = false;

  [[nodiscard]] std::size_t order() const noexcept { return elements.size(); }
  [[nodiscard]] bool contains(int g) const;
  /// Position of a parent id inside `elements`, or -1.
  [[nodiscard]] int local_index(int g) const;
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

/// Subgroup generated by the given ids.
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);
Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);
bool is_normal(const FiniteGroup& g, const Subgroup& h);

/// Every subgroup exactly once, ordered by (order, element list). Throws
/// ComputationError when |G| exceeds `max_order`.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, std::size_t max_order = 24);

/// The subgroup as a group in its own right: local id i is parent id elements[i].
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h);

/// One representative per left coset gH, identity first, otherwise ascending ids.
std::vector<int> coset_representatives(const FiniteGroup& g, const Subgroup& h);
/// One representative per right coset Hg, identity first, otherwise ascending ids.
std::vector<int> right_coset_representatives(const FiniteGroup& g, const Subgroup& h);

/// G / N for normal N; `projection[g]` is the coset id of g.
struct Quotient {
  FiniteGroup group;
  std::vector<int> projection;
};
Quotient quotient(const FiniteGroup& g, const Subgroup& n);

/// G^ab with projection of each element to canonical coordinates.
struct Abelianization {
  AbGroup group;
  std::vector<IntVector> projection;  // indexed by element id
  /// Some element whose image has the given coordinates.
  [[nodiscard]] int lift(std::span<const Integer> coords) const;
};
Abelianization abelianization(const FiniteGroup& g);

/// Brute-force commutator subgroup.
Subgroup commutator_subgroup(const FiniteGroup& g);

}  // namespace tatecoh
