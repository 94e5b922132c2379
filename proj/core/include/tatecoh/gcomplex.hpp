#pragma once

#include <vector>

#include "tatecoh/gmodule.hpp"

namespace tatecoh {

GModule direct_sum(const GModule& a, const GModule& b);

/// Bounded cochain complex of G-modules, d^q : C^q -> C^{q+1}.
class GComplex {
 public:
  GComplex() = default;
  /// terms[k] sits in degree lo + k; differentials[k] : terms[k] -> terms[k+1].
  /// Validates well-definedness, d^2 = 0 and equivariance (InputError on failure).
  GComplex(const FiniteGroup& g, int lo, std::vector<GModule> terms, std::vector<IntMatrix> differentials);

  [[nodiscard]] const FiniteGroup& group() const noexcept { return group_; }
  [[nodiscard]] int lo() const noexcept { return lo_; }
  [[nodiscard]] int hi() const noexcept { return lo_ + static_cast<int>(terms_.size()) - 1; }
  /// Zero module outside the support.
  [[nodiscard]] GModule term(int q) const;
  /// d^q, a zero matrix of the right shape when either end is outside the support.
  [[nodiscard]] IntMatrix differential(int q) const;
  [[nodiscard]] bool in_support(int q) const noexcept { return q >= lo_ && q <= hi(); }
  [[nodiscard]] std::size_t length() const noexcept { return terms_.size(); }

  friend bool operator==(const GComplex&, const GComplex&) = default;

 private:
  FiniteGroup group_;
  int lo_ = 0;
  std::vector<GModule> terms_;
  std::vector<IntMatrix> differentials_;
};

/// M placed in degree q.
GComplex concentrate(const GModule& m, int q);
/// (C[n])^q = C^{n+q} with d_{C[n]} = (-1)^n d_C.
GComplex shift(const GComplex& c, int n);
/// Same complex with every term restricted to a subgroup.
GComplex restrict_complex(const GComplex& c, const Subgroup& h);

/// Mapping cone of multiplication by m with the maps of its triangle
/// C --m--> C --inclusion--> cone --projection--> C[1].
struct Cone {
  GComplex complex;
  int lo = 0, hi = 0;                  // support of the cone
  std::vector<IntMatrix> inclusion;   // C^q -> cone^q, q = lo..hi
  std::vector<IntMatrix> projection;  // cone^q -> C^{q+1}, q = lo..hi
};
/// cone^q = C^{q+1} + C^q with differential [[-d, 0], [m, d]].
Cone cone_of_mult(const GComplex& c, long long m);

/// M^{(x)n} (diagonal action) placed in degree n; n = 0 gives trivial Z in degree 0.
/// Throws ComputationError when gens(M)^n exceeds `max_gens`.
GComplex tensor_power_shifted(const GModule& m, int n, std::size_t max_gens = 4096);

}  // namespace tatecoh
