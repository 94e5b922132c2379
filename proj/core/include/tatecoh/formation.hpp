#pragma once

#include <string>
#include <vector>

#include "tatecoh/tate.hpp"

namespace tatecoh {

struct FormationRow {
  Subgroup subgroup;
  std::string h1, h2;
  bool c1 = false;  // Hhat^1(H, C) = 0
  bool c2 = false;  // Hhat^2(H, C) cyclic of order |H|
  IntVector u;      // u_H in canonical coordinates, when a compatible family exists
};

/// Axioms C1, C2, C3 of a class formation at finite level, checked in that order.
struct FormationReport {
  std::vector<FormationRow> rows;  // one per subgroup, sorted by (order, elements)
  bool c1 = false, c2 = false, c3 = false;
  std::string first_failure;  // "C1", "C2", "C3" or empty
  std::string detail;
  std::size_t candidates = 0;  // generator choices for u_G that were tried
  std::size_t witnesses = 0;   // choices giving a compatible family
  IntVector fundamental_class;  // u_G, lexicographically least witness
  bool compatibility = false;   // res_{U->V}(u_U) = u_V for all V <= U
  bool invariant_square = false;  // inv_V o res = [U:V] inv_U for all V <= U
  [[nodiscard]] bool is_formation() const { return first_failure.empty(); }
};

/// The window of X must cover degrees 1 and 2 of C.
FormationReport check_class_formation(const ResolutionPtr& x, const GComplex& c, std::size_t max_order = 24);

/// Hhat^0(G, C) -> G^ab as the composite of the inverse cup product with u and the
/// identification Hhat^{-2}(G, Z) = H_1(G, Z) = G^ab read off the degree-one generators.
struct ReciprocityReport {
  std::string source, target;
  IntMatrix matrix;             // canonical coordinates of Hhat^0(G, C) -> G^ab
  std::vector<int> generator_images;  // an element of G representing the image of each generator
  bool isomorphism = false;
  std::string density = "dense (finite level: surjective)";
};
/// Needs degrees -2 (for Z) and 0, 2 (for C) inside the window.
ReciprocityReport reciprocity_map(const ResolutionPtr& x, const GComplex& c, std::span<const Integer> u);

/// Matrix of Hhat^{-2}(G, Z) -> G^ab on canonical coordinates.
IntMatrix abelianization_map(const TateCohomology& z, const Abelianization& ab);

struct NormRow {
  Subgroup subgroup;
  std::string quotient;  // Hhat^0(G, C) / cor Hhat^0(V, C)
  std::string expected;  // (G/V)^ab
  bool isomorphism = false;
};
/// One row per normal subgroup V.
std::vector<NormRow> norm_group_table(const ResolutionPtr& x, const GComplex& c, std::span<const Integer> u,
                                      std::size_t max_order = 24);

}  // namespace tatecoh
