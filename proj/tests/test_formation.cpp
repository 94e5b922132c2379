#include <gtest/gtest.h>

#include <numeric>

#include "tatecoh/formation.hpp"

using namespace tatecoh;

namespace {

FiniteGroup klein() { return direct_product(make_cyclic(2), make_cyclic(2)); }
ResolutionPtr periodic(const FiniteGroup& g, int n) {
  return std::make_shared<const CompleteResolution>(periodic_resolution(g, n));
}
ResolutionPtr bar(const FiniteGroup& g, int n) { return std::make_shared<const CompleteResolution>(bar_resolution(g, n)); }
GComplex z_at(const FiniteGroup& g, int deg) { return concentrate(trivial_cyclic_module(g), deg); }

}  // namespace

TEST(Formation, CyclicGroupsWithIntegers) {
  for (std::size_t n : {1u, 2u, 3u, 4u, 6u}) {
    const FiniteGroup g = make_cyclic(n);
    const FormationReport rep = check_class_formation(periodic(g, 4), z_at(g, 0));
    EXPECT_TRUE(rep.is_formation()) << "n=" << n << " " << rep.detail;
    EXPECT_TRUE(rep.c1 && rep.c2 && rep.c3);
    EXPECT_TRUE(rep.compatibility);
    EXPECT_TRUE(rep.invariant_square);
    // every generator of Hhat^2(Z/n, Z) works, and the least one is chosen
    std::size_t phi = 0;
    for (std::size_t k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1 ? 1 : 0;
    EXPECT_EQ(rep.witnesses, phi);
    if (n > 1) EXPECT_EQ(rep.fundamental_class, IntVector{1});
  }
}

TEST(Formation, FailuresReportFirstAxiom) {
  const FiniteGroup v4 = klein(), s3 = make_symmetric(3), c2 = make_cyclic(2);
  const FormationReport a = check_class_formation(bar(v4, 3), z_at(v4, 0));
  EXPECT_EQ(a.first_failure, "C2");
  EXPECT_TRUE(a.c1);
  const FormationReport b = check_class_formation(bar(s3, 3), z_at(s3, 0));
  EXPECT_EQ(b.first_failure, "C2");
  // units of F_4 in degree 1: Hhat^1 = Hhat^0(F_4^*) = 0 but Hhat^2 = Hhat^1(F_4^*) = 0 too
  const FormationReport c = check_class_formation(periodic(c2, 4), concentrate(finite_field_units(2, 1, 2), 1));
  EXPECT_EQ(c.first_failure, "C2");
  EXPECT_TRUE(c.c1);
  const FormationReport d = check_class_formation(periodic(c2, 4), concentrate(regular_module(c2), 0));
  EXPECT_EQ(d.first_failure, "C2");
  // Z in degree 1: Hhat^1(H, Z[-1]) = Hhat^0(H, Z) = Z/|H| breaks C1 first
  const FormationReport e = check_class_formation(periodic(c2, 4), z_at(c2, 1));
  EXPECT_EQ(e.first_failure, "C1");
  EXPECT_FALSE(e.c3);
}

TEST(Formation, TautologicalComplexIsAFormation) {
  for (const FiniteGroup& g : {make_symmetric(3), klein()}) {
    const FormationReport rep = check_class_formation(bar(g, 3), z_at(g, 2));
    EXPECT_TRUE(rep.is_formation()) << g.name() << " " << rep.detail;
    EXPECT_EQ(rep.rows.size(), all_subgroups(g).size());
  }
}

TEST(Formation, AbelianizationMapIsIsomorphism) {
  for (const ResolutionPtr& x : {periodic(make_cyclic(4), 3), periodic(make_cyclic(6), 3), bar(klein(), 3),
                                 bar(make_symmetric(3), 3), bar(make_cyclic(3), 3)}) {
    const FiniteGroup& g = x->group();
    const TateCohomology z(x, z_at(g, 0), -2, -2);
    const Abelianization ab = abelianization(g);
    EXPECT_TRUE(is_isomorphism(z.group(-2), ab.group, abelianization_map(z, ab))) << g.name() << " " << x->kind();
  }
}

TEST(Formation, ReciprocityForCyclicGroup) {
  const FiniteGroup g = make_cyclic(4);
  const ResolutionPtr x = periodic(g, 3);
  const ReciprocityReport r = reciprocity_map(x, z_at(g, 0), IntVector{1});
  EXPECT_TRUE(r.isomorphism);
  EXPECT_EQ(r.source, "Z/4");
  EXPECT_EQ(r.target, "Z/4");
  ASSERT_EQ(r.generator_images.size(), 1u);
  EXPECT_EQ(g.element_order(r.generator_images[0]), 4u);
  EXPECT_EQ(r.density, "dense (finite level: surjective)");
  // the same map computed on the bar resolution
  const ReciprocityReport rb = reciprocity_map(bar(g, 3), z_at(g, 0), IntVector{1});
  EXPECT_TRUE(rb.isomorphism);
}

TEST(Formation, NormGroupTable) {
  const FiniteGroup g = make_cyclic(4);
  const auto rows = norm_group_table(periodic(g, 3), z_at(g, 0), IntVector{1});
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& row : rows) {
    EXPECT_TRUE(row.isomorphism) << row.subgroup.order();
    EXPECT_EQ(row.quotient, row.expected);
    EXPECT_EQ(row.quotient, g.order() / row.subgroup.order() == 1 ? "0" : "Z/" + std::to_string(g.order() / row.subgroup.order()));
  }
  const FiniteGroup s3 = make_symmetric(3);
  const auto srows = norm_group_table(bar(s3, 3), z_at(s3, 2), IntVector{1});
  ASSERT_EQ(srows.size(), 3u);
  for (const auto& row : srows) EXPECT_TRUE(row.isomorphism) << row.subgroup.order();
}
