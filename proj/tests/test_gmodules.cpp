#include <gtest/gtest.h>

#include "tatecoh/errors.hpp"
#include "tatecoh/gmodule.hpp"

using namespace tatecoh;

namespace {

IntMatrix scalar(long long v) { return IntMatrix{{v}}; }

}  // namespace

TEST(GModules, TrivialModules) {
  FiniteGroup z4 = make_cyclic(4);
  GModule z = trivial_cyclic_module(z4);
  EXPECT_EQ(z.gens(), 1u);
  EXPECT_TRUE(z.relators().empty());
  for (const auto& a : z.actions()) EXPECT_EQ(a, scalar(1));
  GModule z5 = trivial_module(make_symmetric(3), cokernel_structure(scalar(5)));
  EXPECT_EQ(z5.torsion(), (IntVector{5}));
  EXPECT_EQ(z5.relators(), scalar(5));
  EXPECT_EQ(zero_module(z4).gens(), 0u);
  EXPECT_EQ(trivial_cyclic_module(z4, 1).gens(), 0u);
}

TEST(GModules, RegularModule) {
  EXPECT_EQ(regular_module(make_cyclic(1)).action(0), scalar(1));
  GModule r2 = regular_module(make_cyclic(2));
  EXPECT_EQ(r2.action(1), (IntMatrix{{0, 1}, {1, 0}}));
  FiniteGroup s3 = make_symmetric(3);
  GModule r = regular_module(s3);
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 6; ++h) {
      IntVector e(6);
      e[h] = 1;
      IntVector img = r.action(g) * std::span<const Integer>(e);
      IntVector expect(6);
      expect[s3.mul(g, h)] = 1;
      EXPECT_EQ(img, expect);
    }
}

TEST(GModules, FiniteFieldUnits) {
  GModule f4 = finite_field_units(2, 1, 2);
  EXPECT_EQ(f4.torsion(), (IntVector{3}));
  EXPECT_EQ(f4.action(1), scalar(2));
  GModule f9 = finite_field_units(3, 1, 2);
  EXPECT_EQ(f9.torsion(), (IntVector{8}));
  EXPECT_EQ(f9.action(1), scalar(3));
  GModule f8 = finite_field_units(2, 1, 3);
  EXPECT_EQ(f8.torsion(), (IntVector{7}));
  EXPECT_EQ(f8.action(2), scalar(4));
  GModule f5 = finite_field_units(5, 1, 1);
  EXPECT_EQ(f5.group().order(), 1u);
  EXPECT_EQ(f5.torsion(), (IntVector{4}));
  EXPECT_THROW(finite_field_units(4, 1, 2), InputError);
  EXPECT_THROW(finite_field_units(2, 1, 30, 1000), ComputationError);
}

TEST(GModules, PresentationNormalization) {
  FiniteGroup z2 = make_cyclic(2);
  // Z^2 / <(2,0),(0,3)> with trivial action is Z/6
  std::vector<IntMatrix> acts(2, IntMatrix::identity(2));
  GModule m = GModule::from_presentation(z2, 2, IntMatrix{{2, 0}, {0, 3}}, acts);
  EXPECT_EQ(m.torsion(), (IntVector{6}));
  // swap action on Z^2 / <(1,-1)> is Z with trivial action
  GModule q = GModule::from_presentation(z2, 2, IntMatrix{{1}, {-1}},
                                         {IntMatrix::identity(2), IntMatrix{{0, 1}, {1, 0}}});
  EXPECT_EQ(q.torsion(), (IntVector{0}));
  EXPECT_EQ(q.action(1), scalar(1));
}

TEST(GModules, RejectsBrokenActions) {
  FiniteGroup z2 = make_cyclic(2);
  EXPECT_THROW(GModule::from_diagonal(z2, {Integer(0)}, {scalar(1), scalar(2)}), InputError);
  EXPECT_THROW(GModule::from_diagonal(z2, {Integer(0)}, {scalar(-1), scalar(-1)}), InputError);
  // corrupt one entry of a valid regular action
  FiniteGroup z3 = make_cyclic(3);
  GModule r = regular_module(z3);
  auto acts = r.actions();
  acts[1](0, 0) = 1;
  EXPECT_THROW(GModule::from_diagonal(z3, r.torsion(), acts), InputError);
  // sends the order-2 generator into the free summand
  EXPECT_THROW(GModule::from_diagonal(z2, {Integer(2), Integer(0)},
                                      {IntMatrix::identity(2), IntMatrix{{1, 0}, {1, 1}}}),
               InputError);
}

TEST(GModules, Tensor) {
  FiniteGroup z2 = make_cyclic(2);
  GModule m = finite_field_units(2, 1, 2);
  GModule z = trivial_cyclic_module(z2);
  EXPECT_EQ(tensor(m, z), m);
  EXPECT_EQ(tensor(trivial_cyclic_module(z2, 2), trivial_cyclic_module(z2, 3)).gens(), 0u);
  GModule sq = tensor(m, m);
  EXPECT_EQ(sq.torsion(), (IntVector{3}));
  EXPECT_EQ(sq.action(1), scalar(1));
}

TEST(GModules, Dual) {
  FiniteGroup s3 = make_symmetric(3);
  GModule z = trivial_cyclic_module(s3);
  EXPECT_EQ(dual_module(z), z);
  GModule r = regular_module(s3);
  EXPECT_EQ(dual_module(r), r);
  EXPECT_EQ(dual_module(zero_module(s3)).gens(), 0u);
  EXPECT_THROW(dual_module(finite_field_units(2, 1, 2)), InputError);
}

TEST(GModules, Restriction) {
  FiniteGroup z4 = make_cyclic(4);
  GModule r = regular_module(z4);
  EXPECT_EQ(restrict_module(r, whole_group(z4)), r);
  GModule f4 = finite_field_units(2, 1, 2);
  GModule t = restrict_module(f4, trivial_subgroup(f4.group()));
  EXPECT_EQ(t.group().order(), 1u);
  EXPECT_EQ(t.torsion(), (IntVector{3}));
  GModule rh = restrict_module(r, generated_subgroup(z4, {2}));
  EXPECT_EQ(rh.gens(), 4u);
  // free over Z[Z/2]: the nontrivial element moves every basis vector
  for (std::size_t i = 0; i < 4; ++i) EXPECT_TRUE(rh.action(1)(i, i).is_zero());
}

TEST(GModules, FixedPointsAndNorm) {
  FiniteGroup z3 = make_cyclic(3);
  GModule z = trivial_cyclic_module(z3);
  EXPECT_EQ(fixed_points(z).to_string(), "Z");
  EXPECT_EQ(norm_endomorphism(z), scalar(3));
  EXPECT_TRUE(fixed_points(finite_field_units(2, 1, 2)).is_trivial());
  GModule r2 = regular_module(make_cyclic(2));
  AbGroup f = fixed_points(r2);
  EXPECT_EQ(f.to_string(), "Z");
  IntVector v = f.basis_lift.column(0);
  EXPECT_EQ(abs(v[0]), Integer(1));
  EXPECT_EQ(v[0], v[1]);
  EXPECT_EQ(norm_endomorphism(r2), (IntMatrix{{1, 1}, {1, 1}}));
}

TEST(GModules, NormLandsInFixedPoints) {
  for (const GModule& m : {finite_field_units(2, 1, 2), finite_field_units(3, 1, 2), finite_field_units(2, 1, 3),
                           regular_module(make_symmetric(3)), trivial_cyclic_module(make_cyclic(4)),
                           tensor(finite_field_units(2, 1, 2), finite_field_units(2, 1, 2))}) {
    IntMatrix n = norm_endomorphism(m);
    for (const auto& a : m.actions()) EXPECT_EQ(m.reduce_rows(a * n), n);
  }
}

TEST(GModules, ClassicalTateGroups) {
  GModule z = trivial_cyclic_module(make_cyclic(4));
  EXPECT_EQ(classical_tate_zero(z).group().to_string(), "Z/4");
  EXPECT_TRUE(classical_tate_minus_one(z).group().is_trivial());
  GModule f4 = finite_field_units(2, 1, 2);
  EXPECT_TRUE(classical_tate_zero(f4).group().is_trivial());
  EXPECT_TRUE(classical_tate_minus_one(f4).group().is_trivial());
  GModule f9 = finite_field_units(3, 1, 2);
  // x -> 3x on Z/8: fixed {0,4}, norm = x + 3x = 4x with image {0,4}
  EXPECT_TRUE(classical_tate_zero(f9).group().is_trivial());
}
