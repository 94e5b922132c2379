#include <gtest/gtest.h>

#include <functional>

#include "oracle.hpp"
#include "tatecoh/errors.hpp"
#include "tatecoh/tate.hpp"

using namespace tatecoh;

namespace {

FiniteGroup klein() { return direct_product(make_cyclic(2), make_cyclic(2)); }

ResolutionPtr periodic(const FiniteGroup& g, int n) {
  return std::make_shared<const CompleteResolution>(periodic_resolution(g, n));
}
ResolutionPtr bar(const FiniteGroup& g, int n) { return std::make_shared<const CompleteResolution>(bar_resolution(g, n)); }

GComplex z_at(const FiniteGroup& g, int deg) { return concentrate(trivial_cyclic_module(g), deg); }

// Z/k (k = 0 for Z) with g acting by multiplication by chi(g).
GModule scalar_module(const FiniteGroup& g, long long k, const std::function<long long(int)>& chi) {
  std::vector<IntMatrix> acts;
  for (std::size_t x = 0; x < g.order(); ++x) acts.push_back(IntMatrix{{chi(static_cast<int>(x))}});
  return GModule::from_diagonal(g, IntVector{Integer(k)}, std::move(acts));
}

// In S_3 the transpositions are exactly the elements of order 2.
long long sign_of_s3(const FiniteGroup& s3, int x) { return s3.element_order(x) == 2 ? -1 : 1; }

IntVector unit(std::size_t n, std::size_t i) {
  IntVector v(n);
  v[i] = Integer(1);
  return v;
}

Integer order_of(const TateCohomology& h, int q) { return h.group(q).order(); }

}  // namespace

TEST(Tate, CyclicPatternPeriodicAndBar) {
  for (std::size_t n : {2u, 3u, 4u, 6u}) {
    const FiniteGroup g = make_cyclic(n);
    const TateCohomology p(periodic(g, 6), z_at(g, 0), -3, 3);
    const TateCohomology b(bar(g, 4), z_at(g, 0), -3, 3);
    for (int q = -3; q <= 3; ++q) {
      const std::string expect = q % 2 == 0 ? "Z/" + std::to_string(n) : "0";
      EXPECT_EQ(p.group(q).to_string(), expect) << "n=" << n << " q=" << q;
      EXPECT_EQ(b.group(q).to_string(), expect) << "n=" << n << " q=" << q;
    }
  }
}

TEST(Tate, WindowTooSmallIsRejected) {
  const FiniteGroup g = make_cyclic(3);
  EXPECT_EQ(required_window(z_at(g, 0), -3, 3), 4);
  EXPECT_EQ(required_window(z_at(g, -2), -2, 3), 6);
  EXPECT_THROW(TateCohomology(periodic(g, 3), z_at(g, 0), -3, 3), ComputationError);
  EXPECT_NO_THROW(TateCohomology(periodic(g, 4), z_at(g, 0), -3, 3));
}

TEST(Tate, RegularModuleVanishes) {
  for (const FiniteGroup& g : {make_cyclic(2), make_cyclic(4), klein(), make_symmetric(3)}) {
    const TateCohomology h(bar(g, 4), concentrate(regular_module(g), 0), -3, 3);
    for (int q = -3; q <= 3; ++q) EXPECT_TRUE(h.group(q).is_trivial()) << g.name() << " q=" << q;
  }
}

TEST(Tate, TrivialSubgroupGivesZero) {
  const FiniteGroup g = make_symmetric(3);
  const TateCohomology h(bar(g, 3), z_at(g, 0), trivial_subgroup(g), -2, 2);
  for (int q = -2; q <= 2; ++q) EXPECT_TRUE(h.group(q).is_trivial());
}

TEST(Tate, SymmetricGroupIntegralCohomology) {
  // Hhat^{-2} = S_3^ab, Hhat^{-1} = 0, Hhat^0 = Z/6, Hhat^1 = Hom(S_3, Z) = 0, Hhat^2 = Hom(S_3, Q/Z)
  const FiniteGroup g = make_symmetric(3);
  const TateCohomology h(bar(g, 4), z_at(g, 0), -2, 2);
  EXPECT_EQ(h.group(-2).to_string(), "Z/2");
  EXPECT_EQ(h.group(-1).to_string(), "0");
  EXPECT_EQ(h.group(0).to_string(), "Z/6");
  EXPECT_EQ(h.group(1).to_string(), "0");
  EXPECT_EQ(h.group(2).to_string(), "Z/2");
}

TEST(Tate, KleinIntegralCohomology) {
  const FiniteGroup g = klein();
  // Hhat^{-3} = H_2(V4, Z) is the Schur multiplier Z/2
  const TateCohomology h(bar(g, 4), z_at(g, 0), -3, 2);
  EXPECT_EQ(h.group(-3).to_string(), "Z/2");
  EXPECT_EQ(h.group(-2).to_string(), "Z/2 + Z/2");
  EXPECT_EQ(h.group(-1).to_string(), "0");
  EXPECT_EQ(h.group(0).to_string(), "Z/4");
  EXPECT_EQ(h.group(1).to_string(), "0");
  EXPECT_EQ(h.group(2).to_string(), "Z/2 + Z/2");
}

namespace {

struct SmallCase {
  std::string label;
  GModule m;
};

std::vector<SmallCase> small_cases() {
  const FiniteGroup c2 = make_cyclic(2), c3 = make_cyclic(3), c4 = make_cyclic(4), v4 = klein();
  std::vector<SmallCase> out;
  out.push_back({"C2 on Z/2", trivial_cyclic_module(c2, 2)});
  out.push_back({"C2 on Z/3 by -1", scalar_module(c2, 3, [](int x) { return x ? -1 : 1; })});
  out.push_back({"C2 on Z/9 by -1", scalar_module(c2, 9, [](int x) { return x ? -1 : 1; })});
  out.push_back({"C3 on Z/3", trivial_cyclic_module(c3, 3)});
  out.push_back({"C3 on F8*", finite_field_units(2, 1, 3)});
  out.push_back({"C4 on Z/2", trivial_cyclic_module(c4, 2)});
  out.push_back({"C4 on Z/5 by 2", scalar_module(c4, 5, [](int x) { return x == 0 ? 1 : x == 1 ? 2 : x == 2 ? 4 : 3; })});
  out.push_back({"V4 on Z/2", trivial_cyclic_module(v4, 2)});
  out.push_back({"V4 on Z/3 by first sign", scalar_module(v4, 3, [](int x) { return x / 2 ? -1 : 1; })});
  // C3 permuting the nonzero vectors of (Z/2)^2
  {
    std::vector<IntMatrix> acts{IntMatrix::identity(2), IntMatrix{{0, 1}, {1, 1}}, IntMatrix{{1, 1}, {1, 0}}};
    out.push_back({"C3 on (Z/2)^2", GModule::from_diagonal(c3, IntVector{2, 2}, acts)});
  }
  return out;
}

}  // namespace

TEST(Tate, AgreesWithCocycleEnumeration) {
  for (const auto& c : small_cases()) {
    const FiniteGroup& g = c.m.group();
    const TateCohomology h(bar(g, 3), concentrate(c.m, 0), -1, 2);
    EXPECT_EQ(order_of(h, 1), Integer(static_cast<long long>(oracle::h1_order(c.m)))) << c.label;
    EXPECT_EQ(order_of(h, 2), Integer(static_cast<long long>(oracle::h2_order(c.m)))) << c.label;
    EXPECT_EQ(order_of(h, 0), Integer(static_cast<long long>(oracle::h0_tate_order(c.m)))) << c.label;
    EXPECT_EQ(order_of(h, -1), Integer(static_cast<long long>(oracle::hm1_tate_order(c.m)))) << c.label;
  }
}

TEST(Tate, ClassicalComparisonAgrees) {
  for (const auto& c : small_cases()) {
    const ClassicalComparison cmp = compare_with_classical(bar(c.m.group(), 2), c.m);
    EXPECT_TRUE(cmp.agrees) << c.label << ": " << cmp.hyper_zero << " vs " << cmp.classical_zero;
  }
  const FiniteGroup s3 = make_symmetric(3);
  const GModule sign = scalar_module(s3, 0, [&](int x) { return sign_of_s3(s3, x); });
  EXPECT_TRUE(compare_with_classical(bar(s3, 2), sign).agrees);
  EXPECT_TRUE(compare_with_classical(bar(s3, 2), regular_module(s3)).agrees);
}

TEST(Tate, ShiftIdentity) {
  const FiniteGroup s3 = make_symmetric(3);
  const std::vector<std::pair<ResolutionPtr, GModule>> cases{
      {periodic(make_cyclic(4), 6), scalar_module(make_cyclic(4), 0, [](int x) { return x % 2 ? -1 : 1; })},
      {bar(klein(), 4), trivial_cyclic_module(klein(), 0)},
      {bar(s3, 4), scalar_module(s3, 0, [&](int x) { return sign_of_s3(s3, x); })},
  };
  for (const auto& [x, m] : cases) {
    const GComplex c = concentrate(m, 0);
    const TateCohomology base(x, c, -3, 3);
    for (int n = -2; n <= 2; ++n) {
      const TateCohomology shifted(x, shift(c, n), -1, 1);
      for (int q = -1; q <= 1; ++q)
        EXPECT_TRUE(shifted.group(q).same_structure(base.group(q + n)))
            << m.group().name() << " n=" << n << " q=" << q;
    }
  }
}

TEST(Tate, Hilbert90AndHerbrandQuotient) {
  struct Field {
    long long p, f, n;
  };
  for (const Field& fl : {Field{2, 1, 2}, Field{3, 1, 2}, Field{2, 1, 3}, Field{2, 2, 2}, Field{5, 1, 2}, Field{2, 1, 4}}) {
    const GModule m = finite_field_units(fl.p, fl.f, fl.n);
    const TateCohomology h(periodic(m.group(), 4), concentrate(m, 0), -1, 2);
    EXPECT_TRUE(h.group(1).is_trivial()) << fl.p << "^" << fl.f * fl.n;
    EXPECT_EQ(order_of(h, 0), order_of(h, 1));
    EXPECT_EQ(order_of(h, 2), order_of(h, 0));
  }
  for (std::size_t n : {2u, 3u, 5u}) {
    const FiniteGroup g = make_cyclic(n);
    const TateCohomology h(periodic(g, 4), z_at(g, 0), -1, 2);
    EXPECT_EQ(order_of(h, 0), Integer(static_cast<long long>(n)) * order_of(h, 1));
    const TateCohomology r(periodic(g, 4), concentrate(regular_module(g), 0), -1, 2);
    EXPECT_EQ(order_of(r, 0), order_of(r, 1));
  }
}

TEST(Tate, CorestrictionAfterRestrictionIsIndex) {
  const FiniteGroup s3 = make_symmetric(3);
  const std::vector<std::pair<ResolutionPtr, GComplex>> cases{
      {periodic(make_cyclic(4), 4), z_at(make_cyclic(4), 0)},
      {periodic(make_cyclic(6), 4), concentrate(scalar_module(make_cyclic(6), 0, [](int x) { return x % 2 ? -1 : 1; }), 0)},
      {bar(klein(), 3), z_at(klein(), 0)},
      {bar(klein(), 3), concentrate(scalar_module(klein(), 3, [](int x) { return x / 2 ? -1 : 1; }), 0)},
      {bar(s3, 3), z_at(s3, 0)},
      {bar(s3, 3), concentrate(regular_module(s3), 0)},
  };
  for (const auto& [x, c] : cases) {
    const FiniteGroup& g = x->group();
    const TateCohomology hg(x, c, -1, 1);
    for (const Subgroup& h : all_subgroups(g)) {
      const TateCohomology hh(x, c, h, -1, 1);
      const Integer index(static_cast<long long>(g.order() / h.order()));
      for (int q = -1; q <= 1; ++q) {
        const IntMatrix cr = corestriction_matrix(hh, hg, q) * restriction_matrix(hg, hh, q);
        const AbGroup& a = hg.group(q);
        for (std::size_t i = 0; i < a.ngens(); ++i)
          EXPECT_EQ(a.reduce(cr.column(i)), a.reduce(scale(index, unit(a.ngens(), i))))
              << g.name() << " |H|=" << h.order() << " q=" << q;
      }
    }
  }
}

TEST(Tate, RestrictionIsTransitive) {
  const FiniteGroup g = make_cyclic(8);
  const ResolutionPtr x = periodic(g, 4);
  const GComplex c = z_at(g, 0);
  const Subgroup h4 = generated_subgroup(g, {2}), h2 = generated_subgroup(g, {4});
  const TateCohomology a(x, c, -2, 2), b(x, c, h4, -2, 2), d(x, c, h2, -2, 2);
  for (int q = -2; q <= 2; ++q) {
    const IntMatrix two_step = restriction_matrix(b, d, q) * restriction_matrix(a, b, q);
    const IntMatrix direct = restriction_matrix(a, d, q);
    for (std::size_t i = 0; i < two_step.cols(); ++i)
      EXPECT_EQ(d.group(q).reduce(two_step.column(i)), d.group(q).reduce(direct.column(i)));
  }
  // restriction of a generator of Hhat^2(Z/8, Z) generates Hhat^2 of every subgroup
  const TateClass u = a.make_class(2, IntVector{1});
  EXPECT_EQ(restriction(a, b, u).order, Integer(4));
  EXPECT_EQ(restriction(a, d, u).order, Integer(2));
  // cor res u = 4u has order 2
  EXPECT_EQ(corestriction(d, a, restriction(a, d, u)).order, Integer(2));
}

TEST(Tate, ChainLiftSatisfiesChainRule) {
  {
    const FiniteGroup g = make_cyclic(3);
    const ResolutionPtr x = periodic(g, 6);
    const TateCohomology z(x, z_at(g, 0), -2, 2);
    for (int s = -2; s <= 2; ++s) {
      if (z.group(s).is_trivial()) continue;
      const ChainLift tau(z.total(), s, z.data(s).representative(0), -3 - s + 1, 3 - s - 1);
      EXPECT_TRUE(tau.verify()) << "s=" << s;
    }
  }
  {
    const FiniteGroup g = make_symmetric(3);
    const ResolutionPtr x = bar(g, 4);
    const Subgroup h = generated_subgroup(g, {1});
    const TateCohomology z(x, z_at(g, 0), h, 2, 2);
    ASSERT_EQ(z.group(2).to_string(), "Z/2");
    const ChainLift tau(z.total(), 2, z.data(2).representative(0), -3, -1);
    EXPECT_TRUE(tau.verify());
  }
}

TEST(Tate, CupMatchesDiagonalApproximation) {
  for (const ResolutionPtr& x : {periodic(make_cyclic(3), 5), periodic(make_cyclic(4), 5), bar(make_cyclic(2), 5)}) {
    const FiniteGroup& g = x->group();
    const DiagonalApproximation diag(x, 4);
    ASSERT_TRUE(diag.verify()) << x->kind();
    const TateCohomology z(x, z_at(g, 0), 2, 4);
    const IntVector gen2 = z.data(2).representative(0);
    const IntVector via_diag = z.coordinates(4, diag.cup_cochains(2, gen2, 2, gen2));
    const IntMatrix cup = cup_matrix(z, z, 2, IntVector{1}, 4);
    const AbGroup& h4 = z.group(4);
    const IntVector via_lift = h4.reduce(cup.column(0));
    const bool same = h4.reduce(via_diag) == via_lift || h4.reduce(scale(Integer(-1), via_diag)) == via_lift;
    EXPECT_TRUE(same) << x->kind() << " |G|=" << g.order();
    EXPECT_EQ(h4.element_order(via_lift), Integer(static_cast<long long>(g.order())));
  }
}

TEST(Tate, CupIsomorphismForCyclicGroups) {
  for (std::size_t n : {2u, 3u, 4u, 6u}) {
    const FiniteGroup g = make_cyclic(n);
    const TnkReport rep = tate_nakayama_check(periodic(g, 6), z_at(g, 0), IntVector{1}, -2, 3);
    EXPECT_TRUE(rep.hypothesis_i);
    EXPECT_TRUE(rep.hypothesis_ii);
    EXPECT_TRUE(rep.all_pass()) << "n=" << n;
    EXPECT_EQ(rep.isomorphism.size(), 6u);
  }
}

TEST(Tate, CupIsomorphismForTautologicalComplex) {
  const FiniteGroup g = make_symmetric(3);
  const TnkReport rep = tate_nakayama_check(bar(g, 4), z_at(g, 2), IntVector{1}, 0, 2);
  EXPECT_TRUE(rep.all_pass()) << rep.failure;
}

TEST(Tate, CupCriterionRejectsCounterexamples) {
  const FiniteGroup c4 = make_cyclic(4), v4 = klein(), s3 = make_symmetric(3), c2 = make_cyclic(2);
  struct Case {
    ResolutionPtr x;
    GComplex c;
    IntVector a;
  };
  const std::vector<Case> cases{
      {periodic(c4, 6), z_at(c4, 0), IntVector{2}},   // not a generator
      {bar(v4, 3), z_at(v4, 0), IntVector{1, 0}},     // Hhat^2 not cyclic
      {bar(s3, 3), z_at(s3, 0), IntVector{1}},        // Hhat^2 has order 2, not 6
      {periodic(c2, 6), concentrate(regular_module(c2), 0), IntVector{}},
  };
  for (const auto& c : cases) {
    const TnkReport rep = tate_nakayama_check(c.x, c.c, c.a, -1, 1);
    EXPECT_TRUE(rep.hypothesis_i) << c.x->group().name();
    EXPECT_FALSE(rep.hypothesis_ii) << c.x->group().name();
    EXPECT_FALSE(rep.all_pass());
    EXPECT_TRUE(rep.isomorphism.empty());
    EXPECT_NE(rep.failure.find("hypothesis (ii)"), std::string::npos) << rep.failure;
  }
}

TEST(Tate, ConeOrderIdentity) {
  for (const ResolutionPtr& x : {periodic(make_cyclic(4), 4), periodic(make_cyclic(6), 4), bar(klein(), 4)}) {
    const FiniteGroup& g = x->group();
    for (long long m = 1; m <= 4; ++m) {
      const ConeReport rep = cone_les_check(x, z_at(g, 0), m, -2, 2);
      EXPECT_TRUE(rep.all_pass()) << g.name() << " m=" << m;
      for (const auto& row : rep.rows) EXPECT_EQ(row.cone_order, row.quotient_order * row.torsion_order);
    }
  }
}

TEST(Tate, ConeOfUnitsModule) {
  const GModule m = finite_field_units(2, 1, 2);
  const ConeReport rep = cone_les_check(periodic(m.group(), 4), concentrate(m, 0), 3, -2, 2);
  EXPECT_TRUE(rep.all_pass());
}

TEST(Tate, MismatchedInputsAreRejected) {
  const FiniteGroup g = make_cyclic(4);
  const ResolutionPtr x = periodic(g, 4), y = periodic(g, 4);
  const TateCohomology a(x, z_at(g, 0), -1, 1), b(y, z_at(g, 0), generated_subgroup(g, {2}), -1, 1);
  EXPECT_THROW(restriction_matrix(a, b, 0), InputError);
  const TateCohomology wide(x, GComplex(g, 0, {trivial_cyclic_module(g), trivial_cyclic_module(g), trivial_cyclic_module(g)},
                                        {IntMatrix{{0}}, IntMatrix{{0}}}),
                            0, 1);
  const TateCohomology z(x, z_at(g, 0), -2, -1);
  EXPECT_THROW(cup_with(z, wide, IntVector(wide.group(0).ngens()), 0), InputError);
}
