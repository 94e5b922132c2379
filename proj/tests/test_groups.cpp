#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "tatecoh/errors.hpp"
#include "tatecoh/group.hpp"

using namespace tatecoh;

namespace {

std::vector<std::size_t> subgroup_orders(const FiniteGroup& g) {
  std::vector<std::size_t> o;
  for (const auto& h : all_subgroups(g)) o.push_back(h.order());
  return o;
}

// closure of every subset, independent of the incremental enumeration
std::size_t count_subgroups_by_subsets(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::size_t count = 0;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    if (!(mask & (1ul << g.identity()))) continue;
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a)
      for (std::size_t b = 0; b < n && closed; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !(mask >> g.mul(int(a), int(b)) & 1)) closed = false;
    if (closed) ++count;
  }
  return count;
}

}  // namespace

TEST(Groups, Cyclic) {
  EXPECT_EQ(make_cyclic(1).order(), 1u);
  FiniteGroup z4 = make_cyclic(4);
  EXPECT_EQ(z4.mul(3, 2), 1);
  EXPECT_EQ(z4.inv(1), 3);
  EXPECT_EQ(subgroup_orders(make_cyclic(6)), (std::vector<std::size_t>{1, 2, 3, 6}));
  EXPECT_EQ(z4.cyclic_generator(), 1);
}

TEST(Groups, DirectProduct) {
  FiniteGroup v4 = direct_product(make_cyclic(2), make_cyclic(2));
  EXPECT_EQ(v4.order(), 4u);
  EXPECT_FALSE(v4.is_cyclic());
  EXPECT_EQ(all_subgroups(v4).size(), 5u);
  FiniteGroup z6 = direct_product(make_cyclic(2), make_cyclic(3));
  EXPECT_EQ(abelianization(z6).group.to_string(), "Z/6");
  FiniteGroup s3 = make_symmetric(3);
  FiniteGroup s3t = direct_product(s3, make_cyclic(1));
  EXPECT_EQ(s3t.table(), s3.table());
}

TEST(Groups, FromTableValidation) {
  EXPECT_EQ(FiniteGroup::from_table({{0}}).order(), 1u);
  FiniteGroup s3 = make_symmetric(3);
  EXPECT_EQ(FiniteGroup::from_table(s3.table()).order(), 6u);

  auto corrupt = make_cyclic(3).table();
  corrupt[1][1] = 1;
  try {
    FiniteGroup::from_table(corrupt);
    FAIL() << "corrupted table accepted";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("associativity fails at"), std::string::npos);
  }
  // associative monoid without inverses
  try {
    FiniteGroup::from_table({{0, 1}, {1, 1}});
    FAIL() << "monoid accepted";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("no inverse"), std::string::npos);
  }
  // a loop (Latin square with identity) that is not associative
  std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    FiniteGroup::from_table(loop);
    FAIL() << "non-associative table accepted";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("associativity fails at"), std::string::npos);
  }
  try {
    FiniteGroup::from_table({{1, 1}, {1, 1}});
    FAIL() << "table without identity accepted";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("no identity"), std::string::npos);
  }
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}}), InputError);
}

TEST(Groups, SymmetricMatchesPermutationComposition) {
  FiniteGroup s3 = make_symmetric(3);
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      EXPECT_EQ(perms[s3.mul(int(a), int(b))], c);
    }
}

TEST(Groups, SubgroupEnumeration) {
  EXPECT_EQ(subgroup_orders(make_cyclic(4)), (std::vector<std::size_t>{1, 2, 4}));
  FiniteGroup s3 = make_symmetric(3);
  auto subs = all_subgroups(s3);
  ASSERT_EQ(subs.size(), 6u);
  for (const auto& h : subs) {
    bool brute_normal = true;
    for (std::size_t g = 0; g < 6; ++g)
      for (int x : h.elements)
        if (!h.contains(s3.mul(s3.mul(int(g), x), s3.inv(int(g))))) brute_normal = false;
    EXPECT_EQ(h.is_normal, brute_normal);
    EXPECT_EQ(h.is_normal, h.order() != 2);
  }
  for (const FiniteGroup& g : {make_cyclic(6), make_symmetric(3), direct_product(make_cyclic(2), make_cyclic(2)),
                               direct_product(make_cyclic(2), make_cyclic(4))})
    EXPECT_EQ(all_subgroups(g).size(), count_subgroups_by_subsets(g));
  EXPECT_THROW(all_subgroups(make_symmetric(5)), ComputationError);
}

TEST(Groups, CosetRepresentatives) {
  FiniteGroup z4 = make_cyclic(4);
  EXPECT_EQ(coset_representatives(z4, whole_group(z4)), (std::vector<int>{0}));
  EXPECT_EQ(coset_representatives(z4, generated_subgroup(z4, {2})), (std::vector<int>{0, 1}));
  FiniteGroup s3 = make_symmetric(3);
  for (const auto& h : all_subgroups(s3)) {
    for (bool left : {true, false}) {
      auto reps = left ? coset_representatives(s3, h) : right_coset_representatives(s3, h);
      EXPECT_EQ(reps.size() * h.order(), 6u);
      EXPECT_EQ(reps.front(), s3.identity());
      std::vector<int> seen(6, 0);
      for (int r : reps)
        for (int x : h.elements) ++seen[left ? s3.mul(r, x) : s3.mul(x, r)];
      EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    }
  }
}

TEST(Groups, Abelianization) {
  auto z5 = abelianization(make_cyclic(5));
  EXPECT_EQ(z5.group.to_string(), "Z/5");
  EXPECT_EQ(z5.group.element_order(z5.projection[1]), Integer(5));
  auto s3 = abelianization(make_symmetric(3));
  EXPECT_EQ(s3.group.to_string(), "Z/2");
  FiniteGroup v4 = direct_product(make_cyclic(2), make_cyclic(2));
  EXPECT_EQ(abelianization(v4).group.to_string(), "Z/2 + Z/2");
  for (const FiniteGroup& g : {make_symmetric(3), make_symmetric(4), make_cyclic(12), v4,
                               direct_product(make_symmetric(3), make_cyclic(2))}) {
    auto ab = abelianization(g);
    EXPECT_EQ(ab.group.order() * Integer(commutator_subgroup(g).order()), Integer(g.order()));
    // projection is a homomorphism
    for (std::size_t a = 0; a < g.order(); ++a)
      for (std::size_t b = 0; b < g.order(); ++b)
        EXPECT_EQ(ab.group.reduce(add(ab.projection[a], ab.projection[b])), ab.projection[g.mul(int(a), int(b))]);
  }
}

TEST(Groups, ProductAssociativityUpToAbelianInvariants) {
  FiniteGroup a = make_cyclic(2), b = make_symmetric(3), c = make_cyclic(4);
  auto l = abelianization(direct_product(direct_product(a, b), c)).group;
  auto r = abelianization(direct_product(a, direct_product(b, c))).group;
  EXPECT_TRUE(l.same_structure(r));
}

TEST(Groups, Quotient) {
  FiniteGroup z4 = make_cyclic(4);
  Quotient q = quotient(z4, generated_subgroup(z4, {2}));
  EXPECT_EQ(q.group.order(), 2u);
  EXPECT_TRUE(q.group.is_cyclic());
  FiniteGroup s3 = make_symmetric(3);
  Quotient qs = quotient(s3, commutator_subgroup(s3));
  EXPECT_EQ(qs.group.order(), 2u);
  EXPECT_THROW(quotient(s3, generated_subgroup(s3, {1})), InputError);
}
