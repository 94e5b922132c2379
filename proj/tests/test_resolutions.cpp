#include <gtest/gtest.h>

#include "tatecoh/errors.hpp"
#include "tatecoh/resolution.hpp"

using namespace tatecoh;

namespace {

FiniteGroup klein() { return direct_product(make_cyclic(2), make_cyclic(2)); }

// Z-rank of the kernel minus the rank of the incoming image, via dense SNF
bool exact_by_ranks(const SparseMatrix& in, const SparseMatrix& out) {
  SnfResult a = smith_normal_form(in.to_dense()), b = smith_normal_form(out.to_dense());
  if (a.rank + b.rank != in.rows()) return false;
  for (std::size_t i = 0; i < a.rank; ++i)
    if (!a.diagonal[i].is_unit()) return false;
  return true;
}

}  // namespace

TEST(Resolutions, BarTrivialGroup) {
  FreeResolution r = bar_resolution(make_cyclic(1), 4);
  for (int i = 0; i <= 4; ++i) EXPECT_EQ(r.ranks[i], 1u);
  for (int i = 1; i <= 4; ++i) {
    IntMatrix d = r.boundary[i].z_expand(r.group).to_dense();
    EXPECT_EQ(d, (IntMatrix{{i % 2 == 0 ? 1 : 0}}));
  }
}

TEST(Resolutions, BarRanks) {
  FreeResolution r = bar_resolution(make_cyclic(2), 3);
  EXPECT_EQ(r.ranks, (std::vector<std::size_t>{1, 2, 4, 8}));
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(r.boundary[i].z_expand(r.group).cols(), r.ranks[i] * 2);
  EXPECT_THROW(bar_resolution(make_symmetric(3), 6), ComputationError);
}

TEST(Resolutions, BarIsExact) {
  FreeResolution r = bar_resolution(make_cyclic(3), 3);
  for (int i = 1; i < 3; ++i)
    EXPECT_TRUE(exact_by_ranks(r.boundary[i + 1].z_expand(r.group), r.boundary[i].z_expand(r.group)));
}

TEST(Resolutions, PeriodicMatrices) {
  FreeResolution t = periodic_resolution(make_cyclic(1), 4);
  EXPECT_EQ(t.boundary[1].z_expand(t.group).to_dense(), (IntMatrix{{0}}));
  EXPECT_EQ(t.boundary[2].z_expand(t.group).to_dense(), (IntMatrix{{1}}));
  FreeResolution r = periodic_resolution(make_cyclic(4), 4);
  IntMatrix P(4, 4);
  for (int i = 0; i < 4; ++i) P((i + 1) % 4, i) = 1;
  IntMatrix I = IntMatrix::identity(4);
  IntMatrix norm = I + P + P * P + P * P * P;
  EXPECT_EQ(r.boundary[1].z_expand(r.group).to_dense(), P - I);
  EXPECT_EQ(r.boundary[2].z_expand(r.group).to_dense(), norm);
  EXPECT_EQ(r.boundary[3].z_expand(r.group).to_dense(), P - I);
  EXPECT_THROW(periodic_resolution(klein(), 2), InputError);
}

TEST(Resolutions, CompleteResolutionSplice) {
  CompleteResolution x(periodic_resolution(make_cyclic(2), 4));
  EXPECT_EQ(x.window(), 4);
  EXPECT_EQ(x.differential(0).z_expand(x.group()).to_dense(), (IntMatrix{{1, 1}, {1, 1}}));
  ExactnessReport rep = validate_complete_resolution(x);
  EXPECT_TRUE(rep.all_pass());
  EXPECT_EQ(rep.z_ranks.size(), 9u);
  CompleteResolution t(bar_resolution(make_cyclic(1), 3));
  EXPECT_TRUE(validate_complete_resolution(t).all_pass());
  EXPECT_EQ(t.differential(0).z_expand(t.group()).to_dense(), (IntMatrix{{1}}));
}

TEST(Resolutions, CompleteResolutionsAreExact) {
  EXPECT_TRUE(validate_complete_resolution(CompleteResolution(periodic_resolution(make_cyclic(6), 4))).all_pass());
  EXPECT_TRUE(validate_complete_resolution(CompleteResolution(bar_resolution(make_cyclic(6), 3))).all_pass());
  EXPECT_TRUE(validate_complete_resolution(CompleteResolution(bar_resolution(klein(), 4))).all_pass());
  EXPECT_TRUE(validate_complete_resolution(CompleteResolution(bar_resolution(make_symmetric(3), 3))).all_pass());
}

TEST(Resolutions, ValidatorCatchesTampering) {
  CompleteResolution x(periodic_resolution(make_cyclic(3), 4));
  for (int p : {-3, -1, 0, 2}) {
    const GroupRingMatrix& d = x.differential(p);
    ExactnessReport rep = validate_complete_resolution(x.with_differential(p, GroupRingMatrix(d.rows(), d.cols())));
    EXPECT_FALSE(rep.all_pass()) << "degree " << p;
    // zeroing d^p breaks exactness at p + 1 (image lost) and at p (kernel grows)
    auto f = rep.failures();
    if (p + 1 < 4) EXPECT_NE(std::find(f.begin(), f.end(), p + 1), f.end()) << "degree " << p;
  }
}

TEST(Resolutions, EngineSelection) {
  EXPECT_EQ(make_complete_resolution(make_cyclic(4), Engine::Auto, 3).kind(), "periodic");
  EXPECT_EQ(make_complete_resolution(klein(), Engine::Auto, 3).kind(), "bar");
  EXPECT_EQ(parse_engine("bar"), Engine::Bar);
  EXPECT_THROW(parse_engine("fast"), InputError);
}
