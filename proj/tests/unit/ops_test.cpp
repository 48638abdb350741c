#include <gtest/gtest.h>

#include <random>

#include "brauer/complexes/generators.hpp"
#include "brauer/ops/operations.hpp"

using namespace brauer;
using namespace brauer::ops;
using brauer::complexes::em_space_2;
using brauer::complexes::moore_polygon;
using brauer::complexes::suspension;
using brauer::complexes::torus;

namespace {

TEST(Cup, TorusFundamentalClass) {
  OperationContext ctx(torus());
  const auto h1 = ctx.group(1, 0);
  ASSERT_EQ(h1->to_string(), "Z^2");
  const auto a = CohomologyClass::generator(h1, 0);
  const auto b = CohomologyClass::generator(h1, 1);
  const auto ab = cup(ctx, a, b);
  ASSERT_EQ(ab.coords.size(), 1u);
  EXPECT_EQ(abs(ab.coords[0]), Integer(1));
  EXPECT_EQ(cup(ctx, b, a), -ab);
  EXPECT_TRUE(cup(ctx, a, a).is_zero());
  EXPECT_TRUE(cup(ctx, b, b).is_zero());
}

TEST(Cup, UnitIsTheConstantCocycle) {
  OperationContext ctx(suspension(moore_polygon(3)));
  const Cochain one(0, 0, IntVector(ctx.count(0), Integer(1)));
  const auto g = ctx.group(3, 0)->generators()[0];
  EXPECT_EQ(cup(ctx, one, g), g);
  EXPECT_EQ(cup(ctx, g, one), g);
}

TEST(Cup, ModulusRules) {
  OperationContext ctx(torus());
  const auto x = ctx.group(1, 0)->generators()[0];
  const auto y = x.reduced(3);
  EXPECT_EQ(cup(ctx, x, y).modulus, Integer(3));
  EXPECT_EQ(cup(ctx, y, x).modulus, Integer(3));
  EXPECT_THROW(cup(ctx, y, x.reduced(5)), ModulusMismatchError);
  EXPECT_THROW(cup(ctx, x, Cochain(1, 0, IntVector(2))), SpaceMismatchError);
}

TEST(Cup1, DegreeRules) {
  OperationContext ctx(torus());
  const Cochain one(0, 0, IntVector(ctx.count(0), Integer(1)));
  EXPECT_THROW(cup1(ctx, one, one), InvalidArgumentError);
  const auto x = ctx.group(1, 0)->generators()[0];
  EXPECT_TRUE(cup1(ctx, one, x).is_zero());
  EXPECT_EQ(cup1(ctx, x, x).degree, 1u);
}

TEST(Cup1, CoboundaryFormula) {
  OperationContext ctx(torus());
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    IntVector xv(ctx.count(1)), yv(ctx.count(1));
    for (auto& v : xv) v = static_cast<long>(rng() % 7) - 3;
    for (auto& v : yv) v = static_cast<long>(rng() % 7) - 3;
    const Cochain x(1, 0, xv), y(1, 0, yv);
    const Cochain lhs = ctx.coboundary(cup1(ctx, x, y));
    // p = q = 1: (-1)^3 (x u y + y u x) + dx u_1 y - x u_1 dy
    const Cochain rhs = -(cup(ctx, x, y) + cup(ctx, y, x)) + cup1(ctx, ctx.coboundary(x), y) -
                        cup1(ctx, x, ctx.coboundary(y));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Bockstein, MooreSpaces) {
  for (unsigned n : {2u, 3u, 4u}) {
    OperationContext ctx(moore_polygon(n));
    const auto h1 = ctx.group(1, n);
    ASSERT_EQ(h1->to_string(), "Z/" + std::to_string(n));
    const auto b = bockstein(ctx, CohomologyClass::generator(h1, 0));
    EXPECT_EQ(b.group, ctx.group(2, 0));
    EXPECT_EQ(cohomology::torsion_class_order(b), Integer(n));
  }
}

TEST(Bockstein, RejectsNonCocycleAndIntegral) {
  OperationContext ctx(moore_polygon(2));
  Cochain z(1, 2, IntVector(ctx.count(1)));
  z.values[0] = 1;
  if (!ctx.group(1, 2)->is_cocycle(z)) {
    EXPECT_THROW(bockstein_cochain(ctx, z), NotACocycleError);
  }
  EXPECT_THROW(bockstein_cochain(ctx, z.lifted()), ModulusMismatchError);
}

TEST(ChangeCoefficients, ReductionAndInclusion) {
  const Cochain z(1, 0, IntVector{5, -1});
  EXPECT_EQ(change_coefficients(z, 4).values, (IntVector{1, 3}));
  const Cochain w(1, 2, IntVector{1, 0});
  EXPECT_EQ(change_coefficients(w, 6).values, (IntVector{3, 0}));
  EXPECT_EQ(change_coefficients(Cochain(1, 6, IntVector{5, 4}), 3).values, (IntVector{2, 1}));
  EXPECT_THROW(change_coefficients(Cochain(1, 4, IntVector{1, 1}), 6), ModulusMismatchError);
  EXPECT_THROW(change_coefficients(z, 1), InvalidArgumentError);
}

TEST(ChangeCoefficients, ClassLevel) {
  OperationContext ctx(moore_polygon(4));
  const auto g = CohomologyClass::generator(ctx.group(2, 0), 0);
  const auto r2 = reduce_coeffs(ctx, g, 2);
  EXPECT_EQ(cohomology::torsion_class_order(r2), Integer(2));
  const auto r8 = reduce_coeffs(ctx, g, 8);
  EXPECT_EQ(cohomology::torsion_class_order(r8), Integer(4));
}

TEST(Epsilon, Values) {
  EXPECT_EQ(epsilon(2), Integer(4));
  EXPECT_EQ(epsilon(3), Integer(3));
  EXPECT_EQ(epsilon(6), Integer(12));
}

class EilenbergMacLane : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { ctx_ = new OperationContext(em_space_2(2, 6)); }
  static void TearDownTestSuite() {
    delete ctx_;
    ctx_ = nullptr;
  }
  static OperationContext* ctx_;
};
OperationContext* EilenbergMacLane::ctx_ = nullptr;

TEST_F(EilenbergMacLane, PontryaginSquareOfFundamentalClass) {
  const Cochain u(2, 2, IntVector{1});
  const auto p = pontryagin_square(*ctx_, class_of(*ctx_, u));
  EXPECT_EQ(p.group->to_string(), "Z/4");
  EXPECT_EQ(cohomology::torsion_class_order(p), Integer(4));
  EXPECT_EQ(reduce_coeffs(*ctx_, p, 2), class_of(*ctx_, cup(*ctx_, u, u)));
}

TEST_F(EilenbergMacLane, QOfFundamentalClassHasOrderFour) {
  const Cochain u(2, 2, IntVector{1});
  const auto q = q_class(*ctx_, class_of(*ctx_, u));
  EXPECT_EQ(q.group->to_string(), "Z/4");
  EXPECT_EQ(cohomology::torsion_class_order(q), Integer(4));
}

TEST_F(EilenbergMacLane, PontryaginSquareRejectsBadInput) {
  const Cochain u(2, 2, IntVector{1});
  EXPECT_THROW(pontryagin_cochain(*ctx_, Cochain(2, 3, IntVector{1})), ModulusMismatchError);
  EXPECT_THROW(pontryagin_cochain(*ctx_, ctx_->group(3, 2)->generators()[0]),
               InvalidArgumentError);
  EXPECT_THROW(q_class(*ctx_, class_of(*ctx_, ctx_->group(3, 2)->generators()[0])),
               InvalidArgumentError);
  EXPECT_THROW(q_cochain(*ctx_, u.lifted()), ModulusMismatchError);
}

}  // namespace
