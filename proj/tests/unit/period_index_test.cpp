#include <gtest/gtest.h>

#include "brauer/complexes/generators.hpp"
#include "brauer/period_index/period_index.hpp"

using namespace brauer;
using namespace brauer::period_index;
using brauer::complexes::minimal_circle;
using brauer::complexes::moore_polygon;
using brauer::complexes::product;
using brauer::complexes::suspension;
using brauer::complexes::torus;
using brauer::ops::CohomologyClass;
using brauer::ops::OperationContext;

namespace {

CohomologyClass first_h3(const OperationContext& ctx) {
  return CohomologyClass::generator(ctx.group(3, 0), 0);
}

TEST(PeriodIndex, ZeroClass) {
  OperationContext ctx(moore_polygon(2));
  const auto alpha = CohomologyClass::zero(ctx.group(3, 0));
  const auto r = index_bound(ctx, alpha);
  EXPECT_EQ(r.per, Integer(1));
  EXPECT_EQ(r.ord_q, Integer(1));
  EXPECT_EQ(r.index, Integer(1));
  EXPECT_TRUE(r.exact);
}

TEST(PeriodIndex, LowDimensionIndexEqualsPeriod) {
  for (unsigned n : {2u, 3u, 4u}) {
    OperationContext ctx(suspension(moore_polygon(n)));
    const auto r = index_bound(ctx, first_h3(ctx));
    EXPECT_EQ(r.per, Integer(n));
    EXPECT_EQ(r.index, r.per);
    EXPECT_TRUE(r.epsilon_check);
    EXPECT_EQ(r.record(), "space=susp(moore:" + std::to_string(n) + ") alpha=[1] per=" +
                              std::to_string(n) + " ordQ=1 index=" + std::to_string(n) +
                              " exact=true epsilonCheck=true liftIndependence=NotChecked");
  }
}

TEST(PeriodIndex, LiftHasBocksteinAlpha) {
  OperationContext ctx(suspension(moore_polygon(3)));
  const auto alpha = first_h3(ctx);
  for (long n : {3L, 6L, 9L}) {
    const auto xi = lift_to_mod_n(ctx, alpha, n);
    EXPECT_EQ(xi.modulus, Integer(n));
    EXPECT_EQ(ops::bockstein(ctx, ops::class_of(ctx, xi)), alpha);
  }
}

TEST(PeriodIndex, NoLiftWhenPeriodDoesNotDivide) {
  OperationContext ctx(suspension(moore_polygon(2)));
  const auto alpha = first_h3(ctx);
  EXPECT_THROW(lift_to_mod_n(ctx, alpha, 3), NoLiftError);
  EXPECT_THROW(lift_to_mod_n(ctx, alpha, 1), InvalidArgumentError);
}

TEST(PeriodIndex, NotTorsion) {
  OperationContext ctx(product(torus(), minimal_circle()));
  ASSERT_EQ(ctx.group(3, 0)->to_string(), "Z");
  EXPECT_THROW(period(ctx, first_h3(ctx)), NotTorsionError);
}

TEST(PeriodIndex, RejectsWrongDegreeAndSpace) {
  OperationContext ctx(suspension(moore_polygon(2)));
  OperationContext other(suspension(moore_polygon(2)));
  EXPECT_THROW(period(ctx, CohomologyClass::zero(ctx.group(2, 0))), InvalidArgumentError);
  EXPECT_THROW(period(ctx, CohomologyClass::zero(ctx.group(3, 2))), InvalidArgumentError);
  EXPECT_THROW(period(ctx, first_h3(other)), SpaceMismatchError);
}

TEST(PeriodIndex, LiftCosetOverFreeH2) {
  OperationContext ctx(product(suspension(moore_polygon(2)), torus()));
  ASSERT_EQ(ctx.group(2, 0)->to_string(), "Z");
  const auto alpha = first_h3(ctx);
  ASSERT_EQ(period(ctx, alpha), Integer(2));
  const auto lifts = all_lifts(ctx, alpha, 2);
  EXPECT_EQ(lifts.size(), 2u);
  EXPECT_EQ(all_lifts(ctx, alpha, 4).size(), 4u);
  EXPECT_THROW(all_lifts(ctx, alpha, 4, 3), CosetTooLargeError);
  const auto li = verify_lift_independence(ctx, alpha, 2);
  EXPECT_TRUE(li.independent);
  EXPECT_EQ(li.lifts_checked, 2u);
  const auto r = index_bound(ctx, alpha);
  EXPECT_EQ(r.ord_q, Integer(1));
  EXPECT_EQ(r.index, Integer(2));
}

TEST(PeriodIndex, TableMentionsExactness) {
  OperationContext ctx(suspension(moore_polygon(2)));
  const auto t = index_bound(ctx, first_h3(ctx)).table();
  EXPECT_NE(t.find("(= topological index)"), std::string::npos);
  EXPECT_NE(t.find("period          2"), std::string::npos);
}

}  // namespace
