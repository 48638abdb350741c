#include <gtest/gtest.h>

#include <random>

#include "brauer/complexes/generators.hpp"
#include "brauer/ops/operations.hpp"
#include "oracle.hpp"

using namespace brauer;
using namespace brauer::complexes;

namespace {

std::vector<oracle::Big> to_big(const cohomology::IntVector& v) {
  std::vector<oracle::Big> out;
  for (const auto& x : v) out.emplace_back(x.to_string());
  return out;
}

struct Case {
  std::string name;
  SpacePtr space;
  std::size_t max_degree;
};

std::vector<Case> cases() {
  return {
      {"torus", torus(), 2},
      {"moore4", moore_polygon(4), 2},
      {"susp_moore3", suspension(moore_polygon(3)), 3},
      {"wbar2", wbar_cyclic(2, 5), 4},
      {"wbar3", wbar_cyclic(3, 4), 3},
      {"em2_3", em_space_2(3, 4), 3},
      {"moore2_x_moore3", product(moore_polygon(2), moore_polygon(3)), 3},
      {"torus_x_circle", product(torus(), minimal_circle()), 2},
  };
}

TEST(Oracle, IntegralCohomologyAgrees) {
  for (const auto& c : cases()) {
    const auto complex = normalized_chain_complex(c.space);
    for (std::size_t k = 0; k <= c.max_degree; ++k) {
      const auto engine = cohomology::cohomology_group(complex, k, 0)->to_string();
      const auto reference = oracle::integral_cohomology(*c.space, k).to_string();
      EXPECT_EQ(engine, reference) << c.name << " H^" << k;
    }
  }
}

TEST(Oracle, EilenbergMacLaneTorsionAgrees) {
  const auto s = em_space_2(2, 5);
  const auto complex = normalized_chain_complex(s);
  for (std::size_t k = 0; k <= 4; ++k) {
    EXPECT_EQ(cohomology::cohomology_group(complex, k, 0)->to_string(),
              oracle::integral_cohomology(*s, k).to_string())
        << "H^" << k;
  }
}

TEST(Oracle, InvariantFactorsAgreeWithEngine) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    linalg::IntMatrix m(r, c);
    oracle::DenseMatrix d(r, std::vector<oracle::Big>(c));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        const long v = static_cast<long>(rng() % 41) - 20;
        m(i, j) = v;
        d[i][j] = v;
      }
    }
    std::vector<std::string> engine, reference;
    for (const auto& x : linalg::smith_normal_form(m).diagonal()) {
      if (!x.is_zero()) engine.push_back(x.to_string());
    }
    for (const auto& x : oracle::invariant_factors(d)) reference.push_back(x.str());
    EXPECT_EQ(engine, reference);
  }
}

TEST(Oracle, CoboundaryAgrees) {
  for (const auto& c : cases()) {
    ops::OperationContext ctx(c.space);
    std::mt19937_64 rng(9);
    for (std::size_t k = 0; k + 1 <= c.max_degree; ++k) {
      cohomology::IntVector v(ctx.count(k));
      for (auto& x : v) x = static_cast<long>(rng() % 9) - 4;
      const auto engine = ctx.coboundary(cohomology::Cochain(k, 0, v));
      EXPECT_EQ(to_big(engine.values), oracle::coboundary(*c.space, k, to_big(v)))
          << c.name << " k=" << k;
    }
  }
}

TEST(Oracle, CupAgrees) {
  for (const auto& c : cases()) {
    ops::OperationContext ctx(c.space);
    std::mt19937_64 rng(13);
    const std::size_t top = static_cast<std::size_t>(c.space->dimension());
    for (std::size_t p = 0; p <= top; ++p) {
      for (std::size_t q = 0; p + q <= top; ++q) {
        cohomology::IntVector x(ctx.count(p)), y(ctx.count(q));
        for (auto& v : x) v = static_cast<long>(rng() % 7) - 3;
        for (auto& v : y) v = static_cast<long>(rng() % 7) - 3;
        const auto engine =
            ops::cup(ctx, cohomology::Cochain(p, 0, x), cohomology::Cochain(q, 0, y));
        EXPECT_EQ(to_big(engine.values), oracle::cup(*c.space, p, to_big(x), q, to_big(y)))
            << c.name << " p=" << p << " q=" << q;
      }
    }
  }
}

TEST(Oracle, BocksteinPeriodOnSuspendedMoore) {
  // beta_3 of the generator of H^2(susp(moore:3); Z/3) is not divisible by 3
  // in cohomology, so it has order exactly 3.
  const auto s = suspension(moore_polygon(3));
  ops::OperationContext ctx(s);
  const auto xi = ctx.group(2, 3)->generators()[0];
  const auto z = to_big(xi.lifted().values);
  const auto dz = oracle::coboundary(*s, 2, z);
  std::vector<oracle::Big> a;
  for (const auto& v : dz) {
    ASSERT_EQ(v % 3, 0);
    a.push_back(v / 3);
  }
  EXPECT_FALSE(oracle::is_coboundary_mod_p(*s, 3, a, 3));
  const auto engine = ops::bockstein(ctx, ops::class_of(ctx, xi));
  EXPECT_EQ(cohomology::torsion_class_order(engine), Integer(3));
}

}  // namespace
