#include <gtest/gtest.h>

#include <sstream>

#include "brauer/cohomology/cochain.hpp"
#include "brauer/cohomology/cohomology_group.hpp"
#include "brauer/complexes/chain_complex.hpp"
#include "brauer/complexes/generators.hpp"

using namespace brauer;
using namespace brauer::complexes;
using namespace brauer::cohomology;

namespace {

std::string group_string(const SpacePtr& s, std::size_t k, long m = 0) {
  return cohomology_group(normalized_chain_complex(s), k, m)->to_string();
}

TEST(CohomologyGroups, MooreSpaces) {
  for (unsigned n : {2u, 3u, 6u}) {
    const auto s = moore_polygon(n);
    EXPECT_EQ(group_string(s, 0), "Z");
    EXPECT_EQ(group_string(s, 1), "0");
    EXPECT_EQ(group_string(s, 2), "Z/" + std::to_string(n));
  }
  EXPECT_THROW(moore_polygon(1), InvalidArgumentError);
  EXPECT_EQ(group_string(moore_polygon(6), 1, 4), "Z/2");
  EXPECT_EQ(group_string(moore_polygon(6), 2, 4), "Z/2");
}

TEST(CohomologyGroups, TorusAndCircle) {
  EXPECT_EQ(group_string(torus(), 0), "Z");
  EXPECT_EQ(group_string(torus(), 1), "Z^2");
  EXPECT_EQ(group_string(torus(), 2), "Z");
  EXPECT_EQ(group_string(torus(), 1, 5), "Z/5 + Z/5");
  EXPECT_EQ(group_string(triangle_circle(), 1), "Z");
  EXPECT_EQ(group_string(two_points(), 0), "Z^2");
}

TEST(CohomologyGroups, SuspensionShifts) {
  const auto s = suspension(moore_polygon(3));
  EXPECT_EQ(group_string(s, 1), "0");
  EXPECT_EQ(group_string(s, 2), "0");
  EXPECT_EQ(group_string(s, 3), "Z/3");
  EXPECT_EQ(group_string(s, 2, 3), "Z/3");
}

TEST(CohomologyGroups, ClassifyingSpaces) {
  const auto w = wbar_cyclic(2, 5);
  EXPECT_EQ(group_string(w, 1), "0");
  EXPECT_EQ(group_string(w, 2), "Z/2");
  EXPECT_EQ(group_string(w, 3), "0");
  EXPECT_EQ(group_string(w, 4), "Z/2");
  EXPECT_EQ(group_string(w, 3, 2), "Z/2");
  const auto em = em_space_2(2, 6);
  const std::vector<std::string> expected{"Z", "0", "0", "Z/2", "0", "Z/4"};
  for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_EQ(group_string(em, k), expected[k]);
  EXPECT_EQ(group_string(em, 2, 2), "Z/2");
}

TEST(CohomologyGroups, ModulusOneRejected) {
  EXPECT_THROW(cohomology_group(normalized_chain_complex(torus()), 1, 1), InvalidArgumentError);
}

TEST(CohomologyGroups, GeneratorsExpressToBasisVectors) {
  const auto c = normalized_chain_complex(product(moore_polygon(2), triangle_circle()));
  for (long m : {0L, 2L, 4L}) {
    for (std::size_t k = 0; k <= 3; ++k) {
      const auto g = cohomology_group(c, k, m);
      for (std::size_t i = 0; i < g->generators().size(); ++i) {
        const auto cls = CohomologyClass::generator(g, i);
        EXPECT_TRUE(g->is_cocycle(g->generators()[i]));
        EXPECT_EQ(CohomologyClass::of(g, g->generators()[i]), cls);
      }
    }
  }
}

TEST(CohomologyGroups, ReductionAgreesWithDirect) {
  const auto c = normalized_chain_complex(product(moore_polygon(2), moore_polygon(3)));
  ASSERT_TRUE(c->reduction());
  for (std::size_t k = 0; k <= 4; ++k) {
    const auto a = cohomology_group(c, k, 0, {.use_reduction = true});
    const auto b = cohomology_group(c, k, 0, {.use_reduction = false});
    EXPECT_EQ(a->to_string(), b->to_string()) << k;
    EXPECT_TRUE(a->via_reduction() || k >= c->reduction()->valid_below());
  }
}

TEST(CohomologyGroups, NonCocycleRejected) {
  const auto c = normalized_chain_complex(moore_polygon(2));
  const auto g = cohomology_group(c, 1, 0);
  const Cochain z(1, 0, IntVector(c->rank(1), Integer(1)));
  EXPECT_FALSE(g->is_cocycle(z));
  EXPECT_THROW((void)CohomologyClass::of(g, z), NotACocycleError);
}

TEST(CohomologyClassTest, Arithmetic) {
  const auto g = cohomology_group(normalized_chain_complex(moore_polygon(6)), 2, 0);
  auto x = CohomologyClass::generator(g, 0);
  EXPECT_EQ(torsion_class_order(x), Integer(6));
  x *= 2;
  EXPECT_EQ(torsion_class_order(x), Integer(3));
  auto y = x;
  y += x;
  y += x;
  EXPECT_TRUE(y.is_zero());
  EXPECT_TRUE(CohomologyClass::zero(g).is_zero());
}

TEST(CochainIo, RoundTrip) {
  const Cochain z(2, 5, IntVector{0, 7, -1, 3});
  EXPECT_EQ(z.values, (IntVector{0, 2, 4, 3}));
  std::stringstream ss;
  write_cochain(ss, z);
  EXPECT_EQ(ss.str(), "cochain v1\ndegree 2 modulus 5\n1 2\n2 4\n3 3\n");
  EXPECT_EQ(read_cochain(ss, 4), z);
}

TEST(CochainIo, RejectsMalformed) {
  for (const char* text : {"cochain v2\n", "cochain v1\ndegree 2\n",
                           "cochain v1\ndegree 1 modulus -3\n",
                           "cochain v1\ndegree 1 modulus 0\n9 1\n",
                           "cochain v1\ndegree 1 modulus 0\n1 1\n1 2\n",
                           "cochain v1\ndegree 1 modulus 0\n1 x\n",
                           "cochain v1\ndegree 1 modulus 0\n1\n"}) {
    std::stringstream ss(text);
    EXPECT_THROW(read_cochain(ss, 3), ParseError) << text;
  }
}

TEST(CochainArithmetic, ReduceAndLift) {
  Cochain z(1, 0, IntVector{5, -3});
  const auto r = z.reduced(4);
  EXPECT_EQ(r.values, (IntVector{1, 1}));
  EXPECT_TRUE(r.lifted().is_integral());
  z *= 0;
  EXPECT_TRUE(z.is_zero());
  Cochain a(1, 3, IntVector{1, 2});
  a += Cochain(1, 3, IntVector{2, 2});
  EXPECT_EQ(a.values, (IntVector{0, 1}));
  EXPECT_THROW(a += Cochain(1, 5, IntVector{1, 1}), Error);
}

}  // namespace
