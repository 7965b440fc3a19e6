#include <gtest/gtest.h>

#include <random>

#include "multmon/invariants.hpp"
#include "multmon/oracle.hpp"
#include "multmon/random.hpp"
#include "support/generators.hpp"

namespace multmon {
namespace {

using testing::ideal;
using testing::index_of;

const char* const kSplitIdeal = "a^3*c, a*b*e^3, a^2*b^2, c^2, d^2*e^2";
const char* const kStemIdeal = "a^2*b*c, b^3*c, c^4, d^2*e^2, d*e*f, d*g^2";

TEST(Codim, Examples) {
  EXPECT_EQ(codim(ideal(kSplitIdeal, "a,b,c,d,e")), 3u);
  EXPECT_EQ(codim(ideal("x^7")), 1u);
  EXPECT_EQ(codim(ideal(kStemIdeal)), 2u);
  EXPECT_EQ(codim(ideal("x^2, y^3")), 2u);
  EXPECT_EQ(codim(ideal("a*b, c*d, e*f, a*c")), 3u);
}

TEST(Codim, MatchesCoverEnumeration) {
  std::mt19937_64 rng(21);
  for (int n = 0; n < 1000; ++n) {
    const auto m = random_ideal(rng, {10, 7, 3});
    EXPECT_EQ(codim(m), oracle_cover_size(m)) << m.to_string();
  }
}

TEST(Dominance, Examples) {
  EXPECT_FALSE(is_dominant(ideal("a^2, b^3, a*b")));
  const auto report = dominance(ideal("a^2, b^3, a*b"));
  const auto m1 = ideal("a^2, b^3, a*b");
  EXPECT_FALSE(report.witness[index_of(m1, "a*b")].has_value());

  const auto m2 = ideal("a^2*b, a*b^3*c, b*c^2");
  const auto r2 = dominance(m2);
  ASSERT_TRUE(r2.dominant);
  EXPECT_EQ(r2.witness[index_of(m2, "a^2*b")], 0u);
  EXPECT_EQ(r2.witness[index_of(m2, "a*b^3*c")], 1u);
  EXPECT_EQ(r2.witness[index_of(m2, "b*c^2")], 2u);

  EXPECT_TRUE(is_dominant(ideal("x^5")));
}

TEST(CompleteIntersection, Examples) {
  EXPECT_TRUE(is_complete_intersection(ideal("x^2, y^3")));
  EXPECT_FALSE(is_complete_intersection(ideal("a^2, b^3, a*b")));
  EXPECT_TRUE(is_complete_intersection(ideal("a^2*b^2, c^2, d^2*e^2")));
}

TEST(AlmostCompleteIntersection, Examples) {
  const auto m = ideal("x^2, y^3, x*y");
  EXPECT_EQ(almost_complete_intersection_witness(m), index_of(m, "x*y"));
  EXPECT_FALSE(almost_complete_intersection_witness(ideal("x^2, y^3")).has_value());
  EXPECT_FALSE(almost_complete_intersection_witness(ideal("a^2*b*c, b^3*c, c^4")).has_value());
}

TEST(Classify, SplitIdeal) {
  const auto report = classify(ideal(kSplitIdeal, "a,b,c,d,e"));
  EXPECT_EQ(report.codim, 3u);
  EXPECT_TRUE(report.is_dominant);
  EXPECT_FALSE(report.is_ci);
  EXPECT_FALSE(report.is_codim1);
  EXPECT_FALSE(report.aci_witness.has_value());
}

// Relabelling variables and reordering generators changes nothing.
TEST(InvariantsProperty, PermutationInvariance) {
  std::mt19937_64 rng(22);
  for (int n = 0; n < 300; ++n) {
    const auto m = random_ideal(rng, {});
    const auto nv = m.variables()->size();
    std::vector<std::size_t> perm(nv);
    for (std::size_t i = 0; i < nv; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Monomial> moved;
    for (const auto& g : m.generators()) {
      std::vector<Exponent> exps(nv);
      for (std::size_t v = 0; v < nv; ++v) exps[perm[v]] = g.exponent(v);
      moved.emplace_back(m.variables(), exps);
    }
    std::shuffle(moved.begin(), moved.end(), rng);
    const auto p = MonomialIdeal::minimalize(m.variables(), moved);
    EXPECT_EQ(codim(p), codim(m));
    EXPECT_EQ(is_dominant(p), is_dominant(m));
    EXPECT_EQ(is_complete_intersection(p), is_complete_intersection(m));
    EXPECT_EQ(almost_complete_intersection_witness(p).has_value(),
              almost_complete_intersection_witness(m).has_value());
  }
}

}  // namespace
}  // namespace multmon
