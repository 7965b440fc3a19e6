#include <gtest/gtest.h>

#include <algorithm>
#include <iterator>
#include <random>

#include "multmon/error.hpp"
#include "multmon/ideal.hpp"
#include "multmon/monomial.hpp"
#include "multmon/random.hpp"
#include "support/generators.hpp"

namespace multmon {
namespace {

using testing::ideal;

class MonomialTest : public ::testing::Test {
 protected:
  VariableTablePtr vars = make_variables({"a", "b", "c", "d", "e", "f", "g"});
  Monomial mono(std::string_view text) const { return parse_ideal(text, vars).ideal[0]; }
};

TEST_F(MonomialTest, LcmIsCoordinatewiseMax) {
  EXPECT_EQ(lcm(mono("a^2*b"), mono("b*c^2")), mono("a^2*b*c^2"));
  EXPECT_EQ(lcm(mono("a^3*c"), mono("a*b*e^3")), mono("a^3*b*c*e^3"));
  EXPECT_EQ(lcm(mono("a^2*b"), Monomial(vars)), mono("a^2*b"));
}

TEST_F(MonomialTest, GcdIsCoordinatewiseMin) {
  EXPECT_EQ(gcd(mono("a^2*b*c"), mono("b^3*c")), mono("b*c"));
  EXPECT_TRUE(gcd(mono("a^2"), Monomial(vars)).is_unit());
  EXPECT_EQ(gcd(mono("a^2*b"), mono("a*b^2")), mono("a*b"));
}

TEST_F(MonomialTest, QuotientIsExact) {
  EXPECT_EQ(quotient(mono("a^3*b*c*e^3"), mono("a^3*c")), mono("b*e^3"));
  EXPECT_TRUE(quotient(mono("a*b"), mono("a*b")).is_unit());
  EXPECT_EQ(quotient(mono("a^2"), mono("a")), mono("a"));
  EXPECT_THROW(quotient(mono("a"), mono("b")), InvalidInputError);
}

TEST_F(MonomialTest, DegreeSupportAndPrinting) {
  const auto m = mono("a^2*b*c");
  EXPECT_EQ(m.degree(), 4u);
  EXPECT_EQ(m.support(), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(m.to_string(), "a^2*b*c");
  EXPECT_EQ(Monomial(vars).to_string(), "1");
  EXPECT_TRUE(mono("a").divides(m));
  EXPECT_FALSE(m.divides(mono("a")));
  EXPECT_TRUE(mono("a^2").coprime_to(mono("b^3")));
}

TEST_F(MonomialTest, GradedOrder) {
  EXPECT_TRUE(graded_less(mono("c^2"), mono("a^3*c")));
  EXPECT_TRUE(graded_less(mono("a^2*b"), mono("b*c^2")));
  EXPECT_FALSE(graded_less(mono("a"), mono("a")));
}

TEST_F(MonomialTest, PolarSets) {
  EXPECT_EQ(polar_set(mono("a^2*b*c")),
            (PolarSet{{0, 1}, {0, 2}, {1, 1}, {2, 1}}));
  EXPECT_TRUE(polar_set(Monomial(vars)).empty());
  EXPECT_EQ(polar_set(mono("d*g^2")), (PolarSet{{3, 1}, {6, 1}, {6, 2}}));
}

TEST(IdealTest, MinimalizeDropsMultiplesAndDuplicates) {
  EXPECT_EQ(ideal("x^2, x^3, y"), ideal("x^2, y"));
  EXPECT_EQ(ideal("x, x").size(), 1u);
  const auto m = ideal("a^2, b^3, a*b");
  EXPECT_EQ(m.size(), 3u);
  EXPECT_EQ(m.to_string(), "a^2, a*b, b^3");
}

TEST(IdealTest, CanonicalOrder) {
  const auto m = ideal("a^3*c, a*b*e^3, a^2*b^2, c^2, d^2*e^2", "a,b,c,d,e");
  EXPECT_EQ(m.to_string(), "c^2, a^3*c, a^2*b^2, d^2*e^2, a*b*e^3");
}

TEST(IdealTest, RejectsEmptyAndUnit) {
  auto vars = make_variables({"x"});
  EXPECT_THROW(MonomialIdeal::minimalize(vars, {}), InvalidInputError);
  EXPECT_THROW(MonomialIdeal::minimalize(vars, {Monomial(vars)}), InvalidInputError);
}

TEST(IdealTest, WithoutAndSubideal) {
  const auto m = ideal("x^2, y^3, x*y");
  const auto i = testing::index_of(m, "x*y");
  EXPECT_EQ(m.without(i), ideal("x^2, y^3", "x,y"));
  const std::vector<std::size_t> pick{i};
  EXPECT_EQ(m.subideal(pick), ideal("x*y", "x,y"));
}

TEST(IdealProperty, MinimalizeIsIdempotentAndOrderFree) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 500; ++n) {
    const auto m = random_ideal(rng, {});
    std::vector<Monomial> gens(m.generators().begin(), m.generators().end());
    EXPECT_EQ(MonomialIdeal::minimalize(m.variables(), gens), m);
    std::shuffle(gens.begin(), gens.end(), rng);
    gens.push_back(gens.front());
    EXPECT_EQ(MonomialIdeal::minimalize(m.variables(), gens), m);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (i != j) EXPECT_FALSE(m[i].divides(m[j]));
      }
    }
  }
}

// Degree of lcm/gcd against union/intersection of polar sets.
TEST(PolarProperty, DegreeIdentities) {
  std::mt19937_64 rng(12);
  auto vars = standard_variables(6);
  std::uniform_int_distribution<int> pick_r(1, 6);
  std::uniform_int_distribution<Exponent> pick_e(0, 5);
  for (int n = 0; n < 500; ++n) {
    std::vector<Monomial> ms;
    const int r = pick_r(rng);
    for (int i = 0; i < r; ++i) {
      std::vector<Exponent> exps(6);
      for (auto& e : exps) e = pick_e(rng);
      ms.emplace_back(vars, exps);
    }
    PolarSet uni = polar_set(ms[0]);
    PolarSet inter = uni;
    PolarSet rest;
    for (int i = 1; i < r; ++i) {
      const auto a = polar_set(ms[i]);
      PolarSet u, in, re;
      std::set_union(uni.begin(), uni.end(), a.begin(), a.end(), std::back_inserter(u));
      std::set_intersection(inter.begin(), inter.end(), a.begin(), a.end(), std::back_inserter(in));
      std::set_union(rest.begin(), rest.end(), a.begin(), a.end(), std::back_inserter(re));
      uni = std::move(u);
      inter = std::move(in);
      rest = std::move(re);
    }
    PolarSet diff;
    const auto first = polar_set(ms[0]);
    std::set_difference(first.begin(), first.end(), rest.begin(), rest.end(),
                        std::back_inserter(diff));
    const std::span<const Monomial> tail(ms.begin() + 1, ms.end());
    EXPECT_EQ(lcm_of(vars, ms).degree(), uni.size());
    EXPECT_EQ(gcd_of(ms).degree(), inter.size());
    EXPECT_EQ(quotient(lcm_of(vars, ms), lcm_of(vars, tail)).degree(), diff.size());
  }
}

}  // namespace
}  // namespace multmon
