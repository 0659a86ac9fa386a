#include <gtest/gtest.h>

#include <limits>

#include "oracles.hpp"
#include "wogsym/errors.hpp"
#include "wogsym/monomial.hpp"
#include "wogsym/text.hpp"

using namespace wogsym;

namespace {

MonomialIdeal I(std::string_view text, std::size_t s) { return parse_ideal(text, s); }

const char* kFourCycle = "t1*t2^2, t3*t2^2, t3*t4^2, t1*t4^2";

}  // namespace

TEST(ExponentVector, CanonicalOrder) {
  EXPECT_TRUE(canonical_less({1, 0}, {0, 1}));
  EXPECT_TRUE(canonical_less({1, 2, 0}, {0, 2, 1}));
  EXPECT_TRUE(canonical_less({0, 0, 1}, {1, 1, 0}));
  EXPECT_FALSE(canonical_less({1, 1}, {1, 1}));
}

TEST(ExponentVector, CheckedArithmetic) {
  const auto big = std::numeric_limits<Exponent>::max();
  EXPECT_THROW((void)(ExponentVector{big} + ExponentVector{1}), std::overflow_error);
  EXPECT_THROW((void)scale(ExponentVector{big / 2 + 1}, 2), std::overflow_error);
  EXPECT_EQ(lcm({1, 3, 0}, {2, 1, 0}), (ExponentVector{2, 3, 0}));
  EXPECT_EQ(monus({1, 3, 0}, {2, 1, 0}), (ExponentVector{0, 2, 0}));
  EXPECT_EQ(support_vector({0, 4, 1}), (ExponentVector{0, 1, 1}));
}

TEST(Minimalize, DropsMultiples) {
  EXPECT_EQ(minimalize({{1, 2}, {1, 3}}, 2).gens(), (std::vector<ExponentVector>{{1, 2}}));
  const std::vector<ExponentVector> four{{1, 2, 0, 0}, {0, 2, 1, 0}, {0, 0, 1, 2}, {1, 0, 0, 2}};
  auto ideal = minimalize(four, 4);
  EXPECT_EQ(ideal.size(), 4u);
  EXPECT_EQ(ideal, minimalize({four.rbegin(), four.rend()}, 4));
  EXPECT_TRUE(minimalize({}, 3).is_zero());
  EXPECT_TRUE(minimalize({{0, 0}, {1, 0}}, 2).is_unit());
}

TEST(Minimalize, RejectsWrongLength) { EXPECT_THROW(minimalize({{1, 2, 3}}, 2), DimensionError); }

TEST(Membership, Basics) {
  auto ideal = I(kFourCycle, 4);
  EXPECT_FALSE(contains_monomial(ideal, {1, 1, 0, 1}));
  for (const auto& g : ideal.gens()) EXPECT_TRUE(contains_monomial(ideal, g));
  EXPECT_FALSE(contains_monomial(MonomialIdeal::zero(4), {5, 5, 5, 5}));
  EXPECT_TRUE(contains_monomial(MonomialIdeal::unit(2), {0, 0}));
}

TEST(Arithmetic, PowerAndProduct) {
  EXPECT_EQ(power(I("t1, t2^2", 2), 2), I("t1^2, t1*t2^2, t2^4", 2));
  EXPECT_EQ(power(I("t1*t2", 2), 3), I("t1^3*t2^3", 2));
  EXPECT_THROW(power(I("t1", 1), 0), DomainError);
  EXPECT_EQ(multiply(I("t1", 2), I("t2", 2)), I("t1*t2", 2));
  EXPECT_EQ(sum(I("t1^2", 2), I("t1*t2", 2)), I("t1^2, t1*t2", 2));
}

TEST(Arithmetic, Intersection) {
  EXPECT_EQ(intersect(I("t1, t3", 4), I("t2^2, t4^2", 4)), I(kFourCycle, 4));
  const std::vector<MonomialIdeal> parts{I("t1^2, t2", 3), I("t1, t3^2", 3), I("t2^2, t3", 3),
                                         I("t1^2, t2^2, t3^2", 3)};
  EXPECT_EQ(intersect(parts), I("t1*t2^2, t2*t3^2, t3*t1^2", 3));
  EXPECT_THROW(intersect(std::span<const MonomialIdeal>{}), DomainError);
  EXPECT_THROW(intersect(I("t1", 1), I("t2", 2)), DimensionError);
}

TEST(Arithmetic, ColonAndRadical) {
  auto triangle = I("t1*t2^2, t2*t3^2, t3*t1^2", 3);
  EXPECT_EQ(colon_monomial(triangle, {1, 1, 1}), I("t1, t2, t3", 3));
  EXPECT_EQ(colon_monomial(I("t1*t2^2", 2), {0, 2}), I("t1", 2));
  EXPECT_EQ(radical(I("t1^2, t2", 2)), I("t1, t2", 2));
  EXPECT_EQ(radical(I(kFourCycle, 4)), I("t1*t2, t2*t3, t3*t4, t1*t4", 4));
}

TEST(Arithmetic, MatchesMembershipOracle) {
  oracle::Random rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = rng.ideal(3, 3, 4);
    auto b = rng.ideal_in(a.num_vars(), 3, 3);
    const auto s = a.num_vars();
    auto ma = oracle::member_of(a), mb = oracle::member_of(b);
    auto check = [&](const MonomialIdeal& got, const oracle::Member& want, Exponent box) {
      auto bad = oracle::first_disagreement(s, box, oracle::member_of(got), want);
      EXPECT_FALSE(bad) << format_ideal(a) << " / " << format_ideal(b) << " at " << format_exponents(*bad);
    };
    check(intersect(a, b), [&](const ExponentVector& x) { return ma(x) && mb(x); }, 4);
    check(sum(a, b), [&](const ExponentVector& x) { return ma(x) || mb(x); }, 4);
    oracle::PowerMember pa(a.gens());
    check(power(a, 2), [&](const ExponentVector& x) { return pa(x, 2); }, 7);
    const ExponentVector f = a.gens().front();
    check(colon_monomial(a, f), [&](const ExponentVector& x) { return ma(x + f); }, 4);
  }
}

TEST(IrreducibleIdeal, Construction) {
  EXPECT_THROW(IrreducibleIdeal(ExponentVector{0, 0}), DomainError);
  EXPECT_EQ(IrreducibleIdeal({1, 0, 2}).to_ideal(), I("t1, t3^2", 3));
}

TEST(MonomialPrime, Construction) {
  MonomialPrime p(4, {3, 1, 3});
  EXPECT_EQ(p.support(), (std::vector<std::size_t>{1, 3}));
  EXPECT_THROW(MonomialPrime(2, {3}), DimensionError);
  EXPECT_TRUE(p.is_subset_of(MonomialPrime::maximal(4)));
  EXPECT_EQ(MonomialPrime::of_support({0, 2, 1}), MonomialPrime(3, {2, 3}));
  EXPECT_TRUE(MonomialPrime(3, {3}) < MonomialPrime(3, {1, 2}));
}
