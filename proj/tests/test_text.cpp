#include <gtest/gtest.h>

#include "wogsym/errors.hpp"
#include "wogsym/text.hpp"

using namespace wogsym;

TEST(Text, FormatsCanonically) {
  auto ideal = parse_ideal("t3*t4^2, t1*t4^2, t1*t2^2, t3*t2^2");
  EXPECT_EQ(format_ideal(ideal), "(t1*t2^2, t1*t4^2, t2^2*t3, t3*t4^2)");
  EXPECT_EQ(format_monomial({0, 0}), "1");
  EXPECT_EQ(format_exponents({1, 2, 0, 0}), "(1,2,0,0)");
  EXPECT_EQ(format_ideal(MonomialIdeal::zero(2)), "(0)");
  EXPECT_EQ(format_ideal(MonomialIdeal::unit(2)), "(1)");
  EXPECT_EQ(format_prime(MonomialPrime(4, {1, 3})), "(t1, t3)");
  EXPECT_EQ(format_irreducible(IrreducibleIdeal({0, 2, 0, 2})), "(t2^2, t4^2)");
  EXPECT_EQ(format_irreducible(IrreducibleIdeal({2, 1, 0})), "(t1^2, t2)");
}

TEST(Text, RoundTrips) {
  for (const char* text : {"(t2*t3, t1*t2^2)", "(t1, t2^2)", "(t1^3*t2*t3^2)", "(t1^2*t3, t1*t2^2, t2*t3^2)"}) {
    EXPECT_EQ(format_ideal(parse_ideal(text)), text);
  }
}

TEST(Text, AcceptsVariants) {
  auto a = parse_ideal("# comment\nvars 4\n(1,2,0,0)\nt3 * t2^2\n");
  EXPECT_EQ(a.num_vars(), 4u);
  EXPECT_EQ(format_ideal(a), "(t1*t2^2, t2^2*t3)");
  EXPECT_EQ(parse_ideal("t2", 3).num_vars(), 3u);
  EXPECT_TRUE(parse_ideal("0", 2).is_zero());
  EXPECT_EQ(parse_monomial("t1^2*t1", 2), (ExponentVector{3, 0}));
}

TEST(Text, RejectsBadInput) {
  EXPECT_THROW(parse_ideal("t1*x2"), ParseError);
  EXPECT_THROW(parse_ideal("t0"), ParseError);
  EXPECT_THROW(parse_ideal("t5", 3), ParseError);
  EXPECT_THROW(parse_ideal("t1^"), ParseError);
  EXPECT_THROW(parse_ideal("(1,2", 2), ParseError);
  try {
    parse_ideal("t1\nt2^q\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}
