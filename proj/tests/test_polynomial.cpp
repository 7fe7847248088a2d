#include <gtest/gtest.h>

#include <random>

#include "curvesi/polynomial.hpp"

using namespace curvesi;

namespace {

using P = TracePolynomial;

P commutator() {
  const P x = P::x(), y = P::y(), z = P::z();
  return x * x + y * y + z * z - x * y * z - P::constant(2);
}

}  // namespace

TEST(Polynomial, Format) {
  EXPECT_EQ(P::constant(2).str(), "2");
  EXPECT_EQ(P().str(), "0");
  EXPECT_EQ((P::x() * P::y() - P::z()).str(), "x*y - z");
  EXPECT_EQ(commutator().str(), "x^2 - x*y*z + y^2 + z^2 - 2");
  EXPECT_EQ((-P::x()).str(), "-x");
  EXPECT_EQ((P::constant(3) * P::x() * P::x()).str(), "3*x^2");
}

TEST(Polynomial, LexOrder) {
  EXPECT_TRUE(term_before({2, 0, 0}, {1, 1, 1}));
  EXPECT_TRUE(term_before({8, 2, 2}, {7, 3, 3}));
  EXPECT_TRUE(term_before({2, 0, 0}, {1, 1, 0}));
  EXPECT_TRUE(term_before({0, 1, 0}, {0, 0, 1}));
  EXPECT_FALSE(term_before({0, 0, 0}, {0, 0, 1}));
}

TEST(Polynomial, ParseAcceptsGrammar) {
  EXPECT_EQ(P::parse("x*y - z"), P::x() * P::y() - P::z());
  EXPECT_EQ(P::parse("x*y \xE2\x88\x92 z"), P::x() * P::y() - P::z());
  EXPECT_EQ(P::parse("-2 + z^2 + y^2 + x^2 - x*y*z"), commutator());
  EXPECT_EQ(P::parse("0"), P());
  EXPECT_EQ(P::parse("x + x"), P::constant(2) * P::x());
  EXPECT_EQ(P::parse("123456789012345678901234567890*z"),
            P::constant(BigInt("123456789012345678901234567890")) * P::z());
  for (const char* bad : {"", "x^", "2*", "x**y", "w", "x +", "3x"}) EXPECT_THROW(P::parse(bad), Error) << bad;
}

TEST(Polynomial, RoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-50, 50), ex(0, 4);
  for (int trial = 0; trial < 300; ++trial) {
    P p;
    for (int t = 0; t < 6; ++t)
      p = p + P::monomial({static_cast<unsigned>(ex(rng)), static_cast<unsigned>(ex(rng)),
                           static_cast<unsigned>(ex(rng))},
                          coef(rng));
    ASSERT_EQ(P::parse(p.str()), p) << p.str();
  }
}

TEST(Polynomial, Evaluate) {
  EXPECT_EQ(commutator().evaluate<BigInt>(3, 3, 4), -4);
  EXPECT_EQ(commutator().evaluate<BigInt>(2, 2, 2), 2);
  EXPECT_EQ(P::constant(2).evaluate<BigInt>(17, -5, 9), 2);
  EXPECT_DOUBLE_EQ(commutator().evaluate<double>(3, 3, 4), -4.0);
}

TEST(Polynomial, ArithmeticIdentities) {
  const P a = commutator(), b = P::x() * P::y() - P::z() + P::constant(5);
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ((a + b) - b, a);
  EXPECT_EQ(a - a, P());
  EXPECT_EQ(-(-a), a);
  EXPECT_EQ((a * b).total_degree(), a.total_degree() + b.total_degree());
  EXPECT_EQ(a.term_count(), 5u);
  EXPECT_EQ(a.coefficient({1, 1, 1}), -1);
  EXPECT_EQ(a.coefficient({0, 0, 0}), -2);
  EXPECT_EQ(a.coefficient({3, 0, 0}), 0);
}
