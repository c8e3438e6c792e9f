#include <random>
#include <string>

#include <gtest/gtest.h>

#include "gsc/laurent_poly.hpp"
#include "gsc/rat_func.hpp"
#include "gsc/sym_matrix.hpp"

using namespace gsc;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int lo, int hi, int max_coeff) {
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  LaurentPoly p;
  for (int e = lo; e <= hi; ++e) p.add_term(e, coeff(rng));
  return p;
}

}  // namespace

TEST(LaurentPoly, PrintsAscendingExponents) {
  LaurentPoly p;
  p.add_term(2, 1);
  p.add_term(-2, 1);
  EXPECT_EQ(p.to_string(), "q^-2+q^2");
  EXPECT_EQ(parse_laurent("q+2*q^3+q^5").to_string(), "q+2*q^3+q^5");
  EXPECT_EQ(parse_laurent("-q^-1+3-q").to_string(), "-q^-1+3-q");
  EXPECT_EQ(LaurentPoly().to_string(), "0");
}

TEST(LaurentPoly, ParserAcceptsLooseSpellings) {
  EXPECT_EQ(parse_laurent("1*q^1"), parse_laurent("q"));
  EXPECT_EQ(parse_laurent("q^2 + q^2"), parse_laurent("2*q^2"));
  EXPECT_EQ(parse_laurent("q^0"), LaurentPoly(1));
  EXPECT_EQ(parse_laurent("q - q"), LaurentPoly());
}

TEST(LaurentPoly, ParserRejectsGarbage) {
  for (const char* bad : {"", "q^", "2*", "q q", "x", "q^-"})
    EXPECT_THROW(parse_laurent(bad), Error) << bad;
}

TEST(LaurentPoly, PrintParseRoundTrip) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = random_poly(rng, -6, 6, 4);
    const auto text = p.to_string();
    EXPECT_EQ(parse_laurent(text), p) << text;
    EXPECT_EQ(parse_laurent(text).to_string(), text);
  }
}

TEST(LaurentPoly, ExactDivision) {
  const auto a = parse_laurent("q^2-1");
  const auto b = parse_laurent("q^6-1");
  EXPECT_EQ(divide_exact(a * b, b), a);
  EXPECT_THROW(divide_exact(b, parse_laurent("q^4-1")), Error);
}

TEST(RatFunc, CanonicalForm) {
  const RatFunc x(parse_laurent("q^2-1"), parse_laurent("q-1"));
  EXPECT_TRUE(x.is_laurent());
  EXPECT_EQ(x.to_string(), "1+q");

  const RatFunc y(parse_laurent("2"), parse_laurent("-4*q^3+4*q^2"));
  EXPECT_EQ(y.denominator().to_string(), "-2+2*q");
  EXPECT_EQ(y.numerator().to_string(), "-q^-2");
  EXPECT_EQ(parse_ratfunc(y.to_string()), y);
}

TEST(RatFunc, FieldAxiomsOnRandomElements) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto num = random_poly(rng, -3, 3, 3);
    auto den = random_poly(rng, 0, 2, 3);
    if (den.is_zero()) den = LaurentPoly(1);
    const RatFunc x(num, den);
    EXPECT_TRUE((x + (-x)).is_zero());
    if (!x.is_zero()) {
      EXPECT_EQ(x * x.inverse(), RatFunc(1));
    }
    EXPECT_EQ(parse_ratfunc(x.to_string()), x) << x.to_string();
  }
}

TEST(RatFunc, CertifyRing) {
  EXPECT_TRUE(certify_ring(RatFunc(parse_laurent("q^2+q^4")), CoefficientRing::natural_poly));
  const RatFunc m(parse_laurent("q^-2+q^2"));
  EXPECT_TRUE(certify_ring(m, CoefficientRing::laurent));
  EXPECT_FALSE(certify_ring(m, CoefficientRing::natural_poly));
  const RatFunc f(parse_laurent("q+1"), parse_laurent("q-1"));
  EXPECT_FALSE(certify_ring(f, CoefficientRing::laurent));
  EXPECT_FALSE(certify_ring(f, CoefficientRing::natural_poly));
  EXPECT_FALSE(certify_ring(RatFunc(parse_laurent("1-q")), CoefficientRing::natural_poly));
  EXPECT_EQ(parse_ring("N[q]"), CoefficientRing::natural_poly);
  EXPECT_THROW(parse_ring("Q[q]"), Error);
}
