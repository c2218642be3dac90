#include <gtest/gtest.h>

#include <random>

#include "strata/coeffring.hpp"

using namespace strata;

namespace {

ParamPoly P(std::vector<long> c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return ParamPoly::from_coeffs(v);
}

}  // namespace

TEST(ParamPoly, ArithmeticAndTrim) {
  ParamPoly d = ParamPoly::variable();
  ParamPoly a = (d - ParamPoly(1)) * (d + ParamPoly(1));
  EXPECT_EQ(a, P({-1, 0, 1}));
  EXPECT_EQ(a - a, ParamPoly());
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_EQ(a.pow(3)(BigInt(5)), BigInt(24 * 24 * 24));
}

TEST(ParamPoly, ShiftMatchesEvaluation) {
  ParamPoly p = P({3, -2, 0, 7});
  ParamPoly s = p.shifted(BigInt(4));
  for (long x = -5; x <= 5; ++x) EXPECT_EQ(s(BigInt(x)), p(BigInt(x + 4)));
}

TEST(ParamPoly, ToStringAndParse) {
  EXPECT_EQ(to_string(P({-66, 81, 12, -36, 9})), "9*d^4 - 36*d^3 + 12*d^2 + 81*d - 66");
  EXPECT_EQ(to_string(P({0, -1})), "-d");
  EXPECT_EQ(to_string(ParamPoly()), "0");
  EXPECT_EQ(parse_param_poly({"-66", "81", "12"}), P({-66, 81, 12}));
  EXPECT_THROW(parse_param_poly({"1.5"}), Error);
}

TEST(ParamPoly, ContentAndExactDivision) {
  ParamPoly p = P({6, -12, 18});
  EXPECT_EQ(content(p), BigInt(6));
  EXPECT_EQ(divide_exact(p, BigInt(3)), P({2, -4, 6}));
  EXPECT_THROW(divide_exact(p, BigInt(4)), InexactError);
}

TEST(IntegerValued, BinomialPolynomials) {
  // d(d-1)/2 has non-integral coefficients but integral values.
  RatPoly half = RatPoly::from_coeffs({0, BigRational(-1, 2), BigRational(1, 2)});
  EXPECT_TRUE(is_integer_valued(half));
  EXPECT_FALSE(is_integer_valued(RatPoly::from_coeffs({0, BigRational(1, 2)})));
  auto coords = binomial_coordinates(half);
  ASSERT_EQ(coords.size(), 3u);
  EXPECT_EQ(coords[2], BigRational(1));
  // d^2 - d is always even but not always divisible by 4.
  EXPECT_TRUE(is_divisible_everywhere(P({0, -1, 1}), BigInt(2)));
  EXPECT_FALSE(is_divisible_everywhere(P({0, -1, 1}), BigInt(4)));
}

TEST(Interpolate, RecoversRandomIntegerBivariate) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<BigRational>> grid(4, std::vector<BigRational>(3));
    for (auto& row : grid)
      for (auto& v : row) v = c(rng);
    BivariatePoly truth(grid);
    for (long shift : {0L, 1L}) {
      std::vector<PSample> samples;
      for (long p = 1; p <= 6; ++p) samples.push_back({p, truth.at_p(BigRational(p))});
      BivariatePoly fit = interpolate(samples, shift);
      EXPECT_EQ(fit, truth);
    }
  }
}

TEST(Interpolate, ShiftedBasisLowersDegree) {
  // (d - p)^3 * p has degree 4 in p in the monomial basis, 1 in the shifted one.
  auto family = [](long p) {
    RatPoly e = RatPoly::linear(BigRational(-p), BigRational(1));
    return e * e * e * RatPoly(BigRational(p));
  };
  std::vector<PSample> three;
  for (long p = 1; p <= 3; ++p) three.push_back({p, family(p)});
  BivariatePoly fit = interpolate(three, 1);
  EXPECT_EQ(fit.at_p(BigRational(10)), family(10));
  EXPECT_EQ(fit.p_degree(), 4);
}

TEST(Interpolate, RejectsNonIntegerValued) {
  std::vector<PSample> s{{1, RatPoly(BigRational(0))}, {2, RatPoly(BigRational(1, 2))}};
  EXPECT_THROW(interpolate(s, 0), InexactError);
  std::vector<PSample> dup{{1, RatPoly(BigRational(0))}, {1, RatPoly(BigRational(1))}};
  EXPECT_THROW(interpolate(dup, 0), Error);
}

TEST(Bivariate, IntegerValuedCheck) {
  // p*d*(p+d)/2 is integral on the lattice.
  BivariatePoly ok({{0, 0, 0}, {0, 0, BigRational(1, 2)}, {0, BigRational(1, 2)}});
  EXPECT_TRUE(ok.is_integer_valued());
  BivariatePoly bad({{0, 0}, {0, BigRational(1, 2)}});
  EXPECT_FALSE(bad.is_integer_valued());
  EXPECT_EQ(to_string(bad), "1/2*p*d");
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(6, 2), BigInt(15));
  EXPECT_EQ(binomial(2, 3), BigInt(0));
  EXPECT_EQ(factorial(5), BigInt(120));
}
