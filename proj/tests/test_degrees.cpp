#include <gtest/gtest.h>

#include "strata/degrees.hpp"
#include "strata/divisors.hpp"
#include "strata/reference.hpp"

using namespace strata;

TEST(Degrees, NodePairSpotValues) {
  // Two nodes: (9(d-1)^4 - 42(d-1)^2 + 33(d-1)) / 2; at d=3: (144-168+66)/2.
  DegreeResult r = degree_of(OmpType{2}, OmpType{2});
  EXPECT_EQ(r.at(3), BigInt(21));
  EXPECT_EQ(r.at(4), BigInt(225));
  EXPECT_EQ(r.denominator, BigInt(2));
  EXPECT_EQ(r.aut_applied, 2);
  EXPECT_EQ(r.valid_from_d, 4);
  RatPoly e = RatPoly::linear(BigRational(-1), BigRational(1));
  RatPoly hand = (RatPoly(BigRational(9)) * e * e * e * e - RatPoly(BigRational(42)) * e * e + RatPoly(BigRational(33)) * e) *
                 RatPoly(BigRational(1, 2));
  EXPECT_EQ(r.polynomial(), hand);
}

TEST(Degrees, PairNormalization) {
  EXPECT_EQ(degree_of(OmpType{2}, OmpType{4}).numerator, degree_of(OmpType{4}, OmpType{2}).numerator);
  EXPECT_EQ(degree_of(OmpType{2}, CuspType{3}).numerator, degree_of(CuspType{3}, OmpType{2}).numerator);
  EXPECT_THROW(degree_of(CuspType{2}, CuspType{3}), DomainError);
  EXPECT_THROW(degree_of(OmpType{1}, OmpType{3}), DomainError);
}

TEST(Degrees, GysinRejectsNonDivisibleAutomorphisms) {
  StratumClass s = omp_stratum(1);  // 3(d-1)^2 is not always even
  s.aut_order = 2;
  EXPECT_THROW(gysin_degree(s), InexactError);
}

TEST(Degrees, SingleOmpMatchesBinomialOracle) {
  for (int p = 1; p <= 10; ++p) {
    long n = binomial(p + 2, 2).get_si();
    ParamPoly expected = ParamPoly(binomial(n, 2)) * d_minus(p) * d_minus(p);
    DegreeResult r = degree_of(OmpType{p + 1});
    EXPECT_EQ(r.numerator, expected);
    EXPECT_EQ(r.denominator, BigInt(1));
  }
}

TEST(Degrees, NodeAsTwoSimpleBranches) {
  // A node seen as two unordered simple branches: 3(d-1)^2.
  DegreeResult r = degree_of(KBranchType{{1, 1}});
  EXPECT_EQ(r.polynomial(), RatPoly(BigRational(3)) * to_rational(d_minus(1) * d_minus(1)));
}

TEST(Degrees, CorrectionTermDecomposition) {
  // Correction for an ordinary point with a node equals the printed one.
  for (int p = 1; p <= 4; ++p) {
    DegreeResult joint = degree_of(OmpType{p + 1}, OmpType{2});
    RatPoly corr = correction_term(joint, degree_of(OmpType{p + 1}), degree_of(OmpType{2}));
    RatPoly full = assemble_two_point_degree(degree_of(OmpType{p + 1}), degree_of(OmpType{2}), corr);
    EXPECT_EQ(full, to_rational(joint.raw()));
    EXPECT_EQ(full, reference::omp_with_node(p));
  }
}

TEST(Degrees, ClosedFormForOrdinaryPoints) {
  ClosedForm cf = closed_form_in_p([](int p) { return degree_of(OmpType{p + 1}).polynomial(); }, 1, 8);
  EXPECT_TRUE(cf.held_out_matches);
  for (int p = 1; p <= 12; ++p) EXPECT_EQ(cf.poly.at_p(BigRational(p)), reference::omp(p));
  EXPECT_EQ(cf.poly.d_degree(), 2);
  EXPECT_EQ(cf.poly.p_degree(), 6);
}

TEST(Degrees, ClosedFormDetectsTooFewSamples) {
  // Four samples cannot pin down a degree six dependence on p.
  auto family = [](int p) { return degree_of(OmpType{p + 1}).polynomial(); };
  bool caught = false;
  try {
    ClosedForm cf = closed_form_in_p(family, 1, 4);
    caught = !cf.held_out_matches;
  } catch (const InexactError&) {
    caught = true;
  }
  EXPECT_TRUE(caught);
}

TEST(Reference, CatalogIsComplete) {
  EXPECT_EQ(reference::catalog().size(), 14u);
  EXPECT_THROW(reference::find("nope"), Error);
  EXPECT_EQ(reference::find("two-omp-q2").q, 2);
  EXPECT_EQ(reference::two_omp(1, 1), reference::omp_with_node(1));
  EXPECT_THROW(reference::two_omp(5, 4), Error);
}
