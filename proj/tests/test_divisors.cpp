#include <gtest/gtest.h>

#include "strata/divisors.hpp"

using namespace strata;

namespace {

const VarSpec& amb() {
  static const VarSpec v = VarSpec::planes({"X", "Y", "L", "L1", "L2"});
  return v;
}

CohClass g(const char* n) { return CohClass::generator(amb(), n); }

}  // namespace

TEST(Divisors, IncidenceAndDiagonal) {
  EXPECT_EQ(incidence_class(amb(), "Y", "L"), g("Y") + g("L"));
  EXPECT_EQ(diagonal_class(amb(), "X", "Y", 2), pow(g("X"), 2) + g("X") * g("Y") + pow(g("Y"), 2));
  EXPECT_EQ(diagonal_class(amb(), "X", "Y", 0), CohClass::one(amb()));
  EXPECT_EQ(exceptional_class(amb()), g("X") + g("Y") - g("L"));
}

TEST(Divisors, MonomialKillFormula) {
  // F + (d - b - 2a)X + (a - b)L for the monomial x1^a x2^b.
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      CohClass k = monomial_kill_class(amb(), a, b);
      EXPECT_EQ(k.f_coefficient(), ParamPoly(1));
      EXPECT_EQ(k.coeff({{"X", 1}}), ParamPoly::linear(BigInt(-b - 2 * a), BigInt(1)));
      EXPECT_EQ(k.coeff({{"L", 1}}), ParamPoly(a - b));
    }
  EXPECT_THROW(monomial_kill_class(amb(), -1, 0), Error);
}

TEST(Divisors, KillTangentCone) {
  std::vector<ConeLine> cone{{"L1", 2}, {"L2", 1}};
  CohClass k = kill_tangent_cone_class(amb(), 3, cone);
  EXPECT_EQ(k, CohClass::divisor(amb(), ParamPoly(1), {{"X", d_minus(3)}, {"L1", ParamPoly(-2)}, {"L2", ParamPoly(-1)}}));
  EXPECT_THROW(kill_tangent_cone_class(amb(), 4, cone), Error);
}

TEST(Divisors, OmpConditionsTopCoefficient) {
  // X^2 coefficient of (F + (d-p)X)^N is C(N, 2)(d-p)^2 with N = C(p+2, 2).
  VarSpec x = VarSpec::planes({"X"});
  for (int p = 0; p <= 6; ++p) {
    CohClass c = omp_conditions_class(x, p);
    BigInt n = binomial(p + 2, 2);
    EXPECT_EQ(c.total_degree(), static_cast<int>(n.get_si()));
    EXPECT_EQ(c.coeff({{"X", 2}}), ParamPoly(binomial(n.get_si(), 2)) * d_minus(p) * d_minus(p));
    EXPECT_EQ(c.coeff({{"X", 1}}), ParamPoly(n) * d_minus(p));
  }
}
