#pragma once

// Named divisor classes on point/line parameter spaces. A point x has class X,
// a line l has class L, and F is the hyperplane class of the curves. The
// curve degree d enters through ParamPoly coefficients.

#include <span>
#include <string>
#include <string_view>

#include "strata/cohring.hpp"

namespace strata {

// x lies on l
CohClass incidence_class(const VarSpec& ambient, std::string_view point, std::string_view line);
// sum_{i=0..n} a^(n-i) b^i, the class of the diagonal {a == b} in P^n x P^n for n = 2.
CohClass diagonal_class(const VarSpec& ambient, std::string_view a, std::string_view b, int n);
// X + Y - L, the exceptional divisor of the blow-up along the point diagonal.
CohClass exceptional_class(const VarSpec& ambient, std::string_view x = "X", std::string_view y = "Y",
                           std::string_view line = "L");
// Vanishing of the coefficient of x1^along x2^across in coordinates where x2 = 0
// is the line through the point.
CohClass monomial_kill_class(const VarSpec& ambient, int along, int across, std::string_view point = "X",
                             std::string_view line = "L");

struct ConeLine {
  std::string line;
  int multiplicity = 1;
};

// The order-p part of the curve equals prod l_i^{p_i} up to scale:
// F + (d - p) X - sum p_i L_i.
CohClass kill_tangent_cone_class(const VarSpec& ambient, int p, std::span<const ConeLine> cone,
                                 std::string_view point = "X");
// All partial derivatives of order <= p vanish at the point:
// (F + (d - p) X)^C(p+2, 2).
CohClass omp_conditions_class(const VarSpec& ambient, int p, std::string_view point = "X");

// d - k as a polynomial in d.
ParamPoly d_minus(long k);

}  // namespace strata
