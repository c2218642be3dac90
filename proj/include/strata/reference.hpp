#pragma once

// Published closed-form degree formulas, transcribed term by term. They are
// used as reference values and are not derived from the ring computations.

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "strata/coeffring.hpp"

namespace strata::reference {

// Single points.
RatPoly omp(int p);                         // multiplicity p + 1
RatPoly kbranch(std::span<const int> branches);  // tangent cone prod l_i^{p_i}
RatPoly cusp(int p);                        // kbranch with one branch of multiplicity p
RatPoly rectified_cusp(int p);              // (x^(p-1) + x^p)(x + x^2)

// Two ordinary points of multiplicities p + 1 and q + 1, q in {1, 2, 3}.
RatPoly two_omp(int p, int q);

// Point of the named kind together with a node / D4 / X9 point.
RatPoly omp_with_node(int p);
RatPoly omp_with_d4(int p);
RatPoly omp_with_x9(int p);
RatPoly cusp_with_node(int p);
RatPoly line_cusp_with_node(int p);       // y(x^p + x^(p+1)) and a node
RatPoly two_line_cusp_with_node(int p);   // (x^2 + y^2)(x^p + x^(p+1)) and a node
RatPoly rectified_cusp_with_node(int p);  // (x^(p-1) + x^p)(x - x^2) and a node
// Only the correction term is available for (x^(p-2) + x^(p-2))(x^2 - x^4) with a node, p > 2.
RatPoly collision_with_node_correction(int p);

struct Formula {
  std::string id;
  std::string description;
  int p_min = 1;
  int q = 0;  // fixed second multiplicity parameter, 0 when absent
  std::function<RatPoly(int)> degree;
  std::function<int(int)> valid_from_d;
};

const std::vector<Formula>& catalog();
const Formula& find(std::string_view id);  // throws strata::Error if unknown

}  // namespace strata::reference
