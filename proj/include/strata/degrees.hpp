#pragma once

// Degrees of strata: top-coefficient extraction, automorphism quotients,
// two-point assembly and closed forms in p.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "strata/coeffring.hpp"
#include "strata/collide.hpp"
#include "strata/strata.hpp"

namespace strata {

// degree(d) = numerator(d) / denominator, an integer for every integer d.
struct DegreeResult {
  ParamPoly numerator;
  BigInt denominator = 1;
  int aut_applied = 1;
  int valid_from_d = 0;
  std::string route;

  RatPoly polynomial() const;
  BigInt at(long d0) const;
  // Degree before the automorphism quotient.
  ParamPoly raw() const;
};

// Coefficient of the top monomial of cls * incidence, divided by the
// automorphism order. Throws InexactError when the quotient is not integral.
DegreeResult gysin_degree(const StratumClass& s);

DegreeResult degree_of(const SingularitySpec& sx);
// Unordered pair: ordinary points are sorted by multiplicity, and a node is
// always placed second.
DegreeResult degree_of(const SingularitySpec& sx, const SingularitySpec& sy);
// The stratum whose top coefficient degree_of(sx, sy) extracts.
StratumClass pair_stratum(const SingularitySpec& sx, const SingularitySpec& sy);

// S_x * S_y + correction, before any automorphism quotient of the pair.
RatPoly assemble_two_point_degree(const DegreeResult& sx, const DegreeResult& sy, const RatPoly& correction);
// joint - S_x * S_y, with joint taken before the pair automorphism quotient.
RatPoly correction_term(const DegreeResult& joint, const DegreeResult& sx, const DegreeResult& sy);

struct ClosedForm {
  BivariatePoly poly;
  std::vector<PSample> samples;
  PSample held_out;
  bool held_out_matches = false;
};

// Interpolates family(p) for p in [p_first, p_last] in powers of (d - shift*p),
// then checks the fit at p_last + 1.
ClosedForm closed_form_in_p(const std::function<RatPoly(int)>& family, int p_first, int p_last, long shift = 1);

}  // namespace strata
