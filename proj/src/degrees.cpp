#include "strata/degrees.hpp"

namespace strata {

RatPoly DegreeResult::polynomial() const {
  RatPoly r = to_rational(numerator);
  return r * RatPoly(BigRational(1) / BigRational(denominator));
}

BigInt DegreeResult::at(long d0) const {
  BigInt v = numerator(BigInt(d0));
  if (!mpz_divisible_p(v.get_mpz_t(), denominator.get_mpz_t()))
    throw InexactError("degree is not integral at d = " + std::to_string(d0));
  return v / denominator;
}

ParamPoly DegreeResult::raw() const {
  const BigInt g = BigInt(aut_applied) / denominator;
  return numerator * ParamPoly(g);
}

DegreeResult gysin_degree(const StratumClass& s) {
  const CohClass lifted = s.lifted();
  const ParamPoly raw = lifted.coeff(lifted.ambient().top_monomial());
  const BigInt aut = s.aut_order;
  if (!is_divisible_everywhere(raw, aut))
    throw InexactError("top coefficient " + to_string(raw) + " of the " + s.route +
                       " stratum is not divisible by its automorphism order " + aut.get_str());
  BigInt g = content(raw);
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), aut.get_mpz_t());
  if (g == 0) g = aut;
  DegreeResult r;
  r.numerator = divide_exact(raw, g);
  r.denominator = aut / g;
  r.aut_applied = s.aut_order;
  r.valid_from_d = s.valid_from_d;
  r.route = s.route;
  return r;
}

DegreeResult degree_of(const SingularitySpec& sx) { return gysin_degree(single_stratum(sx)); }

StratumClass pair_stratum(const SingularitySpec& sx, const SingularitySpec& sy) {
  if (sx.is_omp() && sy.is_omp()) {
    int p = sx.multiplicity() - 1, q = sy.multiplicity() - 1;
    if (p < q) std::swap(p, q);
    if (q < 1) throw DomainError("both points must be singular (multiplicity >= 2)");
    return two_omp_stratum(p, q);
  }
  const bool x_node = sx.is_omp() && sx.multiplicity() == 2;
  const bool y_node = sy.is_omp() && sy.multiplicity() == 2;
  if (y_node) return with_node_stratum(sx);
  if (x_node) return with_node_stratum(sy);
  throw DomainError("two-point degrees are available for two ordinary points or for a node with a cusp or k-branch "
                    "point; got " + sx.to_string() + " and " + sy.to_string());
}

DegreeResult degree_of(const SingularitySpec& sx, const SingularitySpec& sy) {
  return gysin_degree(pair_stratum(sx, sy));
}

RatPoly assemble_two_point_degree(const DegreeResult& sx, const DegreeResult& sy, const RatPoly& correction) {
  return sx.polynomial() * sy.polynomial() + correction;
}

RatPoly correction_term(const DegreeResult& joint, const DegreeResult& sx, const DegreeResult& sy) {
  return to_rational(joint.raw()) - sx.polynomial() * sy.polynomial();
}

ClosedForm closed_form_in_p(const std::function<RatPoly(int)>& family, int p_first, int p_last, long shift) {
  if (p_last < p_first) throw Error("closed_form_in_p needs a non-empty p range");
  ClosedForm out;
  for (int p = p_first; p <= p_last; ++p) out.samples.push_back({p, family(p)});
  out.poly = interpolate(out.samples, shift);
  out.held_out = {p_last + 1, family(p_last + 1)};
  out.held_out_matches = out.poly.at_p(BigRational(out.held_out.p)) == out.held_out.value;
  return out;
}

}  // namespace strata
