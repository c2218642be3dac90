#include "strata/divisors.hpp"

namespace strata {

ParamPoly d_minus(long k) { return ParamPoly::linear(BigInt(-k), BigInt(1)); }

CohClass incidence_class(const VarSpec& ambient, std::string_view point, std::string_view line) {
  return CohClass::generator(ambient, point) + CohClass::generator(ambient, line);
}

CohClass diagonal_class(const VarSpec& ambient, std::string_view a, std::string_view b, int n) {
  if (n < 0) throw Error("diagonal class needs n >= 0");
  CohClass ga = CohClass::generator(ambient, a), gb = CohClass::generator(ambient, b);
  CohClass sum(ambient, n);
  for (int i = 0; i <= n; ++i) sum += pow(ga, static_cast<unsigned>(n - i)) * pow(gb, static_cast<unsigned>(i));
  return sum;
}

CohClass exceptional_class(const VarSpec& ambient, std::string_view x, std::string_view y, std::string_view line) {
  return CohClass::generator(ambient, x) + CohClass::generator(ambient, y) - CohClass::generator(ambient, line);
}

CohClass monomial_kill_class(const VarSpec& ambient, int along, int across, std::string_view point,
                             std::string_view line) {
  if (along < 0 || across < 0) throw Error("monomial exponents must be non-negative");
  return CohClass::divisor(ambient, ParamPoly(1),
                           {{std::string(point), d_minus(across + 2L * along)},
                            {std::string(line), ParamPoly(along - across)}});
}

CohClass kill_tangent_cone_class(const VarSpec& ambient, int p, std::span<const ConeLine> cone,
                                 std::string_view point) {
  int total = 0;
  std::vector<std::pair<std::string, ParamPoly>> parts{{std::string(point), d_minus(p)}};
  for (const auto& c : cone) {
    if (c.multiplicity < 1) throw Error("tangent cone multiplicities must be positive");
    total += c.multiplicity;
    parts.emplace_back(c.line, ParamPoly(-c.multiplicity));
  }
  if (total != p) throw Error("tangent cone multiplicities must sum to " + std::to_string(p));
  return CohClass::divisor(ambient, ParamPoly(1), parts);
}

CohClass omp_conditions_class(const VarSpec& ambient, int p, std::string_view point) {
  if (p < 0) throw Error("order of vanishing must be non-negative");
  CohClass base = CohClass::divisor(ambient, ParamPoly(1), {{std::string(point), d_minus(p)}});
  return pow(base, static_cast<unsigned>(binomial(p + 2, 2).get_ui()));
}

}  // namespace strata
