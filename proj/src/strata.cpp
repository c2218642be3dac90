#include "strata/strata.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "strata/divisors.hpp"

namespace strata {

namespace {

std::string line_name(std::size_t i) { return "L" + std::to_string(i + 1); }

std::vector<std::string> names_with_lines(std::vector<std::string> head, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) head.push_back(line_name(i));
  return head;
}

}  // namespace

StratumClass omp_stratum(int p) {
  if (p < 0) throw DomainError("omp_stratum needs p >= 0");
  VarSpec amb = VarSpec::planes({"X"});
  return {omp_conditions_class(amb, p), CohClass::one(amb), 1, p + 1, "omp"};
}

int branch_automorphisms(std::span<const int> branches) {
  std::map<int, int> counts;
  for (int b : branches) ++counts[b];
  BigInt g = 1;
  for (const auto& [b, n] : counts) g *= factorial(n);
  return static_cast<int>(g.get_si());
}

StratumClass kbranch_stratum(std::span<const int> branches) {
  if (branches.empty()) throw DomainError("kbranch_stratum needs at least one branch");
  for (int b : branches)
    if (b < 1) throw DomainError("branch multiplicities must be positive");
  const int p = std::accumulate(branches.begin(), branches.end(), 0);
  VarSpec amb = VarSpec::planes(names_with_lines({"X"}, branches.size()));

  // sum_{j=0..n} A^(n-j) B^j with A = F + (d-p)X, B = sum p_i L_i.
  const unsigned n = static_cast<unsigned>(binomial(p + 2, 2).get_ui()) - 1;
  CohClass a = CohClass::divisor(amb, ParamPoly(1), {{"X", d_minus(p)}});
  CohClass b(amb, 1);
  CohClass incidence = CohClass::one(amb);
  for (std::size_t i = 0; i < branches.size(); ++i) {
    b += CohClass::generator(amb, line_name(i)) * ParamPoly(branches[i]);
    incidence *= incidence_class(amb, "X", line_name(i));
  }
  CohClass sum(amb, static_cast<int>(n));
  CohClass bj = CohClass::one(amb);
  for (unsigned j = 0; j <= n && !(j > 0 && bj.is_zero()); ++j) {
    sum += pow(a, n - j) * bj;
    bj *= b;
  }
  SingularitySpec spec(KBranchType{std::vector<int>(branches.begin(), branches.end())});
  return {sum, incidence, branch_automorphisms(branches), spec.determinacy_order(), "kbranch"};
}

StratumClass cusp_stratum(int p) {
  if (p < 2) throw DomainError("cusp_stratum needs p >= 2");
  VarSpec amb = VarSpec::planes({"X", "L"});
  std::vector<CohClass> factors{omp_conditions_class(amb, p - 1)};
  for (int i = 0; i < p; ++i)
    factors.push_back(CohClass::divisor(amb, ParamPoly(1), {{"X", d_minus(2L * p - i)}, {"L", ParamPoly(p - 2 * i)}}));
  return {product(amb, factors), incidence_class(amb, "X", "L"), 1, p + 1, "cusp"};
}

StratumClass diagram_stratum(const NewtonDiagram& diagram, TangentAxis axis) {
  const auto kills = diagram.kill_points();
  const int m = diagram.multiplicity();
  if (kills.empty()) {
    StratumClass s = omp_stratum(m - 1);
    s.valid_from_d = diagram.max_degree();
    return s;
  }
  if (axis == TangentAxis::automatic) {
    if (diagram.a_intercept() == diagram.b_intercept())
      throw DomainError("diagram " + diagram.to_string() +
                        " has equal intercepts; pass the tangent axis explicitly");
    axis = diagram.a_intercept() > diagram.b_intercept() ? TangentAxis::a : TangentAxis::b;
  }
  VarSpec amb = VarSpec::planes({"X", "L"});
  std::vector<CohClass> factors{omp_conditions_class(amb, m - 1)};
  for (const auto& pt : kills) {
    int along = axis == TangentAxis::a ? pt.a : pt.b;
    int across = axis == TangentAxis::a ? pt.b : pt.a;
    factors.push_back(monomial_kill_class(amb, along, across));
  }
  return {product(amb, factors), incidence_class(amb, "X", "L"), 1, diagram.max_degree(), "diagram"};
}

StratumClass two_omp_stratum(int p, int q) {
  if (q < 1) throw DomainError("two_omp_stratum needs q >= 1");
  if (p < q)
    throw DomainError("two_omp_stratum needs p >= q; the class is not symmetric in (p, q), so order the points with "
                      "the higher multiplicity first");
  VarSpec amb = VarSpec::planes({"X", "Y", "L"});
  std::vector<CohClass> factors{omp_conditions_class(amb, p)};
  for (int i = 0; i <= q; ++i) {
    for (int j = 0; j <= q - i; ++j) {
      // F + (d-i-j)Y + iX - jL - (p+1+i-j)(X+Y-L)
      const long e = p + 1 + i - j;
      factors.push_back(CohClass::divisor(
          amb, ParamPoly(1),
          {{"X", ParamPoly(i - e)}, {"Y", d_minus(i + j + e)}, {"L", ParamPoly(e - j)}}));
    }
  }
  CohClass incidence = incidence_class(amb, "X", "L") * incidence_class(amb, "Y", "L");
  return {product(amb, factors), incidence, p == q ? 2 : 1, p + q + 2, "two-omp"};
}

CohClass chipping_product(int p, int q, long d0) {
  if (q < 1 || p < q) throw DomainError("chipping_product needs p >= q >= 1");
  if (d0 < p + q + 2)
    throw DomainError("chipping_product needs d >= p + q + 2 = " + std::to_string(p + q + 2));
  VarSpec amb = VarSpec::planes({"X", "Y", "L"});
  std::vector<CohClass> factors;
  for (long k = p + 1; k <= d0 - q - 1; ++k) {
    const long e = k + q + 1;
    factors.push_back(CohClass::divisor(
        amb, ParamPoly(1), {{"X", ParamPoly(d0 - k - e)}, {"Y", ParamPoly(k - e)}, {"L", ParamPoly(e)}}));
  }
  return product(amb, factors);
}

CohClass solve_degeneration(const CohClass& rhs, const CohClass& kill) { return divide_exact(rhs, kill); }

std::vector<int> tangent_cone_branches(const SingularitySpec& sx) {
  if (auto* c = std::get_if<CuspType>(&sx.kind())) return {c->p};
  if (auto* k = std::get_if<KBranchType>(&sx.kind())) return k->branches;
  return {};
}

DegenerationEquation node_degeneration(const SingularitySpec& sx) {
  const std::vector<int> branches = tangent_cone_branches(sx);
  if (branches.empty())
    throw DomainError("collision with a node is only available for cusp and k-branch types, not " + sx.to_string() +
                      "; longer degeneration chains are not supported");
  const int big_p = std::accumulate(branches.begin(), branches.end(), 0);
  if (big_p < 2) throw DomainError("the degenerating point must have multiplicity >= 2");
  const std::size_t k = branches.size();
  VarSpec amb = VarSpec::planes(names_with_lines({"X", "Y", "L"}, k));

  CohClass branch_incidence = CohClass::one(amb);
  for (std::size_t i = 0; i < k; ++i) branch_incidence *= incidence_class(amb, "X", line_name(i));
  const CohClass xy = diagonal_class(amb, "X", "Y", 2);
  const CohClass xl = incidence_class(amb, "X", "L");

  DegenerationEquation eq;
  eq.degenerate = two_omp_stratum(big_p, 1).lifted().promoted(amb) * branch_incidence;

  // y falls into x along a generic line: x1^(P+1) and x1^P x2 die as well.
  const NewtonDiagram generic_fall = NewtonDiagram::from_vertices({{big_p + 2, 0}, {big_p - 1, 2}, {0, big_p + 1}});
  const int generic_weight = *tangency_degree({false, 0});
  eq.residual = diagram_stratum(generic_fall, TangentAxis::a).cls.promoted(amb) * xl * branch_incidence * xy *
                ParamPoly(generic_weight);

  // y falls into x along a simple branch line l_i: only x1^(P+1) dies.
  const NewtonDiagram branch_fall = NewtonDiagram::from_vertices({{big_p + 2, 0}, {big_p, 1}, {0, big_p + 1}});
  const CohClass branch_base = diagram_stratum(branch_fall, TangentAxis::a).cls.promoted(amb) * xl * xy;
  for (std::size_t i = 0; i < k; ++i) {
    auto weight = tangency_degree({true, branches[i]});
    if (!weight) continue;
    CohClass others = CohClass::one(amb);
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) others *= incidence_class(amb, "X", line_name(j));
    eq.residual += branch_base * others * diagonal_class(amb, "L", line_name(i), 2) * ParamPoly(*weight);
  }

  std::vector<ConeLine> cone;
  for (std::size_t i = 0; i < k; ++i) cone.push_back({line_name(i), branches[i]});
  eq.kill = kill_tangent_cone_class(amb, big_p, cone);
  eq.aut_order = branch_automorphisms(branches);
  eq.valid_from_d = validity_bound(sx, SingularitySpec(OmpType{2}));
  return eq;
}

StratumClass with_node_stratum(const SingularitySpec& sx) {
  DegenerationEquation eq = node_degeneration(sx);
  CohClass cls = solve_degeneration(eq.rhs(), eq.kill);
  return {cls, CohClass::one(cls.ambient()), eq.aut_order, eq.valid_from_d, "degeneration"};
}

StratumClass single_stratum(const SingularitySpec& sx) {
  return std::visit(
      [&sx](const auto& k) -> StratumClass {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, OmpType>) return omp_stratum(k.multiplicity - 1);
        else if constexpr (std::is_same_v<T, CuspType>) return cusp_stratum(k.p);
        else if constexpr (std::is_same_v<T, KBranchType>) return kbranch_stratum(k.branches);
        else {
          (void)sx;
          return diagram_stratum(k.diagram);
        }
      },
      sx.kind());
}

}  // namespace strata
