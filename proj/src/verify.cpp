#include "strata/verify.hpp"

#include <random>

#include "strata/degrees.hpp"
#include "strata/divisors.hpp"
#include "strata/reference.hpp"

namespace strata {

namespace {

CohClass random_class(const VarSpec& amb, int degree, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  CohClass c(amb, degree);
  std::vector<Exponents> monos{Exponents{}};
  for (std::size_t i = 0; i < amb.size(); ++i) {
    std::vector<Exponents> next;
    for (const auto& e : monos)
      for (int k = 0; k < amb[i].truncation; ++k) {
        Exponents f = e;
        f[i] = static_cast<std::uint8_t>(k);
        if (monomial_degree(f) <= degree) next.push_back(f);
      }
    monos = std::move(next);
  }
  for (const auto& m : monos) c.add_term(m, ParamPoly::linear(BigInt(coeff(rng)), BigInt(coeff(rng))));
  return c;
}

CheckResult check(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok, ok ? std::string() : std::move(detail), false};
}

std::vector<CheckResult> ring_suite() {
  std::vector<CheckResult> out;
  const VarSpec amb = VarSpec::planes({"X", "Y", "L"});
  const CohClass x = CohClass::generator(amb, "X");
  out.push_back(check("nilpotency X^3 = 0", pow(x, 3).is_zero() && !pow(x, 2).is_zero()));

  const CohClass lhs = exceptional_class(amb) * incidence_class(amb, "X", "L") * incidence_class(amb, "Y", "L");
  const CohClass rhs = incidence_class(amb, "X", "L") * diagonal_class(amb, "X", "Y", 2);
  out.push_back(check("E (L+X)(L+Y) = (L+X)(X^2+XY+Y^2)", lhs == rhs, lhs.to_string() + " vs " + rhs.to_string()));

  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> deg(0, 3);
  bool assoc = true, comm = true, distrib = true;
  for (int t = 0; t < 1000; ++t) {
    CohClass a = random_class(amb, deg(rng), rng), b = random_class(amb, deg(rng), rng);
    CohClass c = random_class(amb, deg(rng), rng), c2 = random_class(amb, c.total_degree(), rng);
    assoc = assoc && (a * b) * c == a * (b * c);
    comm = comm && a * b == b * a;
    distrib = distrib && a * (c + c2) == a * c + a * c2;
  }
  out.push_back(check("associativity on 1000 random triples", assoc));
  out.push_back(check("commutativity on 1000 random pairs", comm));
  out.push_back(check("distributivity on 1000 random triples", distrib));

  bool round_trip = true;
  for (int t = 0; t < 100; ++t) {
    CohClass a = random_class(amb, deg(rng) + 1, rng);
    CohClass b = random_class(amb, 1, rng);
    b.add_term(Exponents{}, ParamPoly(1) - b.f_coefficient());
    round_trip = round_trip && divide_exact(a * b, b) == a;
  }
  out.push_back(check("divide_exact(a*b, b) = a on 100 random pairs", round_trip));
  return out;
}

std::vector<CheckResult> corollary_suite() {
  std::vector<CheckResult> out;
  for (int q = 1; q <= 3; ++q)
    for (int p = q; p <= 6; ++p) {
      RatPoly raw = to_rational(gysin_degree(two_omp_stratum(p, q)).raw());
      RatPoly ref = reference::two_omp(p, q);
      out.push_back(check("two ordinary points p=" + std::to_string(p) + " q=" + std::to_string(q), raw == ref,
                          to_string(raw) + " vs " + to_string(ref)));
    }
  return out;
}

void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<CheckResult> appendix_suite() {
  std::vector<CheckResult> out;
  for (int p = 1; p <= 8; ++p) {
    RatPoly ours = gysin_degree(omp_stratum(p)).polynomial();
    out.push_back(check("ordinary point p=" + std::to_string(p), ours == reference::omp(p)));
  }
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(n, n, cur, parts);
    for (const auto& part : parts) {
      RatPoly ours = gysin_degree(kbranch_stratum(part)).polynomial();
      RatPoly ref = reference::kbranch(part);
      out.push_back(check("k-branch (" + join(part) + ")", ours == ref, to_string(ours) + " vs " + to_string(ref)));
    }
  }
  for (int p = 2; p <= 6; ++p) {
    RatPoly ours = gysin_degree(cusp_stratum(p)).polynomial();
    out.push_back(check("cusp p=" + std::to_string(p), ours == reference::cusp(p),
                        to_string(ours) + " vs " + to_string(reference::cusp(p))));
  }
  struct TwoPoint {
    const char* name;
    int q;
    RatPoly (*ref)(int);
  };
  for (const TwoPoint& tp : {TwoPoint{"with node", 1, reference::omp_with_node},
                             TwoPoint{"with D4", 2, reference::omp_with_d4},
                             TwoPoint{"with X9", 3, reference::omp_with_x9}}) {
    for (int p = tp.q; p <= 6; ++p) {
      RatPoly raw = to_rational(gysin_degree(two_omp_stratum(p, tp.q)).raw());
      out.push_back(check(std::string("ordinary point p=") + std::to_string(p) + " " + tp.name, raw == tp.ref(p),
                          to_string(raw) + " vs " + to_string(tp.ref(p))));
    }
  }
  for (int p = 2; p <= 5; ++p) {
    RatPoly ours = degree_of(CuspType{p}, OmpType{2}).polynomial();
    out.push_back(check("cusp p=" + std::to_string(p) + " with node", ours == reference::cusp_with_node(p),
                        to_string(ours) + " vs " + to_string(reference::cusp_with_node(p))));
  }
  for (int p = 2; p <= 4; ++p) {
    RatPoly ours = degree_of(KBranchType{{p, 1}}, OmpType{2}).polynomial();
    out.push_back(check("y(x^p + x^(p+1)) p=" + std::to_string(p) + " with node",
                        ours == reference::line_cusp_with_node(p),
                        to_string(ours) + " vs " + to_string(reference::line_cusp_with_node(p))));
  }
  for (int p = 2; p <= 3; ++p) {
    RatPoly ours = degree_of(KBranchType{{p, 1, 1}}, OmpType{2}).polynomial();
    RatPoly ref = reference::two_line_cusp_with_node(p);
    CheckResult r = check("(x^2 + y^2)(x^p + x^(p+1)) p=" + std::to_string(p) + " with node", ours == ref,
                          to_string(ours) + " vs " + to_string(ref));
    r.informational = true;
    out.push_back(r);
  }
  for (const auto& f : reference::catalog()) {
    bool ok = true;
    std::string where;
    for (int p = f.p_min; p <= 8 && ok; ++p) {
      RatPoly poly = f.degree(p);
      for (int d = f.valid_from_d(p); d < f.valid_from_d(p) + 6 && ok; ++d)
        if (poly(BigRational(d)).get_den() != 1) {
          ok = false;
          where = "p=" + std::to_string(p) + " d=" + std::to_string(d);
        }
    }
    out.push_back(check("integral values of " + f.id, ok, where));
  }
  return out;
}

std::vector<CheckResult> recursion_suite() {
  std::vector<CheckResult> out;
  for (int p = 2; p <= 4; ++p) {
    DegenerationEquation eq = node_degeneration(CuspType{p});
    CohClass c = solve_degeneration(eq.rhs(), eq.kill);
    out.push_back(check("cusp p=" + std::to_string(p) + " degeneration identity", c * eq.kill == eq.rhs()));
    RatPoly ours = gysin_degree(with_node_stratum(CuspType{p})).polynomial();
    out.push_back(check("cusp p=" + std::to_string(p) + " with node matches closed form",
                        ours == reference::cusp_with_node(p)));
  }
  for (int k = 2; k <= 4; ++k) {
    std::vector<int> ones(static_cast<std::size_t>(k), 1);
    RatPoly ours = gysin_degree(with_node_stratum(KBranchType{ones})).polynomial();
    RatPoly direct = to_rational(gysin_degree(two_omp_stratum(k - 1, 1)).raw());
    out.push_back(check(std::to_string(k) + " simple branches with node equals ordinary point route", ours == direct,
                        to_string(ours) + " vs " + to_string(direct)));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ring", "corollary", "appendix", "recursion"};
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite) {
  if (suite == "ring") return ring_suite();
  if (suite == "corollary") return corollary_suite();
  if (suite == "appendix") return appendix_suite();
  if (suite == "recursion") return recursion_suite();
  throw Error("unknown suite '" + std::string(suite) + "'");
}

}  // namespace strata
