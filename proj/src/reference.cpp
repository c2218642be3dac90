#include "strata/reference.hpp"

#include <map>
#include <numeric>

#include "strata/error.hpp"

namespace strata::reference {

namespace {

RatPoly q(long num, long den = 1) { return RatPoly(BigRational(num, den)); }
RatPoly q(const BigInt& n) { return RatPoly(BigRational(n)); }
RatPoly d() { return RatPoly::variable(); }
RatPoly dm(long k) { return d() - q(k); }
RatPoly C(long n, long k) { return q(binomial(n, k)); }

RatPoly node() { return q(3) * dm(1) * dm(1); }
RatPoly d4() { return q(15) * dm(2) * dm(2); }
RatPoly x9() { return q(45) * dm(3) * dm(3); }

}  // namespace

RatPoly omp(int p) {
  const long n = binomial(p + 2, 2).get_si();
  return C(n, 2) * dm(p) * dm(p);
}

RatPoly kbranch(std::span<const int> branches) {
  const long k = static_cast<long>(branches.size());
  const long p = std::accumulate(branches.begin(), branches.end(), 0L);
  const long n = binomial(p + 2, 2).get_si();
  std::map<int, int> counts;
  BigInt prod = 1;
  long pair_sum = 0;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    ++counts[branches[i]];
    prod *= branches[i];
    for (std::size_t j = i + 1; j < branches.size(); ++j) pair_sum += static_cast<long>(branches[i]) * branches[j];
  }
  BigInt g = 1;
  for (const auto& [b, c] : counts) g *= factorial(c);

  RatPoly inner = q(factorial(k)) * C(n - 1 - k, 2) * dm(p) * dm(p) +
                  q(factorial(k - 1)) * C(k + 1, 2) * q(n - 2 - k) * dm(p) * q(p);
  if (k >= 2) inner += q(factorial(k - 2)) * C(k, 2) * C(k + 2, 2) * q(pair_sum);
  return RatPoly(BigRational(prod) / BigRational(g)) * inner;
}

RatPoly cusp(int p) {
  const int b[] = {p};
  return kbranch(b);
}

RatPoly rectified_cusp(int p) {
  const RatPoly P = q(p);
  return P * q(p + 4) * q(p - 1) * q(1, 8) * (q(2) * P * P * P + q(7) * P * P - q(5) * P - q(2)) * dm(p) * dm(p) +
         (C(p + 2, 2) - q(3)) * P * P * dm(p) * (d() - q(2L * (p + 1)));
}

RatPoly two_omp(int p, int qq) {
  const RatPoly P = q(p);
  const RatPoly D = dm(p);
  const RatPoly D3 = D * D * D;
  const RatPoly P2 = P * P, P3 = P2 * P, P4 = P3 * P, P5 = P4 * P;
  switch (qq) {
    case 1:
      return q(9) * C(p + 3, 4) * D3 * (d() + P - q(2)) -
             q(3, 4) * C(p + 2, 3) * (q(10) * P2 + q(39) * P + q(7)) * D * D +
             q(3) * C(p + 2, 3) * D * (q(6) + q(5) * P);
    case 2:
      return q(45) * C(p + 3, 4) * D3 * (d() + P - q(4)) +
             q(2) * D * (q(8) + q(3) * P + P2) * (q(35) * P2 + q(20) * P - q(12)) -
             q(5, 8) * (P + q(1)) * D * D * (q(14) * P4 + q(105) * P3 + q(147) * P2 + q(114) * P - q(80)) -
             q(6) * (q(85) * P2 + q(45) * P - q(28));
    case 3:
      return q(135) * C(p + 3, 4) * D3 * (d() + P - q(6)) +
             q(2) * D * (q(16) + q(3) * P + P2) * (q(270) * P2 - q(20) * P - q(117)) -
             q(5, 8) * D * D *
                 (q(54) * P5 + q(527) * P4 + q(948) * P3 + q(1853) * P2 - q(894) * P - q(1152)) -
             q(14) * (q(830) * P2 - q(105) * P - q(348));
    default:
      throw Error("closed two-point formulas exist only for q = 1, 2, 3");
  }
}

RatPoly omp_with_node(int p) {
  const RatPoly P = q(p);
  return omp(p) * node() - q(3, 4) * C(p + 2, 3) * dm(p) * dm(p) * (q(3) * P + q(4)) * (P * P + q(3) * P + q(4)) +
         q(3) * C(p + 2, 3) * dm(p) * (q(5) * P + q(6));
}

RatPoly omp_with_d4(int p) {
  const RatPoly P = q(p);
  const RatPoly P2 = P * P;
  return omp(p) * d4() +
         (-q(5, 8) * dm(p) * dm(p) * (P + q(1)) * (q(3) * P - q(1)) * (P2 + q(3) * P + q(8)) *
              (P2 + q(3) * P + q(10)) +
          q(2) * dm(p) * (P2 + q(3) * P + q(8)) * (q(35) * P2 + q(20) * P - q(12)) -
          q(6) * (q(85) * P2 + q(45) * P - q(28)));
}

RatPoly omp_with_x9(int p) {
  const RatPoly P = q(p);
  const RatPoly P2 = P * P;
  return omp(p) * x9() +
         (-q(5, 8) * dm(p) * dm(p) * (q(3) * P + q(2)) * (q(3) * P - q(2)) * (P2 + q(3) * P + q(16)) *
              (P2 + q(3) * P + q(18)) +
          q(2) * dm(p) * (P2 + q(3) * P + q(16)) * (q(270) * P2 - q(20) * P - q(117)) -
          q(14) * (q(830) * P2 - q(105) * P - q(348)));
}

RatPoly cusp_with_node(int p) {
  const RatPoly P = q(p);
  const RatPoly P2 = P * P, P3 = P2 * P, P4 = P3 * P;
  return cusp(p) * node() - q(3, 8) * P4 * (q(3) + P) * dm(p) * dm(p) * (P2 + q(3) * P - q(2)) -
         q(3, 2) * (P - q(1)) * P3 * dm(p) * (P2 + q(3) * P - q(2)) + q(3) * P4;
}

RatPoly line_cusp_with_node(int p) {
  const int b[] = {p, 1};
  const RatPoly P = q(p);
  const RatPoly P2 = P * P, P3 = P2 * P, P4 = P3 * P;
  return kbranch(b) * node() -
         P2 * dm(p) * dm(p) * (q(5) + P) * q(1, 8) * (q(2) + q(5) * P + P2) * (q(2) + q(11) * P + q(6) * P2) +
         (P + q(1)) * (P + q(5)) * P3 * q(1, 4) * dm(p) * (q(2) * P + q(3)) * (q(3) * P + q(4)) -
         P2 * (P - q(1)) * q(1, 8) * (q(6) * P4 + q(41) * P3 + q(55) * P2 + q(64) * P + q(92));
}

RatPoly two_line_cusp_with_node(int p) {
  const int b[] = {p, 1, 1};
  const RatPoly P = q(p);
  const RatPoly P2 = P * P, P3 = P2 * P, P4 = P3 * P, P5 = P4 * P, P6 = P5 * P;
  return kbranch(b) * node() -
         P * dm(p) * dm(p) * (q(1) + P) * (P + q(6)) * q(1, 4) * (P2 + q(7) * P + q(4)) *
             (q(9) * P2 + q(34) * P + q(24)) +
         P * dm(p) * (P2 + q(7) * P + q(4)) * (q(9) * P4 + q(79) * P3 + q(220) * P2 + q(216) * P + q(63)) -
         P * (q(9) * P6 + q(124) * P5 + q(587) * P4 + q(1316) * P3 + q(1480) * P2 + q(654) * P + q(60));
}

RatPoly rectified_cusp_with_node(int p) {
  const RatPoly P = q(p);
  const RatPoly P2 = P * P, P3 = P2 * P, P4 = P3 * P;
  return rectified_cusp(p) * node() - q(9) * C(p + 3, 4) * P * dm(p) * dm(p) * (q(4) + P + q(2) * P2) +
         q(3) * P * (P4 + q(3) * P3 + q(3) * P2 + q(4) * P - q(4)) -
         q(3, 2) * P2 * (q(3) + P) * dm(p) * (P3 - q(3) * P2 - P - q(8));
}

RatPoly collision_with_node_correction(int p) {
  const RatPoly P = q(p);
  const RatPoly P2 = P * P, P3 = P2 * P, P4 = P3 * P;
  return -(q(3, 8) * dm(p) * dm(p)) * (P2 + q(3) * P + q(6)) * (P2 + q(3) * P + q(8)) *
             (q(3) * P3 + q(6) * P2 + q(12) * P + q(5)) +
         q(3, 2) * dm(p) * (P2 + q(3) * P + q(6)) * (q(3) * P4 + q(23) * P3 + q(48) * P2 + q(81) * P + q(29)) -
         q(3) * (q(57) + q(182) * P + q(118) * P2 + q(51) * P3 + q(10) * P4);
}

const std::vector<Formula>& catalog() {
  static const std::vector<Formula> formulas = [] {
    std::vector<Formula> f;
    f.push_back({"omp", "ordinary point of multiplicity p+1", 1, 0, omp, [](int p) { return p + 1; }});
    f.push_back({"cusp", "x^p + y^(p+1)", 2, 0, cusp, [](int p) { return p + 1; }});
    f.push_back({"rectified-cusp", "(x^(p-1) + x^p)(x + x^2)", 2, 0, rectified_cusp, [](int p) { return p + 2; }});
    for (int qq = 1; qq <= 3; ++qq)
      f.push_back({"two-omp-q" + std::to_string(qq), "ordinary points of multiplicities p+1 and " + std::to_string(qq + 1),
                   qq, qq, [qq](int p) { return two_omp(p, qq); }, [qq](int p) { return p + qq + 2; }});
    f.push_back({"omp-a1", "ordinary point of multiplicity p+1 and a node", 1, 1, omp_with_node,
                 [](int p) { return p + 3; }});
    f.push_back({"omp-d4", "ordinary point of multiplicity p+1 and a D4 point", 2, 2, omp_with_d4,
                 [](int p) { return p + 4; }});
    f.push_back({"omp-x9", "ordinary point of multiplicity p+1 and an X9 point", 3, 3, omp_with_x9,
                 [](int p) { return p + 5; }});
    f.push_back({"cusp-a1", "x^p + y^(p+1) and a node", 2, 1, cusp_with_node, [](int p) { return p + 3; }});
    f.push_back({"line-cusp-a1", "y(x^p + x^(p+1)) and a node", 2, 1, line_cusp_with_node,
                 [](int p) { return p + 4; }});
    f.push_back({"two-line-cusp-a1", "(x^2 + y^2)(x^p + x^(p+1)) and a node", 2, 1, two_line_cusp_with_node,
                 [](int p) { return p + 5; }});
    f.push_back({"rectified-cusp-a1", "(x^(p-1) + x^p)(x - x^2) and a node", 2, 1, rectified_cusp_with_node,
                 [](int p) { return p + 4; }});
    f.push_back({"collision-a1-correction", "correction term of (x^(p-2) + x^(p-2))(x^2 - x^4) with a node", 3, 1,
                 collision_with_node_correction, [](int p) { return 2 * p + 2; }});
    return f;
  }();
  return formulas;
}

const Formula& find(std::string_view id) {
  for (const auto& f : catalog())
    if (f.id == id) return f;
  throw Error("unknown reference formula '" + std::string(id) + "'");
}

}  // namespace strata::reference
