#pragma once

// Truncated cohomology ring of a product of projective planes (points and
// lines), tensored with the polynomial ring in the hyperplane class F of the
// space of degree-d curves. F never appears explicitly: a homogeneous class of
// total degree n stores, for each visible monomial m, the coefficient of
// F^(n - deg m) * m.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "strata/coeffring.hpp"

namespace strata {

inline constexpr std::size_t kMaxGenerators = 16;
using Exponents = std::array<std::uint8_t, kMaxGenerators>;

struct Generator {
  std::string name;
  int truncation = 3;  // generator^truncation == 0
  friend bool operator==(const Generator&, const Generator&) = default;
};

class VarSpec {
 public:
  VarSpec() = default;
  explicit VarSpec(std::vector<Generator> gens);
  // Every generator truncated at 3 (a copy of P^2 or its dual).
  static VarSpec planes(std::initializer_list<std::string_view> names);
  static VarSpec planes(const std::vector<std::string>& names);

  std::size_t size() const { return gens_.size(); }
  const Generator& operator[](std::size_t i) const { return gens_[i]; }
  const std::vector<Generator>& generators() const { return gens_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;  // throws if absent
  bool contains(std::string_view name) const { return find(name).has_value(); }
  // Monomial with every exponent at truncation - 1.
  Exponents top_monomial() const;
  int top_degree() const;
  std::string to_string() const;

  friend bool operator==(const VarSpec&, const VarSpec&) = default;

 private:
  std::vector<Generator> gens_;
};

class CohClass {
 public:
  using Terms = std::map<Exponents, ParamPoly>;

  // Zero class in the empty ambient.
  CohClass() : CohClass(VarSpec{}, 0) {}
  // The zero class of the given total degree.
  CohClass(VarSpec ambient, int total_degree);

  static CohClass one(const VarSpec& ambient);
  static CohClass hyperplane(const VarSpec& ambient);  // F
  static CohClass generator(const VarSpec& ambient, std::string_view name);
  // f*F + sum c_i * G_i
  static CohClass divisor(const VarSpec& ambient, const ParamPoly& f,
                          const std::vector<std::pair<std::string, ParamPoly>>& parts);

  const VarSpec& ambient() const { return *ambient_; }
  int total_degree() const { return total_degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Coefficient of F^(n - deg m) * m.
  ParamPoly coeff(const Exponents& m) const;
  ParamPoly coeff(std::initializer_list<std::pair<std::string_view, int>> m) const;
  void add_term(const Exponents& m, const ParamPoly& c);

  CohClass& operator+=(const CohClass& o);
  CohClass& operator-=(const CohClass& o);
  CohClass& operator*=(const CohClass& o);
  CohClass& operator*=(const ParamPoly& c);

  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
  friend CohClass operator-(CohClass a) { return a *= ParamPoly(-1); }
  friend CohClass operator*(const CohClass& a, const CohClass& b);
  friend CohClass operator*(CohClass a, const ParamPoly& c) { return a *= c; }
  friend CohClass operator*(const ParamPoly& c, CohClass a) { return a *= c; }
  friend bool operator==(const CohClass& a, const CohClass& b);

  // Same class viewed in a larger ambient; generators are matched by name.
  CohClass promoted(const VarSpec& target) const;
  // Coefficients evaluated at a numeric degree d0 (kept as constants).
  CohClass evaluated(long d0) const;
  // F-part of a degree one class, i.e. the coefficient of F.
  ParamPoly f_coefficient() const { return coeff(Exponents{}); }

  std::string to_string() const;

 private:
  std::shared_ptr<const VarSpec> ambient_;
  int total_degree_ = 0;
  Terms terms_;
};

CohClass pow(const CohClass& base, unsigned n);
// Balanced-tree product of all factors; `one` of the ambient for an empty list.
CohClass product(const VarSpec& ambient, std::span<const CohClass> factors);
// The unique a with a * b == c, where b has F-coefficient 1. Throws
// InexactError when no such a exists.
CohClass divide_exact(const CohClass& c, const CohClass& b);

Exponents monomial(const VarSpec& ambient, std::initializer_list<std::pair<std::string_view, int>> exps);
int monomial_degree(const Exponents& m);

}  // namespace strata
