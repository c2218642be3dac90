#pragma once

// Univariate polynomials in the degree parameter d, with exact big-integer or
// rational coefficients, plus interpolation of families indexed by p.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "strata/error.hpp"

namespace strata {

using BigInt = mpz_class;
using BigRational = mpq_class;

template <class Coeff>
class BasicPoly {
 public:
  BasicPoly() = default;
  BasicPoly(const Coeff& c) {  // NOLINT: constants convert implicitly
    if (c != 0) coeffs_.push_back(c);
  }
  BasicPoly(long c) : BasicPoly(Coeff(c)) {}  // NOLINT
  BasicPoly(int c) : BasicPoly(Coeff(c)) {}   // NOLINT

  // coeffs[i] multiplies d^i.
  static BasicPoly from_coeffs(std::vector<Coeff> coeffs) {
    BasicPoly r;
    r.coeffs_ = std::move(coeffs);
    r.trim();
    return r;
  }
  static BasicPoly variable() { return from_coeffs({Coeff(0), Coeff(1)}); }
  // c0 + c1 d
  static BasicPoly linear(const Coeff& c0, const Coeff& c1) { return from_coeffs({c0, c1}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }
  std::span<const Coeff> coeffs() const { return coeffs_; }

  Coeff operator()(const Coeff& x) const {
    Coeff acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  BasicPoly& operator+=(const BasicPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  BasicPoly& operator*=(const BasicPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
  friend BasicPoly operator-(BasicPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return from_coeffs(std::move(out));
  }
  friend bool operator==(const BasicPoly& a, const BasicPoly& b) { return a.coeffs_ == b.coeffs_; }

  BasicPoly pow(unsigned n) const {
    BasicPoly result(Coeff(1)), base = *this;
    while (n) {
      if (n & 1u) result *= base;
      n >>= 1u;
      if (n) base *= base;
    }
    return result;
  }

  // p(d + c)
  BasicPoly shifted(const Coeff& c) const {
    BasicPoly result;
    BasicPoly step = linear(c, Coeff(1));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) result = result * step + BasicPoly(*it);
    return result;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Coeff> coeffs_;
};

using ParamPoly = BasicPoly<BigInt>;
using RatPoly = BasicPoly<BigRational>;

RatPoly to_rational(const ParamPoly& p);
std::optional<ParamPoly> to_integral(const RatPoly& p);

// gcd of all coefficients; zero for the zero polynomial.
BigInt content(const ParamPoly& p);
// Coefficient-wise exact division; throws InexactError on a remainder.
ParamPoly divide_exact(const ParamPoly& p, const BigInt& divisor);

// Coefficients of p in the basis C(d, k), k = 0..deg.
std::vector<BigRational> binomial_coordinates(const RatPoly& p);
// True iff p(n) is an integer for every integer n.
bool is_integer_valued(const RatPoly& p);
// True iff p(n) is divisible by m for every integer n.
bool is_divisible_everywhere(const ParamPoly& p, const BigInt& m);

std::string to_string(const ParamPoly& p, const std::string& var = "d");
std::string to_string(const RatPoly& p, const std::string& var = "d");
ParamPoly parse_param_poly(const std::vector<std::string>& coeffs);

BigInt binomial(long n, long k);
BigInt factorial(long n);

// Polynomial in two variables (p, d) with rational coefficients.
class BivariatePoly {
 public:
  BivariatePoly() = default;
  // grid[i][j] multiplies p^i d^j.
  explicit BivariatePoly(std::vector<std::vector<BigRational>> grid);

  int p_degree() const { return static_cast<int>(grid_.size()) - 1; }
  int d_degree() const;
  BigRational coeff(std::size_t i, std::size_t j) const;
  BigRational operator()(const BigRational& p, const BigRational& d) const;
  RatPoly at_p(const BigRational& p) const;
  // Integer-valued on the integer lattice (binomial-basis coefficients integral).
  bool is_integer_valued() const;
  const std::vector<std::vector<BigRational>>& grid() const { return grid_; }
  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

 private:
  void trim();
  std::vector<std::vector<BigRational>> grid_;
};

std::string to_string(const BivariatePoly& p);

struct PSample {
  long p = 0;
  RatPoly value;
};

// Fits a polynomial in (p, d) through samples taken at distinct integer p.
// Each sample is expanded in powers of (d - shift*p) and every coefficient is
// interpolated in p with degree at most samples.size()-1. Throws InexactError
// when the fitted polynomial is not integer-valued.
BivariatePoly interpolate(std::span<const PSample> samples, long shift = 0);

}  // namespace strata
