#include "strata/coeffring.hpp"

#include <sstream>

namespace strata {

RatPoly to_rational(const ParamPoly& p) {
  std::vector<BigRational> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return RatPoly::from_coeffs(std::move(c));
}

std::optional<ParamPoly> to_integral(const RatPoly& p) {
  std::vector<BigInt> c;
  for (const auto& x : p.coeffs()) {
    if (x.get_den() != 1) return std::nullopt;
    c.push_back(x.get_num());
  }
  return ParamPoly::from_coeffs(std::move(c));
}

BigInt content(const ParamPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ParamPoly divide_exact(const ParamPoly& p, const BigInt& divisor) {
  if (divisor == 0) throw InexactError("division of a polynomial by zero");
  std::vector<BigInt> out;
  for (const auto& c : p.coeffs()) {
    if (!mpz_divisible_p(c.get_mpz_t(), divisor.get_mpz_t()))
      throw InexactError("polynomial " + to_string(p) + " is not divisible by " + divisor.get_str());
    out.push_back(c / divisor);
  }
  return ParamPoly::from_coeffs(std::move(out));
}

std::vector<BigRational> binomial_coordinates(const RatPoly& p) {
  const int n = std::max(p.degree(), 0);
  std::vector<BigRational> diffs;
  for (int i = 0; i <= n; ++i) diffs.push_back(p(BigRational(i)));
  std::vector<BigRational> out;
  for (int k = 0; k <= n; ++k) {
    out.push_back(diffs[0]);
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    diffs.pop_back();
  }
  return out;
}

bool is_integer_valued(const RatPoly& p) {
  for (const auto& c : binomial_coordinates(p))
    if (c.get_den() != 1) return false;
  return true;
}

bool is_divisible_everywhere(const ParamPoly& p, const BigInt& m) {
  if (m == 0) return p.is_zero();
  for (const auto& c : binomial_coordinates(to_rational(p)))
    if (!mpz_divisible_p(c.get_num_mpz_t(), m.get_mpz_t())) return false;
  return true;
}

namespace {

template <class Coeff>
std::string format_poly(const BasicPoly<Coeff>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Coeff c = p.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (i == 0 || c != 1) {
      os << c.get_str();
      if (i > 0) os << '*';
    }
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

}  // namespace

std::string to_string(const ParamPoly& p, const std::string& var) { return format_poly(p, var); }
std::string to_string(const RatPoly& p, const std::string& var) { return format_poly(p, var); }

ParamPoly parse_param_poly(const std::vector<std::string>& coeffs) {
  std::vector<BigInt> c;
  for (const auto& s : coeffs) {
    BigInt v;
    if (v.set_str(s, 10) != 0) throw Error("not an integer coefficient: '" + s + "'");
    c.push_back(v);
  }
  return ParamPoly::from_coeffs(std::move(c));
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BivariatePoly::BivariatePoly(std::vector<std::vector<BigRational>> grid) : grid_(std::move(grid)) { trim(); }

void BivariatePoly::trim() {
  for (auto& row : grid_)
    while (!row.empty() && row.back() == 0) row.pop_back();
  while (!grid_.empty() && grid_.back().empty()) grid_.pop_back();
}

int BivariatePoly::d_degree() const {
  int deg = -1;
  for (const auto& row : grid_) deg = std::max(deg, static_cast<int>(row.size()) - 1);
  return deg;
}

BigRational BivariatePoly::coeff(std::size_t i, std::size_t j) const {
  if (i >= grid_.size() || j >= grid_[i].size()) return 0;
  return grid_[i][j];
}

RatPoly BivariatePoly::at_p(const BigRational& p) const {
  RatPoly acc;
  for (auto it = grid_.rbegin(); it != grid_.rend(); ++it) acc = acc * RatPoly(p) + RatPoly::from_coeffs(*it);
  return acc;
}

BigRational BivariatePoly::operator()(const BigRational& p, const BigRational& d) const { return at_p(p)(d); }

bool BivariatePoly::is_integer_valued() const {
  const int np = std::max(p_degree(), 0), nd = std::max(d_degree(), 0);
  // Binomial coordinates along d for each lattice p, then along p.
  std::vector<std::vector<BigRational>> coords;
  for (int i = 0; i <= np; ++i) {
    RatPoly row = at_p(BigRational(i));
    std::vector<BigRational> values;
    for (int j = 0; j <= nd; ++j) values.push_back(row(BigRational(j)));
    std::vector<BigRational> out;
    for (int k = 0; k <= nd; ++k) {
      out.push_back(values[0]);
      for (std::size_t t = 0; t + 1 < values.size(); ++t) values[t] = values[t + 1] - values[t];
      values.pop_back();
    }
    coords.push_back(std::move(out));
  }
  for (int j = 0; j <= nd; ++j) {
    std::vector<BigRational> column;
    for (int i = 0; i <= np; ++i) column.push_back(coords[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    for (int k = 0; k <= np; ++k) {
      if (column[0].get_den() != 1) return false;
      for (std::size_t t = 0; t + 1 < column.size(); ++t) column[t] = column[t + 1] - column[t];
      column.pop_back();
    }
  }
  return true;
}

std::string to_string(const BivariatePoly& poly) {
  std::ostringstream os;
  bool first = true;
  const auto& g = poly.grid();
  for (int i = static_cast<int>(g.size()) - 1; i >= 0; --i) {
    const auto& row = g[static_cast<std::size_t>(i)];
    for (int j = static_cast<int>(row.size()) - 1; j >= 0; --j) {
      BigRational c = row[static_cast<std::size_t>(j)];
      if (c == 0) continue;
      bool neg = c < 0;
      if (neg) c = -c;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      first = false;
      bool mono = i > 0 || j > 0;
      if (!mono || c != 1) os << c.get_str() << (mono ? "*" : "");
      if (i > 0) os << 'p' << (i > 1 ? "^" + std::to_string(i) : "") << (j > 0 ? "*" : "");
      if (j > 0) os << 'd' << (j > 1 ? "^" + std::to_string(j) : "");
    }
  }
  return first ? "0" : os.str();
}

namespace {

// Newton form interpolation through (xs[i], ys[i]).
RatPoly newton_interpolate(const std::vector<BigRational>& xs, std::vector<BigRational> ys) {
  const std::size_t n = xs.size();
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - level]);
  RatPoly acc;
  for (std::size_t i = n; i-- > 0;) acc = acc * RatPoly::linear(-xs[i], BigRational(1)) + RatPoly(ys[i]);
  return acc;
}

}  // namespace

BivariatePoly interpolate(std::span<const PSample> samples, long shift) {
  if (samples.empty()) throw Error("interpolation needs at least one sample");
  std::vector<BigRational> xs;
  std::vector<RatPoly> shifted;
  int max_deg = -1;
  for (const auto& s : samples) {
    for (const auto& x : xs)
      if (x == s.p) throw Error("interpolation samples must have distinct p");
    xs.emplace_back(s.p);
    // value(d) = w(e) with d = e + shift*p
    shifted.push_back(s.value.shifted(BigRational(shift * s.p)));
    max_deg = std::max(max_deg, shifted.back().degree());
  }

  std::vector<std::vector<BigRational>> grid;
  auto add = [&grid](std::size_t i, std::size_t j, const BigRational& v) {
    if (grid.size() <= i) grid.resize(i + 1);
    if (grid[i].size() <= j) grid[i].resize(j + 1, BigRational(0));
    grid[i][j] += v;
  };
  for (int j = 0; j <= max_deg; ++j) {
    std::vector<BigRational> ys;
    for (const auto& w : shifted) ys.push_back(w.coeff(static_cast<std::size_t>(j)));
    RatPoly cj = newton_interpolate(xs, ys);
    // cj(p) * (d - shift p)^j
    for (int k = 0; k <= j; ++k) {
      BigRational factor = BigRational(binomial(j, k));
      for (int t = 0; t < j - k; ++t) factor *= BigRational(-shift);
      for (int i = 0; i <= cj.degree(); ++i)
        add(static_cast<std::size_t>(i + j - k), static_cast<std::size_t>(k), factor * cj.coeff(static_cast<std::size_t>(i)));
    }
  }
  BivariatePoly result(std::move(grid));
  if (!result.is_integer_valued())
    throw InexactError("interpolated polynomial is not integer-valued; degree bound too small or samples inconsistent");
  return result;
}

}  // namespace strata
