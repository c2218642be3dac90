#include "strata/cohring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace strata {

VarSpec::VarSpec(std::vector<Generator> gens) : gens_(std::move(gens)) {
  if (gens_.size() > kMaxGenerators) throw Error("too many generators (max " + std::to_string(kMaxGenerators) + ")");
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name.empty()) throw Error("generator names must be non-empty");
    if (gens_[i].truncation < 1 || gens_[i].truncation > 255) throw Error("generator truncation out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (gens_[j].name == gens_[i].name) throw Error("duplicate generator '" + gens_[i].name + "'");
  }
}

VarSpec VarSpec::planes(std::initializer_list<std::string_view> names) {
  std::vector<Generator> g;
  for (auto n : names) g.push_back({std::string(n), 3});
  return VarSpec(std::move(g));
}

VarSpec VarSpec::planes(const std::vector<std::string>& names) {
  std::vector<Generator> g;
  for (const auto& n : names) g.push_back({n, 3});
  return VarSpec(std::move(g));
}

std::optional<std::size_t> VarSpec::find(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  return std::nullopt;
}

std::size_t VarSpec::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw AmbientMismatch("generator '" + std::string(name) + "' not in ambient " + to_string());
  return *i;
}

Exponents VarSpec::top_monomial() const {
  Exponents e{};
  for (std::size_t i = 0; i < gens_.size(); ++i) e[i] = static_cast<std::uint8_t>(gens_[i].truncation - 1);
  return e;
}

int VarSpec::top_degree() const {
  int n = 0;
  for (const auto& g : gens_) n += g.truncation - 1;
  return n;
}

std::string VarSpec::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? "," : "") + gens_[i].name;
  return s + "}";
}

int monomial_degree(const Exponents& m) { return std::accumulate(m.begin(), m.end(), 0); }

Exponents monomial(const VarSpec& ambient, std::initializer_list<std::pair<std::string_view, int>> exps) {
  Exponents e{};
  for (const auto& [name, k] : exps) {
    std::size_t i = ambient.index(name);
    if (k < 0 || k >= ambient[i].truncation)
      throw Error("exponent " + std::to_string(k) + " of " + std::string(name) + " outside the truncation");
    e[i] = static_cast<std::uint8_t>(k);
  }
  return e;
}

CohClass::CohClass(VarSpec ambient, int total_degree)
    : ambient_(std::make_shared<const VarSpec>(std::move(ambient))), total_degree_(total_degree) {
  if (total_degree < 0) throw Error("negative total degree");
}

CohClass CohClass::one(const VarSpec& ambient) {
  CohClass c(ambient, 0);
  c.terms_[Exponents{}] = ParamPoly(1);
  return c;
}

CohClass CohClass::hyperplane(const VarSpec& ambient) {
  CohClass c(ambient, 1);
  c.terms_[Exponents{}] = ParamPoly(1);
  return c;
}

CohClass CohClass::generator(const VarSpec& ambient, std::string_view name) {
  CohClass c(ambient, 1);
  c.add_term(monomial(ambient, {{name, 1}}), ParamPoly(1));
  return c;
}

CohClass CohClass::divisor(const VarSpec& ambient, const ParamPoly& f,
                           const std::vector<std::pair<std::string, ParamPoly>>& parts) {
  CohClass c(ambient, 1);
  c.add_term(Exponents{}, f);
  for (const auto& [name, coeff] : parts) {
    Exponents e{};
    e[ambient.index(name)] = 1;
    if (ambient[ambient.index(name)].truncation > 1) c.add_term(e, coeff);
  }
  return c;
}

ParamPoly CohClass::coeff(const Exponents& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ParamPoly() : it->second;
}

ParamPoly CohClass::coeff(std::initializer_list<std::pair<std::string_view, int>> m) const {
  return coeff(monomial(*ambient_, m));
}

void CohClass::add_term(const Exponents& m, const ParamPoly& c) {
  if (monomial_degree(m) > total_degree_)
    throw Error("monomial degree exceeds the total degree of the class");
  for (std::size_t i = 0; i < kMaxGenerators; ++i) {
    int trunc = i < ambient_->size() ? (*ambient_)[i].truncation : 1;
    if (m[i] >= trunc) return;  // vanishes in the truncated ring
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {

void require_same(const CohClass& a, const CohClass& b, const char* op) {
  if (!(a.ambient() == b.ambient()))
    throw AmbientMismatch(std::string(op) + ": ambients " + a.ambient().to_string() + " and " + b.ambient().to_string() +
                          " differ");
}

}  // namespace

CohClass& CohClass::operator+=(const CohClass& o) {
  require_same(*this, o, "addition");
  if (total_degree_ != o.total_degree_)
    throw AmbientMismatch("addition of classes of total degree " + std::to_string(total_degree_) + " and " +
                          std::to_string(o.total_degree_));
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CohClass& CohClass::operator-=(const CohClass& o) { return *this += -o; }

CohClass& CohClass::operator*=(const ParamPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

CohClass operator*(const CohClass& a, const CohClass& b) {
  require_same(a, b, "multiplication");
  CohClass out(a.ambient(), a.total_degree_ + b.total_degree_);
  out.ambient_ = a.ambient_;
  const std::size_t n = a.ambient().size();
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Exponents m{};
      bool dead = false;
      for (std::size_t i = 0; i < n && !dead; ++i) {
        int e = ma[i] + mb[i];
        dead = e >= a.ambient()[i].truncation;
        m[i] = static_cast<std::uint8_t>(e);
      }
      if (!dead) out.add_term(m, ca * cb);
    }
  }
  return out;
}

CohClass& CohClass::operator*=(const CohClass& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const CohClass& a, const CohClass& b) {
  return a.ambient() == b.ambient() && a.total_degree_ == b.total_degree_ && a.terms_ == b.terms_;
}

CohClass CohClass::promoted(const VarSpec& target) const {
  CohClass out(target, total_degree_);
  std::vector<std::size_t> where(ambient_->size());
  for (std::size_t i = 0; i < ambient_->size(); ++i) {
    where[i] = target.index((*ambient_)[i].name);
    if (target[where[i]].truncation < (*ambient_)[i].truncation)
      throw AmbientMismatch("cannot promote " + (*ambient_)[i].name + " into a smaller truncation");
  }
  for (const auto& [m, c] : terms_) {
    Exponents e{};
    for (std::size_t i = 0; i < ambient_->size(); ++i) e[where[i]] = m[i];
    out.add_term(e, c);
  }
  return out;
}

CohClass CohClass::evaluated(long d0) const {
  CohClass out(*this);
  out.terms_.clear();
  for (const auto& [m, c] : terms_) out.add_term(m, ParamPoly(c(BigInt(d0))));
  return out;
}

std::string CohClass::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    os << (first ? "" : " + ") << '(' << strata::to_string(c) << ')';
    first = false;
    int fdeg = total_degree_ - monomial_degree(m);
    if (fdeg > 0) os << "*F" << (fdeg > 1 ? "^" + std::to_string(fdeg) : "");
    for (std::size_t i = 0; i < ambient_->size(); ++i)
      if (m[i]) os << '*' << (*ambient_)[i].name << (m[i] > 1 ? "^" + std::to_string(m[i]) : "");
  }
  return os.str();
}

CohClass pow(const CohClass& base, unsigned n) {
  CohClass result = CohClass::one(base.ambient()), b = base;
  while (n) {
    if (n & 1u) result *= b;
    n >>= 1u;
    if (n) b *= b;
  }
  return result;
}

namespace {

CohClass product_range(std::span<const CohClass> f) {
  if (f.size() == 1) return f[0];
  auto mid = f.size() / 2;
  return product_range(f.subspan(0, mid)) * product_range(f.subspan(mid));
}

// All exponent vectors of the truncated lattice with degree <= max_deg, in
// increasing degree.
std::vector<Exponents> graded_monomials(const VarSpec& ambient, int max_deg) {
  std::vector<Exponents> out{Exponents{}};
  for (std::size_t i = 0; i < ambient.size(); ++i) {
    std::vector<Exponents> next;
    for (const auto& e : out)
      for (int k = 0; k < ambient[i].truncation; ++k) {
        Exponents f = e;
        f[i] = static_cast<std::uint8_t>(k);
        if (monomial_degree(f) <= max_deg) next.push_back(f);
      }
    out = std::move(next);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Exponents& a, const Exponents& b) { return monomial_degree(a) < monomial_degree(b); });
  return out;
}

}  // namespace

CohClass product(const VarSpec& ambient, std::span<const CohClass> factors) {
  if (factors.empty()) return CohClass::one(ambient);
  return product_range(factors);
}

CohClass divide_exact(const CohClass& c, const CohClass& b) {
  require_same(c, b, "division");
  if (b.total_degree() != 1 || b.f_coefficient() != ParamPoly(1))
    throw Error("divisor must be a degree one class of the form F + (nilpotent part)");
  if (c.total_degree() < 1) {
    if (c.is_zero()) return CohClass(c.ambient(), 0);
    throw InexactError("a nonzero constant class is not divisible by a degree one class");
  }
  const VarSpec& amb = c.ambient();
  const std::size_t n = amb.size();
  CohClass a(amb, c.total_degree() - 1);
  std::vector<std::pair<Exponents, ParamPoly>> nil;
  for (const auto& [m, v] : b.terms())
    if (monomial_degree(m) > 0) nil.emplace_back(m, v);

  // Coefficient comparison: c_e = a_e + sum_{f != 0} a_{e-f} b_f.
  for (const auto& e : graded_monomials(amb, a.total_degree())) {
    ParamPoly v = c.coeff(e);
    for (const auto& [f, bf] : nil) {
      Exponents g{};
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        ok = e[i] >= f[i];
        g[i] = static_cast<std::uint8_t>(e[i] - f[i]);
      }
      if (ok) v -= a.coeff(g) * bf;
    }
    a.add_term(e, v);
  }
  if (!(a * b == c))
    throw InexactError("class is not divisible by " + b.to_string());
  return a;
}

}  // namespace strata
