#include "strata/collide.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

namespace strata {

namespace {

// Cross product of (b - a) and (c - a) in (a, b)-coordinates.
long cross(const LatticePoint& o, const LatticePoint& p, const LatticePoint& q) {
  return static_cast<long>(p.a - o.a) * (q.b - o.b) - static_cast<long>(p.b - o.b) * (q.a - o.a);
}

}  // namespace

NewtonDiagram NewtonDiagram::from_vertices(std::vector<LatticePoint> points) {
  if (points.empty()) throw DomainError("a Newton diagram needs at least one vertex");
  for (const auto& p : points)
    if (p.a < 0 || p.b < 0) throw DomainError("Newton diagram vertices must be non-negative");
  std::sort(points.begin(), points.end(), [](const LatticePoint& x, const LatticePoint& y) {
    return x.a != y.a ? x.a > y.a : x.b < y.b;
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.front().b != 0 || points.back().a != 0)
    throw DomainError("Newton diagram must meet both axes (first vertex on b = 0, last on a = 0)");
  if (points.size() < 2) throw DomainError("Newton diagram must have positive intercepts on both axes");
  for (std::size_t i = 0; i + 1 < points.size(); ++i)
    if (points[i + 1].b <= points[i].b)
      throw DomainError("Newton diagram vertices must have b strictly increasing as a decreases");

  std::vector<LatticePoint> chain;
  for (const auto& p : points) {
    // Walking right to left the chain turns clockwise; drop collinear points.
    while (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), p) == 0) chain.pop_back();
    if (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), p) > 0)
      throw DomainError("Newton diagram is not convex at vertex (" + std::to_string(chain.back().a) + "," +
                        std::to_string(chain.back().b) + ")");
    chain.push_back(p);
  }
  NewtonDiagram d;
  d.vertices_ = std::move(chain);
  return d;
}

NewtonDiagram NewtonDiagram::hull_of(std::vector<LatticePoint> support) {
  int a_int = -1, b_int = -1;
  for (const auto& p : support) {
    if (p.a < 0 || p.b < 0) throw DomainError("support points must be non-negative");
    if (p.b == 0 && (a_int < 0 || p.a < a_int)) a_int = p.a;
    if (p.a == 0 && (b_int < 0 || p.b < b_int)) b_int = p.b;
  }
  if (a_int <= 0 || b_int <= 0) throw DomainError("support must contain pure powers of both variables");
  std::vector<LatticePoint> pts;
  for (const auto& p : support)
    if (p.a <= a_int && p.b <= b_int) pts.push_back(p);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  // Lower hull from (0, b_int) to (a_int, 0).
  std::vector<LatticePoint> lower;
  for (const auto& p : pts) {
    while (lower.size() >= 2 && cross(lower[lower.size() - 2], lower.back(), p) <= 0) lower.pop_back();
    lower.push_back(p);
  }
  while (!lower.empty() && !(lower.front() == LatticePoint{0, b_int})) lower.erase(lower.begin());
  std::vector<LatticePoint> chain;
  for (const auto& p : lower) {
    chain.push_back(p);
    if (p == LatticePoint{a_int, 0}) break;
  }
  return from_vertices(std::move(chain));
}

int NewtonDiagram::multiplicity() const {
  int m = vertices_.front().a + vertices_.front().b;
  for (const auto& v : vertices_) m = std::min(m, v.a + v.b);
  return m;
}

int NewtonDiagram::max_degree() const {
  int m = 0;
  for (const auto& v : vertices_) m = std::max(m, v.a + v.b);
  return m;
}

bool NewtonDiagram::is_linear() const {
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    long da = vertices_[i].a - vertices_[i + 1].a;
    long db = vertices_[i + 1].b - vertices_[i].b;
    // 1/2 <= db/da <= 2
    if (2 * db < da || db > 2 * da) return false;
  }
  return true;
}

bool NewtonDiagram::is_below(LatticePoint pt) const {
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    const auto& u = vertices_[i];
    const auto& v = vertices_[i + 1];
    long na = v.b - u.b, nb = u.a - v.a;
    if (na * pt.a + nb * pt.b < na * u.a + nb * u.b) return true;
  }
  return false;
}

std::vector<LatticePoint> NewtonDiagram::kill_points() const {
  std::vector<LatticePoint> out;
  const int m = multiplicity();
  for (int a = 0; a <= a_intercept(); ++a)
    for (int b = 0; b <= b_intercept(); ++b)
      if (a + b >= m && is_below({a, b})) out.push_back({a, b});
  return out;
}

std::string NewtonDiagram::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    s += (i ? ";" : "") + std::to_string(vertices_[i].a) + "," + std::to_string(vertices_[i].b);
  return s;
}

SingularitySpec::SingularitySpec(Kind k) : kind_(std::move(k)) {
  if (auto* o = std::get_if<OmpType>(&kind_); o && o->multiplicity < 1)
    throw DomainError("ordinary multiple point needs multiplicity >= 1");
  if (auto* c = std::get_if<CuspType>(&kind_); c && c->p < 2) throw DomainError("cusp type needs p >= 2");
  if (auto* k = std::get_if<KBranchType>(&kind_)) {
    if (k->branches.empty()) throw DomainError("k-branch type needs at least one branch");
    for (int b : k->branches)
      if (b < 1) throw DomainError("k-branch multiplicities must be positive");
    std::sort(k->branches.begin(), k->branches.end(), std::greater<>());
  }
}

namespace {

int parse_int(std::string_view s, const std::string& whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw DomainError("malformed singularity '" + whole + "': '" + std::string(s) + "' is not an integer");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

}  // namespace

SingularitySpec SingularitySpec::parse(const std::string& text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "a1") return OmpType{2};
  if (t == "d4") return OmpType{3};
  if (t == "x9") return OmpType{4};
  auto colon = t.find(':');
  if (colon == std::string::npos)
    throw DomainError("malformed singularity '" + text + "' (expected omp:M, cusp:P, kbranch:P1,P2,... or diagram:a,b;...)");
  std::string_view head = std::string_view(t).substr(0, colon), body = std::string_view(t).substr(colon + 1);
  if (head == "omp") return OmpType{parse_int(body, text)};
  if (head == "cusp") return CuspType{parse_int(body, text)};
  if (head == "kbranch") {
    KBranchType k;
    for (auto part : split(body, ',')) k.branches.push_back(parse_int(part, text));
    return k;
  }
  if (head == "diagram") {
    std::vector<LatticePoint> pts;
    for (auto part : split(body, ';')) {
      auto ab = split(part, ',');
      if (ab.size() != 2) throw DomainError("malformed diagram vertex '" + std::string(part) + "'");
      pts.push_back({parse_int(ab[0], text), parse_int(ab[1], text)});
    }
    return DiagramType{NewtonDiagram::from_vertices(std::move(pts))};
  }
  throw DomainError("unknown singularity kind '" + std::string(head) + "'");
}

int SingularitySpec::multiplicity() const {
  return std::visit(
      [](const auto& k) -> int {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, OmpType>) return k.multiplicity;
        else if constexpr (std::is_same_v<T, CuspType>) return k.p;
        else if constexpr (std::is_same_v<T, KBranchType>) return std::accumulate(k.branches.begin(), k.branches.end(), 0);
        else return k.diagram.multiplicity();
      },
      kind_);
}

int SingularitySpec::determinacy_order() const {
  return std::visit(
      [this](const auto& k) -> int {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, OmpType>) return k.multiplicity;
        else if constexpr (std::is_same_v<T, CuspType>) return k.p + 1;
        else if constexpr (std::is_same_v<T, KBranchType>) {
          bool reduced = std::all_of(k.branches.begin(), k.branches.end(), [](int b) { return b == 1; });
          return multiplicity() + (reduced ? 0 : 1);
        } else return k.diagram.max_degree();
      },
      kind_);
}

std::string SingularitySpec::to_string() const {
  return std::visit(
      [](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, OmpType>) return "omp:" + std::to_string(k.multiplicity);
        else if constexpr (std::is_same_v<T, CuspType>) return "cusp:" + std::to_string(k.p);
        else if constexpr (std::is_same_v<T, KBranchType>) {
          std::string s = "kbranch:";
          for (std::size_t i = 0; i < k.branches.size(); ++i) s += (i ? "," : "") + std::to_string(k.branches[i]);
          return s;
        } else return "diagram:" + k.diagram.to_string();
      },
      kind_);
}

NewtonDiagram collide_omp(int p, int q) {
  if (p < q) std::swap(p, q);
  if (q < 0) throw DomainError("collide_omp needs p, q >= 0");
  return NewtonDiagram::from_vertices({{p + 1, 0}, {q + 1, p - q}, {0, p + q + 2}});
}

int residual_multiplicity(int p, int q) {
  if (p < 0 || q < 0) throw DomainError("residual_multiplicity needs p, q >= 0");
  return std::min(p, q) + 1;
}

std::optional<int> tangency_degree(const LineCoincidence& c) {
  if (!c.coincides) return 2;
  if (c.branch_multiplicity < 1) throw DomainError("a coinciding branch line needs multiplicity >= 1");
  if (c.branch_multiplicity == 1) return 1;
  return std::nullopt;
}

int validity_bound(const SingularitySpec& sx, const SingularitySpec& sy) {
  if (sx.is_omp() && sy.is_omp()) return sx.multiplicity() + sy.multiplicity();
  return sx.determinacy_order() + sy.determinacy_order();
}

}  // namespace strata
