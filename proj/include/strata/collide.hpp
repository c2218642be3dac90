#pragma once

// Newton diagrams, singularity types and the combinatorics of two colliding
// singular points.

#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "strata/error.hpp"

namespace strata {

struct LatticePoint {
  int a = 0;  // exponent of x1
  int b = 0;  // exponent of x2
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// A convenient (commode) Newton diagram: a convex chain of lattice points from
// the a-axis to the b-axis. Vertices are stored with a strictly decreasing and
// b strictly increasing, so face slopes |db/da| strictly increase.
class NewtonDiagram {
 public:
  // Validates the chain. Duplicate points and points interior to a face are
  // dropped; anything else that is not a convex commode chain is rejected.
  static NewtonDiagram from_vertices(std::vector<LatticePoint> points);
  // Lower convex hull (Newton polygon) of an arbitrary support.
  static NewtonDiagram hull_of(std::vector<LatticePoint> support);

  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  int multiplicity() const;  // min a + b
  int max_degree() const;    // max a + b over vertices
  int a_intercept() const { return vertices_.front().a; }
  int b_intercept() const { return vertices_.back().b; }
  // Every face has slope in [1/2, 2].
  bool is_linear() const;
  // Strictly below the diagram (outside the Newton region).
  bool is_below(LatticePoint pt) const;
  // Points with a + b >= multiplicity strictly below the diagram; these are
  // the monomials a singularity of this type must kill beyond the jet of
  // order multiplicity - 1.
  std::vector<LatticePoint> kill_points() const;
  std::string to_string() const;

  friend bool operator==(const NewtonDiagram&, const NewtonDiagram&) = default;

 private:
  std::vector<LatticePoint> vertices_;
};

struct OmpType {
  int multiplicity = 2;  // ordinary m-fold point
};
struct CuspType {
  int p = 2;  // x1^p + x2^(p+1): multiplicity p, tangent cone a single p-fold line
};
struct KBranchType {
  std::vector<int> branches;  // tangent cone prod l_i^(p_i); generic higher terms
};
struct DiagramType {
  NewtonDiagram diagram;
};

class SingularitySpec {
 public:
  using Kind = std::variant<OmpType, CuspType, KBranchType, DiagramType>;

  SingularitySpec(Kind k);  // NOLINT: validating conversion
  template <class T>
    requires(!std::is_same_v<std::decay_t<T>, Kind> && std::is_constructible_v<Kind, T>)
  SingularitySpec(T&& t) : SingularitySpec(Kind(std::forward<T>(t))) {}  // NOLINT
  // "omp:M", "a1", "d4", "x9", "cusp:P", "kbranch:P1,P2,...", "diagram:a,b;a,b;..."
  static SingularitySpec parse(const std::string& text);

  const Kind& kind() const { return kind_; }
  int multiplicity() const;
  // Order of determinacy used for the validity bound.
  int determinacy_order() const;
  bool is_omp() const { return std::holds_alternative<OmpType>(kind_); }
  std::string to_string() const;

 private:
  Kind kind_;
};

// Newton diagram of the residual singularity when ordinary points of
// multiplicities p+1 and q+1 (p >= q) collide along the line through them.
NewtonDiagram collide_omp(int p, int q);
// Multiplicity of the curve at a generic point of the residual line.
int residual_multiplicity(int p, int q);

struct LineCoincidence {
  bool coincides = false;       // the traced line equals a branch line of the cone
  int branch_multiplicity = 0;  // p_i of that branch line when it coincides
};

// Contribution of the tangency between the traced line and the tangent cone:
// 2 for a generic line, 1 when the line is a simple branch, none when it is a
// multiple branch.
std::optional<int> tangency_degree(const LineCoincidence& c);

// Degree from which the two-point formula is claimed to hold.
int validity_bound(const SingularitySpec& sx, const SingularitySpec& sy);

}  // namespace strata
