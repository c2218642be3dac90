#pragma once

// Classes of equisingular strata on parameter spaces of points and lines.

#include <span>
#include <string>
#include <vector>

#include "strata/cohring.hpp"
#include "strata/collide.hpp"

namespace strata {

struct StratumClass {
  CohClass cls;
  // Incidence factor multiplied in before taking the top coefficient, for
  // strata whose class is built on a point-line flag (one for the others).
  CohClass incidence;
  int aut_order = 1;
  int valid_from_d = 0;
  std::string route;

  const VarSpec& ambient() const { return cls.ambient(); }
  CohClass lifted() const { return cls * incidence; }
};

// One point of multiplicity p + 1 on a degree-d curve. Ambient {X}.
StratumClass omp_stratum(int p);

// Tangent cone prod l_i^{p_i} with generic higher terms. Ambient {X, L1..Lk};
// branches of equal multiplicity are unordered, which is the automorphism
// order.
StratumClass kbranch_stratum(std::span<const int> branches);

// x1^p + x2^(p+1) with p >= 2. Ambient {X, L}, L the tangent line.
StratumClass cusp_stratum(int p);

// Which coordinate axis runs along the traced tangent line.
enum class TangentAxis { automatic, a, b };

// Singularity given by a Newton diagram in coordinates adapted to the traced
// line. The class is the multiple-point conditions of order multiplicity - 1
// times one kill factor per lattice point strictly under the diagram.
// Diagrams without kill points are ordinary points and use omp_stratum.
// `automatic` picks the axis with the larger intercept.
StratumClass diagram_stratum(const NewtonDiagram& diagram, TangentAxis axis = TangentAxis::automatic);

// Two ordinary points of multiplicities p + 1 >= q + 1 and the line through
// them. Ambient {X, Y, L}. Rejects p < q.
StratumClass two_omp_stratum(int p, int q);

// prod_{k=p+1}^{d0-q-1} (F + (d0-k)X + kY - (k+q+1)E) at a numeric degree d0.
CohClass chipping_product(int p, int q, long d0);

// The class C with C * kill == rhs.
CohClass solve_degeneration(const CohClass& rhs, const CohClass& kill);

// Terms of the degeneration identity for a single-tangent-cone singularity Sx
// colliding with a node: killing the tangent cone of Sx at x degenerates the
// pair either to an ordinary point of multiplicity P + 1 with a node, or to
// the residual strata where y falls into x.
struct DegenerationEquation {
  CohClass degenerate;
  CohClass residual;
  CohClass kill;
  int aut_order = 1;
  int valid_from_d = 0;

  CohClass rhs() const { return degenerate + residual; }
};

// Supported for cusp and k-branch types. Ambient {X, Y, L, L1..Lk}.
DegenerationEquation node_degeneration(const SingularitySpec& sx);
StratumClass with_node_stratum(const SingularitySpec& sx);

// Branch multiplicities of the tangent cone, or empty for unsupported kinds.
std::vector<int> tangent_cone_branches(const SingularitySpec& sx);
// |G| for the given branch multiplicities.
int branch_automorphisms(std::span<const int> branches);

// Single-point stratum for any supported type.
StratumClass single_stratum(const SingularitySpec& sx);

}  // namespace strata
