#include <gtest/gtest.h>

#include "strata/collide.hpp"

using namespace strata;

namespace {

std::vector<LatticePoint> V(std::initializer_list<std::pair<int, int>> pts) {
  std::vector<LatticePoint> out;
  for (auto [a, b] : pts) out.push_back({a, b});
  return out;
}

}  // namespace

TEST(Collide, OrdinaryPointVertices) {
  EXPECT_EQ(collide_omp(3, 1).vertices(), V({{4, 0}, {2, 2}, {0, 6}}));
  EXPECT_EQ(collide_omp(2, 1).vertices(), V({{3, 0}, {2, 1}, {0, 5}}));
  // p = q: the middle vertex falls onto the a-axis vertex.
  EXPECT_EQ(collide_omp(2, 2).vertices(), V({{3, 0}, {0, 6}}));
  EXPECT_EQ(collide_omp(1, 3), collide_omp(3, 1));
  for (int p = 1; p <= 6; ++p)
    for (int q = 1; q <= p; ++q) {
      NewtonDiagram n = collide_omp(p, q);
      EXPECT_EQ(n.multiplicity(), p + 1);
      EXPECT_TRUE(n.is_linear());
      EXPECT_EQ(residual_multiplicity(p, q), q + 1);
    }
}

TEST(Collide, DiagramValidation) {
  EXPECT_THROW(NewtonDiagram::from_vertices(V({{4, 0}, {3, 3}, {0, 4}})), DomainError);  // not convex
  EXPECT_THROW(NewtonDiagram::from_vertices(V({{4, 1}, {0, 4}})), DomainError);          // misses the a-axis
  EXPECT_THROW(NewtonDiagram::from_vertices(V({{4, 0}})), DomainError);
  EXPECT_THROW(NewtonDiagram::from_vertices(V({{-1, 0}, {0, 2}})), DomainError);
  // Collinear and repeated points are dropped.
  EXPECT_EQ(NewtonDiagram::from_vertices(V({{0, 4}, {2, 2}, {4, 0}, {2, 2}})).vertices(), V({{4, 0}, {0, 4}}));
}

TEST(Collide, HullOfSupport) {
  NewtonDiagram n = NewtonDiagram::hull_of(V({{5, 0}, {7, 0}, {3, 3}, {2, 2}, {1, 4}, {0, 6}, {0, 9}}));
  EXPECT_EQ(n.vertices(), V({{5, 0}, {2, 2}, {0, 6}}));
  EXPECT_THROW(NewtonDiagram::hull_of(V({{2, 1}, {0, 3}})), DomainError);
}

TEST(Collide, LinearityAndKillPoints) {
  EXPECT_FALSE(NewtonDiagram::from_vertices(V({{5, 0}, {0, 2}})).is_linear());
  EXPECT_TRUE(NewtonDiagram::from_vertices(V({{4, 0}, {0, 8}})).is_linear());
  // x1^p + x2^(p+1): the monomials of degree p other than x1^p die.
  NewtonDiagram cusp3 = NewtonDiagram::from_vertices(V({{3, 0}, {0, 4}}));
  EXPECT_EQ(cusp3.kill_points(), V({{0, 3}, {1, 2}, {2, 1}}));
  EXPECT_TRUE(NewtonDiagram::from_vertices(V({{3, 0}, {0, 3}})).kill_points().empty());
  EXPECT_TRUE(cusp3.is_below({1, 1}));
  EXPECT_FALSE(cusp3.is_below({3, 1}));
}

TEST(Collide, Tangency) {
  EXPECT_EQ(tangency_degree({false, 0}), 2);
  EXPECT_EQ(tangency_degree({true, 1}), 1);
  EXPECT_EQ(tangency_degree({true, 2}), std::nullopt);
  EXPECT_THROW(tangency_degree({true, 0}), DomainError);
}

TEST(Collide, ValidityBounds) {
  EXPECT_EQ(validity_bound(OmpType{4}, OmpType{2}), 6);
  EXPECT_EQ(validity_bound(CuspType{3}, OmpType{2}), 6);
  EXPECT_EQ(validity_bound(KBranchType{{2, 1}}, OmpType{2}), 6);
  EXPECT_EQ(SingularitySpec(KBranchType{{1, 1, 1}}).determinacy_order(), 3);
}

TEST(SingularitySpec, Parse) {
  EXPECT_EQ(SingularitySpec::parse("omp:4").multiplicity(), 4);
  EXPECT_EQ(SingularitySpec::parse("A1").to_string(), "omp:2");
  EXPECT_EQ(SingularitySpec::parse("x9").to_string(), "omp:4");
  EXPECT_EQ(SingularitySpec::parse("kbranch:1,2").to_string(), "kbranch:2,1");
  EXPECT_EQ(SingularitySpec::parse("diagram:0,5;2,1;3,0").to_string(), "diagram:3,0;2,1;0,5");
  EXPECT_EQ(SingularitySpec::parse("cusp:3").determinacy_order(), 4);
  for (const char* bad : {"omp", "omp:x", "cusp:1", "kbranch:", "kbranch:0,1", "foo:2", "diagram:1,1", "omp:2,"})
    EXPECT_THROW(SingularitySpec::parse(bad), DomainError) << bad;
}
