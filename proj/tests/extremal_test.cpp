#include <gtest/gtest.h>

#include <random>

#include "oracle/generators.hpp"
#include "oracle/triangle_oracle.hpp"
#include "polyfam/classify.hpp"
#include "polyfam/error.hpp"
#include "polyfam/extremal.hpp"
#include "support.hpp"

using namespace polyfam;
using testing_support::P;

namespace {

PointSet tetrahedron() { return PointSet({P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)}); }

PointSet octahedron() {
  return PointSet({P(1, 0, 0), P(-1, 0, 0), P(0, 1, 0), P(0, -1, 0), P(0, 0, 1), P(0, 0, -1)});
}

SearchResult run(const PointSet& pts, Relation rel, std::size_t k = 3, unsigned threads = 1) {
  SearchProblem p;
  p.point_set = pts;
  p.k = k;
  p.relation = rel;
  p.threads = threads;
  return max_family(p);
}

bool oracle_compatible(const oracle::TrianglePairVerdict& v, Relation rel) {
  const bool r1 = v.dimension == -1 || (v.dimension == 0 && v.shared_vertices.size() == 1 &&
                                        v.points[0] == v.shared_vertices[0]);
  switch (rel) {
    case Relation::AlmostDisjoint:
      return r1;
    case Relation::VertexOrEdge:
      return r1 || (v.dimension == 1 && v.shared_vertices.size() == 2);
    case Relation::NoBadIntersection:
      return !v.bad;
  }
  return false;
}

// Exhaustive maximum over all subsets of non-degenerate triangles.
std::size_t brute_force_max(const std::vector<Point3>& pts, Relation rel) {
  std::vector<std::array<Point3, 3>> tris;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      for (std::size_t c = b + 1; c < pts.size(); ++c)
        if (oracle::affine_dimension({pts[a], pts[b], pts[c]}) == 2) tris.push_back({pts[a], pts[b], pts[c]});
  const std::size_t m = tris.size();
  std::vector<std::uint32_t> adj(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    adj[i] |= 1u << i;
    for (std::size_t j = i + 1; j < m; ++j)
      if (oracle_compatible(oracle::triangle_pair(tris[i], tris[j]), rel)) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
      }
  }
  std::size_t best = 0;
  for (std::uint32_t s = 1; s < (1u << m); ++s) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(s));
    if (size <= best) continue;
    bool clique = true;
    for (std::size_t i = 0; i < m && clique; ++i)
      if ((s >> i & 1u) && (adj[i] & s) != s) clique = false;
    if (clique) best = size;
  }
  return best;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(EnumerateCandidates, Tetrahedron) {
  const auto c = enumerate_candidate_kgons(tetrahedron(), 3);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c[0].indices[0], 0u);
  EXPECT_EQ(c[3].indices[0], 3u);
  EXPECT_TRUE(enumerate_candidate_kgons(tetrahedron(), 4).empty());
}

TEST(EnumerateCandidates, SquarePyramid) {
  const PointSet pts({P(0, 0, 0), P(2, 0, 0), P(2, 2, 0), P(0, 2, 0), P(1, 1, 3)});
  EXPECT_EQ(enumerate_candidate_kgons(pts, 3).size(), 10u);
  const auto quads = enumerate_candidate_kgons(pts, 4);
  ASSERT_EQ(quads.size(), 1u);
  EXPECT_EQ(quads[0].indices, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(EnumerateCandidates, SkipsCollinearAndNonConvex) {
  const PointSet pts({P(0, 0, 0), P(1, 0, 0), P(2, 0, 0), P(0, 1, 0), P(1, 1, 5)});
  EXPECT_EQ(enumerate_candidate_kgons(pts, 3).size(), 9u);
  // Points 0, 1, 2 are collinear, so no quadrilateral uses all three.
  const PointSet dart({P(0, 0, 0), P(4, 0, 0), P(0, 4, 0), P(1, 1, 0)});
  EXPECT_TRUE(enumerate_candidate_kgons(dart, 4).empty());
  EXPECT_EQ(code_of([] { enumerate_candidate_kgons(tetrahedron(), 2); }), ErrorCode::InvalidArgument);
}

TEST(MaxFamily, TetrahedronFaces) {
  EXPECT_EQ(run(tetrahedron(), Relation::AlmostDisjoint).max_size, 1u);
  EXPECT_EQ(run(tetrahedron(), Relation::VertexOrEdge).max_size, 4u);
  const auto r3 = run(tetrahedron(), Relation::NoBadIntersection);
  EXPECT_EQ(r3.max_size, 4u);
  EXPECT_TRUE(r3.exhausted);
  EXPECT_EQ(r3.candidates_count, 4u);
  EXPECT_EQ(r3.n, 4u);
}

TEST(MaxFamily, WitnessSatisfiesRelation) {
  for (Relation rel : {Relation::AlmostDisjoint, Relation::VertexOrEdge, Relation::NoBadIntersection}) {
    const auto r = run(octahedron(), rel);
    EXPECT_TRUE(r.exhausted);
    EXPECT_EQ(r.witness_family.size(), r.max_size);
    EXPECT_TRUE(verify_family(r.witness_family, rel).ok()) << to_string(rel);
    EXPECT_NO_THROW(check_paper_bounds(r));
  }
}

TEST(MaxFamily, AgreesWithBruteForce) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = trial < 6 ? 5 : 6;
    std::vector<Point3> pts;
    while (pts.size() < n) {
      const Point3 p = oracle::random_point(rng, trial % 2 == 0 ? 1 : 3);
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    for (Relation rel : {Relation::AlmostDisjoint, Relation::VertexOrEdge, Relation::NoBadIntersection}) {
      const auto r = run(PointSet(pts), rel);
      EXPECT_TRUE(r.exhausted);
      EXPECT_EQ(r.max_size, brute_force_max(pts, rel)) << "trial " << trial << " " << to_string(rel);
    }
  }
}

TEST(MaxFamily, ThreadCountDoesNotChangeResult) {
  const auto one = run(octahedron(), Relation::NoBadIntersection, 3, 1);
  const auto four = run(octahedron(), Relation::NoBadIntersection, 3, 4);
  EXPECT_EQ(one.max_size, four.max_size);
  EXPECT_EQ(one.witness_candidates, four.witness_candidates);
  EXPECT_EQ(one.nodes_explored, four.nodes_explored);
}

TEST(MaxFamily, WitnessIsLexicographicallyLeast) {
  const auto r = run(tetrahedron(), Relation::AlmostDisjoint);
  EXPECT_EQ(r.witness_candidates, (std::vector<std::size_t>{0}));
}

TEST(MaxFamily, NodeBudgetStopsEarly) {
  SearchProblem p;
  p.point_set = octahedron();
  p.relation = Relation::NoBadIntersection;
  p.limits.node_budget = 3;
  const auto r = max_family(p);
  EXPECT_FALSE(r.exhausted);
  EXPECT_GE(r.max_size, 1u);
  EXPECT_TRUE(verify_family(r.witness_family, p.relation).ok());
}

TEST(MaxFamily, RejectsBadProblems) {
  SearchProblem p;
  p.point_set = tetrahedron();
  p.k = 2;
  EXPECT_EQ(code_of([&] { max_family(p); }), ErrorCode::InvalidArgument);
  p.k = 3;
  p.max_points = 3;
  EXPECT_EQ(code_of([&] { max_family(p); }), ErrorCode::InvalidArgument);
}

TEST(PaperBounds, AlmostDisjointTriangles) {
  SearchResult r;
  r.relation = Relation::AlmostDisjoint;
  r.k = 3;
  r.n = 6;
  r.max_size = 4;
  r.exhausted = true;
  const auto b = check_paper_bounds(r);
  EXPECT_TRUE(b.applicable);
  EXPECT_EQ(b.bound, 5);
  EXPECT_EQ(b.slack, 1);
  r.max_size = 6;
  EXPECT_EQ(code_of([&] { check_paper_bounds(r); }), ErrorCode::BoundViolation);
}

TEST(PaperBounds, VertexOrEdgeTriangles) {
  SearchResult r;
  r.relation = Relation::VertexOrEdge;
  r.k = 3;
  r.n = 4;
  r.max_size = 4;
  EXPECT_EQ(check_paper_bounds(r).slack, 0);
  r.n = 3;
  r.max_size = 1;
  EXPECT_FALSE(check_paper_bounds(r).applicable);
  r.k = 4;
  r.n = 8;
  EXPECT_FALSE(check_paper_bounds(r).applicable);
}

TEST(PaperBounds, NoBadRelation) {
  SearchResult r;
  r.relation = Relation::NoBadIntersection;
  r.k = 5;
  r.n = 3;
  r.max_size = 8;
  EXPECT_EQ(check_paper_bounds(r).bound, 8);
  r.max_size = 9;
  EXPECT_EQ(code_of([&] { check_paper_bounds(r); }), ErrorCode::BoundViolation);
}
