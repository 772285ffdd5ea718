#include <gtest/gtest.h>

#include <array>
#include <random>

#include "oracle/generators.hpp"
#include "oracle/triangle_oracle.hpp"
#include "polyfam/error.hpp"
#include "polyfam/geom.hpp"
#include "support.hpp"

using namespace polyfam;
using testing_support::P;
using testing_support::poly;
using testing_support::Q;
using testing_support::R;

namespace {

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

TEST(Orient3d, SignsOfBasicConfigurations) {
  EXPECT_EQ(orient3d(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)), 1);
  EXPECT_EQ(orient3d(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(1, 1, 0)), 0);
  EXPECT_EQ(orient3d(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, -1)), -1);
}

TEST(Orient3d, TinyRationalOffsetsAreExact) {
  const Point3 d = Q("1/3", "1/3", "1/1000000000000000000000");
  EXPECT_EQ(orient3d(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), d), 1);
}

TEST(SupportingPlane, CanonicalForm) {
  const std::array<Point3, 3> xy{P(0, 0, 0), P(1, 0, 0), P(0, 1, 0)};
  const Plane a = supporting_plane(xy);
  EXPECT_EQ(a.normal, P(0, 0, 1));
  EXPECT_EQ(a.offset, R(0));

  const std::array<Point3, 3> diag{P(0, 0, 0), P(2, 2, -1), P(2, 2, 1)};
  const Plane b = supporting_plane(diag);
  EXPECT_EQ(b.normal, P(1, -1, 0));
  EXPECT_EQ(b.offset, R(0));
  for (const auto& p : diag) EXPECT_TRUE(b.contains(p));
}

TEST(SupportingPlane, ScaledInputsGiveEqualPlanes) {
  const std::array<Point3, 3> a{P(0, 0, 2), P(2, 0, 2), P(0, 4, 2)};
  const std::array<Point3, 3> b{Q("1/2", "0", "2"), P(0, 0, 2), Q("0", "1/3", "2")};
  EXPECT_EQ(supporting_plane(a), supporting_plane(b));
  EXPECT_EQ(supporting_plane(a).normal, P(0, 0, 1));
  EXPECT_EQ(supporting_plane(a).offset, R(2));
}

TEST(SupportingPlane, Errors) {
  const std::array<Point3, 3> line{P(0, 0, 0), P(1, 0, 0), P(2, 0, 0)};
  EXPECT_EQ(code_of([&] { supporting_plane(line); }), ErrorCode::Degenerate);
  const std::array<Point3, 4> skew{P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)};
  EXPECT_EQ(code_of([&] { supporting_plane(skew); }), ErrorCode::NotCoplanar);
}

TEST(SegmentIntersection, CrossingDiagonals) {
  const auto s = segment_segment_intersection({P(0, 0, 0), P(1, 1, 0)}, {P(1, 0, 0), P(0, 1, 0)});
  ASSERT_TRUE(std::holds_alternative<PointShape>(s));
  EXPECT_EQ(std::get<PointShape>(s).point, Q("1/2", "1/2", "0"));
}

TEST(SegmentIntersection, CollinearOverlap) {
  const auto s = segment_segment_intersection({P(2, 0, 0), P(0, 0, 0)}, {P(1, 0, 0), P(3, 0, 0)});
  EXPECT_EQ(s, IntersectionShape(SegmentShape{P(1, 0, 0), P(2, 0, 0)}));
}

TEST(SegmentIntersection, ParallelOffsetAndSkew) {
  EXPECT_EQ(dimension(segment_segment_intersection({P(0, 0, 0), P(1, 0, 0)}, {P(0, 0, 1), P(1, 0, 1)})), -1);
  EXPECT_EQ(dimension(segment_segment_intersection({P(0, 0, 0), P(1, 0, 0)}, {P(0, 1, 1), P(0, -1, 1)})), -1);
  EXPECT_EQ(segment_segment_intersection({P(0, 0, 0), P(1, 0, 0)}, {P(1, 0, 0), P(1, 1, 0)}),
            IntersectionShape(PointShape{P(1, 0, 0)}));
}

TEST(ConvexPolygonMake, ValidationErrors) {
  EXPECT_EQ(code_of([] { poly({P(0, 0, 0), P(1, 0, 0)}); }), ErrorCode::TooFewVertices);
  EXPECT_EQ(code_of([] { poly({P(0, 0, 0), P(1, 0, 0), P(0, 0, 0)}); }), ErrorCode::DuplicateVertex);
  EXPECT_EQ(code_of([] { poly({P(0, 0, 0), P(1, 0, 0), P(1, 1, 1), P(0, 1, 0)}); }), ErrorCode::NotCoplanar);
  EXPECT_EQ(code_of([] { poly({P(0, 0, 0), P(1, 0, 0), P(2, 0, 0)}); }), ErrorCode::NotConvex);
  // Reflex vertex and self-intersecting order.
  EXPECT_EQ(code_of([] { poly({P(0, 0, 0), P(4, 0, 0), P(1, 1, 0), P(0, 4, 0)}); }), ErrorCode::NotConvex);
  EXPECT_EQ(code_of([] { poly({P(0, 0, 0), P(1, 1, 0), P(1, 0, 0), P(0, 1, 0)}); }), ErrorCode::NotConvex);
  // Flat vertex.
  EXPECT_EQ(code_of([] { poly({P(0, 0, 0), P(1, 0, 0), P(2, 0, 0), P(2, 2, 0)}); }), ErrorCode::NotConvex);
}

TEST(ConvexPolygonMake, BothOrientationsAccepted) {
  const auto ccw = poly({P(0, 0, 0), P(1, 0, 0), P(1, 1, 0), P(0, 1, 0)});
  const auto cw = poly({P(0, 0, 0), P(0, 1, 0), P(1, 1, 0), P(1, 0, 0)});
  EXPECT_EQ(ccw.plane(), cw.plane());
  EXPECT_EQ(ccw.orientation(), 1);
  EXPECT_EQ(cw.orientation(), -1);
  EXPECT_EQ(ccw.normal(), P(0, 0, 1));
  EXPECT_EQ(cw.normal(), P(0, 0, -1));
}

TEST(PointLocation, Cases) {
  const auto t = poly({P(0, 0, 0), P(3, 0, 0), P(0, 3, 0)});
  EXPECT_EQ(point_polygon_location(P(1, 1, 0), t).kind, Location::Kind::RelativeInterior);
  const Location e = point_polygon_location(Q("3/2", "0", "0"), t);
  EXPECT_EQ(e.kind, Location::Kind::EdgeInterior);
  EXPECT_EQ(e.index, 0u);
  EXPECT_EQ(point_polygon_location(P(1, 1, 1), t).kind, Location::Kind::Outside);
  const Location v = point_polygon_location(P(3, 0, 0), t);
  EXPECT_EQ(v.kind, Location::Kind::Vertex);
  EXPECT_EQ(v.index, 1u);
  EXPECT_EQ(point_polygon_location(P(4, 0, 0), t).kind, Location::Kind::Outside);
}

TEST(PolygonIntersection, SharedEdgeOppositeSides) {
  const auto s = convex_polygon_intersection(poly({P(0, 0, 0), P(1, 0, 0), P(0, 1, 0)}),
                                             poly({P(0, 0, 0), P(1, 0, 0), P(0, -1, 0)}));
  EXPECT_EQ(s, IntersectionShape(SegmentShape{P(0, 0, 0), P(1, 0, 0)}));
}

TEST(PolygonIntersection, TransversalTriangles) {
  const auto s = convex_polygon_intersection(poly({P(0, 0, 0), P(2, 0, 0), P(0, 2, 0)}),
                                             poly({P(0, 0, 0), P(2, 2, -1), P(2, 2, 1)}));
  EXPECT_EQ(s, IntersectionShape(SegmentShape{P(0, 0, 0), P(1, 1, 0)}));
}

TEST(PolygonIntersection, OverlappingCoplanarSquares) {
  const auto s = convex_polygon_intersection(
      poly({P(0, 0, 0), P(1, 0, 0), P(1, 1, 0), P(0, 1, 0)}),
      poly({Q("1/2", "0", "0"), Q("3/2", "0", "0"), Q("3/2", "1", "0"), Q("1/2", "1", "0")}));
  ASSERT_TRUE(std::holds_alternative<RegionShape>(s));
  const auto& r = std::get<RegionShape>(s);
  const std::vector<Point3> expected{Q("1/2", "0", "0"), P(1, 0, 0), P(1, 1, 0), Q("1/2", "1", "0")};
  EXPECT_EQ(r.vertices, expected);
  EXPECT_EQ(r.plane.normal, P(0, 0, 1));
}

TEST(PolygonIntersection, DisjointAndParallel) {
  const auto a = poly({P(0, 0, 0), P(1, 0, 0), P(0, 1, 0)});
  EXPECT_EQ(dimension(convex_polygon_intersection(a, poly({P(0, 0, 1), P(1, 0, 1), P(0, 1, 1)}))), -1);
  EXPECT_EQ(dimension(convex_polygon_intersection(a, poly({P(5, 5, 0), P(6, 5, 0), P(5, 6, 0)}))), -1);
  EXPECT_EQ(convex_polygon_intersection(a, poly({P(0, 0, 0), P(1, 0, 1), P(0, 1, 1)})),
            IntersectionShape(PointShape{P(0, 0, 0)}));
}

TEST(PolygonIntersection, Symmetric) {
  const auto a = poly({P(0, 0, 0), P(2, 0, 0), P(0, 2, 0)});
  const auto b = poly({P(0, 0, 0), P(2, 2, -1), P(2, 2, 1)});
  EXPECT_EQ(convex_polygon_intersection(a, b), convex_polygon_intersection(b, a));
}

TEST(SquaredCosine, Examples) {
  EXPECT_EQ(squared_cosine(P(1, 0, 0), P(0, 1, 0)), (AngleData{R(0), 0}));
  EXPECT_EQ(squared_cosine(P(1, 0, 0), P(1, 1, 0)), (AngleData{R(1, 2), 1}));
  EXPECT_EQ(squared_cosine(P(1, 0, 0), P(-1, 0, 0)), (AngleData{R(1), -1}));
  EXPECT_EQ(code_of([] { squared_cosine(P(0, 0, 0), P(1, 0, 0)); }), ErrorCode::ZeroVector);
}

TEST(PolygonIntersection, DimensionMatchesOracleOnRandomTriangles) {
  std::mt19937_64 rng(11);
  int compared = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const auto pair = oracle::random_triangle_pair(rng);
    ConvexPolygon a, b;
    try {
      a = ConvexPolygon::make({pair[0].begin(), pair[0].end()});
      b = ConvexPolygon::make({pair[1].begin(), pair[1].end()});
    } catch (const Error&) {
      continue;
    }
    const auto shape = convex_polygon_intersection(a, b);
    const auto verdict = oracle::triangle_pair(pair[0], pair[1]);
    ASSERT_EQ(dimension(shape), verdict.dimension) << describe(shape);
    // Every oracle point lies in the computed shape's affine span and vice versa.
    auto vs = shape_vertices(shape);
    std::vector<Point3> both = vs;
    both.insert(both.end(), verdict.points.begin(), verdict.points.end());
    EXPECT_EQ(oracle::affine_dimension(both), verdict.dimension);
    ++compared;
  }
  EXPECT_GT(compared, 1000);
}
