#include <gtest/gtest.h>

#include "polyfam/error.hpp"
#include "polyfam/model.hpp"
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

PointSet square_points() { return PointSet({P(0, 0, 0), P(1, 0, 0), P(1, 1, 0), P(0, 1, 0), P(1, 1, 1)}); }

// Regular hexagon in the plane x + y + z = 0.
ConvexPolygon regular_hexagon() {
  return poly({P(1, -1, 0), P(1, 0, -1), P(0, 1, -1), P(-1, 1, 0), P(-1, 0, 1), P(0, -1, 1)});
}

ConvexPolygon near_regular_hexagon() {
  // Angles between 108 and 135 degrees, the even triple at most 117.
  return poly({P(4, 0, 0), P(2, 4, 0), P(-2, 4, 0), P(-4, 0, 0), P(-3, -3, 0), P(1, -3, 0)});
}

}  // namespace

TEST(PointSet, RejectsDuplicates) {
  EXPECT_EQ(code_of([] { PointSet({P(0, 0, 0), P(1, 0, 0), Q("2/2", "0", "0")}); }), ErrorCode::DuplicatePoint);
  EXPECT_EQ(PointSet({P(0, 0, 0), P(1, 0, 0)}).size(), 2u);
}

TEST(ValidatePolygon, SquareIsValid) {
  const PointSet pts = square_points();
  const std::vector<std::size_t> idx{0, 1, 2, 3};
  const auto p = validate_polygon(pts, idx);
  EXPECT_EQ(p.size(), 4u);
  EXPECT_EQ(p.plane().normal, P(0, 0, 1));
  EXPECT_EQ(p.plane().offset, R(0));
}

TEST(ValidatePolygon, Errors) {
  const PointSet pts = square_points();
  EXPECT_EQ(code_of([&] { validate_polygon(pts, std::vector<std::size_t>{0, 1, 4, 3}); }), ErrorCode::NotCoplanar);
  EXPECT_EQ(code_of([&] { validate_polygon(pts, std::vector<std::size_t>{0, 1, 9}); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([&] { validate_polygon(pts, std::vector<std::size_t>{0, 1, 1}); }), ErrorCode::DuplicateVertex);
  EXPECT_EQ(code_of([&] { validate_polygon(pts, std::vector<std::size_t>{0, 1}); }), ErrorCode::TooFewVertices);
  const PointSet line({P(0, 0, 0), P(1, 0, 0), P(2, 0, 0)});
  EXPECT_EQ(code_of([&] { validate_polygon(line, std::vector<std::size_t>{0, 1, 2}); }), ErrorCode::NotConvex);
}

TEST(CanonicalCycle, RotationAndReversalInvariant) {
  const std::vector<std::size_t> a{3, 1, 4, 2}, b{4, 2, 3, 1}, c{2, 4, 1, 3};
  EXPECT_EQ(canonical_cycle(a), canonical_cycle(b));
  EXPECT_EQ(canonical_cycle(a), canonical_cycle(c));
  EXPECT_EQ(canonical_cycle(a).front(), 1u);
}

TEST(Family, BuildAndDuplicates) {
  const PointSet pts = square_points();
  const Family f = Family::build(pts, {{0, 1, 2}, {0, 2, 3}});
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.index_lists(), (std::vector<std::vector<std::size_t>>{{0, 1, 2}, {0, 2, 3}}));
  EXPECT_EQ(code_of([&] { Family::build(pts, {{0, 1, 2}, {2, 1, 0}}); }), ErrorCode::DuplicatePolygon);
  EXPECT_EQ(code_of([&] { Family::build(pts, {{0, 1, 2}, {0, 1, 2, 3}}, 3); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(Family::build(pts, {{0, 1, 2}}, 3).uniform_k(), std::optional<std::size_t>(3));
}

TEST(FatnessParams, Validation) {
  EXPECT_NO_THROW(FatnessParams::make(R(1), R(1, 2)));
  EXPECT_EQ(code_of([] { FatnessParams::make(R(1, 2), R(1, 2)); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { FatnessParams::make(R(2), R(0)); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { FatnessParams::make(R(2), R(1)); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(FatnessParams::make(R(3, 2), R(1, 2)).c_sq(), R(9, 4));
}

TEST(InteriorAngle, Examples) {
  const auto sq = poly({P(0, 0, 0), P(1, 0, 0), P(1, 1, 0), P(0, 1, 0)});
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(interior_angle_data(sq, i), (AngleData{R(0), 0}));
  const auto hex = regular_hexagon();
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(interior_angle_data(hex, i), (AngleData{R(1, 4), -1}));
  const auto tri = poly({P(0, 0, 0), P(1, 0, 0), P(0, 1, 0)});
  EXPECT_EQ(interior_angle_data(tri, 0), (AngleData{R(0), 0}));
  EXPECT_EQ(interior_angle_data(tri, 1), (AngleData{R(1, 2), 1}));
}

TEST(FatHexagon, NearRegularIsFat) {
  const auto params = FatnessParams::make(R(2), R(1, 2));
  const auto r = is_fat_hexagon(near_regular_hexagon(), params);
  EXPECT_TRUE(r.is_fat);
  EXPECT_EQ(r.side_ratio_sq_max, R(2));
  EXPECT_TRUE(r.even_triple_fat);
  EXPECT_FALSE(r.odd_triple_fat);
  EXPECT_EQ(r.fat_vertex_triple, AlternatingTriple::Even);
}

TEST(FatHexagon, RegularHexagonBothTriplesOnTheBoundary) {
  const auto r = is_fat_hexagon(regular_hexagon(), FatnessParams::make(R(1), R(1, 2)));
  EXPECT_TRUE(r.is_fat);
  EXPECT_TRUE(r.even_triple_fat);
  EXPECT_TRUE(r.odd_triple_fat);
  EXPECT_EQ(r.side_ratio_sq_max, R(1));
  EXPECT_EQ(r.fat_vertex_triple, AlternatingTriple::Even);
}

TEST(FatHexagon, LongSideFailsRatio) {
  const auto h = poly({P(0, 0, 0), P(10, 0, 0), P(11, 1, 0), P(11, 2, 0), P(10, 3, 0), P(0, 3, 0)});
  const auto r = is_fat_hexagon(h, FatnessParams::make(R(2), R(1, 2)));
  EXPECT_FALSE(r.is_fat);
  EXPECT_EQ(r.side_ratio_sq_max, R(100));
  EXPECT_NE(r.failing_condition.find("side ratio"), std::string::npos);
}

TEST(FatHexagon, NearlyFlatVertexInBothTriples) {
  const auto h = poly({P(0, 0, 0), Q("5", "-1/50", "0"), P(10, 0, 0), P(10, 10, 0), Q("5", "501/50", "0"),
                       P(0, 10, 0)});
  const auto r = is_fat_hexagon(h, FatnessParams::make(R(2), R(1, 2)));
  EXPECT_FALSE(r.is_fat);
  EXPECT_FALSE(r.even_triple_fat);
  EXPECT_FALSE(r.odd_triple_fat);
  EXPECT_LE(r.side_ratio_sq_max, R(4));
  EXPECT_NE(r.failing_condition.find("alternating"), std::string::npos);
}

TEST(FatHexagon, OnlyOneTripleQualifies) {
  // Right angles at 0, 2, 4; 150 degree-ish angles at the others.
  const auto h = poly({P(4, -4, 0), P(8, 0, 0), Q("19/2", "11/2", "0"), P(4, 7, 0), Q("-3/2", "11/2", "0"),
                       P(0, 0, 0)});
  const auto r = is_fat_hexagon(h, FatnessParams::make(R(2), R(1, 2)));
  EXPECT_TRUE(r.is_fat);
  EXPECT_TRUE(r.even_triple_fat);
  EXPECT_FALSE(r.odd_triple_fat);
  EXPECT_EQ(r.fat_vertex_triple, AlternatingTriple::Even);
}

TEST(FatHexagon, RequiresSixVertices) {
  EXPECT_EQ(code_of([] {
              is_fat_hexagon(poly({P(0, 0, 0), P(1, 0, 0), P(0, 1, 0)}), FatnessParams::make(R(2), R(1, 2)));
            }),
            ErrorCode::NotHexagon);
}
