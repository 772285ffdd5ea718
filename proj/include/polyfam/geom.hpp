#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "polyfam/exact.hpp"

namespace polyfam {

// Sign of det(b - a, c - a, d - a).
int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d);

// {p : normal . p == offset}. Always stored canonically: the 4-tuple
// (normal, offset) is scaled to coprime integers with the first nonzero
// normal component positive, so equal planes compare equal.
struct Plane {
  Vec3 normal;
  ExactScalar offset;

  ExactScalar evaluate(const Point3& p) const { return dot(normal, p) - offset; }
  bool contains(const Point3& p) const { return sgn(evaluate(p)) == 0; }

  friend bool operator==(const Plane& a, const Plane& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
};

Plane make_plane(const Vec3& normal, const ExactScalar& offset);

// Throws NotCoplanar or Degenerate (fewer than three affinely independent points).
Plane supporting_plane(std::span<const Point3> points);

struct Segment {
  Point3 a;
  Point3 b;
};

struct EmptyShape {
  friend bool operator==(const EmptyShape&, const EmptyShape&) { return true; }
};

struct PointShape {
  Point3 point;
  friend bool operator==(const PointShape&, const PointShape&) = default;
};

// Endpoints distinct, lexicographically smaller endpoint first.
struct SegmentShape {
  Point3 a;
  Point3 b;
  friend bool operator==(const SegmentShape&, const SegmentShape&) = default;
};

// Strictly convex, counter-clockwise around plane.normal, lexicographically
// least vertex first.
struct RegionShape {
  std::vector<Point3> vertices;
  Plane plane;
  friend bool operator==(const RegionShape&, const RegionShape&) = default;
};

using IntersectionShape = std::variant<EmptyShape, PointShape, SegmentShape, RegionShape>;

// -1 for empty, otherwise the affine dimension of the shape.
int dimension(const IntersectionShape& shape);
// Vertices of the shape (segment endpoints, region corners, ...).
std::vector<Point3> shape_vertices(const IntersectionShape& shape);
std::string describe(const IntersectionShape& shape);

SegmentShape make_segment_shape(const Point3& a, const Point3& b);

IntersectionShape segment_segment_intersection(const Segment& s1, const Segment& s2);

// A strictly convex planar polygon given by its vertex positions in
// counter-clockwise order around normal(). normal() is the canonical plane
// normal or its negation.
class ConvexPolygon {
 public:
  // Validates coplanarity and strict convexity; either orientation of the
  // input order is accepted. Throws TooFewVertices, DuplicateVertex,
  // NotCoplanar or NotConvex.
  static ConvexPolygon make(std::vector<Point3> vertices);

  const std::vector<Point3>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point3& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  const Plane& plane() const { return plane_; }
  const Vec3& normal() const { return normal_; }
  // +1 when the vertex order is counter-clockwise around plane().normal.
  int orientation() const { return orientation_; }

  // Signed area-like value of p against edge i; > 0 strictly inside the
  // edge's half-plane.
  ExactScalar edge_side(std::size_t edge, const Point3& p) const;

 private:
  std::vector<Point3> vertices_;
  Plane plane_;
  Vec3 normal_;
  int orientation_ = 1;
};

struct Location {
  enum class Kind { Outside, Vertex, EdgeInterior, RelativeInterior };
  Kind kind = Kind::Outside;
  std::size_t index = 0;  // vertex or edge index where meaningful

  friend bool operator==(const Location&, const Location&) = default;
};

Location point_polygon_location(const Point3& p, const ConvexPolygon& polygon);

// Exact intersection of the two closed convex hulls.
IntersectionShape convex_polygon_intersection(const ConvexPolygon& p, const ConvexPolygon& q);

// Angle between two vectors as (cos^2, sign of dot product).
struct AngleData {
  ExactScalar squared_cosine;
  int dot_sign = 0;

  friend bool operator==(const AngleData&, const AngleData&) = default;
};

// Throws ZeroVector.
AngleData squared_cosine(const Vec3& u, const Vec3& v);

}  // namespace polyfam
