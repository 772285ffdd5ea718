#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyfam/geom.hpp"

namespace polyfam {

// Pairwise-distinct points; polygons refer to them by index.
class PointSet {
 public:
  PointSet() = default;
  // Throws DuplicatePoint.
  explicit PointSet(std::vector<Point3> points);

  std::size_t size() const { return points_.size(); }
  const Point3& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point3>& points() const { return points_; }

 private:
  std::vector<Point3> points_;
};

struct ConvexPlanarPolygon {
  std::vector<std::size_t> indices;
  ConvexPolygon geometry;

  std::size_t size() const { return indices.size(); }
  const Plane& plane() const { return geometry.plane(); }
};

// Throws IndexOutOfRange, DuplicateVertex, TooFewVertices, NotCoplanar, NotConvex.
ConvexPlanarPolygon validate_polygon(const PointSet& points, std::span<const std::size_t> indices);

// Rotation- and reversal-invariant key of a cyclic index sequence.
std::vector<std::size_t> canonical_cycle(std::span<const std::size_t> indices);

class Family {
 public:
  Family() = default;
  // Validates every polygon and rejects repeated polygons (same cyclic
  // sequence up to rotation and reversal). Throws as validate_polygon, plus
  // DuplicatePolygon, and InvalidArgument when uniform_k is violated.
  static Family build(PointSet points, const std::vector<std::vector<std::size_t>>& polygons,
                      std::optional<std::size_t> uniform_k = std::nullopt);

  const PointSet& point_set() const { return points_; }
  const std::vector<ConvexPlanarPolygon>& polygons() const { return polygons_; }
  const ConvexPlanarPolygon& polygon(std::size_t i) const { return polygons_[i]; }
  std::size_t size() const { return polygons_.size(); }
  std::optional<std::size_t> uniform_k() const { return uniform_k_; }
  std::vector<std::vector<std::size_t>> index_lists() const;

 private:
  PointSet points_;
  std::vector<ConvexPlanarPolygon> polygons_;
  std::optional<std::size_t> uniform_k_;
};

// (c, alpha) with alpha given through its cosine so every test stays rational.
struct FatnessParams {
  ExactScalar c;
  ExactScalar cos_alpha;

  // Throws InvalidArgument unless c >= 1 and 0 < cos_alpha < 1.
  static FatnessParams make(const ExactScalar& c, const ExactScalar& cos_alpha);
  ExactScalar c_sq() const { return c * c; }
};

enum class AlternatingTriple { Even, Odd };  // {0,2,4} and {1,3,5}

struct FatnessReport {
  bool is_fat = false;
  ExactScalar side_ratio_sq_max;
  std::optional<AlternatingTriple> fat_vertex_triple;
  bool even_triple_fat = false;
  bool odd_triple_fat = false;
  std::string failing_condition;
};

// Interior angle at vertex i between the two incident edges. Throws IndexOutOfRange.
AngleData interior_angle_data(const ConvexPolygon& polygon, std::size_t i);

// Throws NotHexagon.
FatnessReport is_fat_hexagon(const ConvexPolygon& hexagon, const FatnessParams& params);
// Same test against squared side-ratio bound c_sq, used when c itself is irrational.
FatnessReport is_fat_hexagon(const ConvexPolygon& hexagon, const ExactScalar& c_sq,
                             const ExactScalar& cos_alpha);

}  // namespace polyfam
