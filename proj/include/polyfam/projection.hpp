#pragma once

#include <vector>

#include "polyfam/model.hpp"

namespace polyfam {

struct Point2 {
  ExactScalar x;
  ExactScalar y;

  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
};

// Orthogonal projection along `direction` onto the plane it is normal to.
// basis_u, basis_w are orthogonal to each other and to the direction, have
// equal length, and (u, w, direction) is right-handed, so image coordinates
// (p . u, p . w) are a similarity image of the true projection.
struct ProjectionSpec {
  Vec3 direction;
  Vec3 basis_u;
  Vec3 basis_w;
};

// Requires |direction| to be rational (e.g. a rational unit vector). Throws
// ZeroVector or InvalidArgument.
ProjectionSpec make_projection(const Vec3& direction);

// Rational unit vector from stereographic parameters:
// (2s, 2t, 1 - s^2 - t^2) / (1 + s^2 + t^2).
Vec3 unit_direction(const ExactScalar& s, const ExactScalar& t);

// Nearby rational unit vector for a floating-point direction; denominators
// of the stereographic parameters are `resolution`.
Vec3 rational_unit_near(double x, double y, double z, long resolution = 4096);

Point2 project(const ProjectionSpec& spec, const Point3& p);

// True iff no two points share an image.
bool projections_distinct(const ProjectionSpec& spec, const PointSet& points);

// True iff the direction is parallel to the plane of some polygon.
bool direction_in_some_plane(const ProjectionSpec& spec, const Family& family);

}  // namespace polyfam
