#include "polyfam/projection.hpp"

#include <algorithm>
#include <cmath>

#include "polyfam/error.hpp"

namespace polyfam {

ProjectionSpec make_projection(const Vec3& direction) {
  if (is_zero(direction)) throw Error(ErrorCode::ZeroVector, "projection direction is zero");
  ExactScalar length;
  if (!exact_sqrt(norm_sq(direction), length))
    throw Error(ErrorCode::InvalidArgument,
                "projection direction " + to_string(direction) + " does not have rational length");
  // Cross with the coordinate axis least aligned with the direction.
  const ExactScalar ax = abs(direction.x), ay = abs(direction.y), az = abs(direction.z);
  Vec3 axis = make_vec(1, 0, 0);
  if (ay < ax && ay <= az)
    axis = make_vec(0, 1, 0);
  else if (az < ax && az < ay)
    axis = make_vec(0, 0, 1);
  ProjectionSpec spec;
  spec.direction = direction;
  spec.basis_u = cross(direction, axis);
  spec.basis_w = cross(direction, spec.basis_u) / length;
  return spec;
}

Vec3 unit_direction(const ExactScalar& s, const ExactScalar& t) {
  const ExactScalar r2 = s * s + t * t;
  const ExactScalar den = 1 + r2;
  return Vec3{2 * s / den, 2 * t / den, (1 - r2) / den};
}

Vec3 rational_unit_near(double x, double y, double z, long resolution) {
  const double len = std::sqrt(x * x + y * y + z * z);
  x /= len;
  y /= len;
  z /= len;
  if (z < 0) {
    x = -x;
    y = -y;
    z = -z;
  }
  auto to_q = [&](double v) {
    ExactScalar r(std::lround(v * static_cast<double>(resolution)), resolution);
    r.canonicalize();
    return r;
  };
  return unit_direction(to_q(x / (1 + z)), to_q(y / (1 + z)));
}

Point2 project(const ProjectionSpec& spec, const Point3& p) {
  return Point2{dot(p, spec.basis_u), dot(p, spec.basis_w)};
}

bool projections_distinct(const ProjectionSpec& spec, const PointSet& points) {
  std::vector<Point2> images;
  images.reserve(points.size());
  for (const auto& p : points.points()) images.push_back(project(spec, p));
  std::sort(images.begin(), images.end(), [](const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  return std::adjacent_find(images.begin(), images.end()) == images.end();
}

bool direction_in_some_plane(const ProjectionSpec& spec, const Family& family) {
  return std::any_of(family.polygons().begin(), family.polygons().end(),
                     [&](const ConvexPlanarPolygon& p) {
                       return sgn(dot(p.plane().normal, spec.direction)) == 0;
                     });
}

}  // namespace polyfam
