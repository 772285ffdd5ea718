#pragma once

#include <array>
#include <vector>

#include "polyfam/exact.hpp"

namespace oracle {

using polyfam::ExactScalar;
using polyfam::Point3;

struct TrianglePairVerdict {
  int dimension = -1;                // of the intersection, -1 when empty
  std::vector<Point3> points;        // spanning points of the intersection
  std::vector<Point3> shared_vertices;  // lexicographically sorted
  bool bad = false;                  // shared vertex plus contact interior to either triangle
};

// Brute force: every edge of one triangle against the other triangle
// (linear solve, or clipping when the edge lies in its plane), plus every
// vertex of one triangle lying in the other.
TrianglePairVerdict triangle_pair(const std::array<Point3, 3>& a, const std::array<Point3, 3>& b);

// Rank of the point set's affine hull, -1 for no points.
int affine_dimension(const std::vector<Point3>& points);

}  // namespace oracle
