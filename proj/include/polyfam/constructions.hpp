#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polyfam/model.hpp"

namespace polyfam {

// m distinct rational points on the unit circle in z = 0, from
// t -> ((1 - t^2) / (1 + t^2), 2t / (1 + t^2), 0), sorted by angle.
// Seed 0 takes the m lowest-height rationals 0, 1, -1, 2, -2, 1/2, ...;
// any other seed draws small random rationals.
std::vector<Point3> rational_circle_points(std::size_t m, std::uint64_t seed = 0);

// m circle points followed by the axis points (0, 0, j), j = 0..m; one
// triangle per circle point and consecutive axis pair. Throws InvalidArgument for m = 0.
Family christmas_tree(std::size_t m);

// m random base points in z = 0 with no three collinear, their translates
// by v, and the C(m, 2) parallelograms P_i, P_j, P_j + v, P_i + v.
// Throws InvalidArgument for m < 2 and BadTranslation when v.z == 0.
Family prism_quadrilaterals(std::size_t m, std::uint64_t seed, const Vec3& v);

struct StackOptions {
  // Negative control: every hexagon flat in z = 0 and translated apart.
  bool coplanar_disjoint = false;
};

// Groups of three fat hexagons hinged around a shared triangle so that each
// group carries one rainbow triangle and one badly intersecting pair; a
// remainder of count % 3 hexagons forms a partial group. Vertex order of
// every hexagon is B, C, D, E, F, A, i.e. the fat triple sits at {0, 2, 4}.
// Throws InfeasibleParams when count < 3 or a hexagon fails the fatness test.
Family fat_hexagon_stack(std::size_t count, const FatnessParams& params, std::uint64_t seed = 0,
                         StackOptions options = {});

}  // namespace polyfam
