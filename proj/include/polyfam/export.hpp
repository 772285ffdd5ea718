#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "polyfam/model.hpp"

namespace polyfam {

// Wavefront OBJ: a comment stating the precision, one 'v' line per point,
// one 'f' line per polygon (1-based).
std::string export_obj(const Family& family, int significant_digits = 12);

struct SvgOptions {
  std::optional<Vec3> direction;  // empty: a generic direction is chosen
  std::uint64_t seed = 1;
  double width = 800;
};

// Parallel projection along the direction, polygons filled translucent with
// dotted vertices. Throws InvalidArgument when the direction is parallel to
// a polygon's plane, ZeroVector for a zero direction.
std::string export_svg(const Family& family, const SvgOptions& options = {});

}  // namespace polyfam
