#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "polyfam/model.hpp"

namespace testing_support {

inline polyfam::Point3 P(long x, long y, long z) { return polyfam::make_vec(x, y, z); }

inline polyfam::Point3 Q(const std::string& x, const std::string& y, const std::string& z) {
  return polyfam::Vec3{polyfam::parse_scalar(x), polyfam::parse_scalar(y), polyfam::parse_scalar(z)};
}

inline polyfam::ExactScalar R(long n, long d = 1) {
  polyfam::ExactScalar r(n, d);
  r.canonicalize();
  return r;
}

inline polyfam::ConvexPolygon poly(std::initializer_list<polyfam::Point3> pts) {
  return polyfam::ConvexPolygon::make(std::vector<polyfam::Point3>(pts));
}

// Points are deduplicated; polygons are given as point lists.
inline polyfam::Family family_of(const std::vector<std::vector<polyfam::Point3>>& polygons) {
  std::vector<polyfam::Point3> pts;
  std::vector<std::vector<std::size_t>> lists;
  for (const auto& pg : polygons) {
    std::vector<std::size_t> idx;
    for (const auto& p : pg) {
      std::size_t i = 0;
      while (i < pts.size() && !(pts[i] == p)) ++i;
      if (i == pts.size()) pts.push_back(p);
      idx.push_back(i);
    }
    lists.push_back(idx);
  }
  return polyfam::Family::build(polyfam::PointSet(pts), lists);
}

}  // namespace testing_support
