#include "polyfam/constructions.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>

#include "polyfam/error.hpp"

namespace polyfam {
namespace {

ExactScalar q(long num, long den = 1) {
  ExactScalar r(num, den);
  r.canonicalize();
  return r;
}

// 0, 1, -1, 2, -2, 1/2, -1/2, 3, -3, 3/2, -3/2, 2/3, -2/3, 1/3, -1/3, ...
std::vector<ExactScalar> low_height_rationals(std::size_t m) {
  std::vector<ExactScalar> out{ExactScalar(0)};
  for (long h = 1; out.size() < m; ++h) {
    std::vector<ExactScalar> level;
    for (long den = 1; den <= h; ++den)
      if (std::gcd(h, den) == 1) level.push_back(q(h, den));
    for (long num = h - 1; num >= 1; --num)
      if (std::gcd(num, h) == 1) level.push_back(q(num, h));
    std::sort(level.begin(), level.end(), std::greater<>());
    for (const auto& t : level) {
      out.push_back(t);
      out.push_back(-t);
    }
  }
  out.resize(m);
  return out;
}

struct PythagoreanRotation {
  long a, b, c;  // cos = a / c, sin = b / c
};

constexpr std::array<PythagoreanRotation, 8> kRotations{{
    {20, 21, 29}, {3, 4, 5}, {5, 12, 13}, {8, 15, 17},
    {7, 24, 25}, {12, 35, 37}, {9, 40, 41}, {28, 45, 53},
}};

struct Point2 {
  ExactScalar x, y;
};

}  // namespace

std::vector<Point3> rational_circle_points(std::size_t m, std::uint64_t seed) {
  std::vector<ExactScalar> params;
  if (seed == 0) {
    params = low_height_rationals(m);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-24, 24), den(1, 12);
    std::set<ExactScalar> seen;
    while (params.size() < m) {
      ExactScalar t = q(num(rng), den(rng));
      if (seen.insert(t).second) params.push_back(t);
    }
  }
  // 2 atan(t) is increasing in t, so sorting t sorts by angle.
  std::sort(params.begin(), params.end());
  std::vector<Point3> out;
  out.reserve(m);
  for (const auto& t : params) {
    const ExactScalar t2 = t * t;
    const ExactScalar den = 1 + t2;
    out.push_back(Vec3{(1 - t2) / den, 2 * t / den, ExactScalar(0)});
  }
  return out;
}

Family christmas_tree(std::size_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "christmas tree needs m >= 1");
  std::vector<Point3> pts = rational_circle_points(m);
  for (std::size_t j = 0; j <= m; ++j)
    pts.push_back(Vec3{ExactScalar(0), ExactScalar(0), ExactScalar(static_cast<long>(j))});
  std::vector<std::vector<std::size_t>> triangles;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) triangles.push_back({i, m + j, m + j + 1});
  return Family::build(PointSet(std::move(pts)), triangles, 3);
}

Family prism_quadrilaterals(std::size_t m, std::uint64_t seed, const Vec3& v) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "prism construction needs m >= 2");
  if (sgn(v.z) == 0)
    throw Error(ErrorCode::BadTranslation, "translation " + to_string(v) + " is parallel to z = 0");
  std::mt19937_64 rng(seed);
  const long range = 4 * static_cast<long>(m) + 8;
  std::uniform_int_distribution<long> coord(-range, range);
  std::vector<Point3> base;
  while (base.size() < m) {
    Point3 p = make_vec(coord(rng), coord(rng), 0);
    bool ok = std::none_of(base.begin(), base.end(), [&](const Point3& b) { return b == p; });
    for (std::size_t i = 0; ok && i < base.size(); ++i)
      for (std::size_t j = i + 1; ok && j < base.size(); ++j)
        ok = !is_zero(cross(base[j] - base[i], p - base[i]));
    if (ok) base.push_back(std::move(p));
  }
  std::vector<Point3> pts = base;
  for (const auto& p : base) pts.push_back(p + v);
  std::vector<std::vector<std::size_t>> quads;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) quads.push_back({i, j, m + j, m + i});
  return Family::build(PointSet(std::move(pts)), quads, 4);
}

Family fat_hexagon_stack(std::size_t count, const FatnessParams& params, std::uint64_t seed,
                         StackOptions options) {
  if (count < 3) throw Error(ErrorCode::InfeasibleParams, "hexagon stack needs count >= 3");

  // Template hexagon around the triangle A, C, E; each bump is the apex of a
  // right isosceles triangle on a side, so B, D, F have 90 degree angles.
  const Point2 a{q(0), q(0)}, c{q(8), q(0)}, e{q(4), q(7)};
  const Point2 b{q(4), q(-4)}, d{q(19, 2), q(11, 2)}, f{q(-3, 2), q(11, 2)};
  // Vertex order B, C, D, E, F, A.
  const std::array<Point2, 6> hexagon{b, c, d, e, f, a};

  // Barycentric coordinates with respect to (A, C, E).
  const ExactScalar area2 = (c.x - a.x) * (e.y - a.y) - (c.y - a.y) * (e.x - a.x);
  auto bary = [&](const Point2& p) {
    const ExactScalar lc = ((p.x - a.x) * (e.y - a.y) - (p.y - a.y) * (e.x - a.x)) / area2;
    const ExactScalar le = ((c.x - a.x) * (p.y - a.y) - (c.y - a.y) * (p.x - a.x)) / area2;
    return std::array<ExactScalar, 3>{1 - lc - le, lc, le};  // (A, C, E)
  };

  // Each group of three gets its own rotation about the z-axis.
  auto place = [&](const Point2& p, std::size_t group, const ExactScalar& shift, const ExactScalar& z) {
    const auto& rot = kRotations[(seed + group) % kRotations.size()];
    const ExactScalar cs = q(rot.a, rot.c), sn = q(rot.b, rot.c);
    const ExactScalar x = p.x + shift;
    return Vec3{cs * x - sn * p.y, sn * x + cs * p.y, z};
  };

  const ExactScalar lift(1, 64);
  std::vector<Point3> pts;
  std::vector<std::vector<std::size_t>> polys;
  auto add_point = [&](Point3 p) {
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (pts[i] == p) return i;
    pts.push_back(std::move(p));
    return pts.size() - 1;
  };

  for (std::size_t h = 0; h < count; ++h) {
    const std::size_t group = h / 3;
    const std::size_t role = h % 3;
    std::vector<std::size_t> poly;
    for (const auto& v : hexagon) {
      if (options.coplanar_disjoint) {
        poly.push_back(add_point(place(v, 0, ExactScalar(static_cast<long>(20 * h)), ExactScalar(0))));
        continue;
      }
      // Role 0 hinges on AE and lifts C, role 1 hinges on AC and lifts E,
      // role 2 hinges on CE and lowers A; roles 0 and 1 end up on the same
      // side of the shared triangle.
      const auto w = bary(v);
      const ExactScalar z = role == 0 ? ExactScalar(lift * w[1]) : role == 1 ? ExactScalar(lift * w[2]) : ExactScalar(-lift * w[0]);
      poly.push_back(add_point(place(v, group, ExactScalar(static_cast<long>(30 * group)), z)));
    }
    polys.push_back(std::move(poly));
  }

  Family family = Family::build(PointSet(std::move(pts)), polys, 6);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto report = is_fat_hexagon(family.polygon(i).geometry, params);
    if (!report.is_fat)
      throw Error(ErrorCode::InfeasibleParams,
                  "stack hexagon " + std::to_string(i) + " is not fat: " + report.failing_condition);
  }
  return family;
}

}  // namespace polyfam
