#include "polyfam/geom.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>

#include "polyfam/error.hpp"

namespace polyfam {
namespace {

ExactScalar turn(const Point3& a, const Point3& b, const Point3& c, const Vec3& normal) {
  return dot(cross(b - a, c - b), normal);
}

// Parameter interval {t : p0 + t*dir in polygon} for a line lying in the
// polygon's plane.
std::optional<std::pair<ExactScalar, ExactScalar>> clip_line(const ConvexPolygon& poly,
                                                             const Point3& p0,
                                                             const Vec3& dir) {
  std::optional<ExactScalar> lo, hi;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point3& a = poly.vertex(i);
    const Vec3 edge = poly.vertex(i + 1) - a;
    const ExactScalar base = dot(cross(edge, p0 - a), poly.normal());
    const ExactScalar rate = dot(cross(edge, dir), poly.normal());
    if (sgn(rate) == 0) {
      if (sgn(base) < 0) return std::nullopt;
      continue;
    }
    ExactScalar t = -base / rate;
    if (sgn(rate) > 0) {
      if (!lo || t > *lo) lo = t;
    } else {
      if (!hi || t < *hi) hi = t;
    }
  }
  if (!lo || !hi || *lo > *hi) return std::nullopt;
  return std::make_pair(*lo, *hi);
}

IntersectionShape finalize_region(std::vector<Point3> pts, const Plane& plane) {
  std::vector<Point3> ring;
  for (auto& p : pts)
    if (ring.empty() || !(ring.back() == p)) ring.push_back(std::move(p));
  while (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
  if (ring.empty()) return EmptyShape{};
  if (ring.size() == 1) return PointShape{ring.front()};

  const Point3& origin = ring.front();
  const Vec3 axis = ring[1] - origin;
  const bool collinear = std::all_of(ring.begin(), ring.end(), [&](const Point3& p) {
    return is_zero(cross(axis, p - origin));
  });
  if (collinear) {
    auto by_axis = [&](const Point3& l, const Point3& r) {
      return dot(l - origin, axis) < dot(r - origin, axis);
    };
    const auto [mn, mx] = std::minmax_element(ring.begin(), ring.end(), by_axis);
    return make_segment_shape(*mn, *mx);
  }

  bool changed = true;
  while (changed && ring.size() > 3) {
    changed = false;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const std::size_t n = ring.size();
      const Point3& prev = ring[(i + n - 1) % n];
      const Point3& next = ring[(i + 1) % n];
      if (is_zero(cross(ring[i] - prev, next - ring[i]))) {
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  int orientation = 0;
  for (std::size_t i = 0; i < ring.size() && orientation == 0; ++i)
    orientation = sgn(turn(ring[i], ring[(i + 1) % ring.size()],
                           ring[(i + 2) % ring.size()], plane.normal));
  if (orientation < 0) std::reverse(ring.begin(), ring.end());
  const auto least = std::min_element(ring.begin(), ring.end(), lex_less);
  std::rotate(ring.begin(), least, ring.end());
  return RegionShape{std::move(ring), plane};
}

IntersectionShape coplanar_intersection(const ConvexPolygon& p, const ConvexPolygon& q) {
  std::vector<Point3> poly = p.vertices();
  std::vector<Point3> out;
  for (std::size_t e = 0; e < q.size() && !poly.empty(); ++e) {
    out.clear();
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point3& s = poly[i];
      const Point3& t = poly[(i + 1) % n];
      const ExactScalar ss = q.edge_side(e, s);
      const ExactScalar st = q.edge_side(e, t);
      auto crossing = [&] {
        const ExactScalar w = ss / (ss - st);
        return s + w * (t - s);
      };
      if (sgn(st) >= 0) {
        if (sgn(ss) < 0) out.push_back(crossing());
        out.push_back(t);
      } else if (sgn(ss) > 0) {
        out.push_back(crossing());
      }
    }
    poly.swap(out);
  }
  return finalize_region(std::move(poly), p.plane());
}

}  // namespace

int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  return sgn(dot(b - a, cross(c - a, d - a)));
}

Plane make_plane(const Vec3& normal, const ExactScalar& offset) {
  if (is_zero(normal)) throw Error(ErrorCode::ZeroVector, "plane normal is zero");
  const std::array<const ExactScalar*, 4> parts{&normal.x, &normal.y, &normal.z, &offset};
  mpz_class den = 1;
  for (const auto* v : parts) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v->get_den_mpz_t());
  std::array<mpz_class, 4> ints;
  mpz_class g = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    ints[i] = parts[i]->get_num() * (den / parts[i]->get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  int lead = sgn(normal.x) != 0 ? sgn(normal.x) : sgn(normal.y) != 0 ? sgn(normal.y) : sgn(normal.z);
  if (lead < 0) g = -g;
  for (auto& v : ints) v /= g;
  return Plane{Vec3{ExactScalar(ints[0]), ExactScalar(ints[1]), ExactScalar(ints[2])},
               ExactScalar(ints[3])};
}

Plane supporting_plane(std::span<const Point3> points) {
  if (points.size() < 3) throw Error(ErrorCode::Degenerate, "fewer than three points");
  const Point3& p0 = points[0];
  std::size_t i = 1;
  while (i < points.size() && points[i] == p0) ++i;
  if (i == points.size()) throw Error(ErrorCode::Degenerate, "all points coincide");
  const Vec3 u = points[i] - p0;
  Vec3 normal;
  bool found = false;
  for (std::size_t j = i + 1; j < points.size() && !found; ++j) {
    normal = cross(u, points[j] - p0);
    found = !is_zero(normal);
  }
  if (!found) throw Error(ErrorCode::Degenerate, "all points collinear");
  const Plane plane = make_plane(normal, dot(normal, p0));
  for (const auto& p : points)
    if (!plane.contains(p))
      throw Error(ErrorCode::NotCoplanar, "point " + to_string(p) + " is off the plane");
  return plane;
}

int dimension(const IntersectionShape& shape) {
  return static_cast<int>(shape.index()) - 1;
}

std::vector<Point3> shape_vertices(const IntersectionShape& shape) {
  struct Visitor {
    std::vector<Point3> operator()(const EmptyShape&) const { return {}; }
    std::vector<Point3> operator()(const PointShape& s) const { return {s.point}; }
    std::vector<Point3> operator()(const SegmentShape& s) const { return {s.a, s.b}; }
    std::vector<Point3> operator()(const RegionShape& s) const { return s.vertices; }
  };
  return std::visit(Visitor{}, shape);
}

std::string describe(const IntersectionShape& shape) {
  std::ostringstream os;
  switch (dimension(shape)) {
    case -1: os << "Empty"; break;
    case 0: os << "Point " << std::get<PointShape>(shape).point; break;
    case 1: {
      const auto& s = std::get<SegmentShape>(shape);
      os << "Segment " << s.a << " - " << s.b;
      break;
    }
    default: {
      os << "Region [";
      const auto& r = std::get<RegionShape>(shape);
      for (std::size_t i = 0; i < r.vertices.size(); ++i)
        os << (i ? "; " : "") << r.vertices[i];
      os << "]";
    }
  }
  return os.str();
}

SegmentShape make_segment_shape(const Point3& a, const Point3& b) {
  if (lex_less(b, a)) return SegmentShape{b, a};
  return SegmentShape{a, b};
}

IntersectionShape segment_segment_intersection(const Segment& s1, const Segment& s2) {
  const Vec3 d1 = s1.b - s1.a;
  const Vec3 d2 = s2.b - s2.a;
  if (orient3d(s1.a, s1.b, s2.a, s2.b) != 0) return EmptyShape{};
  const Vec3 n = cross(d1, d2);
  const Vec3 w = s2.a - s1.a;
  if (is_zero(n)) {
    if (!is_zero(cross(d1, w))) return EmptyShape{};
    // Collinear: intersect parameter ranges along d1.
    const ExactScalar len = norm_sq(d1);
    ExactScalar t0 = dot(s2.a - s1.a, d1) / len;
    ExactScalar t1 = dot(s2.b - s1.a, d1) / len;
    if (t0 > t1) std::swap(t0, t1);
    const ExactScalar lo = t0 > 0 ? t0 : ExactScalar(0);
    const ExactScalar hi = t1 < 1 ? t1 : ExactScalar(1);
    if (lo > hi) return EmptyShape{};
    if (lo == hi) return PointShape{s1.a + lo * d1};
    return make_segment_shape(s1.a + lo * d1, s1.a + hi * d1);
  }
  const ExactScalar nn = norm_sq(n);
  const ExactScalar t = dot(cross(w, d2), n) / nn;
  const ExactScalar u = dot(cross(w, d1), n) / nn;
  if (sgn(t) < 0 || t > 1 || sgn(u) < 0 || u > 1) return EmptyShape{};
  return PointShape{s1.a + t * d1};
}

ConvexPolygon ConvexPolygon::make(std::vector<Point3> vertices) {
  const std::size_t k = vertices.size();
  if (k < 3) throw Error(ErrorCode::TooFewVertices, "polygon needs at least three vertices");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (vertices[i] == vertices[j])
        throw Error(ErrorCode::DuplicateVertex, "repeated vertex " + to_string(vertices[i]));
  Plane plane;
  try {
    plane = supporting_plane(vertices);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Degenerate)
      throw Error(ErrorCode::NotConvex, "all vertices collinear");
    throw;
  }
  const int orientation = sgn(turn(vertices[0], vertices[1], vertices[2], plane.normal));
  if (orientation == 0)
    throw Error(ErrorCode::NotConvex, "three consecutive vertices are collinear");
  // Strictly convex and counter-clockwise iff every other vertex lies strictly
  // on the inner side of every edge.
  for (std::size_t i = 0; i < k; ++i) {
    const Point3& a = vertices[i];
    const Vec3 edge = vertices[(i + 1) % k] - a;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i || j == (i + 1) % k) continue;
      if (sgn(dot(cross(edge, vertices[j] - a), plane.normal)) != orientation)
        throw Error(ErrorCode::NotConvex, "vertex " + std::to_string(j) +
                                              " is not strictly inside edge " + std::to_string(i));
    }
  }
  ConvexPolygon poly;
  poly.vertices_ = std::move(vertices);
  poly.normal_ = ExactScalar(orientation) * plane.normal;
  poly.plane_ = std::move(plane);
  poly.orientation_ = orientation;
  return poly;
}

ExactScalar ConvexPolygon::edge_side(std::size_t edge, const Point3& p) const {
  const Point3& a = vertex(edge);
  return dot(cross(vertex(edge + 1) - a, p - a), normal_);
}

Location point_polygon_location(const Point3& p, const ConvexPolygon& polygon) {
  if (!polygon.plane().contains(p)) return {};
  for (std::size_t i = 0; i < polygon.size(); ++i)
    if (polygon.vertex(i) == p) return {Location::Kind::Vertex, i};
  std::optional<std::size_t> on_edge;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const int s = sgn(polygon.edge_side(i, p));
    if (s < 0) return {};
    if (s == 0) on_edge = i;
  }
  if (on_edge) return {Location::Kind::EdgeInterior, *on_edge};
  return {Location::Kind::RelativeInterior, 0};
}

IntersectionShape convex_polygon_intersection(const ConvexPolygon& p, const ConvexPolygon& q) {
  if (p.plane() == q.plane()) return coplanar_intersection(p, q);
  const Vec3& n1 = p.plane().normal;
  const Vec3& n2 = q.plane().normal;
  const Vec3 dir = cross(n1, n2);
  if (is_zero(dir)) return EmptyShape{};
  // Point on both planes: (d1 (n2 x dir) + d2 (dir x n1)) / |dir|^2.
  const Point3 p0 = (p.plane().offset * cross(n2, dir) + q.plane().offset * cross(dir, n1)) /
                    norm_sq(dir);
  const auto ip = clip_line(p, p0, dir);
  if (!ip) return EmptyShape{};
  const auto iq = clip_line(q, p0, dir);
  if (!iq) return EmptyShape{};
  const ExactScalar lo = std::max(ip->first, iq->first);
  const ExactScalar hi = std::min(ip->second, iq->second);
  if (lo > hi) return EmptyShape{};
  if (lo == hi) return PointShape{p0 + lo * dir};
  return make_segment_shape(p0 + lo * dir, p0 + hi * dir);
}

AngleData squared_cosine(const Vec3& u, const Vec3& v) {
  if (is_zero(u) || is_zero(v)) throw Error(ErrorCode::ZeroVector, "angle with a zero vector");
  const ExactScalar d = dot(u, v);
  return AngleData{d * d / (norm_sq(u) * norm_sq(v)), sgn(d)};
}

}  // namespace polyfam
