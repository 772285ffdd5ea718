#include "polyfam/classify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <thread>

#include "polyfam/error.hpp"

namespace polyfam {
namespace {

std::set<std::pair<std::size_t, std::size_t>> edge_set(const ConvexPlanarPolygon& p) {
  std::set<std::pair<std::size_t, std::size_t>> edges;
  const std::size_t k = p.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t a = p.indices[i];
    const std::size_t b = p.indices[(i + 1) % k];
    edges.emplace(std::min(a, b), std::max(a, b));
  }
  return edges;
}

bool in_relative_interior(const Point3& x, const ConvexPolygon& poly) {
  return point_polygon_location(x, poly).kind == Location::Kind::RelativeInterior;
}

// Points whose locations decide interior contact. The hull intersection is
// convex, so if it meets a relative interior at all it does so at one of
// these: the shape itself for a point, the endpoints and midpoint of a
// segment, the corners and vertex centroid of a region.
std::vector<Point3> contact_witnesses(const IntersectionShape& shape) {
  std::vector<Point3> pts = shape_vertices(shape);
  if (pts.size() >= 2) {
    Point3 centroid = make_vec(0, 0, 0);
    for (const auto& p : pts) centroid = centroid + p;
    pts.push_back(centroid / ExactScalar(static_cast<long>(pts.size())));
  }
  return pts;
}

}  // namespace

const char* to_string(Relation r) {
  switch (r) {
    case Relation::AlmostDisjoint: return "almost-disjoint";
    case Relation::VertexOrEdge: return "vertex-or-edge";
    case Relation::NoBadIntersection: return "no-bad";
  }
  return "unknown";
}

PairClassification classify_pair(const ConvexPlanarPolygon& p, const ConvexPlanarPolygon& q,
                                 const PointSet& points) {
  if (canonical_cycle(p.indices) == canonical_cycle(q.indices))
    throw Error(ErrorCode::SamePolygon, "cannot classify a polygon against itself");
  PairClassification cls;

  std::vector<std::size_t> a = p.indices, b = q.indices;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(cls.shared_vertices));

  const auto ep = edge_set(p);
  const auto eq = edge_set(q);
  std::set_intersection(ep.begin(), ep.end(), eq.begin(), eq.end(),
                        std::back_inserter(cls.shared_edges));
  cls.shared_full_edges = cls.shared_edges.size();

  cls.shape = convex_polygon_intersection(p.geometry, q.geometry);
  for (const auto& x : contact_witnesses(cls.shape)) {
    cls.interior_contact_first = cls.interior_contact_first || in_relative_interior(x, p.geometry);
    cls.interior_contact_second = cls.interior_contact_second || in_relative_interior(x, q.geometry);
  }
  cls.interior_contact = cls.interior_contact_first || cls.interior_contact_second;

  if (const auto* seg = std::get_if<SegmentShape>(&cls.shape)) {
    for (const auto& [u, v] : cls.shared_edges) {
      if (make_segment_shape(points[u], points[v]) == *seg) cls.shape_is_common_edge = true;
    }
  }
  return cls;
}

bool is_almost_disjoint(const PairClassification& cls) {
  if (std::holds_alternative<EmptyShape>(cls.shape)) return true;
  // A shared vertex always lies in the intersection, so a single-point
  // intersection with exactly one shared vertex is that vertex.
  return std::holds_alternative<PointShape>(cls.shape) && cls.shared_vertices.size() == 1;
}

bool is_vertex_or_edge_compatible(const PairClassification& cls) {
  return is_almost_disjoint(cls) || cls.shape_is_common_edge;
}

bool intersects_badly(const PairClassification& cls, InteriorReading reading) {
  if (cls.shared_vertices.empty()) return false;
  if (reading == InteriorReading::BothPolygons)
    return cls.interior_contact_first && cls.interior_contact_second;
  return cls.interior_contact;
}

bool satisfies(const PairClassification& cls, Relation relation, InteriorReading reading) {
  switch (relation) {
    case Relation::AlmostDisjoint: return is_almost_disjoint(cls);
    case Relation::VertexOrEdge: return is_vertex_or_edge_compatible(cls);
    case Relation::NoBadIntersection: return !intersects_badly(cls, reading);
  }
  return false;
}

std::string describe(const PairClassification& cls) {
  std::ostringstream os;
  os << "shared_vertices=[";
  for (std::size_t i = 0; i < cls.shared_vertices.size(); ++i)
    os << (i ? "," : "") << cls.shared_vertices[i];
  os << "] shared_full_edges=" << cls.shared_full_edges << " shape=" << describe(cls.shape)
     << " interior_contact=" << (cls.interior_contact ? "true" : "false");
  return os.str();
}

ViolationReport verify_family(const Family& family, Relation relation, unsigned threads,
                              InteriorReading reading) {
  const std::size_t n = family.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(pairs.size() / 64 + 1)));
  std::vector<std::vector<Violation>> found(threads);
  auto work = [&](unsigned worker) {
    for (std::size_t t = worker; t < pairs.size(); t += threads) {
      const auto [i, j] = pairs[t];
      PairClassification cls = classify_pair(family.polygon(i), family.polygon(j), family.point_set());
      if (!satisfies(cls, relation, reading)) found[worker].push_back({i, j, std::move(cls)});
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }

  ViolationReport report;
  report.relation = relation;
  report.checked_pairs = pairs.size();
  for (auto& chunk : found)
    for (auto& v : chunk) report.violating_pairs.push_back(std::move(v));
  std::sort(report.violating_pairs.begin(), report.violating_pairs.end(),
            [](const Violation& l, const Violation& r) {
              return std::tie(l.first, l.second) < std::tie(r.first, r.second);
            });
  return report;
}

}  // namespace polyfam
