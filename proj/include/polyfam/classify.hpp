#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "polyfam/model.hpp"

namespace polyfam {

enum class Relation {
  AlmostDisjoint,     // hulls empty or exactly one common vertex
  VertexOrEdge,       // ... or exactly one full common edge
  NoBadIntersection,  // never a common vertex together with an interior point
};

const char* to_string(Relation r);

// Which polygons the contact point has to be interior to for a bad
// intersection. The default reading needs only one of them.
enum class InteriorReading { EitherPolygon, BothPolygons };

struct PairClassification {
  std::vector<std::size_t> shared_vertices;  // sorted point indices
  std::vector<std::pair<std::size_t, std::size_t>> shared_edges;
  std::size_t shared_full_edges = 0;
  IntersectionShape shape;
  bool interior_contact = false;
  bool interior_contact_first = false;   // relative interior of the first polygon
  bool interior_contact_second = false;  // relative interior of the second polygon
  bool shape_is_common_edge = false;
};

// Throws SamePolygon.
PairClassification classify_pair(const ConvexPlanarPolygon& p, const ConvexPlanarPolygon& q,
                                 const PointSet& points);

bool is_almost_disjoint(const PairClassification& cls);
bool is_vertex_or_edge_compatible(const PairClassification& cls);
bool intersects_badly(const PairClassification& cls,
                      InteriorReading reading = InteriorReading::EitherPolygon);
bool satisfies(const PairClassification& cls, Relation relation,
               InteriorReading reading = InteriorReading::EitherPolygon);

std::string describe(const PairClassification& cls);

struct Violation {
  std::size_t first;
  std::size_t second;
  PairClassification classification;
};

struct ViolationReport {
  Relation relation = Relation::NoBadIntersection;
  std::vector<Violation> violating_pairs;  // sorted by (first, second)
  std::size_t checked_pairs = 0;

  bool ok() const { return violating_pairs.empty(); }
};

// Classifies every unordered pair. With threads > 1 pairs are split across
// worker threads; the report is identical to the single-threaded one.
ViolationReport verify_family(const Family& family, Relation relation, unsigned threads = 1,
                              InteriorReading reading = InteriorReading::EitherPolygon);

}  // namespace polyfam
