#include "polyfam/model.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "polyfam/error.hpp"

namespace polyfam {
namespace {

struct PointLess {
  bool operator()(const Point3& a, const Point3& b) const { return lex_less(a, b); }
};

bool angle_within(const AngleData& angle, const ExactScalar& cos_alpha_sq) {
  return angle.squared_cosine <= cos_alpha_sq;
}

}  // namespace

PointSet::PointSet(std::vector<Point3> points) : points_(std::move(points)) {
  std::set<Point3, PointLess> seen;
  for (const auto& p : points_)
    if (!seen.insert(p).second)
      throw Error(ErrorCode::DuplicatePoint, "point " + to_string(p) + " appears twice");
}

ConvexPlanarPolygon validate_polygon(const PointSet& points, std::span<const std::size_t> indices) {
  std::vector<Point3> coords;
  coords.reserve(indices.size());
  for (std::size_t idx : indices) {
    if (idx >= points.size())
      throw Error(ErrorCode::IndexOutOfRange, "point index " + std::to_string(idx) +
                                                  " out of range (n = " +
                                                  std::to_string(points.size()) + ")");
    coords.push_back(points[idx]);
  }
  std::set<std::size_t> distinct(indices.begin(), indices.end());
  if (distinct.size() != indices.size())
    throw Error(ErrorCode::DuplicateVertex, "polygon repeats a vertex index");
  return ConvexPlanarPolygon{std::vector<std::size_t>(indices.begin(), indices.end()),
                             ConvexPolygon::make(std::move(coords))};
}

std::vector<std::size_t> canonical_cycle(std::span<const std::size_t> indices) {
  std::vector<std::size_t> best;
  const std::size_t k = indices.size();
  for (int dir : {1, -1}) {
    for (std::size_t start = 0; start < k; ++start) {
      std::vector<std::size_t> seq(k);
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t pos = dir > 0 ? (start + i) % k : (start + k - i) % k;
        seq[i] = indices[pos];
      }
      if (best.empty() || seq < best) best = std::move(seq);
    }
  }
  return best;
}

Family Family::build(PointSet points, const std::vector<std::vector<std::size_t>>& polygons,
                     std::optional<std::size_t> uniform_k) {
  Family f;
  f.points_ = std::move(points);
  f.uniform_k_ = uniform_k;
  std::map<std::vector<std::size_t>, std::size_t> seen;
  for (std::size_t i = 0; i < polygons.size(); ++i) {
    if (uniform_k && polygons[i].size() != *uniform_k)
      throw Error(ErrorCode::InvalidArgument, "polygon " + std::to_string(i) + " has " +
                                                  std::to_string(polygons[i].size()) +
                                                  " vertices, expected " +
                                                  std::to_string(*uniform_k));
    f.polygons_.push_back(validate_polygon(f.points_, polygons[i]));
    auto [it, inserted] = seen.emplace(canonical_cycle(polygons[i]), i);
    if (!inserted)
      throw Error(ErrorCode::DuplicatePolygon, "polygons " + std::to_string(it->second) +
                                                   " and " + std::to_string(i) + " coincide");
  }
  return f;
}

std::vector<std::vector<std::size_t>> Family::index_lists() const {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(polygons_.size());
  for (const auto& p : polygons_) out.push_back(p.indices);
  return out;
}

FatnessParams FatnessParams::make(const ExactScalar& c, const ExactScalar& cos_alpha) {
  if (c < 1) throw Error(ErrorCode::InvalidArgument, "fatness requires c >= 1");
  if (sgn(cos_alpha) <= 0 || cos_alpha >= 1)
    throw Error(ErrorCode::InvalidArgument, "fatness requires 0 < cos(alpha) < 1");
  return FatnessParams{c, cos_alpha};
}

AngleData interior_angle_data(const ConvexPolygon& polygon, std::size_t i) {
  const std::size_t k = polygon.size();
  if (i >= k)
    throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(i) + " of a " +
                                                std::to_string(k) + "-gon");
  const Point3& v = polygon.vertex(i);
  return squared_cosine(polygon.vertex(i + k - 1) - v, polygon.vertex(i + 1) - v);
}

FatnessReport is_fat_hexagon(const ConvexPolygon& hexagon, const FatnessParams& params) {
  return is_fat_hexagon(hexagon, params.c_sq(), params.cos_alpha);
}

FatnessReport is_fat_hexagon(const ConvexPolygon& hexagon, const ExactScalar& c_sq,
                             const ExactScalar& cos_alpha) {
  if (hexagon.size() != 6)
    throw Error(ErrorCode::NotHexagon, "polygon has " + std::to_string(hexagon.size()) + " vertices");
  FatnessReport report;

  std::vector<ExactScalar> sides;
  for (std::size_t i = 0; i < 6; ++i) sides.push_back(norm_sq(hexagon.vertex(i + 1) - hexagon.vertex(i)));
  const auto [shortest, longest] = std::minmax_element(sides.begin(), sides.end());
  report.side_ratio_sq_max = *longest / *shortest;
  const bool sides_ok = report.side_ratio_sq_max <= c_sq;

  const ExactScalar cos_alpha_sq = cos_alpha * cos_alpha;
  auto triple_ok = [&](std::size_t first) {
    for (std::size_t i = first; i < 6; i += 2)
      if (!angle_within(interior_angle_data(hexagon, i), cos_alpha_sq)) return false;
    return true;
  };
  report.even_triple_fat = triple_ok(0);
  report.odd_triple_fat = triple_ok(1);
  if (report.even_triple_fat)
    report.fat_vertex_triple = AlternatingTriple::Even;
  else if (report.odd_triple_fat)
    report.fat_vertex_triple = AlternatingTriple::Odd;

  report.is_fat = sides_ok && report.fat_vertex_triple.has_value();
  if (!sides_ok)
    report.failing_condition = "side ratio squared " + to_string(report.side_ratio_sq_max) +
                               " exceeds c^2 = " + to_string(c_sq);
  else if (!report.fat_vertex_triple)
    report.failing_condition = "no alternating vertex triple has all angles in [alpha, pi - alpha]";
  return report;
}

}  // namespace polyfam
