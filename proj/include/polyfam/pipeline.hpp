#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyfam/classify.hpp"
#include "polyfam/interval.hpp"
#include "polyfam/model.hpp"
#include "polyfam/projection.hpp"

namespace polyfam {

// ---------------------------------------------------------------------------
// Projection choice
// ---------------------------------------------------------------------------

struct ProjectionChoice {
  ProjectionSpec spec;
  std::vector<ExactScalar> cos_theta_sq;  // per polygon, angle between its plane and the image plane
  std::size_t draws = 0;                  // directions examined
  std::size_t chosen_draw = 0;
  std::size_t within_bound = 0;           // polygons with cos_theta_sq >= the requested bound
};

struct ProjectionOptions {
  std::uint64_t seed = 7;
  ExactScalar min_cos_theta_sq = 0;
  std::size_t max_draws = 32;
  std::optional<Vec3> preferred;  // tried first; must have rational length
};

// Draws rational unit directions until one projects the point set
// injectively and is parallel to no polygon plane. Among the generic draws
// the one keeping the most polygons within the angle bound wins (earliest on
// ties); a generic preferred direction is taken as is. Throws
// NoGenericDirection when every draw is degenerate.
ProjectionChoice choose_projection(const Family& family, const ProjectionOptions& options);

// ---------------------------------------------------------------------------
// Fatness transfer
// ---------------------------------------------------------------------------

struct FatnessTransferResult {
  ExactScalar c_prime_sq;       // c^2 / cos^2(theta)
  ExactScalar cos_alpha_prime;  // (cos(alpha) + sin^2(theta)) / cos^2(theta)
  Interval tan_phi_max;         // encloses sin(alpha') / (c' + cos(alpha'))
};

// Throws InvalidArgument unless 0 < cos_theta_sq <= 1, and ThetaTooLarge when
// cos(alpha) > 2 cos^2(theta) - 1 (alpha' would not exist).
FatnessTransferResult fatness_transfer(const FatnessParams& params, const ExactScalar& cos_theta_sq,
                                       mpfr_prec_t precision = kDefaultPrecision);

// Encloses arctan(sin(alpha') / (c' + cos(alpha'))) given c'^2 and cos(alpha').
Interval phi_bound(const ExactScalar& c_prime_sq, const ExactScalar& cos_alpha_prime,
                   mpfr_prec_t precision = kDefaultPrecision);

// ---------------------------------------------------------------------------
// Labeling and inclinations
// ---------------------------------------------------------------------------

struct ProjectedHexagon {
  std::size_t source = 0;
  std::array<std::size_t, 6> point_indices{};
  std::array<Point2, 6> vertices;
};

ProjectedHexagon project_hexagon(const Family& family, std::size_t index, const ProjectionSpec& spec);

enum class Label { A = 0, B, C, D, E, F };

struct LabeledHexagon {
  std::size_t source = 0;
  std::array<std::size_t, 6> point_indices{};     // in label order A..F
  std::array<Point2, 6> vertices;                 // image coordinates, counter-clockwise
  std::array<std::size_t, 6> original_positions{};  // position of each label in the input order
  AlternatingTriple fat_triple = AlternatingTriple::Odd;  // in input positions

  std::size_t point(Label l) const { return point_indices[static_cast<std::size_t>(l)]; }
  const Point2& vertex(Label l) const { return vertices[static_cast<std::size_t>(l)]; }
};

// Relabels counter-clockwise with the fat alternating triple at B, D, F.
// When both triples qualify the one holding input position 0 is used; B is
// the fat vertex with the smallest input position. Throws NotFat.
LabeledHexagon label_hexagon(const ProjectedHexagon& hexagon, const ExactScalar& cos_alpha_prime);

// Inclination in [0, pi) of the line through (dx, dy) against the first
// image axis.
Interval inclination(const ExactScalar& dx, const ExactScalar& dy,
                     mpfr_prec_t precision = kDefaultPrecision);

// Inclinations of AC, CE and EA.
std::array<Interval, 3> diagonal_inclinations(const LabeledHexagon& hexagon,
                                              mpfr_prec_t precision = kDefaultPrecision);

// ---------------------------------------------------------------------------
// Slope bucketing
// ---------------------------------------------------------------------------

struct BucketResult {
  std::vector<std::size_t> members;  // positions in the input list, ascending
  std::array<long, 3> cell{};        // cell of AC, CE, EA
  std::size_t cell_count = 0;        // ceil(pi / phi)
  std::size_t occupied_cells = 0;
  std::size_t refinements = 0;
  std::size_t midpoint_assignments = 0;
};

// Splits [0, pi) into half-open cells of width phi per diagonal and returns
// the most populated cell triple (ties: the one whose first member is
// smallest). Straddling intervals are refined, then assigned by midpoint.
BucketResult bucket_by_slope(const std::vector<LabeledHexagon>& hexagons, const ExactScalar& phi,
                             mpfr_prec_t precision = kDefaultPrecision);

// ---------------------------------------------------------------------------
// Diagonal triangle graph
// ---------------------------------------------------------------------------

using Edge = std::pair<std::size_t, std::size_t>;  // first < second

struct DiagonalTriangleGraph {
  std::vector<std::size_t> vertices;          // sorted point indices
  std::map<Edge, std::size_t> edges;          // edge -> source hexagon
  std::vector<std::array<std::size_t, 3>> hexagon_triangles;  // sorted A, C, E per hexagon
};

// Throws SharedDiagonal naming the offending pair.
DiagonalTriangleGraph build_triangle_graph(const std::vector<LabeledHexagon>& hexagons);

struct RainbowTriangle {
  std::array<std::size_t, 3> vertices{};  // ascending point indices
  std::array<std::size_t, 3> sources{};   // hexagons of edges (v0 v1), (v1 v2), (v0 v2)
};

// Lexicographically least rainbow triangle.
std::optional<RainbowTriangle> find_rainbow_triangle(const DiagonalTriangleGraph& graph);
std::vector<RainbowTriangle> find_all_rainbow_triangles(const DiagonalTriangleGraph& graph);

// ---------------------------------------------------------------------------
// Extraction
// ---------------------------------------------------------------------------

struct RainbowDiagnostics {
  // Per source hexagon (order of RainbowTriangle::sources): side of the
  // rainbow triangle's plane holding the apex of its diagonal triangle, and
  // cos^2 of the angle between the two planes.
  std::array<int, 3> side{};
  std::array<ExactScalar, 3> plane_cos_sq;
  // Same-side pair (steeper first) when one exists.
  std::optional<std::pair<std::size_t, std::size_t>> predicted_pair;
  std::vector<std::pair<Edge, bool>> pair_verdicts;  // hexagon pair -> intersects badly
  bool prediction_confirmed = false;
};

struct BadPair {
  std::size_t first = 0;
  std::size_t second = 0;
  PairClassification classification;
  RainbowDiagnostics diagnostics;
};

// Classifies the three source pairs in space and returns the first badly
// intersecting one. `hexagons` must contain the labeled sources. Throws
// NoBadPairFound (message carries the diagnostics).
BadPair extract_bad_pair(const RainbowTriangle& triangle, const Family& family,
                         const std::vector<LabeledHexagon>& hexagons);

// Non-throwing form used by the pipeline.
std::optional<BadPair> examine_rainbow(const RainbowTriangle& triangle, const Family& family,
                                       const std::vector<LabeledHexagon>& hexagons,
                                       RainbowDiagnostics* diagnostics = nullptr);

// ---------------------------------------------------------------------------
// Whole run
// ---------------------------------------------------------------------------

struct PipelineConfig {
  std::optional<ExactScalar> phi;               // radians; empty = half the certified bound
  std::optional<ExactScalar> min_cos_theta_sq;  // empty = midpoint of the admissible range
  std::uint64_t seed = 7;
  std::size_t max_draws = 32;
  std::optional<Vec3> direction;
  mpfr_prec_t precision = kDefaultPrecision;
};

enum class PipelineOutcome {
  Witness,      // a verified badly intersecting pair
  NoWitness,    // every rainbow triangle examined, none yields a bad pair
  StageFailed,  // a stage could not complete; no certificate either way
  InvalidInput,
};

const char* to_string(PipelineOutcome outcome);

struct StageRecord {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct PipelineReport {
  PipelineOutcome outcome = PipelineOutcome::StageFailed;
  std::vector<StageRecord> stages;
  std::optional<ProjectionChoice> projection;
  std::optional<FatnessTransferResult> transfer;
  ExactScalar min_cos_theta_sq;
  ExactScalar phi;
  std::size_t hexagons = 0;
  std::size_t fat_in_space = 0;
  std::size_t within_theta = 0;
  std::size_t labeled = 0;
  std::size_t triple_changes = 0;
  std::vector<std::size_t> bucket;  // source hexagon indices
  std::size_t occupied_cells = 0;
  std::size_t graph_vertices = 0;
  std::size_t graph_edges = 0;
  std::size_t rainbow_triangles = 0;
  std::optional<RainbowTriangle> rainbow;
  std::optional<BadPair> witness;
};

PipelineReport run_pipeline(const Family& family, const FatnessParams& params,
                            const PipelineConfig& config = {});

std::string format_report(const PipelineReport& report);

}  // namespace polyfam
