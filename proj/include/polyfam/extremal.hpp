#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyfam/classify.hpp"

namespace polyfam {

inline constexpr std::size_t kDefaultMaxSearchPoints = 10;

struct SearchLimits {
  std::uint64_t node_budget = 50'000'000;
  std::optional<std::chrono::milliseconds> time_budget;
};

struct SearchProblem {
  PointSet point_set;
  std::size_t k = 3;
  Relation relation = Relation::NoBadIntersection;
  SearchLimits limits;
  std::size_t max_points = kDefaultMaxSearchPoints;
  unsigned threads = 1;
};

struct SearchResult {
  std::size_t max_size = 0;
  Family witness_family;
  std::vector<std::size_t> witness_candidates;  // positions in the candidate list
  std::size_t candidates_count = 0;
  std::uint64_t nodes_explored = 0;
  bool exhausted = false;  // true iff max_size is the exact maximum
  Relation relation = Relation::NoBadIntersection;
  std::size_t k = 3;
  std::size_t n = 0;
};

// Every convex planar k-gon on the point set, one per vertex set, in
// lexicographic order of the sorted vertex sets. Each polygon starts at its
// lexicographically least point. Throws InvalidArgument if k < 3.
std::vector<ConvexPlanarPolygon> enumerate_candidate_kgons(const PointSet& points, std::size_t k);

// Maximum clique of the compatibility graph by branch and bound with a
// greedy-colouring bound. The witness is the lexicographically least
// optimum. When a budget runs out the best family so far is returned with
// exhausted = false. Throws InvalidArgument for k < 3 or too many points.
SearchResult max_family(const SearchProblem& problem);

struct BoundReport {
  bool applicable = false;
  std::string bound_text;   // e.g. "n(n-1)/6"
  long long bound = 0;      // largest admissible size
  long long slack = 0;      // bound - max_size
  bool exact = false;       // the compared size is a proven maximum
};

// Compares a search result with the counting bounds: n(n-1)/6 for
// almost-disjoint triangles, n(n-3) for vertex-or-edge triangles (n >= 4),
// below n^2 for the no-bad relation. Throws BoundViolation.
BoundReport check_paper_bounds(const SearchResult& result);

}  // namespace polyfam
