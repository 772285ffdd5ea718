#include "polyfam/extremal.hpp"

#include <algorithm>
#include <thread>

#include "polyfam/error.hpp"

namespace polyfam {

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  // Lowest set bit, or npos.
  std::size_t first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return i * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[i]));
    return npos;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  Bits without(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<std::uint64_t> words_;
};

struct Searcher {
  const std::vector<Bits>& adj;
  std::size_t n;
  std::uint64_t node_budget;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  std::vector<std::size_t> current;
  std::vector<std::size_t> best;
  std::uint64_t nodes = 0;
  bool aborted = false;

  std::size_t colour_bound(const Bits& p) const {
    Bits rest = p;
    std::size_t colours = 0;
    while (rest.any()) {
      ++colours;
      Bits avail = rest;
      while (avail.any()) {
        const std::size_t v = avail.first();
        rest.reset(v);
        avail.reset(v);
        avail = avail.without(adj[v]);
      }
    }
    return colours;
  }

  void expand(const Bits& p) {
    if (aborted) return;
    if (++nodes > node_budget || (deadline && (nodes & 1023) == 0 &&
                                  std::chrono::steady_clock::now() > *deadline)) {
      aborted = true;
      return;
    }
    if (current.size() > best.size()) best = current;
    if (!p.any()) return;
    if (current.size() + colour_bound(p) <= best.size()) return;
    Bits rest = p;
    while (rest.any()) {
      if (current.size() + rest.count() <= best.size()) return;
      const std::size_t v = rest.first();
      rest.reset(v);
      current.push_back(v);
      expand(rest & adj[v]);
      current.pop_back();
      if (aborted) return;
    }
  }
};

void combinations(std::size_t n, std::size_t k, std::vector<std::size_t>& cur, std::size_t start,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
    cur.push_back(i);
    combinations(n, k, cur, i + 1, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<ConvexPlanarPolygon> enumerate_candidate_kgons(const PointSet& points, std::size_t k) {
  if (k < 3) throw Error(ErrorCode::InvalidArgument, "k must be at least 3");
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> cur;
  if (points.size() >= k) combinations(points.size(), k, cur, 0, subsets);

  std::vector<ConvexPlanarPolygon> out;
  for (auto& s : subsets) {
    std::vector<Point3> pts;
    for (std::size_t i : s) pts.push_back(points[i]);
    Plane plane;
    try {
      plane = supporting_plane(pts);
    } catch (const Error&) {
      continue;
    }
    // The lexicographically least point is a hull vertex; order the rest
    // around it.
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < s.size(); ++i)
      if (lex_less(points[s[i]], points[s[pivot]])) pivot = i;
    std::swap(s[0], s[pivot]);
    const Point3 p0 = points[s[0]];
    const Vec3 n = plane.normal;
    std::sort(s.begin() + 1, s.end(), [&](std::size_t a, std::size_t b) {
      return sgn(dot(n, cross(points[a] - p0, points[b] - p0))) > 0;
    });
    try {
      out.push_back(validate_polygon(points, s));
    } catch (const Error&) {
    }
  }
  return out;
}

SearchResult max_family(const SearchProblem& problem) {
  if (problem.k < 3) throw Error(ErrorCode::InvalidArgument, "k must be at least 3");
  if (problem.point_set.size() > problem.max_points)
    throw Error(ErrorCode::InvalidArgument, "point set has " + std::to_string(problem.point_set.size()) +
                                                " points, limit is " + std::to_string(problem.max_points));
  const auto started = std::chrono::steady_clock::now();
  const auto candidates = enumerate_candidate_kgons(problem.point_set, problem.k);
  const std::size_t m = candidates.size();

  std::vector<Bits> adj(m, Bits(m));
  {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    std::vector<char> ok(pairs.size(), 0);
    const unsigned workers = std::max(1U, std::min<unsigned>(problem.threads, 64));
    auto work = [&](unsigned w) {
      for (std::size_t t = w; t < pairs.size(); t += workers) {
        const auto [i, j] = pairs[t];
        ok[t] = satisfies(classify_pair(candidates[i], candidates[j], problem.point_set), problem.relation);
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    for (std::size_t t = 0; t < pairs.size(); ++t)
      if (ok[t]) {
        adj[pairs[t].first].set(pairs[t].second);
        adj[pairs[t].second].set(pairs[t].first);
      }
  }

  Searcher s{adj, m, problem.limits.node_budget, std::nullopt, {}, {}, 0, false};
  if (problem.limits.time_budget) s.deadline = started + *problem.limits.time_budget;
  Bits all(m);
  for (std::size_t i = 0; i < m; ++i) all.set(i);
  s.expand(all);

  SearchResult r;
  r.max_size = s.best.size();
  r.witness_candidates = s.best;
  r.candidates_count = m;
  r.nodes_explored = s.nodes;
  r.exhausted = !s.aborted;
  r.relation = problem.relation;
  r.k = problem.k;
  r.n = problem.point_set.size();
  std::vector<std::vector<std::size_t>> lists;
  for (std::size_t c : s.best) lists.push_back(candidates[c].indices);
  r.witness_family = Family::build(problem.point_set, lists, problem.k);
  return r;
}

BoundReport check_paper_bounds(const SearchResult& result) {
  BoundReport b;
  const long long n = static_cast<long long>(result.n);
  b.exact = result.exhausted;
  if (result.relation == Relation::AlmostDisjoint && result.k == 3) {
    b.applicable = true;
    b.bound_text = "n(n-1)/6";
    b.bound = n * (n - 1) / 6;
  } else if (result.relation == Relation::VertexOrEdge && result.k == 3 && n >= 4) {
    b.applicable = true;
    b.bound_text = "n(n-3)";
    b.bound = n * (n - 3);
  } else if (result.relation == Relation::NoBadIntersection) {
    b.applicable = true;
    b.bound_text = "n^2 - 1";
    b.bound = n * n - 1;
  }
  if (!b.applicable) return b;
  b.slack = b.bound - static_cast<long long>(result.max_size);
  if (b.slack < 0)
    throw Error(ErrorCode::BoundViolation, std::to_string(result.max_size) + " polygons exceed " +
                                               b.bound_text + " = " + std::to_string(b.bound));
  return b;
}

}  // namespace polyfam
