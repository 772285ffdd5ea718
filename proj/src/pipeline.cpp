#include "polyfam/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "polyfam/error.hpp"

namespace polyfam {

namespace {

ExactScalar cos_sq_between(const Vec3& a, const Vec3& b) {
  const ExactScalar d = dot(a, b);
  return d * d / (norm_sq(a) * norm_sq(b));
}

double to_double(const ExactScalar& q) { return q.get_d(); }

long floor_long(const ExactScalar& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r.get_si();
}

long ceil_long(const ExactScalar& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r.get_si();
}

Edge make_edge(std::size_t a, std::size_t b) { return a < b ? Edge{a, b} : Edge{b, a}; }

const LabeledHexagon* find_source(const std::vector<LabeledHexagon>& hexagons, std::size_t source) {
  for (const auto& h : hexagons)
    if (h.source == source) return &h;
  return nullptr;
}

}  // namespace

// ---------------------------------------------------------------------------

ProjectionChoice choose_projection(const Family& family, const ProjectionOptions& options) {
  const auto& polys = family.polygons();

  auto evaluate = [&](const Vec3& d, ProjectionChoice& out) {
    if (is_zero(d)) return false;
    ExactScalar length;
    if (!exact_sqrt(norm_sq(d), length)) return false;
    ProjectionSpec spec = make_projection(d);
    if (direction_in_some_plane(spec, family)) return false;
    if (!projections_distinct(spec, family.point_set())) return false;
    out.spec = spec;
    out.cos_theta_sq.clear();
    out.within_bound = 0;
    for (const auto& p : polys) {
      out.cos_theta_sq.push_back(cos_sq_between(p.plane().normal, d));
      if (out.cos_theta_sq.back() >= options.min_cos_theta_sq) ++out.within_bound;
    }
    return true;
  };

  ProjectionChoice best;
  bool have_best = false;
  std::size_t draws = 0;

  if (options.preferred) {
    ++draws;
    ProjectionChoice c;
    if (evaluate(*options.preferred, c)) {
      c.draws = draws;
      c.chosen_draw = 0;
      return c;
    }
  }

  // Mean of the unit plane normals, oriented alike.
  double mx = 0, my = 0, mz = 0;
  if (!polys.empty()) {
    const Vec3& n0 = polys.front().plane().normal;
    for (const auto& p : polys) {
      const Vec3& n = p.plane().normal;
      double x = to_double(n.x), y = to_double(n.y), z = to_double(n.z);
      const double len = std::sqrt(x * x + y * y + z * z);
      const double s = sgn(dot(n, n0)) < 0 ? -1.0 : 1.0;
      mx += s * x / len;
      my += s * y / len;
      mz += s * z / len;
    }
  }
  const bool have_mean = std::sqrt(mx * mx + my * my + mz * mz) > 1e-9;
  if (have_mean) {
    const double len = std::sqrt(mx * mx + my * my + mz * mz);
    mx /= len;
    my /= len;
    mz /= len;
  }

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (std::size_t k = 0; k < options.max_draws; ++k) {
    ++draws;
    double x, y, z;
    if (have_mean && k % 2 == 0) {
      const double sigma = 0.05;
      x = mx + sigma * gauss(rng);
      y = my + sigma * gauss(rng);
      z = mz + sigma * gauss(rng);
    } else {
      x = gauss(rng);
      y = gauss(rng);
      z = gauss(rng);
    }
    if (std::sqrt(x * x + y * y + z * z) < 1e-9) continue;
    ProjectionChoice c;
    if (!evaluate(rational_unit_near(x, y, z), c)) continue;
    if (!have_best || c.within_bound > best.within_bound) {
      best = std::move(c);
      best.chosen_draw = draws - 1;
      have_best = true;
      if (best.within_bound == polys.size()) break;
    }
  }
  if (!have_best)
    throw Error(ErrorCode::NoGenericDirection,
                "no generic direction in " + std::to_string(draws) + " draws");
  best.draws = draws;
  return best;
}

// ---------------------------------------------------------------------------

FatnessTransferResult fatness_transfer(const FatnessParams& params, const ExactScalar& cos_theta_sq,
                                       mpfr_prec_t precision) {
  if (sgn(cos_theta_sq) <= 0 || cos_theta_sq > 1)
    throw Error(ErrorCode::InvalidArgument, "cos^2(theta) must lie in (0, 1], got " + to_string(cos_theta_sq));
  if (params.cos_alpha > 2 * cos_theta_sq - 1)
    throw Error(ErrorCode::ThetaTooLarge, "cos(alpha) = " + to_string(params.cos_alpha) +
                                              " exceeds 2 cos^2(theta) - 1 = " +
                                              to_string(ExactScalar(2 * cos_theta_sq - 1)));
  FatnessTransferResult r{params.c_sq() / cos_theta_sq,
                          (params.cos_alpha + 1 - cos_theta_sq) / cos_theta_sq, Interval(precision)};
  r.c_prime_sq.canonicalize();
  r.cos_alpha_prime.canonicalize();
  const Interval sin_a = sqrt(Interval::exact(1 - r.cos_alpha_prime * r.cos_alpha_prime, precision));
  const Interval c_prime = sqrt(Interval::exact(r.c_prime_sq, precision));
  r.tan_phi_max = sin_a / (c_prime + Interval::exact(r.cos_alpha_prime, precision));
  return r;
}

Interval phi_bound(const ExactScalar& c_prime_sq, const ExactScalar& cos_alpha_prime,
                   mpfr_prec_t precision) {
  const Interval sin_a = sqrt(Interval::exact(1 - cos_alpha_prime * cos_alpha_prime, precision));
  const Interval c_prime = sqrt(Interval::exact(c_prime_sq, precision));
  return atan(sin_a / (c_prime + Interval::exact(cos_alpha_prime, precision)));
}

// ---------------------------------------------------------------------------

ProjectedHexagon project_hexagon(const Family& family, std::size_t index, const ProjectionSpec& spec) {
  const auto& poly = family.polygon(index);
  if (poly.size() != 6)
    throw Error(ErrorCode::NotHexagon, "polygon " + std::to_string(index) + " has " +
                                           std::to_string(poly.size()) + " vertices");
  ProjectedHexagon h;
  h.source = index;
  for (std::size_t i = 0; i < 6; ++i) {
    h.point_indices[i] = poly.indices[i];
    h.vertices[i] = project(spec, family.point_set()[poly.indices[i]]);
  }
  return h;
}

LabeledHexagon label_hexagon(const ProjectedHexagon& hexagon, const ExactScalar& cos_alpha_prime) {
  std::vector<Point3> lifted;
  for (const auto& v : hexagon.vertices) lifted.push_back(Vec3{v.x, v.y, ExactScalar(0)});
  const ConvexPolygon poly = ConvexPolygon::make(lifted);
  const bool ccw = sgn(poly.normal().z) > 0;

  const ExactScalar bound = cos_alpha_prime * cos_alpha_prime;
  bool fat[6];
  for (std::size_t i = 0; i < 6; ++i) fat[i] = interior_angle_data(poly, i).squared_cosine <= bound;
  const bool even = fat[0] && fat[2] && fat[4];
  const bool odd = fat[1] && fat[3] && fat[5];
  if (!even && !odd)
    throw Error(ErrorCode::NotFat, "hexagon " + std::to_string(hexagon.source) +
                                       " has no alternating triple with angles in [alpha', pi - alpha']");

  // Input positions in counter-clockwise order, starting at position 0.
  std::array<std::size_t, 6> seq{};
  for (std::size_t i = 0; i < 6; ++i) seq[i] = ccw ? i : (6 - i) % 6;

  LabeledHexagon out;
  out.source = hexagon.source;
  out.fat_triple = even ? AlternatingTriple::Even : AlternatingTriple::Odd;
  const std::size_t b_pos = even ? 0 : 1;
  const std::size_t j = static_cast<std::size_t>(std::find(seq.begin(), seq.end(), b_pos) - seq.begin());
  for (std::size_t t = 0; t < 6; ++t) {
    const std::size_t pos = seq[(j + 5 + t) % 6];
    out.original_positions[t] = pos;
    out.point_indices[t] = hexagon.point_indices[pos];
    out.vertices[t] = hexagon.vertices[pos];
  }
  return out;
}

Interval inclination(const ExactScalar& dx_in, const ExactScalar& dy_in, mpfr_prec_t precision) {
  ExactScalar dx = dx_in, dy = dy_in;
  if (sgn(dx) == 0 && sgn(dy) == 0) throw Error(ErrorCode::ZeroVector, "inclination of a zero vector");
  if (sgn(dy) < 0 || (sgn(dy) == 0 && sgn(dx) < 0)) {
    dx = -dx;
    dy = -dy;
  }
  if (sgn(dy) == 0) return Interval::exact(ExactScalar(0), precision);
  if (sgn(dx) == 0) return Interval::pi(precision) / Interval::exact(ExactScalar(2), precision);
  if (sgn(dx) > 0) return atan(Interval::exact(dy / dx, precision));
  return Interval::pi(precision) - atan(Interval::exact(dy / -dx, precision));
}

std::array<Interval, 3> diagonal_inclinations(const LabeledHexagon& h, mpfr_prec_t precision) {
  auto incl = [&](Label from, Label to) {
    const Point2& p = h.vertex(from);
    const Point2& q = h.vertex(to);
    return inclination(q.x - p.x, q.y - p.y, precision);
  };
  return {incl(Label::A, Label::C), incl(Label::C, Label::E), incl(Label::E, Label::A)};
}

// ---------------------------------------------------------------------------

BucketResult bucket_by_slope(const std::vector<LabeledHexagon>& hexagons, const ExactScalar& phi,
                             mpfr_prec_t precision) {
  if (sgn(phi) <= 0) throw Error(ErrorCode::InvalidArgument, "phi must be positive");
  BucketResult result;

  // Number of cells: ceil(pi / phi).
  {
    mpfr_prec_t prec = precision;
    for (;;) {
      const Interval r = Interval::pi(prec) / Interval::exact(phi, prec);
      const long lo = ceil_long(r.lower_exact()), hi = ceil_long(r.upper_exact());
      if (lo == hi || prec >= kMaxPrecision) {
        result.cell_count = static_cast<std::size_t>(std::max(1L, hi));
        break;
      }
      prec *= 2;
    }
  }
  const long last = static_cast<long>(result.cell_count) - 1;

  std::map<std::array<long, 3>, std::vector<std::size_t>> cells;
  for (std::size_t i = 0; i < hexagons.size(); ++i) {
    std::array<long, 3> key{};
    std::array<bool, 3> done{};
    mpfr_prec_t prec = precision;
    for (;;) {
      const auto incl = diagonal_inclinations(hexagons[i], prec);
      const Interval p = Interval::exact(phi, prec);
      for (std::size_t d = 0; d < 3; ++d) {
        if (done[d]) continue;
        const Interval r = incl[d] / p;
        const long lo = floor_long(r.lower_exact()), hi = floor_long(r.upper_exact());
        if (lo == hi) {
          key[d] = std::clamp(lo, 0L, last);
          done[d] = true;
        } else if (prec >= kMaxPrecision) {
          key[d] = std::clamp(floor_long(r.midpoint_exact()), 0L, last);
          done[d] = true;
          ++result.midpoint_assignments;
        }
      }
      if (done[0] && done[1] && done[2]) break;
      prec *= 2;
      ++result.refinements;
    }
    cells[key].push_back(i);
  }

  result.occupied_cells = cells.size();
  const std::vector<std::size_t>* best = nullptr;
  for (const auto& [key, members] : cells) {
    if (!best || members.size() > best->size() ||
        (members.size() == best->size() && members.front() < best->front())) {
      best = &members;
      result.cell = key;
    }
  }
  if (best) result.members = *best;
  return result;
}

// ---------------------------------------------------------------------------

DiagonalTriangleGraph build_triangle_graph(const std::vector<LabeledHexagon>& hexagons) {
  DiagonalTriangleGraph g;
  std::set<std::size_t> verts;
  for (const auto& h : hexagons) {
    const std::size_t a = h.point(Label::A), c = h.point(Label::C), e = h.point(Label::E);
    for (const Edge& edge : {make_edge(a, c), make_edge(c, e), make_edge(e, a)}) {
      const auto [it, inserted] = g.edges.emplace(edge, h.source);
      if (!inserted)
        throw Error(ErrorCode::SharedDiagonal,
                    "hexagons " + std::to_string(it->second) + " and " + std::to_string(h.source) +
                        " share diagonal " + std::to_string(edge.first) + "-" + std::to_string(edge.second));
    }
    std::array<std::size_t, 3> tri{a, c, e};
    std::sort(tri.begin(), tri.end());
    g.hexagon_triangles.push_back(tri);
    verts.insert({a, c, e});
  }
  g.vertices.assign(verts.begin(), verts.end());
  return g;
}

std::vector<RainbowTriangle> find_all_rainbow_triangles(const DiagonalTriangleGraph& graph) {
  std::map<std::size_t, std::set<std::size_t>> adj;
  for (const auto& [e, src] : graph.edges) {
    adj[e.first].insert(e.second);
    adj[e.second].insert(e.first);
  }
  std::vector<RainbowTriangle> out;
  for (const auto& [e, s01] : graph.edges) {
    const auto& nu = adj[e.first];
    for (auto it = nu.upper_bound(e.second); it != nu.end(); ++it) {
      const std::size_t w = *it;
      const auto s12 = graph.edges.find(Edge{e.second, w});
      if (s12 == graph.edges.end()) continue;
      const std::size_t s02 = graph.edges.at(Edge{e.first, w});
      if (s01 == s12->second || s01 == s02 || s12->second == s02) continue;
      out.push_back(RainbowTriangle{{e.first, e.second, w}, {s01, s12->second, s02}});
    }
  }
  return out;
}

std::optional<RainbowTriangle> find_rainbow_triangle(const DiagonalTriangleGraph& graph) {
  auto all = find_all_rainbow_triangles(graph);
  if (all.empty()) return std::nullopt;
  return all.front();
}

// ---------------------------------------------------------------------------

namespace {

std::string format_diagnostics(const RainbowDiagnostics& d, const RainbowTriangle& t) {
  std::ostringstream os;
  os << "triangle " << t.vertices[0] << " " << t.vertices[1] << " " << t.vertices[2] << "; sides";
  for (std::size_t k = 0; k < 3; ++k) os << " " << t.sources[k] << ":" << d.side[k];
  os << "; cos^2 to T";
  for (std::size_t k = 0; k < 3; ++k) os << " " << t.sources[k] << ":" << to_string(d.plane_cos_sq[k]);
  if (d.predicted_pair)
    os << "; predicted " << d.predicted_pair->first << "," << d.predicted_pair->second;
  else
    os << "; no same-side pair";
  for (const auto& [e, bad] : d.pair_verdicts)
    os << "; pair " << e.first << "," << e.second << (bad ? " bad" : " ok");
  return os.str();
}

}  // namespace

std::optional<BadPair> examine_rainbow(const RainbowTriangle& triangle, const Family& family,
                                       const std::vector<LabeledHexagon>& hexagons,
                                       RainbowDiagnostics* diagnostics) {
  const PointSet& pts = family.point_set();
  RainbowDiagnostics diag;

  const Point3& p0 = pts[triangle.vertices[0]];
  const Vec3 nt = cross(pts[triangle.vertices[1]] - p0, pts[triangle.vertices[2]] - p0);
  for (std::size_t k = 0; k < 3; ++k) {
    const std::size_t src = triangle.sources[k];
    const Vec3& n = family.polygon(src).plane().normal;
    diag.plane_cos_sq[k] = is_zero(nt) ? ExactScalar(0) : cos_sq_between(n, nt);
    diag.side[k] = 0;
    if (const LabeledHexagon* h = find_source(hexagons, src); h && !is_zero(nt)) {
      for (Label l : {Label::A, Label::C, Label::E}) {
        const std::size_t v = h->point(l);
        if (std::find(triangle.vertices.begin(), triangle.vertices.end(), v) != triangle.vertices.end())
          continue;
        diag.side[k] = sgn(dot(nt, pts[v] - p0));
      }
    }
  }
  for (std::size_t k = 0; k < 3 && !diag.predicted_pair; ++k)
    for (std::size_t l = k + 1; l < 3 && !diag.predicted_pair; ++l)
      if (diag.side[k] != 0 && diag.side[k] == diag.side[l]) {
        // Steeper plane first.
        if (diag.plane_cos_sq[l] < diag.plane_cos_sq[k])
          diag.predicted_pair = {triangle.sources[l], triangle.sources[k]};
        else
          diag.predicted_pair = {triangle.sources[k], triangle.sources[l]};
      }

  std::vector<Edge> pairs;
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t l = k + 1; l < 3; ++l) pairs.push_back(make_edge(triangle.sources[k], triangle.sources[l]));
  std::sort(pairs.begin(), pairs.end());

  std::optional<BadPair> found;
  for (const Edge& e : pairs) {
    PairClassification cls = classify_pair(family.polygon(e.first), family.polygon(e.second), pts);
    const bool bad = intersects_badly(cls);
    diag.pair_verdicts.emplace_back(e, bad);
    if (bad && !found) found = BadPair{e.first, e.second, std::move(cls), {}};
  }
  if (diag.predicted_pair) {
    const Edge p = make_edge(diag.predicted_pair->first, diag.predicted_pair->second);
    for (const auto& [e, bad] : diag.pair_verdicts)
      if (e == p) diag.prediction_confirmed = bad;
  }
  if (found) found->diagnostics = diag;
  if (diagnostics) *diagnostics = std::move(diag);
  return found;
}

BadPair extract_bad_pair(const RainbowTriangle& triangle, const Family& family,
                         const std::vector<LabeledHexagon>& hexagons) {
  RainbowDiagnostics diag;
  auto found = examine_rainbow(triangle, family, hexagons, &diag);
  if (!found)
    throw Error(ErrorCode::NoBadPairFound, "no source pair intersects badly: " + format_diagnostics(diag, triangle));
  return std::move(*found);
}

// ---------------------------------------------------------------------------

const char* to_string(PipelineOutcome outcome) {
  switch (outcome) {
    case PipelineOutcome::Witness: return "witness";
    case PipelineOutcome::NoWitness: return "no-witness";
    case PipelineOutcome::StageFailed: return "stage-failed";
    case PipelineOutcome::InvalidInput: return "invalid-input";
  }
  return "?";
}

PipelineReport run_pipeline(const Family& family, const FatnessParams& params, const PipelineConfig& config) {
  PipelineReport rep;
  auto stage = [&](std::string name, bool ok, std::string detail) {
    rep.stages.push_back(StageRecord{std::move(name), ok, std::move(detail)});
    return ok;
  };
  auto fail = [&](std::string name, std::string detail) {
    stage(std::move(name), false, std::move(detail));
    rep.outcome = PipelineOutcome::StageFailed;
    return rep;
  };

  // input
  rep.hexagons = family.size();
  for (std::size_t i = 0; i < family.size(); ++i)
    if (family.polygon(i).size() != 6) {
      stage("input", false, "polygon " + std::to_string(i) + " has " +
                                std::to_string(family.polygon(i).size()) + " vertices");
      rep.outcome = PipelineOutcome::InvalidInput;
      return rep;
    }
  if (family.size() == 0) {
    stage("input", false, "empty family");
    rep.outcome = PipelineOutcome::InvalidInput;
    return rep;
  }
  stage("input", true, std::to_string(family.size()) + " hexagons on " +
                           std::to_string(family.point_set().size()) + " points");

  // fatness in space
  std::vector<std::size_t> fat;
  std::vector<std::optional<AlternatingTriple>> triple3d(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto r = is_fat_hexagon(family.polygon(i).geometry, params);
    if (r.is_fat) {
      fat.push_back(i);
      triple3d[i] = r.fat_vertex_triple;
    }
  }
  rep.fat_in_space = fat.size();
  if (fat.empty()) return fail("fatness-3d", "no hexagon is (c, alpha)-fat");
  stage("fatness-3d", true, std::to_string(fat.size()) + " of " + std::to_string(family.size()) + " fat");

  // transfer at the angle bound
  rep.min_cos_theta_sq = config.min_cos_theta_sq ? *config.min_cos_theta_sq
                                                 : ExactScalar((1 + params.cos_alpha) / 2 + 1) / 2;
  rep.min_cos_theta_sq.canonicalize();
  try {
    rep.transfer = fatness_transfer(params, rep.min_cos_theta_sq, config.precision);
  } catch (const Error& e) {
    return fail("transfer", e.what());
  }
  stage("transfer", true,
        "cos^2(theta) >= " + to_string(rep.min_cos_theta_sq) + ": c'^2 = " + to_string(rep.transfer->c_prime_sq) +
            ", cos(alpha') = " + to_string(rep.transfer->cos_alpha_prime) +
            ", tan(phi_max) in " + rep.transfer->tan_phi_max.to_string());

  // projection
  try {
    ProjectionOptions po;
    po.seed = config.seed;
    po.min_cos_theta_sq = rep.min_cos_theta_sq;
    po.max_draws = config.max_draws;
    po.preferred = config.direction;
    rep.projection = choose_projection(family, po);
  } catch (const Error& e) {
    return fail("projection", e.what());
  }
  stage("projection", true,
        "direction " + to_string(rep.projection->spec.direction) + " (draw " +
            std::to_string(rep.projection->chosen_draw + 1) + " of " + std::to_string(rep.projection->draws) + ")");

  // theta filter
  std::vector<std::size_t> kept;
  for (std::size_t i : fat)
    if (rep.projection->cos_theta_sq[i] >= rep.min_cos_theta_sq) kept.push_back(i);
  rep.within_theta = kept.size();
  if (kept.empty()) return fail("theta-filter", "no fat hexagon within the angle bound");
  stage("theta-filter", true, std::to_string(kept.size()) + " of " + std::to_string(fat.size()) + " within bound");

  // phi
  const FatnessTransferResult& tr = *rep.transfer;
  mpfr_prec_t prec = config.precision;
  Interval bound = phi_bound(tr.c_prime_sq, tr.cos_alpha_prime, prec);
  if (!bound.certainly_positive()) return fail("phi", "phi bound is not positive");
  if (config.phi) {
    rep.phi = *config.phi;
    if (sgn(rep.phi) <= 0) return fail("phi", "phi must be positive");
    for (;;) {
      if (Interval::exact(rep.phi, prec).certainly_less(bound)) break;
      if (sgn(ExactScalar(rep.phi - bound.upper_exact())) >= 0)
        return fail("phi", "phi = " + to_string(rep.phi) + " is not below the bound " + bound.to_string());
      if (prec >= kMaxPrecision) return fail("phi", "cannot certify phi below the bound");
      prec *= 2;
      bound = phi_bound(tr.c_prime_sq, tr.cos_alpha_prime, prec);
    }
  } else {
    const ExactScalar half = bound.lower_exact() / 2;
    rep.phi = ExactScalar(floor_long(ExactScalar(half * 1000000)), 1000000);
    rep.phi.canonicalize();
    if (sgn(rep.phi) <= 0) return fail("phi", "phi bound too small");
  }
  stage("phi", true, "phi = " + to_string(rep.phi) + " below bound " + bound.to_string());

  // labeling
  std::vector<LabeledHexagon> labeled;
  std::size_t not_fat = 0;
  for (std::size_t i : kept) {
    try {
      const ProjectedHexagon ph = project_hexagon(family, i, rep.projection->spec);
      std::vector<Point3> flat;
      for (const auto& v : ph.vertices) flat.push_back(Vec3{v.x, v.y, ExactScalar(0)});
      const auto fr = is_fat_hexagon(ConvexPolygon::make(flat), tr.c_prime_sq, tr.cos_alpha_prime);
      if (!fr.is_fat) {
        ++not_fat;
        continue;
      }
      LabeledHexagon lh = label_hexagon(ph, tr.cos_alpha_prime);
      if (triple3d[i] && *triple3d[i] != lh.fat_triple) ++rep.triple_changes;
      labeled.push_back(std::move(lh));
    } catch (const Error&) {
      ++not_fat;
    }
  }
  rep.labeled = labeled.size();
  if (labeled.empty()) return fail("label", "no projected hexagon is (c', alpha')-fat");
  stage("label", true, std::to_string(labeled.size()) + " labeled, " + std::to_string(not_fat) +
                           " not fat after projection, " + std::to_string(rep.triple_changes) +
                           " changed fat triple");

  // bucketing
  const BucketResult br = bucket_by_slope(labeled, rep.phi, config.precision);
  std::vector<LabeledHexagon> bucket;
  for (std::size_t m : br.members) {
    bucket.push_back(labeled[m]);
    rep.bucket.push_back(labeled[m].source);
  }
  rep.occupied_cells = br.occupied_cells;
  stage("bucket", true, std::to_string(bucket.size()) + " hexagons in the largest of " +
                            std::to_string(br.occupied_cells) + " occupied cells (" +
                            std::to_string(br.cell_count) + " per diagonal)");

  // graph
  DiagonalTriangleGraph graph;
  try {
    graph = build_triangle_graph(bucket);
  } catch (const Error& e) {
    return fail("graph", e.what());
  }
  rep.graph_vertices = graph.vertices.size();
  rep.graph_edges = graph.edges.size();
  stage("graph", true, std::to_string(rep.graph_vertices) + " vertices, " + std::to_string(rep.graph_edges) + " edges");

  // rainbow
  const auto rainbows = find_all_rainbow_triangles(graph);
  rep.rainbow_triangles = rainbows.size();
  if (rainbows.empty()) return fail("rainbow", "no rainbow triangle");
  rep.rainbow = rainbows.front();
  stage("rainbow", true, std::to_string(rainbows.size()) + " rainbow triangles");

  // extraction
  for (const auto& t : rainbows) {
    auto found = examine_rainbow(t, family, bucket);
    if (!found) continue;
    const auto check = classify_pair(family.polygon(found->first), family.polygon(found->second),
                                     family.point_set());
    if (!intersects_badly(check)) continue;
    rep.rainbow = t;
    stage("extract", true, "hexagons " + std::to_string(found->first) + " and " +
                               std::to_string(found->second) + " intersect badly; " +
                               format_diagnostics(found->diagnostics, t));
    rep.witness = std::move(found);
    rep.outcome = PipelineOutcome::Witness;
    return rep;
  }
  RainbowDiagnostics diag;
  examine_rainbow(rainbows.front(), family, bucket, &diag);
  stage("extract", false, "no rainbow triangle yields a bad pair; first: " + format_diagnostics(diag, rainbows.front()));
  rep.outcome = PipelineOutcome::NoWitness;
  return rep;
}

std::string format_report(const PipelineReport& report) {
  std::ostringstream os;
  os << "outcome " << to_string(report.outcome) << "\n";
  for (const auto& s : report.stages) os << "stage " << s.name << " " << (s.ok ? "ok" : "failed") << ": " << s.detail << "\n";
  if (report.witness) {
    os << "witness " << report.witness->first << " " << report.witness->second << "\n";
    os << describe(report.witness->classification) << "\n";
  }
  return os.str();
}

}  // namespace polyfam
