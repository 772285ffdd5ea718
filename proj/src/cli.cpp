#include "polyfam/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "polyfam/classify.hpp"
#include "polyfam/constructions.hpp"
#include "polyfam/document.hpp"
#include "polyfam/error.hpp"
#include "polyfam/export.hpp"
#include "polyfam/extremal.hpp"
#include "polyfam/pipeline.hpp"

namespace polyfam {

namespace {

constexpr int kOk = 0;
constexpr int kFinding = 1;
constexpr int kInvalid = 2;
constexpr int kNoCertificate = 3;

Relation parse_relation(const std::string& s) {
  if (s == "almost-disjoint") return Relation::AlmostDisjoint;
  if (s == "vertex-or-edge") return Relation::VertexOrEdge;
  if (s == "no-bad") return Relation::NoBadIntersection;
  throw Error(ErrorCode::InvalidArgument, "unknown relation '" + s + "'");
}

Vec3 parse_vec(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 3) throw Error(ErrorCode::InvalidArgument, "expected x,y,z, got '" + s + "'");
  return Vec3{parse_scalar(parts[0]), parse_scalar(parts[1]), parse_scalar(parts[2])};
}

unsigned default_threads() {
  if (const char* env = std::getenv("POLYFAM_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  f << text;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Families of convex planar polygons in 3-space", "polyfam"};
  app.require_subcommand(1);
  unsigned threads = default_threads();
  app.add_option("--threads", threads, "Worker threads (default: POLYFAM_THREADS or 1)")->check(CLI::PositiveNumber);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a construction as a family document");
  std::string kind, output, v_text = "0,0,1", c_text = "2", cos_alpha_text = "1/2";
  std::size_t m = 0, count = 3;
  std::uint64_t seed = 1;
  bool negative_control = false;
  gen->add_option("kind", kind, "christmas-tree | prism-quads | hexagon-stack")
      ->required()
      ->check(CLI::IsMember({"christmas-tree", "prism-quads", "hexagon-stack"}));
  auto* m_opt = gen->add_option("--m", m, "Construction size");
  auto* gen_seed = gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--v", v_text, "Prism translation x,y,z");
  gen->add_option("--c", c_text, "Side ratio bound c");
  gen->add_option("--cos-alpha", cos_alpha_text, "cos(alpha)");
  gen->add_option("--count", count, "Number of hexagons");
  gen->add_flag("--negative-control", negative_control, "Coplanar disjoint hexagons");
  gen->add_option("-o,--output", output, "Output file (default: standard output)");

  // verify
  auto* ver = app.add_subcommand("verify", "Check every pair of a family against a relation");
  std::string file, relation_text = "no-bad";
  bool strict_interior = false;
  ver->add_option("file", file)->required();
  ver->add_option("--relation", relation_text, "almost-disjoint | vertex-or-edge | no-bad");
  ver->add_flag("--strict-interior", strict_interior, "Bad contact must be interior to both polygons");

  // classify
  auto* cls = app.add_subcommand("classify", "Classify one pair of polygons");
  std::size_t first = 0, second = 0;
  cls->add_option("file", file)->required();
  cls->add_option("i", first)->required();
  cls->add_option("j", second)->required();

  // pipeline
  auto* pip = app.add_subcommand("pipeline", "Search a hexagon family for a badly intersecting pair");
  std::string phi_text = "auto", min_cos_text, direction_text;
  std::uint64_t pipeline_seed = 7;
  pip->add_option("file", file)->required();
  pip->add_option("--c", c_text, "Side ratio bound c");
  pip->add_option("--cos-alpha", cos_alpha_text, "cos(alpha)");
  pip->add_option("--phi", phi_text, "Bucket width in radians, or auto");
  pip->add_option("--seed", pipeline_seed, "Projection seed");
  pip->add_option("--min-cos-theta-sq", min_cos_text, "Lower bound on cos^2 of the plane tilt");
  pip->add_option("--direction", direction_text, "Projection direction x,y,z with rational length");

  // search
  auto* sea = app.add_subcommand("search", "Largest family on a point set");
  std::size_t k = 3, max_points = kDefaultMaxSearchPoints;
  std::uint64_t budget = SearchLimits{}.node_budget;
  long time_ms = 0;
  sea->add_option("file", file)->required();
  sea->add_option("--k", k, "Polygon size");
  sea->add_option("--relation", relation_text, "almost-disjoint | vertex-or-edge | no-bad");
  sea->add_option("--budget", budget, "Node budget");
  sea->add_option("--time-ms", time_ms, "Time budget in milliseconds (0: none)");
  sea->add_option("--max-points", max_points, "Largest accepted point set");

  // export
  auto* exp = app.add_subcommand("export", "Write an SVG or OBJ figure");
  std::string format = "svg";
  int precision = 12;
  exp->add_option("file", file)->required();
  exp->add_option("--format", format)->check(CLI::IsMember({"svg", "obj"}));
  exp->add_option("--direction", direction_text, "Projection direction x,y,z");
  exp->add_option("--precision", precision, "Significant digits for OBJ");
  exp->add_option("--seed", seed, "Seed for the automatic direction");
  exp->add_option("-o,--output", output, "Output file (default: standard output)");

  // stats
  auto* sta = app.add_subcommand("stats", "Summarize a family");
  sta->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    app.exit(e, out, err);
    return kInvalid;
  }

  try {
    if (gen->parsed()) {
      Family family;
      std::map<std::string, std::string> meta{{"construction", kind}};
      if (kind == "christmas-tree") {
        if (!*m_opt) throw Error(ErrorCode::InvalidArgument, "christmas-tree needs --m");
        family = christmas_tree(m);
        meta["m"] = std::to_string(m);
      } else if (kind == "prism-quads") {
        if (!*m_opt) throw Error(ErrorCode::InvalidArgument, "prism-quads needs --m");
        const Vec3 v = parse_vec(v_text);
        family = prism_quadrilaterals(m, seed, v);
        meta["m"] = std::to_string(m);
        meta["seed"] = std::to_string(seed);
        meta["v"] = to_string(v.x) + "," + to_string(v.y) + "," + to_string(v.z);
      } else {
        const auto params = FatnessParams::make(parse_scalar(c_text), parse_scalar(cos_alpha_text));
        const std::uint64_t s = *gen_seed ? seed : 0;
        family = fat_hexagon_stack(count, params, s, StackOptions{negative_control});
        meta["count"] = std::to_string(count);
        meta["seed"] = std::to_string(s);
        meta["c"] = to_string(params.c);
        meta["cos-alpha"] = to_string(params.cos_alpha);
        if (negative_control) meta["variant"] = "coplanar-disjoint";
      }
      emit(serialize_document(document_from_family(family, meta)), output, out);
      (output.empty() || output == "-" ? err : out)
          << family.size() << " polygons on " << family.point_set().size() << " points\n";
      return kOk;
    }

    if (ver->parsed()) {
      const Relation relation = parse_relation(relation_text);
      const Family family = family_from_document(read_document_file(file));
      const auto report = verify_family(family, relation, threads,
                                        strict_interior ? InteriorReading::BothPolygons : InteriorReading::EitherPolygon);
      out << "relation " << to_string(relation) << "\n";
      out << "polygons " << family.size() << "\n";
      out << "checked " << report.checked_pairs << " pairs\n";
      out << "violations " << report.violating_pairs.size() << "\n";
      for (const auto& v : report.violating_pairs)
        out << "violation " << v.first << " " << v.second << ": " << describe(v.classification) << "\n";
      return report.ok() ? kOk : kFinding;
    }

    if (cls->parsed()) {
      const Family family = family_from_document(read_document_file(file));
      if (first >= family.size() || second >= family.size())
        throw Error(ErrorCode::IndexOutOfRange, "family has " + std::to_string(family.size()) + " polygons");
      const auto c = classify_pair(family.polygon(first), family.polygon(second), family.point_set());
      out << describe(c) << "\n";
      for (Relation r : {Relation::AlmostDisjoint, Relation::VertexOrEdge, Relation::NoBadIntersection})
        out << to_string(r) << " " << (satisfies(c, r) ? "yes" : "no") << "\n";
      return kOk;
    }

    if (pip->parsed()) {
      const auto params = FatnessParams::make(parse_scalar(c_text), parse_scalar(cos_alpha_text));
      const Family family = family_from_document(read_document_file(file));
      PipelineConfig config;
      config.seed = pipeline_seed;
      if (phi_text != "auto") config.phi = parse_scalar(phi_text);
      if (!min_cos_text.empty()) config.min_cos_theta_sq = parse_scalar(min_cos_text);
      if (!direction_text.empty()) config.direction = parse_vec(direction_text);
      const auto report = run_pipeline(family, params, config);
      out << format_report(report);
      switch (report.outcome) {
        case PipelineOutcome::Witness: return kFinding;
        case PipelineOutcome::NoWitness: return kOk;
        case PipelineOutcome::InvalidInput: return kInvalid;
        case PipelineOutcome::StageFailed: return kNoCertificate;
      }
      return kNoCertificate;
    }

    if (sea->parsed()) {
      SearchProblem problem;
      problem.point_set = point_set_from_document(read_document_file(file));
      problem.k = k;
      problem.relation = parse_relation(relation_text);
      problem.limits.node_budget = budget;
      if (time_ms > 0) problem.limits.time_budget = std::chrono::milliseconds(time_ms);
      problem.max_points = max_points;
      problem.threads = threads;
      const auto result = max_family(problem);
      out << "relation " << to_string(problem.relation) << "\n";
      out << "n " << result.n << "\n";
      out << "k " << result.k << "\n";
      out << "candidates " << result.candidates_count << "\n";
      out << "nodes " << result.nodes_explored << "\n";
      out << "exhausted " << (result.exhausted ? "yes" : "no") << "\n";
      out << "origin computed\n";
      out << "max_size " << result.max_size << (result.exhausted ? "" : " (best so far)") << "\n";
      for (const auto& p : result.witness_family.polygons()) {
        out << "polygon";
        for (std::size_t i : p.indices) out << " " << i;
        out << "\n";
      }
      const auto bound = check_paper_bounds(result);
      if (bound.applicable)
        out << "bound " << bound.bound_text << " = " << bound.bound << ", slack " << bound.slack << "\n";
      else
        out << "bound none\n";
      return result.exhausted ? kOk : kNoCertificate;
    }

    if (exp->parsed()) {
      const Family family = family_from_document(read_document_file(file));
      if (format == "obj") {
        emit(export_obj(family, precision), output, out);
      } else {
        SvgOptions opts;
        opts.seed = seed;
        if (!direction_text.empty()) opts.direction = parse_vec(direction_text);
        emit(export_svg(family, opts), output, out);
      }
      return kOk;
    }

    if (sta->parsed()) {
      const Family family = family_from_document(read_document_file(file));
      std::map<std::size_t, std::size_t> sizes;
      for (const auto& p : family.polygons()) ++sizes[p.size()];
      out << "points " << family.point_set().size() << "\n";
      out << "polygons " << family.size() << "\n";
      for (const auto& [size, n] : sizes) out << "size " << size << " " << n << "\n";
      for (Relation r : {Relation::AlmostDisjoint, Relation::VertexOrEdge, Relation::NoBadIntersection})
        out << to_string(r) << " violations " << verify_family(family, r, threads).violating_pairs.size() << "\n";
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::NoGenericDirection ? kNoCertificate : kInvalid;
  }
  return kInvalid;
}

}  // namespace polyfam
