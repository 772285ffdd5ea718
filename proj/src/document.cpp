#include "polyfam/document.hpp"

#include <fstream>
#include <sstream>

#include "polyfam/error.hpp"

namespace polyfam {

namespace {

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t parse_count(const std::string& s, std::size_t line) {
  if (s.empty() || s.size() > 18 || s.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": expected a count, got '" + s + "'");
  return static_cast<std::size_t>(std::stoull(s));
}

std::string collapse(const std::string& s) {
  const auto words = split(s);
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

}  // namespace

FamilyDocument parse_document(std::string_view text) {
  // Significant lines with their 1-based numbers.
  std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++number;
    auto tokens = split(line);
    if (!tokens.empty() && tokens.front()[0] != '#') lines.emplace_back(number, std::move(tokens));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }

  std::size_t cur = 0;
  auto next = [&](const char* what) -> const std::pair<std::size_t, std::vector<std::string>>& {
    if (cur >= lines.size()) throw Error(ErrorCode::ParseError, std::string("unexpected end of input, expected ") + what);
    return lines[cur++];
  };

  FamilyDocument doc;
  {
    const auto& [ln, t] = next("header");
    if (t.size() != 2 || t[0] != "polyfam-family")
      throw Error(ErrorCode::ParseError, "line " + std::to_string(ln) + ": missing 'polyfam-family' header");
    if (t[1] != "1") throw Error(ErrorCode::ParseError, "unsupported format version " + t[1]);
    doc.format_version = 1;
  }
  while (cur < lines.size() && lines[cur].second[0] == "meta") {
    const auto& [ln, t] = lines[cur++];
    if (t.size() < 2) throw Error(ErrorCode::ParseError, "line " + std::to_string(ln) + ": meta without key");
    std::string value;
    for (std::size_t i = 2; i < t.size(); ++i) value += (i > 2 ? " " : "") + t[i];
    if (!doc.metadata.emplace(t[1], value).second)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(ln) + ": repeated meta key " + t[1]);
  }
  {
    const auto& [ln, t] = next("points");
    if (t.size() != 2 || t[0] != "points")
      throw Error(ErrorCode::ParseError, "line " + std::to_string(ln) + ": expected 'points <n>'");
    const std::size_t n = parse_count(t[1], ln);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& [pl, pt] = next("point");
      if (pt.size() != 3)
        throw Error(ErrorCode::ParseError, "line " + std::to_string(pl) + ": expected three coordinates");
      try {
        doc.points.push_back(Vec3{parse_scalar(pt[0]), parse_scalar(pt[1]), parse_scalar(pt[2])});
      } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(pl) + ": " + e.what());
      }
    }
  }
  {
    const auto& [ln, t] = next("polygons");
    if (t.size() != 2 || t[0] != "polygons")
      throw Error(ErrorCode::ParseError, "line " + std::to_string(ln) + ": expected 'polygons <m>'");
    const std::size_t m = parse_count(t[1], ln);
    for (std::size_t i = 0; i < m; ++i) {
      const auto& [pl, pt] = next("polygon");
      const std::size_t k = parse_count(pt[0], pl);
      if (pt.size() != k + 1)
        throw Error(ErrorCode::ParseError, "line " + std::to_string(pl) + ": polygon declares " +
                                               std::to_string(k) + " vertices");
      std::vector<std::size_t> poly;
      for (std::size_t j = 1; j <= k; ++j) poly.push_back(parse_count(pt[j], pl));
      doc.polygons.push_back(std::move(poly));
    }
  }
  {
    const auto& [ln, t] = next("end");
    if (t.size() != 1 || t[0] != "end")
      throw Error(ErrorCode::ParseError, "line " + std::to_string(ln) + ": expected 'end'");
  }
  if (cur != lines.size())
    throw Error(ErrorCode::ParseError, "line " + std::to_string(lines[cur].first) + ": content after 'end'");
  return doc;
}

std::string serialize_document(const FamilyDocument& doc) {
  std::ostringstream os;
  os << "polyfam-family " << doc.format_version << "\n";
  for (const auto& [key, value] : doc.metadata) {
    const std::string k = collapse(key), v = collapse(value);
    os << "meta " << k;
    if (!v.empty()) os << " " << v;
    os << "\n";
  }
  os << "points " << doc.points.size() << "\n";
  for (const auto& p : doc.points) {
    ExactScalar x = p.x, y = p.y, z = p.z;
    x.canonicalize();
    y.canonicalize();
    z.canonicalize();
    os << to_string(x) << " " << to_string(y) << " " << to_string(z) << "\n";
  }
  os << "polygons " << doc.polygons.size() << "\n";
  for (const auto& poly : doc.polygons) {
    os << poly.size();
    for (std::size_t i : poly) os << " " << i;
    os << "\n";
  }
  os << "end\n";
  return os.str();
}

FamilyDocument read_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

void write_document_file(const std::string& path, const FamilyDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << serialize_document(doc);
  if (!out) throw Error(ErrorCode::InvalidArgument, "write failed: " + path);
}

FamilyDocument document_from_family(const Family& family, std::map<std::string, std::string> metadata) {
  FamilyDocument doc;
  doc.points = family.point_set().points();
  doc.polygons = family.index_lists();
  doc.metadata = std::move(metadata);
  return doc;
}

Family family_from_document(const FamilyDocument& doc) {
  return Family::build(PointSet(doc.points), doc.polygons);
}

PointSet point_set_from_document(const FamilyDocument& doc) { return PointSet(doc.points); }

}  // namespace polyfam
