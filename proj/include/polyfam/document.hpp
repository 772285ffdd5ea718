#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "polyfam/model.hpp"

namespace polyfam {

inline constexpr int kFormatVersion = 1;

// Line-oriented text form of a family:
//
//   polyfam-family 1
//   meta <key> <value>        (any number, keys sorted)
//   points <n>
//   <x> <y> <z>               (n lines, reduced fractions)
//   polygons <m>
//   <k> <i1> ... <ik>         (m lines)
//   end
struct FamilyDocument {
  int format_version = kFormatVersion;
  std::vector<Point3> points;
  std::vector<std::vector<std::size_t>> polygons;
  std::map<std::string, std::string> metadata;
};

// Accepts extra blank lines, runs of spaces and tabs, unreduced fractions
// and '#' comment lines. Throws ParseError.
FamilyDocument parse_document(std::string_view text);
// Canonical form: single spaces, reduced fractions, sorted metadata with
// whitespace inside values collapsed.
std::string serialize_document(const FamilyDocument& doc);

FamilyDocument read_document_file(const std::string& path);
void write_document_file(const std::string& path, const FamilyDocument& doc);

FamilyDocument document_from_family(const Family& family, std::map<std::string, std::string> metadata = {});
// Throws like Family::build.
Family family_from_document(const FamilyDocument& doc);
PointSet point_set_from_document(const FamilyDocument& doc);

}  // namespace polyfam
