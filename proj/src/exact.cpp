#include "polyfam/exact.hpp"

#include <cctype>
#include <ostream>

#include "polyfam/error.hpp"

namespace polyfam {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

ExactScalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0)
    throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  ExactScalar q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const ExactScalar& q) { return q.get_str(10); }

Vec3 operator+(const Vec3& a, const Vec3& b) {
  return Vec3{a.x + b.x, a.y + b.y, a.z + b.z};
}

Vec3 operator-(const Vec3& a, const Vec3& b) {
  return Vec3{a.x - b.x, a.y - b.y, a.z - b.z};
}

Vec3 operator-(const Vec3& a) { return Vec3{-a.x, -a.y, -a.z}; }

Vec3 operator*(const ExactScalar& s, const Vec3& v) {
  return Vec3{s * v.x, s * v.y, s * v.z};
}

Vec3 operator/(const Vec3& v, const ExactScalar& s) {
  return Vec3{v.x / s, v.y / s, v.z / s};
}

ExactScalar dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return Vec3{a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

ExactScalar norm_sq(const Vec3& v) { return dot(v, v); }

bool is_zero(const Vec3& v) { return sgn(v.x) == 0 && sgn(v.y) == 0 && sgn(v.z) == 0; }

int lex_compare(const Vec3& a, const Vec3& b) {
  if (int c = cmp(a.x, b.x)) return c < 0 ? -1 : 1;
  if (int c = cmp(a.y, b.y)) return c < 0 ? -1 : 1;
  if (int c = cmp(a.z, b.z)) return c < 0 ? -1 : 1;
  return 0;
}

bool exact_sqrt(const ExactScalar& q, ExactScalar& root) {
  if (sgn(q) < 0) return false;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = ExactScalar(rn, rd);
  root.canonicalize();
  return true;
}

std::string to_string(const Vec3& v) {
  return "(" + to_string(v.x) + ", " + to_string(v.y) + ", " + to_string(v.z) + ")";
}

std::ostream& operator<<(std::ostream& os, const Vec3& v) { return os << to_string(v); }

}  // namespace polyfam
