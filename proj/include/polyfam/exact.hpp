#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace polyfam {

// Arbitrary-precision rational. gmpxx keeps every value in canonical form
// (reduced, positive denominator) after each arithmetic operation.
using ExactScalar = mpq_class;

inline int sign(const ExactScalar& q) { return sgn(q); }

// Accepts "n", "n/d", with an optional leading sign on the numerator.
// The result is reduced. Throws Error(ParseError).
ExactScalar parse_scalar(std::string_view text);

// "n" for integers, "n/d" otherwise.
std::string to_string(const ExactScalar& q);

// 3-vector of exact rationals. Also used for points.
struct Vec3 {
  ExactScalar x;
  ExactScalar y;
  ExactScalar z;

  friend bool operator==(const Vec3& a, const Vec3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

using Point3 = Vec3;

inline Vec3 make_vec(long x, long y, long z) {
  return Vec3{ExactScalar(x), ExactScalar(y), ExactScalar(z)};
}

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a);
Vec3 operator*(const ExactScalar& s, const Vec3& v);
Vec3 operator/(const Vec3& v, const ExactScalar& s);

ExactScalar dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
ExactScalar norm_sq(const Vec3& v);
bool is_zero(const Vec3& v);

// Lexicographic comparison on (x, y, z); returns -1, 0 or +1.
int lex_compare(const Vec3& a, const Vec3& b);
inline bool lex_less(const Vec3& a, const Vec3& b) { return lex_compare(a, b) < 0; }

// Exact square root of a rational if it is a perfect square.
bool exact_sqrt(const ExactScalar& q, ExactScalar& root);

std::string to_string(const Vec3& v);
std::ostream& operator<<(std::ostream& os, const Vec3& v);

}  // namespace polyfam
