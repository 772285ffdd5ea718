#pragma once

#include <mpfr.h>

#include <string>

#include "polyfam/exact.hpp"

namespace polyfam {

inline constexpr mpfr_prec_t kDefaultPrecision = 128;
inline constexpr mpfr_prec_t kMaxPrecision = 8192;

// Closed interval [lower, upper] with MPFR endpoints. Every operation rounds
// the lower endpoint down and the upper endpoint up, so the exact real result
// is always enclosed.
class Interval {
 public:
  explicit Interval(mpfr_prec_t precision = kDefaultPrecision);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval exact(const ExactScalar& q, mpfr_prec_t precision = kDefaultPrecision);
  static Interval pi(mpfr_prec_t precision = kDefaultPrecision);

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }

  double lower_double() const;
  double upper_double() const;
  double midpoint_double() const;
  double width_double() const;

  // The endpoints are binary floats, hence exactly representable rationals.
  ExactScalar lower_exact() const;
  ExactScalar upper_exact() const;
  ExactScalar midpoint_exact() const;

  bool contains(const ExactScalar& q) const;
  bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
  bool certainly_negative() const { return mpfr_sgn(hi_) < 0; }
  bool certainly_less(const Interval& other) const;

  std::string to_string(int digits = 17) const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  friend Interval sqrt(const Interval& a);
  friend Interval atan(const Interval& a);
  friend Interval acos(const Interval& a);

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

Interval sqrt(const Interval& a);
Interval atan(const Interval& a);
Interval acos(const Interval& a);

}  // namespace polyfam
