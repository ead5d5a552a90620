#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace cmt {

/// Closed interval [lo, hi] of MPFR numbers. Every operation rounds the lower
/// end toward -inf and the upper end toward +inf, so the true value of the
/// evaluated expression always lies inside.
class Interval {
 public:
  explicit Interval(mpfr_prec_t precision);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(Interval other) noexcept;
  ~Interval();

  static Interval from_integer(const mpz_class& v, mpfr_prec_t precision);
  static Interval from_rational(const mpq_class& v, mpfr_prec_t precision);
  /// [lo, hi] from decimal strings, rounded outward.
  static Interval from_decimal(const char* lo, const char* hi, mpfr_prec_t precision);

  mpfr_prec_t precision() const noexcept { return precision_; }

  /// Natural log; requires lo > 0.
  Interval log() const;

  friend Interval operator+(const Interval& x, const Interval& y);
  friend Interval operator-(const Interval& x, const Interval& y);
  friend Interval operator*(const Interval& x, const Interval& y);
  /// Requires 0 outside y.
  friend Interval operator/(const Interval& x, const Interval& y);

  bool is_positive() const;
  bool contains_zero() const;
  /// Every point of *this is < every point of other.
  bool certainly_less(const Interval& other) const;

  double lo_double() const;
  double hi_double() const;
  std::string to_string(int digits = 12) const;

  mpfr_srcptr lo() const noexcept { return lo_; }
  mpfr_srcptr hi() const noexcept { return hi_; }

 private:
  mpfr_prec_t precision_;
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace cmt
