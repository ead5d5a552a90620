#include "cmt/interval.hpp"

#include <sstream>
#include <utility>

#include "cmt/error.hpp"

namespace cmt {

Interval::Interval(mpfr_prec_t precision) : precision_(precision) {
  mpfr_init2(lo_, precision);
  mpfr_init2(hi_, precision);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : Interval(other.precision_) {
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other.precision_) {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(Interval other) noexcept {
  std::swap(precision_, other.precision_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_integer(const mpz_class& v, mpfr_prec_t precision) {
  Interval out(precision);
  mpfr_set_z(out.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(out.hi_, v.get_mpz_t(), MPFR_RNDU);
  return out;
}

Interval Interval::from_rational(const mpq_class& v, mpfr_prec_t precision) {
  Interval out(precision);
  mpfr_set_q(out.lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, v.get_mpq_t(), MPFR_RNDU);
  return out;
}

Interval Interval::from_decimal(const char* lo, const char* hi, mpfr_prec_t precision) {
  Interval out(precision);
  if (mpfr_set_str(out.lo_, lo, 10, MPFR_RNDD) != 0 && mpfr_nan_p(out.lo_)) {
    throw Error(ErrorKind::InvalidInput, std::string("bad decimal ") + lo);
  }
  mpfr_set_str(out.hi_, hi, 10, MPFR_RNDU);
  if (mpfr_greater_p(out.lo_, out.hi_)) throw Error(ErrorKind::InvalidInput, "empty interval");
  return out;
}

Interval Interval::log() const {
  if (mpfr_sgn(lo_) <= 0) throw Error(ErrorKind::InvalidInput, "log of a non-positive interval");
  Interval out(precision_);
  mpfr_log(out.lo_, lo_, MPFR_RNDD);
  mpfr_log(out.hi_, hi_, MPFR_RNDU);
  return out;
}

Interval operator+(const Interval& x, const Interval& y) {
  Interval out(std::max(x.precision_, y.precision_));
  mpfr_add(out.lo_, x.lo_, y.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, x.hi_, y.hi_, MPFR_RNDU);
  return out;
}

Interval operator-(const Interval& x, const Interval& y) {
  Interval out(std::max(x.precision_, y.precision_));
  mpfr_sub(out.lo_, x.lo_, y.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, x.hi_, y.lo_, MPFR_RNDU);
  return out;
}

namespace {

// Applies op to the four endpoint pairs and keeps the outward-rounded hull.
template <typename Op>
void endpoint_hull(mpfr_ptr lo, mpfr_ptr hi, mpfr_srcptr xl, mpfr_srcptr xh, mpfr_srcptr yl,
                   mpfr_srcptr yh, mpfr_prec_t precision, Op op) {
  mpfr_t down, up;
  mpfr_init2(down, precision);
  mpfr_init2(up, precision);
  bool first = true;
  for (mpfr_srcptr a : {xl, xh}) {
    for (mpfr_srcptr b : {yl, yh}) {
      op(down, a, b, MPFR_RNDD);
      op(up, a, b, MPFR_RNDU);
      if (first || mpfr_less_p(down, lo)) mpfr_set(lo, down, MPFR_RNDD);
      if (first || mpfr_greater_p(up, hi)) mpfr_set(hi, up, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(down);
  mpfr_clear(up);
}

}  // namespace

Interval operator*(const Interval& x, const Interval& y) {
  Interval out(std::max(x.precision_, y.precision_));
  endpoint_hull(out.lo_, out.hi_, x.lo_, x.hi_, y.lo_, y.hi_, out.precision_, mpfr_mul);
  return out;
}

Interval operator/(const Interval& x, const Interval& y) {
  if (y.contains_zero()) throw Error(ErrorKind::InvalidInput, "division by an interval containing 0");
  Interval out(std::max(x.precision_, y.precision_));
  endpoint_hull(out.lo_, out.hi_, x.lo_, x.hi_, y.lo_, y.hi_, out.precision_, mpfr_div);
  return out;
}

bool Interval::is_positive() const { return mpfr_sgn(lo_) > 0; }

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Interval::certainly_less(const Interval& other) const { return mpfr_less_p(hi_, other.lo_); }

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

std::string Interval::to_string(int digits) const {
  auto render = [digits](mpfr_srcptr v, mpfr_rnd_t rnd) {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*R*g", digits, rnd, v);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  };
  return "[" + render(lo_, MPFR_RNDD) + ", " + render(hi_, MPFR_RNDU) + "]";
}

}  // namespace cmt
