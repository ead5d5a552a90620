#include "cmt/alg_num.hpp"

#include <cmath>

#include "cmt/arith.hpp"
#include "cmt/error.hpp"

namespace cmt {
namespace {

void require_inputs(const mpz_class& p, unsigned long m, unsigned long e) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidInput, p.get_str() + " is not prime");
  if (m == 0 || e == 0) throw Error(ErrorKind::InvalidInput, "m and e must be >= 1");
}

int sign(const mpz_class& v) { return sgn(v); }

// ln(a + b·s) to double precision, used only to seed the exact search.
double approx_log(const AlgNum& x) {
  auto ln = [](const mpz_class& v) {
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
  };
  const double la = x.a() > 0 ? ln(x.a()) : -INFINITY;
  const double lb = x.b() > 0 ? ln(x.b()) + 0.5 * ln(x.radicand()) : -INFINITY;
  const double hi = std::max(la, lb);
  return hi + std::log1p(std::exp(std::min(la, lb) - hi));
}

}  // namespace

AlgNum::AlgNum(mpz_class a, mpz_class b, mpz_class p, unsigned long m)
    : a_(std::move(a)), b_(std::move(b)), p_(std::move(p)), m_(m) {
  if (a_ < 0 || b_ < 0) throw Error(ErrorKind::InvalidInput, "AlgNum coordinates must be >= 0");
  if (p_ < 2 || m_ == 0) throw Error(ErrorKind::InvalidInput, "AlgNum needs p >= 2 and m >= 1");
  mpz_pow_ui(radicand_.get_mpz_t(), p_.get_mpz_t(), m_);
}

AlgNum AlgNum::one_plus_root(const mpz_class& p, unsigned long m) { return AlgNum(1, 1, p, m); }

AlgNum AlgNum::operator*(const AlgNum& rhs) const {
  if (p_ != rhs.p_ || m_ != rhs.m_) {
    throw Error(ErrorKind::InvalidInput, "AlgNum operands live in different rings");
  }
  return AlgNum(a_ * rhs.a_ + b_ * rhs.b_ * radicand_, a_ * rhs.b_ + rhs.a_ * b_, p_, m_);
}

AlgNum AlgNum::pow(unsigned long e) const {
  AlgNum result(1, 0, p_, m_);
  AlgNum base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

int AlgNum::compare(const mpz_class& x) const {
  // (a - x) + b·s; when a >= x both terms are >= 0.
  const mpz_class gap = x - a_;
  if (gap <= 0) return (gap == 0 && b_ == 0) ? 0 : 1;
  // b·s versus gap > 0: compare squares.
  return sign(mpz_class(b_ * b_ * radicand_ - gap * gap));
}

mpz_class AlgNum::floor() const {
  // b·s = sqrt(b^2·p^m), so its floor is an integer square root.
  mpz_class root;
  mpz_class arg = b_ * b_ * radicand_;
  mpz_sqrt(root.get_mpz_t(), arg.get_mpz_t());
  mpz_class f = a_ + root;
  if (compare(f) < 0 || compare(f + 1) >= 0) {
    throw Error(ErrorKind::InternalInconsistency, "floor failed its bracketing check");
  }
  return f;
}

mpz_class alg_floor(const mpz_class& p, unsigned long m, unsigned long e) {
  require_inputs(p, m, e);
  return AlgNum::one_plus_root(p, m).pow(e).floor();
}

unsigned long floor_log_pow(const mpz_class& p, unsigned long m, unsigned long e) {
  require_inputs(p, m, e);
  const AlgNum x = AlgNum::one_plus_root(p, m).pow(e);

  const double estimate = approx_log(x) / std::log(p.get_d());
  unsigned long L = estimate > 1 ? static_cast<unsigned long>(estimate) - 1 : 0;
  mpz_class pl;
  mpz_pow_ui(pl.get_mpz_t(), p.get_mpz_t(), L);
  while (L > 0 && x.compare(pl) < 0) {
    --L;
    pl /= p;
  }
  while (x.compare(pl * p) >= 0) {
    ++L;
    pl *= p;
  }
  // p^L <= x < p^{L+1}
  if (x.compare(pl) < 0 || x.compare(pl * p) >= 0) {
    throw Error(ErrorKind::InternalInconsistency, "floor_log_pow failed its bracketing check");
  }
  return L;
}

}  // namespace cmt
