#pragma once

#include <gmpxx.h>

namespace cmt {

/// a + b·s in Z[s]/(s^2 - p^m), with a, b >= 0. Used to decide floors and
/// floor-logs of (1 + sqrt(p^m))^e exactly.
class AlgNum {
 public:
  AlgNum(mpz_class a, mpz_class b, mpz_class p, unsigned long m);

  /// 1 + s
  static AlgNum one_plus_root(const mpz_class& p, unsigned long m);

  const mpz_class& a() const noexcept { return a_; }
  const mpz_class& b() const noexcept { return b_; }
  const mpz_class& p() const noexcept { return p_; }
  unsigned long m() const noexcept { return m_; }
  /// s^2 = p^m
  const mpz_class& radicand() const noexcept { return radicand_; }

  AlgNum operator*(const AlgNum& rhs) const;
  AlgNum pow(unsigned long e) const;

  /// Sign of (a + b·sqrt(p^m)) - x, decided by squaring.
  int compare(const mpz_class& x) const;

  mpz_class floor() const;

  friend bool operator==(const AlgNum&, const AlgNum&) = default;

 private:
  mpz_class a_, b_, p_;
  unsigned long m_;
  mpz_class radicand_;
};

/// floor((1 + sqrt(p^m))^e)
mpz_class alg_floor(const mpz_class& p, unsigned long m, unsigned long e);

/// Largest L with p^L <= (1 + sqrt(p^m))^e.
unsigned long floor_log_pow(const mpz_class& p, unsigned long m, unsigned long e);

}  // namespace cmt
