#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace cmt {

/// A positive integer held as its prime factorization. This is the output
/// form for every table entry and bound, since most of them are far too large
/// to expand.
///
/// Invariants: primes strictly increasing, every exponent >= 1, and the empty
/// factor list represents 1. Primality of the bases is the caller's contract
/// (the constructors only normalize ordering and merge duplicates).
class FactoredNat {
 public:
  struct Factor {
    mpz_class prime;
    mpz_class exponent;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  FactoredNat() = default;

  /// Sorts, merges equal bases, and drops zero exponents. Throws InvalidInput
  /// on a base < 2 or a negative exponent.
  static FactoredNat from_factors(std::vector<Factor> factors);
  static FactoredNat prime_power(const mpz_class& prime, const mpz_class& exponent);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  mpz_class exponent_of(const mpz_class& prime) const;
  const mpz_class& largest_prime() const;

  FactoredNat& operator*=(const FactoredNat& other);
  friend FactoredNat operator*(FactoredNat lhs, const FactoredNat& rhs) {
    lhs *= rhs;
    return lhs;
  }
  FactoredNat pow(const mpz_class& k) const;

  bool divides(const FactoredNat& other) const;
  /// this / divisor; throws InternalInconsistency when the quotient is not
  /// integral.
  FactoredNat divide_exact(const FactoredNat& divisor) const;
  static FactoredNat gcd(const FactoredNat& a, const FactoredNat& b);

  /// Upper estimate of log2 of the value.
  double log2() const;
  /// Expands the product. Throws CapExceeded when the value would need more
  /// than `max_bits` bits.
  mpz_class value(double max_bits = 1 << 22) const;

  /// `2^4 · 3`; exponent 1 is omitted and 1 prints as `1`.
  std::string to_string() const;

  friend bool operator==(const FactoredNat&, const FactoredNat&) = default;

 private:
  std::vector<Factor> factors_;
};

}  // namespace cmt
