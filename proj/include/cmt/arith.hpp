#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "cmt/factored_nat.hpp"

namespace cmt {

using Rational = mpq_class;

inline constexpr std::uint64_t kDefaultSieveCap = std::uint64_t{1} << 34;
inline constexpr unsigned kDefaultFactorCapBits = 96;
inline constexpr std::uint64_t kMaxFactorialArgument = 1'000'000;

/// Primes <= limit in ascending order (segmented sieve). Throws CapExceeded
/// when limit > cap.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit,
                                        std::uint64_t cap = kDefaultSieveCap);

/// Deterministic Miller-Rabin with the first thirteen prime bases, which is
/// exact below 3317044064679887385961981. Larger inputs throw CapExceeded.
bool is_prime(const mpz_class& n);
bool is_prime(std::uint64_t n);

/// Trial division, then Pollard-Brent on the cofactor. Throws InvalidInput for
/// n < 1 and FactorizationTooHard when n needs more than `cap_bits` bits.
FactoredNat factor(const mpz_class& n, unsigned cap_bits = kDefaultFactorCapBits);

mpz_class totient(const mpz_class& n);

/// p-adic valuation. Throws ZeroValuation for x = 0 and InvalidInput when p is
/// not prime.
std::int64_t vp(const mpz_class& p, const mpz_class& x);
std::int64_t vp(const mpz_class& p, const Rational& x);

/// n! by Legendre's formula; n <= 10^6.
FactoredNat factorial_factored(std::uint64_t n);

/// p^k - 1 factored through its cyclotomic parts, so each piece handed to
/// `factor` is at most Phi_d(p) rather than the whole difference.
FactoredNat factor_prime_power_minus_one(const mpz_class& p, unsigned long k);

}  // namespace cmt
