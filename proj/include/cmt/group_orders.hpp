#pragma once

#include <gmpxx.h>

#include <cstdint>

#include "cmt/factored_nat.hpp"

namespace cmt {

enum class GroupFamily { GL, GSp, Sp };

/// GL_n(Z/NZ) is n×n; GSp_{2n} and Sp_{2n} are 2n×2n.
struct GroupSpec {
  GroupFamily family;
  unsigned n;
  mpz_class modulus;
};

/// Candidate budget for the enumeration oracles.
inline constexpr std::uint64_t kMaxEnumerationCandidates = 1'000'000'000;

/// Orders by formula: CRT over the prime powers of N, the finite-field order
/// at each prime, and a factor p^{(k-1)·dim} for lifting to Z/p^kZ.
FactoredNat gl_order(unsigned n, const mpz_class& modulus);
FactoredNat gsp_order(unsigned n, const mpz_class& modulus);
FactoredNat sp_order(unsigned n, const mpz_class& modulus);
FactoredNat group_order(const GroupSpec& spec);

/// Counts matrices over Z/NZ with unit determinant. Requires N^{n^2} <= 10^9.
mpz_class gl_order_bruteforce(unsigned n, std::uint64_t modulus);

/// Counts 2n×2n matrices M over Z/NZ with M^T J M = λJ for some unit λ, where
/// J = [[0, I], [-I, 0]]. Requires N^{(2n)^2} <= 10^9.
mpz_class gsp_order_bruteforce(unsigned n, std::uint64_t modulus);

}  // namespace cmt
