#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "cmt/arith.hpp"
#include "cmt/factored_nat.hpp"
#include "cmt/interval.hpp"

namespace cmt {

inline constexpr std::uint64_t kMaxCapArgument = 1'000'000;
inline constexpr std::uint64_t kMaxHArgument = 10'000;
inline constexpr unsigned kDefaultGcdModulusLimit = 200;

/// Every m with totient(m) <= 2n satisfies m <= 8n^2, since
/// totient(m) >= sqrt(m/2).
std::uint64_t totient_search_bound(std::uint64_t n);

/// Φ(n): the largest m with totient(m) dividing 2n.
std::uint64_t phi_cap_value(std::uint64_t n);
FactoredNat phi_cap(std::uint64_t n);

/// Ψ(n): the largest m with totient(m) <= 2n.
std::uint64_t psi_cap_value(std::uint64_t n);
FactoredNat psi_cap(std::uint64_t n);

/// H(n) from the closed form 2^{1-n} prod_{q <= 2n+1} q^{r(q)}.
FactoredNat h_exact(std::uint64_t n);

/// gcd of #GSp_{2n}(Z/NZ) over 3 <= N <= n_max.
FactoredNat h_gcd_oracle(unsigned n, unsigned n_max = kDefaultGcdModulusLimit);

/// G(n) = #GL_{2n}(Z/3Z), or #GL_{2n}(Z/4Z) when p = 3.
FactoredNat g_order_bound(unsigned n, bool p_equals_3);

enum class Applicability { Applies, NotApplicable };

struct PhiBoundsReport {
  std::uint64_t n = 0;
  std::uint64_t phi = 0;
  /// 6 <= Φ(n) and, for n > 1, Φ(n)^3 < 216 n^4 (the cube of 6n·n^{1/3}).
  bool lower_bound_holds = false;
  Applicability cube_root_part = Applicability::NotApplicable;
  bool cube_root_holds = true;
  /// Φ(n) <= 2n prod_{i<=t} p_i/(p_i - 1) with t = v_2(n) + 2.
  Rational product_bound;
  bool product_bound_holds = false;
  /// For odd primes n > 3: Φ(n) = 4n+2 if 2n+1 is prime, else 6.
  Applicability prime_case = Applicability::NotApplicable;
  std::uint64_t prime_case_expected = 0;
  bool prime_case_holds = true;

  bool all_hold() const {
    return lower_bound_holds && cube_root_holds && product_bound_holds && prime_case_holds;
  }
};

PhiBoundsReport check_phi_bounds(std::uint64_t n);

/// H(n) < 2(9n)^{2n}, compared as exact integers.
bool check_h_bound(std::uint64_t n);

enum class RosserVariant {
  /// totient(m) > m / (e^γ log log m + 3 / log log m)
  ThreeOverLogLog,
  /// totient(m) > m / (e^γ log log m + 5 / (2 log log m))
  FiveHalvesOverLogLog,
};

enum class TriVerdict { Holds, Fails, Undecided, NotApplicable };

const char* to_string(TriVerdict verdict);

struct RosserResult {
  TriVerdict verdict = TriVerdict::Undecided;
  mpfr_prec_t precision = 0;
  mpz_class totient;
  /// Enclosure of the right-hand side at the final precision (empty when not
  /// applicable).
  std::string rhs;
};

/// Decided with interval arithmetic at 64, 128, 256, then 512 bits, using
/// e^γ in [1.781072417, 1.781072418]. NotApplicable is reserved for
/// log log m <= 0, which no m >= 3 reaches. Throws InvalidInput for m < 3.
RosserResult rosser_schoenfeld_check(const mpz_class& m, RosserVariant variant);
RosserResult rosser_schoenfeld_check(const mpz_class& m, const mpz_class& totient_of_m,
                                     RosserVariant variant);

enum class PsiComparison { BoundHolds, BoundViolatedBelowThreshold, Undecided };

const char* to_string(PsiComparison comparison);

struct PsiAnalyticReport {
  std::uint64_t n = 0;
  Rational c;
  std::uint64_t psi = 0;
  std::string bound;  // enclosure of c·n·log log n
  PsiComparison outcome = PsiComparison::Undecided;
  std::string note;
};

/// Compares Ψ(n) against c·n·log log n. The asymptotic statement behind this
/// only applies for astronomically large n, so a violation here is reported,
/// not raised.
PsiAnalyticReport psi_analytic_report(std::uint64_t n, const Rational& c);

}  // namespace cmt
