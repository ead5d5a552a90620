#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmt/arith.hpp"
#include "cmt/factored_nat.hpp"

namespace cmt {

/// Numeric invariants of a p-adic field: degree d over Q_p, ramification
/// index e and residue degree f, with d = e·f.
struct PAdicInvariants {
  mpz_class p;
  std::uint64_t d = 1;
  std::uint64_t e = 1;
  std::uint64_t f = 1;

  /// Throws InvalidInput unless p is prime, all degrees are >= 1 and d = e·f.
  void validate() const;
  mpz_class residue_cardinality() const;  // q = p^f
};

/// Inputs of the Lubin-Tate bound. μ and v come from a norm computation in
/// the base field that is not modelled here; they are taken as given.
struct LubinTateInput {
  unsigned g = 1;
  PAdicInvariants base;  // the field k
  std::uint64_t mu = 1;
  std::optional<Rational> v;  // v_p((q_k^{-1} Nr(π))^μ - 1), refined route only
  std::uint64_t d_Kk = 1;
  std::uint64_t d_K = 1;
};

struct GoodReductionInput {
  unsigned g = 1;
  mpz_class p;
  std::uint64_t mu = 1;
  std::uint64_t d_k = 1;
  std::uint64_t f_k = 1;
  std::uint64_t d_Kk = 1;
  std::optional<Rational> v;
};

enum class TheoremId {
  MT_CM,
  MT_CM_refined,
  MT_CM_good,
  MT_CM_cycl,
  MT_CM_KT,
  MT_CM_KT_good,
  val_ord,
  gsurf2,
};

const char* to_string(TheoremId id);

enum class Verdict { Passed, Failed, NotCheckable };

const char* to_string(Verdict verdict);

struct HypothesisCheck {
  std::string name;
  Verdict verdict;
  std::string detail;
};

struct NamedValue {
  std::string name;
  std::string value;
};

struct BoundReport {
  TheoremId theorem_id;
  std::vector<NamedValue> inputs;
  std::vector<HypothesisCheck> checks;
  /// Intermediate constants (Φ(g), H(g), C_g, Δ_g, L_g, ν, ...).
  std::vector<NamedValue> intermediates;
  /// The theorem's constant C, exact.
  Rational exponent_C;
  /// ceil(C); equals C for every constant currently produced.
  mpz_class exponent_ceil;
  /// Primes of the torsion cap: {p}, or the prime set of the number-field
  /// bound.
  std::vector<mpz_class> primes;
  /// Exponent of each cap prime: 2g·ceil(C).
  mpz_class cap_exponent;
  /// prod_{p in primes} p^{cap_exponent}
  FactoredNat torsion_cap;
  /// True when some checked hypothesis failed.
  bool conditional = false;
  std::string notes;
};

/// L_g(m) = floor(log_p (1 + p^{m/2})^{2g}).
unsigned long lg(unsigned g, const mpz_class& p, unsigned long m);

/// C(d, M, h) = v_p(d/d_M) + h + (d_M/2)(d_M + v_p(e_M) - 1/e_M + v_p(2)(d_M - 1)).
/// Throws DivisibilityViolation when d_M does not divide d.
Rational c_const(std::uint64_t d, std::uint64_t d_M, std::uint64_t e_M, std::uint64_t h,
                 const mpz_class& p);

/// 0 for i = 1, 2 and 2i - 5 for i >= 3.
std::uint64_t delta(std::uint64_t i);

/// refined = false is the root-of-unity route (μ < p checked); refined = true
/// checks the valuation condition on v instead.
BoundReport bound_lubin_tate(const LubinTateInput& input, bool refined);
BoundReport bound_good_reduction(const GoodReductionInput& input);
BoundReport bound_cyclotomic(unsigned g, const mpz_class& p, std::uint64_t d_K);
BoundReport bound_kummer(unsigned g, const mpz_class& p, std::uint64_t d_K);
BoundReport bound_kummer_good(unsigned g, const mpz_class& p, std::uint64_t d_K);
BoundReport bound_ordinary(unsigned g, const mpz_class& p, std::uint64_t mu,
                           std::uint64_t d_Kk_over_k, std::uint64_t f_k);

inline constexpr std::uint64_t kDefaultNumberFieldPrimeCap = 10'000'000;

/// The prime set is every prime <= floor((1 + sqrt(2)^{dh})^{2g}) together
/// with the ramified primes. Throws CapExceeded when that threshold is above
/// `prime_cap`.
BoundReport bound_number_field(unsigned g, std::uint64_t d, std::uint64_t h,
                               const std::vector<mpz_class>& ramified_primes,
                               std::uint64_t prime_cap = kDefaultNumberFieldPrimeCap);

}  // namespace cmt
