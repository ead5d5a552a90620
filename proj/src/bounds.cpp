#include "cmt/bounds.hpp"

#include <algorithm>
#include <vector>

#include "cmt/error.hpp"
#include "cmt/group_orders.hpp"

namespace cmt {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

void require_cap_argument(u64 n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "n must be >= 1");
  if (n > kMaxCapArgument) {
    throw Error(ErrorKind::CapExceeded, "n = " + std::to_string(n) + " is above 10^6");
  }
}

FactoredNat factored(u64 v) { return factor(mpz_class(static_cast<unsigned long>(v))); }

std::vector<u64> divisors(u64 v) {
  std::vector<u64> small, large;
  for (u64 d = 1; d * d <= v; ++d) {
    if (v % d) continue;
    small.push_back(d);
    if (d * d != v) large.push_back(v / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Largest m built from `primes[from..]` with totient(current·m) dividing target.
void search_dividing(const std::vector<u64>& primes, std::size_t from, u64 target, u64 tot,
                     u128 m, u128& best) {
  best = std::max(best, m);
  for (std::size_t j = from; j < primes.size(); ++j) {
    const u64 q = primes[j];
    u64 t = tot * (q - 1);
    if (target % t) continue;
    u128 mq = m * q;
    while (true) {
      search_dividing(primes, j + 1, target, t, mq, best);
      if (target % (t * q)) break;
      t *= q;
      mq *= q;
    }
  }
}

// Largest m built from `primes[from..]` with totient(current·m) <= budget.
void search_bounded(const std::vector<u64>& primes, std::size_t from, u64 budget, u64 tot,
                    u128 m, u128& best) {
  best = std::max(best, m);
  for (std::size_t j = from; j < primes.size(); ++j) {
    const u64 q = primes[j];
    if (tot * (q - 1) > budget) break;
    u64 t = tot * (q - 1);
    u128 mq = m * q;
    while (true) {
      search_bounded(primes, j + 1, budget, t, mq, best);
      if (t * q > budget) break;
      t *= q;
      mq *= q;
    }
  }
}

// Rounds outward from the decimal enclosure of e^γ = 1.78107...
Interval exp_gamma(mpfr_prec_t precision) {
  return Interval::from_decimal("1.781072417", "1.781072418", precision);
}

}  // namespace

u64 totient_search_bound(u64 n) { return 8 * n * n; }

u64 phi_cap_value(u64 n) {
  require_cap_argument(n);
  const u64 target = 2 * n;
  std::vector<u64> candidates;
  for (u64 d : divisors(target)) {
    if (is_prime(d + 1)) candidates.push_back(d + 1);
  }
  u128 best = 1;
  search_dividing(candidates, 0, target, 1, 1, best);
  if (best > totient_search_bound(n)) {
    throw Error(ErrorKind::InternalInconsistency, "Φ(n) exceeded the 8n^2 search bound");
  }
  return static_cast<u64>(best);
}

FactoredNat phi_cap(u64 n) { return factored(phi_cap_value(n)); }

u64 psi_cap_value(u64 n) {
  require_cap_argument(n);
  const u64 budget = 2 * n;
  const auto primes = primes_up_to(budget + 1);
  u128 best = 1;
  search_bounded(primes, 0, budget, 1, 1, best);
  if (best > totient_search_bound(n)) {
    throw Error(ErrorKind::InternalInconsistency, "Ψ(n) exceeded the 8n^2 search bound");
  }
  return static_cast<u64>(best);
}

FactoredNat psi_cap(u64 n) { return factored(psi_cap_value(n)); }

FactoredNat h_exact(u64 n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "n must be >= 1");
  if (n > kMaxHArgument) throw Error(ErrorKind::CapExceeded, "H(n) is limited to n <= 10^4");

  std::vector<FactoredNat::Factor> out;
  for (u64 q : primes_up_to(2 * n + 1)) {
    u64 r = 0;
    if (q == 2) {
      r = n;
      for (u64 pw = 1; 2 * n / pw; pw *= 2) r += 2 * n / pw;
      if (r < n - 1) throw Error(ErrorKind::InternalInconsistency, "2-exponent of H(n) below n-1");
      r -= n - 1;
    } else {
      for (u64 pw = q - 1; 2 * n / pw; pw *= q) r += 2 * n / pw;
    }
    out.push_back({static_cast<unsigned long>(q), static_cast<unsigned long>(r)});
  }
  return FactoredNat::from_factors(std::move(out));
}

FactoredNat h_gcd_oracle(unsigned n, unsigned n_max) {
  if (n == 0 || n > 8) throw Error(ErrorKind::InvalidInput, "h_gcd_oracle needs 1 <= n <= 8");
  if (n_max < 3 || n_max > 500) {
    throw Error(ErrorKind::InvalidInput, "h_gcd_oracle needs 3 <= n_max <= 500");
  }
  FactoredNat acc = gsp_order(n, 3);
  for (unsigned N = 4; N <= n_max; ++N) acc = FactoredNat::gcd(acc, gsp_order(n, N));
  return acc;
}

FactoredNat g_order_bound(unsigned n, bool p_equals_3) {
  if (n == 0 || n > 1000) throw Error(ErrorKind::InvalidInput, "G(n) needs 1 <= n <= 1000");
  return gl_order(2 * n, p_equals_3 ? 4 : 3);
}

PhiBoundsReport check_phi_bounds(u64 n) {
  PhiBoundsReport r;
  r.n = n;
  r.phi = phi_cap_value(n);
  const mpz_class phi = static_cast<unsigned long>(r.phi);
  const mpz_class nz = static_cast<unsigned long>(n);

  r.lower_bound_holds = n == 1 ? r.phi == 6 : r.phi >= 6;
  if (n > 1) {
    r.cube_root_part = Applicability::Applies;
    r.cube_root_holds = phi * phi * phi < 216 * nz * nz * nz * nz;
  }

  const u64 t = static_cast<u64>(vp(2, nz)) + 2;
  r.product_bound = Rational(2 * nz);
  u64 taken = 0;
  for (u64 p = 2; taken < t; ++p) {
    if (!is_prime(p)) continue;
    r.product_bound *= Rational(static_cast<unsigned long>(p), static_cast<unsigned long>(p - 1));
    ++taken;
  }
  r.product_bound.canonicalize();
  r.product_bound_holds = Rational(phi) <= r.product_bound;

  if (n > 3 && n % 2 == 1 && is_prime(n)) {
    r.prime_case = Applicability::Applies;
    r.prime_case_expected = is_prime(2 * n + 1) ? 4 * n + 2 : 6;
    r.prime_case_holds = r.phi == r.prime_case_expected;
  }
  return r;
}

bool check_h_bound(u64 n) {
  if (n == 0 || n > 1000) throw Error(ErrorKind::InvalidInput, "check_h_bound needs 1 <= n <= 1000");
  mpz_class rhs;
  mpz_ui_pow_ui(rhs.get_mpz_t(), 9 * n, 2 * n);
  rhs *= 2;
  return h_exact(n).value() < rhs;
}

const char* to_string(TriVerdict verdict) {
  switch (verdict) {
    case TriVerdict::Holds: return "holds";
    case TriVerdict::Fails: return "fails";
    case TriVerdict::Undecided: return "undecided";
    case TriVerdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

RosserResult rosser_schoenfeld_check(const mpz_class& m, RosserVariant variant) {
  if (m < 3) throw Error(ErrorKind::InvalidInput, "the totient lower bound needs m >= 3");
  return rosser_schoenfeld_check(m, totient(m), variant);
}

RosserResult rosser_schoenfeld_check(const mpz_class& m, const mpz_class& totient_of_m,
                                     RosserVariant variant) {
  if (m < 3) throw Error(ErrorKind::InvalidInput, "the totient lower bound needs m >= 3");
  RosserResult result;
  result.totient = totient_of_m;
  for (mpfr_prec_t precision : {64, 128, 256, 512}) {
    result.precision = precision;
    const Interval mi = Interval::from_integer(m, precision);
    const Interval loglog = mi.log().log();
    if (!loglog.is_positive()) {
      result.verdict = TriVerdict::NotApplicable;
      result.rhs.clear();
      return result;
    }
    const Interval correction =
        variant == RosserVariant::ThreeOverLogLog
            ? Interval::from_integer(3, precision) / loglog
            : Interval::from_integer(5, precision) / (Interval::from_integer(2, precision) * loglog);
    const Interval rhs = mi / (exp_gamma(precision) * loglog + correction);
    const Interval lhs = Interval::from_integer(totient_of_m, precision);
    result.rhs = rhs.to_string(15);
    if (rhs.certainly_less(lhs)) {
      result.verdict = TriVerdict::Holds;
      return result;
    }
    // totient <= rhs.lo means the strict inequality fails.
    if (mpfr_cmp_z(rhs.lo(), totient_of_m.get_mpz_t()) >= 0) {
      result.verdict = TriVerdict::Fails;
      return result;
    }
  }
  result.verdict = TriVerdict::Undecided;
  return result;
}

const char* to_string(PsiComparison comparison) {
  switch (comparison) {
    case PsiComparison::BoundHolds: return "bound-holds";
    case PsiComparison::BoundViolatedBelowThreshold: return "bound-violated-below-threshold";
    case PsiComparison::Undecided: return "undecided";
  }
  return "?";
}

PsiAnalyticReport psi_analytic_report(u64 n, const Rational& c) {
  if (n < 3) throw Error(ErrorKind::InvalidInput, "the Ψ comparison needs n >= 3");
  if (c <= 0) throw Error(ErrorKind::InvalidInput, "the constant c must be positive");
  PsiAnalyticReport r;
  r.n = n;
  r.c = c;
  r.psi = psi_cap_value(n);

  constexpr mpfr_prec_t kPrecision = 256;
  const Interval nn = Interval::from_integer(static_cast<unsigned long>(n), kPrecision);
  const Interval bound = Interval::from_rational(c, kPrecision) * nn * nn.log().log();
  r.bound = bound.to_string(15);
  const Interval psi = Interval::from_integer(static_cast<unsigned long>(r.psi), kPrecision);
  if (psi.certainly_less(bound)) {
    r.outcome = PsiComparison::BoundHolds;
  } else if (mpfr_cmp_ui(bound.hi(), r.psi) <= 0) {
    r.outcome = PsiComparison::BoundViolatedBelowThreshold;
  } else {
    r.outcome = PsiComparison::Undecided;
  }

  const Interval two_eg = Interval::from_integer(2, kPrecision) * exp_gamma(kPrecision);
  const Interval ci = Interval::from_rational(c, kPrecision);
  if (two_eg.certainly_less(ci)) {
    r.note = "c > 2e^γ: Ψ(n) < c·n·log log n holds for all sufficiently large n";
    if (c == 4) r.note += "; for c = 4 it is established for n > e^((1.001e)^9)";
    r.note += ", so small-n violations are expected";
  } else {
    r.note = "c is not above 2e^γ; no asymptotic guarantee applies";
  }
  return r;
}

}  // namespace cmt
