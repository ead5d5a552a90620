#pragma once

// Slow, independent reference implementations. Nothing here calls into the
// library's search or formula code.

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline u64 naive_gcd_count(u64 n) {
  u64 count = 0;
  for (u64 k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
  return count;
}

// totient[m] for 0 <= m <= limit.
inline std::vector<u64> totient_sieve(u64 limit) {
  std::vector<u64> phi(limit + 1);
  std::iota(phi.begin(), phi.end(), u64{0});
  for (u64 p = 2; p <= limit; ++p) {
    if (phi[p] != p) continue;
    for (u64 k = p; k <= limit; k += p) phi[k] -= phi[k] / p;
  }
  return phi;
}

// Largest m <= 8n^2 with phi(m) | 2n, by scanning every m.
inline u64 phi_cap_scan(u64 n, const std::vector<u64>& phi) {
  u64 best = 0;
  for (u64 m = 1; m <= 8 * n * n && m < phi.size(); ++m) {
    if ((2 * n) % phi[m] == 0) best = m;
  }
  return best;
}

inline u64 psi_cap_scan(u64 n, const std::vector<u64>& phi) {
  u64 best = 0;
  for (u64 m = 1; m <= 8 * n * n && m < phi.size(); ++m) {
    if (phi[m] <= 2 * n) best = m;
  }
  return best;
}

inline bool naive_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// floor((1 + sqrt(p^m))^e) from a directed-rounding enclosure; nullopt when
// the enclosure straddles an integer.
inline std::optional<mpz_class> interval_alg_floor(unsigned long p, unsigned long m, unsigned long e,
                                                   mpfr_prec_t prec = 200) {
  mpfr_t lo, hi;
  mpfr_inits2(prec, lo, hi, static_cast<mpfr_ptr>(nullptr));
  mpz_class pm;
  mpz_ui_pow_ui(pm.get_mpz_t(), p, m);
  mpfr_set_z(lo, pm.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi, pm.get_mpz_t(), MPFR_RNDU);
  mpfr_sqrt(lo, lo, MPFR_RNDD);
  mpfr_sqrt(hi, hi, MPFR_RNDU);
  mpfr_add_ui(lo, lo, 1, MPFR_RNDD);
  mpfr_add_ui(hi, hi, 1, MPFR_RNDU);
  mpfr_pow_ui(lo, lo, e, MPFR_RNDD);
  mpfr_pow_ui(hi, hi, e, MPFR_RNDU);
  mpz_class flo, fhi;
  mpfr_get_z(flo.get_mpz_t(), lo, MPFR_RNDD);
  mpfr_get_z(fhi.get_mpz_t(), hi, MPFR_RNDD);
  mpfr_clears(lo, hi, static_cast<mpfr_ptr>(nullptr));
  if (flo != fhi) return std::nullopt;
  return flo;
}

// floor(log_p((1 + p^{m/2})^{2g})), nullopt when undecided at this precision.
inline std::optional<unsigned long> interval_lg(unsigned g, unsigned long p, unsigned long m,
                                                mpfr_prec_t prec = 256) {
  mpfr_t lo, hi, lp_lo, lp_hi;
  mpfr_inits2(prec, lo, hi, lp_lo, lp_hi, static_cast<mpfr_ptr>(nullptr));
  // log(1 + p^{m/2}) = (m/2) log p + log1p(p^{-m/2}), enclosed from both sides.
  mpfr_set_ui(lp_lo, p, MPFR_RNDD);
  mpfr_log(lp_lo, lp_lo, MPFR_RNDD);
  mpfr_set_ui(lp_hi, p, MPFR_RNDU);
  mpfr_log(lp_hi, lp_hi, MPFR_RNDU);
  mpfr_set_ui(lo, p, MPFR_RNDD);
  mpfr_set_ui(hi, p, MPFR_RNDU);
  mpfr_rec_sqrt(lo, lo, MPFR_RNDD);
  mpfr_rec_sqrt(hi, hi, MPFR_RNDU);
  mpfr_pow_ui(lo, lo, m, MPFR_RNDD);
  mpfr_pow_ui(hi, hi, m, MPFR_RNDU);
  mpfr_log1p(lo, lo, MPFR_RNDD);
  mpfr_log1p(hi, hi, MPFR_RNDU);
  mpfr_div(lo, lo, lp_hi, MPFR_RNDD);
  mpfr_div(hi, hi, lp_lo, MPFR_RNDU);
  mpfr_add_d(lo, lo, static_cast<double>(m) / 2, MPFR_RNDD);
  mpfr_add_d(hi, hi, static_cast<double>(m) / 2, MPFR_RNDU);
  mpfr_mul_ui(lo, lo, 2 * g, MPFR_RNDD);
  mpfr_mul_ui(hi, hi, 2 * g, MPFR_RNDU);
  mpz_class flo, fhi;
  mpfr_get_z(flo.get_mpz_t(), lo, MPFR_RNDD);
  mpfr_get_z(fhi.get_mpz_t(), hi, MPFR_RNDD);
  mpfr_clears(lo, hi, lp_lo, lp_hi, static_cast<mpfr_ptr>(nullptr));
  if (flo != fhi) return std::nullopt;
  return flo.get_ui();
}

// #GL_n(Z/NZ) by counting matrices with unit determinant, the determinant
// taken by the Leibniz expansion.
inline u64 gl_count(unsigned n, u64 N) {
  const unsigned cells = n * n;
  std::vector<u64> a(cells, 0);
  std::vector<unsigned> perm(n);
  u64 count = 0;
  while (true) {
    std::iota(perm.begin(), perm.end(), 0u);
    __int128 det = 0;
    do {
      int sign = 1;
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
          if (perm[i] > perm[j]) sign = -sign;
      __int128 term = sign;
      for (unsigned i = 0; i < n; ++i) term = term * static_cast<__int128>(a[i * n + perm[i]]) % N;
      det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    const u64 d = static_cast<u64>((det % static_cast<__int128>(N) + N) % N);
    count += std::gcd(d, N) == 1;
    unsigned k = 0;
    while (k < cells && ++a[k] == N) a[k++] = 0;
    if (k == cells) break;
  }
  return count;
}

}  // namespace oracle
