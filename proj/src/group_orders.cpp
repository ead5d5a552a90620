#include "cmt/group_orders.hpp"

#include <numeric>
#include <vector>

#include "cmt/arith.hpp"
#include "cmt/error.hpp"

namespace cmt {
namespace {

void require_shape(unsigned n, const mpz_class& modulus) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "matrix size parameter n must be >= 1");
  if (modulus < 2) throw Error(ErrorKind::InvalidInput, "modulus must be >= 2");
}

// p^k
FactoredNat prime_pow(const mpz_class& p, unsigned long k) {
  return FactoredNat::prime_power(p, k);
}

FactoredNat gl_field(const mpz_class& p, unsigned n) {
  // prod_{i<n} (p^n - p^i) = p^{n(n-1)/2} prod_{j=1}^{n} (p^j - 1)
  FactoredNat out = prime_pow(p, static_cast<unsigned long>(n) * (n - 1) / 2);
  for (unsigned j = 1; j <= n; ++j) out *= factor_prime_power_minus_one(p, j);
  return out;
}

FactoredNat sp_field(const mpz_class& p, unsigned n) {
  FactoredNat out = prime_pow(p, static_cast<unsigned long>(n) * n);
  for (unsigned i = 1; i <= n; ++i) out *= factor_prime_power_minus_one(p, 2 * i);
  return out;
}

FactoredNat gsp_field(const mpz_class& p, unsigned n) {
  return sp_field(p, n) * factor(p - 1);
}

template <typename FieldOrder>
FactoredNat order_by_crt(const mpz_class& modulus, unsigned long dimension, FieldOrder field) {
  FactoredNat out;
  const FactoredNat factored = factor(modulus);
  for (const auto& [p, k] : factored.factors()) {
    out *= field(p) * prime_pow(p, (k.get_ui() - 1) * dimension);
  }
  return out;
}

void require_budget(std::uint64_t modulus, unsigned entries) {
  long double count = 1;
  for (unsigned i = 0; i < entries; ++i) {
    count *= static_cast<long double>(modulus);
    if (count > static_cast<long double>(kMaxEnumerationCandidates)) {
      throw Error(ErrorKind::TooLargeForEnumeration,
                  std::to_string(modulus) + "^" + std::to_string(entries) +
                      " candidates exceed the enumeration budget");
    }
  }
}

// Determinant mod N by cofactor expansion along the first row.
std::int64_t det_mod(const std::vector<std::int64_t>& a, unsigned n, std::int64_t mod,
                     std::vector<unsigned>& cols, unsigned row) {
  if (row == n) return 1;
  std::int64_t total = 0;
  int sign = 1;
  for (unsigned idx = 0; idx < cols.size(); ++idx) {
    const unsigned c = cols[idx];
    const std::int64_t entry = a[row * n + c];
    if (entry != 0) {
      cols.erase(cols.begin() + idx);
      const std::int64_t minor = det_mod(a, n, mod, cols, row + 1);
      cols.insert(cols.begin() + idx, c);
      total = (total + sign * (entry * minor % mod) + mod) % mod;
    }
    sign = -sign;
  }
  return total;
}

}  // namespace

FactoredNat gl_order(unsigned n, const mpz_class& modulus) {
  require_shape(n, modulus);
  return order_by_crt(modulus, static_cast<unsigned long>(n) * n,
                      [n](const mpz_class& p) { return gl_field(p, n); });
}

FactoredNat sp_order(unsigned n, const mpz_class& modulus) {
  require_shape(n, modulus);
  const unsigned long dim = 2ul * n * n + n;
  return order_by_crt(modulus, dim, [n](const mpz_class& p) { return sp_field(p, n); });
}

FactoredNat gsp_order(unsigned n, const mpz_class& modulus) {
  require_shape(n, modulus);
  const unsigned long dim = 2ul * n * n + n + 1;
  return order_by_crt(modulus, dim, [n](const mpz_class& p) { return gsp_field(p, n); });
}

FactoredNat group_order(const GroupSpec& spec) {
  switch (spec.family) {
    case GroupFamily::GL: return gl_order(spec.n, spec.modulus);
    case GroupFamily::GSp: return gsp_order(spec.n, spec.modulus);
    case GroupFamily::Sp: return sp_order(spec.n, spec.modulus);
  }
  throw Error(ErrorKind::InvalidInput, "unknown group family");
}

mpz_class gl_order_bruteforce(unsigned n, std::uint64_t modulus) {
  require_shape(n, modulus);
  const unsigned entries = n * n;
  require_budget(modulus, entries);
  const auto mod = static_cast<std::int64_t>(modulus);

  std::vector<std::int64_t> a(entries, 0);
  std::vector<unsigned> cols(n);
  std::iota(cols.begin(), cols.end(), 0u);
  std::uint64_t count = 0;
  while (true) {
    if (std::gcd(det_mod(a, n, mod, cols, 0), mod) == 1) ++count;
    unsigned i = 0;
    while (i < entries && ++a[i] == mod) a[i++] = 0;
    if (i == entries) break;
  }
  return mpz_class(static_cast<unsigned long>(count));
}

mpz_class gsp_order_bruteforce(unsigned n, std::uint64_t modulus) {
  require_shape(n, modulus);
  const unsigned dim = 2 * n;
  require_budget(modulus, dim * dim);
  const auto mod = static_cast<std::int64_t>(modulus);

  // All column vectors of length 2n.
  std::uint64_t vector_count = 1;
  for (unsigned i = 0; i < dim; ++i) vector_count *= modulus;
  std::vector<std::vector<std::int64_t>> vectors(vector_count, std::vector<std::int64_t>(dim));
  for (std::uint64_t idx = 0; idx < vector_count; ++idx) {
    std::uint64_t rest = idx;
    for (unsigned i = 0; i < dim; ++i) {
      vectors[idx][i] = static_cast<std::int64_t>(rest % modulus);
      rest /= modulus;
    }
  }

  // u^T J v
  auto omega = [&](const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v) {
    std::int64_t s = 0;
    for (unsigned k = 0; k < n; ++k) s += u[k] * v[n + k] - u[n + k] * v[k];
    return ((s % mod) + mod) % mod;
  };

  // Column j is chosen only if (M^T J M)_{ij} = λ J_{ij} for every i < j.
  // λ is fixed by the pair (0, n) and must be a unit.
  std::vector<std::uint64_t> chosen(dim);
  std::uint64_t count = 0;
  auto place = [&](auto&& self, unsigned j, std::int64_t lambda) -> void {
    if (j == dim) {
      ++count;
      return;
    }
    for (std::uint64_t idx = 0; idx < vector_count; ++idx) {
      const auto& v = vectors[idx];
      std::int64_t lam = lambda;
      bool ok = true;
      for (unsigned i = 0; i < j && ok; ++i) {
        const std::int64_t w = omega(vectors[chosen[i]], v);
        if (j == i + n) {
          if (i == 0) {
            if (std::gcd(w, mod) != 1) ok = false;
            lam = w;
          } else {
            ok = (w == lam);
          }
        } else {
          ok = (w == 0);
        }
      }
      if (!ok) continue;
      chosen[j] = idx;
      self(self, j + 1, lam);
    }
  };
  place(place, 0, 0);
  return mpz_class(static_cast<unsigned long>(count));
}

}  // namespace cmt
