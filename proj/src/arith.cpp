#include "cmt/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <mutex>

#include "cmt/error.hpp"

namespace cmt {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Miller-Rabin with these bases is exact below this bound.
const mpz_class kMillerRabinBound("3317044064679887385961981");
constexpr std::array<unsigned, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

constexpr u64 kTrialLimit = 1000;

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = primes_up_to(kTrialLimit);
  return primes;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin_u64(u64 n) {
  if (n < 2) return false;
  for (unsigned a : kWitnesses) {
    if (n % a == 0) return n == a;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned a : kWitnesses) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool miller_rabin_mpz(const mpz_class& n) {
  for (unsigned a : kWitnesses) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), a)) return n == a;
  }
  mpz_class n1 = n - 1;
  mpz_class d = n1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  mpz_class x;
  for (unsigned a : kWitnesses) {
    mpz_class base = a;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n1) continue;
    bool composite = true;
    for (unsigned long r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 pollard_brent_u64(u64 n) {
  if (n % 2 == 0) return 2;
  constexpr u64 kBatch = 128;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    u64 y = 2, x = 2, ys = 2, q = 1, g = 1;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (u64 i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

mpz_class pollard_brent_mpz(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  constexpr unsigned long kBatch = 128;
  for (unsigned long c = 1;; ++c) {
    auto f = [&](const mpz_class& v) -> mpz_class { return (v * v + c) % n; };
    mpz_class y = 2, x = 2, ys = 2, q = 1, g = 1, diff;
    for (unsigned long r = 1; g == 1; r <<= 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      for (unsigned long k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (unsigned long i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          diff = abs(x - y);
          q = q * diff % n;
        }
        g = gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_cofactor(const mpz_class& n, std::vector<FactoredNat::Factor>& out) {
  if (n == 1) return;
  // Above the bound a witness still proves compositeness; only a
  // probable prime is left undecided.
  if (n >= kMillerRabinBound) {
    if (miller_rabin_mpz(n)) {
      throw Error(ErrorKind::FactorizationTooHard,
                  "cofactor " + n.get_str() + " is beyond the deterministic primality range");
    }
  } else if (is_prime(n)) {
    out.push_back({n, 1});
    return;
  }
  mpz_class d;
  if (n.fits_ulong_p()) {
    d = static_cast<unsigned long>(pollard_brent_u64(n.get_ui()));
  } else {
    d = pollard_brent_mpz(n);
  }
  split_cofactor(d, out);
  split_cofactor(n / d, out);
}

int mobius(u64 n) {
  int sign = 1;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit, std::uint64_t cap) {
  if (limit > cap) {
    throw Error(ErrorKind::CapExceeded,
                "sieve limit " + std::to_string(limit) + " exceeds cap " + std::to_string(cap));
  }
  std::vector<u64> primes;
  if (limit < 2) return primes;

  const u64 root = static_cast<u64>(std::sqrt(static_cast<long double>(limit))) + 1;
  std::vector<bool> small(root + 1, true);
  std::vector<u64> base;
  for (u64 i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (u64 j = i * i; j <= root; j += i) small[j] = false;
  }

  primes.reserve(static_cast<std::size_t>(1.3 * limit / std::log(static_cast<double>(limit) + 2)) + 8);
  constexpr u64 kSegment = u64{1} << 18;
  std::vector<char> seg(kSegment);
  for (u64 low = 0; low <= limit; low += kSegment) {
    const u64 high = std::min(limit, low + kSegment - 1);
    std::fill(seg.begin(), seg.end(), 1);
    for (u64 p : base) {
      if (p * p > high) break;
      u64 start = std::max(p * p, (low + p - 1) / p * p);
      for (u64 j = start; j <= high; j += p) seg[j - low] = 0;
    }
    for (u64 v = std::max<u64>(low, 2); v <= high; ++v) {
      if (seg[v - low]) primes.push_back(v);
    }
    if (high == limit) break;
  }
  return primes;
}

bool is_prime(std::uint64_t n) { return miller_rabin_u64(n); }

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return miller_rabin_u64(n.get_ui());
  if (n >= kMillerRabinBound) {
    throw Error(ErrorKind::CapExceeded,
                n.get_str() + " is beyond the deterministic Miller-Rabin range");
  }
  return miller_rabin_mpz(n);
}

FactoredNat factor(const mpz_class& n, unsigned cap_bits) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "factor: n must be >= 1");
  mpz_class cap;
  mpz_ui_pow_ui(cap.get_mpz_t(), 2, cap_bits);
  if (n > cap) {
    throw Error(ErrorKind::FactorizationTooHard,
                n.get_str() + " exceeds the factorization cap 2^" + std::to_string(cap_bits));
  }
  std::vector<FactoredNat::Factor> out;
  mpz_class rest = n;
  for (u64 p : small_primes()) {
    if (rest == 1) break;
    unsigned long e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), mpz_class(static_cast<unsigned long>(p)).get_mpz_t());
    if (e) out.push_back({static_cast<unsigned long>(p), e});
  }
  if (rest > 1) {
    if (rest < kTrialLimit * kTrialLimit) {
      out.push_back({rest, 1});
    } else {
      split_cofactor(rest, out);
    }
  }
  return FactoredNat::from_factors(std::move(out));
}

mpz_class totient(const mpz_class& n) {
  mpz_class result = 1;
  const FactoredNat factored = factor(n);
  for (const auto& [p, e] : factored.factors()) {
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e.get_ui() - 1);
    result *= pe * (p - 1);
  }
  return result;
}

std::int64_t vp(const mpz_class& p, const mpz_class& x) {
  if (x == 0) throw Error(ErrorKind::ZeroValuation, "v_p(0) is infinite");
  if (!is_prime(p)) throw Error(ErrorKind::InvalidInput, p.get_str() + " is not prime");
  mpz_class rest = abs(x);
  return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t()));
}

std::int64_t vp(const mpz_class& p, const Rational& x) {
  if (x == 0) throw Error(ErrorKind::ZeroValuation, "v_p(0) is infinite");
  return vp(p, mpz_class(x.get_num())) - vp(p, mpz_class(x.get_den()));
}

FactoredNat factorial_factored(std::uint64_t n) {
  if (n > kMaxFactorialArgument) {
    throw Error(ErrorKind::CapExceeded, "factorial argument above 10^6");
  }
  std::vector<FactoredNat::Factor> out;
  for (u64 p : primes_up_to(n)) {
    u64 e = 0;
    for (u64 q = n / p; q; q /= p) e += q;
    out.push_back({static_cast<unsigned long>(p), static_cast<unsigned long>(e)});
  }
  return FactoredNat::from_factors(std::move(out));
}

FactoredNat factor_prime_power_minus_one(const mpz_class& p, unsigned long k) {
  if (p < 2 || k == 0) throw Error(ErrorKind::InvalidInput, "p^k - 1 needs p >= 2, k >= 1");

  static std::mutex mutex;
  static std::map<std::pair<std::string, unsigned long>, FactoredNat> cache;
  const auto key = std::make_pair(p.get_str(), k);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  FactoredNat out;
  for (unsigned long d = 1; d <= k; ++d) {
    if (k % d) continue;
    // Phi_d(p) = prod_{e | d} (p^e - 1)^{mu(d/e)}
    mpz_class num = 1, den = 1, term;
    for (unsigned long e = 1; e <= d; ++e) {
      if (d % e) continue;
      int mu = mobius(d / e);
      if (mu == 0) continue;
      mpz_pow_ui(term.get_mpz_t(), p.get_mpz_t(), e);
      term -= 1;
      (mu > 0 ? num : den) *= term;
    }
    out *= factor(num / den);
  }

  std::lock_guard lock(mutex);
  cache.emplace(key, out);
  return out;
}

}  // namespace cmt
