#include <gtest/gtest.h>

#include <random>

#include "cmt/arith.hpp"
#include "cmt/constants.hpp"
#include "cmt/error.hpp"
#include "cmt/factored_nat.hpp"

using namespace cmt;

namespace {

constexpr unsigned long kGridPrimes[] = {2, 3, 5, 7};

FactoredNat random_factored(std::mt19937_64& rng) {
  static const unsigned long primes[] = {2, 3, 5, 7, 11, 13, 101, 65537};
  std::vector<FactoredNat::Factor> v;
  for (unsigned long p : primes) {
    const unsigned long e = rng() % 4;
    if (e) v.push_back({p, e});
  }
  return FactoredNat::from_factors(v);
}

}  // namespace

TEST(FactoredNatProperties, CanonicalForm) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const FactoredNat a = random_factored(rng), b = random_factored(rng);
    const FactoredNat c = a * b;
    const auto& f = c.factors();
    for (std::size_t k = 0; k < f.size(); ++k) {
      ASSERT_GE(f[k].exponent, 1);
      if (k) ASSERT_LT(f[k - 1].prime, f[k].prime);
    }
    ASSERT_EQ(c.value(), a.value() * b.value());
    ASSERT_TRUE(a.divides(c));
    ASSERT_EQ(c.divide_exact(b), a);
    ASSERT_EQ(FactoredNat::gcd(a, b).value(), gcd(a.value(), b.value()));
    if (c.log2() < 90) ASSERT_EQ(factor(c.value()), c);
  }
}

TEST(FactoredNatProperties, MergesAndRejects) {
  const auto x = FactoredNat::from_factors({{3, 1}, {2, 2}, {3, 2}, {5, 0}});
  EXPECT_EQ(x.to_string(), "2^2 · 3^3");
  EXPECT_EQ(FactoredNat().to_string(), "1");
  EXPECT_THROW(FactoredNat::from_factors({{1, 2}}), Error);
  EXPECT_THROW(FactoredNat::from_factors({{2, -1}}), Error);
  EXPECT_THROW(FactoredNat::prime_power(2, 100).divide_exact(FactoredNat::prime_power(3, 1)), Error);
  EXPECT_THROW(FactoredNat::prime_power(2, mpz_class(1) << 40).value(), Error);
}

TEST(LgProperties, Grid) {
  for (unsigned long p : kGridPrimes) {
    const unsigned long v2 = p == 2 ? 1 : 0;
    for (unsigned g = 1; g <= 16; ++g) {
      for (unsigned long m = 1; m <= 200; ++m) {
        const unsigned long l = lg(g, p, m);
        ASSERT_LE(m * g, l) << g << ' ' << p << ' ' << m;
        ASSERT_LT(l, g * (m + 1 + v2)) << g << ' ' << p << ' ' << m;
        if (!(p == 2 && m <= 2)) ASSERT_LT(l, g * (m + 1)) << g << ' ' << p << ' ' << m;
        if (m >= 8 * g) ASSERT_EQ(l, m * g) << g << ' ' << p << ' ' << m;
      }
    }
  }
}

TEST(BoundProperties, CapExponentIsTwoGC) {
  for (unsigned g = 1; g <= 3; ++g) {
    for (unsigned long p : kGridPrimes) {
      for (const BoundReport& r : {bound_cyclotomic(g, p, 2), bound_kummer(g, p, 2), bound_kummer_good(g, p, 2),
                                   bound_ordinary(g, p, 1, 2, 1)}) {
        ASSERT_EQ(r.cap_exponent, 2 * g * r.exponent_ceil);
        ASSERT_EQ(r.torsion_cap, FactoredNat::prime_power(p, r.cap_exponent));
      }
    }
  }
}

TEST(BoundProperties, GoodReductionNeverExceedsLubinTate) {
  for (unsigned g = 1; g <= 3; ++g) {
    for (unsigned long p : kGridPrimes) {
      for (std::uint64_t mu = 1; mu <= 4; ++mu) {
        for (std::uint64_t d_k : {1u, 2u, 3u, 4u}) {
          for (std::uint64_t f_k = 1; f_k <= d_k; ++f_k) {
            if (d_k % f_k) continue;
            for (std::uint64_t mult = 1; mult <= 3; ++mult) {
              LubinTateInput lt;
              lt.g = g;
              lt.base = {p, d_k, d_k / f_k, f_k};
              lt.mu = mu;
              lt.d_K = mult;
              lt.d_Kk = d_k * mult;
              const BoundReport a = bound_lubin_tate(lt, true);
              // The minimal admissible valuation: one above the threshold.
              const Rational v = Rational(mpz_class(a.intermediates.front().value)) + 1;
              lt.v = v;
              ASSERT_FALSE(bound_lubin_tate(lt, true).checks.front().verdict == Verdict::Failed);
              const GoodReductionInput good{g, p, mu, d_k, f_k, lt.d_Kk, v};
              const BoundReport b = bound_good_reduction(good);
              ASSERT_LE(b.exponent_C, a.exponent_C) << g << ' ' << p << ' ' << mu << ' ' << d_k;
            }
          }
        }
      }
    }
  }
}

TEST(BoundProperties, MonotoneInGenusAndMu) {
  for (unsigned long p : kGridPrimes) {
    for (unsigned g = 1; g < 4; ++g) {
      for (std::uint64_t x = 1; x <= 8; ++x) {
        EXPECT_LE(bound_cyclotomic(g, p, x).exponent_C, bound_cyclotomic(g + 1, p, x).exponent_C);
        EXPECT_LE(bound_kummer(g, p, x).exponent_C, bound_kummer(g + 1, p, x).exponent_C);
        EXPECT_LE(bound_kummer_good(g, p, x).exponent_C, bound_kummer_good(g + 1, p, x).exponent_C);
        EXPECT_LE(bound_ordinary(g, p, x, 1, 1).exponent_C, bound_ordinary(g + 1, p, x, 1, 1).exponent_C);
      }
    }
    for (unsigned g = 1; g <= 4; ++g) {
      for (std::uint64_t mu = 1; mu < 8; ++mu) {
        LubinTateInput a;
        a.g = g;
        a.base = {p, 1, 1, 1};
        a.mu = mu;
        LubinTateInput b = a;
        b.mu = mu + 1;
        EXPECT_LE(bound_lubin_tate(a, false).exponent_C, bound_lubin_tate(b, false).exponent_C);
        const GoodReductionInput ga{g, p, mu, 1, 1, 1, std::nullopt}, gb{g, p, mu + 1, 1, 1, 1, std::nullopt};
        EXPECT_LE(bound_good_reduction(ga).exponent_C, bound_good_reduction(gb).exponent_C);
        EXPECT_LE(bound_ordinary(g, p, mu, 1, 1).exponent_C, bound_ordinary(g, p, mu + 1, 1, 1).exponent_C);
      }
    }
  }
}

TEST(BoundProperties, MonotoneInDegrees) {
  for (unsigned long p : kGridPrimes) {
    for (unsigned g = 1; g <= 4; ++g) {
      for (std::uint64_t x = 1; x <= 8; ++x) {
        // Cyclotomic and composite degrees enter linearly.
        EXPECT_LE(bound_cyclotomic(g, p, x).exponent_C, bound_cyclotomic(g, p, x + 1).exponent_C);
        EXPECT_LE(bound_ordinary(g, p, 1, x, 1).exponent_C, bound_ordinary(g, p, 1, x + 1, 1).exponent_C);
        EXPECT_LE(bound_ordinary(g, p, 1, 1, x).exponent_C, bound_ordinary(g, p, 1, 1, x + 1).exponent_C);
        LubinTateInput a;
        a.g = g;
        a.base = {p, 1, 1, 1};
        a.d_K = a.d_Kk = x;
        LubinTateInput b = a;
        b.d_K = b.d_Kk = x + 1;
        EXPECT_LE(bound_lubin_tate(a, false).exponent_C, bound_lubin_tate(b, false).exponent_C);
        // The good-reduction and Kummer constants carry a valuation of the
        // degree, so they grow along divisibility rather than size.
        for (std::uint64_t k = 2; x * k <= 8; ++k) {
          const GoodReductionInput ga{g, p, 1, 1, 1, x, std::nullopt}, gb{g, p, 1, 1, 1, x * k, std::nullopt};
          EXPECT_LE(bound_good_reduction(ga).exponent_C, bound_good_reduction(gb).exponent_C);
          EXPECT_LE(bound_kummer(g, p, x).exponent_C, bound_kummer(g, p, x * k).exponent_C);
          EXPECT_LE(bound_kummer_good(g, p, x).exponent_C, bound_kummer_good(g, p, x * k).exponent_C);
        }
      }
    }
  }
}

TEST(BoundProperties, NotMonotoneInDegreeSize) {
  // d_K = 3 -> 4 at p = 3: the multiplier p^{v_p(d_K)}·d_K drops from 9 to 4.
  EXPECT_GT(bound_kummer(1, 3, 3).exponent_C, bound_kummer(1, 3, 4).exponent_C);
  const GoodReductionInput a{2, 2, 1, 1, 1, 2, std::nullopt}, b{2, 2, 1, 1, 1, 3, std::nullopt};
  EXPECT_GT(bound_good_reduction(a).exponent_C, bound_good_reduction(b).exponent_C);
}

TEST(BoundProperties, NumberFieldMonotone) {
  for (unsigned g = 1; g <= 3; ++g) {
    for (std::uint64_t d = 1; d <= 2; ++d) {
      for (std::uint64_t h = 1; h <= 2; ++h) {
        const BoundReport base = bound_number_field(g, d, h, {});
        for (const BoundReport& bigger : {bound_number_field(g, d + 1, h, {}), bound_number_field(g, d, h + 1, {})}) {
          EXPECT_LE(base.exponent_C, bigger.exponent_C);
          EXPECT_LE(base.primes.size(), bigger.primes.size());
        }
        if (g < 3) EXPECT_LE(base.exponent_C, bound_number_field(g + 1, d, h, {}).exponent_C);
      }
    }
  }
}
