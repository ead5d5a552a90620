#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "cmt/arith.hpp"
#include "cmt/bounds.hpp"
#include "cmt/error.hpp"
#include "cmt/group_orders.hpp"
#include "oracles.hpp"

using namespace cmt;

namespace {

mpz_class product_formula_gl(unsigned n, unsigned long q) {
  mpz_class r = 1, qn, qi;
  mpz_ui_pow_ui(qn.get_mpz_t(), q, n);
  for (unsigned i = 0; i < n; ++i) {
    mpz_ui_pow_ui(qi.get_mpz_t(), q, i);
    r *= qn - qi;
  }
  return r;
}

}  // namespace

TEST(GlOrder, Examples) {
  EXPECT_EQ(gl_order(2, 3).value(), 48);
  EXPECT_EQ(gl_order(2, 4).value(), 96);
  for (unsigned long N = 2; N <= 60; ++N) {
    ASSERT_EQ(gl_order(1, N).value(), totient(N)) << N;
  }
}

TEST(GlOrder, FiniteFieldProductFormula) {
  for (unsigned long q : {2ul, 3ul, 5ul, 7ul, 11ul}) {
    for (unsigned n = 1; n <= 8; ++n) {
      ASSERT_EQ(gl_order(n, q).value(), product_formula_gl(n, q)) << n << ' ' << q;
    }
  }
}

TEST(GlOrder, MatchesLeibnizCount) {
  for (unsigned long N = 2; N <= 12; ++N) EXPECT_EQ(gl_order(1, N).value(), oracle::gl_count(1, N));
  for (unsigned long N = 2; N <= 7; ++N) EXPECT_EQ(gl_order(2, N).value(), oracle::gl_count(2, N)) << N;
  EXPECT_EQ(gl_order(3, 2).value(), oracle::gl_count(3, 2));
}

TEST(GlOrder, MatchesEnumerationWithinBudget) {
  // Every (n, N) with N^{n^2} <= 10^7, except that n = 1 stops at N = 1000.
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned long N = 2;; ++N) {
      const double cells = std::pow(static_cast<double>(N), n * n);
      if (cells > 1e7 || (n == 1 && N > 1000)) break;
      ASSERT_EQ(gl_order(n, N).value(), gl_order_bruteforce(n, N)) << n << ' ' << N;
    }
  }
}

TEST(GspOrder, MatchesEnumeration) {
  for (unsigned long N = 3; N <= 12; ++N) {
    EXPECT_EQ(gsp_order(1, N).value(), gsp_order_bruteforce(1, N)) << N;
  }
  EXPECT_EQ(gsp_order(2, 2).value(), gsp_order_bruteforce(2, 2));
  EXPECT_EQ(gsp_order(2, 3).value(), gsp_order_bruteforce(2, 3));
  EXPECT_EQ(gsp_order(2, 2).value(), 720);
  EXPECT_EQ(gsp_order(2, 3).value(), 103680);
}

TEST(GspOrder, LiftingAtSmallPrimePowers) {
  for (unsigned long N : {4ul, 8ul, 9ul}) EXPECT_EQ(gsp_order(1, N).value(), gsp_order_bruteforce(1, N)) << N;
}

TEST(GspOrder, GspTwoIsGlTwo) {
  for (unsigned long N = 2; N <= 100; ++N) ASSERT_EQ(gsp_order(1, N), gl_order(2, N)) << N;
}

TEST(SpOrder, FiniteField) {
  EXPECT_EQ(sp_order(2, 3).value(), 51840);
  EXPECT_EQ(sp_order(1, 5).value(), 120);
  for (unsigned long N = 3; N <= 30; ++N) {
    // GSp is an extension of the unit group by Sp.
    ASSERT_EQ(gsp_order(2, N).value(), sp_order(2, N).value() * totient(N)) << N;
  }
}

TEST(GroupOrders, CrtMultiplicativity) {
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned long M = 2; M <= 50; ++M) {
      for (unsigned long N = M + 1; N <= 50; ++N) {
        if (std::gcd(M, N) != 1) continue;
        ASSERT_EQ(gl_order(n, M * N), gl_order(n, M) * gl_order(n, N));
        ASSERT_EQ(gsp_order(n, M * N), gsp_order(n, M) * gsp_order(n, N));
      }
    }
  }
}

TEST(GroupOrders, DivisibleByH) {
  for (unsigned n = 1; n <= 6; ++n) {
    const FactoredNat h = h_exact(n);
    for (unsigned long N = 3; N <= 200; ++N) ASSERT_TRUE(h.divides(gsp_order(n, N))) << n << ' ' << N;
  }
}

TEST(GroupOrders, InvalidShapes) {
  EXPECT_THROW(gl_order(0, 3), Error);
  EXPECT_THROW(gl_order(2, 1), Error);
  EXPECT_THROW(group_order({GroupFamily::GSp, 1, 0}), Error);
}

TEST(GroupOrders, EnumerationBudget) {
  try {
    gl_order_bruteforce(4, 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLargeForEnumeration);
  }
}
