#include <gtest/gtest.h>

#include "oracle.hpp"
#include "thetagraph/quadratic_ring.hpp"

using namespace thetagraph;

namespace {

oracle::Quad to_oracle(const QuadInt& z) {
  return {static_cast<__int128>(static_cast<long long>(z.a())), static_cast<__int128>(static_cast<long long>(z.b()))};
}

}  // namespace

TEST(QuadraticRing, OmegaRelation) {
  const QuadInt w = QuadInt::omega();
  EXPECT_EQ(w * w, w - QuadInt(2, 0));
  EXPECT_EQ(QuadInt::pi() * QuadInt::pi_bar(), QuadInt(2, 0));
  EXPECT_EQ(QuadInt::pi() + QuadInt::pi_bar(), QuadInt(-1, 0));
  EXPECT_EQ(conj(QuadInt::pi()), QuadInt::pi_bar());
  EXPECT_EQ(QuadInt::sqrt_minus7() * QuadInt::sqrt_minus7(), QuadInt(-7, 0));
}

TEST(QuadraticRing, Norms) {
  EXPECT_EQ(norm(QuadInt::pi()), 2);
  EXPECT_EQ(norm(QuadInt::sqrt_minus7()), 7);
  EXPECT_EQ(norm(QuadInt(3, 0)), 9);
  EXPECT_EQ(norm(QuadInt(5, -8)), 113);
}

TEST(QuadraticRing, NormalizeAndUnits) {
  EXPECT_EQ(normalize(QuadInt(-3, 2)), QuadInt(3, -2));
  EXPECT_EQ(normalize(QuadInt(0, -1)), QuadInt(0, 1));
  EXPECT_TRUE(is_unit(QuadInt(-1, 0)));
  EXPECT_FALSE(is_unit(QuadInt::omega()));
  EXPECT_TRUE(are_associates(QuadInt::pi_bar(), QuadInt::omega()));
  EXPECT_FALSE(are_associates(QuadInt::pi(), QuadInt::pi_bar()));
}

TEST(QuadraticRing, DivisionTieCase) {
  // x / d with error exactly (1/2, 1/2) in plain coordinate rounding
  const QuadInt d(2, 0);
  const QuadInt x(1, 1);
  const auto [q, r] = euclid_div(x, d);
  EXPECT_EQ(q * d + r, x);
  EXPECT_LT(norm(r), norm(d));
}

TEST(QuadraticRing, DivisionByZeroThrows) {
  EXPECT_THROW(euclid_div(QuadInt(1, 1), QuadInt()), std::domain_error);
  EXPECT_THROW(gcd(QuadInt(), QuadInt()), std::invalid_argument);
  EXPECT_THROW(exact_divides(QuadInt(), QuadInt(1, 0)), std::domain_error);
}

TEST(QuadraticRing, Gcd) {
  EXPECT_EQ(gcd(QuadInt(2, 0), QuadInt::pi()), normalize(QuadInt::pi()));
  EXPECT_EQ(gcd(QuadInt(3, 0), QuadInt(5, 0)), QuadInt(1, 0));
  EXPECT_EQ(gcd(QuadInt(7, 0), QuadInt(0, 0)), QuadInt(7, 0));
}

TEST(QuadraticRing, Formatting) {
  EXPECT_EQ(to_string(QuadInt(3, 0)), "3");
  EXPECT_EQ(to_string(QuadInt(0, 1)), "1*w");
  EXPECT_EQ(to_string(QuadInt(0, -2)), "-2*w");
  EXPECT_EQ(to_string(QuadInt(1, 2)), "1+2*w");
  EXPECT_EQ(to_string(QuadInt(5, -8)), "5-8*w");
  for (const auto& z : {QuadInt(3, 0), QuadInt(0, -1), QuadInt(-4, 7), QuadInt(5, -8), QuadInt()}) {
    EXPECT_EQ(parse_quadint(to_string(z)), z);
  }
  EXPECT_EQ(parse_quadint(" 1 + 2 * w "), QuadInt(1, 2));
  EXPECT_THROW(parse_quadint("1+"), std::invalid_argument);
  EXPECT_THROW(parse_quadint("x"), std::invalid_argument);
}

TEST(QuadraticRing, FactorGoldenN5) {
  const QuadInt t = pow(QuadInt::pi(), 5) - QuadInt(1, 0);
  const RingFactorization f = factor(t);
  EXPECT_EQ(f.conjugate_frobenius_exponent(), 2);
  EXPECT_EQ(f.expand(), t);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_TRUE(are_associates(f.factors[1].prime, QuadInt(1, 2)));
  EXPECT_EQ(to_string(f), "pibar^2 * (1+2*w)");
  EXPECT_EQ(to_string(factor(pow(QuadInt::pi(), 5) + QuadInt(1, 0))), "pibar * (3-2*w)");
  EXPECT_EQ(to_string(factor(QuadInt(2, 0))), "pibar * pi");
  EXPECT_EQ(to_string(factor(QuadInt::omega())), "-1 * pibar");
}

TEST(QuadraticRing, FactorGoldenN8) {
  const RingFactorization minus = factor(pow(QuadInt::pi(), 8) - QuadInt(1, 0));
  EXPECT_EQ(minus.conjugate_frobenius_exponent(), 5);
  ASSERT_EQ(minus.factors.size(), 2u);
  EXPECT_EQ(minus.factors[1].prime, QuadInt(3, 0));
  EXPECT_EQ(minus.factors[1].kind, PrimeKind::inert);
  EXPECT_EQ(to_string(minus), "pibar^5 * 3");
  const RingFactorization plus = factor(pow(QuadInt::pi(), 8) + QuadInt(1, 0));
  EXPECT_EQ(plus.conjugate_frobenius_exponent(), 1);
  ASSERT_EQ(plus.factors.size(), 2u);
  EXPECT_EQ(norm(plus.factors[1].prime), 113);
  EXPECT_EQ(plus.expand(), pow(QuadInt::pi(), 8) + QuadInt(1, 0));
}

TEST(QuadraticRing, FactorKindsAndRoundTrip) {
  for (long long a = -40; a <= 40; ++a) {
    for (long long b = -40; b <= 40; ++b) {
      const QuadInt z(a, b);
      if (z.is_zero()) continue;
      const RingFactorization f = factor(z);
      ASSERT_EQ(f.expand(), z) << to_string(z);
      BigInt prod = 1;
      for (const auto& p : f.factors) {
        const BigInt np = norm(p.prime);
        switch (p.kind) {
          case PrimeKind::inert: EXPECT_EQ(np, BigInt(p.rational_prime) * p.rational_prime); break;
          case PrimeKind::ramified: EXPECT_EQ(np, 7); break;
          default: EXPECT_EQ(np, p.rational_prime); break;
        }
        for (int i = 0; i < p.exponent; ++i) prod *= np;
      }
      ASSERT_EQ(prod, norm(z));
    }
  }
}

TEST(QuadraticRing, FactorLargeNorm) {
  const QuadInt t = pow(QuadInt::pi(), 63) - QuadInt(1, 0);
  EXPECT_EQ(factor(t).expand(), t);
  EXPECT_THROW(factor(pow(QuadInt::pi(), 140)), std::domain_error);
}

TEST(QuadraticRing, SignedOrdersGolden) {
  // 1+2w divides pi^5 - 1, 3 divides pi^8 - 1, 5-8w divides pi^8 + 1
  EXPECT_EQ(signed_order(QuadInt(1, 2), BigInt(11)), (SignedOrder{5, -1}));
  EXPECT_EQ(signed_order(QuadInt(3, 0), BigInt(3)), (SignedOrder{4, -1}));
  EXPECT_EQ(signed_order(QuadInt(5, -8), BigInt(113)), (SignedOrder{56, -1}));
}

TEST(QuadraticRing, FastSignedOrderMatchesIteration) {
  for (int n = 2; n <= 24; ++n) {
    for (int s : {-1, 1}) {
      const RingFactorization f = factor(pow(QuadInt::pi(), n) + QuadInt(s, 0));
      for (const auto& p : f.factors) {
        if (p.rational_prime == 2) continue;
        for (int h = 1; h <= p.exponent; ++h) {
          const SignedOrder fast = signed_order(p, h);
          const QuadInt q = prime_power(p, h);
          if (norm(q) > (1 << 20)) continue;
          const auto [len, sign] = oracle::signed_order(to_oracle(q), 1u << 20);
          ASSERT_NE(len, 0u);
          EXPECT_EQ(fast.length, len) << to_string(q);
          EXPECT_EQ(fast.sign, sign) << to_string(q);
          EXPECT_EQ(signed_order(q, reduction_modulus(p, h)), fast);
        }
      }
    }
  }
}

TEST(QuadraticRing, SignedOrderRejectsBadModuli) {
  EXPECT_THROW(signed_order(QuadInt(1, 0), BigInt(1)), std::invalid_argument);
  EXPECT_THROW(signed_order(QuadInt::pi(), BigInt(2)), std::invalid_argument);
  EXPECT_THROW(signed_order(QuadInt(3, 0), BigInt(5)), std::invalid_argument);
}
