#include <gtest/gtest.h>

#include "oracle.hpp"
#include "thetagraph/errors.hpp"
#include "thetagraph/koblitz_curve.hpp"
#include "thetagraph/theta_graph.hpp"

using namespace thetagraph;

namespace {

std::vector<CurvePoint> all_points(const FieldSpec& s) {
  std::vector<CurvePoint> pts{CurvePoint::at_infinity()};
  pts.push_back(CurvePoint::from_coordinates(FieldElement::zero(s), FieldElement::one(s)));
  for (std::uint64_t x = 1; x < s.order(); ++x) {
    if (auto lifted = lift_x(FieldElement(s, x))) {
      pts.push_back(lifted->first);
      pts.push_back(lifted->second);
    }
  }
  return pts;
}

}  // namespace

TEST(KoblitzCurve, PointCountMatchesBruteForce) {
  for (int n = 1; n <= 7; ++n) {
    for (std::uint64_t m : oracle::irreducibles(n)) {
      if (!(m & 1)) continue;
      const FieldSpec s = FieldSpec::from_modulus(m);
      EXPECT_EQ(count_points(s), oracle::curve_points(m)) << std::hex << m;
      EXPECT_EQ(all_points(s).size(), count_points(s));
    }
  }
}

TEST(KoblitzCurve, KnownCounts) {
  // 2^n + 1 + S(n) with S = 1, 3, -5, -1, 11
  const std::vector<std::uint64_t> expected{4, 8, 4, 16, 44};
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(count_points(FieldSpec::find_irreducible(n)), expected[n - 1]);
}

TEST(KoblitzCurve, OffCurveRejected) {
  const FieldSpec s = FieldSpec::from_modulus(0x25);
  EXPECT_THROW(CurvePoint::from_coordinates(FieldElement::zero(s), FieldElement::zero(s)), std::invalid_argument);
}

TEST(KoblitzCurve, LiftExistsExactlyOnClassA) {
  const FieldSpec s = FieldSpec::from_modulus(0x11d);
  for (std::uint64_t x = 1; x < s.order(); ++x) {
    const FieldElement e(s, x);
    EXPECT_EQ(lift_x(e).has_value(), classify(P1Point(e)) == TraceClass::A);
  }
}

TEST(KoblitzCurve, GroupLawOnSmallField) {
  const FieldSpec s = FieldSpec::from_modulus(0x25);
  const auto pts = all_points(s);
  const std::uint64_t order = pts.size();
  const CurvePoint O = CurvePoint::at_infinity();
  for (const auto& p : pts) {
    EXPECT_EQ(add(p, O), p);
    EXPECT_EQ(add(p, negate(p)), O);
    EXPECT_EQ(add(p, p), dbl(p));
    EXPECT_EQ(scalar_mul(order, p), O);
    for (const auto& q : pts) {
      EXPECT_EQ(add(p, q), add(q, p));
      for (std::size_t k = 0; k < pts.size(); k += 7) EXPECT_EQ(add(add(p, q), pts[k]), add(p, add(q, pts[k])));
    }
  }
}

TEST(KoblitzCurve, DoublingSquaresTheta) {
  const FieldSpec s = FieldSpec::from_modulus(0x11d);
  for (const auto& p : all_points(s)) {
    if (p.is_infinity() || p.x().is_zero()) continue;
    const CurvePoint d = dbl(p);
    if (d.is_infinity()) continue;
    EXPECT_EQ(d.x(), square(p.x() + inv(p.x())));
    EXPECT_EQ(conj_frobenius(p).x(), p.x() + inv(p.x()));
  }
}

TEST(KoblitzCurve, FrobeniusCharacteristicEquation) {
  // pi^2 + pi + 2 = 0 and pi * pibar = 2
  const FieldSpec s = FieldSpec::from_modulus(0x43);
  for (const auto& p : all_points(s)) {
    const CurvePoint f = frobenius(p);
    EXPECT_EQ(add(add(frobenius(f), f), dbl(p)), CurvePoint::at_infinity());
    EXPECT_EQ(frobenius(conj_frobenius(p)), dbl(p));
    EXPECT_EQ(conj_frobenius(frobenius(p)), dbl(p));
  }
}

TEST(KoblitzCurve, ClassBLiftsAreNegatedByFrobeniusPower) {
  for (std::uint64_t m : {0x7ull, 0x25ull, 0x11dull}) {
    const FieldSpec s = FieldSpec::from_modulus(m);
    const QuadraticExtension ext(s);
    const int n = s.degree();
    for (std::uint64_t x = 1; x < s.order(); ++x) {
      const FieldElement e(s, x);
      const auto [p, q] = lift_x_to_extension(ext, e);
      EXPECT_EQ(p.x(), ExtElement::embed(ext, e));
      EXPECT_EQ(q, negate(p));
      const ExtCurvePoint image = frobenius_power(p, n);
      if (classify(P1Point(e)) == TraceClass::B) {
        EXPECT_FALSE(p.y().in_base_field());
        EXPECT_EQ(image, negate(p));
      } else {
        EXPECT_EQ(image, p);
      }
    }
  }
}

TEST(KoblitzCurve, ExtensionFieldArithmetic) {
  const FieldSpec s = FieldSpec::from_modulus(0x13);
  const QuadraticExtension ext(s);
  EXPECT_EQ(s.trace(ext.constant()), 1);
  for (std::uint64_t lo = 0; lo < 16; ++lo) {
    for (std::uint64_t hi = 0; hi < 16; ++hi) {
      const ExtElement a(ext, lo, hi);
      EXPECT_EQ(square(sqrt(a)), a);
      if (!a.is_zero()) EXPECT_EQ(a * inv(a), one_like(a));
      const auto z = solve_artin_schreier(a);
      EXPECT_EQ(z.has_value(), trace(a) == 0);
      if (z) EXPECT_EQ(square(*z) + *z, a);
    }
  }
}

TEST(KoblitzCurve, CountBudget) {
  EXPECT_THROW(count_points(FieldSpec::find_irreducible(kMaxPointCountDegree + 1)), budget_exceeded);
}
