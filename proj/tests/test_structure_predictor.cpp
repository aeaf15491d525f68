#include <gtest/gtest.h>

#include "oracle.hpp"
#include "thetagraph/errors.hpp"
#include "thetagraph/kloosterman.hpp"
#include "thetagraph/number_theory.hpp"
#include "thetagraph/structure_predictor.hpp"

using namespace thetagraph;

TEST(StructurePredictor, GoldenN5) {
  const PredictedStructure a = predict(5, TraceClass::A);
  EXPECT_EQ(a.e0, 2);
  EXPECT_EQ(a.totals, (std::vector<CycleRecord>{{1, 1, 2}, {5, 1, 2}}));
  const PredictedStructure b = predict(5, TraceClass::B);
  EXPECT_EQ(b.e0, 1);
  EXPECT_EQ(b.totals, (std::vector<CycleRecord>{{5, 1, 1}}));
}

TEST(StructurePredictor, GoldenN8) {
  const PredictedStructure a = predict(8, TraceClass::A);
  EXPECT_EQ(a.e0, 5);
  EXPECT_EQ(a.totals, (std::vector<CycleRecord>{{1, 1, 5}, {4, 1, 5}}));
  const PredictedStructure b = predict(8, TraceClass::B);
  EXPECT_EQ(b.totals, (std::vector<CycleRecord>{{56, 1, 1}}));
}

TEST(StructurePredictor, OrderCensus) {
  const auto comps5 = components_of(factor(structure_target(5, TraceClass::A)));
  ASSERT_EQ(comps5.size(), 1u);
  EXPECT_EQ(order_census(comps5[0], 0), 1);
  EXPECT_EQ(order_census(comps5[0], 1), 10);
  const auto comps8 = components_of(factor(structure_target(8, TraceClass::A)));
  ASSERT_EQ(comps8.size(), 1u);
  EXPECT_EQ(comps8[0].kind, ComponentKind::inert);
  EXPECT_EQ(order_census(comps8[0], 1), 8);
  EXPECT_THROW(order_census(comps8[0], 2), std::out_of_range);
}

TEST(StructurePredictor, RamifiedCensusSumsToNorm) {
  const ComponentSpec c{QuadInt::sqrt_minus7(), 3, ComponentKind::ramified, 7};
  EXPECT_EQ(max_order_index(c), 2);
  BigInt total = 0;
  for (int h = 0; h <= max_order_index(c); ++h) total += order_census(c, h);
  EXPECT_EQ(total, 343);
}

TEST(StructurePredictor, EmptyB2) {
  const PredictedStructure b = predict(2, TraceClass::B);
  EXPECT_TRUE(b.totals.empty());
  EXPECT_THROW(predict(1, TraceClass::B), std::invalid_argument);
  EXPECT_THROW(predict(0, TraceClass::A), std::invalid_argument);
  EXPECT_THROW(predict(64, TraceClass::A), std::invalid_argument);
}

TEST(StructurePredictor, TreeProfiles) {
  EXPECT_EQ(tree_profile(TraceClass::A, false, 3), (std::vector<std::uint64_t>{1, 2, 4}));
  EXPECT_EQ(tree_profile(TraceClass::A, true, 3), (std::vector<std::uint64_t>{1, 1, 2}));
  EXPECT_EQ(tree_profile(TraceClass::B, false, 1), (std::vector<std::uint64_t>{1}));
  EXPECT_THROW(tree_profile(TraceClass::B, true, 1), std::invalid_argument);
}

TEST(StructurePredictor, DepthAndMassForAllDegrees) {
  for (int n = 2; n <= kMaxPredictDegree; ++n) {
    for (TraceClass c : {TraceClass::A, TraceClass::B}) {
      const PredictedStructure p = predict(n, c);
      const int expected_e0 = c == TraceClass::A ? two_adic_valuation(static_cast<std::uint64_t>(n)) + 2 : 1;
      ASSERT_EQ(p.e0, expected_e0) << n;
      BigInt mass = 0, cyc = 0;
      for (const auto& oc : p.classes) {
        mass += oc.point_count;
        // Signs read at each component's own order can miss a sign flip at the lcm.
        EXPECT_TRUE(oc.period == oc.sign_agreement_period || oc.period == 2 * oc.sign_agreement_period)
            << "n=" << n << " class " << to_string(c);
      }
      EXPECT_EQ(mass << p.e0, norm(p.target)) << n;
      for (const auto& r : p.totals) cyc += BigInt(r.length) * r.count;
      // Cyclic x-values: +-P share one, and for A the point at infinity gives x = inf.
      const BigInt cyclic_points = norm(p.target) >> p.e0;
      EXPECT_EQ(cyc, c == TraceClass::A ? BigInt((cyclic_points - 1) / 2 + 1) : BigInt(cyclic_points / 2)) << n;
    }
  }
}

TEST(StructurePredictor, SignsMustAgreeAtTheLcm) {
  // pi^9 + 1 = pibar (1-2w)(5-4w): pibar has signed orders (3, -1) and (6, -1)
  // modulo the two odd primes. At k = 6 it is +1 on one and -1 on the other.
  const PredictedStructure b = predict(9, TraceClass::B);
  EXPECT_EQ(b.totals, (std::vector<CycleRecord>{{3, 1, 1}, {6, 3, 1}, {12, 9, 1}}));
  bool seen = false;
  for (const auto& oc : b.classes) {
    if (oc.h == std::vector<int>{1, 1}) {
      EXPECT_EQ(oc.period, 12u);
      EXPECT_EQ(oc.sign_agreement_period, 6u);
      seen = true;
    }
  }
  EXPECT_TRUE(seen);
  const std::uint64_t m = FieldSpec::find_irreducible(9).modulus();
  const auto facts = oracle::graph_facts(oracle::theta_map(m), oracle::theta_classes(m));
  EXPECT_EQ(facts.cycles.at({1, 12, 1}), 9u);
}

TEST(StructurePredictor, MatchesBruteForceGraphs) {
  for (int n = 2; n <= 11; ++n) {
    const std::uint64_t m = FieldSpec::find_irreducible(n).modulus();
    const auto facts = oracle::graph_facts(oracle::theta_map(m), oracle::theta_classes(m));
    std::map<std::tuple<int, std::uint64_t, int>, std::uint64_t> predicted;
    for (TraceClass c : {TraceClass::A, TraceClass::B}) {
      for (const auto& r : predict(n, c).totals) predicted[{static_cast<int>(c), r.length, r.tree_depth}] += r.count;
    }
    EXPECT_EQ(predicted, facts.cycles) << n;
  }
}

TEST(StructurePredictor, VerifyPassesEveryModulusUpToTen) {
  for (int n = 1; n <= 10; ++n) {
    for (std::uint64_t m : oracle::irreducibles(n)) {
      if (!(m & 1)) continue;
      const VerificationReport r = verify(FieldSpec::from_modulus(m));
      for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << std::hex << m << " " << c.name << ": " << c.detail;
    }
  }
}

TEST(StructurePredictor, VerifyBudget) { EXPECT_THROW(verify(kMaxVerifyDegree + 1), budget_exceeded); }
