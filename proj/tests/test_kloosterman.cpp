#include <gtest/gtest.h>

#include "oracle.hpp"
#include "thetagraph/errors.hpp"
#include "thetagraph/kloosterman.hpp"

using namespace thetagraph;

TEST(Kloosterman, SmallValues) {
  const std::vector<long long> expected{1, 3, -5, -1, 11, -9, -13, 31};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(kloosterman_recurrence(n), expected[n - 1]) << n;
}

TEST(Kloosterman, RecurrenceMatchesClosedForm) {
  for (int n = 1; n <= 60; ++n) EXPECT_EQ(kloosterman_recurrence(n), oracle::kloosterman_closed(n)) << n;
}

TEST(Kloosterman, DirectMatchesBruteForce) {
  for (int n = 1; n <= 10; ++n) {
    for (std::uint64_t m : oracle::irreducibles(n)) {
      if (!(m & 1)) continue;
      EXPECT_EQ(kloosterman_direct(FieldSpec::from_modulus(m)), oracle::kloosterman(m)) << std::hex << m;
    }
  }
}

TEST(Kloosterman, DirectIndependentOfThreads) {
  const FieldSpec s = FieldSpec::find_irreducible(16);
  EXPECT_EQ(kloosterman_direct(s, 1), kloosterman_direct(s, 3));
}

TEST(Kloosterman, Doubling) {
  for (int n = 1; n <= 40; ++n) EXPECT_TRUE(check_doubling_identity(n)) << n;
}

TEST(Kloosterman, CongruenceReport) {
  EXPECT_TRUE(check_congruences(1).congruence_checks.empty());
  EXPECT_TRUE(check_congruences(2).congruence_checks.empty());
  const KloostermanReport r12 = check_congruences(12);
  ASSERT_EQ(r12.congruence_checks.size(), 3u);
  EXPECT_EQ(r12.congruence_checks[1].modulus, 16);
  EXPECT_EQ(r12.congruence_checks[2].expected_residue, 15);
  for (int n = 1; n <= 200; ++n) EXPECT_TRUE(check_congruences(n).all_pass()) << n;
}

TEST(Kloosterman, InvalidInputs) {
  EXPECT_THROW(kloosterman_recurrence(0), std::invalid_argument);
  EXPECT_THROW(kloosterman_direct(FieldSpec::find_irreducible(kMaxKloostermanDirectDegree + 1)), budget_exceeded);
}
