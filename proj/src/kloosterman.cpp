#include "thetagraph/kloosterman.hpp"

#include <numeric>
#include <stdexcept>

#include "thetagraph/errors.hpp"
#include "thetagraph/number_theory.hpp"
#include "thetagraph/parallel.hpp"

namespace thetagraph {

std::int64_t kloosterman_direct(const FieldSpec& spec, unsigned threads) {
  if (spec.degree() > kMaxKloostermanDirectDegree) {
    throw budget_exceeded("kloosterman_direct", spec.degree(), kMaxKloostermanDirectDegree);
  }
  std::vector<std::int64_t> partial(std::max(1u, threads), 0);
  parallel_ranges(1, spec.order(), threads, [&](unsigned t, std::uint64_t lo, std::uint64_t hi) {
    std::int64_t sum = 0;
    for (std::uint64_t x = lo; x < hi; ++x) sum += spec.trace(x ^ spec.inv(x)) ? -1 : 1;
    partial[t] = sum;
  });
  return std::accumulate(partial.begin(), partial.end(), std::int64_t{0});
}

BigInt kloosterman_recurrence(int n) {
  if (n < 1) throw std::invalid_argument("kloosterman_recurrence: n must be positive");
  BigInt prev = 2, cur = -1;  // t_0, t_1
  for (int k = 2; k <= n; ++k) {
    BigInt next = -cur - 2 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return -cur;
}

bool check_doubling_identity(int n) {
  const BigInt s = kloosterman_recurrence(n);
  const BigInt s2 = kloosterman_recurrence(2 * n);
  return s2 == -s * s + (BigInt(1) << (n + 1));
}

std::string_view to_string(KloostermanMethod m) noexcept {
  return m == KloostermanMethod::direct ? "direct" : "recurrence";
}

bool KloostermanReport::all_pass() const noexcept {
  for (const auto& c : congruence_checks) {
    if (!c.pass) return false;
  }
  return true;
}

namespace {

BigInt residue(const BigInt& x, const BigInt& m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  return r;
}

CongruenceCheck make_check(const BigInt& value, const BigInt& modulus, const BigInt& expected) {
  CongruenceCheck c;
  c.modulus = modulus;
  c.expected_residue = residue(expected, modulus);
  c.pass = residue(value, modulus) == c.expected_residue;
  return c;
}

}  // namespace

KloostermanReport check_congruences(int n) {
  KloostermanReport report;
  report.n = n;
  report.value = kloosterman_recurrence(n);
  report.method = KloostermanMethod::recurrence;
  if (n == 1) return report;
  if (n % 2 == 1) {
    report.congruence_checks.push_back(make_check(report.value, 8, 3));
  } else if (n != 2) {
    report.congruence_checks.push_back(make_check(report.value, 8, -1));
  }
  if (n != 2 && n != 4) {
    const int l = two_adic_valuation(static_cast<std::uint64_t>(n));
    const BigInt low = BigInt(1) << (l + 2);
    report.congruence_checks.push_back(make_check(report.value, low, -1));
    report.congruence_checks.push_back(make_check(report.value, BigInt(1) << (l + 3), low - 1));
  }
  return report;
}

}  // namespace thetagraph
