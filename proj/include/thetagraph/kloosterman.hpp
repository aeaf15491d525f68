#pragma once

// The binary Kloosterman sum S(n) = sum over x in F_{2^n}^* of (-1)^Tr(x + 1/x).

#include <cstdint>
#include <string_view>
#include <vector>

#include "thetagraph/binary_field.hpp"
#include "thetagraph/quadratic_ring.hpp"

namespace thetagraph {

inline constexpr int kMaxKloostermanDirectDegree = 24;

/// Exact signed sum over the field. Throws budget_exceeded for n > 24.
std::int64_t kloosterman_direct(const FieldSpec& spec, unsigned threads = 1);

/// S(n) = -(pi^n + pibar^n), from t_0 = 2, t_1 = -1, t_k = -t_{k-1} - 2 t_{k-2}.
BigInt kloosterman_recurrence(int n);

/// S(2n) == -S(n)^2 + 2^(n+1).
bool check_doubling_identity(int n);

enum class KloostermanMethod { direct, recurrence };

std::string_view to_string(KloostermanMethod m) noexcept;

struct CongruenceCheck {
  BigInt modulus;
  /// In [0, modulus).
  BigInt expected_residue;
  bool pass = false;
};

struct KloostermanReport {
  int n = 0;
  BigInt value;
  KloostermanMethod method = KloostermanMethod::recurrence;
  std::vector<CongruenceCheck> congruence_checks;

  bool all_pass() const noexcept;
};

/// Evaluates the 2-adic congruences known for S(n) at the recurrence value:
/// S = 3 (mod 8) for odd n >= 3, S = -1 (mod 8) for even n != 2, and, with
/// n = 2^l m, m odd, n not in {1, 2, 4}: S = -1 (mod 2^(l+2)) and
/// S = -1 + 2^(l+2) (mod 2^(l+3)). n = 1 carries no checks.
KloostermanReport check_congruences(int n);

}  // namespace thetagraph
