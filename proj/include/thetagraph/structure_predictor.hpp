#pragma once

// Cycle and tree structure of the theta graph predicted from the
// factorization of pi^n -+ 1 in Z[w], with no field enumeration.
//
// Kob_0(F_{2^n}) is isomorphic to R/(pi^n - 1) and its B-part over
// F_{2^{2n}} to R/(pi^n + 1); pibar acts on x-coordinates as theta. A point
// with zero pibar-component lies on a cycle whose length is the least k with
// pibar^k P = +-P, and the pibar-adic part of the quotient determines the
// trees hanging off each cycle vertex.

#include <cstdint>
#include <string>
#include <vector>

#include "thetagraph/binary_field.hpp"
#include "thetagraph/quadratic_ring.hpp"
#include "thetagraph/theta_graph.hpp"

namespace thetagraph {

/// Largest n for which the norm of pi^n -+ 1 fits in 64 bits.
inline constexpr int kMaxPredictDegree = 63;
inline constexpr int kMaxVerifyDegree = 20;

enum class ComponentKind { inert, split, ramified };

std::string_view to_string(ComponentKind k) noexcept;

/// One pibar-free prime-power factor prime^exponent of pi^n -+ 1.
struct ComponentSpec {
  QuadInt prime;
  int exponent = 0;
  ComponentKind kind = ComponentKind::split;
  std::uint64_t rational_prime = 0;
};

/// Components of a factorization, in factor order, skipping pibar.
std::vector<ComponentSpec> components_of(const RingFactorization& f);

/// Largest additive-order index: the exponent for inert and split primes,
/// floor(f/2) or (f+1)/2 for sqrt(-7)^f by parity.
int max_order_index(const ComponentSpec& c);

/// Number of elements of R/prime^exponent of additive order p^h.
/// Throws std::out_of_range outside [0, max_order_index(c)].
BigInt order_census(const ComponentSpec& c, int h);

/// A component together with the exponent j such that prime^j is the
/// annihilator of a point's coordinate there. For inert and split
/// components j equals the additive-order index; for sqrt(-7) the index is
/// ceil(j/2).
struct ComponentLevel {
  ComponentSpec component;
  int annihilator_exponent = 0;
};

/// Least k >= 1 such that every prime^j divides pibar^k - 1, or every one
/// divides pibar^k + 1. Throws std::invalid_argument if all exponents are 0.
std::uint64_t class_period(const std::vector<ComponentLevel>& levels);

/// 2^eps * lcm(l_i), eps = 0 when all components hit +-1 at their own l_i
/// with the same sign and 1 otherwise. Diagnostic only: the sign at the lcm
/// can still disagree, so class_period is either this value or twice it.
std::uint64_t sign_agreement_period(const std::vector<ComponentLevel>& levels);

/// All points whose coordinates have prescribed annihilators.
struct OrderClass {
  /// Additive-order index per component.
  std::vector<int> h;
  std::vector<int> annihilator_exponents;
  /// m: number of points in the class.
  BigInt point_count;
  /// Distinct x-coordinates, m / 2 (1 for the point at infinity of A).
  BigInt x_count;
  std::uint64_t period = 0;
  BigInt cycle_count;
  std::uint64_t sign_agreement_period = 0;
  bool is_zero_class = false;
};

struct PredictedStructure {
  int n = 0;
  TraceClass trace_class = TraceClass::A;
  QuadInt target;
  RingFactorization factorization;
  std::vector<ComponentSpec> components;
  /// Exponent of pibar in the target: the depth of every tree.
  int e0 = 0;
  std::vector<OrderClass> classes;
  /// (length, count, depth) rows merged by length, ascending.
  std::vector<CycleRecord> totals;
};

/// pi^n - 1 for A, pi^n + 1 for B.
QuadInt structure_target(int n, TraceClass c);

/// Throws std::invalid_argument for n < 1, n > 63, or B with n = 1.
PredictedStructure predict(int n, TraceClass c);

/// Expected vertex counts at levels 1..e0 below a cycle vertex.
/// Throws std::invalid_argument for B with e0 != 1 or with an infinite root.
std::vector<std::uint64_t> tree_profile(TraceClass c, bool root_is_infinity, int e0);

struct VerificationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  int n = 0;
  std::uint64_t modulus = 0;
  std::vector<VerificationCheck> checks;

  bool all_pass() const noexcept;
};

/// Enumerates the graph over `spec` and compares it with the prediction:
/// cycle tables, tree depths, per-root level profiles and vertex totals.
/// Throws budget_exceeded for n > 20.
VerificationReport verify(const FieldSpec& spec, unsigned threads = 1);
VerificationReport verify(int n, unsigned threads = 1);

}  // namespace thetagraph
