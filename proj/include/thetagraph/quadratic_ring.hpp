#pragma once

// Exact arithmetic in Z[w], w = (1 + sqrt(-7)) / 2, the ring of integers of
// Q(sqrt(-7)) and the endomorphism ring of the Koblitz curve y^2 + xy = x^3 + 1.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace thetagraph {

using BigInt = boost::multiprecision::cpp_int;

/// a + b*w with w^2 = w - 2.
class QuadInt {
 public:
  QuadInt() = default;
  QuadInt(BigInt a, BigInt b = 0) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT: integers embed
  QuadInt(long long a, long long b = 0) : a_(a), b_(b) {}                  // NOLINT

  static QuadInt omega() { return {0, 1}; }
  /// The Frobenius, -1 + w.
  static QuadInt pi() { return {-1, 1}; }
  /// Its conjugate, -w; acts on x-coordinates as x -> x + 1/x.
  static QuadInt pi_bar() { return {0, -1}; }
  /// -1 + 2w, whose square is -7.
  static QuadInt sqrt_minus7() { return {-1, 2}; }

  const BigInt& a() const noexcept { return a_; }
  const BigInt& b() const noexcept { return b_; }
  bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const noexcept { return b_.is_zero(); }

  QuadInt operator-() const { return {-a_, -b_}; }
  QuadInt& operator+=(const QuadInt& r) {
    a_ += r.a_;
    b_ += r.b_;
    return *this;
  }
  QuadInt& operator-=(const QuadInt& r) {
    a_ -= r.a_;
    b_ -= r.b_;
    return *this;
  }
  friend QuadInt operator+(QuadInt x, const QuadInt& y) { return x += y; }
  friend QuadInt operator-(QuadInt x, const QuadInt& y) { return x -= y; }
  friend QuadInt operator*(const QuadInt& x, const QuadInt& y);
  friend bool operator==(const QuadInt&, const QuadInt&) = default;

 private:
  BigInt a_;
  BigInt b_;
};

/// a^2 + ab + 2b^2.
BigInt norm(const QuadInt& z);
/// w -> 1 - w.
QuadInt conj(const QuadInt& z);
QuadInt pow(QuadInt base, std::uint64_t e);

/// Canonical associate: units are +-1, and the representative has a > 0, or
/// a = 0 and b > 0.
QuadInt normalize(const QuadInt& z);
bool is_unit(const QuadInt& z);
bool are_associates(const QuadInt& x, const QuadInt& y);

struct DivisionResult {
  QuadInt quotient;
  QuadInt remainder;
};

/// a = q*d + r with norm(r) < norm(d). Throws std::domain_error for d = 0.
DivisionResult euclid_div(const QuadInt& a, const QuadInt& d);

/// Normalized gcd. Throws std::invalid_argument if both are zero.
QuadInt gcd(QuadInt a, QuadInt b);

/// True iff z = d*w for some w in the ring. Throws std::domain_error for d = 0.
bool exact_divides(const QuadInt& d, const QuadInt& z);
/// z / d, which must be exact.
QuadInt exact_quotient(const QuadInt& z, const QuadInt& d);

/// Coefficients reduced into [0, m).
QuadInt reduce_coefficients(const QuadInt& z, const BigInt& m);

/// "a+b*w", "a-b*w", "b*w", or "a".
std::string to_string(const QuadInt& z);
QuadInt parse_quadint(std::string_view text);

enum class PrimeKind { conjugate_frobenius, split, inert, ramified };

std::string_view to_string(PrimeKind k) noexcept;

struct PrimeFactor {
  QuadInt prime;
  int exponent = 0;
  PrimeKind kind = PrimeKind::split;
  std::uint64_t rational_prime = 0;
};

struct RingFactorization {
  QuadInt unit{1};
  std::vector<PrimeFactor> factors;

  /// unit * prod prime^exponent.
  QuadInt expand() const;
  /// Exponent of the conjugate Frobenius, 0 if absent.
  int conjugate_frobenius_exponent() const;
};

/// Complete factorization into pairwise non-associate primes. The norm of z
/// must fit in 64 bits (std::domain_error otherwise); z = 0 throws
/// std::invalid_argument.
RingFactorization factor(const QuadInt& z);

/// "unit * p1^e1 * ..." with the unit omitted when it is 1; the norm-2
/// primes print as "pibar" (-w) and "pi" (-1+w), with the unit adjusted.
std::string to_string(const RingFactorization& f);

/// Smallest k >= 1 with q | pibar^k - sign, sign in {+1, -1}.
struct SignedOrder {
  std::uint64_t length = 0;
  int sign = 1;

  friend bool operator==(const SignedOrder&, const SignedOrder&) = default;
};

/// The rational integer used to bound coefficients while working modulo
/// prime^h: p^h for split and inert primes, 7^ceil(h/2) for sqrt(-7).
BigInt reduction_modulus(const PrimeFactor& prime, int h);
QuadInt prime_power(const PrimeFactor& prime, int h);

/// pibar^k with coefficients reduced modulo m.
QuadInt pi_bar_power(std::uint64_t k, const BigInt& m);

/// Signed order of pibar modulo prime^h, computed from the order of the unit
/// group of R / prime^h. The prime must not divide 2; h >= 1.
SignedOrder signed_order(const PrimeFactor& prime, int h);

/// Signed order of pibar modulo q by stepping k = 1, 2, ... with coefficients
/// reduced modulo reduce_mod, which must be a rational integer in (q).
/// Throws std::invalid_argument if q is a unit, shares a factor with 2, or
/// reduce_mod is not a multiple of q.
SignedOrder signed_order(const QuadInt& q, const BigInt& reduce_mod);

}  // namespace thetagraph
