#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace thetagraph {

/// Largest extension degree representable with one machine word per element.
inline constexpr int kMaxFieldDegree = 63;

/// Polynomial-basis description of F_{2^n}: the degree and the reduction
/// polynomial, stored as a bitmask with bit i holding the coefficient of x^i.
///
/// A FieldSpec is immutable once built and may be shared freely between
/// threads. FieldElement keeps a pointer to its spec, so the spec must
/// outlive every element created from it.
class FieldSpec {
 public:
  /// Builds the field for an explicit modulus. Throws std::invalid_argument
  /// if the polynomial is reducible, has degree 0, or degree > 63.
  static FieldSpec from_modulus(std::uint64_t modulus);

  /// The irreducible degree-n polynomial with nonzero constant term and the
  /// smallest bitmask value.
  static FieldSpec find_irreducible(int n);

  int degree() const noexcept { return n_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  /// Number of field elements, 2^n.
  std::uint64_t order() const noexcept { return std::uint64_t{1} << n_; }
  std::uint64_t mask() const noexcept { return order() - 1; }

  // Raw bitmask arithmetic. Inputs must already be reduced (< 2^n).
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t square(std::uint64_t a) const noexcept { return mul(a, a); }
  /// Multiplicative inverse by the extended Euclidean algorithm. a != 0.
  std::uint64_t inv(std::uint64_t a) const noexcept;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
  /// Square root, a^(2^(n-1)).
  std::uint64_t sqrt(std::uint64_t a) const noexcept;
  /// Absolute trace as a parity of the precomputed trace mask.
  int trace(std::uint64_t a) const noexcept;
  /// Absolute trace by the power sum a + a^2 + ... + a^(2^(n-1)).
  int trace_power_sum(std::uint64_t a) const noexcept;
  /// One root z of z^2 + z = c when trace(c) == 0; the other is z + 1.
  std::optional<std::uint64_t> artin_schreier_root(std::uint64_t c) const noexcept;

  /// True iff x generates the multiplicative group.
  bool is_primitive() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
    return a.modulus_ == b.modulus_;
  }

 private:
  explicit FieldSpec(std::uint64_t modulus);

  int n_ = 0;
  std::uint64_t modulus_ = 0;
  std::uint64_t trace_mask_ = 0;
  // Element of trace 1, used by the even-degree Artin-Schreier formula.
  std::uint64_t trace_one_ = 0;
};

/// True iff the polynomial (bitmask form) is irreducible over F_2.
bool is_irreducible(std::uint64_t poly);

/// Parses "0x25" (hex bitmask) or "5,2,0" (exponent list) into a bitmask.
/// Throws std::invalid_argument on malformed input.
std::uint64_t parse_polynomial(std::string_view text);

std::string format_polynomial_hex(std::uint64_t poly);

/// Element of F_{2^n} in polynomial basis.
class FieldElement {
 public:
  FieldElement(const FieldSpec& spec, std::uint64_t bits);

  static FieldElement zero(const FieldSpec& spec) { return {spec, 0}; }
  static FieldElement one(const FieldSpec& spec) { return {spec, 1}; }

  const FieldSpec& spec() const noexcept { return *spec_; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool is_zero() const noexcept { return bits_ == 0; }

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  /// Ordering by bitmask value; elements of different fields are unordered.
  friend bool operator<(const FieldElement& a, const FieldElement& b);

 private:
  const FieldSpec* spec_;
  std::uint64_t bits_;
};

/// Throws std::domain_error for a == 0.
FieldElement inv(const FieldElement& a);
FieldElement square(const FieldElement& a);
FieldElement sqrt(const FieldElement& a);
FieldElement pow(const FieldElement& a, std::uint64_t e);
int trace(const FieldElement& a);

/// Both solutions {z, z + 1} of z^2 + z = c, or nothing when trace(c) == 1.
std::optional<std::pair<FieldElement, FieldElement>> solve_artin_schreier(const FieldElement& c);

// Uniform helpers used by the generic curve arithmetic.
inline FieldElement zero_like(const FieldElement& a) { return FieldElement::zero(a.spec()); }
inline FieldElement one_like(const FieldElement& a) { return FieldElement::one(a.spec()); }

}  // namespace thetagraph
