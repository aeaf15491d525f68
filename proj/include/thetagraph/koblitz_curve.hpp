#pragma once

// The Koblitz curve y^2 + xy = x^3 + 1 over binary fields.
//
// The group law is written once, generic over the coordinate type, and used
// both with F_{2^n} elements and with elements of the quadratic extension
// F_{2^n}[t]/(t^2 + t + c).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

#include "thetagraph/binary_field.hpp"

namespace thetagraph {

inline constexpr int kMaxPointCountDegree = 20;

template <class E>
bool on_curve(const E& x, const E& y) {
  return y * y + x * y == x * x * x + one_like(x);
}

template <class E>
class AffinePoint {
 public:
  static AffinePoint at_infinity() { return AffinePoint(); }

  /// Throws std::invalid_argument if (x, y) is not on the curve.
  static AffinePoint from_coordinates(const E& x, const E& y) {
    if (!on_curve(x, y)) throw std::invalid_argument("point is not on y^2 + xy = x^3 + 1");
    return AffinePoint(x, y);
  }

  bool is_infinity() const noexcept { return !xy_.has_value(); }
  const E& x() const { return coords().first; }
  const E& y() const { return coords().second; }

  friend bool operator==(const AffinePoint& p, const AffinePoint& q) {
    if (p.is_infinity() || q.is_infinity()) return p.is_infinity() == q.is_infinity();
    return p.x() == q.x() && p.y() == q.y();
  }

 private:
  AffinePoint() = default;
  AffinePoint(const E& x, const E& y) : xy_(std::in_place, x, y) {}

  const std::pair<E, E>& coords() const {
    if (!xy_) throw std::logic_error("the point at infinity has no affine coordinates");
    return *xy_;
  }

  std::optional<std::pair<E, E>> xy_;
};

using CurvePoint = AffinePoint<FieldElement>;

template <class E>
AffinePoint<E> negate(const AffinePoint<E>& p) {
  if (p.is_infinity()) return p;
  return AffinePoint<E>::from_coordinates(p.x(), p.x() + p.y());
}

template <class E>
AffinePoint<E> dbl(const AffinePoint<E>& p) {
  if (p.is_infinity() || p.x().is_zero()) return AffinePoint<E>::at_infinity();  // (0, 1) is 2-torsion
  const E& x1 = p.x();
  const E lambda = x1 + p.y() * inv(x1);
  const E x3 = lambda * lambda + lambda;
  const E y3 = x1 * x1 + (lambda + one_like(x1)) * x3;
  return AffinePoint<E>::from_coordinates(x3, y3);
}

template <class E>
AffinePoint<E> add(const AffinePoint<E>& p, const AffinePoint<E>& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  if (p.x() == q.x()) {
    if (q.y() == p.x() + p.y()) return AffinePoint<E>::at_infinity();
    return dbl(p);
  }
  const E lambda = (p.y() + q.y()) * inv(p.x() + q.x());
  const E x3 = lambda * lambda + lambda + p.x() + q.x();
  const E y3 = lambda * (p.x() + x3) + x3 + p.y();
  return AffinePoint<E>::from_coordinates(x3, y3);
}

/// m * P by double-and-add.
template <class E>
AffinePoint<E> scalar_mul(std::uint64_t m, const AffinePoint<E>& p) {
  AffinePoint<E> acc = AffinePoint<E>::at_infinity();
  AffinePoint<E> base = p;
  while (m > 0) {
    if (m & 1) acc = add(acc, base);
    base = dbl(base);
    m >>= 1;
  }
  return acc;
}

/// The 2-power Frobenius (x, y) -> (x^2, y^2).
template <class E>
AffinePoint<E> frobenius(const AffinePoint<E>& p) {
  if (p.is_infinity()) return p;
  return AffinePoint<E>::from_coordinates(square(p.x()), square(p.y()));
}

/// The conjugate Frobenius: the unique Q with frobenius(Q) = 2P, obtained by
/// taking coordinate-wise square roots of 2P. x(Q) = x(P) + 1/x(P).
template <class E>
AffinePoint<E> conj_frobenius(const AffinePoint<E>& p) {
  const AffinePoint<E> doubled = dbl(p);
  if (doubled.is_infinity()) return doubled;
  return AffinePoint<E>::from_coordinates(sqrt(doubled.x()), sqrt(doubled.y()));
}

/// |Kob_0(F_{2^n})| by exhaustive lifting. Throws budget_exceeded for n > 20.
std::uint64_t count_points(const FieldSpec& spec, unsigned threads = 1);

/// The points above x. For x = 0 both entries are (0, 1); for x != 0 the
/// two points (x, z1 x), (x, z2 x) with z^2 + z = x + x^-2; nothing when
/// Tr(x) != Tr(1/x).
std::optional<std::pair<CurvePoint, CurvePoint>> lift_x(const FieldElement& x);

/// F_{2^n}[t]/(t^2 + t + c) with Tr(c) = 1, a model of F_{2^{2n}} that
/// contains F_{2^n} as the elements with zero t-coordinate.
class QuadraticExtension {
 public:
  explicit QuadraticExtension(const FieldSpec& base);

  const FieldSpec& base() const noexcept { return *base_; }
  std::uint64_t constant() const noexcept { return c_; }

 private:
  const FieldSpec* base_;
  std::uint64_t c_ = 0;
};

/// lo + hi * t in a QuadraticExtension.
class ExtElement {
 public:
  ExtElement(const QuadraticExtension& ext, std::uint64_t lo, std::uint64_t hi) : ext_(&ext), lo_(lo), hi_(hi) {}
  static ExtElement embed(const QuadraticExtension& ext, const FieldElement& a) { return {ext, a.bits(), 0}; }

  const QuadraticExtension& extension() const noexcept { return *ext_; }
  std::uint64_t lo() const noexcept { return lo_; }
  std::uint64_t hi() const noexcept { return hi_; }
  bool is_zero() const noexcept { return lo_ == 0 && hi_ == 0; }
  bool in_base_field() const noexcept { return hi_ == 0; }

  friend ExtElement operator+(const ExtElement& a, const ExtElement& b) {
    return {*a.ext_, a.lo_ ^ b.lo_, a.hi_ ^ b.hi_};
  }
  friend ExtElement operator*(const ExtElement& a, const ExtElement& b);
  friend bool operator==(const ExtElement& a, const ExtElement& b) noexcept {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  const QuadraticExtension* ext_;
  std::uint64_t lo_;
  std::uint64_t hi_;
};

ExtElement inv(const ExtElement& a);
ExtElement square(const ExtElement& a);
ExtElement sqrt(const ExtElement& a);
inline ExtElement zero_like(const ExtElement& a) { return {a.extension(), 0, 0}; }
inline ExtElement one_like(const ExtElement& a) { return {a.extension(), 1, 0}; }

/// Absolute trace F_{2^{2n}} -> F_2.
int trace(const ExtElement& a);

/// One root of z^2 + z = d in the extension, or nothing when Tr(d) = 1.
std::optional<ExtElement> solve_artin_schreier(const ExtElement& d);

using ExtCurvePoint = AffinePoint<ExtElement>;

/// The two points of Kob_0(F_{2^{2n}}) above a nonzero x in F_{2^n}. They
/// always exist: Tr_{2n} vanishes on F_{2^n}.
std::pair<ExtCurvePoint, ExtCurvePoint> lift_x_to_extension(const QuadraticExtension& ext, const FieldElement& x);

/// The n-th power of the 2-Frobenius on a point of the extension curve.
ExtCurvePoint frobenius_power(const ExtCurvePoint& p, int n);

}  // namespace thetagraph
