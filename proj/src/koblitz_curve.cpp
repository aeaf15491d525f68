#include "thetagraph/koblitz_curve.hpp"

#include <numeric>
#include <vector>

#include "thetagraph/errors.hpp"
#include "thetagraph/parallel.hpp"

namespace thetagraph {

std::uint64_t count_points(const FieldSpec& spec, unsigned threads) {
  if (spec.degree() > kMaxPointCountDegree) throw budget_exceeded("count_points", spec.degree(), kMaxPointCountDegree);
  std::vector<std::uint64_t> partial(std::max(1u, threads), 0);
  parallel_ranges(1, spec.order(), threads, [&](unsigned t, std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t found = 0;
    for (std::uint64_t x = lo; x < hi; ++x) {
      const std::uint64_t xi = spec.inv(x);
      // z^2 + z = x + x^-2 is solvable iff its right-hand side has trace 0.
      if (spec.trace(x ^ spec.square(xi)) == 0) found += 2;
    }
    partial[t] = found;
  });
  // (0, 1) and the point at infinity.
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{2});
}

std::optional<std::pair<CurvePoint, CurvePoint>> lift_x(const FieldElement& x) {
  const FieldSpec& f = x.spec();
  if (x.is_zero()) {
    const auto p = CurvePoint::from_coordinates(x, FieldElement::one(f));
    return std::pair{p, p};
  }
  const FieldElement xi = inv(x);
  auto roots = solve_artin_schreier(x + xi * xi);
  if (!roots) return std::nullopt;
  return std::pair{CurvePoint::from_coordinates(x, roots->first * x),
                   CurvePoint::from_coordinates(x, roots->second * x)};
}

QuadraticExtension::QuadraticExtension(const FieldSpec& base) : base_(&base) {
  // t^2 + t + c is irreducible over F_{2^n} exactly when Tr(c) = 1.
  while (base.trace(c_) == 0) ++c_;
}

ExtElement operator*(const ExtElement& a, const ExtElement& b) {
  const FieldSpec& f = a.ext_->base();
  const std::uint64_t ac = f.mul(a.lo_, b.lo_);
  const std::uint64_t bd = f.mul(a.hi_, b.hi_);
  const std::uint64_t cross = f.mul(a.lo_ ^ a.hi_, b.lo_ ^ b.hi_) ^ ac;  // ad + bc + bd
  return {*a.ext_, ac ^ f.mul(bd, a.ext_->constant()), cross};
}

ExtElement square(const ExtElement& a) { return a * a; }

ExtElement inv(const ExtElement& a) {
  if (a.is_zero()) throw std::domain_error("zero has no multiplicative inverse");
  const FieldSpec& f = a.extension().base();
  // (u + vt)(u + v + vt) = u^2 + uv + c v^2, the norm down to F_{2^n}.
  const std::uint64_t u = a.lo(), v = a.hi();
  const std::uint64_t norm = f.square(u) ^ f.mul(u, v) ^ f.mul(a.extension().constant(), f.square(v));
  const std::uint64_t ni = f.inv(norm);
  return {a.extension(), f.mul(u ^ v, ni), f.mul(v, ni)};
}

ExtElement sqrt(const ExtElement& a) {
  ExtElement r = a;
  for (int i = 1; i < 2 * a.extension().base().degree(); ++i) r = square(r);
  return r;
}

int trace(const ExtElement& a) {
  // The relative trace of lo + hi t is hi, since t + t^(2^n) = 1.
  return a.extension().base().trace(a.hi());
}

std::optional<ExtElement> solve_artin_schreier(const ExtElement& d) {
  const QuadraticExtension& ext = d.extension();
  const FieldSpec& f = ext.base();
  // (z0 + z1 t)^2 + (z0 + z1 t) = (z0^2 + z0 + c z1^2) + (z1^2 + z1) t.
  auto z1 = f.artin_schreier_root(d.hi());
  if (!z1) return std::nullopt;
  std::uint64_t rhs = d.lo() ^ f.mul(ext.constant(), f.square(*z1));
  if (f.trace(rhs)) {
    // Replacing z1 by z1 + 1 shifts the right-hand side by c, of trace 1.
    *z1 ^= 1;
    rhs ^= ext.constant();
  }
  const auto z0 = f.artin_schreier_root(rhs);
  return ExtElement(ext, *z0, *z1);
}

std::pair<ExtCurvePoint, ExtCurvePoint> lift_x_to_extension(const QuadraticExtension& ext, const FieldElement& x) {
  if (x.is_zero()) throw std::invalid_argument("lift_x_to_extension needs x != 0");
  const ExtElement ex = ExtElement::embed(ext, x);
  const ExtElement xi = inv(ex);
  const auto z = solve_artin_schreier(ex + xi * xi);
  if (!z) throw std::logic_error("Artin-Schreier equation over F_{2^n} unsolvable in F_{2^{2n}}");
  const ExtElement other = *z + one_like(ex);
  return {ExtCurvePoint::from_coordinates(ex, *z * ex), ExtCurvePoint::from_coordinates(ex, other * ex)};
}

ExtCurvePoint frobenius_power(const ExtCurvePoint& p, int n) {
  ExtCurvePoint r = p;
  for (int i = 0; i < n; ++i) r = frobenius(r);
  return r;
}

}  // namespace thetagraph
