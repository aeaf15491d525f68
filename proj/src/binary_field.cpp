#include "thetagraph/binary_field.hpp"

#include <bit>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "thetagraph/number_theory.hpp"

namespace thetagraph {

namespace {

int poly_degree(std::uint64_t p) noexcept { return 63 - std::countl_zero(p); }

// Product of two reduced polynomials modulo an arbitrary degree-n poly.
std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t poly, int n) noexcept {
  std::uint64_t r = 0;
  for (int i = n - 1; i >= 0; --i) {
    r <<= 1;
    if ((r >> n) & 1) r ^= poly;
    if ((b >> i) & 1) r ^= a;
  }
  return r;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) noexcept {
  while (b != 0) {
    while (a != 0 && poly_degree(a) >= poly_degree(b)) a ^= b << (poly_degree(a) - poly_degree(b));
    std::swap(a, b);
  }
  return a;
}

// x^(2^k) mod poly.
std::uint64_t frobenius_power_of_x(int k, std::uint64_t poly, int n) noexcept {
  std::uint64_t x = 2;
  if (n == 1) x ^= poly;
  for (int i = 0; i < k; ++i) x = poly_mulmod(x, x, poly, n);
  return x;
}

}  // namespace

bool is_irreducible(std::uint64_t poly) {
  if (poly < 2) return false;
  const int n = poly_degree(poly);
  if (n == 1) return true;
  if ((poly & 1) == 0) return false;
  std::uint64_t x = 2;
  if (frobenius_power_of_x(n, poly, n) != x) return false;
  for (auto [p, e] : factor_u64(static_cast<std::uint64_t>(n))) {
    const std::uint64_t h = frobenius_power_of_x(n / static_cast<int>(p), poly, n) ^ x;
    if (poly_gcd(poly, h) != 1) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint64_t modulus) : n_(poly_degree(modulus)), modulus_(modulus) {
  for (int i = 0; i < n_; ++i) {
    if (trace_power_sum(std::uint64_t{1} << i)) trace_mask_ |= std::uint64_t{1} << i;
  }
  // The trace is onto F_2, so some basis vector has trace 1.
  trace_one_ = trace_mask_ & (~trace_mask_ + 1);
}

FieldSpec FieldSpec::from_modulus(std::uint64_t modulus) {
  if (modulus < 2) throw std::invalid_argument("field modulus must have degree >= 1");
  if (poly_degree(modulus) > kMaxFieldDegree) {
    throw std::invalid_argument("field degree exceeds " + std::to_string(kMaxFieldDegree));
  }
  if (!is_irreducible(modulus)) {
    throw std::invalid_argument("modulus " + format_polynomial_hex(modulus) + " is reducible over F_2");
  }
  return FieldSpec(modulus);
}

FieldSpec FieldSpec::find_irreducible(int n) {
  if (n < 1 || n > kMaxFieldDegree) {
    throw std::invalid_argument("field degree must lie in [1, " + std::to_string(kMaxFieldDegree) + "]");
  }
  const std::uint64_t lead = std::uint64_t{1} << n;
  for (std::uint64_t poly = lead | 1;; poly += 2) {
    if (is_irreducible(poly)) return FieldSpec(poly);
  }
}

std::uint64_t FieldSpec::mul(std::uint64_t a, std::uint64_t b) const noexcept {
  return poly_mulmod(a, b, modulus_, n_);
}

std::uint64_t FieldSpec::inv(std::uint64_t a) const noexcept {
  std::uint64_t u = a, v = modulus_;
  std::uint64_t g1 = 1, g2 = 0;
  while (u != 1) {
    int j = poly_degree(u) - poly_degree(v);
    if (j < 0) {
      std::swap(u, v);
      std::swap(g1, g2);
      j = -j;
    }
    u ^= v << j;
    g1 ^= g2 << j;
  }
  return g1;
}

std::uint64_t FieldSpec::pow(std::uint64_t a, std::uint64_t e) const noexcept {
  std::uint64_t result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = square(a);
    e >>= 1;
  }
  return result;
}

std::uint64_t FieldSpec::sqrt(std::uint64_t a) const noexcept {
  for (int i = 1; i < n_; ++i) a = square(a);
  return a;
}

int FieldSpec::trace(std::uint64_t a) const noexcept { return std::popcount(a & trace_mask_) & 1; }

int FieldSpec::trace_power_sum(std::uint64_t a) const noexcept {
  std::uint64_t sum = 0;
  for (int i = 0; i < n_; ++i) {
    sum ^= a;
    a = square(a);
  }
  return static_cast<int>(sum & 1);
}

std::optional<std::uint64_t> FieldSpec::artin_schreier_root(std::uint64_t c) const noexcept {
  if (trace(c)) return std::nullopt;
  std::uint64_t z = 0;
  if (n_ % 2 == 1) {
    // Half-trace: sum of c^(4^i) for i = 0..(n-1)/2.
    std::uint64_t term = c;
    for (int i = 0; i <= (n_ - 1) / 2; ++i) {
      z ^= term;
      term = square(square(term));
    }
    return z;
  }
  // z = sum_{i=1}^{n-1} c^(2^i) * (delta + delta^2 + ... + delta^(2^(i-1))).
  std::uint64_t c_pow = c;
  std::uint64_t delta_pow = trace_one_;
  std::uint64_t delta_sum = 0;
  for (int i = 1; i < n_; ++i) {
    delta_sum ^= delta_pow;
    delta_pow = square(delta_pow);
    c_pow = square(c_pow);
    z ^= mul(c_pow, delta_sum);
  }
  return z;
}

bool FieldSpec::is_primitive() const {
  const std::uint64_t group_order = order() - 1;
  if (group_order == 1) return true;
  const std::uint64_t x = n_ == 1 ? 1 : 2;
  for (auto [p, e] : factor_u64(group_order)) {
    if (pow(x, group_order / p) == 1) return false;
  }
  return true;
}

std::uint64_t parse_polynomial(std::string_view text) {
  auto fail = [&]() -> std::uint64_t {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    std::uint64_t value = 0;
    const char* begin = text.data() + 2;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value, 16);
    if (ec != std::errc() || ptr != end) return fail();
    return value;
  }
  std::uint64_t value = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int exponent = -1;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), exponent);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || exponent < 0 ||
        exponent > 63 || ((value >> exponent) & 1)) {
      return fail();
    }
    value |= std::uint64_t{1} << exponent;
    pos = comma + 1;
  }
  return value;
}

std::string format_polynomial_hex(std::uint64_t poly) {
  std::ostringstream out;
  out << "0x" << std::hex << poly;
  return out.str();
}

FieldElement::FieldElement(const FieldSpec& spec, std::uint64_t bits) : spec_(&spec), bits_(bits) {
  if (bits >= spec.order()) throw std::invalid_argument("field element is not reduced");
}

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.spec() == b.spec())) throw std::invalid_argument("field elements belong to different fields");
}
}  // namespace

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  require_same_field(*this, rhs);
  bits_ ^= rhs.bits_;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  require_same_field(*this, rhs);
  bits_ = spec_->mul(bits_, rhs.bits_);
  return *this;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return a.bits_ == b.bits_;
}

bool operator<(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return a.bits_ < b.bits_;
}

FieldElement inv(const FieldElement& a) {
  if (a.is_zero()) throw std::domain_error("zero has no multiplicative inverse");
  return {a.spec(), a.spec().inv(a.bits())};
}

FieldElement square(const FieldElement& a) { return {a.spec(), a.spec().square(a.bits())}; }
FieldElement sqrt(const FieldElement& a) { return {a.spec(), a.spec().sqrt(a.bits())}; }
FieldElement pow(const FieldElement& a, std::uint64_t e) { return {a.spec(), a.spec().pow(a.bits(), e)}; }
int trace(const FieldElement& a) { return a.spec().trace(a.bits()); }

std::optional<std::pair<FieldElement, FieldElement>> solve_artin_schreier(const FieldElement& c) {
  auto root = c.spec().artin_schreier_root(c.bits());
  if (!root) return std::nullopt;
  return std::pair{FieldElement(c.spec(), *root), FieldElement(c.spec(), *root ^ 1)};
}

}  // namespace thetagraph
