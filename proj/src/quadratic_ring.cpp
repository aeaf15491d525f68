#include "thetagraph/quadratic_ring.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "thetagraph/number_theory.hpp"

namespace thetagraph {

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
  const BigInt bd = x.b_ * y.b_;
  return {x.a_ * y.a_ - 2 * bd, x.a_ * y.b_ + x.b_ * y.a_ + bd};
}

BigInt norm(const QuadInt& z) { return z.a() * z.a() + z.a() * z.b() + 2 * z.b() * z.b(); }

QuadInt conj(const QuadInt& z) { return {z.a() + z.b(), -z.b()}; }

QuadInt pow(QuadInt base, std::uint64_t e) {
  QuadInt result{1};
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

QuadInt normalize(const QuadInt& z) {
  if (z.a() > 0 || (z.a().is_zero() && z.b() > 0)) return z;
  return -z;
}

bool is_unit(const QuadInt& z) { return norm(z) == 1; }

bool are_associates(const QuadInt& x, const QuadInt& y) { return normalize(x) == normalize(y); }

namespace {

// Nearest integer to num / den (den > 0), halves rounded toward zero.
BigInt round_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  const BigInt r = num - q * den;
  if (2 * abs(r) > den) q += num.sign();
  return q;
}

BigInt floor_mod(const BigInt& x, const BigInt& m) {
  BigInt r = x % m;
  if (r.sign() < 0) r += m;
  return r;
}

}  // namespace

DivisionResult euclid_div(const QuadInt& a, const QuadInt& d) {
  if (d.is_zero()) throw std::domain_error("euclid_div: division by zero");
  const QuadInt num = a * conj(d);
  const BigInt n = norm(d);
  // Round the w-coordinate first, then the real part given that choice; the
  // remaining error has norm at most 1/4 + 7/16 < 1.
  const BigInt q2 = round_div(num.b(), n);
  const BigInt q1 = round_div(2 * num.a() + num.b() - q2 * n, 2 * n);
  QuadInt q{q1, q2};
  QuadInt r = a - q * d;
  return {std::move(q), std::move(r)};
}

QuadInt gcd(QuadInt a, QuadInt b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    QuadInt r = euclid_div(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return normalize(a);
}

bool exact_divides(const QuadInt& d, const QuadInt& z) {
  if (d.is_zero()) throw std::domain_error("exact_divides: zero divisor");
  const QuadInt num = z * conj(d);
  const BigInt n = norm(d);
  return num.a() % n == 0 && num.b() % n == 0;
}

QuadInt exact_quotient(const QuadInt& z, const QuadInt& d) {
  if (!exact_divides(d, z)) throw std::invalid_argument("exact_quotient: division is not exact");
  const QuadInt num = z * conj(d);
  const BigInt n = norm(d);
  return {num.a() / n, num.b() / n};
}

QuadInt reduce_coefficients(const QuadInt& z, const BigInt& m) { return {floor_mod(z.a(), m), floor_mod(z.b(), m)}; }

std::string to_string(const QuadInt& z) {
  std::ostringstream out;
  if (z.b().is_zero()) {
    out << z.a();
  } else if (z.a().is_zero()) {
    out << z.b() << "*w";
  } else {
    out << z.a() << (z.b() > 0 ? "+" : "-") << abs(z.b()) << "*w";
  }
  return out.str();
}

QuadInt parse_quadint(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  auto fail = [&]() -> QuadInt { throw std::invalid_argument("cannot parse ring element '" + std::string(text) + "'"); };
  auto parse_int = [&](std::string t) -> BigInt {
    if (!t.empty() && t.front() == '+') t.erase(0, 1);
    const bool neg = !t.empty() && t.front() == '-';
    if (neg) t.erase(0, 1);
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; })) fail();
    BigInt v(t);
    return neg ? BigInt(-v) : v;
  };
  if (s.empty()) return fail();
  if (s.back() != 'w') return QuadInt(parse_int(s), 0);
  s.pop_back();
  if (!s.empty() && s.back() == '*') s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if (s[i] == '+' || s[i] == '-') {
      split = i;
      break;
    }
  }
  BigInt a = 0;
  std::string coeff = s;
  if (split != std::string::npos) {
    a = parse_int(s.substr(0, split));
    coeff = s.substr(split);
  }
  BigInt b;
  if (coeff.empty() || coeff == "+") {
    b = 1;
  } else if (coeff == "-") {
    b = -1;
  } else {
    b = parse_int(coeff);
  }
  return {a, b};
}

std::string_view to_string(PrimeKind k) noexcept {
  switch (k) {
    case PrimeKind::conjugate_frobenius: return "conjugate_frobenius";
    case PrimeKind::split: return "split";
    case PrimeKind::inert: return "inert";
    case PrimeKind::ramified: return "ramified";
  }
  return "?";
}

QuadInt RingFactorization::expand() const {
  QuadInt product = unit;
  for (const auto& f : factors) product = product * pow(f.prime, static_cast<std::uint64_t>(f.exponent));
  return product;
}

int RingFactorization::conjugate_frobenius_exponent() const {
  for (const auto& f : factors) {
    if (f.kind == PrimeKind::conjugate_frobenius) return f.exponent;
  }
  return 0;
}

namespace {

int divide_out(QuadInt& z, const QuadInt& prime) {
  int e = 0;
  while (exact_divides(prime, z)) {
    z = exact_quotient(z, prime);
    ++e;
  }
  return e;
}

}  // namespace

RingFactorization factor(const QuadInt& z) {
  if (z.is_zero()) throw std::invalid_argument("factor: zero has no factorization");
  const BigInt n = norm(z);
  if (n > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    throw std::domain_error("factor: norm " + n.str() + " does not fit in 64 bits");
  }
  RingFactorization result;
  QuadInt rest = z;
  auto record = [&](const QuadInt& prime, PrimeKind kind, std::uint64_t p) {
    if (const int e = divide_out(rest, prime); e > 0) result.factors.push_back({prime, e, kind, p});
  };

  for (auto [p, k] : factor_u64(static_cast<std::uint64_t>(n))) {
    if (p == 2) {
      record(normalize(QuadInt::pi_bar()), PrimeKind::conjugate_frobenius, 2);
      record(normalize(QuadInt::pi()), PrimeKind::split, 2);
    } else if (p == 7) {
      record(normalize(QuadInt::sqrt_minus7()), PrimeKind::ramified, 7);
    } else if (auto root = sqrt_mod(p - 7 % p, p)) {
      // w = (1 + sqrt(-7)) / 2 mod p is a root of x^2 - x + 2; the prime
      // above p containing w - rho is gcd(p, w - rho).
      const std::uint64_t half = (p + 1) / 2;
      const std::uint64_t rho = mul_mod((1 + *root) % p, half, p);
      const QuadInt first = gcd(QuadInt(BigInt(p)), QuadInt(BigInt(-BigInt(rho)), BigInt(1)));
      if (norm(first) != p) throw std::logic_error("factor: split prime has unexpected norm");
      QuadInt pair[2] = {first, normalize(conj(first))};
      if (pair[0].b() < 0 && pair[1].b() >= 0) std::swap(pair[0], pair[1]);
      record(pair[0], PrimeKind::split, p);
      record(pair[1], PrimeKind::split, p);
    } else {
      record(QuadInt(BigInt(p)), PrimeKind::inert, p);
    }
  }
  if (!is_unit(rest)) throw std::logic_error("factor: cofactor " + to_string(rest) + " is not a unit");
  result.unit = rest;
  return result;
}

std::string to_string(const RingFactorization& f) {
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << " * ";
    first = false;
  };
  // "pibar" and "pi" name -w and -1+w themselves, not their normalized
  // associates, so each odd power of them flips the printed unit.
  QuadInt unit = f.unit;
  for (const auto& pf : f.factors) {
    const bool named = pf.kind == PrimeKind::conjugate_frobenius || pf.rational_prime == 2;
    if (named && pf.prime != QuadInt::pi_bar() && pf.prime != QuadInt::pi() && pf.exponent % 2 == 1) unit = -unit;
  }
  if (unit != QuadInt(1) || f.factors.empty()) {
    sep();
    out << to_string(unit);
  }
  for (const auto& pf : f.factors) {
    sep();
    if (pf.kind == PrimeKind::conjugate_frobenius) {
      out << "pibar";
    } else if (pf.rational_prime == 2) {
      out << "pi";
    } else if (pf.prime.is_rational()) {
      out << to_string(pf.prime);
    } else {
      out << "(" << to_string(pf.prime) << ")";
    }
    if (pf.exponent != 1) out << "^" << pf.exponent;
  }
  return out.str();
}

BigInt reduction_modulus(const PrimeFactor& prime, int h) {
  if (h < 1) throw std::invalid_argument("reduction_modulus: exponent must be positive");
  BigInt m = 1;
  const int reps = prime.kind == PrimeKind::ramified ? (h + 1) / 2 : h;
  for (int i = 0; i < reps; ++i) m *= prime.rational_prime;
  return m;
}

QuadInt prime_power(const PrimeFactor& prime, int h) { return pow(prime.prime, static_cast<std::uint64_t>(h)); }

QuadInt pi_bar_power(std::uint64_t k, const BigInt& m) {
  QuadInt result{1};
  QuadInt base = reduce_coefficients(QuadInt::pi_bar(), m);
  while (k > 0) {
    if (k & 1) result = reduce_coefficients(result * base, m);
    base = reduce_coefficients(base * base, m);
    k >>= 1;
  }
  return result;
}

namespace {

bool congruent(const QuadInt& x, long long s, const QuadInt& q) { return exact_divides(q, x - QuadInt(s)); }

}  // namespace

SignedOrder signed_order(const PrimeFactor& prime, int h) {
  if (h < 1) throw std::invalid_argument("signed_order: exponent must be positive");
  if (prime.rational_prime == 2) throw std::invalid_argument("signed_order: pibar is not a unit modulo a norm-2 prime");
  const QuadInt q = prime_power(prime, h);
  const BigInt m = reduction_modulus(prime, h);
  const std::uint64_t p = prime.rational_prime;

  // |(R / prime^h)^*| = N(prime)^(h-1) * (N(prime) - 1).
  std::uint64_t group_order = 1;
  std::vector<std::uint64_t> cofactors;
  switch (prime.kind) {
    case PrimeKind::split:
      cofactors = {p - 1};
      for (int i = 1; i < h; ++i) group_order *= p;
      break;
    case PrimeKind::inert:
      cofactors = {p - 1, p + 1};
      for (int i = 1; i < h; ++i) group_order *= p * p;
      break;
    case PrimeKind::ramified:
      cofactors = {6};
      for (int i = 1; i < h; ++i) group_order *= 7;
      break;
    case PrimeKind::conjugate_frobenius:
      throw std::invalid_argument("signed_order: pibar is not a unit modulo itself");
  }
  std::vector<std::uint64_t> primes = {p};
  for (auto c : cofactors) {
    group_order *= c;
    for (auto [r, e] : factor_u64(c)) primes.push_back(r);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  std::uint64_t order = group_order;
  for (auto r : primes) {
    while (order % r == 0 && congruent(pi_bar_power(order / r, m), 1, q)) order /= r;
  }
  if (!congruent(pi_bar_power(order, m), 1, q)) throw std::logic_error("signed_order: order computation failed");
  // <pibar> is cyclic, so -1 lies in it iff it is the element of order 2.
  if (order % 2 == 0 && congruent(pi_bar_power(order / 2, m), -1, q)) return {order / 2, -1};
  return {order, 1};
}

SignedOrder signed_order(const QuadInt& q, const BigInt& reduce_mod) {
  const BigInt nq = norm(q);
  if (nq <= 1) throw std::invalid_argument("signed_order: modulus must not be zero or a unit");
  if (nq % 2 == 0) throw std::invalid_argument("signed_order: modulus shares a factor with 2");
  if (reduce_mod <= 0 || !exact_divides(q, QuadInt(reduce_mod))) {
    throw std::invalid_argument("signed_order: reduction modulus is not a multiple of q");
  }
  const QuadInt step = reduce_coefficients(QuadInt::pi_bar(), reduce_mod);
  QuadInt power = step;
  // The unit group of R / q has fewer than N(q) elements.
  for (BigInt k = 1; k <= nq; ++k) {
    if (congruent(power, 1, q)) return {static_cast<std::uint64_t>(k), 1};
    if (congruent(power, -1, q)) return {static_cast<std::uint64_t>(k), -1};
    power = reduce_coefficients(power * step, reduce_mod);
  }
  throw std::logic_error("signed_order: no power of pibar is +-1 modulo q");
}

}  // namespace thetagraph
