#pragma once

// Rational-integer helpers: modular arithmetic on 64-bit words, primality,
// factorization, and the 2-adic valuation.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace thetagraph {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept;

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(std::uint64_t n) noexcept;

/// Prime factorization with ascending primes, by trial division followed by
/// Pollard's rho (Brent variant). factor_u64(1) is empty.
std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n);

/// Square root of a modulo an odd prime p (Tonelli-Shanks), if a is a square.
std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p);

/// Exponent of 2 in n; n > 0.
int two_adic_valuation(std::uint64_t n) noexcept;

}  // namespace thetagraph
