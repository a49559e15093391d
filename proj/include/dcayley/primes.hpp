#pragma once

#include <cstdint>
#include <vector>

namespace dcayley {

// floor(sqrt(m)) and ceil(sqrt(m)), exact for every 64-bit input.
std::uint64_t isqrt(std::uint64_t m) noexcept;
std::uint64_t ceil_sqrt(std::uint64_t m) noexcept;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

// Deterministic Miller-Rabin; correct for every m < 2^64.
bool is_prime(std::uint64_t m) noexcept;

// Sieve of Eratosthenes, primes <= limit in increasing order.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// Distinct prime factors in increasing order, by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t m);

}  // namespace dcayley
