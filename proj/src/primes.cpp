#include "dcayley/primes.hpp"

#include <array>
#include <bit>
#include <cmath>

namespace dcayley {

std::uint64_t isqrt(std::uint64_t m) noexcept {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(m)));
  // Correct the floating-point estimate in both directions.
  while (r > 0 && (r > 0xFFFFFFFFull || r * r > m)) {
    --r;
  }
  while (r < 0xFFFFFFFFull && (r + 1) * (r + 1) <= m) {
    ++r;
  }
  return r;
}

std::uint64_t ceil_sqrt(std::uint64_t m) noexcept {
  const auto r = isqrt(m);
  return r * r == m ? r : r + 1;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) {
      result = mul_mod(result, base, m);
    }
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t m) noexcept {
  if (m < 2) {
    return false;
  }
  // The first twelve primes are a deterministic witness set below 2^64.
  static constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : kBases) {
    if (m % p == 0) {
      return m == p;
    }
  }
  const int s = std::countr_zero(m - 1);
  const std::uint64_t d = (m - 1) >> s;
  for (auto a : kBases) {
    auto x = pow_mod(a, d, m);
    if (x == 1 || x == m - 1) {
      continue;
    }
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, m);
      if (x == m - 1) {
        composite = false;
        break;
      }
    }
    if (composite) {
      return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) {
    return out;
  }
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) {
      continue;
    }
    out.push_back(i);
    if (i <= limit / i) {
      for (std::uint64_t j = i * i; j <= limit; j += i) {
        composite[j] = true;
      }
    }
  }
  return out;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= m / q; ++q) {
    if (m % q == 0) {
      out.push_back(q);
      while (m % q == 0) {
        m /= q;
      }
    }
  }
  if (m > 1) {
    out.push_back(m);
  }
  return out;
}

}  // namespace dcayley
