#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dcayley/group.hpp"

namespace dcayley {

// Asymptotic lower bound: 0.5 d^2 - kAsymptoticCoefficient * d^kAsymptoticExponent.
inline constexpr double kAsymptoticCoefficient = 1.39;
inline constexpr double kAsymptoticExponent = 1.525;
inline constexpr std::uint64_t kMinReportDegree = 6;

// d^2 + 1.
std::uint64_t moore_bound(std::uint64_t d);

// floor((d+1)^2 / 2): no generalised dihedral group of larger order has a
// degree-d diameter-2 Cayley graph.
std::uint64_t dihedral_upper_bound(std::uint64_t d);

// ceil(2 sqrt(n) - 1): smallest degree a diameter-2 Cayley graph of a
// generalised dihedral group of order 2n can have.
std::uint64_t min_degree_bound(std::uint64_t n);

// 2(p + ceil(sqrt p) - 1), the generator count of the field construction.
std::uint64_t nominal_degree(std::uint64_t p);

// Largest prime p with nominal_degree(p) <= d, found by descending search
// from the largest integer satisfying the inequality. Throws DomainError for
// d < 6.
std::optional<std::uint64_t> best_prime_for_degree(std::uint64_t d);

// 2p(p-1) for p = best_prime_for_degree(d); 0 when no prime qualifies.
std::uint64_t lower_bound_order(std::uint64_t d);

// 0.5 d^2 - 1.39 d^1.525, unclamped (negative for small d).
double asymptotic_lower(std::uint64_t d);

// Extends S with involutions of G not already in S, taken in canonical index
// order, until |S'| = target_degree. Throws Infeasible when target_degree <
// |S| or there are not enough involutions, InvalidGeneratingSet for an
// invalid S.
std::vector<Element> pad_with_involutions(const GroupSpec& spec, std::span<const Element> S,
                                          std::uint64_t target_degree,
                                          std::uint64_t cap = kDefaultEnumerationCap);

struct BoundReport {
  std::uint64_t d = 0;
  std::optional<std::uint64_t> p;
  std::uint64_t nominal_degree = 0;     // D(p)
  std::uint64_t constructed_order = 0;  // 2p(p-1)
  std::uint64_t moore = 0;
  std::uint64_t dihedral_upper = 0;
  double asymptotic_lower = 0.0;
  double ratio = 0.0;  // constructed_order / d^2
  // p < 5: the field construction does not apply and the order must be
  // certified some other way.
  bool degenerate = false;
  // asymptotic_lower <= constructed_order.
  bool asymptotic_holds = false;
};

// Throws DomainError for d < 6.
BoundReport build_report(std::uint64_t d);

}  // namespace dcayley
