#pragma once

// Exhaustive search over inverse-closed, identity-free generating sets of
// small generalised dihedral groups. Sets are built from "atoms": a single
// involution, or a pair {x, x^-1}. Atoms are taken in canonical index order,
// so results are deterministic.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dcayley/group.hpp"

namespace dcayley {

inline constexpr std::uint64_t kSearchOrderCap = 64;
inline constexpr std::uint64_t kExactDcMaxDegree = 7;

struct SearchOptions {
  // Begin at min_degree_bound(n) instead of size 1. Starting lower turns the
  // search into a check of that bound rather than a use of it.
  bool start_at_lower_bound = true;
};

struct SearchResult {
  GroupSpec spec;
  std::uint64_t d_min = 0;
  std::vector<Element> witness;  // canonical order
  std::uint64_t sets_examined = 0;
};

// Throws CapExceeded when the group order is above kSearchOrderCap.
SearchResult min_degree_diameter2(const GroupSpec& spec, SearchOptions options = {});

// Visits every inverse-closed identity-free S with |S| == size and
// {e} u S u S.S == G, in canonical order. The visitor returns false to stop.
// Returns the number of sets visited.
std::uint64_t for_each_diameter_two_set(const GroupSpec& spec, std::uint64_t size,
                                        const std::function<bool(std::span<const Element>)>& visit);

enum class GroupClass { Dihedral, Generalised };

struct ExactDc {
  std::uint64_t d = 0;
  std::uint64_t order = 0;
  GroupSpec spec;
  std::vector<Element> witness;  // |witness| <= d
  std::uint64_t sets_examined = 0;
};

// Largest order 2n <= dihedral_upper_bound(d) carrying a diameter-2 Cayley
// graph of degree at most d, scanning orders downward. Throws CapExceeded
// for d > kExactDcMaxDegree, DomainError for d = 0.
ExactDc exact_dc(std::uint64_t d, GroupClass group_class = GroupClass::Dihedral);

// Every abelian group of order n, one per isomorphism class, as invariant
// factors d1 | d2 | ... (empty list for n = 1).
std::vector<GroupSpec> abelian_specs(std::uint64_t n);

}  // namespace dcayley
