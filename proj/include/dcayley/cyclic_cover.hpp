#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dcayley {

// A negation-closed set of nonzero residues mod n whose Cayley graph on Z_n
// has diameter at most 2. Built from {+-1..+-M} u {+-K, +-2K, ..., +-MK}
// with K = ceil(sqrt n), M = floor(K/2).
struct CyclicCover {
  std::uint64_t n = 0;
  std::uint64_t K = 0;
  std::uint64_t M = 0;
  std::vector<std::uint64_t> residues;  // sorted, distinct
  // Number of +-r pairs added on top of the base formula to reach
  // diameter <= 2. Expected to be 0; reported rather than assumed.
  std::uint64_t augmentations = 0;

  bool contains(std::uint64_t r) const;
};

// Throws DomainError for n < 2.
CyclicCover cover_set(std::uint64_t n);

// Exact diameter of Cay(Z_n, residues) by BFS from 0; nullopt when the
// residues do not generate Z_n. Throws InvalidGeneratingSet when a residue is
// zero, out of range, or its negation is missing.
std::optional<std::uint64_t> cyclic_diameter(std::uint64_t n, std::span<const std::uint64_t> residues);

// A word of at most two cover residues summing to k mod n (empty for k = 0).
std::vector<std::uint64_t> cyclic_word(const CyclicCover& cover, std::uint64_t k);

}  // namespace dcayley
