#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dcayley/group.hpp"

namespace dcayley {

struct Validation {
  bool identity_present = false;
  std::vector<Element> invalid;           // not elements of the group
  std::vector<Element> duplicates;
  std::vector<Element> missing_inverses;  // s with s^-1 not in S

  bool ok() const noexcept {
    return !identity_present && invalid.empty() && duplicates.empty() && missing_inverses.empty();
  }
};

Validation validate_generating_set(const GroupSpec& spec, std::span<const Element> S);

// Eccentricity of the identity in Cay(G, S), which equals the diameter since
// Cayley graphs are vertex-transitive. nullopt when S does not generate G.
// Throws InvalidGeneratingSet for an invalid S, CapExceeded above the cap.
std::optional<std::uint64_t> diameter(const GroupSpec& spec, std::span<const Element> S,
                                      std::uint64_t cap = kDefaultEnumerationCap);

struct Coverage {
  bool covered = false;       // {e} u S u S.S == G
  std::vector<Element> gaps;  // uncovered elements, canonical order
};

// Diameter <= 2 test by direct enumeration of the |S|^2 products.
Coverage is_diameter_two(const GroupSpec& spec, std::span<const Element> S,
                         std::uint64_t cap = kDefaultEnumerationCap);

// (m1, m2) = (rotations in S, reflections in S).
struct SplitCounts {
  std::uint64_t rotations = 0;
  std::uint64_t reflections = 0;
};

SplitCounts split_counts(const GroupSpec& spec, std::span<const Element> S);

struct CayleyCheck {
  GroupSpec spec;
  std::vector<Element> generators;
  std::uint64_t degree = 0;
  std::optional<std::uint64_t> diameter;
  // witnesses[i] lists positions into generators whose product (left to
  // right) is index_element(spec, i). Filled only on request.
  std::vector<std::vector<std::uint32_t>> witnesses;
};

CayleyCheck check_cayley(const GroupSpec& spec, std::vector<Element> S, bool with_witnesses = false,
                         std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace dcayley
