#pragma once

// Generalised dihedral groups G = H x| C2, where H is a finite abelian group
// written as a product of cyclic factors and C2 = {+1, -1} acts on H by
// inversion:
//
//   (h, e) * (h', e') = (h + e*h', e*e')
//
// Elements with sign +1 ("rotations") form the index-2 subgroup isomorphic
// to H; elements with sign -1 ("reflections") are all involutions.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dcayley {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

enum class Sign : std::int8_t { Minus = -1, Plus = 1 };

constexpr Sign operator*(Sign x, Sign y) noexcept {
  return x == y ? Sign::Plus : Sign::Minus;
}

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

struct Element {
  std::vector<std::uint64_t> h;
  Sign sign = Sign::Plus;

  friend auto operator<=>(const Element&, const Element&) = default;
  friend bool operator==(const Element&, const Element&) = default;
};

class GroupSpec {
 public:
  // H trivial: the group of order 2.
  GroupSpec() = default;

  // Throws DomainError if any factor is < 2 or the order overflows.
  explicit GroupSpec(std::vector<std::uint64_t> factor_orders);

  // "6", "2,4", or "1" for trivial H.
  static GroupSpec parse(std::string_view text);

  std::span<const std::uint64_t> factor_orders() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }

  // |H|.
  std::uint64_t n() const noexcept { return n_; }
  std::uint64_t order() const noexcept { return 2 * n_; }

  Element identity() const { return Element{std::vector<std::uint64_t>(factors_.size(), 0), Sign::Plus}; }
  bool contains(const Element& x) const noexcept;

  // Same syntax parse() accepts.
  std::string to_string() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::vector<std::uint64_t> factors_;
  std::uint64_t n_ = 1;
};

// All of these throw InvalidElement when an argument is not in the group.
Element multiply(const GroupSpec& spec, const Element& x, const Element& y);
Element inverse(const GroupSpec& spec, const Element& x);
bool is_involution(const GroupSpec& spec, const Element& x);

// Canonical order: sign is the most significant digit (rotations first), then
// h as a mixed-radix number with the last factor least significant. Index 0
// is the identity.
std::vector<Element> enumerate_elements(const GroupSpec& spec,
                                        std::uint64_t cap = kDefaultEnumerationCap);
std::uint64_t element_index(const GroupSpec& spec, const Element& x);
Element index_element(const GroupSpec& spec, std::uint64_t index);

// Text form "h1,h2,...,hk;+1" (";-1" for reflections, ";+1" alone when H is
// trivial).
std::string format_element(const Element& x);
Element parse_element(std::string_view text);
Element parse_element(const GroupSpec& spec, std::string_view text);

// Arithmetic on canonical indices, for the hot loops of BFS and search.
// Construction enforces the enumeration cap.
class IndexedGroup {
 public:
  explicit IndexedGroup(GroupSpec spec, std::uint64_t cap = kDefaultEnumerationCap);

  const GroupSpec& spec() const noexcept { return spec_; }
  std::uint64_t order() const noexcept { return spec_.order(); }
  std::uint64_t n() const noexcept { return spec_.n(); }

  static constexpr std::uint64_t identity() noexcept { return 0; }
  bool is_reflection(std::uint64_t i) const noexcept { return i >= spec_.n(); }

  std::uint64_t index(const Element& x) const { return element_index(spec_, x); }
  Element element(std::uint64_t i) const { return index_element(spec_, i); }

  std::uint64_t multiply(std::uint64_t x, std::uint64_t y) const noexcept;
  std::uint64_t inverse(std::uint64_t x) const noexcept;

 private:
  GroupSpec spec_;
};

}  // namespace dcayley
