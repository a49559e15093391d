#pragma once

// Diameter-2 generating set for the dihedral group of order 2p(p-1), written
// as (F+ x F*) x| C2 over F = GF(p). Elements are triples (a, b, c) with
// a in F+, b in F*, c in {+1, -1} and
//
//   (a, b, c)(x, y, z) = (a + c*x, b * y^c, c*z).
//
// Generator families:
//   V    = (0, 1, -1)
//   A(x) = (0, x, +1)   x in F* \ {1}
//   B(x) = (x, x, -1)   x in F*
//   C(k) = (k, 1, +1)   k in cover_set(p)
//
// Every non-identity element is a product of at most two of them.

#include <cstdint>
#include <string>
#include <vector>

#include "dcayley/cyclic_cover.hpp"
#include "dcayley/group.hpp"

namespace dcayley {

inline constexpr std::uint64_t kMinConstructionPrime = 5;
inline constexpr std::uint64_t kDiscreteLogCap = 1'000'000;

struct FieldTriple {
  std::uint64_t a = 0;
  std::uint64_t b = 1;
  Sign c = Sign::Plus;

  friend auto operator<=>(const FieldTriple&, const FieldTriple&) = default;
  friend bool operator==(const FieldTriple&, const FieldTriple&) = default;
};

constexpr FieldTriple field_identity() noexcept { return FieldTriple{}; }

// Throws InvalidElement when a triple is out of range (b must be nonzero).
FieldTriple triple_multiply(std::uint64_t p, const FieldTriple& x, const FieldTriple& y);
FieldTriple triple_inverse(std::uint64_t p, const FieldTriple& x);
bool triple_valid(std::uint64_t p, const FieldTriple& x) noexcept;

// Pad marks an involution added after construction (see pad_with_involutions);
// its parameter is the canonical index of the element in field_group_spec(p).
enum class Family { V, A, B, C, Pad };

struct LabelledGenerator {
  Family family = Family::V;
  std::uint64_t parameter = 0;
  FieldTriple element;

  // "V", "A(3)", "B(2)", "C(4)", "I(17)".
  std::string label() const;

  friend bool operator==(const LabelledGenerator&, const LabelledGenerator&) = default;
};

struct FieldGenSet {
  std::uint64_t p = 0;
  std::vector<LabelledGenerator> generators;
  std::uint64_t nominal_degree = 0;  // 2(p + ceil(sqrt p) - 1)
  std::uint64_t actual_degree = 0;   // number of distinct elements
  CyclicCover cover;

  // Sizes of the V, A, B, C families in that order.
  std::vector<std::uint64_t> family_sizes() const;
};

// Throws NotPrime, or UnsupportedPrime for p < 5.
FieldGenSet build_generating_set(std::uint64_t p);

// Word of one or two generators whose product is target, following the case
// split of the construction. Throws DomainError for the identity.
std::vector<LabelledGenerator> decompose(std::uint64_t p, const FieldTriple& target, const FieldGenSet& set);

FieldTriple word_product(std::uint64_t p, const std::vector<LabelledGenerator>& word);

// Smallest primitive root mod p (1 for p = 2). Throws NotPrime.
std::uint64_t find_primitive_root(std::uint64_t p);

// Exponent and logarithm tables for F* with respect to a primitive root;
// immutable once built.
class DiscreteLog {
 public:
  // Throws NotPrime, CapExceeded (p > kDiscreteLogCap) or DomainError when g
  // is not a primitive root.
  DiscreteLog(std::uint64_t p, std::uint64_t g);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t root() const noexcept { return g_; }
  std::uint64_t log(std::uint64_t b) const;
  std::uint64_t exp(std::uint64_t e) const noexcept { return exp_[e % (p_ - 1)]; }

 private:
  std::uint64_t p_;
  std::uint64_t g_;
  std::vector<std::uint64_t> log_;
  std::vector<std::uint64_t> exp_;
};

// H = Z_p x Z_{p-1}, the additive form of F+ x F*.
GroupSpec field_group_spec(std::uint64_t p);

// (a, b, c) -> ((a, log_g b), c). A group isomorphism onto field_group_spec(p).
Element to_gd_element(const DiscreteLog& dlog, const FieldTriple& t);
Element to_gd_element(std::uint64_t p, const FieldTriple& t, std::uint64_t g);
FieldTriple from_gd_element(const DiscreteLog& dlog, const Element& x);

std::vector<Element> transport(const DiscreteLog& dlog, const std::vector<LabelledGenerator>& generators);

}  // namespace dcayley
