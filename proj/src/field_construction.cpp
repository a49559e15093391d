#include "dcayley/field_construction.hpp"

#include <algorithm>

#include "dcayley/errors.hpp"
#include "dcayley/primes.hpp"

namespace dcayley {

namespace {

std::uint64_t inv_mod(std::uint64_t x, std::uint64_t p) { return pow_mod(x, p - 2, p); }

void require(std::uint64_t p, const FieldTriple& x) {
  if (!triple_valid(p, x)) {
    throw InvalidElement("triple (" + std::to_string(x.a) + "," + std::to_string(x.b) + "," +
                         std::to_string(to_int(x.c)) + ") is not valid over GF(" + std::to_string(p) + ")");
  }
}

LabelledGenerator make_v() { return {Family::V, 0, FieldTriple{0, 1, Sign::Minus}}; }
LabelledGenerator make_a(std::uint64_t x) { return {Family::A, x, FieldTriple{0, x, Sign::Plus}}; }
LabelledGenerator make_b(std::uint64_t x) { return {Family::B, x, FieldTriple{x, x, Sign::Minus}}; }
LabelledGenerator make_c(std::uint64_t k) { return {Family::C, k, FieldTriple{k, 1, Sign::Plus}}; }

void require_construction_prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw NotPrime(std::to_string(p) + " is not prime");
  }
  if (p < kMinConstructionPrime) {
    throw UnsupportedPrime("construction requires p >= 5, got " + std::to_string(p));
  }
}

}  // namespace

bool triple_valid(std::uint64_t p, const FieldTriple& x) noexcept {
  return p >= 2 && x.a < p && x.b >= 1 && x.b < p && (x.c == Sign::Plus || x.c == Sign::Minus);
}

FieldTriple triple_multiply(std::uint64_t p, const FieldTriple& x, const FieldTriple& y) {
  require(p, x);
  require(p, y);
  FieldTriple out;
  out.a = x.c == Sign::Plus ? (x.a + y.a) % p : (x.a + p - y.a) % p;
  out.b = mul_mod(x.b, x.c == Sign::Plus ? y.b : inv_mod(y.b, p), p);
  out.c = x.c * y.c;
  return out;
}

FieldTriple triple_inverse(std::uint64_t p, const FieldTriple& x) {
  require(p, x);
  if (x.c == Sign::Minus) {
    return x;
  }
  return FieldTriple{(p - x.a) % p, inv_mod(x.b, p), Sign::Plus};
}

std::string LabelledGenerator::label() const {
  switch (family) {
    case Family::V:
      return "V";
    case Family::A:
      return "A(" + std::to_string(parameter) + ")";
    case Family::B:
      return "B(" + std::to_string(parameter) + ")";
    case Family::C:
      return "C(" + std::to_string(parameter) + ")";
    case Family::Pad:
      return "I(" + std::to_string(parameter) + ")";
  }
  return "?";
}

std::vector<std::uint64_t> FieldGenSet::family_sizes() const {
  std::vector<std::uint64_t> sizes(4, 0);
  for (const auto& g : generators) {
    if (g.family != Family::Pad) {
      ++sizes[static_cast<std::size_t>(g.family)];
    }
  }
  return sizes;
}

FieldGenSet build_generating_set(std::uint64_t p) {
  require_construction_prime(p);
  FieldGenSet set;
  set.p = p;
  set.nominal_degree = 2 * (p + ceil_sqrt(p) - 1);
  set.cover = cover_set(p);
  set.generators.reserve(2 * p + set.cover.residues.size());
  set.generators.push_back(make_v());
  for (std::uint64_t x = 2; x < p; ++x) {
    set.generators.push_back(make_a(x));
  }
  for (std::uint64_t x = 1; x < p; ++x) {
    set.generators.push_back(make_b(x));
  }
  for (auto k : set.cover.residues) {
    set.generators.push_back(make_c(k));
  }
  // Families have distinct (a == 0, b == 1, c) signatures, so the count of
  // distinct triples is the total; dedup anyway in case that ever changes.
  std::vector<FieldTriple> elements;
  elements.reserve(set.generators.size());
  for (const auto& g : set.generators) {
    elements.push_back(g.element);
  }
  std::sort(elements.begin(), elements.end());
  set.actual_degree = static_cast<std::uint64_t>(std::unique(elements.begin(), elements.end()) - elements.begin());
  return set;
}

std::vector<LabelledGenerator> decompose(std::uint64_t p, const FieldTriple& target, const FieldGenSet& set) {
  require(p, target);
  if (set.p != p) {
    throw DomainError("generating set was built for p = " + std::to_string(set.p));
  }
  if (target == field_identity()) {
    throw DomainError("the identity has no non-empty word; handle it separately");
  }
  const auto x = target.a;
  const auto y = target.b;
  if (target.c == Sign::Minus) {
    if (x != 0 && x != y) {
      return {make_a(mul_mod(y, inv_mod(x, p), p)), make_b(x)};
    }
    if (x != 0) {
      return {make_b(x)};
    }
    if (y != 1) {
      return {make_a(y), make_v()};
    }
    return {make_v()};
  }
  if (y != 1 && x != 0) {
    const auto w = inv_mod((y + p - 1) % p, p);
    const auto z = mul_mod(mul_mod(y, x, p), w, p);
    const auto t = mul_mod(x, w, p);
    return {make_b(z), make_b(t)};
  }
  if (y != 1) {
    return {make_a(y)};
  }
  std::vector<LabelledGenerator> word;
  for (auto k : cyclic_word(set.cover, x)) {
    word.push_back(make_c(k));
  }
  return word;
}

FieldTriple word_product(std::uint64_t p, const std::vector<LabelledGenerator>& word) {
  FieldTriple acc = field_identity();
  for (const auto& g : word) {
    acc = triple_multiply(p, acc, g.element);
  }
  return acc;
}

std::uint64_t find_primitive_root(std::uint64_t p) {
  if (!is_prime(p)) {
    throw NotPrime(std::to_string(p) + " is not prime");
  }
  if (p == 2) {
    return 1;
  }
  const auto factors = prime_factors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    const bool primitive = std::all_of(factors.begin(), factors.end(),
                                       [&](std::uint64_t q) { return pow_mod(g, (p - 1) / q, p) != 1; });
    if (primitive) {
      return g;
    }
  }
  throw DomainError("no primitive root found");  // unreachable for prime p
}

DiscreteLog::DiscreteLog(std::uint64_t p, std::uint64_t g) : p_(p), g_(g) {
  if (!is_prime(p)) {
    throw NotPrime(std::to_string(p) + " is not prime");
  }
  if (p > kDiscreteLogCap) {
    throw CapExceeded("discrete-log table capped at p <= " + std::to_string(kDiscreteLogCap));
  }
  log_.assign(p, UINT64_MAX);
  exp_.assign(p - 1, 0);
  std::uint64_t power = 1 % p;
  for (std::uint64_t e = 0; e + 1 < p; ++e) {
    if (power == 0 || log_[power] != UINT64_MAX) {
      throw DomainError(std::to_string(g) + " is not a primitive root mod " + std::to_string(p));
    }
    log_[power] = e;
    exp_[e] = power;
    power = mul_mod(power, g, p);
  }
}

std::uint64_t DiscreteLog::log(std::uint64_t b) const {
  if (b == 0 || b >= p_) {
    throw InvalidElement("log of " + std::to_string(b) + " undefined mod " + std::to_string(p_));
  }
  return log_[b];
}

GroupSpec field_group_spec(std::uint64_t p) {
  if (p < 3) {
    throw DomainError("field group needs p >= 3");
  }
  return GroupSpec({p, p - 1});
}

Element to_gd_element(const DiscreteLog& dlog, const FieldTriple& t) {
  require(dlog.p(), t);
  return Element{{t.a, dlog.log(t.b)}, t.c};
}

Element to_gd_element(std::uint64_t p, const FieldTriple& t, std::uint64_t g) {
  return to_gd_element(DiscreteLog(p, g), t);
}

FieldTriple from_gd_element(const DiscreteLog& dlog, const Element& x) {
  if (!field_group_spec(dlog.p()).contains(x)) {
    throw InvalidElement(format_element(x) + " is not in Z_p x Z_(p-1) x| C2");
  }
  return FieldTriple{x.h[0], dlog.exp(x.h[1]), x.sign};
}

std::vector<Element> transport(const DiscreteLog& dlog, const std::vector<LabelledGenerator>& generators) {
  std::vector<Element> out;
  out.reserve(generators.size());
  for (const auto& g : generators) {
    out.push_back(to_gd_element(dlog, g.element));
  }
  return out;
}

}  // namespace dcayley
