#include "dcayley/group.hpp"

#include <charconv>
#include <limits>

#include "dcayley/errors.hpp"
#include "parse_util.hpp"

namespace dcayley {

GroupSpec::GroupSpec(std::vector<std::uint64_t> factor_orders) : factors_(std::move(factor_orders)) {
  n_ = 1;
  for (auto m : factors_) {
    if (m < 2) {
      throw DomainError("cyclic factor order must be >= 2, got " + std::to_string(m));
    }
    if (n_ > (std::numeric_limits<std::uint64_t>::max() / 4) / m) {
      throw DomainError("group order overflows 64 bits");
    }
    n_ *= m;
  }
}

GroupSpec GroupSpec::parse(std::string_view text) {
  auto fields = detail::split(text, ',');
  if (fields.size() == 1 && detail::trim(fields[0]) == "1") {
    return GroupSpec{};
  }
  std::vector<std::uint64_t> factors;
  for (auto field : fields) {
    auto value = detail::parse_uint(field);
    if (!value) {
      throw DomainError("bad group spec '" + std::string(text) + "'");
    }
    factors.push_back(*value);
  }
  return GroupSpec(std::move(factors));
}

bool GroupSpec::contains(const Element& x) const noexcept {
  if (x.h.size() != factors_.size()) {
    return false;
  }
  if (x.sign != Sign::Plus && x.sign != Sign::Minus) {
    return false;
  }
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (x.h[i] >= factors_[i]) {
      return false;
    }
  }
  return true;
}

std::string GroupSpec::to_string() const {
  if (factors_.empty()) {
    return "1";
  }
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(factors_[i]);
  }
  return out;
}

namespace {

void require(const GroupSpec& spec, const Element& x) {
  if (!spec.contains(x)) {
    throw InvalidElement("element " + format_element(x) + " is not in the group with H = " +
                         spec.to_string());
  }
}

}  // namespace

Element multiply(const GroupSpec& spec, const Element& x, const Element& y) {
  require(spec, x);
  require(spec, y);
  Element out{std::vector<std::uint64_t>(spec.rank()), x.sign * y.sign};
  auto factors = spec.factor_orders();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto m = factors[i];
    out.h[i] = x.sign == Sign::Plus ? (x.h[i] + y.h[i]) % m : (x.h[i] + m - y.h[i]) % m;
  }
  return out;
}

Element inverse(const GroupSpec& spec, const Element& x) {
  require(spec, x);
  if (x.sign == Sign::Minus) {
    return x;
  }
  Element out{x.h, Sign::Plus};
  auto factors = spec.factor_orders();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    out.h[i] = (factors[i] - x.h[i]) % factors[i];
  }
  return out;
}

bool is_involution(const GroupSpec& spec, const Element& x) {
  require(spec, x);
  return x != spec.identity() && multiply(spec, x, x) == spec.identity();
}

std::vector<Element> enumerate_elements(const GroupSpec& spec, std::uint64_t cap) {
  if (spec.order() > cap) {
    throw CapExceeded("group order " + std::to_string(spec.order()) + " exceeds enumeration cap " +
                      std::to_string(cap));
  }
  std::vector<Element> out;
  out.reserve(spec.order());
  for (std::uint64_t i = 0; i < spec.order(); ++i) {
    out.push_back(index_element(spec, i));
  }
  return out;
}

std::uint64_t element_index(const GroupSpec& spec, const Element& x) {
  require(spec, x);
  std::uint64_t index = 0;
  auto factors = spec.factor_orders();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    index = index * factors[i] + x.h[i];
  }
  return x.sign == Sign::Minus ? index + spec.n() : index;
}

Element index_element(const GroupSpec& spec, std::uint64_t index) {
  if (index >= spec.order()) {
    throw InvalidElement("index " + std::to_string(index) + " out of range for group of order " +
                         std::to_string(spec.order()));
  }
  Element out{std::vector<std::uint64_t>(spec.rank()), Sign::Plus};
  if (index >= spec.n()) {
    out.sign = Sign::Minus;
    index -= spec.n();
  }
  auto factors = spec.factor_orders();
  for (std::size_t i = factors.size(); i-- > 0;) {
    out.h[i] = index % factors[i];
    index /= factors[i];
  }
  return out;
}

std::string format_element(const Element& x) {
  std::string out;
  for (std::size_t i = 0; i < x.h.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(x.h[i]);
  }
  out += x.sign == Sign::Minus ? ";-1" : ";+1";
  return out;
}

Element parse_element(std::string_view text) {
  const auto trimmed = detail::trim(text);
  const auto semi = trimmed.find(';');
  if (semi == std::string_view::npos) {
    throw InvalidElement("element '" + std::string(text) + "' lacks ';<sign>'");
  }
  Element out;
  const auto sign = detail::trim(trimmed.substr(semi + 1));
  if (sign == "+1" || sign == "1") {
    out.sign = Sign::Plus;
  } else if (sign == "-1") {
    out.sign = Sign::Minus;
  } else {
    throw InvalidElement("bad sign in element '" + std::string(text) + "'");
  }
  const auto residues = detail::trim(trimmed.substr(0, semi));
  if (!residues.empty()) {
    for (auto field : detail::split(residues, ',')) {
      auto value = detail::parse_uint(field);
      if (!value) {
        throw InvalidElement("bad residue in element '" + std::string(text) + "'");
      }
      out.h.push_back(*value);
    }
  }
  return out;
}

Element parse_element(const GroupSpec& spec, std::string_view text) {
  auto x = parse_element(text);
  require(spec, x);
  return x;
}

IndexedGroup::IndexedGroup(GroupSpec spec, std::uint64_t cap) : spec_(std::move(spec)) {
  if (spec_.order() > cap) {
    throw CapExceeded("group order " + std::to_string(spec_.order()) + " exceeds enumeration cap " +
                      std::to_string(cap));
  }
}

std::uint64_t IndexedGroup::multiply(std::uint64_t x, std::uint64_t y) const noexcept {
  const auto n = spec_.n();
  const bool x_reflect = x >= n;
  const bool y_reflect = y >= n;
  std::uint64_t a = x_reflect ? x - n : x;
  std::uint64_t b = y_reflect ? y - n : y;
  std::uint64_t result = 0;
  std::uint64_t weight = 1;
  auto factors = spec_.factor_orders();
  for (std::size_t i = factors.size(); i-- > 0;) {
    const auto m = factors[i];
    const auto da = a % m;
    const auto db = b % m;
    a /= m;
    b /= m;
    const auto digit = x_reflect ? (da + m - db) % m : (da + db) % m;
    result += digit * weight;
    weight *= m;
  }
  return x_reflect != y_reflect ? result + n : result;
}

std::uint64_t IndexedGroup::inverse(std::uint64_t x) const noexcept {
  if (x >= spec_.n()) {
    return x;
  }
  std::uint64_t result = 0;
  std::uint64_t weight = 1;
  auto factors = spec_.factor_orders();
  for (std::size_t i = factors.size(); i-- > 0;) {
    const auto m = factors[i];
    const auto d = x % m;
    x /= m;
    result += ((m - d) % m) * weight;
    weight *= m;
  }
  return result;
}

}  // namespace dcayley
