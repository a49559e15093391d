#include "dcayley/diameter.hpp"

#include <algorithm>
#include <set>

#include "dcayley/errors.hpp"

namespace dcayley {

namespace {

class Bitset {
 public:
  explicit Bitset(std::uint64_t size) : words_((size + 63) / 64, 0) {}

  bool test(std::uint64_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::uint64_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

 private:
  std::vector<std::uint64_t> words_;
};

std::vector<std::uint64_t> validated_indices(const IndexedGroup& group, std::span<const Element> S) {
  const auto report = validate_generating_set(group.spec(), S);
  if (!report.ok()) {
    std::string why;
    if (report.identity_present) why += " contains the identity;";
    if (!report.invalid.empty()) why += " element " + format_element(report.invalid.front()) + " not in group;";
    if (!report.duplicates.empty()) why += " duplicate " + format_element(report.duplicates.front()) + ";";
    if (!report.missing_inverses.empty()) {
      why += " inverse of " + format_element(report.missing_inverses.front()) + " missing;";
    }
    throw InvalidGeneratingSet("invalid generating set:" + why);
  }
  std::vector<std::uint64_t> out;
  out.reserve(S.size());
  for (const auto& s : S) {
    out.push_back(group.index(s));
  }
  return out;
}

}  // namespace

Validation validate_generating_set(const GroupSpec& spec, std::span<const Element> S) {
  Validation report;
  std::set<Element> seen;
  for (const auto& s : S) {
    if (!spec.contains(s)) {
      report.invalid.push_back(s);
      continue;
    }
    if (s == spec.identity()) {
      report.identity_present = true;
    }
    if (!seen.insert(s).second) {
      report.duplicates.push_back(s);
    }
  }
  for (const auto& s : S) {
    if (spec.contains(s) && !seen.contains(inverse(spec, s))) {
      report.missing_inverses.push_back(s);
    }
  }
  return report;
}

std::optional<std::uint64_t> diameter(const GroupSpec& spec, std::span<const Element> S, std::uint64_t cap) {
  std::vector<Element> copy(S.begin(), S.end());
  return check_cayley(spec, std::move(copy), false, cap).diameter;
}

Coverage is_diameter_two(const GroupSpec& spec, std::span<const Element> S, std::uint64_t cap) {
  const IndexedGroup group(spec, cap);
  const auto gens = validated_indices(group, S);
  Bitset hit(group.order());
  hit.set(IndexedGroup::identity());
  for (auto s : gens) {
    hit.set(s);
    for (auto t : gens) {
      hit.set(group.multiply(s, t));
    }
  }
  Coverage result;
  for (std::uint64_t i = 0; i < group.order(); ++i) {
    if (!hit.test(i)) {
      result.gaps.push_back(group.element(i));
    }
  }
  result.covered = result.gaps.empty();
  return result;
}

SplitCounts split_counts(const GroupSpec& spec, std::span<const Element> S) {
  SplitCounts counts;
  for (const auto& s : S) {
    if (!spec.contains(s)) {
      throw InvalidElement(format_element(s) + " is not in the group");
    }
    if (s.sign == Sign::Plus) {
      ++counts.rotations;
    } else {
      ++counts.reflections;
    }
  }
  return counts;
}

CayleyCheck check_cayley(const GroupSpec& spec, std::vector<Element> S, bool with_witnesses, std::uint64_t cap) {
  const IndexedGroup group(spec, cap);
  const auto gens = validated_indices(group, S);
  const auto order = group.order();

  constexpr std::uint32_t kNone = UINT32_MAX;
  std::vector<std::uint32_t> via;     // generator used to reach each element
  std::vector<std::uint64_t> parent;  // predecessor on the BFS tree
  if (with_witnesses) {
    via.assign(order, kNone);
    parent.assign(order, 0);
  }

  Bitset visited(order);
  visited.set(IndexedGroup::identity());
  std::vector<std::uint64_t> frontier{IndexedGroup::identity()};
  std::vector<std::uint64_t> next;
  std::uint64_t reached = 1;
  std::uint64_t depth = 0;
  while (reached < order) {
    next.clear();
    for (auto x : frontier) {
      for (std::uint32_t j = 0; j < gens.size(); ++j) {
        const auto y = group.multiply(x, gens[j]);
        if (!visited.test(y)) {
          visited.set(y);
          next.push_back(y);
          if (with_witnesses) {
            via[y] = j;
            parent[y] = x;
          }
        }
      }
    }
    if (next.empty()) {
      break;
    }
    ++depth;
    reached += next.size();
    frontier.swap(next);
  }

  CayleyCheck check;
  check.spec = spec;
  check.degree = gens.size();
  check.generators = std::move(S);
  if (reached == order) {
    check.diameter = depth;
  }
  if (with_witnesses) {
    check.witnesses.resize(order);
    for (std::uint64_t i = 1; i < order; ++i) {
      if (via[i] == kNone) continue;
      auto& word = check.witnesses[i];
      for (auto x = i; x != IndexedGroup::identity(); x = parent[x]) {
        word.push_back(via[x]);
      }
      std::reverse(word.begin(), word.end());
    }
  }
  return check;
}

}  // namespace dcayley
