#include "dcayley/search.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "dcayley/bounds.hpp"
#include "dcayley/errors.hpp"

namespace dcayley {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::uint64_t i) noexcept { return Mask{1} << i; }

struct Atom {
  std::uint8_t first;
  std::uint8_t second;  // == first for an involution
  std::uint8_t size;
};

// Depth-first enumeration of atom combinations of a fixed total size with an
// incrementally maintained coverage mask ({e} u S u S.S as a bitset).
class AtomSearch {
 public:
  explicit AtomSearch(const GroupSpec& spec) : group_(spec, kSearchOrderCap) {
    const auto order = group_.order();
    full_ = order == 64 ? ~Mask{0} : bit(order) - 1;
    table_.resize(order * order);
    for (std::uint64_t x = 0; x < order; ++x) {
      for (std::uint64_t y = 0; y < order; ++y) {
        table_[x * order + y] = static_cast<std::uint8_t>(group_.multiply(x, y));
      }
    }
    for (std::uint64_t x = 1; x < order; ++x) {
      const auto inv = group_.inverse(x);
      if (inv == x) {
        atoms_.push_back({static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(x), 1});
      } else if (x < inv) {
        atoms_.push_back({static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(inv), 2});
      }
    }
    // Largest total size reachable from atoms_[i..].
    suffix_capacity_.assign(atoms_.size() + 1, 0);
    for (std::size_t i = atoms_.size(); i-- > 0;) {
      suffix_capacity_[i] = suffix_capacity_[i + 1] + atoms_[i].size;
    }
  }

  const IndexedGroup& group() const noexcept { return group_; }
  std::uint64_t examined() const noexcept { return examined_; }

  // Calls on_hit(members) for each covering set of exactly `size` elements;
  // on_hit returns false to stop the search.
  template <typename OnHit>
  void run(std::uint64_t size, OnHit&& on_hit) {
    members_.clear();
    stopped_ = false;
    if (size > suffix_capacity_[0]) {
      return;
    }
    dfs(0, size, bit(IndexedGroup::identity()), on_hit);
  }

 private:
  Mask add(Mask covered, std::uint8_t y) {
    const auto order = group_.order();
    members_.push_back(y);
    covered |= bit(y);
    for (auto m : members_) {
      covered |= bit(table_[m * order + y]) | bit(table_[y * order + m]);
    }
    return covered;
  }

  template <typename OnHit>
  void dfs(std::size_t start, std::uint64_t remaining, Mask covered, OnHit& on_hit) {
    if (remaining == 0) {
      ++examined_;
      if (covered == full_) {
        std::vector<std::uint64_t> set(members_.begin(), members_.end());
        std::sort(set.begin(), set.end());
        if (!on_hit(set)) {
          stopped_ = true;
        }
      }
      return;
    }
    // Adding r more elements to a set of size s creates at most
    // 2r + 2rs + r(r-1) new products.
    const std::uint64_t s = members_.size();
    const std::uint64_t r = remaining;
    const auto missing = static_cast<std::uint64_t>(std::popcount(full_ & ~covered));
    if (missing > 2 * r + 2 * r * s + r * (r - 1)) {
      return;
    }
    for (std::size_t i = start; i < atoms_.size() && !stopped_; ++i) {
      if (suffix_capacity_[i] < remaining) {
        break;
      }
      const auto& atom = atoms_[i];
      if (atom.size > remaining) {
        continue;
      }
      auto next = add(covered, atom.first);
      if (atom.size == 2) {
        next = add(next, atom.second);
      }
      dfs(i + 1, remaining - atom.size, next, on_hit);
      members_.resize(s);
    }
  }

  IndexedGroup group_;
  Mask full_ = 0;
  std::vector<std::uint8_t> table_;
  std::vector<Atom> atoms_;
  std::vector<std::uint64_t> suffix_capacity_;
  std::vector<std::uint8_t> members_;
  std::uint64_t examined_ = 0;
  bool stopped_ = false;
};

std::vector<Element> to_elements(const IndexedGroup& group, const std::vector<std::uint64_t>& indices) {
  std::vector<Element> out;
  out.reserve(indices.size());
  for (auto i : indices) {
    out.push_back(group.element(i));
  }
  return out;
}

void require_searchable(const GroupSpec& spec) {
  if (spec.order() > kSearchOrderCap) {
    throw CapExceeded("exhaustive search is capped at order " + std::to_string(kSearchOrderCap) + ", got " +
                      std::to_string(spec.order()));
  }
}

void collect_invariant_factors(std::uint64_t remaining, std::uint64_t previous, std::vector<std::uint64_t>& current,
                               std::vector<GroupSpec>& out) {
  if (remaining == 1) {
    out.emplace_back(current);
    return;
  }
  for (std::uint64_t d = previous; d <= remaining; d += previous) {
    if (remaining % d != 0) continue;
    const auto rest = remaining / d;
    // Later factors are multiples of d, so the rest must be too.
    if (rest != 1 && rest % d != 0) continue;
    current.push_back(d);
    collect_invariant_factors(rest, d, current, out);
    current.pop_back();
  }
}

}  // namespace

SearchResult min_degree_diameter2(const GroupSpec& spec, SearchOptions options) {
  require_searchable(spec);
  AtomSearch search(spec);
  SearchResult result;
  result.spec = spec;
  const auto order = spec.order();
  const std::uint64_t first = options.start_at_lower_bound ? std::max<std::uint64_t>(1, min_degree_bound(spec.n())) : 1;
  for (auto size = first; size < order; ++size) {
    std::vector<std::uint64_t> found;
    search.run(size, [&](const std::vector<std::uint64_t>& set) {
      found = set;
      return false;
    });
    if (!found.empty()) {
      result.d_min = size;
      result.witness = to_elements(search.group(), found);
      break;
    }
  }
  result.sets_examined = search.examined();
  if (result.witness.empty()) {
    // S = G \ {e} always covers, so this only happens for malformed input.
    throw Infeasible("no diameter-2 generating set found for H = " + spec.to_string());
  }
  return result;
}

std::uint64_t for_each_diameter_two_set(const GroupSpec& spec, std::uint64_t size,
                                        const std::function<bool(std::span<const Element>)>& visit) {
  require_searchable(spec);
  AtomSearch search(spec);
  std::uint64_t visited = 0;
  search.run(size, [&](const std::vector<std::uint64_t>& set) {
    ++visited;
    const auto elements = to_elements(search.group(), set);
    return visit(elements);
  });
  return visited;
}

ExactDc exact_dc(std::uint64_t d, GroupClass group_class) {
  if (d == 0) {
    throw DomainError("degree must be >= 1");
  }
  if (d > kExactDcMaxDegree) {
    throw CapExceeded("exact DC search is capped at d <= " + std::to_string(kExactDcMaxDegree) + ", got " +
                      std::to_string(d));
  }
  ExactDc result;
  result.d = d;
  for (auto n = dihedral_upper_bound(d) / 2; n >= 1; --n) {
    std::vector<GroupSpec> specs;
    if (group_class == GroupClass::Dihedral) {
      specs.push_back(n == 1 ? GroupSpec{} : GroupSpec({n}));
    } else {
      specs = abelian_specs(n);
    }
    for (const auto& spec : specs) {
      AtomSearch search(spec);
      for (std::uint64_t size = 1; size <= d; ++size) {
        std::vector<std::uint64_t> found;
        search.run(size, [&](const std::vector<std::uint64_t>& set) {
          found = set;
          return false;
        });
        if (!found.empty()) {
          result.order = spec.order();
          result.spec = spec;
          result.witness = to_elements(search.group(), found);
          result.sets_examined += search.examined();
          return result;
        }
      }
      result.sets_examined += search.examined();
    }
  }
  throw Infeasible("no group found for d = " + std::to_string(d));
}

std::vector<GroupSpec> abelian_specs(std::uint64_t n) {
  if (n == 0) {
    throw DomainError("group order must be positive");
  }
  std::vector<GroupSpec> out;
  if (n == 1) {
    out.emplace_back();
    return out;
  }
  std::vector<std::uint64_t> current;
  // The first invariant factor is at least 2.
  for (std::uint64_t d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    const auto rest = n / d;
    if (rest != 1 && rest % d != 0) continue;
    current.assign(1, d);
    collect_invariant_factors(rest, d, current, out);
  }
  return out;
}

}  // namespace dcayley
