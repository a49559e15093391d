#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "dcayley/bounds.hpp"
#include "dcayley/diameter.hpp"
#include "dcayley/errors.hpp"
#include "dcayley/field_construction.hpp"

using namespace dcayley;

namespace {

Element el(std::vector<std::uint64_t> h, int sign) { return Element{std::move(h), sign < 0 ? Sign::Minus : Sign::Plus}; }

// Reference diameter: Floyd-Warshall on the graph with an edge g ~ s g for
// every s in S, built from element arithmetic only.
std::optional<std::uint64_t> all_pairs_diameter(const GroupSpec& spec, const std::vector<Element>& S) {
  const auto all = enumerate_elements(spec);
  const auto n = all.size();
  constexpr auto kInf = std::numeric_limits<std::uint64_t>::max() / 4;
  std::vector<std::uint64_t> dist(n * n, kInf);
  for (std::size_t i = 0; i < n; ++i) {
    dist[i * n + i] = 0;
    for (const auto& s : S) {
      const auto j = static_cast<std::size_t>(
          std::find(all.begin(), all.end(), multiply(spec, s, all[i])) - all.begin());
      dist[i * n + j] = std::min<std::uint64_t>(dist[i * n + j], 1);
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        dist[i * n + j] = std::min(dist[i * n + j], dist[i * n + k] + dist[k * n + j]);
  const auto worst = *std::max_element(dist.begin(), dist.end());
  if (worst >= kInf) return std::nullopt;
  return worst;
}

// Random inverse-closed identity-free subset.
std::vector<Element> random_set(const GroupSpec& spec, std::mt19937_64& rng, double density) {
  std::bernoulli_distribution take(density);
  std::set<Element> chosen;
  for (const auto& x : enumerate_elements(spec)) {
    if (x == spec.identity() || chosen.contains(x)) continue;
    if (take(rng)) {
      chosen.insert(x);
      chosen.insert(inverse(spec, x));
    }
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace

TEST_CASE("validate_generating_set") {
  const GroupSpec z3({3});
  const std::vector<Element> reflections{el({0}, -1), el({1}, -1), el({2}, -1)};
  CHECK(validate_generating_set(z3, reflections).ok());

  const std::vector<Element> lopsided{el({1}, +1)};
  const auto missing = validate_generating_set(z3, lopsided);
  CHECK_FALSE(missing.ok());
  REQUIRE(missing.missing_inverses.size() == 1);
  CHECK(missing.missing_inverses[0] == el({1}, +1));

  const std::vector<Element> with_identity{el({0}, +1), el({0}, -1)};
  CHECK(validate_generating_set(z3, with_identity).identity_present);

  const std::vector<Element> bad{el({5}, -1)};
  CHECK(validate_generating_set(z3, bad).invalid.size() == 1);
  const std::vector<Element> twice{el({0}, -1), el({0}, -1)};
  CHECK(validate_generating_set(z3, twice).duplicates.size() == 1);
}

TEST_CASE("diameter by BFS") {
  const GroupSpec z3({3});
  const std::vector<Element> mixed{el({1}, +1), el({2}, +1), el({0}, -1)};
  CHECK(diameter(z3, mixed) == 2);
  const std::vector<Element> everything{el({1}, +1), el({2}, +1), el({0}, -1), el({1}, -1), el({2}, -1)};
  CHECK(diameter(z3, everything) == 1);
  const GroupSpec z4({4});
  const std::vector<Element> rotations{el({1}, +1), el({3}, +1)};
  CHECK_FALSE(diameter(z4, rotations).has_value());
  const std::vector<Element> lopsided{el({1}, +1)};
  CHECK_THROWS_AS(diameter(z4, lopsided), InvalidGeneratingSet);
  CHECK_THROWS_AS(diameter(GroupSpec({100}), rotations, 100), CapExceeded);
}

TEST_CASE("is_diameter_two by product enumeration") {
  const auto spec = field_group_spec(5);
  const auto set = build_generating_set(5);
  const auto elements = transport(DiscreteLog(5, 2), set.generators);
  const auto p5 = is_diameter_two(spec, elements);
  CHECK(p5.covered);
  CHECK(p5.gaps.empty());

  const GroupSpec z4({4});
  const std::vector<Element> good{el({0}, -1), el({1}, -1), el({2}, +1)};
  CHECK(is_diameter_two(z4, good).covered);
  const std::vector<Element> reflections{el({0}, -1), el({1}, -1), el({2}, -1)};
  const auto gap = is_diameter_two(z4, reflections);
  CHECK_FALSE(gap.covered);
  CHECK(gap.gaps == std::vector<Element>{el({3}, -1)});
}

TEST_CASE("split_counts") {
  const auto set = build_generating_set(5);
  const auto elements = transport(DiscreteLog(5, 2), set.generators);
  const auto p5 = split_counts(field_group_spec(5), elements);
  CHECK(p5.rotations == 7);
  CHECK(p5.reflections == 5);
  CHECK(p5.reflections * (p5.rotations + 1) >= 20);

  const std::vector<Element> d8{el({0}, -1), el({1}, -1), el({2}, +1)};
  const auto s8 = split_counts(GroupSpec({4}), d8);
  CHECK(s8.rotations == 1);
  CHECK(s8.reflections == 2);

  const std::vector<Element> d6{el({0}, -1), el({1}, -1), el({2}, -1)};
  const auto s6 = split_counts(GroupSpec({3}), d6);
  CHECK(s6.rotations == 0);
  CHECK(s6.reflections == 3);
}

TEST_CASE("BFS matches an all-pairs reference and the coverage test") {
  std::mt19937_64 rng(99);
  const std::vector<GroupSpec> specs{GroupSpec({3}), GroupSpec({5}), GroupSpec({2, 2}), GroupSpec({12}),
                                     GroupSpec({2, 6}), GroupSpec({4, 4}), GroupSpec({25}), GroupSpec({3, 3, 3})};
  int certified = 0;
  for (const auto& spec : specs) {
    for (double density : {0.05, 0.1, 0.2, 0.35}) {
      for (int trial = 0; trial < 4; ++trial) {
        const auto S = random_set(spec, rng, density);
        if (S.empty()) continue;
        CAPTURE(spec.to_string());
        const auto bfs = diameter(spec, S);
        REQUIRE(bfs == all_pairs_diameter(spec, S));
        const auto cover = is_diameter_two(spec, S);
        REQUIRE(cover.covered == (bfs.has_value() && *bfs <= 2));
        if (cover.covered) {
          ++certified;
          const auto split = split_counts(spec, S);
          REQUIRE(split.reflections * (split.rotations + 1) >= spec.n());
          REQUIRE(static_cast<double>(S.size()) >= 2.0 * std::sqrt(static_cast<double>(spec.n())) - 1.0);
        }
      }
    }
  }
  CHECK(certified > 0);
}

TEST_CASE("witness words multiply back to their element") {
  const GroupSpec spec({2, 6});
  const std::vector<Element> S{el({1, 0}, +1), el({0, 1}, +1), el({0, 5}, +1), el({0, 0}, -1)};
  const auto check = check_cayley(spec, S, true);
  REQUIRE(check.diameter.has_value());
  CHECK(check.degree == 4);
  REQUIRE(check.witnesses.size() == spec.order());
  CHECK(check.witnesses[0].empty());
  for (std::uint64_t i = 1; i < spec.order(); ++i) {
    const auto& word = check.witnesses[i];
    REQUIRE(!word.empty());
    REQUIRE(word.size() <= *check.diameter);
    auto acc = spec.identity();
    for (auto j : word) acc = multiply(spec, acc, S[j]);
    REQUIRE(acc == index_element(spec, i));
  }
}
