#include "dcayley/cyclic_cover.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "dcayley/errors.hpp"
#include "dcayley/primes.hpp"

namespace dcayley {

bool CyclicCover::contains(std::uint64_t r) const {
  return std::binary_search(residues.begin(), residues.end(), r);
}

namespace {

// Residues of Z_n not expressible as a sum of at most two members.
std::vector<std::uint64_t> uncovered(std::uint64_t n, const std::vector<std::uint64_t>& residues) {
  std::vector<bool> hit(n, false);
  hit[0] = true;
  for (auto r : residues) {
    hit[r] = true;
    for (auto s : residues) {
      hit[(r + s) % n] = true;
    }
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < n; ++r) {
    if (!hit[r]) out.push_back(r);
  }
  return out;
}

void insert_pair(std::vector<std::uint64_t>& residues, std::uint64_t n, std::uint64_t r) {
  r %= n;
  if (r == 0) {
    return;
  }
  residues.push_back(r);
  residues.push_back(n - r);
}

}  // namespace

CyclicCover cover_set(std::uint64_t n) {
  if (n < 2) {
    throw DomainError("cyclic cover needs n >= 2, got " + std::to_string(n));
  }
  CyclicCover cover;
  cover.n = n;
  cover.K = ceil_sqrt(n);
  cover.M = cover.K / 2;
  for (std::uint64_t i = 1; i <= cover.M; ++i) {
    insert_pair(cover.residues, n, i);
    insert_pair(cover.residues, n, i * cover.K);
  }
  auto normalise = [&] {
    std::sort(cover.residues.begin(), cover.residues.end());
    cover.residues.erase(std::unique(cover.residues.begin(), cover.residues.end()), cover.residues.end());
  };
  normalise();
  // Greedy repair: add the smallest uncovered residue with its negation.
  for (auto gaps = uncovered(n, cover.residues); !gaps.empty(); gaps = uncovered(n, cover.residues)) {
    insert_pair(cover.residues, n, gaps.front());
    normalise();
    ++cover.augmentations;
  }
  return cover;
}

std::optional<std::uint64_t> cyclic_diameter(std::uint64_t n, std::span<const std::uint64_t> residues) {
  if (n < 1) {
    throw DomainError("cyclic_diameter needs n >= 1");
  }
  std::vector<bool> member(n, false);
  for (auto r : residues) {
    if (r == 0 || r >= n) {
      throw InvalidGeneratingSet("residue " + std::to_string(r) + " is zero or out of range mod " +
                                 std::to_string(n));
    }
    member[r] = true;
  }
  for (auto r : residues) {
    if (!member[n - r]) {
      throw InvalidGeneratingSet("negation of residue " + std::to_string(r) + " missing mod " +
                                 std::to_string(n));
    }
  }
  std::vector<std::uint64_t> dist(n, UINT64_MAX);
  std::deque<std::uint64_t> queue{0};
  dist[0] = 0;
  std::uint64_t reached = 1;
  std::uint64_t ecc = 0;
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (auto r : residues) {
      const auto y = (x + r) % n;
      if (dist[y] == UINT64_MAX) {
        dist[y] = dist[x] + 1;
        ecc = dist[y];
        ++reached;
        queue.push_back(y);
      }
    }
  }
  if (reached != n) {
    return std::nullopt;
  }
  return ecc;
}

std::vector<std::uint64_t> cyclic_word(const CyclicCover& cover, std::uint64_t k) {
  k %= cover.n;
  if (k == 0) {
    return {};
  }
  if (cover.contains(k)) {
    return {k};
  }
  for (auto r : cover.residues) {
    const auto rest = (k + cover.n - r) % cover.n;
    if (cover.contains(rest)) {
      return {r, rest};
    }
  }
  throw InvalidGeneratingSet("residue " + std::to_string(k) + " has no length-2 word mod " +
                             std::to_string(cover.n));
}

}  // namespace dcayley
