#include "dcayley/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "dcayley/diameter.hpp"
#include "dcayley/errors.hpp"
#include "dcayley/primes.hpp"

namespace dcayley {

namespace {

constexpr std::uint64_t kMaxDegree = std::uint64_t{1} << 31;

void require_degree(std::uint64_t d) {
  if (d > kMaxDegree) {
    throw DomainError("degree " + std::to_string(d) + " too large");
  }
}

}  // namespace

std::uint64_t moore_bound(std::uint64_t d) {
  require_degree(d);
  return d * d + 1;
}

std::uint64_t dihedral_upper_bound(std::uint64_t d) {
  require_degree(d);
  return (d + 1) * (d + 1) / 2;
}

std::uint64_t min_degree_bound(std::uint64_t n) {
  // Smallest integer k with k >= 2 sqrt(n) - 1, i.e. (k+1)^2 >= 4n.
  if (n > std::numeric_limits<std::uint64_t>::max() / 4) {
    throw DomainError("n too large");
  }
  return ceil_sqrt(4 * n) - 1;
}

std::uint64_t nominal_degree(std::uint64_t p) { return 2 * (p + ceil_sqrt(p) - 1); }

std::optional<std::uint64_t> best_prime_for_degree(std::uint64_t d) {
  if (d < kMinReportDegree) {
    throw DomainError("prime selection needs d >= 6, got " + std::to_string(d));
  }
  require_degree(d);
  // nominal_degree is strictly increasing and >= 2x, so the cap lies in [1, d/2].
  std::uint64_t lo = 1;
  std::uint64_t hi = d / 2;
  while (lo < hi) {
    const auto mid = lo + (hi - lo + 1) / 2;
    if (nominal_degree(mid) <= d) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  for (auto x = lo; x >= 2; --x) {
    if (is_prime(x)) {
      return x;
    }
  }
  return std::nullopt;
}

std::uint64_t lower_bound_order(std::uint64_t d) {
  const auto p = best_prime_for_degree(d);
  return p ? 2 * *p * (*p - 1) : 0;
}

double asymptotic_lower(std::uint64_t d) {
  const auto x = static_cast<double>(d);
  return 0.5 * x * x - kAsymptoticCoefficient * std::pow(x, kAsymptoticExponent);
}

std::vector<Element> pad_with_involutions(const GroupSpec& spec, std::span<const Element> S,
                                          std::uint64_t target_degree, std::uint64_t cap) {
  const auto report = validate_generating_set(spec, S);
  if (!report.ok()) {
    throw InvalidGeneratingSet("cannot pad an invalid generating set");
  }
  if (target_degree < S.size()) {
    throw Infeasible("target degree " + std::to_string(target_degree) + " is below |S| = " +
                     std::to_string(S.size()));
  }
  const IndexedGroup group(spec, cap);
  std::unordered_set<std::uint64_t> present;
  for (const auto& s : S) {
    present.insert(group.index(s));
  }
  std::vector<Element> out(S.begin(), S.end());
  for (std::uint64_t i = 1; i < group.order() && out.size() < target_degree; ++i) {
    if (group.multiply(i, i) == IndexedGroup::identity() && !present.contains(i)) {
      out.push_back(group.element(i));
    }
  }
  if (out.size() < target_degree) {
    throw Infeasible("only " + std::to_string(out.size() - S.size()) + " involutions available outside S; need " +
                     std::to_string(target_degree - S.size()));
  }
  return out;
}

BoundReport build_report(std::uint64_t d) {
  BoundReport r;
  r.d = d;
  r.p = best_prime_for_degree(d);
  r.moore = moore_bound(d);
  r.dihedral_upper = dihedral_upper_bound(d);
  r.asymptotic_lower = asymptotic_lower(d);
  if (r.p) {
    r.nominal_degree = nominal_degree(*r.p);
    r.constructed_order = 2 * *r.p * (*r.p - 1);
    r.degenerate = *r.p < 5;
  }
  r.ratio = static_cast<double>(r.constructed_order) / (static_cast<double>(d) * static_cast<double>(d));
  r.asymptotic_holds = r.asymptotic_lower <= static_cast<double>(r.constructed_order);
  return r;
}

}  // namespace dcayley
