#include "multmon/oracle.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "multmon/error.hpp"

namespace multmon {

namespace {

bool meets_every_generator(const MonomialIdeal& ideal, const VariableSet& vars) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Monomial& g) {
                       return std::any_of(vars.begin(), vars.end(),
                                          [&](std::size_t v) { return g.exponent(v) > 0; });
                     });
}

// Calls visit(subset) for every k-subset of pool in lexicographic order;
// stops early when visit returns false. `visited` counts against
// kMaxOracleSubsets across calls.
void for_each_subset(const std::vector<std::size_t>& pool, std::size_t k, std::uint64_t& visited,
                     const std::function<bool(const VariableSet&)>& visit) {
  if (k > pool.size()) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  VariableSet subset(k);
  while (true) {
    if (++visited > kMaxOracleSubsets) {
      throw ResourceLimitError("cover enumeration exceeds " + std::to_string(kMaxOracleSubsets) +
                               " variable subsets");
    }
    for (std::size_t i = 0; i < k; ++i) subset[i] = pool[idx[i]];
    if (!visit(subset)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::size_t oracle_cover_size(const MonomialIdeal& ideal) {
  const auto pool = ideal.support();
  std::uint64_t visited = 0;
  for (std::size_t k = 1; k <= pool.size(); ++k) {
    bool found = false;
    for_each_subset(pool, k, visited, [&](const VariableSet& s) {
      found = meets_every_generator(ideal, s);
      return !found;
    });
    if (found) return k;
  }
  throw ConsistencyError("no variable set covers the generators");
}

std::vector<VariableSet> minimal_covers(const MonomialIdeal& ideal) {
  const std::size_t c = oracle_cover_size(ideal);
  std::vector<VariableSet> covers;
  std::uint64_t visited = 0;
  for_each_subset(ideal.support(), c, visited, [&](const VariableSet& s) {
    if (meets_every_generator(ideal, s)) covers.push_back(s);
    return true;
  });
  return covers;
}

std::uint64_t colength(const MonomialIdeal& ideal, const VariableSet& cover) {
  if (!meets_every_generator(ideal, cover)) {
    throw InvalidInputError("variable set does not meet every generator");
  }
  const std::size_t k = cover.size();
  // Restrict to the cover coordinates: the other variables become units.
  std::vector<std::vector<Exponent>> restricted;
  for (const auto& g : ideal.generators()) {
    std::vector<Exponent> r(k);
    for (std::size_t i = 0; i < k; ++i) r[i] = g.exponent(cover[i]);
    restricted.push_back(std::move(r));
  }
  // Box bound per coordinate: the smallest pure power present.
  std::vector<Exponent> bound(k, 0);
  for (const auto& r : restricted) {
    std::size_t nonzero = 0;
    std::size_t where = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (r[i] > 0) {
        ++nonzero;
        where = i;
      }
    }
    if (nonzero == 1 && (bound[where] == 0 || r[where] < bound[where])) {
      bound[where] = r[where];
    }
  }
  std::uint64_t box = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (bound[i] == 0) {
      throw InvalidInputError("restriction to the cover is not Artinian (no pure power of " +
                              ideal.variables()->name(cover[i]) + ")");
    }
    box *= bound[i];
    if (box > kMaxColengthBox) {
      throw ResourceLimitError("colength enumeration box exceeds " +
                               std::to_string(kMaxColengthBox) + " points");
    }
  }

  std::vector<Exponent> point(k, 0);
  std::uint64_t count = 0;
  while (true) {
    bool inside = std::any_of(restricted.begin(), restricted.end(), [&](const auto& r) {
      for (std::size_t i = 0; i < k; ++i) {
        if (r[i] > point[i]) return false;
      }
      return true;
    });
    if (!inside) ++count;
    std::size_t i = 0;
    while (i < k && ++point[i] == bound[i]) point[i++] = 0;
    if (i == k) break;
  }
  return count;
}

std::vector<CoverContribution> cover_contributions(const MonomialIdeal& ideal) {
  std::vector<CoverContribution> out;
  for (auto& cover : minimal_covers(ideal)) {
    std::uint64_t len = colength(ideal, cover);
    out.push_back(CoverContribution{std::move(cover), len});
  }
  return out;
}

ExactInt multiplicity_associativity(const MonomialIdeal& ideal) {
  ExactInt total = 0;
  for (const auto& contribution : cover_contributions(ideal)) total += contribution.colength;
  return total;
}

}  // namespace multmon
