#include "multmon/invariants.hpp"

#include <algorithm>

namespace multmon {

namespace {

// Minimum hitting set of the generator supports.
class CoverSearch {
 public:
  explicit CoverSearch(const MonomialIdeal& ideal) : num_vars_(ideal.variables()->size()) {
    for (const auto& g : ideal.generators()) supports_.push_back(g.support());
    std::vector<std::size_t> all(supports_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    best_ = greedy_cover(all);
    search(all, 0);
  }

  std::size_t result() const { return best_; }

 private:
  bool contains(std::size_t gen, std::size_t var) const {
    const auto& s = supports_[gen];
    return std::binary_search(s.begin(), s.end(), var);
  }

  std::vector<std::size_t> remove_hit(const std::vector<std::size_t>& uncovered,
                                      std::size_t var) const {
    std::vector<std::size_t> rest;
    for (std::size_t g : uncovered) {
      if (!contains(g, var)) rest.push_back(g);
    }
    return rest;
  }

  std::size_t greedy_cover(std::vector<std::size_t> uncovered) const {
    std::size_t used = 0;
    while (!uncovered.empty()) {
      std::vector<std::size_t> hits(num_vars_, 0);
      for (std::size_t g : uncovered) {
        for (std::size_t v : supports_[g]) ++hits[v];
      }
      auto best = std::max_element(hits.begin(), hits.end()) - hits.begin();
      uncovered = remove_hit(uncovered, static_cast<std::size_t>(best));
      ++used;
    }
    return used;
  }

  // Generators with pairwise disjoint supports each need their own variable.
  std::size_t packing_bound(const std::vector<std::size_t>& uncovered) const {
    std::vector<std::size_t> order = uncovered;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return supports_[a].size() < supports_[b].size();
    });
    std::vector<char> taken(num_vars_, 0);
    std::size_t count = 0;
    for (std::size_t g : order) {
      const auto& s = supports_[g];
      if (std::none_of(s.begin(), s.end(), [&](std::size_t v) { return taken[v]; })) {
        for (std::size_t v : s) taken[v] = 1;
        ++count;
      }
    }
    return count;
  }

  void search(const std::vector<std::size_t>& uncovered, std::size_t depth) {
    if (uncovered.empty()) {
      best_ = std::min(best_, depth);
      return;
    }
    if (depth + packing_bound(uncovered) >= best_) return;
    // Branch on the variables of the most constrained uncovered generator.
    std::size_t pick = *std::min_element(
        uncovered.begin(), uncovered.end(), [&](std::size_t a, std::size_t b) {
          return supports_[a].size() < supports_[b].size();
        });
    for (std::size_t v : supports_[pick]) {
      search(remove_hit(uncovered, v), depth + 1);
    }
  }

  std::size_t num_vars_;
  std::vector<std::vector<std::size_t>> supports_;
  std::size_t best_ = 0;
};

bool pairwise_coprime(const MonomialIdeal& ideal, std::optional<std::size_t> skip) {
  const std::size_t q = ideal.size();
  for (std::size_t i = 0; i < q; ++i) {
    if (skip && *skip == i) continue;
    for (std::size_t j = i + 1; j < q; ++j) {
      if (skip && *skip == j) continue;
      if (!ideal[i].coprime_to(ideal[j])) return false;
    }
  }
  return true;
}

}  // namespace

std::size_t codim(const MonomialIdeal& ideal) {
  return CoverSearch(ideal).result();
}

DominanceReport dominance(const MonomialIdeal& ideal) {
  const std::size_t q = ideal.size();
  const std::size_t n = ideal.variables()->size();
  DominanceReport report;
  report.witness.assign(q, std::nullopt);
  for (std::size_t v = 0; v < n; ++v) {
    // Only the unique strict maximum of a column can be dominant in it.
    std::size_t top = 0;
    bool unique = true;
    for (std::size_t i = 1; i < q; ++i) {
      Exponent e = ideal[i].exponent(v);
      Exponent best = ideal[top].exponent(v);
      if (e > best) {
        top = i;
        unique = true;
      } else if (e == best) {
        unique = false;
      }
    }
    if (unique && ideal[top].exponent(v) > 0 && !report.witness[top]) {
      report.witness[top] = v;
    }
  }
  report.dominant = std::all_of(report.witness.begin(), report.witness.end(),
                                [](const auto& w) { return w.has_value(); });
  return report;
}

bool is_dominant(const MonomialIdeal& ideal) { return dominance(ideal).dominant; }

bool is_complete_intersection(const MonomialIdeal& ideal) {
  return pairwise_coprime(ideal, std::nullopt);
}

std::optional<std::size_t> almost_complete_intersection_witness(
    const MonomialIdeal& ideal) {
  const std::size_t q = ideal.size();
  if (q < 2) return std::nullopt;
  const std::size_t c = codim(ideal);
  if (c != q - 1) return std::nullopt;
  for (std::size_t t = 0; t < q; ++t) {
    if (pairwise_coprime(ideal, t)) return t;
  }
  return std::nullopt;
}

ClassificationReport classify(const MonomialIdeal& ideal) {
  ClassificationReport r;
  r.codim = codim(ideal);
  auto dom = dominance(ideal);
  r.is_dominant = dom.dominant;
  r.dominant_witness = std::move(dom.witness);
  r.is_ci = is_complete_intersection(ideal);
  r.aci_witness = almost_complete_intersection_witness(ideal);
  r.is_codim1 = r.codim == 1;
  return r;
}

}  // namespace multmon
