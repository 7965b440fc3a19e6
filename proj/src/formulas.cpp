#include "multmon/formulas.hpp"

#include <algorithm>
#include <numeric>

#include "multmon/error.hpp"
#include "multmon/invariants.hpp"

namespace multmon {

namespace {

ExactInt degree_product(std::span<const Monomial> ms) {
  ExactInt product = 1;
  for (const auto& m : ms) product *= m.degree();
  return product;
}

bool coprime_except(const MonomialIdeal& ideal, std::size_t skip) {
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i == skip) continue;
    for (std::size_t j = i + 1; j < ideal.size(); ++j) {
      if (j == skip) continue;
      if (!ideal[i].coprime_to(ideal[j])) return false;
    }
  }
  return true;
}

// Disjoint-set forest over generator indices.
class Components {
 public:
  explicit Components(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

ExactInt e_codim1(const MonomialIdeal& ideal) {
  if (codim(ideal) != 1) throw HypothesisError("e_codim1 requires codim 1");
  return ExactInt(gcd_of(ideal.generators()).degree());
}

ExactInt e_complete_intersection(const MonomialIdeal& ideal) {
  if (!is_complete_intersection(ideal)) {
    throw HypothesisError("e_complete_intersection requires pairwise coprime generators");
  }
  return degree_product(ideal.generators());
}

std::optional<StemStructure> detect_stem(const MonomialIdeal& ideal) {
  if (!is_dominant(ideal)) return std::nullopt;
  const std::size_t q = ideal.size();
  Components components(q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = i + 1; j < q; ++j) {
      if (!ideal[i].coprime_to(ideal[j])) components.join(i, j);
    }
  }
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of_root(q, q);
  for (std::size_t i = 0; i < q; ++i) {
    std::size_t root = components.find(i);
    if (block_of_root[root] == q) {
      block_of_root[root] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of_root[root]].push_back(i);
  }
  // Members are ascending, so front() is the smallest index.
  std::stable_sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });

  StemStructure stem;
  stem.boundaries.push_back(0);
  for (const auto& block : blocks) {
    std::vector<Monomial> members;
    for (std::size_t i : block) members.push_back(ideal[i]);
    Monomial l = gcd_of(members);
    if (l.is_unit()) return std::nullopt;
    stem.stems.push_back(std::move(l));
    stem.boundaries.push_back(stem.boundaries.back() + block.size());
  }
  stem.blocks = std::move(blocks);
  return stem;
}

ExactInt e_stem(const MonomialIdeal& ideal) {
  auto stem = detect_stem(ideal);
  if (!stem) throw HypothesisError("e_stem requires a stem ideal");
  return degree_product(stem->stems);
}

QuadraticDominantData quadratic_dominant_data(const MonomialIdeal& ideal) {
  for (const auto& g : ideal.generators()) {
    if (g.degree() != 2) {
      throw HypothesisError("quadratic formulas require every generator to have degree 2, got " +
                            g.to_string());
    }
  }
  if (!is_dominant(ideal)) {
    throw HypothesisError("quadratic formulas require a dominant ideal");
  }
  QuadraticDominantData data;
  const std::size_t q = ideal.size();
  for (std::size_t i = 0; i < q; ++i) {
    bool alone = true;
    for (std::size_t j = 0; j < q && alone; ++j) {
      if (j != i && !ideal[i].coprime_to(ideal[j])) alone = false;
    }
    if (alone) data.isolated.push_back(i);
  }
  for (std::size_t v = 0; v < ideal.variables()->size(); ++v) {
    auto hits = std::count_if(ideal.generators().begin(), ideal.generators().end(),
                              [v](const Monomial& g) { return g.exponent(v) > 0; });
    if (hits >= 2) data.shared_variables.push_back(v);
  }
  return data;
}

ExactInt e_quadratic_dominant(const MonomialIdeal& ideal) {
  auto data = quadratic_dominant_data(ideal);
  return ExactInt(1) << data.isolated.size();
}

Degree reg_quadratic_dominant(const MonomialIdeal& ideal) {
  auto data = quadratic_dominant_data(ideal);
  const Degree reg = data.isolated.size() + data.k();
  const std::size_t c = codim(ideal);
  if (reg != c) {
    throw ConsistencyError("#U + k = " + std::to_string(reg) + " differs from codim " +
                           std::to_string(c));
  }
  return reg;
}

std::optional<CiSplit> find_ci_split(const MonomialIdeal& ideal) {
  const std::size_t q = ideal.size();
  const std::size_t c = codim(ideal);
  std::vector<std::size_t> chosen;

  // Depth-first in increasing index order yields the lexicographically first
  // pairwise coprime c-subset.
  auto extend = [&](auto&& self, std::size_t start) -> bool {
    if (chosen.size() == c) return true;
    for (std::size_t i = start; i + (c - chosen.size()) <= q; ++i) {
      bool ok = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t j) {
        return ideal[i].coprime_to(ideal[j]);
      });
      if (!ok) continue;
      chosen.push_back(i);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;

  CiSplit split;
  split.ci_part = chosen;
  for (std::size_t i = 0; i < q; ++i) {
    if (!std::binary_search(chosen.begin(), chosen.end(), i)) split.free_part.push_back(i);
  }
  return split;
}

void validate_split(const MonomialIdeal& ideal, const CiSplit& split) {
  constexpr std::size_t kMaxFreePart = 24;
  const std::size_t q = ideal.size();
  std::vector<int> seen(q, 0);
  for (std::size_t i : split.free_part) {
    if (i >= q) throw HypothesisError("split index out of range");
    ++seen[i];
  }
  for (std::size_t i : split.ci_part) {
    if (i >= q) throw HypothesisError("split index out of range");
    ++seen[i];
  }
  if (std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; })) {
    throw HypothesisError("split must list every generator exactly once");
  }
  for (std::size_t a = 0; a < split.ci_part.size(); ++a) {
    for (std::size_t b = a + 1; b < split.ci_part.size(); ++b) {
      if (!ideal[split.ci_part[a]].coprime_to(ideal[split.ci_part[b]])) {
        throw HypothesisError("CI part of the split is not pairwise coprime");
      }
    }
  }
  if (!is_dominant(ideal)) throw HypothesisError("structural formula requires a dominant ideal");
  if (codim(ideal) != split.ci_part.size()) {
    throw HypothesisError("CI part size differs from codim");
  }
  if (split.free_part.size() > kMaxFreePart) {
    throw ResourceLimitError("free part of " + std::to_string(split.free_part.size()) +
                             " generators exceeds the subset-sum limit of " +
                             std::to_string(kMaxFreePart));
  }
}

ExactInt e_structural(const MonomialIdeal& ideal, const CiSplit& split) {
  validate_split(ideal, split);
  ExactInt total = 0;
  // Depth-first over subsets of the free part, carrying lcm(R) and |R|.
  auto visit = [&](auto&& self, std::size_t start, const Monomial& mbar,
                   std::size_t size) -> void {
    ExactInt term = 1;
    for (std::size_t h : split.ci_part) {
      term *= quotient(lcm(mbar, ideal[h]), mbar).degree();
    }
    if (size % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
    for (std::size_t r = start; r < split.free_part.size(); ++r) {
      self(self, r + 1, lcm(mbar, ideal[split.free_part[r]]), size + 1);
    }
  };
  visit(visit, 0, Monomial(ideal.variables()), 0);
  return total;
}

ExactInt e_aci(const MonomialIdeal& ideal) {
  auto witness = almost_complete_intersection_witness(ideal);
  if (!witness) throw HypothesisError("e_aci requires an almost complete intersection");
  const Monomial& extra = ideal[*witness];
  ExactInt full = 1;
  ExactInt reduced = 1;
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i == *witness) continue;
    full *= ideal[i].degree();
    reduced *= quotient(ideal[i], gcd(ideal[i], extra)).degree();
  }
  ExactInt e = full - reduced;
  if (e < 1) {
    throw ConsistencyError("almost complete intersection formula gave " + e.str());
  }
  return e;
}

std::size_t aci_dominant_witness(const MonomialIdeal& ideal) {
  auto witness = almost_complete_intersection_witness(ideal);
  if (!witness) {
    throw HypothesisError("aci_dominant_witness requires an almost complete intersection");
  }
  if (is_dominant(ideal)) {
    throw HypothesisError("aci_dominant_witness requires a non-dominant ideal");
  }
  const Monomial& extra = ideal[*witness];
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i == *witness) continue;
    MonomialIdeal reduced = ideal.without(i);
    if (!is_dominant(reduced)) continue;
    const std::size_t extra_at = *reduced.index_of(extra);
    if (codim(reduced) == reduced.size() - 1 && coprime_except(reduced, extra_at)) {
      return i;
    }
  }
  throw ConsistencyError("no CI generator removal leaves a dominant almost complete "
                         "intersection");
}

}  // namespace multmon
