#include "multmon/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "multmon/error.hpp"
#include "multmon/invariants.hpp"

namespace multmon {

ThirdDecomposition third_decomposition(const MonomialIdeal& ideal, std::size_t pivot) {
  if (ideal.size() < 2) {
    throw HypothesisError("third decomposition needs at least two generators");
  }
  if (pivot >= ideal.size()) throw InvalidInputError("pivot index out of range");
  if (!dominance(ideal).witness[pivot]) {
    throw HypothesisError("pivot " + ideal[pivot].to_string() + " is not dominant");
  }
  const Monomial& m = ideal[pivot];
  std::vector<Monomial> link;
  for (std::size_t j = 0; j < ideal.size(); ++j) {
    if (j != pivot) link.push_back(quotient(lcm(m, ideal[j]), m));
  }
  return ThirdDecomposition{pivot, ideal.without(pivot),
                            MonomialIdeal::minimalize(ideal.variables(), std::move(link))};
}

ExactInt multiplicity_recurrence(const MonomialIdeal& ideal, std::size_t pivot) {
  auto parts = third_decomposition(ideal, pivot);
  const std::size_t c = codim(ideal);
  const std::size_t c_remaining = codim(parts.remaining);
  if (c_remaining != c) {
    throw HypothesisError("recurrence inapplicable: codim of the remaining ideal is " +
                          std::to_string(c_remaining) + ", expected " + std::to_string(c));
  }
  const std::size_t c_link = codim(parts.link);
  if (c_link == c) return multiplicity_ps(parts.remaining) - multiplicity_ps(parts.link);
  if (c_link > c) return multiplicity_ps(parts.remaining);
  throw HypothesisError("recurrence inapplicable: codim of the link ideal is " +
                        std::to_string(c_link) + ", below " + std::to_string(c));
}

bool DecompositionTerm::has_unit_quotient() const {
  return std::any_of(quotients.begin(), quotients.end(),
                     [](const Monomial& h) { return h.is_unit(); });
}

ExactInt DecompositionTerm::multiplicity() const {
  ExactInt product = 1;
  for (const auto& h : quotients) product *= h.degree();
  return product;
}

std::vector<DecompositionTerm> structural_terms(const MonomialIdeal& ideal,
                                                const CiSplit& split) {
  validate_split(ideal, split);
  const std::size_t d = split.free_part.size();
  const std::uint64_t count = std::uint64_t{1} << d;

  std::vector<std::uint64_t> masks(count);
  std::iota(masks.begin(), masks.end(), std::uint64_t{0});
  std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    return std::popcount(a) < std::popcount(b);
  });

  std::vector<DecompositionTerm> terms;
  terms.reserve(count);
  for (std::uint64_t mask : masks) {
    DecompositionTerm term{static_cast<std::size_t>(std::popcount(mask)),
                           Monomial(ideal.variables()), {}, {}, {}};
    for (std::size_t r = 0; r < d; ++r) {
      if (mask >> r & 1) {
        term.subset.push_back(split.free_part[r]);
        term.mbar = lcm(term.mbar, ideal[split.free_part[r]]);
      }
    }
    std::sort(term.subset.begin(), term.subset.end());
    std::vector<Monomial> nonunit;
    for (std::size_t h : split.ci_part) {
      term.quotients.push_back(quotient(lcm(term.mbar, ideal[h]), term.mbar));
      if (!term.quotients.back().is_unit()) nonunit.push_back(term.quotients.back());
    }
    if (!nonunit.empty()) {
      auto minimal = MonomialIdeal::minimalize(ideal.variables(), std::move(nonunit));
      term.ideal_generators.assign(minimal.generators().begin(), minimal.generators().end());
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

BettiTable betti_decomposition(const MonomialIdeal& ideal, const CiSplit& split) {
  BettiTable table;
  for (const auto& term : structural_terms(ideal, split)) {
    // A unit quotient makes the term ideal the whole ring: S/S has no
    // resolution and contributes nothing.
    if (term.has_unit_quotient()) continue;
    auto term_ideal = MonomialIdeal::minimalize(ideal.variables(), term.ideal_generators);
    const BettiTable shifted = betti_table(term_ideal);
    for (const auto& [key, count] : shifted.entries()) {
      table.add(key.first + term.j, key.second * term.mbar, count);
    }
  }
  return table;
}

}  // namespace multmon
