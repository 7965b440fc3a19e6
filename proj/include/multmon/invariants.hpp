#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "multmon/ideal.hpp"

namespace multmon {

/// Height of the ideal: the minimum number of variables meeting the support
/// of every generator. Exact branch-and-bound over support variables.
std::size_t codim(const MonomialIdeal& ideal);

struct DominanceReport {
  bool dominant = false;
  /// For each generator, the smallest-index variable in which it is
  /// dominant, or nullopt when it has none.
  std::vector<std::optional<std::size_t>> witness;
};

DominanceReport dominance(const MonomialIdeal& ideal);
bool is_dominant(const MonomialIdeal& ideal);

/// Pairwise coprime minimal generators.
bool is_complete_intersection(const MonomialIdeal& ideal);

/// Smallest index t such that the other generators are pairwise coprime and
/// their number equals codim(ideal). Nullopt if none or fewer than two
/// generators.
std::optional<std::size_t> almost_complete_intersection_witness(
    const MonomialIdeal& ideal);

struct ClassificationReport {
  std::size_t codim = 0;
  bool is_dominant = false;
  std::vector<std::optional<std::size_t>> dominant_witness;
  bool is_ci = false;
  std::optional<std::size_t> aci_witness;
  bool is_codim1 = false;
};

ClassificationReport classify(const MonomialIdeal& ideal);

}  // namespace multmon
