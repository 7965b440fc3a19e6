#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "multmon/ideal.hpp"
#include "multmon/taylor.hpp"

namespace multmon {

// Closed-form multiplicities. Each entry point checks its hypothesis and
// throws HypothesisError when it does not hold.

/// deg(gcd of all generators); requires codim 1.
ExactInt e_codim1(const MonomialIdeal& ideal);

/// Product of generator degrees; requires a complete intersection.
ExactInt e_complete_intersection(const MonomialIdeal& ideal);

/// Block structure of a stem ideal.
struct StemStructure {
  /// Generator indices per block; blocks by size descending, then by
  /// smallest member. Members ascending within a block.
  std::vector<std::vector<std::size_t>> blocks;
  /// gcd of each block, nonunit.
  std::vector<Monomial> stems;
  /// 0 = i_0 < i_1 < ... < i_c = q over the concatenated blocks.
  std::vector<std::size_t> boundaries;

  std::size_t codim() const noexcept { return stems.size(); }
};

/// Blocks are the connected components of the "shares a variable" graph.
/// Nullopt when the ideal is not dominant or some component has unit gcd.
std::optional<StemStructure> detect_stem(const MonomialIdeal& ideal);

/// Product of stem degrees; requires a stem ideal.
ExactInt e_stem(const MonomialIdeal& ideal);

struct QuadraticDominantData {
  /// Generators coprime to every other generator.
  std::vector<std::size_t> isolated;
  /// Variables dividing at least two generators.
  std::vector<std::size_t> shared_variables;

  std::size_t k() const noexcept { return shared_variables.size(); }
};

/// Requires every generator to have degree 2 and the ideal to be dominant.
QuadraticDominantData quadratic_dominant_data(const MonomialIdeal& ideal);

/// 2^{#isolated}.
ExactInt e_quadratic_dominant(const MonomialIdeal& ideal);
/// #isolated + k. Throws ConsistencyError if that differs from codim.
Degree reg_quadratic_dominant(const MonomialIdeal& ideal);

/// M = (m_1..m_d, h_1..h_c) with (h_1..h_c) a complete intersection.
struct CiSplit {
  std::vector<std::size_t> free_part;
  std::vector<std::size_t> ci_part;
};

/// Lexicographically first pairwise-coprime subset of size codim(M) as the
/// CI part; the remaining generators form the free part.
std::optional<CiSplit> find_ci_split(const MonomialIdeal& ideal);

/// Throws HypothesisError unless the ideal is dominant, the split
/// partitions the generators, the CI part is pairwise coprime and its size
/// equals codim(M). The free part is capped at 24 generators (ResourceLimitError).
void validate_split(const MonomialIdeal& ideal, const CiSplit& split);

/// Alternating sum over all subsets R of the free part of
/// (-1)^{|R|} prod_i deg(lcm(R, h_i) / lcm(R)).
ExactInt e_structural(const MonomialIdeal& ideal, const CiSplit& split);

/// prod deg(m_i) - prod deg(m_i / gcd(m_i, m)) where m is the generator
/// named by almost_complete_intersection_witness.
ExactInt e_aci(const MonomialIdeal& ideal);

/// For a non-dominant almost complete intersection, the smallest index of a
/// CI generator whose removal leaves a dominant almost complete
/// intersection around the same extra generator.
std::size_t aci_dominant_witness(const MonomialIdeal& ideal);

}  // namespace multmon
