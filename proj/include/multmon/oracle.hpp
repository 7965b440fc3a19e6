#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "multmon/ideal.hpp"
#include "multmon/taylor.hpp"

namespace multmon {

// Independent multiplicity oracle: sum of colengths over the minimal primes
// of maximal dimension. Uses nothing but monomial arithmetic and
// exhaustive enumeration; it does not consult the codim search, the Taylor
// complex or any closed form.

/// Largest lattice box colength() will enumerate.
inline constexpr std::uint64_t kMaxColengthBox = 10'000'000;

/// Largest number of variable subsets the cover searches will test before
/// giving up with ResourceLimitError.
inline constexpr std::uint64_t kMaxOracleSubsets = 10'000'000;

using VariableSet = std::vector<std::size_t>;

struct CoverContribution {
  VariableSet cover;
  std::uint64_t colength = 0;
};

/// Smallest size of a variable set meeting every generator, by enumeration
/// of subsets of the support in increasing size. Both cover searches throw
/// ResourceLimitError past kMaxOracleSubsets subsets.
std::size_t oracle_cover_size(const MonomialIdeal& ideal);

/// All variable sets of the minimum cover size meeting every generator,
/// each sorted, listed in lexicographic order.
std::vector<VariableSet> minimal_covers(const MonomialIdeal& ideal);

/// Number of monomials in the cover variables outside the ideal obtained by
/// setting every other variable to 1. Throws InvalidInputError when the
/// cover misses a generator or the restricted ideal is not Artinian, and
/// ResourceLimitError when the enumeration box exceeds kMaxColengthBox.
std::uint64_t colength(const MonomialIdeal& ideal, const VariableSet& cover);

std::vector<CoverContribution> cover_contributions(const MonomialIdeal& ideal);

ExactInt multiplicity_associativity(const MonomialIdeal& ideal);

}  // namespace multmon
