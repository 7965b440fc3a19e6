#pragma once

#include <cstddef>
#include <vector>

#include "multmon/formulas.hpp"
#include "multmon/ideal.hpp"
#include "multmon/taylor.hpp"

namespace multmon {

/// Splitting off a dominant generator m_p:
///   remaining = (m_j : j != p)
///   link      = (lcm(m_p, m_j) / m_p : j != p), minimalized.
struct ThirdDecomposition {
  std::size_t pivot = 0;
  MonomialIdeal remaining;
  MonomialIdeal link;
};

/// Requires at least two generators and a pivot that is dominant in the ideal.
ThirdDecomposition third_decomposition(const MonomialIdeal& ideal, std::size_t pivot);

/// e(S/M) from the pivot split: e(remaining) - e(link) when codim(link)
/// equals codim(M), e(remaining) when it is larger. Requires
/// codim(remaining) == codim(M). Sub-multiplicities come from the
/// power-sum engine.
ExactInt multiplicity_recurrence(const MonomialIdeal& ideal, std::size_t pivot);

/// One summand of the structural decomposition, indexed by a subset R of
/// the free part.
struct DecompositionTerm {
  /// |R|.
  std::size_t j = 0;
  /// lcm(R); the unit for R empty.
  Monomial mbar;
  /// Members of R as generator indices, ascending.
  std::vector<std::size_t> subset;
  /// lcm(mbar, h_i) / mbar for every CI generator h_i, units kept.
  std::vector<Monomial> quotients;
  /// Minimal generators among the nonunit quotients. Empty when every
  /// quotient is a unit.
  std::vector<Monomial> ideal_generators;

  bool has_unit_quotient() const;
  /// prod deg(quotients); 0 when some quotient is a unit.
  ExactInt multiplicity() const;
};

/// One term per subset of the free part, ordered by j, then by subset mask.
std::vector<DecompositionTerm> structural_terms(const MonomialIdeal& ideal,
                                                const CiSplit& split);

/// beta_{k,l}(S/M) = sum over terms of beta_{k-j, l/mbar}(S/M_mbar),
/// assembled multigraded.
BettiTable betti_decomposition(const MonomialIdeal& ideal, const CiSplit& split);

}  // namespace multmon
