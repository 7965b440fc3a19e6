#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "multmon/ideal.hpp"

namespace multmon {

using ExactInt = boost::multiprecision::cpp_int;

/// Anything that materializes the full Taylor complex refuses larger ideals.
inline constexpr std::size_t kMaxTaylorGenerators = 20;

/// Subset of generator indices; bit i set means generator i is a member.
using FaceMask = std::uint32_t;

struct TaylorFace {
  FaceMask members = 0;
  std::size_t hdeg = 0;
  Monomial mdeg;
};

/// The Taylor resolution of S/M: one basis symbol per subset of the
/// generators, with multidegree the lcm of its members.
class TaylorResolution {
 public:
  /// Throws ResourceLimitError when the ideal has more than
  /// kMaxTaylorGenerators generators.
  explicit TaylorResolution(MonomialIdeal ideal);

  const MonomialIdeal& ideal() const noexcept { return ideal_; }

  /// All 2^q faces ordered by homological degree, then by mask.
  std::span<const TaylorFace> faces() const noexcept { return faces_; }
  const TaylorFace& face(FaceMask mask) const;

  std::size_t rank(std::size_t hdeg) const;
  /// Ranks in homological degrees 0..q.
  std::vector<std::size_t> ranks() const;

 private:
  MonomialIdeal ideal_;
  std::vector<TaylorFace> faces_;
  std::vector<std::size_t> position_;  // mask -> index into faces_
};

struct DifferentialTerm {
  int sign = 1;
  Monomial coefficient;
  FaceMask target = 0;
};

/// Coefficient of the facet obtained by removing the member at 1-based
/// `position` (members counted in increasing index order).
DifferentialTerm differential_coefficient(const TaylorResolution& resolution,
                                          FaceMask face, std::size_t position);

/// True iff no face has the same multidegree as one of its facets.
bool is_taylor_minimal(const MonomialIdeal& ideal);

/// Multigraded Betti numbers of S/M, keyed by (homological degree, multidegree).
class BettiTable {
 public:
  using Key = std::pair<std::size_t, Monomial>;

  void add(std::size_t hdeg, const Monomial& mdeg, std::uint64_t count = 1);
  std::uint64_t at(std::size_t hdeg, const Monomial& mdeg) const;

  const std::map<Key, std::uint64_t>& entries() const noexcept { return entries_; }

  /// (homological degree, total degree) -> count.
  std::map<std::pair<std::size_t, Degree>, std::uint64_t> graded() const;
  std::uint64_t total(std::size_t hdeg) const;
  std::size_t max_hdeg() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<Key, std::uint64_t> entries_;
};

/// Betti table read off the Taylor resolution. Requires a dominant ideal
/// (UnsupportedError otherwise).
BettiTable betti_table(const MonomialIdeal& ideal);

/// max over faces of deg(mdeg) - hdeg. Requires a dominant ideal.
Degree regularity_dominant(const MonomialIdeal& ideal);

/// sum_{i>=1} (-1)^i sum_{|face|=i} deg(mdeg(face))^k over the Taylor faces.
ExactInt ps_power_sum(const MonomialIdeal& ideal, unsigned k);

/// Same sum with the empty face included; differs only at k = 0, where the
/// value is 0 instead of -1.
ExactInt ps_power_sum_with_empty_face(const MonomialIdeal& ideal, unsigned k);

/// Multiplicity e(S/M) = (-1)^c ps_power_sum(M, c) / c!, c = codim(M).
ExactInt multiplicity_ps(const MonomialIdeal& ideal);

}  // namespace multmon
