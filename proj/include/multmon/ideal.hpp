#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "multmon/monomial.hpp"

namespace multmon {

/// A monomial ideal held by its minimal generating set.
///
/// Invariants: nonempty, no unit generator, no generator divides another,
/// and generators sorted by graded_less so equal ideals compare equal.
class MonomialIdeal {
 public:
  /// Drops redundant and duplicate monomials and sorts the rest.
  /// Throws InvalidInputError on an empty list or a unit monomial.
  static MonomialIdeal minimalize(VariableTablePtr vars, std::vector<Monomial> raw);

  const VariableTablePtr& variables() const noexcept { return vars_; }
  std::span<const Monomial> generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  const Monomial& operator[](std::size_t i) const { return gens_.at(i); }

  std::optional<std::size_t> index_of(const Monomial& m) const;

  /// The ideal generated by all generators except the one at `index`.
  /// Still minimal, so no redundancy can appear.
  MonomialIdeal without(std::size_t index) const;

  /// The ideal generated by the selected generators.
  MonomialIdeal subideal(std::span<const std::size_t> indices) const;

  /// Indices of variables dividing at least one generator, ascending.
  std::vector<std::size_t> support() const;

  /// Comma separated generator list, e.g. "c^2, a^3*c".
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

 private:
  MonomialIdeal(VariableTablePtr vars, std::vector<Monomial> gens)
      : vars_(std::move(vars)), gens_(std::move(gens)) {}

  VariableTablePtr vars_;
  std::vector<Monomial> gens_;
};

/// Polar sets of the minimal generators, in generator order.
std::vector<PolarSet> polar_sets(const MonomialIdeal& ideal);

}  // namespace multmon
