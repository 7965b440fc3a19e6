#include "multmon/ideal.hpp"

#include <algorithm>

#include "multmon/error.hpp"

namespace multmon {

MonomialIdeal MonomialIdeal::minimalize(VariableTablePtr vars,
                                        std::vector<Monomial> raw) {
  if (raw.empty()) throw InvalidInputError("an ideal needs at least one generator");
  for (const auto& m : raw) {
    if (!same_variables(vars, m.variables())) {
      throw InvalidInputError("generator " + m.to_string() +
                              " lives over a different variable table");
    }
    if (m.is_unit()) throw InvalidInputError("the unit monomial cannot be a generator");
  }
  // After sorting by degree a monomial can only be divided by an earlier one.
  std::sort(raw.begin(), raw.end(), graded_less);
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<Monomial> kept;
  for (auto& m : raw) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return k.divides(m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  return MonomialIdeal(std::move(vars), std::move(kept));
}

std::optional<std::size_t> MonomialIdeal::index_of(const Monomial& m) const {
  auto it = std::find(gens_.begin(), gens_.end(), m);
  if (it == gens_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - gens_.begin());
}

MonomialIdeal MonomialIdeal::without(std::size_t index) const {
  if (index >= gens_.size()) throw InvalidInputError("generator index out of range");
  if (gens_.size() == 1) {
    throw InvalidInputError("cannot remove the only generator of an ideal");
  }
  std::vector<Monomial> rest;
  rest.reserve(gens_.size() - 1);
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i != index) rest.push_back(gens_[i]);
  }
  return MonomialIdeal(vars_, std::move(rest));
}

MonomialIdeal MonomialIdeal::subideal(std::span<const std::size_t> indices) const {
  std::vector<Monomial> picked;
  for (std::size_t i : indices) picked.push_back(gens_.at(i));
  return minimalize(vars_, std::move(picked));
}

std::vector<std::size_t> MonomialIdeal::support() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vars_->size(); ++v) {
    if (std::any_of(gens_.begin(), gens_.end(),
                    [v](const Monomial& g) { return g.exponent(v) > 0; })) {
      out.push_back(v);
    }
  }
  return out;
}

std::string MonomialIdeal::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out;
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  return same_variables(a.vars_, b.vars_) && a.gens_ == b.gens_;
}

std::vector<PolarSet> polar_sets(const MonomialIdeal& ideal) {
  std::vector<PolarSet> out;
  out.reserve(ideal.size());
  for (const auto& g : ideal.generators()) out.push_back(polar_set(g));
  return out;
}

}  // namespace multmon
