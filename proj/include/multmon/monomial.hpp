#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace multmon {

using Exponent = std::uint32_t;
using Degree = std::uint64_t;

/// Largest exponent accepted anywhere in the library.
inline constexpr Exponent kMaxExponent = Exponent{1} << 31;

/// Ordered list of distinct variable names. Index i is variable i.
class VariableTable {
 public:
  explicit VariableTable(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const VariableTable& a, const VariableTable& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using VariableTablePtr = std::shared_ptr<const VariableTable>;

VariableTablePtr make_variables(std::vector<std::string> names);

/// x_1^{a_1} ... x_n^{a_n} over a shared variable table. Immutable.
///
/// Exponents are stored densely (one slot per table variable); absent
/// variables have exponent 0 and the unit monomial is all zeros.
class Monomial {
 public:
  /// The unit monomial.
  explicit Monomial(VariableTablePtr vars);
  Monomial(VariableTablePtr vars, std::vector<Exponent> exponents);

  /// Builds from (variable index, exponent) pairs; repeated indices add.
  static Monomial from_sparse(
      VariableTablePtr vars,
      std::span<const std::pair<std::size_t, Exponent>> factors);

  const VariableTablePtr& variables() const noexcept { return vars_; }
  std::size_t num_variables() const noexcept { return exps_.size(); }
  Exponent exponent(std::size_t var) const { return exps_.at(var); }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  Degree degree() const noexcept { return degree_; }
  bool is_unit() const noexcept { return degree_ == 0; }

  /// Indices of variables with positive exponent, ascending.
  std::vector<std::size_t> support() const;

  bool divides(const Monomial& other) const;
  bool coprime_to(const Monomial& other) const;

  /// Product notation such as "a^2*b*c"; the unit prints as "1".
  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b);

 private:
  VariableTablePtr vars_;
  std::vector<Exponent> exps_;
  Degree degree_ = 0;
};

/// Graded order: lower total degree first, then the larger exponent at the
/// first differing variable index first. Total on a fixed table.
bool graded_less(const Monomial& a, const Monomial& b);

inline bool operator<(const Monomial& a, const Monomial& b) {
  return graded_less(a, b);
}

bool same_variables(const VariableTablePtr& a, const VariableTablePtr& b);

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);

/// Exact division a / b. Throws when b does not divide a.
Monomial quotient(const Monomial& a, const Monomial& b);

/// lcm of a list; the empty list gives the unit monomial.
Monomial lcm_of(const VariableTablePtr& vars, std::span<const Monomial> ms);
/// gcd of a nonempty list.
Monomial gcd_of(std::span<const Monomial> ms);

/// One polarization label x_{var,slot} with 1 <= slot <= exponent.
struct PolarLabel {
  std::size_t var;
  Exponent slot;

  friend auto operator<=>(const PolarLabel&, const PolarLabel&) = default;
};

/// The squarefree label set associated to a monomial, sorted ascending.
/// Its cardinality is the monomial's total degree.
using PolarSet = std::vector<PolarLabel>;

PolarSet polar_set(const Monomial& m);

}  // namespace multmon
