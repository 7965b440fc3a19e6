#include "multmon/monomial.hpp"

#include <algorithm>
#include <sstream>

#include "multmon/error.hpp"

namespace multmon {

VariableTable::VariableTable(std::vector<std::string> names)
    : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) {
      throw InvalidInputError("variable names must be nonempty");
    }
    if (!index_.emplace(names_[i], i).second) {
      throw InvalidInputError("duplicate variable name '" + names_[i] + "'");
    }
  }
}

std::optional<std::size_t> VariableTable::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VariableTablePtr make_variables(std::vector<std::string> names) {
  return std::make_shared<const VariableTable>(std::move(names));
}

bool same_variables(const VariableTablePtr& a, const VariableTablePtr& b) {
  return a == b || (a && b && *a == *b);
}

namespace {

void require_same(const Monomial& a, const Monomial& b, const char* op) {
  if (!same_variables(a.variables(), b.variables())) {
    throw InvalidInputError(std::string(op) +
                            ": monomials live over different variable tables");
  }
}

}  // namespace

Monomial::Monomial(VariableTablePtr vars)
    : vars_(std::move(vars)), exps_(vars_ ? vars_->size() : 0, 0) {
  if (!vars_) throw InvalidInputError("monomial needs a variable table");
}

Monomial::Monomial(VariableTablePtr vars, std::vector<Exponent> exponents)
    : vars_(std::move(vars)), exps_(std::move(exponents)) {
  if (!vars_) throw InvalidInputError("monomial needs a variable table");
  if (exps_.size() != vars_->size()) {
    throw InvalidInputError("exponent vector length does not match the variable table");
  }
  for (Exponent e : exps_) {
    if (e > kMaxExponent) throw InvalidInputError("exponent exceeds 2^31");
    degree_ += e;
  }
}

Monomial Monomial::from_sparse(
    VariableTablePtr vars,
    std::span<const std::pair<std::size_t, Exponent>> factors) {
  if (!vars) throw InvalidInputError("monomial needs a variable table");
  std::vector<Exponent> exps(vars->size(), 0);
  for (auto [var, e] : factors) {
    if (var >= exps.size()) throw InvalidInputError("variable index out of range");
    if (std::uint64_t{exps[var]} + e > kMaxExponent) {
      throw InvalidInputError("exponent exceeds 2^31");
    }
    exps[var] += e;
  }
  return Monomial(std::move(vars), std::move(exps));
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0) out.push_back(i);
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  require_same(*this, other, "divides");
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime_to(const Monomial& other) const {
  require_same(*this, other, "coprime_to");
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  }
  return true;
}

std::string Monomial::to_string() const {
  if (is_unit()) return "1";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!first) out << '*';
    first = false;
    out << vars_->name(i);
    if (exps_[i] > 1) out << '^' << exps_[i];
  }
  return out.str();
}

bool operator==(const Monomial& a, const Monomial& b) {
  return a.exps_ == b.exps_ && same_variables(a.vars_, b.vars_);
}

bool graded_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto ea = a.exponents();
  auto eb = b.exponents();
  const std::size_t n = std::min(ea.size(), eb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (ea[i] != eb[i]) return ea[i] > eb[i];
  }
  return ea.size() < eb.size();
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same(a, b, "lcm");
  std::vector<Exponent> e(a.num_variables());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = std::max(a.exponent(i), b.exponent(i));
  }
  return Monomial(a.variables(), std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same(a, b, "gcd");
  std::vector<Exponent> e(a.num_variables());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = std::min(a.exponent(i), b.exponent(i));
  }
  return Monomial(a.variables(), std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same(a, b, "multiply");
  std::vector<Exponent> e(a.num_variables());
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::uint64_t sum = std::uint64_t{a.exponent(i)} + b.exponent(i);
    if (sum > kMaxExponent) throw InvalidInputError("exponent exceeds 2^31");
    e[i] = static_cast<Exponent>(sum);
  }
  return Monomial(a.variables(), std::move(e));
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  require_same(a, b, "quotient");
  std::vector<Exponent> e(a.num_variables());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (b.exponent(i) > a.exponent(i)) {
      throw InvalidInputError("quotient: " + b.to_string() + " does not divide " +
                              a.to_string());
    }
    e[i] = a.exponent(i) - b.exponent(i);
  }
  return Monomial(a.variables(), std::move(e));
}

Monomial lcm_of(const VariableTablePtr& vars, std::span<const Monomial> ms) {
  Monomial acc(vars);
  for (const auto& m : ms) acc = lcm(acc, m);
  return acc;
}

Monomial gcd_of(std::span<const Monomial> ms) {
  if (ms.empty()) throw InvalidInputError("gcd of an empty list is undefined");
  Monomial acc = ms.front();
  for (const auto& m : ms.subspan(1)) acc = gcd(acc, m);
  return acc;
}

PolarSet polar_set(const Monomial& m) {
  constexpr Degree kMaxLabels = Degree{1} << 22;
  if (m.degree() > kMaxLabels) {
    throw ResourceLimitError("polar set of a monomial of degree " +
                             std::to_string(m.degree()) + " is too large");
  }
  PolarSet labels;
  labels.reserve(m.degree());
  for (std::size_t var = 0; var < m.num_variables(); ++var) {
    for (Exponent s = 1; s <= m.exponent(var); ++s) labels.push_back({var, s});
  }
  return labels;
}

}  // namespace multmon
