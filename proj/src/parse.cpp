#include "multmon/parse.hpp"

#include <algorithm>
#include <cctype>

namespace multmon {

std::string_view to_string(ParseErrorCode code) {
  switch (code) {
    case ParseErrorCode::Syntax: return "syntax";
    case ParseErrorCode::ZeroExponent: return "zero_exponent";
    case ParseErrorCode::ExponentTooLarge: return "exponent_too_large";
    case ParseErrorCode::EmptyIdeal: return "empty_ideal";
    case ParseErrorCode::UnitGenerator: return "unit_generator";
    case ParseErrorCode::UnknownVariable: return "unknown_variable";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorCode code, std::size_t line, std::size_t column,
                       const std::string& message)
    : Error(ErrorKind::InvalidInput, std::to_string(line) + ":" + std::to_string(column) +
                                         ": " + message),
      code_(code),
      line_(line),
      column_(column) {}

namespace {

bool is_var_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_var_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

struct RawFactor {
  std::size_t var;
  Exponent exponent;
};

ParsedIdeal with_notices(const VariableTablePtr& table, const std::vector<Monomial>& raw) {
  auto ideal = MonomialIdeal::minimalize(table, raw);
  std::vector<std::string> notices;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto before = raw.begin() + static_cast<std::ptrdiff_t>(i);
    if (std::find(raw.begin(), before, raw[i]) != before) {
      notices.push_back("dropped duplicate generator " + raw[i].to_string());
      continue;
    }
    if (ideal.index_of(raw[i])) continue;
    for (const auto& g : ideal.generators()) {
      if (g.divides(raw[i])) {
        notices.push_back("dropped generator " + raw[i].to_string() + ", divisible by " +
                          g.to_string());
        break;
      }
    }
  }
  return ParsedIdeal{std::move(ideal), std::move(notices)};
}

class Parser {
 public:
  Parser(std::string_view text, VariableTablePtr vars, std::size_t line)
      : text_(text.substr(0, text.find('#'))), vars_(std::move(vars)), line_(line) {}

  ParsedIdeal run() {
    skip_space();
    if (at_end()) fail(ParseErrorCode::EmptyIdeal, "empty ideal");
    std::vector<std::vector<RawFactor>> monomials;
    while (true) {
      monomials.push_back(monomial());
      skip_space();
      if (at_end()) break;
      if (peek() != ',' && peek() != ';') {
        fail(ParseErrorCode::Syntax, std::string("expected ',' or ';', found '") + peek() + "'");
      }
      ++pos_;
    }
    return finish(monomials);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && is_space(peek())) ++pos_;
  }

  [[noreturn]] void fail(ParseErrorCode code, const std::string& message) const {
    throw ParseError(code, line_, pos_ + 1, message);
  }

  std::vector<RawFactor> monomial() {
    skip_space();
    if (at_end()) fail(ParseErrorCode::Syntax, "expected a monomial");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (text_.substr(start, pos_ - start) == "1") {
        pos_ = start;
        fail(ParseErrorCode::UnitGenerator, "the unit monomial cannot be a generator");
      }
      pos_ = start;
      fail(ParseErrorCode::Syntax, "coefficients are not supported");
    }
    std::vector<RawFactor> factors;
    factors.push_back(factor());
    while (true) {
      const std::size_t save = pos_;
      skip_space();
      if (at_end()) break;
      if (peek() == '*') {
        ++pos_;
        skip_space();
        factors.push_back(factor());
      } else if (pos_ > save && is_var_start(peek())) {
        factors.push_back(factor());
      } else {
        break;
      }
    }
    return factors;
  }

  RawFactor factor() {
    if (at_end() || !is_var_start(peek())) fail(ParseErrorCode::Syntax, "expected a variable");
    const std::size_t start = pos_;
    while (!at_end() && is_var_char(peek())) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    std::size_t var = lookup(name, start);
    Exponent e = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      const std::size_t digits = pos_;
      std::uint64_t value = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
        if (value > kMaxExponent) {
          pos_ = digits;
          fail(ParseErrorCode::ExponentTooLarge, "exponent exceeds 2^31");
        }
        ++pos_;
      }
      if (pos_ == digits) fail(ParseErrorCode::Syntax, "expected an exponent after '^'");
      if (value == 0) {
        pos_ = digits;
        fail(ParseErrorCode::ZeroExponent, "zero exponent on " + name);
      }
      e = static_cast<Exponent>(value);
    }
    return RawFactor{var, e};
  }

  std::size_t lookup(const std::string& name, std::size_t at) {
    if (vars_) {
      if (auto idx = vars_->index_of(name)) return *idx;
      pos_ = at;
      fail(ParseErrorCode::UnknownVariable, "unknown variable '" + name + "'");
    }
    auto it = std::find(inferred_.begin(), inferred_.end(), name);
    if (it != inferred_.end()) return static_cast<std::size_t>(it - inferred_.begin());
    inferred_.push_back(name);
    return inferred_.size() - 1;
  }

  ParsedIdeal finish(const std::vector<std::vector<RawFactor>>& monomials) {
    VariableTablePtr table = vars_ ? vars_ : make_variables(inferred_);
    std::vector<Monomial> raw;
    for (const auto& factors : monomials) {
      std::vector<Exponent> exps(table->size(), 0);
      for (const auto& f : factors) {
        if (std::uint64_t{exps[f.var]} + f.exponent > kMaxExponent) {
          fail(ParseErrorCode::ExponentTooLarge, "exponent exceeds 2^31");
        }
        exps[f.var] += f.exponent;
      }
      raw.emplace_back(table, std::move(exps));
    }
    return with_notices(table, raw);
  }

  std::string_view text_;
  VariableTablePtr vars_;
  std::size_t line_;
  std::size_t pos_ = 0;
  std::vector<std::string> inferred_;
};

}  // namespace

ParsedIdeal parse_ideal(std::string_view text, VariableTablePtr vars, std::size_t line) {
  return Parser(text, std::move(vars), line).run();
}

VariableTablePtr parse_variable_list(std::string_view text) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && is_space(item.front())) item.remove_prefix(1);
    while (!item.empty() && is_space(item.back())) item.remove_suffix(1);
    if (item.empty() || !is_var_start(item.front()) ||
        !std::all_of(item.begin(), item.end(), is_var_char)) {
      throw ParseError(ParseErrorCode::Syntax, 1, start + 1,
                       "invalid variable name '" + std::string(item) + "'");
    }
    names.emplace_back(item);
    start = end + 1;
  }
  return make_variables(std::move(names));
}

ParsedIdeal ideal_from_exponent_maps(std::span<const ExponentMap> generators,
                                     VariableTablePtr vars, std::size_t line) {
  const auto fail = [line](ParseErrorCode code, std::size_t item, const std::string& message) {
    throw ParseError(code, line, item + 1, message);
  };
  if (generators.empty()) fail(ParseErrorCode::EmptyIdeal, 0, "empty ideal");
  std::vector<std::string> inferred;
  if (!vars) {
    for (const auto& g : generators) {
      for (const auto& [name, e] : g) {
        if (std::find(inferred.begin(), inferred.end(), name) == inferred.end()) {
          inferred.push_back(name);
        }
      }
    }
  }
  VariableTablePtr table = vars ? vars : make_variables(inferred);
  std::vector<Monomial> raw;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    std::vector<Exponent> exps(table->size(), 0);
    for (const auto& [name, e] : generators[i]) {
      auto idx = table->index_of(name);
      if (!idx) fail(ParseErrorCode::UnknownVariable, i, "unknown variable '" + name + "'");
      if (e == 0) fail(ParseErrorCode::ZeroExponent, i, "zero exponent on " + name);
      if (e > kMaxExponent || std::uint64_t{exps[*idx]} + e > kMaxExponent) {
        fail(ParseErrorCode::ExponentTooLarge, i, "exponent exceeds 2^31");
      }
      exps[*idx] += static_cast<Exponent>(e);
    }
    Monomial m(table, std::move(exps));
    if (m.is_unit()) fail(ParseErrorCode::UnitGenerator, i, "the unit monomial cannot be a generator");
    raw.push_back(std::move(m));
  }
  return with_notices(table, raw);
}

std::string print_ideal(const MonomialIdeal& ideal) { return ideal.to_string(); }

}  // namespace multmon
