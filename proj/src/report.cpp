#include "multmon/report.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "multmon/decomposition.hpp"
#include "multmon/formulas.hpp"
#include "multmon/invariants.hpp"
#include "multmon/oracle.hpp"
#include "multmon/taylor.hpp"

namespace multmon {

using nlohmann::json;

namespace {

constexpr std::pair<Command, std::string_view> kCommandNames[] = {
    {Command::Multiplicity, "multiplicity"}, {Command::Codim, "codim"},
    {Command::Classify, "classify"},         {Command::Betti, "betti"},
    {Command::Taylor, "taylor"},             {Command::Diagram, "diagram"},
    {Command::Verify, "verify"},             {Command::Regularity, "regularity"},
};

json exact(const ExactInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(value);
  }
  return value.str();
}

json variable_or_null(const MonomialIdeal& ideal, const std::optional<std::size_t>& var) {
  if (!var) return nullptr;
  return ideal.variables()->name(*var);
}

json generator_list(const MonomialIdeal& ideal, std::span<const std::size_t> indices) {
  json out = json::array();
  for (std::size_t i : indices) out.push_back(ideal[i].to_string());
  return out;
}

json input_echo(const ParsedIdeal& input, std::string_view text) {
  json gens = json::array();
  for (const auto& g : input.ideal.generators()) gens.push_back(g.to_string());
  return json{{"text", text},
              {"variables", input.ideal.variables()->names()},
              {"generators", gens},
              {"notices", input.notices}};
}

json classification_json(const MonomialIdeal& ideal, const ClassificationReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.dominant_witness) witnesses.push_back(variable_or_null(ideal, w));
  json aci = nullptr;
  if (r.aci_witness) aci = ideal[*r.aci_witness].to_string();
  return json{{"codim", r.codim},
              {"dominant", r.is_dominant},
              {"dominant_witness", witnesses},
              {"complete_intersection", r.is_ci},
              {"aci_witness", aci},
              {"codim1", r.is_codim1}};
}

bool all_quadratic(const MonomialIdeal& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const Monomial& g) { return g.degree() == 2; });
}

// First pivot for which the multiplicity recurrence applies.
std::optional<std::size_t> recurrence_pivot(const MonomialIdeal& ideal,
                                            const ClassificationReport& r) {
  if (ideal.size() < 2 || ideal.size() > kMaxTaylorGenerators) return std::nullopt;
  for (std::size_t p = 0; p < ideal.size(); ++p) {
    if (!r.dominant_witness[p]) continue;
    auto parts = third_decomposition(ideal, p);
    if (codim(parts.remaining) == r.codim && codim(parts.link) >= r.codim) return p;
  }
  return std::nullopt;
}

/// Values reported for one quantity by several independent methods.
class Consensus {
 public:
  explicit Consensus(std::string quantity) : quantity_(std::move(quantity)) {}

  void attempt(const std::string& method, const std::function<json()>& compute) {
    try {
      json value = compute();
      if (!first_) {
        first_ = value;
      } else if (*first_ != value) {
        agreement_ = false;
      }
      methods_.push_back({{"name", method}, {"value", std::move(value)}});
    } catch (const ResourceLimitError& e) {
      methods_.push_back({{"name", method}, {"skipped", e.what()}});
    } catch (const ConsistencyError& e) {
      agreement_ = false;
      methods_.push_back({{"name", method}, {"error", e.what()}});
    }
  }

  bool agreement() const { return agreement_ && first_.has_value(); }

  json to_json() const {
    return json{{"quantity", quantity_}, {"methods", methods_}, {"agreement", agreement()}};
  }

 private:
  std::string quantity_;
  json methods_ = json::array();
  std::optional<json> first_;
  bool agreement_ = true;
};

struct Outcome {
  json result;
  std::string method;
  json cross_checks;
  std::optional<bool> agreement;
};

Outcome do_multiplicity(const MonomialIdeal& ideal, const ClassificationReport& r,
                        const RunOptions& options) {
  Outcome out;
  ExactInt value;
  if (r.is_codim1) {
    value = e_codim1(ideal);
    out.method = "codim1";
  } else if (r.is_ci) {
    value = e_complete_intersection(ideal);
    out.method = "complete_intersection";
  } else if (detect_stem(ideal)) {
    value = e_stem(ideal);
    out.method = "stem";
  } else if (r.aci_witness) {
    value = e_aci(ideal);
    out.method = "almost_complete_intersection";
  } else if (auto split = r.is_dominant ? find_ci_split(ideal) : std::nullopt) {
    value = e_structural(ideal, *split);
    out.method = "structural";
  } else {
    value = multiplicity_ps(ideal);
    out.method = "power_sum";
  }
  out.result = json{{"multiplicity", exact(value)}};
  if (options.check) {
    out.cross_checks = json::array();
    out.cross_checks.push_back({{"method", out.method}, {"value", exact(value)}});
    const ExactInt ps = multiplicity_ps(ideal);
    const ExactInt oracle = multiplicity_associativity(ideal);
    out.cross_checks.push_back({{"method", "power_sum"}, {"value", exact(ps)}});
    out.cross_checks.push_back({{"method", "associativity"}, {"value", exact(oracle)}});
    out.agreement = ps == value && oracle == value;
  }
  return out;
}

Outcome do_verify(const MonomialIdeal& ideal, const ClassificationReport& r) {
  std::vector<Consensus> table;

  Consensus codims("codim");
  codims.attempt("branch_and_bound", [&] { return json(r.codim); });
  codims.attempt("cover_enumeration", [&] { return json(oracle_cover_size(ideal)); });
  table.push_back(codims);

  Consensus mult("multiplicity");
  if (r.is_codim1) mult.attempt("codim1", [&] { return exact(e_codim1(ideal)); });
  if (r.is_ci) {
    mult.attempt("complete_intersection", [&] { return exact(e_complete_intersection(ideal)); });
  }
  if (detect_stem(ideal)) mult.attempt("stem", [&] { return exact(e_stem(ideal)); });
  if (r.is_dominant && all_quadratic(ideal)) {
    mult.attempt("quadratic_dominant", [&] { return exact(e_quadratic_dominant(ideal)); });
  }
  if (r.aci_witness) {
    mult.attempt("almost_complete_intersection", [&] { return exact(e_aci(ideal)); });
  }
  std::optional<CiSplit> split;
  if (r.is_dominant) split = find_ci_split(ideal);
  if (split) {
    mult.attempt("structural", [&] { return exact(e_structural(ideal, *split)); });
  }
  if (auto pivot = recurrence_pivot(ideal, r)) {
    mult.attempt("recurrence", [&] { return exact(multiplicity_recurrence(ideal, *pivot)); });
  }
  mult.attempt("power_sum", [&] { return exact(multiplicity_ps(ideal)); });
  mult.attempt("associativity", [&] { return exact(multiplicity_associativity(ideal)); });
  table.push_back(mult);

  Consensus vanishing("power_sum_vanishing");
  vanishing.attempt("taylor", [&] {
    json zeros = json::array();
    for (unsigned k = 1; k < r.codim; ++k) zeros.push_back(ps_power_sum(ideal, k) == 0);
    return json(std::all_of(zeros.begin(), zeros.end(), [](const json& z) { return z.get<bool>(); }));
  });
  vanishing.attempt("expected", [] { return json(true); });
  table.push_back(vanishing);

  if (r.is_dominant) {
    Consensus reg("regularity");
    reg.attempt("taylor", [&] { return json(regularity_dominant(ideal)); });
    if (all_quadratic(ideal)) {
      reg.attempt("quadratic_dominant", [&] { return json(reg_quadratic_dominant(ideal)); });
      reg.attempt("codim", [&] { return json(r.codim); });
    }
    table.push_back(reg);
  }
  if (split) {
    Consensus betti("betti_table");
    betti.attempt("decomposition_equals_taylor", [&] {
      return json(betti_decomposition(ideal, *split) == betti_table(ideal));
    });
    betti.attempt("expected", [] { return json(true); });
    table.push_back(betti);
  }

  Outcome out;
  out.method = "all";
  bool agreement = true;
  json rows = json::array();
  for (const auto& c : table) {
    agreement = agreement && c.agreement();
    rows.push_back(c.to_json());
  }
  out.result = json{{"consensus", rows}};
  out.agreement = agreement;
  return out;
}

Outcome do_regularity(const MonomialIdeal& ideal, const ClassificationReport& r) {
  if (!r.is_dominant) {
    throw UnsupportedError("regularity is only available for dominant ideals");
  }
  Outcome out;
  const Degree taylor = regularity_dominant(ideal);
  if (all_quadratic(ideal)) {
    const Degree closed = reg_quadratic_dominant(ideal);
    out.method = "quadratic_dominant";
    out.result = json{{"regularity", closed}};
    out.cross_checks = json::array({json{{"method", "quadratic_dominant"}, {"value", closed}},
                                    json{{"method", "taylor"}, {"value", taylor}}});
    out.agreement = closed == taylor;
  } else {
    out.method = "taylor";
    out.result = json{{"regularity", taylor}};
  }
  return out;
}

Outcome do_betti(const MonomialIdeal& ideal) {
  const BettiTable table = betti_table(ideal);
  json entries = json::array();
  for (const auto& [key, count] : table.entries()) {
    entries.push_back({{"hdeg", key.first},
                       {"mdeg", key.second.to_string()},
                       {"degree", key.second.degree()},
                       {"count", count}});
  }
  json graded = json::array();
  for (const auto& [key, count] : table.graded()) {
    graded.push_back({{"hdeg", key.first}, {"degree", key.second}, {"count", count}});
  }
  json totals = json::array();
  for (std::size_t i = 0; i <= table.max_hdeg(); ++i) totals.push_back(table.total(i));
  Outcome out;
  out.method = "taylor";
  out.result = json{{"entries", entries}, {"graded", graded}, {"totals", totals}};
  return out;
}

Outcome do_taylor(const MonomialIdeal& ideal) {
  TaylorResolution resolution(ideal);
  json faces = json::array();
  for (const auto& f : resolution.faces()) {
    json members = json::array();
    for (std::size_t i = 0; i < ideal.size(); ++i) {
      if (f.members >> i & 1) members.push_back(ideal[i].to_string());
    }
    faces.push_back({{"mask", f.members},
                     {"hdeg", f.hdeg},
                     {"members", members},
                     {"mdeg", f.mdeg.to_string()}});
  }
  Outcome out;
  out.method = "taylor";
  out.result = json{{"ranks", resolution.ranks()},
                    {"minimal", is_taylor_minimal(ideal)},
                    {"faces", faces}};
  return out;
}

Outcome do_diagram(const MonomialIdeal& ideal) {
  json sets = json::array();
  const auto all = polar_sets(ideal);
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    json labels = json::array();
    for (const auto& label : all[i]) {
      labels.push_back(ideal.variables()->name(label.var) + "_" + std::to_string(label.slot));
    }
    sets.push_back({{"generator", ideal[i].to_string()}, {"labels", labels}});
  }
  Outcome out;
  out.method = "polarization";
  out.result = json{{"sets", sets}};
  return out;
}

Outcome do_classify(const MonomialIdeal& ideal, const ClassificationReport& r) {
  json stem = nullptr;
  if (auto s = detect_stem(ideal)) {
    json blocks = json::array();
    json stems = json::array();
    for (std::size_t t = 0; t < s->blocks.size(); ++t) {
      blocks.push_back(generator_list(ideal, s->blocks[t]));
      stems.push_back(s->stems[t].to_string());
    }
    stem = json{{"blocks", blocks}, {"stems", stems}};
  }
  json split = nullptr;
  if (auto sp = find_ci_split(ideal)) {
    split = json{{"free_part", generator_list(ideal, sp->free_part)},
                 {"ci_part", generator_list(ideal, sp->ci_part)}};
  }
  Outcome out;
  out.method = "classification";
  out.result = json{{"stem", stem},
                    {"ci_split", split},
                    {"quadratic_dominant", r.is_dominant && all_quadratic(ideal)}};
  return out;
}

json error_json(const Error& e) {
  json err{{"kind", to_string(e.kind())}, {"message", e.what()}};
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    err["code"] = to_string(pe->code());
    err["line"] = pe->line();
    err["column"] = pe->column();
  }
  return err;
}

RunResult run_impl(Command command, const ParsedIdeal& input, std::string_view text,
                   const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  json doc{{"command", to_string(command)}, {"input", input_echo(input, text)}};
  int exit_code = 0;
  try {
    const MonomialIdeal& ideal = input.ideal;
    const ClassificationReport report = classify(ideal);
    doc["classification"] = classification_json(ideal, report);
    Outcome out;
    switch (command) {
      case Command::Multiplicity: out = do_multiplicity(ideal, report, options); break;
      case Command::Codim:
        out.method = "branch_and_bound";
        out.result = json{{"codim", report.codim}};
        break;
      case Command::Classify: out = do_classify(ideal, report); break;
      case Command::Betti: out = do_betti(ideal); break;
      case Command::Taylor: out = do_taylor(ideal); break;
      case Command::Diagram: out = do_diagram(ideal); break;
      case Command::Verify: out = do_verify(ideal, report); break;
      case Command::Regularity: out = do_regularity(ideal, report); break;
    }
    doc["result"] = std::move(out.result);
    doc["method"] = out.method;
    if (!out.cross_checks.is_null()) doc["cross_checks"] = std::move(out.cross_checks);
    if (out.agreement) {
      doc["agreement"] = *out.agreement;
      if (!*out.agreement) exit_code = static_cast<int>(ErrorKind::InternalConsistency);
    }
  } catch (const Error& e) {
    doc["error"] = error_json(e);
    exit_code = e.exit_code();
  }
  doc["status"] = exit_code == 0 ? "ok" : "error";
  doc["exit_code"] = exit_code;
  doc["elapsed_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return RunResult{std::move(doc), exit_code};
}

void render(std::ostringstream& out, const json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (value.is_object()) {
    for (const auto& [key, item] : value.items()) {
      if (item.is_structured() && !item.empty()) {
        out << pad << key << ":\n";
        render(out, item, indent + 1);
      } else {
        out << pad << key << ": " << (item.is_string() ? item.get<std::string>() : item.dump())
            << '\n';
      }
    }
  } else if (value.is_array()) {
    for (const auto& item : value) {
      if (item.is_structured() && !item.empty()) {
        out << pad << "-\n";
        render(out, item, indent + 1);
      } else {
        out << pad << "- " << (item.is_string() ? item.get<std::string>() : item.dump()) << '\n';
      }
    }
  } else {
    out << pad << value.dump() << '\n';
  }
}

// A leading '[' selects the structured form: a JSON array of
// {"variable": exponent} objects.
ParsedIdeal parse_any(std::string_view text, const VariableTablePtr& vars, std::size_t line) {
  const std::string_view body = text.substr(0, text.find('#'));
  const auto first = body.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos || body[first] != '[') return parse_ideal(text, vars, line);
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::parse_error& e) {
    throw ParseError(ParseErrorCode::Syntax, line, e.byte, "invalid structured ideal");
  }
  std::vector<ExponentMap> gens;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& g = doc[i];
    if (!g.is_object()) {
      throw ParseError(ParseErrorCode::Syntax, line, i + 1, "generator must be an object");
    }
    ExponentMap m;
    for (const auto& [name, e] : g.items()) {
      if (!e.is_number_unsigned()) {
        throw ParseError(ParseErrorCode::Syntax, line, i + 1,
                         "exponent of " + name + " must be a nonnegative integer");
      }
      m.emplace_back(name, e.get<std::uint64_t>());
    }
    gens.push_back(std::move(m));
  }
  return ideal_from_exponent_maps(gens, vars, line);
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [command, text] : kCommandNames) {
    if (text == name) return command;
  }
  return std::nullopt;
}

std::string_view to_string(Command command) {
  for (const auto& [c, text] : kCommandNames) {
    if (c == command) return text;
  }
  return "unknown";
}

RunResult run(Command command, const ParsedIdeal& input, const RunOptions& options) {
  return run_impl(command, input, print_ideal(input.ideal), options);
}

RunResult run_text(Command command, std::string_view text, const VariableTablePtr& vars,
                   const RunOptions& options, std::size_t line) {
  try {
    ParsedIdeal input = parse_any(text, vars, line);
    return run_impl(command, input, text, options);
  } catch (const Error& e) {
    json doc{{"command", to_string(command)},
             {"input", json{{"text", text}}},
             {"error", error_json(e)},
             {"status", "error"},
             {"exit_code", e.exit_code()}};
    return RunResult{std::move(doc), e.exit_code()};
  }
}

RunResult run_random_verify(std::uint64_t seed, std::size_t cases,
                            const RandomIdealShape& shape) {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(seed);
  json failures = json::array();
  int exit_code = 0;
  for (std::size_t i = 0; i < cases; ++i) {
    ParsedIdeal input{random_ideal(rng, shape), {}};
    RunResult one = run(Command::Verify, input, RunOptions{});
    if (one.exit_code != 0) {
      exit_code = std::max(exit_code, one.exit_code);
      failures.push_back({{"case", i}, {"document", std::move(one.document)}});
    }
  }
  json doc{{"command", "verify"},
           {"random", json{{"seed", seed},
                           {"cases", cases},
                           {"max_generators", shape.max_generators},
                           {"max_variables", shape.max_variables},
                           {"max_exponent", shape.max_exponent}}},
           {"result", json{{"checked", cases}, {"failures", failures}}},
           {"method", "all"},
           {"agreement", failures.empty()},
           {"status", exit_code == 0 ? "ok" : "error"},
           {"exit_code", exit_code}};
  doc["elapsed_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return RunResult{std::move(doc), exit_code};
}

std::string render_pretty(const json& document) {
  std::ostringstream out;
  render(out, document, 0);
  return out.str();
}

}  // namespace multmon
