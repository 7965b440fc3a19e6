// Command-line front end: multmon <command> [--ideal TEXT | --file PATH] ...

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "multmon/report.hpp"

namespace {

struct BatchLine {
  std::size_t number;
  std::string text;
};

std::vector<BatchLine> read_batch(std::istream& in) {
  std::vector<BatchLine> lines;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    const std::string body = line.substr(0, line.find('#'));
    if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back({number, line});
  }
  return lines;
}

void emit(const nlohmann::json& doc, bool pretty) {
  if (pretty) {
    std::cout << multmon::render_pretty(doc) << '\n';
  } else {
    std::cout << doc.dump() << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact multiplicities of monomial ideals"};
  std::string command_name;
  std::string ideal_text;
  std::string file_path;
  std::string vars_text;
  bool check = false;
  bool json_out = false;
  bool pretty = false;
  bool random = false;
  std::uint64_t seed = 1;
  std::size_t cases = 100;

  app.add_option("command", command_name,
                 "multiplicity | codim | classify | betti | taylor | diagram | verify | regularity")
      ->required();
  auto* ideal_opt = app.add_option("--ideal", ideal_text, "ideal, e.g. \"x^2*y, x*y^2\"");
  auto* file_opt = app.add_option("--file", file_path, "batch file, one ideal per line");
  ideal_opt->excludes(file_opt);
  app.add_option("--vars", vars_text, "explicit variable order, e.g. a,b,c");
  app.add_flag("--check", check, "cross-check the multiplicity with the engine and oracle");
  auto* json_flag = app.add_flag("--json", json_out, "one JSON document per line (default)");
  auto* pretty_flag = app.add_flag("--pretty", pretty, "human-readable output");
  json_flag->excludes(pretty_flag);
  app.add_flag("--random", random, "verify: check seeded random ideals");
  app.add_option("--seed", seed, "verify --random: RNG seed");
  app.add_option("--cases", cases, "verify --random: number of ideals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  auto command = multmon::parse_command(command_name);
  if (!command) {
    std::cerr << "unknown command '" << command_name << "'\n";
    return 1;
  }

  if (random) {
    if (*command != multmon::Command::Verify) {
      std::cerr << "--random is only valid with verify\n";
      return 1;
    }
    auto result = multmon::run_random_verify(seed, cases);
    emit(result.document, pretty);
    return result.exit_code;
  }

  multmon::VariableTablePtr vars;
  if (!vars_text.empty()) {
    try {
      vars = multmon::parse_variable_list(vars_text);
    } catch (const multmon::Error& e) {
      std::cerr << "--vars: " << e.what() << '\n';
      return 1;
    }
  }

  const multmon::RunOptions options{check};
  if (!ideal_opt->empty()) {
    auto result = multmon::run_text(*command, ideal_text, vars, options);
    emit(result.document, pretty);
    return result.exit_code;
  }
  if (file_opt->empty()) {
    std::cerr << "one of --ideal or --file is required\n";
    return 1;
  }

  std::ifstream in(file_path);
  if (!in) {
    std::cerr << "cannot open " << file_path << '\n';
    return 1;
  }
  const auto lines = read_batch(in);
  std::vector<multmon::RunResult> results(lines.size());
  std::atomic<std::size_t> next{0};
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(lines.size(), std::thread::hardware_concurrency()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < lines.size(); i = next++) {
          results[i] = multmon::run_text(*command, lines[i].text, vars, options, lines[i].number);
          results[i].document["line"] = lines[i].number;
        }
      });
    }
  }
  int exit_code = 0;
  for (const auto& r : results) {
    emit(r.document, pretty);
    exit_code = std::max(exit_code, r.exit_code);
  }
  return exit_code;
}
