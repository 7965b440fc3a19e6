#include "multmon/random.hpp"

namespace multmon {

VariableTablePtr standard_variables(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i))
                           : "x" + std::to_string(i));
  }
  return make_variables(std::move(names));
}

MonomialIdeal random_ideal(std::mt19937_64& rng, const RandomIdealShape& shape) {
  std::uniform_int_distribution<std::size_t> pick_n(1, shape.max_variables);
  std::uniform_int_distribution<std::size_t> pick_q(1, shape.max_generators);
  std::uniform_int_distribution<Exponent> pick_e(1, shape.max_exponent);
  std::bernoulli_distribution present(0.5);

  const std::size_t n = pick_n(rng);
  const std::size_t q = pick_q(rng);
  auto vars = standard_variables(n);
  std::vector<Monomial> raw;
  while (raw.size() < q) {
    std::vector<Exponent> exps(n, 0);
    for (auto& e : exps) e = present(rng) ? pick_e(rng) : 0;
    Monomial m(vars, std::move(exps));
    if (!m.is_unit()) raw.push_back(std::move(m));
  }
  return MonomialIdeal::minimalize(vars, std::move(raw));
}

}  // namespace multmon
