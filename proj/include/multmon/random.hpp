#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "multmon/ideal.hpp"

namespace multmon {

struct RandomIdealShape {
  std::size_t max_generators = 8;
  std::size_t max_variables = 6;
  Exponent max_exponent = 4;
};

/// Variable names a, b, c, ... (x26, x27, ... past z).
VariableTablePtr standard_variables(std::size_t n);

/// Random monomial ideal: n and q drawn uniformly from [1, max], each
/// exponent zero with probability 1/2, otherwise uniform in [1, max_exponent].
/// The raw list is minimalized, so the result may have fewer generators.
MonomialIdeal random_ideal(std::mt19937_64& rng, const RandomIdealShape& shape);

}  // namespace multmon
