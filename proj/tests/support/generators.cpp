#include "support/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "multmon/invariants.hpp"
#include "multmon/random.hpp"

namespace multmon::testing {

namespace {

using Row = std::vector<Exponent>;

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Exponent exponent(std::mt19937_64& rng, Exponent lo, Exponent hi) {
  return std::uniform_int_distribution<Exponent>(lo, hi)(rng);
}

// Rows are built over n abstract variables; the column order is shuffled
// so structure never lines up with variable names.
struct Builder {
  std::size_t n = 0;
  std::vector<Row> rows;

  std::size_t fresh() { return n++; }

  Row& row() {
    rows.emplace_back();
    return rows.back();
  }

  static void set(Row& r, std::size_t var, Exponent e) {
    if (r.size() <= var) r.resize(var + 1, 0);
    r[var] = e;
  }

  MonomialIdeal finish(std::mt19937_64& rng) const {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto vars = standard_variables(n);
    std::vector<Monomial> gens;
    for (const auto& r : rows) {
      Row exps(n, 0);
      for (std::size_t v = 0; v < r.size(); ++v) exps[perm[v]] = r[v];
      gens.emplace_back(vars, std::move(exps));
    }
    std::shuffle(gens.begin(), gens.end(), rng);
    return MonomialIdeal::minimalize(vars, std::move(gens));
  }
};

template <class Build, class Accept>
MonomialIdeal retry(std::mt19937_64& rng, Build build, Accept accept) {
  for (int attempt = 0; attempt < 10'000; ++attempt) {
    auto m = build(rng);
    if (accept(m)) return m;
  }
  throw std::runtime_error("generator failed to produce a member");
}

}  // namespace

MonomialIdeal ideal(std::string_view text) { return parse_ideal(text).ideal; }

MonomialIdeal ideal(std::string_view text, std::string_view vars) {
  return parse_ideal(text, parse_variable_list(vars)).ideal;
}

std::size_t index_of(const MonomialIdeal& m, std::string_view generator) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].to_string() == generator) return i;
  }
  throw std::invalid_argument("no generator " + std::string(generator));
}

MonomialIdeal random_codim1(std::mt19937_64& rng) {
  return retry(
      rng,
      [](std::mt19937_64& r) {
        RandomIdealShape shape{9, 5, 3};
        auto base = random_ideal(r, shape);
        const auto n = base.variables()->size();
        Row l(n, 0);
        while (std::all_of(l.begin(), l.end(), [](Exponent e) { return e == 0; })) {
          for (auto& e : l) e = uniform(r, 0, 2) == 0 ? exponent(r, 1, 3) : 0;
        }
        const Monomial common(base.variables(), l);
        std::vector<Monomial> gens;
        for (const auto& g : base.generators()) gens.push_back(g * common);
        return MonomialIdeal::minimalize(base.variables(), std::move(gens));
      },
      [](const MonomialIdeal& m) { return m.size() <= 10 && codim(m) == 1; });
}

MonomialIdeal random_complete_intersection(std::mt19937_64& rng) {
  return retry(
      rng,
      [](std::mt19937_64& r) {
        Builder b;
        const auto q = uniform(r, 1, 5);
        for (std::size_t i = 0; i < q; ++i) {
          auto& row = b.row();
          const auto width = uniform(r, 1, 3);
          for (std::size_t k = 0; k < width; ++k) Builder::set(row, b.fresh(), exponent(r, 1, 4));
        }
        return b.finish(r);
      },
      [](const MonomialIdeal& m) { return is_complete_intersection(m); });
}

MonomialIdeal random_stem(std::mt19937_64& rng) {
  return retry(
      rng,
      [](std::mt19937_64& r) {
        Builder b;
        const auto blocks = uniform(r, 1, 4);
        for (std::size_t t = 0; t < blocks; ++t) {
          const auto size = uniform(r, 1, 4);
          const auto stem = b.fresh();
          // An optional second shared variable, present in every member,
          // makes the stem a product of two variables.
          const bool two = uniform(r, 0, 2) == 0;
          const auto stem2 = two ? b.fresh() : 0;
          for (std::size_t i = 0; i < size; ++i) {
            Row row;
            Builder::set(row, stem, exponent(r, 1, 3));
            if (two) Builder::set(row, stem2, exponent(r, 1, 2));
            // Singleton blocks may omit the private variable.
            if (size > 1 || uniform(r, 0, 1) == 0) Builder::set(row, b.fresh(), exponent(r, 1, 3));
            b.rows.push_back(std::move(row));
          }
        }
        return b.finish(r);
      },
      [](const MonomialIdeal& m) { return detect_stem(m).has_value(); });
}

MonomialIdeal random_quadratic_dominant(std::mt19937_64& rng) {
  return retry(
      rng,
      [](std::mt19937_64& r) {
        Builder b;
        const auto groups = uniform(r, 0, 3);
        for (std::size_t t = 0; t < groups; ++t) {
          const auto y = b.fresh();
          const auto partners = uniform(r, 2, 4);
          for (std::size_t i = 0; i < partners; ++i) {
            auto& row = b.row();
            Builder::set(row, y, 1);
            Builder::set(row, b.fresh(), 1);
          }
          if (uniform(r, 0, 2) == 0) Builder::set(b.row(), y, 2);
        }
        const auto isolated = uniform(r, groups == 0 ? 1 : 0, 3);
        for (std::size_t i = 0; i < isolated; ++i) {
          auto& row = b.row();
          if (uniform(r, 0, 1) == 0) {
            Builder::set(row, b.fresh(), 2);
          } else {
            Builder::set(row, b.fresh(), 1);
            Builder::set(row, b.fresh(), 1);
          }
        }
        return b.finish(r);
      },
      [](const MonomialIdeal& m) {
        return is_dominant(m) && std::all_of(m.generators().begin(), m.generators().end(),
                                             [](const Monomial& g) { return g.degree() == 2; });
      });
}

MonomialIdeal random_dominant_with_split(std::mt19937_64& rng) {
  return retry(
      rng,
      [](std::mt19937_64& r) {
        Builder b;
        const auto c = uniform(r, 1, 4);
        std::vector<std::vector<std::size_t>> blocks(c);
        for (auto& block : blocks) {
          auto& row = b.row();
          const auto width = uniform(r, 1, 2);
          for (std::size_t k = 0; k < width; ++k) {
            block.push_back(b.fresh());
            Builder::set(row, block.back(), exponent(r, 2, 4));
          }
        }
        const auto d = uniform(r, 1, 4);
        for (std::size_t i = 0; i < d; ++i) {
          Row row;
          Builder::set(row, b.fresh(), exponent(r, 1, 2));
          for (const auto& block : blocks) {
            for (auto v : block) {
              if (uniform(r, 0, 1) == 0) Builder::set(row, v, exponent(r, 1, 3));
            }
          }
          b.rows.push_back(std::move(row));
        }
        return b.finish(r);
      },
      [](const MonomialIdeal& m) {
        if (!is_dominant(m)) return false;
        auto split = find_ci_split(m);
        return split && !split->free_part.empty();
      });
}

MonomialIdeal random_aci(std::mt19937_64& rng, bool dominant) {
  return retry(
      rng,
      [dominant](std::mt19937_64& r) {
        Builder b;
        const auto q = uniform(r, 2, 4);
        std::vector<std::vector<std::size_t>> blocks(q);
        std::vector<Row> ci;
        for (auto& block : blocks) {
          Row row;
          const auto width = uniform(r, 1, 2);
          for (std::size_t k = 0; k < width; ++k) {
            block.push_back(b.fresh());
            Builder::set(row, block.back(), exponent(r, 1, 4));
          }
          ci.push_back(row);
          b.rows.push_back(std::move(row));
        }
        // The extra generator: exponents on CI variables, plus a private
        // variable when a dominant ideal is wanted. Without one it can
        // still be dominant by beating a CI generator somewhere, which
        // the acceptance filter sorts out.
        Row m;
        for (std::size_t t = 0; t < q; ++t) {
          for (auto v : blocks[t]) {
            if (uniform(r, 0, 1) == 0) continue;
            const Exponent cap = ci[t][v];
            Builder::set(m, v, dominant ? exponent(r, 1, 4) : exponent(r, 1, cap));
          }
        }
        if (dominant && uniform(r, 0, 1) == 0) Builder::set(m, b.fresh(), exponent(r, 1, 2));
        if (std::all_of(m.begin(), m.end(), [](Exponent e) { return e == 0; })) {
          Builder::set(m, blocks[0][0], 1);
        }
        b.rows.push_back(std::move(m));
        return b.finish(r);
      },
      [dominant](const MonomialIdeal& m) {
        return almost_complete_intersection_witness(m).has_value() && is_dominant(m) == dominant;
      });
}

}  // namespace multmon::testing
