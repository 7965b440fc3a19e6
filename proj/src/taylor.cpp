#include "multmon/taylor.hpp"

#include <algorithm>
#include <bit>

#include "multmon/error.hpp"
#include "multmon/invariants.hpp"

namespace multmon {

namespace {

void check_size(const MonomialIdeal& ideal) {
  if (ideal.size() > kMaxTaylorGenerators) {
    throw ResourceLimitError("resolution too large: " + std::to_string(ideal.size()) +
                             " generators, the Taylor complex is limited to " +
                             std::to_string(kMaxTaylorGenerators));
  }
}

// deg(lcm(face)) for every mask, by depth-first extension in increasing
// generator order. Only one exponent vector per depth is alive at a time.
std::vector<Degree> face_degrees(const MonomialIdeal& ideal) {
  check_size(ideal);
  const std::size_t q = ideal.size();
  const std::size_t n = ideal.variables()->size();
  std::vector<Degree> degrees(std::size_t{1} << q, 0);
  std::vector<std::vector<Exponent>> stack(q + 1, std::vector<Exponent>(n, 0));

  struct Walker {
    const MonomialIdeal& ideal;
    std::vector<Degree>& degrees;
    std::vector<std::vector<Exponent>>& stack;
    std::size_t n;

    void visit(std::size_t depth, std::size_t start, FaceMask mask, Degree degree) {
      degrees[mask] = degree;
      for (std::size_t i = start; i < ideal.size(); ++i) {
        const auto& parent = stack[depth];
        auto& child = stack[depth + 1];
        Degree d = 0;
        for (std::size_t v = 0; v < n; ++v) {
          child[v] = std::max(parent[v], ideal[i].exponent(v));
          d += child[v];
        }
        visit(depth + 1, i + 1, mask | (FaceMask{1} << i), d);
      }
    }
  };
  Walker{ideal, degrees, stack, n}.visit(0, 0, 0, 0);
  return degrees;
}

ExactInt power_sum(const MonomialIdeal& ideal, unsigned k, bool with_empty) {
  // Collapse faces into signed counts per degree before raising to k.
  auto degrees = face_degrees(ideal);
  std::map<Degree, std::int64_t> signed_counts;
  for (FaceMask mask = with_empty ? 0 : 1; mask < degrees.size(); ++mask) {
    signed_counts[degrees[mask]] += (std::popcount(mask) % 2 == 0) ? 1 : -1;
  }
  ExactInt total = 0;
  for (auto [degree, count] : signed_counts) {
    if (count == 0) continue;
    total += ExactInt(count) * boost::multiprecision::pow(ExactInt(degree), k);
  }
  return total;
}

void require_dominant(const MonomialIdeal& ideal, const char* what) {
  if (!is_dominant(ideal)) {
    throw UnsupportedError(std::string(what) +
                           " requires a dominant ideal; no algorithm is provided for "
                           "non-minimal Taylor resolutions");
  }
}

}  // namespace

TaylorResolution::TaylorResolution(MonomialIdeal ideal) : ideal_(std::move(ideal)) {
  check_size(ideal_);
  const std::size_t q = ideal_.size();
  const std::size_t count = std::size_t{1} << q;

  std::vector<Monomial> mdeg;
  mdeg.reserve(count);
  mdeg.emplace_back(ideal_.variables());
  for (FaceMask mask = 1; mask < count; ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    mdeg.push_back(lcm(mdeg[mask & (mask - 1)], ideal_[low]));
  }

  std::vector<FaceMask> order(count);
  for (FaceMask mask = 0; mask < count; ++mask) order[mask] = mask;
  std::stable_sort(order.begin(), order.end(), [](FaceMask a, FaceMask b) {
    return std::popcount(a) < std::popcount(b);
  });

  faces_.reserve(count);
  position_.assign(count, 0);
  for (FaceMask mask : order) {
    position_[mask] = faces_.size();
    faces_.push_back(TaylorFace{mask, static_cast<std::size_t>(std::popcount(mask)),
                                std::move(mdeg[mask])});
  }
}

const TaylorFace& TaylorResolution::face(FaceMask mask) const {
  if (mask >= position_.size()) throw InvalidInputError("face mask out of range");
  return faces_[position_[mask]];
}

std::size_t TaylorResolution::rank(std::size_t hdeg) const {
  return static_cast<std::size_t>(
      std::count_if(faces_.begin(), faces_.end(),
                    [hdeg](const TaylorFace& f) { return f.hdeg == hdeg; }));
}

std::vector<std::size_t> TaylorResolution::ranks() const {
  std::vector<std::size_t> out(ideal_.size() + 1, 0);
  for (const auto& f : faces_) ++out[f.hdeg];
  return out;
}

DifferentialTerm differential_coefficient(const TaylorResolution& resolution,
                                          FaceMask face, std::size_t position) {
  const auto& f = resolution.face(face);
  if (position < 1 || position > f.hdeg) {
    throw InvalidInputError("removed position " + std::to_string(position) +
                            " is outside 1.." + std::to_string(f.hdeg));
  }
  FaceMask rest = face;
  for (std::size_t j = 1; j < position; ++j) rest &= rest - 1;
  const FaceMask removed = rest & (~rest + 1);
  const FaceMask target = face & ~removed;
  const int sign = (position % 2 == 1) ? 1 : -1;
  return DifferentialTerm{sign, quotient(f.mdeg, resolution.face(target).mdeg), target};
}

bool is_taylor_minimal(const MonomialIdeal& ideal) {
  auto degrees = face_degrees(ideal);
  // mdeg of a facet divides mdeg of the face, so equal degree means equal mdeg.
  for (FaceMask mask = 1; mask < degrees.size(); ++mask) {
    for (FaceMask rest = mask; rest != 0; rest &= rest - 1) {
      const FaceMask bit = rest & (~rest + 1);
      if (degrees[mask] == degrees[mask & ~bit]) return false;
    }
  }
  return true;
}

void BettiTable::add(std::size_t hdeg, const Monomial& mdeg, std::uint64_t count) {
  if (count == 0) return;
  entries_[Key{hdeg, mdeg}] += count;
}

std::uint64_t BettiTable::at(std::size_t hdeg, const Monomial& mdeg) const {
  auto it = entries_.find(Key{hdeg, mdeg});
  return it == entries_.end() ? 0 : it->second;
}

std::map<std::pair<std::size_t, Degree>, std::uint64_t> BettiTable::graded() const {
  std::map<std::pair<std::size_t, Degree>, std::uint64_t> out;
  for (const auto& [key, count] : entries_) out[{key.first, key.second.degree()}] += count;
  return out;
}

std::uint64_t BettiTable::total(std::size_t hdeg) const {
  std::uint64_t sum = 0;
  for (const auto& [key, count] : entries_) {
    if (key.first == hdeg) sum += count;
  }
  return sum;
}

std::size_t BettiTable::max_hdeg() const {
  std::size_t top = 0;
  for (const auto& [key, count] : entries_) top = std::max(top, key.first);
  return top;
}

BettiTable betti_table(const MonomialIdeal& ideal) {
  require_dominant(ideal, "betti_table");
  TaylorResolution resolution(ideal);
  BettiTable table;
  for (const auto& f : resolution.faces()) table.add(f.hdeg, f.mdeg);
  return table;
}

Degree regularity_dominant(const MonomialIdeal& ideal) {
  require_dominant(ideal, "regularity_dominant");
  auto degrees = face_degrees(ideal);
  Degree reg = 0;
  for (FaceMask mask = 0; mask < degrees.size(); ++mask) {
    reg = std::max<Degree>(reg, degrees[mask] - static_cast<Degree>(std::popcount(mask)));
  }
  return reg;
}

ExactInt ps_power_sum(const MonomialIdeal& ideal, unsigned k) {
  return power_sum(ideal, k, false);
}

ExactInt ps_power_sum_with_empty_face(const MonomialIdeal& ideal, unsigned k) {
  return power_sum(ideal, k, true);
}

ExactInt multiplicity_ps(const MonomialIdeal& ideal) {
  const std::size_t c = codim(ideal);
  ExactInt sum = ps_power_sum(ideal, static_cast<unsigned>(c));
  ExactInt factorial = 1;
  for (std::size_t i = 2; i <= c; ++i) factorial *= i;
  if (sum % factorial != 0) {
    throw ConsistencyError("power sum " + sum.str() + " is not divisible by " +
                           std::to_string(c) + "!");
  }
  ExactInt e = sum / factorial;
  if (c % 2 == 1) e = -e;
  if (e <= 0) {
    throw ConsistencyError("power-sum engine produced nonpositive multiplicity " +
                           e.str());
  }
  return e;
}

}  // namespace multmon
