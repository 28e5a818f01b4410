#include <algorithm>
#include <numeric>
#include <string>

#include "kzres/kzsolve.hpp"

namespace kzres {

void check_resource_guard(const Partition& shape, const SolveOptions& options) {
  if (shape.size() > kMaxVars) {
    throw ResourceGuardError("N = " + std::to_string(shape.size()) + " exceeds the supported maximum of " +
                             std::to_string(kMaxVars));
  }
  const std::int64_t cost = level_profile(shape).config_dim * level_group_order(shape);
  if (cost > options.budget) {
    throw ResourceGuardError("shape " + shape.to_string() + " needs " + std::to_string(cost) +
                             " elementary residues per component, over the budget of " +
                             std::to_string(options.budget));
  }
}

PowerProductForm master_form(const Partition& shape, int m) {
  if (m < 1) throw std::invalid_argument("master_form requires m >= 1");
  PowerProductForm form{FactoredSum{}, VariableRoster(shape)};
  const auto& roster = form.roster;
  FactoredTerm term;
  const int n = shape.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) term.multiply_difference(fixed_atom(i), fixed_atom(j), 2 * m);
  for (int s = 1; s <= roster.levels(); ++s) {
    const auto here = roster.level(s);
    for (std::size_t a = 0; a < here.size(); ++a)
      for (std::size_t b = a + 1; b < here.size(); ++b) term.multiply_difference(here[a].atom, here[b].atom, 2 * m);
    if (s + 1 <= roster.levels()) {
      for (const auto& upper : roster.level(s + 1))
        for (const auto& lower : here) term.multiply_difference(upper.atom, lower.atom, -m);
    }
  }
  if (roster.levels() >= 1) {
    for (const auto& v : roster.level(1))
      for (int k = 1; k <= n; ++k) term.multiply_difference(v.atom, fixed_atom(k), -m);
  }
  form.integrand = FactoredSum(std::move(term));
  return form;
}

FactoredSum tableau_form(const Numbering& t, const VariableRoster& roster) {
  FactoredTerm term;
  for (const Box& b : boxes(t.shape())) {
    if (b.row < 2) continue;
    for (int s = 1; s + 1 < b.row; ++s) term.multiply_difference(roster.atom(b, s + 1), roster.atom(b, s), -1);
    term.multiply_difference(roster.atom(b, 1), fixed_atom(t.label(b)), -1);
  }
  return FactoredSum(std::move(term));
}

FactoredSum tableau_form(const Numbering& t) { return tableau_form(t, VariableRoster(t.shape())); }

std::int64_t level_group_order(const Partition& shape) {
  std::int64_t order = 1;
  const auto profile = level_profile(shape);
  for (std::size_t s = 1; s < profile.sizes.size(); ++s)
    for (int k = 2; k <= profile.sizes[s]; ++k) order *= k;
  return order;
}

std::vector<LevelPermutation> level_group(const VariableRoster& roster) {
  std::vector<std::vector<int>> current(roster.levels());
  for (int s = 1; s <= roster.levels(); ++s) {
    current[s - 1].resize(roster.level(s).size());
    std::iota(current[s - 1].begin(), current[s - 1].end(), 0);
  }
  std::vector<LevelPermutation> out;
  while (true) {
    out.push_back({current});
    std::size_t s = 0;
    while (s < current.size() && !std::next_permutation(current[s].begin(), current[s].end())) ++s;
    if (s == current.size()) break;
  }
  return out;
}

std::vector<Atom> relabel_table(const VariableRoster& roster, const LevelPermutation& g) {
  std::vector<Atom> table(kMaxAtoms);
  std::iota(table.begin(), table.end(), Atom{0});
  for (int s = 1; s <= roster.levels(); ++s) {
    const auto vars = roster.level(s);
    const auto& perm = g.perms.at(s - 1);
    for (std::size_t p = 0; p < vars.size(); ++p) table[vars[p].atom] = vars[perm[p]].atom;
  }
  return table;
}

}  // namespace kzres
