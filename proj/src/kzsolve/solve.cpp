#include <algorithm>

#include "kzres/kzsolve.hpp"

namespace kzres {

ResidueBatch residue_batch(const Partition& shape, int m, const std::vector<Numbering>& cycles,
                           const std::vector<Numbering>& forms) {
  PowerProductForm master = master_form(shape, m);
  ResidueBatch batch;
  for (const auto& c : cycles) batch.plans.push_back(residue_plan(c, master.roster));
  for (const auto& f : forms) batch.forms.push_back(tableau_form(f, master.roster));
  for (const auto& g : level_group(master.roster)) batch.relabels.push_back(relabel_table(master.roster, g));
  batch.master = std::move(master.integrand);
  return batch;
}

namespace {

std::vector<SparsePolynomial> run_batch(const ResidueBatch& batch, int nvars, const SolveOptions& options) {
  if (options.workers > 1) {
    return normalize_parallel(evaluate_residues_parallel(batch, options.workers), nvars, options.workers);
  }
  return normalize_serial(evaluate_residues_serial(batch), nvars);
}

std::vector<Numbering> representatives(const std::vector<Tabloid>& us) {
  std::vector<Numbering> out;
  out.reserve(us.size());
  for (const auto& u : us) out.push_back(representative(u));
  return out;
}

void require_shape(const Partition& shape, const Tabloid& u) {
  if (u.shape() != shape.parts()) throw std::invalid_argument("tabloid " + u.to_string() + " is not of shape " + shape.to_string());
}

}  // namespace

SparsePolynomial solve_component(const Partition& shape, int m, const Tabloid& cycle, const Tabloid& form,
                                 const SolveOptions& options) {
  check_resource_guard(shape, options);
  require_shape(shape, cycle);
  require_shape(shape, form);
  const auto batch = residue_batch(shape, m, {representative(cycle)}, {representative(form)});
  return run_batch(batch, shape.size(), options).front();
}

SolutionTable solve_cycle(const Partition& shape, int m, const Tabloid& cycle, const SolveOptions& options) {
  check_resource_guard(shape, options);
  require_shape(shape, cycle);
  const auto forms = tabloids(shape.parts());
  const auto batch = residue_batch(shape, m, {representative(cycle)}, representatives(forms));
  auto values = run_batch(batch, shape.size(), options);
  SolutionTable table{shape, m, cycle, {}};
  for (std::size_t u = 0; u < forms.size(); ++u) table.components.emplace(forms[u], std::move(values[u]));
  return table;
}

FundamentalMatrix fundamental_solution(const Partition& shape, int m, const SolveOptions& options) {
  check_resource_guard(shape, options);
  const SpechtModule module(shape);
  const auto& forms = module.tabloids();
  const auto batch = residue_batch(shape, m, module.tableaux(), representatives(forms));
  auto values = run_batch(batch, shape.size(), options);

  const std::size_t d = module.dimension();
  FundamentalMatrix out{shape, m, module.tableaux(), {}, PolyMatrix(d, d, shape.size())};
  for (std::size_t t = 0; t < d; ++t) {
    SolutionTable table{shape, m, tabloid_of(module.tableaux()[t]), {}};
    const auto first = values.begin() + static_cast<std::ptrdiff_t>(t * forms.size());
    std::vector<SparsePolynomial> row(first, first + static_cast<std::ptrdiff_t>(forms.size()));
    const auto coords = module.coordinates(row);
    for (std::size_t s = 0; s < d; ++s) out.matrix.at(t, s) = coords[s];
    for (std::size_t u = 0; u < forms.size(); ++u) table.components.emplace(forms[u], std::move(row[u]));
    out.solutions.push_back(std::move(table));
  }
  return out;
}

SolutionTable table_from_specht_coordinates(const Partition& shape, int m,
                                            const std::vector<SparsePolynomial>& coords) {
  const SpechtModule module(shape);
  auto values = module.expand(coords);
  SolutionTable table{shape, m, Tabloid{}, {}};
  for (std::size_t u = 0; u < values.size(); ++u) table.components.emplace(module.tabloids()[u], std::move(values[u]));
  return table;
}

}  // namespace kzres
