#pragma once

// Data-parallel kernels behind fundamental_solution. Each kernel has a serial
// reference implementation; both must produce identical results for any
// worker count.

#include <vector>

#include "kzres/factored.hpp"
#include "kzres/residue.hpp"

namespace kzres {

/// Every (cycle, form, group element) triple is one task:
///   iterated_residue(master * relabel_g(forms[form]), plans[cycle]).
/// The group sum carries no sign: the sign of g cancels against the
/// orientation change of dt under the relabeling.
struct ResidueBatch {
  FactoredSum master;
  std::vector<ResiduePlan> plans;
  std::vector<FactoredSum> forms;
  std::vector<std::vector<Atom>> relabels;

  std::size_t task_count() const { return plans.size() * forms.size() * relabels.size(); }
};

/// Result index: (cycle * forms.size() + form), already summed over g.
std::vector<FactoredSum> evaluate_residues_serial(const ResidueBatch& batch);
std::vector<FactoredSum> evaluate_residues_parallel(const ResidueBatch& batch, int workers);

std::vector<SparsePolynomial> normalize_serial(const std::vector<FactoredSum>& sums, int nvars);
std::vector<SparsePolynomial> normalize_parallel(const std::vector<FactoredSum>& sums, int nvars, int workers);

}  // namespace kzres
