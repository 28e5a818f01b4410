#include "kzres/kernels.hpp"

#include <exception>

#include <omp.h>

namespace kzres {

namespace {

FactoredSum evaluate_task(const ResidueBatch& batch, std::size_t cycle, std::size_t form, std::size_t g) {
  FactoredSum integrand = batch.master * batch.forms[form].relabel(batch.relabels[g]);
  return iterated_residue(std::move(integrand), batch.plans[cycle]);
}

}  // namespace

std::vector<FactoredSum> evaluate_residues_serial(const ResidueBatch& batch) {
  std::vector<FactoredSum> out(batch.plans.size() * batch.forms.size());
  for (std::size_t c = 0; c < batch.plans.size(); ++c)
    for (std::size_t f = 0; f < batch.forms.size(); ++f)
      for (std::size_t g = 0; g < batch.relabels.size(); ++g)
        out[c * batch.forms.size() + f] += evaluate_task(batch, c, f, g);
  return out;
}

std::vector<FactoredSum> evaluate_residues_parallel(const ResidueBatch& batch, int workers) {
  const std::size_t nforms = batch.forms.size();
  const std::size_t ngroup = batch.relabels.size();
  const auto ntasks = static_cast<std::ptrdiff_t>(batch.task_count());
  std::vector<FactoredSum> partial(batch.task_count());
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (std::ptrdiff_t task = 0; task < ntasks; ++task) {
    const auto t = static_cast<std::size_t>(task);
    try {
      partial[t] = evaluate_task(batch, t / (nforms * ngroup), (t / ngroup) % nforms, t % ngroup);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  // Exact sums commute, so reducing in task order gives the serial result.
  std::vector<FactoredSum> out(batch.plans.size() * nforms);
  const auto nout = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static) num_threads(workers)
  for (std::ptrdiff_t i = 0; i < nout; ++i) {
    const auto k = static_cast<std::size_t>(i);
    for (std::size_t g = 0; g < ngroup; ++g) out[k] += partial[k * ngroup + g];
  }
  return out;
}

std::vector<SparsePolynomial> normalize_serial(const std::vector<FactoredSum>& sums, int nvars) {
  std::vector<SparsePolynomial> out;
  out.reserve(sums.size());
  for (const auto& s : sums) out.push_back(normalize_factored(s, nvars));
  return out;
}

std::vector<SparsePolynomial> normalize_parallel(const std::vector<FactoredSum>& sums, int nvars, int workers) {
  std::vector<SparsePolynomial> out(sums.size(), SparsePolynomial(nvars));
  std::exception_ptr failure;
  const auto n = static_cast<std::ptrdiff_t>(sums.size());
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = normalize_factored(sums[static_cast<std::size_t>(i)], nvars);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace kzres
