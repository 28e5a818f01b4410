#include <stdexcept>

#include "kzres/kzsolve.hpp"

namespace kzres {

namespace {

void require_reflection_args(int n, int m) {
  if (n < 2 || n > kMaxVars) throw std::invalid_argument("reflection representation needs 2 <= N <= 8");
  if (m < 1) throw std::invalid_argument("reflection representation needs m >= 1");
}

// Polynomial in t with coefficients in z_1..z_n; index = power of t.
using TPoly = std::vector<SparsePolynomial>;

TPoly times_linear(const TPoly& p, int label, int n) {
  TPoly out(p.size() + 1, SparsePolynomial(n));
  const auto z = SparsePolynomial::variable(n, label);
  for (std::size_t k = 0; k < p.size(); ++k) {
    out[k + 1] += p[k];
    out[k] -= z * p[k];
  }
  return out;
}

SparsePolynomial evaluate_at(const TPoly& p, int label, int n) {
  const auto z = SparsePolynomial::variable(n, label);
  SparsePolynomial acc(n);
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * z + p[k];
  return acc;
}

}  // namespace

SparsePolynomial vandermonde_power(int n, int e) {
  SparsePolynomial out = SparsePolynomial::constant(n, 1);
  if (e < 0) throw std::invalid_argument("vandermonde_power needs e >= 0");
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out = out * SparsePolynomial::difference_power(n, i, j, e);
  return out;
}

std::vector<ReflectionSolution> reflection_psi(int n, int m) {
  require_reflection_args(n, m);
  const Atom t = kMaxVars;
  FactoredTerm base;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) base.multiply_difference(fixed_atom(i), fixed_atom(j), 2 * m);
    base.multiply_difference(t, fixed_atom(i), -m);
  }
  std::vector<ReflectionSolution> out;
  for (int a = 1; a <= n; ++a) {
    ReflectionSolution sol{n, m, a, {}};
    for (int b = 1; b <= n; ++b) {
      FactoredTerm term = base;
      term.multiply_difference(t, fixed_atom(b), -1);
      sol.components.push_back(normalize_factored(residue_at(FactoredSum(term), t, fixed_atom(a)), n));
    }
    out.push_back(std::move(sol));
  }
  return out;
}

std::vector<ReflectionDual> reflection_phi(int n, int m) {
  require_reflection_args(n, m);
  const SparsePolynomial den = vandermonde_power(n, 2 * m);
  std::vector<TPoly> antiderivatives;
  for (int b = 1; b <= n; ++b) {
    TPoly p{SparsePolynomial::constant(n, 1)};
    for (int i = 1; i <= n; ++i)
      for (int k = 0; k < (i == b ? m - 1 : m); ++k) p = times_linear(p, i, n);
    TPoly anti(p.size() + 1, SparsePolynomial(n));
    for (std::size_t k = 0; k < p.size(); ++k) anti[k + 1] = p[k] * Coefficient(1, static_cast<int>(k + 1));
    antiderivatives.push_back(std::move(anti));
  }
  std::vector<ReflectionDual> out;
  for (int a = 1; a < n; ++a) {
    ReflectionDual dual{n, m, a, {}};
    for (const auto& anti : antiderivatives)
      dual.components.emplace_back(evaluate_at(anti, n, n) - evaluate_at(anti, a, n), den);
    out.push_back(std::move(dual));
  }
  return out;
}

}  // namespace kzres
