#pragma once

// Shared generators and hand-written oracles for the test binaries.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "kzres/exactalg.hpp"
#include "kzres/factored.hpp"
#include "kzres/kzsolve.hpp"
#include "kzres/shapes.hpp"

namespace kztest {

using namespace kzres;

/// Seed for every randomized test. Fixed so failures reproduce.
inline constexpr std::uint64_t kSeed = 20240611;

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline SparsePolynomial z(int n, int i) { return SparsePolynomial::variable(n, i); }
inline SparsePolynomial zd(int n, int i, int j) { return SparsePolynomial::difference(n, i, j); }
inline SparsePolynomial cst(int n, const Coefficient& c) { return SparsePolynomial::constant(n, c); }

/// Random polynomial with small rational coefficients.
inline SparsePolynomial random_polynomial(Rng& rng, int nvars, int terms, int max_exp, int coef = 9,
                                          bool integral = false) {
  std::vector<SparsePolynomial::Term> out;
  for (int k = 0; k < terms; ++k) {
    Monomial mono;
    for (int v = 0; v < nvars; ++v) mono.exp[v] = static_cast<std::uint16_t>(uniform(rng, 0, max_exp));
    Coefficient c(uniform(rng, -coef, coef), integral ? 1 : uniform(rng, 1, 4));
    c.canonicalize();
    out.emplace_back(mono, c);
  }
  return SparsePolynomial(nvars, std::move(out));
}

inline SparsePolynomial random_nonzero(Rng& rng, int nvars, int terms, int max_exp) {
  while (true) {
    auto p = random_polynomial(rng, nvars, terms, max_exp);
    if (!p.is_zero()) return p;
  }
}

/// Schoolbook product over an ordered map, independent of the library
/// multiplication kernels.
inline SparsePolynomial naive_product(const SparsePolynomial& a, const SparsePolynomial& b) {
  std::map<Monomial, Coefficient> acc;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Monomial mono;
      for (int v = 0; v < kMaxVars; ++v) mono.exp[v] = static_cast<std::uint16_t>(ma.exp[v] + mb.exp[v]);
      acc[mono] += ca * cb;
    }
  std::vector<SparsePolynomial::Term> terms(acc.begin(), acc.end());
  return SparsePolynomial(std::max(a.nvars(), b.nvars()), std::move(terms));
}

/// Single factored term c * prod (a - b)^e.
struct Diff {
  Atom a;
  Atom b;
  int e;
};
inline FactoredSum term(std::initializer_list<Diff> diffs, const Coefficient& c = 1) {
  FactoredTerm t;
  t.coeff = c;
  for (const auto& d : diffs) t.multiply_difference(d.a, d.b, d.e);
  return FactoredSum(std::move(t));
}
inline constexpr Atom Z1 = fixed_atom(1);
inline constexpr Atom Z2 = fixed_atom(2);
inline constexpr Atom Z3 = fixed_atom(3);
inline constexpr Atom Z4 = fixed_atom(4);
inline constexpr Atom T1 = kMaxVars;
inline constexpr Atom T2 = kMaxVars + 1;

/// Generalized binomial C(e, k), written out independently of the library.
inline Coefficient gbinom(long e, long k) {
  Coefficient r = 1;
  for (long i = 0; i < k; ++i) r = r * Coefficient(e - i) / Coefficient(i + 1);
  return r;
}

inline Coefficient factorial(long n) {
  Coefficient r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

/// d_{m,k} = -(1/m) C(-m,k) C(-m,m-k).
inline Coefficient d_coef(int m, int k) { return -gbinom(-m, k) * gbinom(-m, m - k) / Coefficient(m); }

/// d'_{m,k} = C(m,k) (m-1)! (m+k-1)! / (2m+k)!.
inline Coefficient dprime_coef(int m, int k) {
  return gbinom(m, k) * factorial(m - 1) * factorial(m + k - 1) / factorial(2 * m + k);
}

/// The (2,1) tabloid whose second row is {k}; its basis vector is eps_k.
inline Tabloid row2(int k) {
  std::vector<int> top;
  for (int i = 1; i <= 3; ++i)
    if (i != k) top.push_back(i);
  return make_tabloid({top, {k}});
}

/// v_T = eps_3 - eps_1 and v_S = eps_2 - eps_1 for T = (1,2/3), S = (1,3/2).
inline std::vector<int> v_T() { return {-1, 0, 1}; }
inline std::vector<int> v_S() { return {-1, 1, 0}; }

inline SparsePolynomial zpow(int n, int i, int j, int e) { return SparsePolynomial::difference_power(n, i, j, e); }

/// Displayed N = 3 solutions in eps coordinates.
///   psi_1 = z23^{2m} sum_k d_{m,k} ((m-k) v_T + k v_S) z12^{m-k} z13^k
///   psi_2 = z13^{2m} sum_k (-1)^{m-k} d_{m,k} ((m-k) v_T - m v_S) z12^{m-k} z23^k
inline std::vector<SparsePolynomial> displayed_psi(int m, int which) {
  std::vector<SparsePolynomial> eps(3, SparsePolynomial(3));
  const auto vt = v_T();
  const auto vs = v_S();
  for (int k = 0; k <= m; ++k) {
    const Coefficient d = d_coef(m, k);
    if (which == 1) {
      const auto mono = zpow(3, 2, 3, 2 * m) * zpow(3, 1, 2, m - k) * zpow(3, 1, 3, k);
      for (int e = 0; e < 3; ++e) eps[e] += mono * (d * Coefficient((m - k) * vt[e] + k * vs[e]));
    } else {
      const Coefficient sign = (m - k) % 2 == 0 ? 1 : -1;
      const auto mono = zpow(3, 1, 3, 2 * m) * zpow(3, 1, 2, m - k) * zpow(3, 2, 3, k);
      for (int e = 0; e < 3; ++e) eps[e] += mono * (sign * d * Coefficient((m - k) * vt[e] - m * vs[e]));
    }
  }
  return eps;
}

/// Displayed N = 3 dual solutions, as numerators over a common denominator
/// z12^{2m} z13^{2m} z23^{2m}.
///   phi_1 = z23^{-2m} sum_k (-1)^{m+k} d'_{m,k} ((-m-k) v_T + k v_S) z12^{-m-k} z13^k
///   phi_2 = z13^{-2m} sum_k d'_{m,k} ((-m-k) v_T + m v_S) z12^{-m-k} z23^k
struct EpsFraction {
  std::vector<SparsePolynomial> num;
  SparsePolynomial den;
};
inline EpsFraction displayed_phi(int m, int which) {
  EpsFraction out{std::vector<SparsePolynomial>(3, SparsePolynomial(3)),
                  zpow(3, 1, 2, 2 * m) * zpow(3, 1, 3, 2 * m) * zpow(3, 2, 3, 2 * m)};
  const auto vt = v_T();
  const auto vs = v_S();
  for (int k = 0; k <= m; ++k) {
    const Coefficient d = dprime_coef(m, k);
    // z12^{-m-k} times the prefactor, over the common denominator.
    if (which == 1) {
      const Coefficient sign = (m + k) % 2 == 0 ? 1 : -1;
      const auto mono = zpow(3, 1, 2, m - k) * zpow(3, 1, 3, 2 * m + k);
      for (int e = 0; e < 3; ++e) out.num[e] += mono * (sign * d * Coefficient((-m - k) * vt[e] + k * vs[e]));
    } else {
      const auto mono = zpow(3, 1, 2, m - k) * zpow(3, 2, 3, 2 * m + k);
      for (int e = 0; e < 3; ++e) out.num[e] += mono * (d * Coefficient((-m - k) * vt[e] + m * vs[e]));
    }
  }
  return out;
}

/// Tabloid table of a (2,1) eps vector.
inline SolutionTable table21(int m, const std::vector<SparsePolynomial>& eps) {
  SolutionTable t{Partition({2, 1}), m, Tabloid{}, {}};
  for (int k = 1; k <= 3; ++k) t.components.emplace(row2(k), eps[k - 1]);
  return t;
}

using cplx = std::complex<double>;

inline cplx evaluate_complex(const SparsePolynomial& p, const std::vector<cplx>& point) {
  cplx sum = 0;
  for (const auto& [mono, c] : p.terms()) {
    cplx t = c.get_d();
    for (int v = 0; v < p.nvars(); ++v)
      for (int e = 0; e < mono.exp[v]; ++e) t *= point[v];
    sum += t;
  }
  return sum;
}

/// Direct numerical integration of the torus cycle: sum over g in the level
/// group of sign(g) times the integral over g_*(Gamma_T) of
/// (2 pi i)^{-d} Phi^m phi_F dt, with dt wedged in (level, reading) order.
/// Every circle integral uses the trapezoidal rule with `k` nodes, which is
/// spectrally accurate for these analytic periodic integrands.
inline cplx torus_integral(const Numbering& cycle, const Numbering& form, int m, const std::vector<cplx>& zs,
                           double eps = 0.1, int k = 64) {
  const Partition& shape = cycle.shape();
  struct Var {
    Box box;
    int level;
  };
  std::vector<Var> vars;
  int levels = shape.rows() - 1;
  for (int s = 1; s <= levels; ++s)
    for (const Box& b : boxes(shape))
      if (b.row > s) vars.push_back({b, s});
  const int d = static_cast<int>(vars.size());
  auto index_of = [&](const Box& b, int s) {
    for (int p = 0; p < d; ++p)
      if (vars[p].box.row == b.row && vars[p].box.col == b.col && vars[p].level == s) return p;
    return -1;
  };
  const int n = shape.size();
  auto integrand = [&](const std::vector<cplx>& t) {
    cplx f = 1;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) f *= std::pow(zs[i] - zs[j], 2 * m);
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q) {
        if (p < q && vars[p].level == vars[q].level) f *= std::pow(t[p] - t[q], 2 * m);
        if (vars[p].level == vars[q].level + 1) f *= std::pow(t[p] - t[q], -m);
      }
    for (int p = 0; p < d; ++p)
      if (vars[p].level == 1)
        for (int i = 0; i < n; ++i) f *= std::pow(t[p] - zs[i], -m);
    for (int p = 0; p < d; ++p) {
      const Var& v = vars[p];
      const int up = index_of(v.box, v.level + 1);
      if (up >= 0) f /= t[up] - t[p];
      if (v.level == 1) f /= t[p] - zs[form.label(v.box) - 1];
    }
    return f;
  };

  // Level-preserving permutations of the positions.
  std::vector<std::vector<int>> group;
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> ranges;
  for (int p = 0; p < d;) {
    int q = p;
    while (q < d && vars[q].level == vars[p].level) ++q;
    ranges.emplace_back(p, q);
    p = q;
  }
  while (true) {
    group.push_back(perm);
    std::size_t r = 0;
    while (r < ranges.size() &&
           !std::next_permutation(perm.begin() + ranges[r].first, perm.begin() + ranges[r].second))
      ++r;
    if (r == ranges.size()) break;
  }

  const double pi = std::acos(-1.0);
  cplx total = 0;
  for (const auto& g : group) {
    int sign = 1;
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b)
        if (g[a] > g[b]) sign = -sign;
    // Variable g[p] runs on the circle of position p. Reordering the wedge
    // of the dt_{g[p]} into ascending order contributes sign(g).
    cplx sum = 0;
    std::vector<int> idx(d, 0);
    std::vector<cplx> t(d);
    while (true) {
      cplx jac = 1;
      for (int p = 0; p < d; ++p) {
        const cplx centre = zs[cycle.label(vars[p].box) - 1];
        const cplx w = std::polar(eps * vars[p].level, 2 * pi * idx[p] / k);
        t[g[p]] = centre + w;
        jac *= w / static_cast<double>(k);  // dt / (2 pi i) = w dtheta / (2 pi)
      }
      sum += integrand(t) * jac;
      int p = 0;
      while (p < d && ++idx[p] == k) idx[p++] = 0;
      if (p == d) break;
    }
    const int skew_weight = sign;
    const int orientation = sign;
    total += static_cast<double>(skew_weight * orientation) * sum;
  }
  return total;
}

}  // namespace kztest
