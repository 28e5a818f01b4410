#include "kzres/verify.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace kzres {

namespace {

CheckReport report(std::string name, std::vector<int> lambda, int m) {
  CheckReport r;
  r.check = std::move(name);
  r.lambda = std::move(lambda);
  r.m = m;
  return r;
}

CheckReport report(std::string name, const Partition& shape, int m) { return report(std::move(name), shape.parts(), m); }

void fail(CheckReport& r, const std::string& witness, std::optional<SparsePolynomial> residual = std::nullopt) {
  if (!r.pass) return;
  r.pass = false;
  r.witness = witness;
  r.residual = std::move(residual);
}

// Folds per-item reports into one; the first failure wins.
CheckReport merge(CheckReport into, const CheckReport& part, const std::string& context) {
  if (into.pass && !part.pass) {
    into.pass = false;
    into.witness = context.empty() ? part.witness : context + ": " + part.witness;
    into.residual = part.residual;
  }
  if (!part.detail.empty()) into.detail += (into.detail.empty() ? "" : "; ") + part.detail;
  return into;
}

SparsePolynomial product_of_differences(int n, int i, int skip) {
  SparsePolynomial q = SparsePolynomial::constant(n, 1);
  for (int j = 1; j <= n; ++j)
    if (j != i && j != skip) q = q * SparsePolynomial::difference(n, i, j);
  return q;
}

// Divides the denominator and every numerator by each point difference
// that divides all of them. The represented fractions do not change.
void cancel_common_differences(std::vector<SparsePolynomial>& nums, SparsePolynomial& den) {
  const int n = den.nvars();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<int> collapse(n);
      std::iota(collapse.begin(), collapse.end(), 1);
      collapse[i - 1] = j;
      auto vanishes = [&](const SparsePolynomial& p) { return p.substitute(collapse).is_zero(); };
      while (!den.is_constant() && vanishes(den) && std::all_of(nums.begin(), nums.end(), vanishes)) {
        den = exact_divide_difference(den, i, j, 1);
        for (auto& p : nums) p = exact_divide_difference(p, i, j, 1);
      }
    }
}

struct TabloidVector {
  std::vector<Tabloid> keys;
  std::map<Tabloid, std::size_t> index;
  std::vector<SparsePolynomial> values;
};

TabloidVector flatten(const std::map<Tabloid, SparsePolynomial>& components) {
  TabloidVector out;
  for (const auto& [u, p] : components) {
    out.index.emplace(u, out.keys.size());
    out.keys.push_back(u);
    out.values.push_back(p);
  }
  return out;
}

TranspositionAction tabloid_action(const TabloidVector& v, bool twisted) {
  return [&v, twisted](int i, int j, const std::vector<SparsePolynomial>& x) {
    std::vector<SparsePolynomial> y;
    y.reserve(x.size());
    for (const auto& u : v.keys) {
      const auto it = v.index.find(act_transposition(u, i, j));
      if (it == v.index.end()) throw std::invalid_argument("table misses tabloid " + u.to_string());
      y.push_back(twisted ? -x[it->second] : x[it->second]);
    }
    return y;
  };
}

TranspositionAction permutation_action() {
  return [](int i, int j, const std::vector<SparsePolynomial>& x) {
    auto y = x;
    std::swap(y[i - 1], y[j - 1]);
    return y;
  };
}

std::function<std::string(std::size_t)> tabloid_labels(const TabloidVector& v) {
  return [&v](std::size_t k) { return "component " + v.keys[k].to_string(); };
}

std::function<std::string(std::size_t)> index_labels(const std::string& prefix) {
  return [prefix](std::size_t k) { return prefix + std::to_string(k + 1); };
}

std::string describe_tabloid(const Tabloid& u) { return "cycle " + u.to_string(); }

}  // namespace

CheckReport check_kz_vector(const std::string& name, const std::vector<SparsePolynomial>& x, int nvars,
                            int parameter, const TranspositionAction& act,
                            const std::function<std::string(std::size_t)>& label) {
  CheckReport r = report(name, std::vector<int>{}, parameter);
  for (int i = 1; i <= nvars; ++i) {
    std::vector<SparsePolynomial> rhs(x.size(), SparsePolynomial(nvars));
    for (int j = 1; j <= nvars; ++j) {
      if (j == i) continue;
      const auto sx = act(i, j, x);
      for (std::size_t k = 0; k < x.size(); ++k) {
        try {
          rhs[k] += exact_divide_difference(sx[k] + x[k], i, j, 1);
        } catch (const NotDivisibleError& e) {
          fail(r, "i=" + std::to_string(i) + " j=" + std::to_string(j) + " " + label(k) +
                      ": (s_ij+1) image not divisible by z" + std::to_string(i) + std::to_string(j),
               e.remainder());
          return r;
        }
      }
    }
    for (std::size_t k = 0; k < x.size(); ++k) {
      SparsePolynomial residual = x[k].partial_derivative(i) - rhs[k] * Coefficient(parameter);
      if (!residual.is_zero()) {
        fail(r, "i=" + std::to_string(i) + " " + label(k) + ": derivative mismatch", residual);
        return r;
      }
    }
  }
  return r;
}

CheckReport check_kz_vector(const std::string& name, const std::vector<SparsePolynomial>& input_numerators,
                            const SparsePolynomial& input_denominator, int parameter, const TranspositionAction& act,
                            const std::function<std::string(std::size_t)>& label) {
  const int n = input_denominator.nvars();
  CheckReport r = report(name, std::vector<int>{}, parameter);
  std::vector<SparsePolynomial> reduced_nums = input_numerators;
  SparsePolynomial reduced_den = input_denominator;
  cancel_common_differences(reduced_nums, reduced_den);
  const std::vector<SparsePolynomial>& numerators = reduced_nums;
  const SparsePolynomial& denominator = reduced_den;
  for (int i = 1; i <= n; ++i) {
    const SparsePolynomial q = product_of_differences(n, i, 0);
    const SparsePolynomial d_den = denominator.partial_derivative(i);
    std::vector<SparsePolynomial> sum(numerators.size(), SparsePolynomial(n));
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      const SparsePolynomial qj = product_of_differences(n, i, j);
      const auto sx = act(i, j, numerators);
      for (std::size_t k = 0; k < numerators.size(); ++k) sum[k] += qj * (sx[k] + numerators[k]);
    }
    for (std::size_t k = 0; k < numerators.size(); ++k) {
      const SparsePolynomial lhs =
          q * (denominator * numerators[k].partial_derivative(i) - numerators[k] * d_den);
      const SparsePolynomial residual = lhs - denominator * sum[k] * Coefficient(parameter);
      if (!residual.is_zero()) {
        fail(r, "i=" + std::to_string(i) + " " + label(k) + ": cross-multiplied identity fails", residual);
        return r;
      }
    }
  }
  return r;
}

CheckReport check_kz(const SolutionTable& table) {
  const TabloidVector v = flatten(table.components);
  CheckReport r = check_kz_vector("kz", v.values, table.shape.size(), table.m, tabloid_action(v, false),
                                  tabloid_labels(v));
  r.lambda = table.shape.parts();
  return r;
}

CheckReport check_kz(const RationalTable& table) {
  const TabloidVector v = flatten(table.numerators);
  CheckReport r = check_kz_vector(table.twisted ? "kz-twisted" : "kz-rational", v.values, table.denominator,
                                  table.parameter, tabloid_action(v, table.twisted), tabloid_labels(v));
  r.lambda = table.shape.parts();
  return r;
}

CheckReport check_primitive(const SolutionTable& table) {
  CheckReport r = report("primitive", table.shape, table.m);
  for (int s = 1; s < table.shape.rows(); ++s) {
    std::map<Tabloid, SparsePolynomial> image;
    for (const auto& [u, p] : table.components) {
      for (const auto& target : raise_row(u, s)) {
        auto [it, inserted] = image.try_emplace(target, p);
        if (!inserted) it->second += p;
      }
    }
    for (const auto& [target, p] : image) {
      if (!p.is_zero()) {
        fail(r, "level " + std::to_string(s) + " target " + target.to_string(), p);
        return r;
      }
    }
  }
  return r;
}

CheckReport check_shape(const SolutionTable& table) {
  CheckReport r = report("shape", table.shape, table.m);
  const auto degree = diagram_stats(table.shape, table.m).solution_degree;
  bool all_zero = true;
  for (const auto& [u, p] : table.components) {
    if (!p.is_zero()) all_zero = false;
    if (!p.is_homogeneous_of_degree(static_cast<int>(degree))) {
      fail(r, "component " + u.to_string() + " is not homogeneous of degree " + std::to_string(degree), p);
    } else if (!p.has_integer_coefficients()) {
      fail(r, "component " + u.to_string() + " has a non-integer coefficient", p);
    }
  }
  if (all_zero) fail(r, "every component vanishes");
  return r;
}

CheckReport check_shape(const FundamentalMatrix& f) {
  CheckReport r = report("shape", f.shape, f.m);
  for (const auto& s : f.solutions) r = merge(r, check_shape(s), describe_tabloid(s.cycle));
  const auto degree = static_cast<int>(diagram_stats(f.shape, f.m).solution_degree);
  for (std::size_t a = 0; a < f.matrix.rows(); ++a)
    for (std::size_t b = 0; b < f.matrix.cols(); ++b) {
      const auto& p = f.matrix.at(a, b);
      if (!p.is_homogeneous_of_degree(degree) || !p.has_integer_coefficients())
        fail(r, "matrix entry (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")", p);
    }

  const Numbering t = identity_numbering(f.shape);
  if (f.tableaux.empty() || !(f.tableaux.front() == t)) {
    fail(r, "first tableau is not the identity tableau");
    return r;
  }
  const SparsePolynomial& diag = f.solutions.front().components.at(tabloid_of(t));
  if (diag.is_zero()) {
    fail(r, "identity diagonal integral vanishes");
    return r;
  }
  const auto& [mono, coeff] = diag.leading_term();
  std::ostringstream lead;
  lead << "leading term " << coeff.get_str() << " * z^(";
  for (int k = 0; k < f.shape.size(); ++k) lead << (k ? "," : "") << mono.exp[k];
  lead << ")";
  r.detail = lead.str();
  if (coeff.get_den() != 1) fail(r, "leading coefficient not an integer");
  for (const Box& b : boxes(f.shape)) {
    const int label = t.label(b);
    const int expected = f.m * (label - 1 + b.col - b.row);
    if (mono.exp[label - 1] != expected) {
      fail(r, "exponent of z" + std::to_string(label) + " in the leading monomial is " +
                  std::to_string(mono.exp[label - 1]) + ", expected " + std::to_string(expected));
    }
  }
  return r;
}

CheckReport check_rank(const FundamentalMatrix& f) {
  CheckReport r = report("rank", f.shape, f.m);
  const std::size_t have = rank(f.matrix);
  const std::size_t want = static_cast<std::size_t>(hook_length_dimension(f.shape));
  r.detail = "rank " + std::to_string(have);
  if (have != want) fail(r, "rank " + std::to_string(have) + " differs from dimension " + std::to_string(want));
  return r;
}

CheckReport check_equivariance(const FundamentalMatrix& f, int i, int j, const SolveOptions& options) {
  CheckReport r = report("equivariance", f.shape, f.m);
  const int n = f.shape.size();
  std::vector<int> swap(n);
  std::iota(swap.begin(), swap.end(), 1);
  std::swap(swap[i - 1], swap[j - 1]);
  const std::string g = "(" + std::to_string(i) + " " + std::to_string(j) + ")";
  for (const auto& s : f.solutions) {
    const Tabloid moved = act_transposition(s.cycle, i, j);
    const SolutionTable* image = nullptr;
    SolutionTable fresh;
    for (const auto& other : f.solutions)
      if (other.cycle == moved) image = &other;
    if (image == nullptr) {
      fresh = solve_cycle(f.shape, f.m, moved, options);
      image = &fresh;
    }
    for (const auto& [u, p] : s.components) {
      const Tabloid gu = act_transposition(u, i, j);
      const auto it = image->components.find(gu);
      if (it == image->components.end()) {
        fail(r, "g=" + g + " " + describe_tabloid(s.cycle) + ": missing form " + gu.to_string());
        return r;
      }
      SparsePolynomial residual = p.substitute(swap) - it->second;
      if (!residual.is_zero()) {
        fail(r, "g=" + g + " " + describe_tabloid(s.cycle) + " form " + u.to_string(), residual);
        return r;
      }
    }
  }
  return r;
}

std::vector<Coefficient> straightening_coordinates(const Partition& shape, const Tabloid& u) {
  const auto tableaux = standard_tableaux(shape);
  const std::size_t d = tableaux.size();
  // pairing[S][U] = <e_U, v_S>, the coefficient of U in v_S.
  std::vector<std::map<Tabloid, int>> pairing(d);
  for (std::size_t s = 0; s < d; ++s)
    for (const auto& [sign, w] : column_expansion(tableaux[s])) pairing[s][w] += sign;
  auto value = [&](std::size_t s, const Tabloid& w) {
    const auto it = pairing[s].find(w);
    return it == pairing[s].end() ? 0 : it->second;
  };
  RationalMatrix a(d, d);
  for (std::size_t t = 0; t < d; ++t)
    for (std::size_t s = 0; s < d; ++s) a.at(t, s) = value(s, tabloid_of(tableaux[t]));
  const RationalMatrix inv = a.inverse();
  std::vector<Coefficient> c(d, Coefficient(0));
  for (std::size_t t = 0; t < d; ++t)
    for (std::size_t s = 0; s < d; ++s) c[t] += value(s, u) * inv.at(s, t);
  return c;
}

CheckReport check_straightening(const FundamentalMatrix& f, const SolveOptions& options) {
  CheckReport r = report("straightening", f.shape, f.m);
  const int n = f.shape.size();
  for (const auto& u : tabloids(f.shape.parts())) {
    const auto c = straightening_coordinates(f.shape, u);
    std::size_t self = f.solutions.size();
    for (std::size_t t = 0; t < f.solutions.size(); ++t)
      if (f.solutions[t].cycle == u) self = t;
    if (self < f.solutions.size()) {
      for (std::size_t t = 0; t < c.size(); ++t)
        if (c[t] != (t == self ? 1 : 0)) fail(r, "standard " + describe_tabloid(u) + " has non-unit coordinates");
      continue;
    }
    const SolutionTable direct = solve_cycle(f.shape, f.m, u, options);
    for (const auto& [w, p] : direct.components) {
      SparsePolynomial combo(n);
      for (std::size_t t = 0; t < c.size(); ++t)
        if (c[t] != 0) combo += f.solutions[t].components.at(w) * c[t];
      SparsePolynomial residual = p - combo;
      if (!residual.is_zero()) {
        fail(r, describe_tabloid(u) + " form " + w.to_string(), residual);
        return r;
      }
    }
  }
  return r;
}

CheckReport check_det(const FundamentalMatrix& f) {
  CheckReport r = report("det", f.shape, f.m);
  const auto stats = diagram_stats(f.shape, f.m);
  const int e = static_cast<int>(2 * f.m * stats.d_plus);
  const SparsePolynomial det = determinant(f.matrix);
  const auto [quot, rem] = divide(det, vandermonde_power(f.shape.size(), e));
  if (!rem.is_zero()) {
    fail(r, "determinant not divisible by the Vandermonde power " + std::to_string(e), rem);
  } else if (!quot.is_constant() || quot.is_zero()) {
    fail(r, "determinant is not a non-zero constant times the Vandermonde power " + std::to_string(e), quot);
  } else {
    r.detail = "C = " + quot.constant_term().get_str() + ", exponent " + std::to_string(e);
  }
  return r;
}

CheckReport check_dual(const FundamentalMatrix& f) {
  CheckReport r = report("dual", f.shape, f.m);
  const int n = f.shape.size();
  DualMatrix dual;
  try {
    dual = dual_matrix(f);
  } catch (const std::logic_error& e) {
    fail(r, e.what());
    return r;
  }
  const PolyMatrix product = dual.numerators.transpose() * f.matrix;
  for (std::size_t a = 0; a < product.rows(); ++a)
    for (std::size_t b = 0; b < product.cols(); ++b) {
      SparsePolynomial residual = product.at(a, b) - (a == b ? dual.det : SparsePolynomial(n));
      if (!residual.is_zero()) {
        fail(r, "dual transpose times fundamental differs from the identity at (" + std::to_string(a + 1) + "," +
                    std::to_string(b + 1) + ")",
             residual);
        return r;
      }
    }

  const SpechtModule module(f.shape);
  std::map<std::pair<int, int>, RationalMatrix> actions;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) actions.emplace(std::make_pair(i, j), module.transposition_matrix(i, j));
  // The dual module carries the contragredient action, S^T in the dual basis.
  TranspositionAction act = [&actions, n](int i, int j, const std::vector<SparsePolynomial>& x) {
    const RationalMatrix& s = actions.at({std::min(i, j), std::max(i, j)});
    std::vector<SparsePolynomial> y(x.size(), SparsePolynomial(n));
    for (std::size_t t = 0; t < x.size(); ++t)
      for (std::size_t q = 0; q < x.size(); ++q)
        if (s.at(q, t) != 0) y[t] += x[q] * s.at(q, t);
    return y;
  };
  for (std::size_t beta = 0; beta < dual.numerators.rows(); ++beta) {
    std::vector<SparsePolynomial> row;
    for (std::size_t c = 0; c < dual.numerators.cols(); ++c) row.push_back(dual.numerators.at(beta, c));
    r = merge(r, check_kz_vector("dual", row, dual.det, -f.m, act, index_labels("dual coordinate ")),
              "dual row " + std::to_string(beta + 1));
  }
  return r;
}

CheckReport check_twist(const FundamentalMatrix& f) {
  CheckReport r = report("twist", f.shape, f.m);
  for (const auto& s : f.solutions) r = merge(r, check_kz(alt_twist(s)), describe_tabloid(s.cycle));
  return r;
}

CheckReport check_frobenius(const Partition& shape) {
  CheckReport r = report("frobenius", shape, 0);
  const int n = shape.size();
  if (n > 6) throw std::invalid_argument("check_frobenius supports N <= 6");
  const int f2 = content_sum(shape);
  r.detail = "f2 = " + std::to_string(f2);
  for (const auto& t : standard_tableaux(shape)) {
    std::map<Tabloid, int> v;
    for (const auto& [sign, u] : column_expansion(t)) v[u] += sign;
    std::map<Tabloid, int> w;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (const auto& [u, c] : v) w[act_transposition(u, i, j)] += c;
    for (const auto& [u, c] : v) w[u] -= f2 * c;
    for (const auto& [u, c] : w) {
      if (c != 0) {
        fail(r, "tableau " + t.to_string() + ": central element differs from " + std::to_string(f2) +
                    " at tabloid " + u.to_string());
        return r;
      }
    }
  }
  return r;
}

CheckReport check_reflection(int n, int m) {
  CheckReport r = report("reflection", Partition({n - 1, 1}), m);
  const auto psi = reflection_psi(n, m);
  std::vector<SparsePolynomial> total(n, SparsePolynomial(n));
  for (const auto& s : psi) {
    SparsePolynomial component_sum(n);
    for (int b = 0; b < n; ++b) {
      total[b] += s.components[b];
      component_sum += s.components[b];
    }
    if (!component_sum.is_zero()) fail(r, "psi_" + std::to_string(s.index) + " has non-zero component sum", component_sum);
    r = merge(r, check_kz_vector("kz", s.components, n, m, permutation_action(), index_labels("eps_")),
              "psi_" + std::to_string(s.index));
  }
  for (int b = 0; b < n; ++b)
    if (!total[b].is_zero()) fail(r, "sum of psi_a has non-zero eps_" + std::to_string(b + 1) + " component", total[b]);
  for (const auto& p : reflection_phi(n, m)) {
    std::vector<SparsePolynomial> nums;
    for (const auto& c : p.components) nums.push_back(c.numerator());
    r = merge(r,
              check_kz_vector("kz", nums, p.components.front().denominator(), -m, permutation_action(),
                              index_labels("eps_")),
              "phi_" + std::to_string(p.index));
  }
  return r;
}

CheckReport check_pairing(int n, int m) {
  CheckReport r = report("pairing", Partition({n - 1, 1}), m);
  const auto psi = reflection_psi(n, m);
  const auto phi = reflection_phi(n, m);
  for (int a = 0; a + 1 < n; ++a)
    for (int b = 0; b + 1 < n; ++b) {
      const SparsePolynomial& den = phi[b].components.front().denominator();
      SparsePolynomial num(n);
      for (int k = 0; k < n; ++k) num += psi[a].components[k] * phi[b].components[k].numerator();
      const Coefficient expected = a == b ? Coefficient(1, m) : Coefficient(0);
      SparsePolynomial residual = num - den * expected;
      if (!residual.is_zero()) {
        fail(r, "<psi_" + std::to_string(a + 1) + ", phi_" + std::to_string(b + 1) + "> differs from " +
                    expected.get_str(),
             residual);
        return r;
      }
    }
  r.detail = "pairing = identity / " + std::to_string(m);
  return r;
}

std::vector<CheckReport> verify_suite(const Partition& shape, int m, const SolveOptions& options) {
  const FundamentalMatrix f = fundamental_solution(shape, m, options);
  const int n = shape.size();
  std::vector<CheckReport> out;

  CheckReport kz = report("kz", shape, m);
  CheckReport primitive = report("primitive", shape, m);
  for (const auto& s : f.solutions) {
    kz = merge(kz, check_kz(s), describe_tabloid(s.cycle));
    primitive = merge(primitive, check_primitive(s), describe_tabloid(s.cycle));
  }
  out.push_back(kz);
  out.push_back(primitive);
  out.push_back(check_shape(f));
  out.push_back(check_rank(f));
  CheckReport equivariance = report("equivariance", shape, m);
  for (int i = 1; i < n; ++i) equivariance = merge(equivariance, check_equivariance(f, i, i + 1, options), "");
  out.push_back(equivariance);
  out.push_back(check_straightening(f, options));
  out.push_back(check_det(f));
  out.push_back(check_dual(f));
  out.push_back(check_twist(f));
  if (n <= 6) {
    out.push_back(check_frobenius(shape));
    out.back().m = m;
  }
  if (n >= 2 && shape == Partition({n - 1, 1})) {
    CheckReport refl = check_reflection(n, m);
    refl.lambda = shape.parts();
    out.push_back(refl);
    out.push_back(check_pairing(n, m));
  }
  return out;
}

}  // namespace kzres
