// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every comparison is exact.

#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

#include "kzres/verify.hpp"
#include "support.hpp"

using namespace kzres;
using namespace kztest;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

void expect_pass(const CheckReport& r, const std::string& where) {
  if (!r.pass) throw Failure(where + ": " + r.check + " failed at " + r.witness);
}

std::string name(const Partition& shape, int m) { return shape.to_string() + " m=" + std::to_string(m); }

// Rank over Q of tabloid tables, flattened to (tabloid, monomial) columns.
std::size_t span_rank(const std::vector<std::map<Tabloid, SparsePolynomial>>& rows) {
  std::map<std::pair<Tabloid, Monomial>, std::size_t> column;
  for (const auto& row : rows)
    for (const auto& [u, p] : row)
      for (const auto& [mono, c] : p.terms()) column.emplace(std::make_pair(u, mono), column.size());
  RationalMatrix m(rows.size(), column.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [u, p] : rows[r])
      for (const auto& [mono, c] : p.terms()) m.at(r, column.at({u, mono})) = c;
  return m.rank();
}

std::map<Tabloid, SparsePolynomial> negate_sum(const std::map<Tabloid, SparsePolynomial>& a,
                                               const std::map<Tabloid, SparsePolynomial>& b) {
  std::map<Tabloid, SparsePolynomial> out;
  for (const auto& [u, p] : a) out.emplace(u, -(p + b.at(u)));
  return out;
}

std::vector<Partition> criterion3_shapes(int m) {
  std::vector<Partition> out;
  if (m == 1) {
    for (int n = 1; n <= 4; ++n)
      for (const auto& p : enumerate_partitions(n)) out.push_back(p);
  } else {
    for (const auto& parts : {std::vector<int>{2, 1}, {3, 1}, {2, 2}, {2, 1, 1}}) out.emplace_back(parts);
  }
  return out;
}

// 1. (2,1), m=1 matrix and the displayed N=3 solutions.
std::string criterion1() {
  const int n = 3;
  const auto f = fundamental_solution(Partition({2, 1}), 1);
  const auto z12 = zd(n, 1, 2);
  const auto z13 = zd(n, 1, 3);
  const auto z23 = zd(n, 2, 3);
  expect(f.matrix.at(0, 0) == z12.pow(2) * (z13 + z23), "entry (1,1)");
  expect(f.matrix.at(0, 1) == -(z12.pow(2) * z13), "entry (1,2)");
  expect(f.matrix.at(1, 0) == -(z12 * z13.pow(2)), "entry (2,1)");
  expect(f.matrix.at(1, 1) == z13.pow(2) * (z12 - z23), "entry (2,2)");
  expect(d_coef(1, 0) == 1 && d_coef(1, 1) == 1, "d_{1,k}");
  const auto psi1 = table21(1, displayed_psi(1, 1)).components;
  const auto psi2 = table21(1, displayed_psi(1, 2)).components;
  expect(f.solutions[1].cycle == row2(2) && f.solutions[1].components == psi2, "row 2 equals psi_2");
  expect(f.solutions[0].cycle == row2(3) && f.solutions[0].components == negate_sum(psi1, psi2),
         "row 1 equals -(psi_1 + psi_2)");
  return "matrix exact; row2 = psi_2; row1 = -(psi_1 + psi_2)";
}

// 2. (2,1), m=2 span equality with the displayed solutions.
std::string criterion2() {
  expect(d_coef(2, 0) == Coefficient(-3, 2) && d_coef(2, 1) == -2 && d_coef(2, 2) == Coefficient(-3, 2),
         "d_{2,k} = (-3/2, -2, -3/2)");
  const auto psi1 = table21(2, displayed_psi(2, 1));
  const auto psi2 = table21(2, displayed_psi(2, 2));
  expect_pass(check_kz(psi1), "psi_1");
  expect_pass(check_kz(psi2), "psi_2");
  const auto f = fundamental_solution(Partition({2, 1}), 2);
  expect(span_rank({psi1.components, psi2.components}) == 2, "displayed pair independent");
  expect(span_rank({f.solutions[0].components, f.solutions[1].components}) == 2, "computed pair independent");
  expect(span_rank({psi1.components, psi2.components, f.solutions[0].components, f.solutions[1].components}) == 2,
         "spans differ");
  return "psi_1, psi_2 solve KZ; span rank 2 = joint rank 2";
}

// 3. kz, primitive, shape, equivariance, rank.
std::string criterion3() {
  int cases = 0;
  for (int m = 1; m <= 2; ++m)
    for (const auto& shape : criterion3_shapes(m)) {
      const auto f = fundamental_solution(shape, m);
      const std::string where = name(shape, m);
      for (const auto& s : f.solutions) {
        expect_pass(check_kz(s), where);
        expect_pass(check_primitive(s), where);
      }
      expect_pass(check_shape(f), where);
      for (int i = 1; i < shape.size(); ++i) expect_pass(check_equivariance(f, i, i + 1), where);
      expect(rank(f.matrix) == static_cast<std::size_t>(hook_length_dimension(shape)), where + ": rank");
      ++cases;
    }
  return std::to_string(cases) + " cases";
}

// 4. Leading term of psi_{T,T} for the identity tableau.
std::string criterion4() {
  std::string c21;
  for (int m = 1; m <= 2; ++m)
    for (const auto& shape : criterion3_shapes(m)) {
      const auto f = fundamental_solution(shape, m);
      const auto id = identity_numbering(shape);
      std::size_t t = 0;
      while (!(f.tableaux[t] == id)) ++t;
      const auto& psi = f.solutions[t].components.at(tabloid_of(id));
      expect(!psi.is_zero(), name(shape, m) + ": psi_{T,T} vanishes");
      const auto& [mono, coeff] = psi.leading_term();
      expect(coeff != 0 && coeff.get_den() == 1, name(shape, m) + ": coefficient");
      for (const Box& b : boxes(shape)) {
        const int k = id.label(b);
        expect(mono.exp[k - 1] == m * (k - 1 + b.col - b.row), name(shape, m) + ": exponent of z" + std::to_string(k));
      }
      if (shape == Partition({2, 1}) && m == 1) {
        expect(coeff == -2, "(2,1) m=1 coefficient");
        c21 = coeff.get_str();
      }
    }
  return "all exponents match; (2,1) m=1 coefficient " + c21;
}

// 5. Frobenius for N <= 5.
std::string criterion5() {
  int count = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& shape : enumerate_partitions(n)) {
      expect_pass(check_frobenius(shape), shape.to_string());
      ++count;
    }
  return std::to_string(count) + " partitions";
}

// 6. det = C prod (z_i - z_j)^{2 m d_plus}.
std::string criterion6() {
  std::ostringstream out;
  struct Case {
    std::vector<int> parts;
    int m;
  };
  for (const auto& c : {Case{{2, 1}, 1}, Case{{2, 1}, 2}, Case{{3, 1}, 1}, Case{{2, 2}, 1}}) {
    const Partition shape(c.parts);
    const auto f = fundamental_solution(shape, c.m);
    expect_pass(check_det(f), name(shape, c.m));
    const auto stats = diagram_stats(shape, c.m);
    const auto quotient =
        exact_divide(determinant(f.matrix), vandermonde_power(shape.size(), static_cast<int>(2 * c.m * stats.d_plus)));
    expect(quotient.is_constant() && !quotient.is_zero(), name(shape, c.m) + ": C");
    if (c.parts == std::vector<int>{2, 1} && c.m == 1) expect(quotient.constant_term() == -2, "(2,1) m=1: C = -2");
    out << name(shape, c.m) << " C=" << quotient.constant_term().get_str() << "; ";
  }
  std::string s = out.str();
  return s.substr(0, s.size() - 2);
}

// 7. Duality and the alternating twist.
std::string criterion7() {
  for (const auto& parts : {std::vector<int>{2, 1}, std::vector<int>{3, 1}}) {
    const Partition shape(parts);
    const auto f = fundamental_solution(shape, 1);
    const auto dual = dual_matrix(f);
    auto expected = PolyMatrix::identity(f.matrix.rows(), shape.size());
    for (std::size_t r = 0; r < expected.rows(); ++r) expected.at(r, r) = dual.det;
    expect(dual.numerators.transpose() * f.matrix == expected, name(shape, 1) + ": Phi_{-m}^T Phi_m = I");
    expect_pass(check_dual(f), name(shape, 1));
  }
  for (const auto& parts : {std::vector<int>{3}, std::vector<int>{1, 1}, std::vector<int>{2, 1}}) {
    const Partition shape(parts);
    const auto f = fundamental_solution(shape, 1);
    for (const auto& s : f.solutions) {
      const auto tw = alt_twist(s);
      expect(tw.parameter == -1 && tw.twisted, "twist parameter");
      expect_pass(check_kz(tw), name(shape, 1));
    }
  }
  return "(2,1),(3,1) inverse identity and dual KZ(-1); twists of (3),(1,1),(2,1) pass";
}

// 8. Reflection representation.
std::string criterion8() {
  for (int n = 2; n <= 5; ++n)
    for (int m = 1; m <= 2; ++m) {
      const auto psi = reflection_psi(n, m);
      for (int e = 0; e < n; ++e) {
        SparsePolynomial sum(n);
        for (const auto& p : psi) sum += p.components[e];
        expect(sum.is_zero(), "sum of psi_a, N=" + std::to_string(n));
      }
    }
  for (int n = 2; n <= 4; ++n)
    for (int m = 1; m <= 2; ++m) {
      expect_pass(check_pairing(n, m), "N=" + std::to_string(n) + " m=" + std::to_string(m));
      const auto psi = reflection_psi(n, m);
      const auto phi = reflection_phi(n, m);
      for (int a = 0; a + 1 < n; ++a)
        for (int b = 0; b + 1 < n; ++b) {
          PolyFraction sum{SparsePolynomial(n)};
          for (int e = 0; e < n; ++e) sum = sum + PolyFraction(psi[a].components[e]) * phi[b].components[e];
          const Coefficient want = a == b ? Coefficient(1, m) : Coefficient(0);
          expect(sum.equals(PolyFraction(cst(n, want))), "pairing entry");
        }
    }
  expect(dprime_coef(1, 0) == Coefficient(1, 2) && dprime_coef(1, 1) == Coefficient(1, 6), "d'_{1,k}");
  const auto phi = reflection_phi(3, 1);
  for (int a = 1; a <= 2; ++a) {
    const auto expected = displayed_phi(1, a);
    for (int e = 0; e < 3; ++e)
      expect(phi[a - 1].components[e].equals(PolyFraction(expected.num[e], expected.den)),
             "phi_" + std::to_string(a) + " against d'_{1,k}");
  }
  return "sum psi_a = 0 (N<=5, m<=2); pairing = I/m (N=2..4); N=3 phi_a reproduce d'_{1,0}=1/2, d'_{1,1}=1/6";
}

// 9. Straightening.
std::string criterion9() {
  for (const auto& parts : {std::vector<int>{2, 1}, std::vector<int>{2, 2}}) {
    const Partition shape(parts);
    expect_pass(check_straightening(fundamental_solution(shape, 1)), name(shape, 1));
  }
  const Partition two_one({2, 1});
  const auto u1 = solve_cycle(two_one, 1, row2(1));
  const auto u2 = solve_cycle(two_one, 1, row2(2));
  const auto u3 = solve_cycle(two_one, 1, row2(3));
  expect(u1.components == negate_sum(u2.components, u3.components), "cycle{1} = -cycle{2} - cycle{3}");
  return "(2,1), (2,2) pass; cycle{row2=1} = -cycle{row2=2} - cycle{row2=3}";
}

// 10. Randomized property suite, seed kSeed.
std::string criterion10() {
  Rng rng(kSeed);
  int instances = 0;
  // Residue engine: linearity and integer outputs on univariate forms.
  for (int trial = 0; trial < 60; ++trial, ++instances) {
    FactoredTerm a;
    FactoredTerm b;
    for (int k = 1; k <= 3; ++k) {
      a.multiply_difference(T1, fixed_atom(k), uniform(rng, -3, 1));
      b.multiply_difference(T1, fixed_atom(k), uniform(rng, -3, 1));
    }
    a.coeff = uniform(rng, -5, 5);
    b.coeff = uniform(rng, -5, 5);
    const Atom c = fixed_atom(uniform(rng, 1, 3));
    FactoredSum sum(a);
    sum.add(b);
    FactoredSum separate = residue_at(FactoredSum(a), T1, c);
    separate += residue_at(FactoredSum(b), T1, c);
    const auto clear = term({{Z1, Z2, 10}, {Z1, Z3, 10}, {Z2, Z3, 10}});
    expect(normalize_factored(residue_at(sum, T1, c) * clear, 3) == normalize_factored(separate * clear, 3),
           "residue linearity");
    for (const auto& [factors, coeff] : separate.terms()) expect(coeff.get_den() == 1, "integer residue");
  }
  // Global residue theorem.
  for (int trial = 0; trial < 60; ++trial, ++instances) {
    FactoredTerm t;
    int total = 0;
    for (int k = 1; k <= 4; ++k) {
      const int e = k == 4 ? std::min(-2 - total, uniform(rng, -3, 1)) : uniform(rng, -3, 1);
      total += e;
      t.multiply_difference(T1, fixed_atom(k), e);
    }
    FactoredSum sum;
    for (int k = 1; k <= 4; ++k) sum += residue_at(FactoredSum(t), T1, fixed_atom(k));
    expect(normalize_factored(sum, 4).is_zero(), "global residue theorem");
  }
  // Level-internal order independence.
  for (const auto& parts : {std::vector<int>{2, 2}, std::vector<int>{1, 1, 1}}) {
    const Partition shape(parts);
    const auto master = master_form(shape, 1);
    for (const auto& cycle : standard_tableaux(shape)) {
      const auto plan = residue_plan(cycle, master.roster);
      auto swapped = plan;
      std::swap(swapped[0], swapped[1]);
      const auto phi = tableau_form(cycle, master.roster);
      FactoredSum x;
      FactoredSum y;
      for (const auto& g : level_group(master.roster)) {
        const auto integrand = master.integrand * phi.relabel(relabel_table(master.roster, g));
        x += iterated_residue(integrand, plan);
        y += iterated_residue(integrand, swapped);
      }
      expect(normalize_factored(x, shape.size()) == normalize_factored(y, shape.size()), "level order");
      ++instances;
    }
  }
  // Ring axioms and the adjugate identity.
  for (int trial = 0; trial < 60; ++trial, ++instances) {
    const auto a = random_polynomial(rng, 3, uniform(rng, 0, 4), 3);
    const auto b = random_polynomial(rng, 3, uniform(rng, 0, 4), 3);
    const auto c = random_polynomial(rng, 3, uniform(rng, 0, 4), 3);
    expect((a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c, "ring axioms");
    expect(a * b == naive_product(a, b), "schoolbook product");
  }
  for (int trial = 0; trial < 20; ++trial, ++instances) {
    const std::size_t size = trial % 2 == 0 ? 2 : 3;
    PolyMatrix m(size, size, 3);
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t col = 0; col < size; ++col) m.at(r, col) = random_polynomial(rng, 3, uniform(rng, 0, 3), 2);
    const auto da = det_adjugate(m);
    auto expected = PolyMatrix::identity(size, 3);
    for (std::size_t r = 0; r < size; ++r) expected.at(r, r) = da.det;
    expect(m * da.adjugate == expected, "adjugate identity");
  }
  // Mutation soundness of check_kz and check_primitive.
  for (const auto& parts : {std::vector<int>{2, 1}, std::vector<int>{2, 2}, std::vector<int>{2, 1, 1}}) {
    const Partition shape(parts);
    const auto f = fundamental_solution(shape, 1);
    for (const auto& s : f.solutions)
      for (int trial = 0; trial < 6; ++trial, ++instances) {
        auto bad = s;
        auto it = bad.components.begin();
        std::advance(it, uniform(rng, 0, static_cast<int>(bad.components.size()) - 1));
        Monomial mono;
        if (it->second.is_zero()) {
          mono.exp[0] = static_cast<std::uint16_t>(diagram_stats(shape, 1).solution_degree);
        } else {
          mono = it->second.terms()[uniform(rng, 0, static_cast<int>(it->second.size()) - 1)].first;
        }
        it->second += SparsePolynomial(shape.size(), {{mono, Coefficient(uniform(rng, 1, 3))}});
        const auto kz = check_kz(bad);
        const auto prim = check_primitive(bad);
        expect(!kz.pass && !kz.witness.empty(), "check_kz missed a mutation");
        expect(!prim.pass && !prim.witness.empty(), "check_primitive missed a mutation");
      }
  }
  return std::to_string(instances) + " randomized instances, seed " + std::to_string(kSeed);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
      {"(2,1) m=1 fundamental matrix", criterion1},
      {"(2,1) m=2 span of the displayed solutions", criterion2},
      {"kz, primitive, shape, equivariance, rank", criterion3},
      {"leading-term law", criterion4},
      {"Frobenius central element, N <= 5", criterion5},
      {"determinant identity", criterion6},
      {"duality and alternating twist", criterion7},
      {"reflection representation", criterion8},
      {"straightening", criterion9},
      {"property suite", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string verdict;
    std::string detail;
    try {
      detail = criteria[i].second();
      verdict = "PASS";
    } catch (const std::exception& e) {
      detail = e.what();
      verdict = "FAIL";
      ++failed;
    }
    std::cout << "criterion " << (i + 1) << ": " << verdict << "  " << criteria[i].first << " (" << detail << ")"
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
