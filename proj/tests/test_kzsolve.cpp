#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "support.hpp"

using namespace kzres;
using namespace kztest;

namespace {

std::vector<int> swap_perm(int n, int i, int j) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::swap(p[i - 1], p[j - 1]);
  return p;
}

SparsePolynomial batch_value(const Partition& shape, int m, const Numbering& cycle, const Numbering& form) {
  const auto batch = residue_batch(shape, m, {cycle}, {form});
  return normalize_serial(evaluate_residues_serial(batch), shape.size()).front();
}

bool fraction_equals(const PolyFraction& f, const SparsePolynomial& num, const SparsePolynomial& den) {
  return f.equals(PolyFraction(num, den));
}

}  // namespace

TEST_CASE("master_form examples") {
  const Partition two_one({2, 1});
  const auto f = master_form(two_one, 1);
  const Atom t = f.roster.atom({2, 1}, 1);
  CHECK(f.integrand == term({{Z1, Z2, 2}, {Z1, Z3, 2}, {Z2, Z3, 2}, {t, Z1, -1}, {t, Z2, -1}, {t, Z3, -1}}));

  const auto row = master_form(Partition({3}), 2);
  CHECK(row.roster.size() == 0);
  CHECK(row.integrand == term({{Z1, Z2, 4}, {Z1, Z3, 4}, {Z2, Z3, 4}}));

  const auto col = master_form(Partition({1, 1}), 2);
  const Atom u = col.roster.atom({2, 1}, 1);
  CHECK(col.integrand == term({{Z1, Z2, 4}, {u, Z1, -2}, {u, Z2, -2}}));

  // Two level-1 variables and one level-2 variable.
  const auto c3 = master_form(Partition({1, 1, 1}), 1);
  const Atom a = c3.roster.atom({2, 1}, 1);
  const Atom b = c3.roster.atom({3, 1}, 1);
  const Atom c = c3.roster.atom({3, 1}, 2);
  CHECK(c3.integrand == term({{Z1, Z2, 2}, {Z1, Z3, 2}, {Z2, Z3, 2}, {a, b, 2}, {c, a, -1}, {c, b, -1},
                              {a, Z1, -1}, {a, Z2, -1}, {a, Z3, -1}, {b, Z1, -1}, {b, Z2, -1}, {b, Z3, -1}}));
  CHECK_THROWS_AS(master_form(Partition({2, 1}), 0), std::invalid_argument);
}

TEST_CASE("tableau_form examples") {
  const Partition two_one({2, 1});
  const VariableRoster r(two_one);
  const Atom t = r.atom({2, 1}, 1);
  for (int k = 1; k <= 3; ++k) CHECK(tableau_form(representative(row2(k)), r) == term({{t, fixed_atom(k), -1}}));
  CHECK(tableau_form(identity_numbering(Partition({4}))) == term({}));

  const Partition column({1, 1, 1});
  const VariableRoster rc(column);
  const Atom a = rc.atom({2, 1}, 1);
  const Atom b = rc.atom({3, 1}, 1);
  const Atom c = rc.atom({3, 1}, 2);
  CHECK(tableau_form(identity_numbering(column), rc) == term({{a, Z2, -1}, {b, Z3, -1}, {c, b, -1}}));
}

TEST_CASE("level group") {
  const VariableRoster r(Partition({2, 2, 1}));
  CHECK(level_group(r).size() == 6 * 1);
  CHECK(level_group_order(Partition({2, 2, 1})) == 6);
  CHECK(level_group_order(Partition({1, 1, 1, 1})) == 12);
  CHECK(level_group_order(Partition({4})) == 1);
}

TEST_CASE("solve_component examples") {
  const Partition two_one({2, 1});
  const int n = 3;
  CHECK(solve_component(two_one, 1, row2(3), row2(3)) == zd(n, 1, 2).pow(2) * (zd(n, 1, 3) + zd(n, 2, 3)));
  CHECK(solve_component(two_one, 1, row2(2), row2(2)) ==
        zd(n, 1, 3).pow(2) * zd(n, 1, 2) - zd(n, 1, 3).pow(2) * zd(n, 2, 3));
  const Tabloid row = make_tabloid({{1, 2, 3}});
  CHECK(solve_component(Partition({3}), 1, row, row) == zd(n, 1, 2).pow(2) * zd(n, 1, 3).pow(2) * zd(n, 2, 3).pow(2));
  const Tabloid sign = make_tabloid({{1}, {2}});
  CHECK(solve_component(Partition({1, 1}), 1, sign, sign) == cst(2, -1));
  CHECK_THROWS_AS(solve_component(two_one, 1, make_tabloid({{1}, {2, 3}}), row2(1)), std::invalid_argument);
}

TEST_CASE("fundamental_solution examples") {
  const int n = 3;
  const auto f = fundamental_solution(Partition({2, 1}), 1);
  REQUIRE(f.matrix.rows() == 2);
  CHECK(f.solutions[0].cycle == row2(3));
  CHECK(f.solutions[1].cycle == row2(2));
  const auto z12 = zd(n, 1, 2);
  const auto z13 = zd(n, 1, 3);
  const auto z23 = zd(n, 2, 3);
  CHECK(f.matrix.at(0, 0) == z12.pow(2) * (z13 + z23));
  CHECK(f.matrix.at(0, 1) == -(z12.pow(2) * z13));
  CHECK(f.matrix.at(1, 0) == -(z12 * z13.pow(2)));
  CHECK(f.matrix.at(1, 1) == z13.pow(2) * (z12 - z23));
  // Tabloid components of the row2={2} cycle, as computed by hand.
  const auto& comps = f.solutions[1].components;
  CHECK(comps.at(row2(1)) == z13.pow(2) * z23);
  CHECK(comps.at(row2(2)) == z13.pow(2) * (z12 - z23));
  CHECK(comps.at(row2(3)) == -(z12 * z13.pow(2)));

  const auto col = fundamental_solution(Partition({1, 1, 1}), 1);
  REQUIRE(col.matrix.rows() == 1);
  CHECK(col.matrix.at(0, 0) == cst(n, 2));

  const auto row = fundamental_solution(Partition({3}), 1);
  CHECK(row.matrix.at(0, 0) == z12.pow(2) * z13.pow(2) * z23.pow(2));
}

TEST_CASE("resource guard") {
  SolveOptions tight;
  tight.budget = 1;
  CHECK_THROWS_AS(fundamental_solution(Partition({2, 1, 1}), 1, tight), ResourceGuardError);
  CHECK_THROWS_AS(check_resource_guard(Partition({5, 4}), {}), ResourceGuardError);
  CHECK_NOTHROW(check_resource_guard(Partition({1, 1, 1, 1}), {}));
  CHECK_THROWS_AS(check_resource_guard(Partition({1, 1, 1, 1, 1, 1, 1}), {}), ResourceGuardError);
}

TEST_CASE("solution invariants for N <= 4 at m = 1") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& shape : enumerate_partitions(n)) {
      CAPTURE(shape.to_string());
      const auto f = fundamental_solution(shape, 1);
      const auto degree = diagram_stats(shape, 1).solution_degree;
      for (const auto& sol : f.solutions)
        for (const auto& [u, p] : sol.components) {
          CHECK(p.is_homogeneous_of_degree(static_cast<int>(degree)));
          CHECK(p.has_integer_coefficients());
          CHECK(euler_operator(p) == p * Coefficient(degree));
        }
      CHECK(rank(f.matrix) == static_cast<std::size_t>(hook_length_dimension(shape)));
    }
}

TEST_CASE("equivariance by direct substitution") {
  for (const auto& parts : {std::vector<int>{2, 1}, std::vector<int>{2, 2}, std::vector<int>{3, 1}}) {
    const Partition shape(parts);
    const int n = shape.size();
    const auto all = tabloids(shape.parts());
    std::map<std::pair<Tabloid, Tabloid>, SparsePolynomial> value;
    for (const auto& c : all) {
      const auto table = solve_cycle(shape, 1, c);
      for (const auto& [u, p] : table.components) value.emplace(std::make_pair(c, u), p);
    }
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const auto perm = swap_perm(n, i, j);
        for (const auto& [key, p] : value)
          CHECK(value.at({act_transposition(key.first, i, j), act_transposition(key.second, i, j)}) ==
                p.substitute(perm));
      }
  }
}

TEST_CASE("representative independence") {
  const Partition shape({2, 2});
  const std::vector<std::vector<int>> cycle_numberings{{1, 2, 3, 4}, {2, 1, 3, 4}, {1, 2, 4, 3}, {2, 1, 4, 3}};
  const std::vector<std::vector<int>> form_numberings{{1, 3, 2, 4}, {3, 1, 4, 2}};
  const auto base = batch_value(shape, 1, Numbering(shape, cycle_numberings[0]), Numbering(shape, form_numberings[0]));
  CHECK_FALSE(base.is_zero());
  for (const auto& c : cycle_numberings)
    for (const auto& f : form_numberings)
      CHECK(batch_value(shape, 1, Numbering(shape, c), Numbering(shape, f)) == base);

  const Partition hook({2, 1, 1});
  const auto b2 = batch_value(hook, 1, Numbering(hook, {1, 2, 3, 4}), Numbering(hook, {1, 3, 2, 4}));
  CHECK(batch_value(hook, 1, Numbering(hook, {2, 1, 3, 4}), Numbering(hook, {3, 1, 2, 4})) == b2);
}

TEST_CASE("reflection_psi") {
  const auto two = reflection_psi(2, 1);
  REQUIRE(two.size() == 2);
  CHECK(two[0].components[0] == cst(2, -1));
  CHECK(two[0].components[1] == cst(2, 1));

  const int n = 3;
  const auto three = reflection_psi(3, 1);
  const auto pre = zd(n, 2, 3).pow(2);
  CHECK(three[0].components[0] == pre * -(zd(n, 1, 2) + zd(n, 1, 3)));
  CHECK(three[0].components[1] == pre * zd(n, 1, 3));
  CHECK(three[0].components[2] == pre * zd(n, 1, 2));

  for (int N = 2; N <= 5; ++N)
    for (int m = 1; m <= 2; ++m) {
      const auto psi = reflection_psi(N, m);
      REQUIRE(psi.size() == static_cast<std::size_t>(N));
      for (int e = 0; e < N; ++e) {
        SparsePolynomial sum(N);
        for (const auto& p : psi) sum += p.components[e];
        CHECK(sum.is_zero());
      }
    }
}

TEST_CASE("reflection_phi") {
  const auto two = reflection_phi(2, 1);
  REQUIRE(two.size() == 1);
  CHECK(fraction_equals(two[0].components[0], cst(2, Coefficient(-1, 2)), cst(2, 1)));
  CHECK(fraction_equals(two[0].components[1], cst(2, Coefficient(1, 2)), cst(2, 1)));

  // N = 3 against the displayed dual family.
  for (int m = 1; m <= 2; ++m) {
    const auto phi = reflection_phi(3, m);
    REQUIRE(phi.size() == 2);
    for (int a = 1; a <= 2; ++a) {
      const auto expected = displayed_phi(m, a);
      for (int e = 0; e < 3; ++e)
        CHECK(fraction_equals(phi[a - 1].components[e], expected.num[e], expected.den));
    }
  }
}

TEST_CASE("dual_matrix") {
  const int n = 3;
  const auto f = fundamental_solution(Partition({2, 1}), 1);
  const auto dual = dual_matrix(f);
  const auto vdm = zd(n, 1, 2).pow(2) * zd(n, 1, 3).pow(2) * zd(n, 2, 3).pow(2);
  CHECK(dual.det == vdm * Coefficient(-2));
  // numerators^T * Phi = det * I, i.e. Phi_{-m}^T Phi_m = I.
  auto expected = PolyMatrix::identity(2, n);
  for (std::size_t r = 0; r < 2; ++r) expected.at(r, r) = dual.det;
  CHECK(dual.numerators.transpose() * f.matrix == expected);
  const auto factored = factor_differences(dual.det);
  CHECK(factored.cofactor.is_constant());

  const auto row = fundamental_solution(Partition({3}), 1);
  const auto rd = dual_matrix(row);
  CHECK(rd.numerators.at(0, 0) == cst(n, 1));
  CHECK(rd.det == vdm);
}

TEST_CASE("alt_twist") {
  const int n = 3;
  const auto row = fundamental_solution(Partition({3}), 1);
  const auto tw = alt_twist(row.solutions[0]);
  CHECK(tw.parameter == -1);
  CHECK(tw.twisted);
  REQUIRE(tw.numerators.size() == 1);
  CHECK(tw.numerators.begin()->second == tw.denominator);

  const auto sign = fundamental_solution(Partition({1, 1}), 1);
  const auto ts = alt_twist(sign.solutions[0]);
  CHECK(ts.numerators.begin()->second == cst(2, -1));
  CHECK(ts.denominator == zd(2, 1, 2).pow(2));
  // d_1 phi = -2 phi / z12 for phi = -1/z12^2.
  const PolyFraction phi(ts.numerators.begin()->second, ts.denominator);
  CHECK(phi.partial_derivative(1).equals(phi * PolyFraction(cst(2, -2), zd(2, 1, 2))));
  CHECK(vandermonde_power(n, 2) == row.matrix.at(0, 0));
}
