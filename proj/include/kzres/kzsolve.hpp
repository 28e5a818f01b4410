#pragma once

// Integral solutions of the KZ system with values in a Specht module, the
// reflection-representation families and the m <-> -m companions.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "kzres/exactalg.hpp"
#include "kzres/factored.hpp"
#include "kzres/kernels.hpp"
#include "kzres/residue.hpp"
#include "kzres/shapes.hpp"
#include "kzres/specht.hpp"

namespace kzres {

inline constexpr std::int64_t kDefaultResidueBudget = 10000;

struct SolveOptions {
  int workers = 1;
  /// Upper bound on d_lambda * |G_lambda|, the elementary residues per
  /// component.
  std::int64_t budget = kDefaultResidueBudget;
};

class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check_resource_guard(const Partition& shape, const SolveOptions& options);

/// Phi_lambda^m: (z_i-z_j)^{2m}, (t^b_s-t^b'_s)^{2m} per unordered same-level
/// pair, (t^b_{s+1}-t^b'_s)^{-m} per chained pair, (t^b_1-z_k)^{-m}.
PowerProductForm master_form(const Partition& shape, int m);

/// phi_T: (t^b_{s+1}-t^b_s)^{-1} along each column chain and
/// (t^b_1-z_{T(b)})^{-1}.
FactoredSum tableau_form(const Numbering& t, const VariableRoster& roster);
FactoredSum tableau_form(const Numbering& t);

/// An element of G_lambda = S_{m_1} x ... x S_{m_{n-1}}: perms[s-1][p] is
/// the position (within level s, reading order) that position p moves to.
struct LevelPermutation {
  std::vector<std::vector<int>> perms;
};

std::vector<LevelPermutation> level_group(const VariableRoster& roster);
std::int64_t level_group_order(const Partition& shape);
/// Atom relabeling table (length kMaxAtoms) realizing g on the variables.
std::vector<Atom> relabel_table(const VariableRoster& roster, const LevelPermutation& g);

/// Tasks for every (cycle, form) pair: the cycles' plans, the forms, and
/// the relabelings of G_lambda.
ResidueBatch residue_batch(const Partition& shape, int m, const std::vector<Numbering>& cycles,
                           const std::vector<Numbering>& forms);

/// Integral of the form of `form` over the skew-symmetrized cycle of `cycle`.
SparsePolynomial solve_component(const Partition& shape, int m, const Tabloid& cycle, const Tabloid& form,
                                 const SolveOptions& options = {});

/// Components of one solution: the coefficient of e_U for every tabloid U.
struct SolutionTable {
  Partition shape;
  int m = 0;
  Tabloid cycle;
  std::map<Tabloid, SparsePolynomial> components;
};

/// The solution attached to an arbitrary cycle tabloid.
SolutionTable solve_cycle(const Partition& shape, int m, const Tabloid& cycle, const SolveOptions& options = {});

struct FundamentalMatrix {
  Partition shape;
  int m = 0;
  std::vector<Numbering> tableaux;
  /// solutions[T]: the solution of the cycle at the tabloid of tableaux[T].
  std::vector<SolutionTable> solutions;
  /// matrix.at(T, T'): coordinate of solutions[T] along v_{T'}.
  PolyMatrix matrix;
};

FundamentalMatrix fundamental_solution(const Partition& shape, int m, const SolveOptions& options = {});

/// Converts v-basis coordinates into tabloid components.
SolutionTable table_from_specht_coordinates(const Partition& shape, int m,
                                            const std::vector<SparsePolynomial>& coords);

/// A rational solution whose components share one denominator. With
/// `twisted` the transpositions act with an extra sign (tensoring with the
/// alternating representation).
struct RationalTable {
  Partition shape;
  int parameter = 0;
  bool twisted = false;
  SparsePolynomial denominator;
  std::map<Tabloid, SparsePolynomial> numerators;
};

/// prod_{i<j} (z_i-z_j)^{-2m} psi (x) Alt, a solution with parameter -m.
RationalTable alt_twist(const SolutionTable& solution);

/// prod_{i<j} (z_i - z_j)^{e}.
SparsePolynomial vandermonde_power(int n, int e);

struct DualMatrix {
  /// Entry (beta, i) is numerators.at(beta, i) / det: the transposed inverse
  /// of the fundamental matrix. Rows are solutions of the system with
  /// parameter -m on the dual module, in the basis dual to v_T.
  PolyMatrix numerators;
  SparsePolynomial det;
};

/// Throws std::logic_error if the fundamental matrix is singular.
DualMatrix dual_matrix(const FundamentalMatrix& f);

struct ReflectionSolution {
  int n = 0;
  int m = 0;
  int index = 0;
  /// Coefficients of eps_1..eps_N.
  std::vector<SparsePolynomial> components;
};

struct ReflectionDual {
  int n = 0;
  int m = 0;
  int index = 0;
  std::vector<PolyFraction> components;
};

/// psi_a, a = 1..N: residue at z_a of prod (t-z_i)^{-m} sum_b eps_b/(t-z_b).
std::vector<ReflectionSolution> reflection_psi(int n, int m);
/// phi_a, a = 1..N-1: integral from z_a to z_N of prod (t-z_i)^m sum_b
/// eps_b/(t-z_b), over prod (z_i-z_j)^{2m}.
std::vector<ReflectionDual> reflection_phi(int n, int m);

}  // namespace kzres
