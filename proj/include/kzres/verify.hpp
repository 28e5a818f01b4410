#pragma once

// Exact checks of the identities satisfied by computed solutions. Every
// check returns a report; a failing report always carries a witness.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kzres/kzsolve.hpp"

namespace kzres {

struct CheckReport {
  std::string check;
  std::vector<int> lambda;
  int m = 0;
  bool pass = true;
  /// Human-readable location of the failure.
  std::string witness;
  /// Non-zero residual, when the failure has one.
  std::optional<SparsePolynomial> residual;
  /// Reported (not asserted) quantities, e.g. the determinant constant.
  std::string detail;
};

/// (s_ij x)_k for a vector of components x.
using TranspositionAction =
    std::function<std::vector<SparsePolynomial>(int i, int j, const std::vector<SparsePolynomial>& x)>;

/// Polynomial KZ check: (s_ij+1)x must be divisible by z_i-z_j and
/// d_i x = parameter * sum_j of the quotients.
CheckReport check_kz_vector(const std::string& name, const std::vector<SparsePolynomial>& x, int nvars,
                            int parameter, const TranspositionAction& act,
                            const std::function<std::string(std::size_t)>& label);

/// Rational KZ check for x / denominator, cross-multiplied:
/// Q_i (D d_i P - P d_i D) = parameter * D * sum_j (Q_i/z_ij)(s_ij P + P).
CheckReport check_kz_vector(const std::string& name, const std::vector<SparsePolynomial>& numerators,
                            const SparsePolynomial& denominator, int parameter, const TranspositionAction& act,
                            const std::function<std::string(std::size_t)>& label);

CheckReport check_kz(const SolutionTable& table);
CheckReport check_kz(const RationalTable& table);
CheckReport check_primitive(const SolutionTable& table);
/// Homogeneity, degree and integrality of one solution.
CheckReport check_shape(const SolutionTable& table);
/// All solutions and matrix entries, plus the leading-term law on the
/// diagonal integral of the identity tableau.
CheckReport check_shape(const FundamentalMatrix& f);
CheckReport check_rank(const FundamentalMatrix& f);
/// Substituting z_i <-> z_j in every entry equals relabeling cycle and form
/// tabloids by (i j). Cycles outside the table are solved afresh.
CheckReport check_equivariance(const FundamentalMatrix& f, int i, int j, const SolveOptions& options = {});
/// Coordinates of [e_U] along the standard classes [e_T] in the quotient by
/// the kernel of the tabloid pairing with the v_S.
std::vector<Coefficient> straightening_coordinates(const Partition& shape, const Tabloid& u);
CheckReport check_straightening(const FundamentalMatrix& f, const SolveOptions& options = {});
CheckReport check_det(const FundamentalMatrix& f);
CheckReport check_dual(const FundamentalMatrix& f);
CheckReport check_twist(const FundamentalMatrix& f);
CheckReport check_frobenius(const Partition& shape);
/// sum_a psi_a = 0, each psi_a has zero component sum, and every psi_a
/// (parameter m) and phi_a (parameter -m) solves the system.
CheckReport check_reflection(int n, int m);
CheckReport check_pairing(int n, int m);

/// Every check applicable to (shape, m).
std::vector<CheckReport> verify_suite(const Partition& shape, int m, const SolveOptions& options = {});

}  // namespace kzres
