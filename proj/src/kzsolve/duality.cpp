#include <stdexcept>

#include "kzres/kzsolve.hpp"

namespace kzres {

DualMatrix dual_matrix(const FundamentalMatrix& f) {
  auto [det, adj] = det_adjugate(f.matrix);
  if (det.is_zero()) throw std::logic_error("fundamental matrix of " + f.shape.to_string() + " is singular");
  return {adj.transpose(), std::move(det)};
}

RationalTable alt_twist(const SolutionTable& solution) {
  RationalTable out{solution.shape, -solution.m, true, vandermonde_power(solution.shape.size(), 2 * solution.m), {}};
  out.numerators = solution.components;
  return out;
}

}  // namespace kzres
