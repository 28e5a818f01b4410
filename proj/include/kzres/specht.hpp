#pragma once

#include <map>
#include <span>
#include <vector>

#include "kzres/exactalg.hpp"
#include "kzres/shapes.hpp"

namespace kzres {

/// The Specht module of a partition realized inside the span of its
/// tabloids: v_T is the signed column-group orbit of the tabloid of T.
class SpechtModule {
 public:
  explicit SpechtModule(const Partition& shape);

  const Partition& shape() const { return shape_; }
  const std::vector<Numbering>& tableaux() const { return tableaux_; }
  const std::vector<Tabloid>& tabloids() const { return tabloids_; }
  std::size_t dimension() const { return tableaux_.size(); }
  std::size_t tabloid_index(const Tabloid& u) const;

  /// vectors()[T][U]: coefficient of e_U in v_T.
  const std::vector<std::vector<int>>& vectors() const { return vectors_; }

  /// Coordinates c with x = sum_T c_T v_T, read off the standard tabloids.
  /// The result is only meaningful when x lies in the module.
  std::vector<SparsePolynomial> coordinates(std::span<const SparsePolynomial> tabloid_components) const;
  std::vector<SparsePolynomial> expand(std::span<const SparsePolynomial> coords) const;

  /// Matrix of s_ij in the v basis; column T holds the coordinates of s_ij v_T.
  RationalMatrix transposition_matrix(int i, int j) const;

 private:
  Partition shape_;
  std::vector<Numbering> tableaux_;
  std::vector<Tabloid> tabloids_;
  std::map<Tabloid, std::size_t> index_;
  std::vector<std::vector<int>> vectors_;
  std::vector<std::size_t> standard_tabloid_index_;
  // Inverse of A[T][S] = coefficient of {T} in v_S.
  RationalMatrix standard_inverse_;
};

}  // namespace kzres
