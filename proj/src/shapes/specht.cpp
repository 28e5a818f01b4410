#include "kzres/specht.hpp"

#include <stdexcept>

namespace kzres {

SpechtModule::SpechtModule(const Partition& shape)
    : shape_(shape), tableaux_(standard_tableaux(shape)), tabloids_(kzres::tabloids(shape.parts())) {
  for (std::size_t i = 0; i < tabloids_.size(); ++i) index_.emplace(tabloids_[i], i);
  vectors_.assign(tableaux_.size(), std::vector<int>(tabloids_.size(), 0));
  for (std::size_t t = 0; t < tableaux_.size(); ++t) {
    for (const auto& [sign, u] : column_expansion(tableaux_[t])) vectors_[t][tabloid_index(u)] += sign;
    standard_tabloid_index_.push_back(tabloid_index(tabloid_of(tableaux_[t])));
  }
  const std::size_t d = tableaux_.size();
  RationalMatrix a(d, d);
  for (std::size_t t = 0; t < d; ++t)
    for (std::size_t s = 0; s < d; ++s) a.at(t, s) = vectors_[s][standard_tabloid_index_[t]];
  standard_inverse_ = a.inverse();
}

std::size_t SpechtModule::tabloid_index(const Tabloid& u) const {
  auto it = index_.find(u);
  if (it == index_.end()) throw std::out_of_range("tabloid " + u.to_string() + " not of shape " + shape_.to_string());
  return it->second;
}

std::vector<SparsePolynomial> SpechtModule::coordinates(std::span<const SparsePolynomial> x) const {
  if (x.size() != tabloids_.size()) throw std::invalid_argument("tabloid component count mismatch");
  const std::size_t d = tableaux_.size();
  const int nvars = shape_.size();
  std::vector<SparsePolynomial> out(d, SparsePolynomial(nvars));
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t) {
      const Coefficient& c = standard_inverse_.at(s, t);
      if (c != 0) out[s] += x[standard_tabloid_index_[t]] * c;
    }
  return out;
}

std::vector<SparsePolynomial> SpechtModule::expand(std::span<const SparsePolynomial> coords) const {
  if (coords.size() != tableaux_.size()) throw std::invalid_argument("coordinate count mismatch");
  std::vector<SparsePolynomial> out(tabloids_.size(), SparsePolynomial(shape_.size()));
  for (std::size_t t = 0; t < tableaux_.size(); ++t)
    for (std::size_t u = 0; u < tabloids_.size(); ++u)
      if (vectors_[t][u] != 0) out[u] += coords[t] * Coefficient(vectors_[t][u]);
  return out;
}

RationalMatrix SpechtModule::transposition_matrix(int i, int j) const {
  const std::size_t d = tableaux_.size();
  RationalMatrix m(d, d);
  for (std::size_t s = 0; s < d; ++s) {
    // Components of s_ij v_S on the standard tabloids.
    std::vector<Coefficient> image(d, Coefficient(0));
    for (std::size_t t = 0; t < d; ++t) {
      const Tabloid& target = tabloids_[standard_tabloid_index_[t]];
      image[t] = vectors_[s][tabloid_index(act_transposition(target, i, j))];
    }
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t t = 0; t < d; ++t) m.at(r, s) += standard_inverse_.at(r, t) * image[t];
  }
  return m;
}

}  // namespace kzres
