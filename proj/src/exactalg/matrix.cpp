#include <algorithm>
#include <utility>

#include "kzres/exactalg.hpp"

namespace kzres {

PolyFraction::PolyFraction(SparsePolynomial num, SparsePolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
}

PolyFraction::PolyFraction(SparsePolynomial num)
    : num_(std::move(num)), den_(SparsePolynomial::constant(num_.nvars(), 1)) {}

PolyFraction PolyFraction::operator+(const PolyFraction& o) const {
  if (den_ == o.den_) return {num_ + o.num_, den_};
  return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

PolyFraction PolyFraction::operator-(const PolyFraction& o) const {
  return *this + PolyFraction(-o.num_, o.den_);
}

PolyFraction PolyFraction::operator*(const PolyFraction& o) const {
  return {num_ * o.num_, den_ * o.den_};
}

PolyFraction PolyFraction::partial_derivative(int label) const {
  return {num_.partial_derivative(label) * den_ - num_ * den_.partial_derivative(label), den_ * den_};
}

bool PolyFraction::equals(const PolyFraction& o) const { return num_ * o.den_ == o.num_ * den_; }

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, int nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, SparsePolynomial(nvars)) {}

PolyMatrix PolyMatrix::identity(std::size_t n, int nvars) {
  PolyMatrix m(n, n, nvars);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = SparsePolynomial::constant(nvars, 1);
  return m;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_, nvars_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
  PolyMatrix p(rows_, o.cols_, std::max(nvars_, o.nvars_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < o.cols_; ++c)
      for (std::size_t k = 0; k < cols_; ++k) p.at(r, c) += at(r, k) * o.at(k, c);
  return p;
}

PolyMatrix& PolyMatrix::operator*=(const Coefficient& c) {
  for (auto& e : data_) e *= c;
  return *this;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

SparsePolynomial bareiss_determinant(PolyMatrix m) {
  const std::size_t n = m.rows();
  const int nvars = m.nvars();
  if (n == 0) return SparsePolynomial::constant(nvars, 1);
  bool negate = false;
  SparsePolynomial previous = SparsePolynomial::constant(nvars, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return SparsePolynomial(nvars);
      for (std::size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(pivot, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        SparsePolynomial num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = exact_divide(num, previous);
      }
    }
    previous = m.at(k, k);
  }
  SparsePolynomial det = m.at(n - 1, n - 1);
  return negate ? -det : det;
}

PolyMatrix minor_matrix(const PolyMatrix& m, std::size_t skip_row, std::size_t skip_col) {
  PolyMatrix out(m.rows() - 1, m.cols() - 1, m.nvars());
  for (std::size_t r = 0, rr = 0; r < m.rows(); ++r) {
    if (r == skip_row) continue;
    for (std::size_t c = 0, cc = 0; c < m.cols(); ++c) {
      if (c == skip_col) continue;
      out.at(rr, cc++) = m.at(r, c);
    }
    ++rr;
  }
  return out;
}

}  // namespace

SparsePolynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return SparsePolynomial::constant(m.nvars(), 1);
  if (m.rows() == 1) return m.at(0, 0);
  if (m.rows() == 4) return bareiss_determinant(m);
  SparsePolynomial det(m.nvars());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (m.at(0, c).is_zero()) continue;
    SparsePolynomial term = m.at(0, c) * determinant(minor_matrix(m, 0, c));
    if (c % 2 == 1) term = -term;
    det += term;
  }
  return det;
}

DetAdjugate det_adjugate(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  DetAdjugate out{determinant(m), PolyMatrix(n, n, m.nvars())};
  if (n == 1) {
    out.adjugate.at(0, 0) = SparsePolynomial::constant(m.nvars(), 1);
    return out;
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      SparsePolynomial cof = determinant(minor_matrix(m, r, c));
      if ((r + c) % 2 == 1) cof = -cof;
      out.adjugate.at(c, r) = std::move(cof);
    }
  }
  return out;
}

std::size_t rank(const PolyMatrix& input) {
  // The rank at a point is a lower bound; full rank there is a certificate.
  const std::size_t full = std::min(input.rows(), input.cols());
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<Coefficient> point;
    for (int k = 1; k <= input.nvars(); ++k) point.emplace_back(k * k + 7 * attempt * k + 3);
    RationalMatrix values(input.rows(), input.cols());
    for (std::size_t r = 0; r < input.rows(); ++r)
      for (std::size_t c = 0; c < input.cols(); ++c) values.at(r, c) = input.at(r, c).evaluate(point);
    if (values.rank() == full) return full;
  }
  PolyMatrix m = input;
  const int nvars = m.nvars();
  SparsePolynomial previous = SparsePolynomial::constant(nvars, 1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m.at(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(r, k), m.at(pivot, k));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        SparsePolynomial num = m.at(i, j) * m.at(r, c) - m.at(i, c) * m.at(r, j);
        m.at(i, j) = exact_divide(num, previous);
      }
      m.at(i, c) = SparsePolynomial(nvars);
    }
    previous = m.at(r, c);
    ++r;
  }
  return r;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Coefficient(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
  RationalMatrix p(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(r, k) == 0) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) p.at(r, c) += at(r, k) * o.at(k, c);
    }
  return p;
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix a = *this;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t pivot = r;
    while (pivot < rows_ && a.at(pivot, c) == 0) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(a.at(r, k), a.at(pivot, k));
    for (std::size_t i = r + 1; i < rows_; ++i) {
      if (a.at(i, c) == 0) continue;
      const Coefficient f = a.at(i, c) / a.at(r, c);
      for (std::size_t k = c; k < cols_; ++k) a.at(i, k) -= f * a.at(r, k);
    }
    ++r;
  }
  return r;
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix a = *this;
  RationalMatrix inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a.at(pivot, c) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("singular rational matrix");
    for (std::size_t k = 0; k < n; ++k) {
      std::swap(a.at(c, k), a.at(pivot, k));
      std::swap(inv.at(c, k), inv.at(pivot, k));
    }
    const Coefficient scale = 1 / a.at(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      a.at(c, k) *= scale;
      inv.at(c, k) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a.at(r, c) == 0) continue;
      const Coefficient f = a.at(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        a.at(r, k) -= f * a.at(c, k);
        inv.at(r, k) -= f * inv.at(c, k);
      }
    }
  }
  return inv;
}

}  // namespace kzres
