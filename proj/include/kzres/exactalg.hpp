#pragma once

// Exact arithmetic: rational coefficients, sparse multivariate polynomials in
// z_1..z_N, unreduced polynomial fractions and polynomial matrices.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace kzres {

using Coefficient = mpq_class;

/// Largest number of points z_1..z_N supported anywhere in the library.
inline constexpr int kMaxVars = 8;

/// Dense exponent vector. Ordering is pure lexicographic with z_N the most
/// significant variable, so the greatest monomial dominates in the region
/// |z_1| << |z_2| << ... << |z_N|.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  int degree() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other).
  Monomial quotient(const Monomial& divisor) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    for (int i = kMaxVars - 1; i >= 0; --i) {
      if (a.exp[i] != b.exp[i]) return a.exp[i] <=> b.exp[i];
    }
    return std::strong_ordering::equal;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

class SparsePolynomial;

class NotDivisibleError : public std::runtime_error {
 public:
  NotDivisibleError(const std::string& what, std::vector<std::pair<Monomial, Coefficient>> remainder,
                    int nvars);
  /// Non-zero remainder of the division, the witness of non-divisibility.
  SparsePolynomial remainder() const;

 private:
  std::vector<std::pair<Monomial, Coefficient>> remainder_;
  int nvars_;
};

/// Polynomial in z_1..z_nvars with exact rational coefficients. Variable
/// labels in the public interface are 1-based, matching the labels of
/// tableaux. Terms are kept sorted ascending by Monomial with no zeros.
class SparsePolynomial {
 public:
  using Term = std::pair<Monomial, Coefficient>;

  SparsePolynomial() = default;
  explicit SparsePolynomial(int nvars);
  /// Sorts, merges duplicate monomials and drops zero coefficients.
  SparsePolynomial(int nvars, std::vector<Term> terms);

  static SparsePolynomial constant(int nvars, const Coefficient& c);
  static SparsePolynomial variable(int nvars, int label);
  /// z_i - z_j.
  static SparsePolynomial difference(int nvars, int i, int j);
  /// (z_i - z_j)^k by the binomial theorem.
  static SparsePolynomial difference_power(int nvars, int i, int j, int k);

  int nvars() const { return nvars_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero when absent).
  Coefficient constant_term() const;
  std::span<const Term> terms() const { return terms_; }
  Coefficient coefficient(const Monomial& m) const;

  int total_degree() const;
  /// True for the zero polynomial and for polynomials whose terms all have
  /// degree `degree`.
  bool is_homogeneous_of_degree(int degree) const;
  bool has_integer_coefficients() const;

  /// Greatest term under the Monomial order. Throws on the zero polynomial.
  const Term& leading_term() const;

  SparsePolynomial partial_derivative(int label) const;
  /// Substitutes z_{target[k-1]} for z_k, i.e. target is a 1-based
  /// permutation of the variable labels.
  SparsePolynomial substitute(std::span<const int> target) const;
  SparsePolynomial pow(int exponent) const;
  /// Value at point[k-1] for z_k.
  Coefficient evaluate(std::span<const Coefficient> point) const;

  SparsePolynomial operator-() const;
  SparsePolynomial& operator+=(const SparsePolynomial& other);
  SparsePolynomial& operator-=(const SparsePolynomial& other);
  SparsePolynomial& operator*=(const Coefficient& c);
  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator*(SparsePolynomial a, const Coefficient& c) { return a *= c; }
  friend SparsePolynomial operator*(const Coefficient& c, SparsePolynomial a) { return a *= c; }
  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b);

  /// Expanded human-readable form, leading term first: "z1^2*z3 - 2*z2".
  std::string to_string() const;

 private:
  int nvars_ = 0;
  std::vector<Term> terms_;
};

struct DivisionResult {
  SparsePolynomial quotient;
  SparsePolynomial remainder;
};

/// Multivariate division by leading terms; p = q*quotient + remainder and no
/// term of the remainder is divisible by the leading monomial of q.
DivisionResult divide(const SparsePolynomial& p, const SparsePolynomial& q);

/// Returns r with p = q*r or throws NotDivisibleError carrying the remainder.
SparsePolynomial exact_divide(const SparsePolynomial& p, const SparsePolynomial& q);

/// Divides p by (z_i - z_j)^k, one linear factor at a time.
SparsePolynomial exact_divide_difference(SparsePolynomial p, int i, int j, int k);

/// Sum over i of z_i * d/dz_i p.
SparsePolynomial euler_operator(const SparsePolynomial& p);

/// Splits off every power of a point difference z_i - z_j that divides p.
struct DifferenceFactorization {
  std::vector<std::pair<std::pair<int, int>, int>> powers;  // ((i, j), k), i < j
  SparsePolynomial cofactor;
};
DifferenceFactorization factor_differences(const SparsePolynomial& p);

/// "z12^2*(z1 + z2 - 2*z3)" style rendering using the z_ij shorthand.
std::string to_difference_string(const SparsePolynomial& p);

/// Numerator/denominator pair. Never reduced; identities are checked by
/// cross-multiplication.
class PolyFraction {
 public:
  PolyFraction(SparsePolynomial num, SparsePolynomial den);
  explicit PolyFraction(SparsePolynomial num);

  const SparsePolynomial& numerator() const { return num_; }
  const SparsePolynomial& denominator() const { return den_; }

  PolyFraction operator+(const PolyFraction& o) const;
  PolyFraction operator-(const PolyFraction& o) const;
  PolyFraction operator*(const PolyFraction& o) const;
  PolyFraction partial_derivative(int label) const;
  bool is_zero() const { return num_.is_zero(); }
  /// Cross-multiplied equality.
  bool equals(const PolyFraction& o) const;

 private:
  SparsePolynomial num_;
  SparsePolynomial den_;
};

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, int nvars);

  static PolyMatrix identity(std::size_t n, int nvars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int nvars() const { return nvars_; }
  SparsePolynomial& at(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
  const SparsePolynomial& at(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }

  PolyMatrix transpose() const;
  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix& operator*=(const Coefficient& c);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int nvars_ = 0;
  std::vector<SparsePolynomial> data_;
};

struct DetAdjugate {
  SparsePolynomial det;
  PolyMatrix adjugate;
};

/// Fraction-free Bareiss elimination for 4x4, Laplace expansion otherwise.
/// Below 4x4 the cofactor products are cheaper than Bareiss' exact
/// divisions.
SparsePolynomial determinant(const PolyMatrix& m);
/// M * adjugate == det * I.
DetAdjugate det_adjugate(const PolyMatrix& m);
/// Exact rank. Full rank is certified by evaluation at an integer point;
/// otherwise fraction-free elimination decides.
std::size_t rank(const PolyMatrix& m);

/// Small dense rational matrix used for change-of-basis computations.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coefficient& at(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
  const Coefficient& at(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  std::size_t rank() const;
  /// Gauss-Jordan inverse; throws std::domain_error when singular.
  RationalMatrix inverse() const;
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Coefficient> data_;
};

/// Generalized binomial coefficient C(e, k) for any integer e and k >= 0.
mpz_class binomial(long e, long k);

}  // namespace kzres
