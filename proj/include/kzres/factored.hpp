#pragma once

// Products of point differences raised to integer powers, the Laurent
// representation used by the residue engine.

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "kzres/exactalg.hpp"

namespace kzres {

/// Atoms are the points of a factor alphabet. Atoms below kMaxVars are the
/// fixed points z_1..z_kMaxVars; larger atoms are integration variables.
using Atom = std::uint8_t;

inline constexpr int kMaxAtoms = 64;

constexpr Atom fixed_atom(int label) { return static_cast<Atom>(label - 1); }
constexpr bool is_fixed_atom(Atom a) { return a < kMaxVars; }
constexpr int fixed_label(Atom a) { return a + 1; }

/// The linear form lo - hi with lo < hi in atom order.
struct PointDiff {
  Atom lo;
  Atom hi;

  std::uint16_t key() const { return static_cast<std::uint16_t>(lo * kMaxAtoms + hi); }
  static PointDiff from_key(std::uint16_t key) {
    return {static_cast<Atom>(key / kMaxAtoms), static_cast<Atom>(key % kMaxAtoms)};
  }
};

struct Factor {
  std::uint16_t key;
  int exponent;

  PointDiff diff() const { return PointDiff::from_key(key); }
  friend auto operator<=>(const Factor&, const Factor&) = default;
};

/// Sorted by key, unique keys, non-zero exponents.
using FactorList = std::vector<Factor>;

struct FactoredTerm {
  Coefficient coeff{1};
  FactorList factors;

  /// Multiplies by (a - b)^e, canonicalizing the orientation.
  void multiply_difference(Atom a, Atom b, int e);
  void multiply(const FactoredTerm& other);
};

class NormalizationError : public std::runtime_error {
 public:
  NormalizationError(const std::string& what, SparsePolynomial remainder)
      : std::runtime_error(what), remainder_(std::move(remainder)) {}
  const SparsePolynomial& remainder() const { return remainder_; }

 private:
  SparsePolynomial remainder_;
};

/// Sum of FactoredTerms with identical factor maps merged.
class FactoredSum {
 public:
  FactoredSum() = default;
  explicit FactoredSum(FactoredTerm term);

  void add(const FactorList& factors, const Coefficient& c);
  void add(const FactoredTerm& term) { add(term.factors, term.coeff); }
  FactoredSum& operator+=(const FactoredSum& other);
  FactoredSum& operator*=(const Coefficient& c);
  /// Term-by-term product.
  FactoredSum operator*(const FactoredSum& other) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<FactorList, Coefficient>& terms() const { return terms_; }
  std::set<Atom> atoms() const;
  /// Relabels atoms through a table of length kMaxAtoms.
  FactoredSum relabel(const std::vector<Atom>& table) const;

  friend bool operator==(const FactoredSum&, const FactoredSum&) = default;

 private:
  std::map<FactorList, Coefficient> terms_;
};

/// Expands a sum over fixed-point atoms into a polynomial in z_1..z_nvars.
/// The minimal exponent of every point difference is factored out first, the
/// rest is expanded, and the common factor is multiplied back or divided out
/// exactly. Throws NormalizationError when a denominator does not cancel and
/// std::invalid_argument when a live variable is still present.
SparsePolynomial normalize_factored(const FactoredSum& f, int nvars);

std::string to_string(const FactoredSum& f);

}  // namespace kzres
