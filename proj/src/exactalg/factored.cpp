#include "kzres/factored.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace kzres {

namespace {

void merge_factor(FactorList& list, std::uint16_t key, int exponent) {
  if (exponent == 0) return;
  auto it = std::lower_bound(list.begin(), list.end(), key,
                             [](const Factor& f, std::uint16_t k) { return f.key < k; });
  if (it != list.end() && it->key == key) {
    it->exponent += exponent;
    if (it->exponent == 0) list.erase(it);
  } else {
    list.insert(it, Factor{key, exponent});
  }
}

}  // namespace

void FactoredTerm::multiply_difference(Atom a, Atom b, int e) {
  if (a == b) throw std::invalid_argument("point difference of an atom with itself");
  if (e == 0) return;
  if (a > b) {
    std::swap(a, b);
    if (e % 2 != 0) coeff = -coeff;
  }
  merge_factor(factors, PointDiff{a, b}.key(), e);
}

void FactoredTerm::multiply(const FactoredTerm& other) {
  coeff *= other.coeff;
  for (const auto& f : other.factors) merge_factor(factors, f.key, f.exponent);
}

FactoredSum::FactoredSum(FactoredTerm term) { add(term); }

void FactoredSum::add(const FactorList& factors, const Coefficient& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(factors, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FactoredSum& FactoredSum::operator+=(const FactoredSum& other) {
  for (const auto& [factors, c] : other.terms_) add(factors, c);
  return *this;
}

FactoredSum& FactoredSum::operator*=(const Coefficient& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [factors, coeff] : terms_) coeff *= c;
  return *this;
}

FactoredSum FactoredSum::operator*(const FactoredSum& other) const {
  FactoredSum out;
  for (const auto& [fa, ca] : terms_) {
    for (const auto& [fb, cb] : other.terms_) {
      FactoredTerm t{ca, fa};
      t.multiply(FactoredTerm{cb, fb});
      out.add(t);
    }
  }
  return out;
}

std::set<Atom> FactoredSum::atoms() const {
  std::set<Atom> out;
  for (const auto& [factors, c] : terms_) {
    for (const auto& f : factors) {
      out.insert(f.diff().lo);
      out.insert(f.diff().hi);
    }
  }
  return out;
}

FactoredSum FactoredSum::relabel(const std::vector<Atom>& table) const {
  FactoredSum out;
  for (const auto& [factors, c] : terms_) {
    FactoredTerm t{c, {}};
    for (const auto& f : factors) {
      const PointDiff d = f.diff();
      t.multiply_difference(table.at(d.lo), table.at(d.hi), f.exponent);
    }
    out.add(t);
  }
  return out;
}

SparsePolynomial normalize_factored(const FactoredSum& f, int nvars) {
  if (f.is_zero()) return SparsePolynomial(nvars);
  // Minimal exponent of each point difference over all terms, absent = 0.
  std::map<std::uint16_t, int> shift;
  for (const auto& [factors, c] : f.terms()) {
    for (const auto& fac : factors) {
      const PointDiff d = fac.diff();
      if (!is_fixed_atom(d.lo) || !is_fixed_atom(d.hi)) {
        throw std::invalid_argument("normalize_factored: live integration variable present");
      }
      if (fixed_label(d.hi) > nvars) throw std::invalid_argument("normalize_factored: atom outside z_1..z_N");
      shift.try_emplace(fac.key, 0);
    }
  }
  for (auto& [key, s] : shift) {
    s = std::numeric_limits<int>::max();
    for (const auto& [factors, c] : f.terms()) {
      auto it = std::find_if(factors.begin(), factors.end(), [k = key](const Factor& x) { return x.key == k; });
      s = std::min(s, it == factors.end() ? 0 : it->exponent);
    }
  }

  std::map<std::pair<std::uint16_t, int>, SparsePolynomial> powers;
  auto power = [&](std::uint16_t key, int k) -> const SparsePolynomial& {
    auto [it, inserted] = powers.try_emplace({key, k});
    if (inserted) {
      const PointDiff d = PointDiff::from_key(key);
      it->second = SparsePolynomial::difference_power(nvars, fixed_label(d.lo), fixed_label(d.hi), k);
    }
    return it->second;
  };

  std::unordered_map<Monomial, Coefficient, MonomialHash> acc;
  for (const auto& [factors, c] : f.terms()) {
    SparsePolynomial term = SparsePolynomial::constant(nvars, c);
    for (const auto& [key, s] : shift) {
      auto it = std::find_if(factors.begin(), factors.end(), [k = key](const Factor& x) { return x.key == k; });
      const int e = (it == factors.end() ? 0 : it->exponent) - s;
      if (e > 0) term = term * power(key, e);
    }
    for (const auto& [m, coeff] : term.terms()) acc[m] += coeff;
  }
  std::vector<SparsePolynomial::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) terms.emplace_back(m, std::move(c));
  SparsePolynomial sum(nvars, std::move(terms));

  for (const auto& [key, s] : shift) {
    const PointDiff d = PointDiff::from_key(key);
    if (s > 0) {
      sum = sum * power(key, s);
    } else if (s < 0) {
      try {
        sum = exact_divide_difference(std::move(sum), fixed_label(d.lo), fixed_label(d.hi), -s);
      } catch (const NotDivisibleError& e) {
        throw NormalizationError("normalize_factored: denominator does not cancel", e.remainder());
      }
    }
  }
  return sum;
}

std::string to_string(const FactoredSum& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto atom_name = [](Atom a) {
    return is_fixed_atom(a) ? "z" + std::to_string(fixed_label(a)) : "t" + std::to_string(a - kMaxVars);
  };
  for (const auto& [factors, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (const auto& fac : factors) {
      const PointDiff d = fac.diff();
      os << "*(" << atom_name(d.lo) << "-" << atom_name(d.hi) << ")^" << fac.exponent;
    }
  }
  return os.str();
}

}  // namespace kzres
