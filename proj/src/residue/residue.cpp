#include "kzres/residue.hpp"

#include <algorithm>
#include <stdexcept>

namespace kzres {

VariableRoster::VariableRoster(const Partition& shape) {
  levels_ = shape.rows() - 1;
  const auto bx = boxes(shape);
  for (int s = 1; s <= levels_; ++s) {
    for (const Box& b : bx) {
      if (b.row <= s) continue;
      const int atom = kMaxVars + static_cast<int>(vars_.size());
      if (atom >= kMaxAtoms) throw std::length_error("too many integration variables");
      vars_.push_back({b, s, static_cast<Atom>(atom)});
    }
  }
}

Atom VariableRoster::atom(const Box& b, int level) const {
  for (const auto& v : vars_) {
    if (v.box == b && v.level == level) return v.atom;
  }
  throw std::out_of_range("no integration variable for this box and level");
}

std::vector<LiveVariable> VariableRoster::level(int s) const {
  std::vector<LiveVariable> out;
  std::copy_if(vars_.begin(), vars_.end(), std::back_inserter(out),
               [s](const LiveVariable& v) { return v.level == s; });
  return out;
}

namespace {

// One factor (var - other)^e or (other - var)^e that survives the
// substitution as a power series in tau.
struct MovingFactor {
  Atom other;
  int exponent;
  bool var_is_lo;
  std::vector<Coefficient> series;  // series[k] = coefficient of tau^k
};

void expand_compositions(const std::vector<MovingFactor>& moving, std::size_t idx, int remaining,
                         Coefficient coeff, std::vector<int>& orders, const FactorList& rest,
                         Atom center, FactoredSum& out) {
  if (idx + 1 == moving.size() || moving.empty()) {
    if (moving.empty()) {
      if (remaining != 0) return;
    } else {
      const auto& last = moving[idx];
      if (remaining >= static_cast<int>(last.series.size()) || last.series[remaining] == 0) return;
      coeff *= last.series[remaining];
      orders[idx] = remaining;
    }
    FactoredTerm term{coeff, rest};
    for (std::size_t j = 0; j < moving.size(); ++j) {
      const auto& mf = moving[j];
      const int e = mf.exponent - orders[j];
      if (mf.var_is_lo) {
        term.multiply_difference(center, mf.other, e);
      } else {
        term.multiply_difference(mf.other, center, e);
      }
    }
    out.add(term);
    return;
  }
  const auto& mf = moving[idx];
  const int top = std::min<int>(remaining, static_cast<int>(mf.series.size()) - 1);
  for (int k = 0; k <= top; ++k) {
    if (mf.series[k] == 0) continue;
    orders[idx] = k;
    expand_compositions(moving, idx + 1, remaining - k, coeff * mf.series[k], orders, rest, center, out);
  }
}

}  // namespace

FactoredSum residue_at(const FactoredSum& f, Atom variable, Atom center) {
  if (variable == center) throw std::invalid_argument("residue centre equals the integration variable");
  FactoredSum out;
  for (const auto& [factors, coeff] : f.terms()) {
    int pole = 0;
    int sign = 1;
    FactorList rest;
    std::vector<MovingFactor> moving;
    for (const auto& fac : factors) {
      const PointDiff d = fac.diff();
      if (d.lo != variable && d.hi != variable) {
        rest.push_back(fac);
        continue;
      }
      const bool var_is_lo = d.lo == variable;
      const Atom other = var_is_lo ? d.hi : d.lo;
      if (other == center) {
        pole += fac.exponent;
        if (!var_is_lo && fac.exponent % 2 != 0) sign = -sign;
      } else {
        moving.push_back({other, fac.exponent, var_is_lo, {}});
      }
    }
    const int order = -1 - pole;
    if (order < 0) continue;
    for (auto& mf : moving) {
      const int len = mf.exponent >= 0 ? std::min(order, mf.exponent) + 1 : order + 1;
      mf.series.reserve(len);
      for (int k = 0; k < len; ++k) {
        Coefficient c(binomial(mf.exponent, k));
        if (!mf.var_is_lo && k % 2 == 1) c = -c;
        mf.series.push_back(std::move(c));
      }
    }
    std::vector<int> orders(moving.size(), 0);
    Coefficient c = coeff;
    if (sign < 0) c = -c;
    expand_compositions(moving, 0, order, c, orders, rest, center, out);
  }
  return out;
}

ResiduePlan residue_plan(const Numbering& t) { return residue_plan(t, VariableRoster(t.shape())); }

ResiduePlan residue_plan(const Numbering& t, const VariableRoster& roster) {
  ResiduePlan plan;
  plan.reserve(roster.size());
  for (const auto& v : roster.variables()) plan.push_back({v.atom, fixed_atom(t.label(v.box))});
  return plan;
}

FactoredSum iterated_residue(FactoredSum f, const ResiduePlan& plan) {
  for (std::size_t i = 0; i < plan.size(); ++i) {
    for (std::size_t j = i; j < plan.size(); ++j) {
      if (plan[i].center == plan[j].variable) {
        throw std::invalid_argument("residue plan centres a step on a variable integrated later");
      }
      if (j > i && plan[i].variable == plan[j].variable) {
        throw std::invalid_argument("residue plan integrates a variable twice");
      }
    }
  }
  for (const auto& step : plan) {
    f = residue_at(f, step.variable, step.center);
    if (f.is_zero()) break;
  }
  for (Atom a : f.atoms()) {
    if (!is_fixed_atom(a)) throw std::invalid_argument("residue plan leaves a live variable unintegrated");
  }
  return f;
}

}  // namespace kzres
