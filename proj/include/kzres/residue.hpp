#pragma once

// Iterated residues of factored Laurent forms.
//
// The cycle attached to a numbering T is a torus on which t^b_s runs over the
// circle |t^b_s - z_{T(b)}| = eps*s. Integrating levels in ascending order,
// the variable t^b_s sits on the smallest circle still in play around its
// centre: every chain factor linking it to a level s+1 variable has its pole
// on a circle of radius (s+1)*eps, and every factor linking it to another
// centre has its pole a finite distance away. Only the centre itself lies
// inside, so each circle integral is the residue at the centre, and the
// remaining factors may be expanded in the local coordinate tau = t - centre.
// The radius eps is never represented.

#include <vector>

#include "kzres/factored.hpp"
#include "kzres/shapes.hpp"

namespace kzres {

struct LiveVariable {
  Box box;
  int level;
  Atom atom;
};

/// The integration variables t^b_s, r(b) > s >= 1, ordered by level and
/// then by reading order of the boxes.
class VariableRoster {
 public:
  VariableRoster() = default;
  explicit VariableRoster(const Partition& shape);

  const std::vector<LiveVariable>& variables() const { return vars_; }
  std::size_t size() const { return vars_.size(); }
  Atom atom(const Box& b, int level) const;
  /// Variables of one level, in reading order.
  std::vector<LiveVariable> level(int s) const;
  int levels() const { return levels_; }

 private:
  std::vector<LiveVariable> vars_;
  int levels_ = 0;
};

struct PowerProductForm {
  FactoredSum integrand;
  VariableRoster roster;
};

struct ResidueStep {
  Atom variable;
  Atom center;
  friend bool operator==(const ResidueStep&, const ResidueStep&) = default;
};

using ResiduePlan = std::vector<ResidueStep>;

/// Coefficient of tau^-1 after substituting variable = center + tau.
FactoredSum residue_at(const FactoredSum& f, Atom variable, Atom center);

/// Steps in roster order; t^b_s is centred at z_{T(b)}.
ResiduePlan residue_plan(const Numbering& t);
ResiduePlan residue_plan(const Numbering& t, const VariableRoster& roster);

/// Folds residue_at over the plan. Throws std::invalid_argument when a step
/// is centred on a variable that is still to be integrated, or when live
/// variables of f are not covered by the plan.
FactoredSum iterated_residue(FactoredSum f, const ResiduePlan& plan);

}  // namespace kzres
