#pragma once

#include <map>
#include <optional>

#include "ceres/clause.hpp"
#include "ceres/formula.hpp"
#include "ceres/sequent.hpp"

namespace ceres {

// Total interpretation: finitely many atoms mapped, everything else false.
struct Interpretation {
  std::map<Atom, bool> assignment;

  bool value(const Atom& a) const {
    auto it = assignment.find(a);
    return it != assignment.end() && it->second;
  }
};

// Classical truth value of a ground formula.
bool truthValue(const FormulaPtr& f, const Interpretation& i);

// Sequent semantics: conjunction of the antecedent implies disjunction of
// the succedent.
bool truthValue(const Sequent& groundSequent, const Interpretation& i);
bool satisfies(const Clause& c, const Interpretation& i);
bool satisfies(const ClauseSet& s, const Interpretation& i);

// Exhaustive enumeration over the occurring atoms.
std::optional<Interpretation> satisfiableTruthTable(const ClauseSet& s);

// Unit propagation, pure literals, split on the least atom (false branch
// first); deterministic witness.
std::optional<Interpretation> satisfiableDpll(const ClauseSet& s);

// Dispatch per atom count: truth table up to 20 distinct atoms, DPLL beyond.
std::optional<Interpretation> satisfiable(const ClauseSet& s);

// S1 entails S2: every clause of S2 follows; decided by refuting S1 plus the
// negation units of the clause.
bool entails(const ClauseSet& s1, const ClauseSet& s2);

} // namespace ceres
