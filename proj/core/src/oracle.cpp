#include "ceres/oracle.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "ceres/error.hpp"

namespace ceres {

bool truthValue(const FormulaPtr& f, const Interpretation& i) {
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Formula::Atom>) {
          if (x.idx.coeff != 0) throw EvalError("truth value of a non-ground atom");
          return i.value(Atom{x.sym, x.idx.offset});
        } else if constexpr (std::is_same_v<T, Formula::Neg>) {
          return !truthValue(x.f, i);
        } else if constexpr (std::is_same_v<T, Formula::Bin>) {
          switch (x.op) {
            case BinOp::And: return truthValue(x.lhs, i) && truthValue(x.rhs, i);
            case BinOp::Or: return truthValue(x.lhs, i) || truthValue(x.rhs, i);
            case BinOp::Impl: return !truthValue(x.lhs, i) || truthValue(x.rhs, i);
          }
          return false;
        } else {
          throw EvalError("truth value of a non-ground formula");
        }
      },
      f->node);
}

bool truthValue(const Sequent& groundSequent, const Interpretation& i) {
  for (const auto& f : groundSequent.ante)
    if (!truthValue(f, i)) return true;
  for (const auto& f : groundSequent.succ)
    if (truthValue(f, i)) return true;
  return false;
}

bool satisfies(const Clause& c, const Interpretation& i) {
  for (const auto& a : c.ante)
    if (!i.value(a)) return true;
  for (const auto& a : c.succ)
    if (i.value(a)) return true;
  return false;
}

bool satisfies(const ClauseSet& s, const Interpretation& i) {
  for (const auto& c : s.clauses)
    if (!satisfies(c, i)) return false;
  return true;
}

namespace {

std::vector<Atom> distinctAtoms(const ClauseSet& s) {
  std::set<Atom> atoms;
  for (const auto& c : s.clauses) {
    atoms.insert(c.ante.begin(), c.ante.end());
    atoms.insert(c.succ.begin(), c.succ.end());
  }
  return {atoms.begin(), atoms.end()};
}

} // namespace

std::optional<Interpretation> satisfiableTruthTable(const ClauseSet& s) {
  std::vector<Atom> atoms = distinctAtoms(s);
  if (atoms.size() >= 63) throw Error("truth table over too many atoms");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << atoms.size()); ++mask) {
    Interpretation i;
    for (std::size_t b = 0; b < atoms.size(); ++b)
      if (mask & (std::uint64_t{1} << b)) i.assignment[atoms[b]] = true;
    if (satisfies(s, i)) return i;
  }
  return std::nullopt;
}

namespace {

// Clause under a partial assignment: satisfied, or the reduced clause.
struct DpllState {
  std::map<Atom, bool> assigned;

  bool assignedTrue(const Atom& a) const {
    auto it = assigned.find(a);
    return it != assigned.end() && it->second;
  }
  bool has(const Atom& a) const { return assigned.count(a) > 0; }
};

// A clause C = ante |- succ is the CNF clause (~ante) \/ succ: it is
// satisfied when some ante atom is false or some succ atom is true.
bool dpll(const ClauseSet& s, DpllState& st) {
  for (;;) {
    bool progress = false;
    // Unit propagation and conflict detection on the reduced clauses.
    for (const auto& c : s.clauses) {
      bool sat = false;
      std::vector<std::pair<Atom, bool>> open;  // (atom, value making it true)
      for (const auto& a : c.ante) {
        if (st.has(a)) {
          if (!st.assignedTrue(a)) sat = true;
        } else {
          open.push_back({a, false});
        }
      }
      for (const auto& a : c.succ) {
        if (st.has(a)) {
          if (st.assignedTrue(a)) sat = true;
        } else {
          open.push_back({a, true});
        }
      }
      if (sat) continue;
      if (open.empty()) return false;
      if (open.size() == 1) {
        st.assigned[open[0].first] = open[0].second;
        progress = true;
      }
    }
    if (progress) continue;

    // Pure literal elimination.
    std::map<Atom, std::pair<bool, bool>> polarity;  // (in ante, in succ)
    for (const auto& c : s.clauses) {
      bool sat = false;
      for (const auto& a : c.ante)
        if (st.has(a) && !st.assignedTrue(a)) sat = true;
      for (const auto& a : c.succ)
        if (st.has(a) && st.assignedTrue(a)) sat = true;
      if (sat) continue;
      for (const auto& a : c.ante)
        if (!st.has(a)) polarity[a].first = true;
      for (const auto& a : c.succ)
        if (!st.has(a)) polarity[a].second = true;
    }
    if (polarity.empty()) return true;  // every clause satisfied
    for (const auto& [atom, pol] : polarity) {
      if (pol.first != pol.second) {
        // ante-only atoms are falsified, succ-only atoms made true
        st.assigned[atom] = pol.second;
        progress = true;
      }
    }
    if (progress) continue;

    // Split on the canonically least open atom, false first.
    Atom pick = polarity.begin()->first;
    DpllState trial = st;
    trial.assigned[pick] = false;
    if (dpll(s, trial)) {
      st = std::move(trial);
      return true;
    }
    st.assigned[pick] = true;
  }
}

} // namespace

std::optional<Interpretation> satisfiableDpll(const ClauseSet& s) {
  DpllState st;
  if (!dpll(s, st)) return std::nullopt;
  Interpretation i;
  for (const auto& [a, v] : st.assigned)
    if (v) i.assignment[a] = true;
  return i;
}

std::optional<Interpretation> satisfiable(const ClauseSet& s) {
  if (distinctAtoms(s).size() <= 20) return satisfiableTruthTable(s);
  return satisfiableDpll(s);
}

bool entails(const ClauseSet& s1, const ClauseSet& s2) {
  for (const auto& c : s2.clauses) {
    ClauseSet query = s1;
    // Negation of c: its antecedent atoms forced true, succedent forced false.
    for (const auto& a : c.ante) query.insert(Clause{{}, {a}});
    for (const auto& a : c.succ) query.insert(Clause{{a}, {}});
    if (satisfiable(query)) return false;
  }
  return true;
}

} // namespace ceres
