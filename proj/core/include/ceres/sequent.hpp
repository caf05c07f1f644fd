#pragma once

#include <string>
#include <vector>

#include "ceres/formula.hpp"

namespace ceres {

// Order-significant lists on both sides; doubles as sequent schema and
// ground sequent depending on its formulas.
struct Sequent {
  std::vector<FormulaPtr> ante, succ;
};

bool operator==(const Sequent& a, const Sequent& b);
inline bool operator!=(const Sequent& a, const Sequent& b) { return !(a == b); }

// Composition: concatenation per side, order preserved.
Sequent compose(const Sequent& s, const Sequent& t);

// Multiset inclusion per side (ground sequents).
bool subsequent(const Sequent& s, const Sequent& t);

Sequent substParamSequent(const Sequent& s, const ArithExpr& a);

bool isClauseSchema(const Sequent& s);  // atoms only

std::string toString(const Sequent& s);

// Marks over a sequent's positions; true = tracked (the black square).
struct Config {
  std::vector<bool> ante, succ;

  friend bool operator==(const Config&, const Config&) = default;

  static Config allOff(const Sequent& s);
  static Config allOn(const Sequent& s);
  bool matches(const Sequent& s) const {
    return ante.size() == s.ante.size() && succ.size() == s.succ.size();
  }
  // Canonical key "antebits|succbits", e.g. "010|1".
  std::string key() const;
};

// Subsequent selecting the marked positions, in order. Throws on length
// mismatch.
Sequent applyConfig(const Sequent& s, const Config& omega);

} // namespace ceres
