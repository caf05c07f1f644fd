#pragma once

#include <memory>
#include <string>

#include "ceres/sequent.hpp"

namespace ceres {

enum class Rule {
  Ax,
  WL, WR, CL, CR, XL, XR,
  NegL, NegR,
  AndL1, AndL2, AndR,
  OrL, OrR1, OrR2,
  ImplL, ImplR,
  Cut,
  Def,
  Link,
};

const char* ruleName(Rule r);
bool isUnaryRule(Rule r);
bool isBinaryRule(Rule r);

struct Proof;
using ProofPtr = std::shared_ptr<const Proof>;

// LK proof schema tree. Payload use per rule:
//   Ax            formula = the atom schema P(a)
//   WL/WR         formula = weakening formula
//   XL/XR         pos     = index of the left one of the two swapped formulas
//   AndL1/OrR1    formula = the other (right) conjunct/disjunct
//   AndL2/OrR2    formula = the other (left) conjunct/disjunct
//   Cut           formula = cut formula
//   Def           sequent = stored conclusion
//   Link          name, arg (self-links inside a rec body must use arg n)
struct Proof {
  Rule rule{Rule::Ax};
  FormulaPtr formula;
  std::size_t pos{0};
  Sequent sequent;
  std::string name;
  ArithExpr arg;
  ProofPtr left, right;
};

ProofPtr mkAx(FormulaPtr atom);
ProofPtr mkUnary(Rule r, ProofPtr child);
ProofPtr mkUnaryF(Rule r, FormulaPtr payload, ProofPtr child);
ProofPtr mkExch(Rule r, std::size_t pos, ProofPtr child);
ProofPtr mkBinary(Rule r, ProofPtr l, ProofPtr rr);
ProofPtr mkCut(FormulaPtr cutFormula, ProofPtr l, ProofPtr r);
ProofPtr mkDef(Sequent conclusion, ProofPtr child);
ProofPtr mkLink(std::string name, ArithExpr arg);

bool equal(const ProofPtr& a, const ProofPtr& b);
bool containsLink(const ProofPtr& p);
bool containsLinkTo(const ProofPtr& p, const std::string& name);

// Replacement of the proof links targeting `name` by `body`. Structure
// otherwise unchanged; throws on links to a different symbol when
// `requireOnlyTarget` is set.
ProofPtr substLinks(const ProofPtr& p, const std::string& name, const ProofPtr& body,
                    bool requireOnlyTarget = false);

// Premise-index-directed configuration induced on a premise of an inference.
// `conclusion` and `premises` are the node's sequents; `omega` marks the
// conclusion. Pure position bookkeeping per rule.
Config inducedConfig(const Proof& node, const Sequent& conclusion,
                     const Sequent& premise0, const Sequent* premise1,
                     const Config& omega, std::size_t premiseIndex);

// True when the binary inference's principal formula is tracked in omega
// (cut is handled separately by callers).
bool principalMarked(const Proof& node, const Config& omega);

} // namespace ceres
