#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "ceres/arith.hpp"

namespace ceres {

enum class BinOp { And, Or, Impl };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Propositional schema: indexed atoms, the schema variable X, connectives,
// and applications of defined symbols. Ground formulas are the same AST
// restricted to constant indices, no variable and no defined symbols.
struct Formula {
  struct Atom {
    std::string sym;
    ArithExpr idx;
    friend bool operator==(const Atom&, const Atom&) = default;
  };
  struct PropVar {
    friend bool operator==(const PropVar&, const PropVar&) = default;
  };
  struct Neg {
    FormulaPtr f;
  };
  struct Bin {
    BinOp op;
    FormulaPtr lhs, rhs;
  };
  struct DefAtom {
    std::string sym;
    ArithExpr idx;
    friend bool operator==(const DefAtom&, const DefAtom&) = default;
  };

  std::variant<Atom, PropVar, Neg, Bin, DefAtom> node;
};

bool operator==(const Formula& a, const Formula& b);
inline bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
bool equal(const FormulaPtr& a, const FormulaPtr& b);

FormulaPtr mkAtom(std::string sym, ArithExpr idx);
FormulaPtr mkPropVar();
FormulaPtr mkNeg(FormulaPtr f);
FormulaPtr mkBin(BinOp op, FormulaPtr l, FormulaPtr r);
FormulaPtr mkDefAtom(std::string sym, ArithExpr idx);

inline FormulaPtr mkAnd(FormulaPtr l, FormulaPtr r) { return mkBin(BinOp::And, std::move(l), std::move(r)); }
inline FormulaPtr mkOr(FormulaPtr l, FormulaPtr r) { return mkBin(BinOp::Or, std::move(l), std::move(r)); }
inline FormulaPtr mkImpl(FormulaPtr l, FormulaPtr r) { return mkBin(BinOp::Impl, std::move(l), std::move(r)); }

bool containsPropVar(const FormulaPtr& f);
bool containsParam(const FormulaPtr& f);       // any index with coeff > 0
bool mentionsSymbol(const FormulaPtr& f, const std::string& defSym);
bool isGround(const FormulaPtr& f);            // atoms at constant indices only
bool isAtomSchema(const FormulaPtr& f);

// F[X -> G]: definitions bind the variable, so DefAtom leaves are untouched.
FormulaPtr substPropVar(const FormulaPtr& f, const FormulaPtr& g);

// F[n -> a]: every index substituted, structure preserved.
FormulaPtr substParam(const FormulaPtr& f, const ArithExpr& a);

// DSL/display rendering with connectives /\ \/ -> ~.
std::string toString(const FormulaPtr& f);

} // namespace ceres
