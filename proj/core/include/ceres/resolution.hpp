#pragma once

#include <deque>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ceres/clause.hpp"
#include "ceres/sequent.hpp"

namespace ceres {

struct ClauseSchema;
using CSPtr = std::shared_ptr<const ClauseSchema>;

// Modified clause schema: an atomic sequent schema, a composition, a clause
// variable, or a primitive-recursive defined clause symbol applied to an
// arithmetic expression.
struct ClauseSchema {
  enum class Kind { Literal, Compose, Var, App };
  Kind kind{Kind::Literal};
  Sequent lit;        // Literal (atom schemata only)
  CSPtr lhs, rhs;     // Compose
  std::string name;   // Var: variable name; App: defined clause symbol
  ArithExpr arg;      // App
};

CSPtr csLiteral(Sequent atoms);
CSPtr csCompose(CSPtr l, CSPtr r);
CSPtr csVar(std::string name);
CSPtr csApp(std::string name, ArithExpr arg);
bool equal(const CSPtr& a, const CSPtr& b);
std::string toString(const CSPtr& c);

struct ResSchema;
using RSPtr = std::shared_ptr<const ResSchema>;

// Resolution proof schema with weakening terms and clause-variable
// parameters at defined-symbol call sites.
struct ResSchema {
  enum class Kind { Leaf, Res, Weak, App };
  Kind kind{Kind::Leaf};
  CSPtr clause;                 // Leaf; Weak: the appended clause schema
  RSPtr lhs, rhs;               // Res children; Weak child in lhs
  FormulaPtr pivot;             // Res: atom schema
  std::string name;             // App
  ArithExpr arg;                // App
  std::vector<CSPtr> clauseArgs;  // App
};

RSPtr rsLeaf(CSPtr clause);
RSPtr rsRes(RSPtr l, RSPtr r, FormulaPtr pivotAtom);
RSPtr rsWeak(RSPtr child, CSPtr appended);
RSPtr rsApp(std::string name, ArithExpr arg, std::vector<CSPtr> clauseArgs);
bool equal(const RSPtr& a, const RSPtr& b);
std::string toString(const RSPtr& r);

// Ground resolution / w-resolution deduction tree. Nodes live in an arena so
// that deep chains tear down without recursion.
struct Deduction {
  enum class Kind { Leaf, Res, Weak };
  Kind kind{Kind::Leaf};
  Clause clause;          // end-clause of this node (leaves: as written)
  Atom pivot;             // Res
  Clause weakened;        // Weak: the appended clause D
  const Deduction* left{nullptr};
  const Deduction* right{nullptr};
};

class DeductionArena {
 public:
  const Deduction* leaf(Clause c);
  const Deduction* res(const Deduction* l, const Deduction* r, Atom pivot);
  const Deduction* weak(const Deduction* child, Clause d);
  std::size_t size() const { return nodes_.size(); }

 private:
  std::deque<Deduction> nodes_;
};

// Iterative walks; safe on chains of 2^16+ nodes.
std::size_t depth(const Deduction* d);
std::size_t leafCount(const Deduction* d);
std::size_t distinctLeafClauseCount(const Deduction* d);
void forEachLeaf(const Deduction* d, const std::function<void(const Deduction&)>& fn);

// Validates leaves against C (per-side set equality), every Res node against
// the resolvent of its children, and every Weak node against composition;
// returns the end-clause. Throws CheckError with a diagnostic otherwise.
Clause checkDeduction(const Deduction* d, const ClauseSet& c, bool allowWeakening);

bool isRefutation(const Deduction* d, const ClauseSet& c, bool allowWeakening);

std::string toString(const Deduction* d);

} // namespace ceres
