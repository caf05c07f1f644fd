#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ceres/sequent.hpp"

namespace ceres {

struct ClauseTerm;
using CTPtr = std::shared_ptr<const ClauseTerm>;

// Clause-set term schema: leaves are clause schemata (atomic sequent
// schemata), joined by (+) union and (*) composition-product, with defined
// symbols applied to an arithmetic expression. Var refers to a member of the
// enclosing mutually recursive group.
struct ClauseTerm {
  enum class Kind { Leaf, Plus, Times, Var, App };
  Kind kind{Kind::Leaf};
  Sequent clause;          // Leaf
  CTPtr lhs, rhs;          // Plus / Times
  std::string name;        // Var: member name; App: defined symbol
  ArithExpr arg;           // App
};

CTPtr ctLeaf(Sequent clauseSchema);
CTPtr ctPlus(CTPtr l, CTPtr r);
CTPtr ctTimes(CTPtr l, CTPtr r);
CTPtr ctVar(std::string member);
CTPtr ctApp(std::string name, ArithExpr arg);

bool equal(const CTPtr& a, const CTPtr& b);
bool containsTermVar(const CTPtr& t);
bool isGroundTerm(const CTPtr& t);  // no Var, no App, constant indices

// T[X_member -> r]; definitions bind their variables, so App leaves are
// untouched.
CTPtr substTermVar(const CTPtr& t, const std::string& member, const CTPtr& r);

std::string toString(const CTPtr& t);

struct CTDef {
  CTPtr base, rec;
};

// One mutually recursive group, in declaration order.
struct TermGroup {
  std::vector<std::string> members;
  std::map<std::string, CTDef> defs;
};

} // namespace ceres
