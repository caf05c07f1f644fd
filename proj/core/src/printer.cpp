#include "ceres/printer.hpp"

#include "ceres/error.hpp"

namespace ceres {

namespace {

// Formulas inside definition bodies print the schema variable as X, which
// re-parses to the same AST.
std::string printClause(const Clause& c) {
  std::string out;
  for (std::size_t i = 0; i < c.ante.size(); ++i) {
    if (i) out += ", ";
    out += toString(c.ante[i]);
  }
  out += c.ante.empty() ? "|-" : " |-";
  for (std::size_t i = 0; i < c.succ.size(); ++i) {
    out += i ? ", " : " ";
    out += toString(c.succ[i]);
  }
  return out;
}

} // namespace

std::string printProofTerm(const ProofPtr& p) {
  switch (p->rule) {
    case Rule::Ax:
      return "ax(" + toString(p->formula) + ")";
    case Rule::WL:
    case Rule::WR:
    case Rule::AndL1:
    case Rule::AndL2:
    case Rule::OrR1:
    case Rule::OrR2:
      return std::string(ruleName(p->rule)) + "(" + toString(p->formula) + ", " +
             printProofTerm(p->left) + ")";
    case Rule::CL:
    case Rule::CR:
    case Rule::NegL:
    case Rule::NegR:
    case Rule::ImplR:
      return std::string(ruleName(p->rule)) + "(" + printProofTerm(p->left) + ")";
    case Rule::XL:
    case Rule::XR:
      return std::string(ruleName(p->rule)) + "(" + std::to_string(p->pos) + ", " +
             printProofTerm(p->left) + ")";
    case Rule::AndR:
    case Rule::OrL:
    case Rule::ImplL:
      return std::string(ruleName(p->rule)) + "(" + printProofTerm(p->left) + ", " +
             printProofTerm(p->right) + ")";
    case Rule::Cut:
      return "cut(" + toString(p->formula) + ", " + printProofTerm(p->left) + ", " +
             printProofTerm(p->right) + ")";
    case Rule::Def:
      return "def(" + toString(p->sequent) + ", " + printProofTerm(p->left) + ")";
    case Rule::Link:
      return "link(" + p->name + ", " + toString(p->arg) + ")";
  }
  throw Error("bad proof node");
}

namespace {

std::string printClauseSchema(const CSPtr& c) {
  switch (c->kind) {
    case ClauseSchema::Kind::Literal:
      return "(" + toString(c->lit) + ")";
    case ClauseSchema::Kind::Compose:
      return printClauseSchema(c->lhs) + " o " + printClauseSchema(c->rhs);
    case ClauseSchema::Kind::Var:
      return c->name + "(n)";  // re-parses to the variable via the self rule
    case ClauseSchema::Kind::App:
      return c->name + "(" + toString(c->arg) + ")";
  }
  throw Error("bad clause schema");
}

// Variables of a res definition print bare (they are declared parameters).
std::string printClauseSchemaRes(const CSPtr& c, const std::vector<std::string>& params) {
  switch (c->kind) {
    case ClauseSchema::Kind::Literal:
      return "(" + toString(c->lit) + ")";
    case ClauseSchema::Kind::Compose:
      return printClauseSchemaRes(c->lhs, params) + " o " + printClauseSchemaRes(c->rhs, params);
    case ClauseSchema::Kind::Var:
      for (const auto& p : params)
        if (p == c->name) return c->name;
      return c->name + "(n)";
    case ClauseSchema::Kind::App:
      return c->name + "(" + toString(c->arg) + ")";
  }
  throw Error("bad clause schema");
}

std::string printResTerm(const RSPtr& r, const std::vector<std::string>& params) {
  switch (r->kind) {
    case ResSchema::Kind::Leaf:
      return printClauseSchemaRes(r->clause, params);
    case ResSchema::Kind::Res:
      return "r(" + printResTerm(r->lhs, params) + ", " + printResTerm(r->rhs, params) + "; " +
             toString(r->pivot) + ")";
    case ResSchema::Kind::Weak:
      return "w(" + printResTerm(r->lhs, params) + "; " +
             printClauseSchemaRes(r->clause, params) + ")";
    case ResSchema::Kind::App: {
      std::string out = r->name + "(" + toString(r->arg);
      for (std::size_t i = 0; i < r->clauseArgs.size(); ++i)
        out += (i == 0 ? "; " : ", ") + printClauseSchemaRes(r->clauseArgs[i], params);
      return out + ")";
    }
  }
  throw Error("bad resolution schema");
}

std::string printTerm(const CTPtr& t, bool paren) {
  switch (t->kind) {
    case ClauseTerm::Kind::Leaf:
      return "[" + toString(t->clause) + "]";
    case ClauseTerm::Kind::Plus: {
      std::string s = printTerm(t->lhs, true) + " + " + printTerm(t->rhs, true);
      return paren ? "(" + s + ")" : s;
    }
    case ClauseTerm::Kind::Times: {
      std::string s = printTerm(t->lhs, true) + " * " + printTerm(t->rhs, true);
      return paren ? "(" + s + ")" : s;
    }
    case ClauseTerm::Kind::Var:
      return t->name + "(n)";
    case ClauseTerm::Kind::App:
      return t->name + "(" + toString(t->arg) + ")";
  }
  throw Error("bad clause term");
}

} // namespace

std::string print(const DefEnv& env) {
  std::string out;
  for (const auto& d : env.formulas) {
    out += "formula " + d.name + " {\n";
    out += "  0 -> " + toString(d.base) + ";\n";
    out += "  n+1 -> " + toString(d.rec) + ";\n}\n\n";
  }
  for (const auto& d : env.clauseDefs) {
    out += "clause " + d.name + " {\n";
    out += "  0 -> " + printClauseSchema(d.base) + ";\n";
    out += "  n+1 -> " + printClauseSchema(d.rec) + ";\n}\n\n";
  }
  for (const auto& g : env.termGroups) {
    bool single = g.members.size() == 1;
    if (!single) out += "terms {\n";
    for (const auto& m : g.members) {
      const CTDef& d = g.defs.at(m);
      out += std::string(single ? "" : "  ") + (single ? "term " : "") + m + " {\n";
      out += std::string(single ? "" : "  ") + "  0 -> " + printTerm(d.base, false) + ";\n";
      out += std::string(single ? "" : "  ") + "  n+1 -> " + printTerm(d.rec, false) + ";\n";
      out += std::string(single ? "" : "  ") + "}\n";
    }
    out += single ? "\n" : "}\n\n";
  }
  for (const auto& d : env.resDefs) {
    out += "res " + d.name;
    if (!d.params.empty()) {
      out += "(";
      for (std::size_t i = 0; i < d.params.size(); ++i)
        out += (i ? ", " : "") + d.params[i];
      out += ")";
    }
    out += " {\n";
    out += "  0 -> " + printResTerm(d.base, d.params) + ";\n";
    out += "  n+1 -> " + printResTerm(d.rec, d.params) + ";\n}\n\n";
  }
  for (const auto& d : env.proofs) {
    out += "proof " + d.name + " {\n";
    out += "  end: " + toString(d.end) + ";\n";
    out += "  0 -> " + printProofTerm(d.base) + ";\n";
    out += "  n+1 -> " + printProofTerm(d.rec) + ";\n}\n\n";
  }
  for (const auto& [name, s] : env.sequents)
    out += "sequent " + name + ": " + toString(s) + ";\n\n";
  for (const auto& [name, s] : env.clauseSets) {
    out += "clauses " + name + " {\n";
    for (const auto& c : s.clauses) out += "  " + printClause(c) + ";\n";
    out += "}\n\n";
  }
  return out;
}

namespace {

bool sameFormula(const FormulaPtr& a, const FormulaPtr& b) { return equal(a, b); }

} // namespace

bool operator==(const DefEnv& a, const DefEnv& b) {
  if (a.formulas.size() != b.formulas.size() || a.proofs.size() != b.proofs.size() ||
      a.clauseDefs.size() != b.clauseDefs.size() || a.resDefs.size() != b.resDefs.size() ||
      a.termGroups.size() != b.termGroups.size() || a.sequents.size() != b.sequents.size() ||
      a.clauseSets.size() != b.clauseSets.size())
    return false;
  for (std::size_t i = 0; i < a.formulas.size(); ++i) {
    const auto& x = a.formulas[i];
    const auto& y = b.formulas[i];
    if (x.name != y.name || !sameFormula(x.base, y.base) || !sameFormula(x.rec, y.rec))
      return false;
  }
  for (std::size_t i = 0; i < a.proofs.size(); ++i) {
    const auto& x = a.proofs[i];
    const auto& y = b.proofs[i];
    if (x.name != y.name || x.end != y.end || !equal(x.base, y.base) || !equal(x.rec, y.rec))
      return false;
  }
  for (std::size_t i = 0; i < a.clauseDefs.size(); ++i) {
    const auto& x = a.clauseDefs[i];
    const auto& y = b.clauseDefs[i];
    if (x.name != y.name || !equal(x.base, y.base) || !equal(x.rec, y.rec)) return false;
  }
  for (std::size_t i = 0; i < a.resDefs.size(); ++i) {
    const auto& x = a.resDefs[i];
    const auto& y = b.resDefs[i];
    if (x.name != y.name || x.params != y.params || !equal(x.base, y.base) ||
        !equal(x.rec, y.rec))
      return false;
  }
  for (std::size_t i = 0; i < a.termGroups.size(); ++i) {
    const auto& x = a.termGroups[i];
    const auto& y = b.termGroups[i];
    if (x.members != y.members) return false;
    for (const auto& m : x.members) {
      if (!equal(x.defs.at(m).base, y.defs.at(m).base) ||
          !equal(x.defs.at(m).rec, y.defs.at(m).rec))
        return false;
    }
  }
  for (std::size_t i = 0; i < a.sequents.size(); ++i) {
    if (a.sequents[i].first != b.sequents[i].first ||
        a.sequents[i].second != b.sequents[i].second)
      return false;
  }
  for (std::size_t i = 0; i < a.clauseSets.size(); ++i) {
    if (a.clauseSets[i].first != b.clauseSets[i].first ||
        !(a.clauseSets[i].second == b.clauseSets[i].second))
      return false;
  }
  return true;
}

} // namespace ceres
