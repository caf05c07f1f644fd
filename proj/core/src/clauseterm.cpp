#include "ceres/clauseterm.hpp"

namespace ceres {

namespace {
CTPtr mk(ClauseTerm t) { return std::make_shared<ClauseTerm>(std::move(t)); }
} // namespace

CTPtr ctLeaf(Sequent clauseSchema) {
  ClauseTerm t;
  t.kind = ClauseTerm::Kind::Leaf;
  t.clause = std::move(clauseSchema);
  return mk(std::move(t));
}

CTPtr ctPlus(CTPtr l, CTPtr r) {
  ClauseTerm t;
  t.kind = ClauseTerm::Kind::Plus;
  t.lhs = std::move(l);
  t.rhs = std::move(r);
  return mk(std::move(t));
}

CTPtr ctTimes(CTPtr l, CTPtr r) {
  ClauseTerm t;
  t.kind = ClauseTerm::Kind::Times;
  t.lhs = std::move(l);
  t.rhs = std::move(r);
  return mk(std::move(t));
}

CTPtr ctVar(std::string member) {
  ClauseTerm t;
  t.kind = ClauseTerm::Kind::Var;
  t.name = std::move(member);
  return mk(std::move(t));
}

CTPtr ctApp(std::string name, ArithExpr arg) {
  ClauseTerm t;
  t.kind = ClauseTerm::Kind::App;
  t.name = std::move(name);
  t.arg = arg;
  return mk(std::move(t));
}

bool equal(const CTPtr& a, const CTPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ClauseTerm::Kind::Leaf: return a->clause == b->clause;
    case ClauseTerm::Kind::Plus:
    case ClauseTerm::Kind::Times: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    case ClauseTerm::Kind::Var: return a->name == b->name;
    case ClauseTerm::Kind::App: return a->name == b->name && a->arg == b->arg;
  }
  return false;
}

bool containsTermVar(const CTPtr& t) {
  if (!t) return false;
  if (t->kind == ClauseTerm::Kind::Var) return true;
  if (t->kind == ClauseTerm::Kind::Plus || t->kind == ClauseTerm::Kind::Times)
    return containsTermVar(t->lhs) || containsTermVar(t->rhs);
  return false;
}

bool isGroundTerm(const CTPtr& t) {
  if (!t) return true;
  switch (t->kind) {
    case ClauseTerm::Kind::Leaf: {
      for (const auto& f : t->clause.ante)
        if (!isGround(f)) return false;
      for (const auto& f : t->clause.succ)
        if (!isGround(f)) return false;
      return true;
    }
    case ClauseTerm::Kind::Plus:
    case ClauseTerm::Kind::Times:
      return isGroundTerm(t->lhs) && isGroundTerm(t->rhs);
    default:
      return false;
  }
}

CTPtr substTermVar(const CTPtr& t, const std::string& member, const CTPtr& r) {
  switch (t->kind) {
    case ClauseTerm::Kind::Var:
      return t->name == member ? r : t;
    case ClauseTerm::Kind::Plus: {
      auto l2 = substTermVar(t->lhs, member, r);
      auto r2 = substTermVar(t->rhs, member, r);
      return (l2 == t->lhs && r2 == t->rhs) ? t : ctPlus(l2, r2);
    }
    case ClauseTerm::Kind::Times: {
      auto l2 = substTermVar(t->lhs, member, r);
      auto r2 = substTermVar(t->rhs, member, r);
      return (l2 == t->lhs && r2 == t->rhs) ? t : ctTimes(l2, r2);
    }
    default:
      return t;
  }
}

namespace {

std::string render(const CTPtr& t, bool paren) {
  switch (t->kind) {
    case ClauseTerm::Kind::Leaf:
      return "[" + toString(t->clause) + "]";
    case ClauseTerm::Kind::Plus: {
      std::string s = render(t->lhs, true) + " + " + render(t->rhs, true);
      return paren ? "(" + s + ")" : s;
    }
    case ClauseTerm::Kind::Times: {
      std::string s = render(t->lhs, true) + " * " + render(t->rhs, true);
      return paren ? "(" + s + ")" : s;
    }
    case ClauseTerm::Kind::Var:
      return t->name + "(n)";
    case ClauseTerm::Kind::App:
      return t->name + "(" + toString(t->arg) + ")";
  }
  return "?";
}

} // namespace

std::string toString(const CTPtr& t) { return render(t, false); }

} // namespace ceres
