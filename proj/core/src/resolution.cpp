#include "ceres/resolution.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ceres/error.hpp"

namespace ceres {

CSPtr csLiteral(Sequent atoms) {
  ClauseSchema c;
  c.kind = ClauseSchema::Kind::Literal;
  c.lit = std::move(atoms);
  return std::make_shared<ClauseSchema>(std::move(c));
}

CSPtr csCompose(CSPtr l, CSPtr r) {
  ClauseSchema c;
  c.kind = ClauseSchema::Kind::Compose;
  c.lhs = std::move(l);
  c.rhs = std::move(r);
  return std::make_shared<ClauseSchema>(std::move(c));
}

CSPtr csVar(std::string name) {
  ClauseSchema c;
  c.kind = ClauseSchema::Kind::Var;
  c.name = std::move(name);
  return std::make_shared<ClauseSchema>(std::move(c));
}

CSPtr csApp(std::string name, ArithExpr arg) {
  ClauseSchema c;
  c.kind = ClauseSchema::Kind::App;
  c.name = std::move(name);
  c.arg = arg;
  return std::make_shared<ClauseSchema>(std::move(c));
}

bool equal(const CSPtr& a, const CSPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ClauseSchema::Kind::Literal: return a->lit == b->lit;
    case ClauseSchema::Kind::Compose: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    case ClauseSchema::Kind::Var: return a->name == b->name;
    case ClauseSchema::Kind::App: return a->name == b->name && a->arg == b->arg;
  }
  return false;
}

std::string toString(const CSPtr& c) {
  switch (c->kind) {
    case ClauseSchema::Kind::Literal: return "(" + toString(c->lit) + ")";
    case ClauseSchema::Kind::Compose: return toString(c->lhs) + " o " + toString(c->rhs);
    case ClauseSchema::Kind::Var: return c->name;
    case ClauseSchema::Kind::App: return c->name + "(" + toString(c->arg) + ")";
  }
  return "?";
}

RSPtr rsLeaf(CSPtr clause) {
  ResSchema r;
  r.kind = ResSchema::Kind::Leaf;
  r.clause = std::move(clause);
  return std::make_shared<ResSchema>(std::move(r));
}

RSPtr rsRes(RSPtr l, RSPtr r, FormulaPtr pivotAtom) {
  ResSchema s;
  s.kind = ResSchema::Kind::Res;
  s.lhs = std::move(l);
  s.rhs = std::move(r);
  s.pivot = std::move(pivotAtom);
  return std::make_shared<ResSchema>(std::move(s));
}

RSPtr rsWeak(RSPtr child, CSPtr appended) {
  ResSchema s;
  s.kind = ResSchema::Kind::Weak;
  s.lhs = std::move(child);
  s.clause = std::move(appended);
  return std::make_shared<ResSchema>(std::move(s));
}

RSPtr rsApp(std::string name, ArithExpr arg, std::vector<CSPtr> clauseArgs) {
  ResSchema s;
  s.kind = ResSchema::Kind::App;
  s.name = std::move(name);
  s.arg = arg;
  s.clauseArgs = std::move(clauseArgs);
  return std::make_shared<ResSchema>(std::move(s));
}

bool equal(const RSPtr& a, const RSPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name || a->arg != b->arg) return false;
  if (!equal(a->clause, b->clause)) return false;
  if ((a->pivot != nullptr) != (b->pivot != nullptr)) return false;
  if (a->pivot && !equal(a->pivot, b->pivot)) return false;
  if (a->clauseArgs.size() != b->clauseArgs.size()) return false;
  for (std::size_t i = 0; i < a->clauseArgs.size(); ++i)
    if (!equal(a->clauseArgs[i], b->clauseArgs[i])) return false;
  return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
}

std::string toString(const RSPtr& r) {
  switch (r->kind) {
    case ResSchema::Kind::Leaf:
      return toString(r->clause);
    case ResSchema::Kind::Res:
      return "r(" + toString(r->lhs) + ", " + toString(r->rhs) + "; " + toString(r->pivot) + ")";
    case ResSchema::Kind::Weak:
      return "w(" + toString(r->lhs) + "; " + toString(r->clause) + ")";
    case ResSchema::Kind::App: {
      std::string s = r->name + "(" + toString(r->arg);
      for (const auto& c : r->clauseArgs) s += "; " + toString(c);
      return s + ")";
    }
  }
  return "?";
}

const Deduction* DeductionArena::leaf(Clause c) {
  Deduction d;
  d.kind = Deduction::Kind::Leaf;
  d.clause = std::move(c);
  nodes_.push_back(std::move(d));
  return &nodes_.back();
}

const Deduction* DeductionArena::res(const Deduction* l, const Deduction* r, Atom pivot) {
  Deduction d;
  d.kind = Deduction::Kind::Res;
  d.left = l;
  d.right = r;
  d.pivot = pivot;
  d.clause = resolvent(l->clause, r->clause, pivot);
  nodes_.push_back(std::move(d));
  return &nodes_.back();
}

const Deduction* DeductionArena::weak(const Deduction* child, Clause dd) {
  Deduction d;
  d.kind = Deduction::Kind::Weak;
  d.left = child;
  d.weakened = dd;
  Clause e = child->clause;
  e.ante.insert(e.ante.end(), dd.ante.begin(), dd.ante.end());
  e.succ.insert(e.succ.end(), dd.succ.begin(), dd.succ.end());
  d.clause = normalized(e);
  nodes_.push_back(std::move(d));
  return &nodes_.back();
}

namespace {

template <class Visit>
void postorder(const Deduction* root, Visit visit) {
  // Explicit stack; second flag marks "children done".
  std::vector<std::pair<const Deduction*, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [node, done] = stack.back();
    stack.pop_back();
    if (!node) continue;
    if (done) {
      visit(*node);
    } else {
      stack.push_back({node, true});
      stack.push_back({node->right, false});
      stack.push_back({node->left, false});
    }
  }
}

} // namespace

std::size_t depth(const Deduction* d) {
  // Weakening does not count towards depth; only Res nodes do.
  std::map<const Deduction*, std::size_t> memo;
  postorder(d, [&](const Deduction& x) {
    std::size_t v = 0;
    switch (x.kind) {
      case Deduction::Kind::Leaf: v = 0; break;
      case Deduction::Kind::Weak: v = memo[x.left]; break;
      case Deduction::Kind::Res:
        v = 1 + std::max(memo[x.left], memo[x.right]);
        break;
    }
    memo[&x] = v;
  });
  return memo[d];
}

std::size_t leafCount(const Deduction* d) {
  std::size_t n = 0;
  postorder(d, [&](const Deduction& x) {
    if (x.kind == Deduction::Kind::Leaf) ++n;
  });
  return n;
}

std::size_t distinctLeafClauseCount(const Deduction* d) {
  std::set<Clause> seen;
  postorder(d, [&](const Deduction& x) {
    if (x.kind == Deduction::Kind::Leaf) seen.insert(normalized(x.clause));
  });
  return seen.size();
}

void forEachLeaf(const Deduction* d, const std::function<void(const Deduction&)>& fn) {
  postorder(d, [&](const Deduction& x) {
    if (x.kind == Deduction::Kind::Leaf) fn(x);
  });
}

Clause checkDeduction(const Deduction* d, const ClauseSet& c, bool allowWeakening) {
  postorder(d, [&](const Deduction& x) {
    switch (x.kind) {
      case Deduction::Kind::Leaf: {
        if (!c.contains(x.clause))
          throw CheckError("leaf clause not in the clause set: " + toString(x.clause));
        break;
      }
      case Deduction::Kind::Res: {
        Clause want = resolvent(x.left->clause, x.right->clause, x.pivot);
        if (normalized(x.clause) != want)
          throw CheckError("bad resolvent at pivot " + toString(x.pivot) + ": stored " +
                           toString(x.clause) + ", expected " + toString(want));
        break;
      }
      case Deduction::Kind::Weak: {
        if (!allowWeakening)
          throw CheckError("weakening term not allowed in a plain resolution deduction");
        Clause e = x.left->clause;
        e.ante.insert(e.ante.end(), x.weakened.ante.begin(), x.weakened.ante.end());
        e.succ.insert(e.succ.end(), x.weakened.succ.begin(), x.weakened.succ.end());
        if (!setEqual(x.clause, e))
          throw CheckError("bad weakening result " + toString(x.clause));
        break;
      }
    }
  });
  return d->clause;
}

bool isRefutation(const Deduction* d, const ClauseSet& c, bool allowWeakening) {
  return checkDeduction(d, c, allowWeakening).empty();
}

std::string toString(const Deduction* d) {
  switch (d->kind) {
    case Deduction::Kind::Leaf:
      return "(" + toString(d->clause) + ")";
    case Deduction::Kind::Res:
      return "r(" + toString(d->left) + ", " + toString(d->right) + "; " +
             toString(d->pivot) + ")";
    case Deduction::Kind::Weak:
      return "w(" + toString(d->left) + "; " + toString(d->weakened) + ")";
  }
  return "?";
}

} // namespace ceres
