#include "ceres/eval.hpp"

#include <algorithm>
#include <functional>

#include "ceres/error.hpp"

namespace ceres {

std::optional<FormulaPtr> defStep(const FormulaPtr& f, const DefEnv& env) {
  auto* d = std::get_if<Formula::DefAtom>(&f->node);
  if (!d) return std::nullopt;
  const PropDef* pd = env.formula(d->sym);
  if (!pd) throw EvalError("undefined symbol " + d->sym);
  if (d->idx.coeff == 0 && d->idx.offset == 0) return pd->base;
  if (d->idx.offset >= 1) {
    ArithExpr prev{d->idx.coeff, d->idx.offset - 1};
    return substPropVar(substParam(pd->rec, prev), mkDefAtom(d->sym, prev));
  }
  return std::nullopt;  // symbolic index a*n with a >= 1
}

namespace {

void collectDefIndices(const FormulaPtr& f, const std::string& sym, std::vector<ArithExpr>& out) {
  if (auto* d = std::get_if<Formula::DefAtom>(&f->node)) {
    if (d->sym == sym) out.push_back(d->idx);
    return;
  }
  if (auto* n = std::get_if<Formula::Neg>(&f->node)) {
    collectDefIndices(n->f, sym, out);
    return;
  }
  if (auto* b = std::get_if<Formula::Bin>(&f->node)) {
    collectDefIndices(b->lhs, sym, out);
    collectDefIndices(b->rhs, sym, out);
  }
}

} // namespace

std::optional<FormulaPtr> foldStep(const FormulaPtr& g, const DefEnv& env) {
  for (const auto& pd : env.formulas) {
    if (equal(g, pd.base)) return mkDefAtom(pd.name, ArithExpr::constant(0));
    std::vector<ArithExpr> candidates;
    collectDefIndices(g, pd.name, candidates);
    for (const auto& prev : candidates) {
      FormulaPtr folded = mkDefAtom(pd.name, ArithExpr{prev.coeff, prev.offset + 1});
      if (auto step = defStep(folded, env); step && equal(*step, g)) return folded;
    }
  }
  return std::nullopt;
}

bool defEquivalent(const FormulaPtr& a, const FormulaPtr& b, const DefEnv& env) {
  if (equal(a, b)) return true;
  if (auto s = defStep(a, env); s && equal(*s, b)) return true;
  if (auto s = defStep(b, env); s && equal(*s, a)) return true;
  return false;
}

Evaluator::Evaluator(const DefEnv& env, std::size_t cacheLimit)
    : env_(env), cacheLimit_(cacheLimit) {}

void Evaluator::trimCaches() {
  if (cacheLimit_ == 0) return;
  if (formulaMemo_.size() > cacheLimit_) formulaMemo_.clear();
  if (proofMemo_.size() > cacheLimit_) proofMemo_.clear();
  if (termMemo_.size() > cacheLimit_) termMemo_.clear();
  if (clauseDefMemo_.size() > cacheLimit_) clauseDefMemo_.clear();
}

FormulaPtr Evaluator::definedInstance(const std::string& sym, std::uint64_t beta) {
  if (auto it = formulaMemo_.find({sym, beta}); it != formulaMemo_.end()) return it->second;
  const PropDef* pd = env_.formula(sym);
  if (!pd) throw EvalError("undefined symbol " + sym);
  // Find the highest cached level below beta, then iterate upwards.
  std::uint64_t start = 0;
  FormulaPtr cur;
  for (std::uint64_t b = beta; b-- > 0;) {
    if (auto it = formulaMemo_.find({sym, b}); it != formulaMemo_.end()) {
      start = b + 1;
      cur = it->second;
      break;
    }
  }
  if (!cur) {
    cur = evalFormula(pd->base, 0);
    formulaMemo_[{sym, 0}] = cur;
    start = 1;
  }
  for (std::uint64_t b = start; b <= beta; ++b) {
    cur = evalFormula(substPropVar(pd->rec, cur), b - 1);
    formulaMemo_[{sym, b}] = cur;
  }
  trimCaches();
  formulaMemo_[{sym, beta}] = cur;
  return cur;
}

FormulaPtr Evaluator::evalFormula(const FormulaPtr& f, std::uint64_t n) {
  return std::visit(
      [&](const auto& x) -> FormulaPtr {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Formula::Atom>) {
          return mkAtom(x.sym, ArithExpr::constant(evalArith(x.idx, n)));
        } else if constexpr (std::is_same_v<T, Formula::PropVar>) {
          throw EvalError("schema variable X has no evaluation");
        } else if constexpr (std::is_same_v<T, Formula::Neg>) {
          return mkNeg(evalFormula(x.f, n));
        } else if constexpr (std::is_same_v<T, Formula::Bin>) {
          return mkBin(x.op, evalFormula(x.lhs, n), evalFormula(x.rhs, n));
        } else {
          return definedInstance(x.sym, evalArith(x.idx, n));
        }
      },
      f->node);
}

Sequent Evaluator::evalSequent(const Sequent& s, std::uint64_t n) {
  Sequent r;
  r.ante.reserve(s.ante.size());
  r.succ.reserve(s.succ.size());
  for (const auto& f : s.ante) r.ante.push_back(evalFormula(f, n));
  for (const auto& f : s.succ) r.succ.push_back(evalFormula(f, n));
  return r;
}

Clause Evaluator::toClause(const Sequent& groundAtomic) const {
  Clause c;
  auto conv = [](const FormulaPtr& f) {
    auto* a = std::get_if<Formula::Atom>(&f->node);
    if (!a || a->idx.coeff != 0)
      throw EvalError("not a ground atom: " + toString(f));
    return Atom{a->sym, a->idx.offset};
  };
  for (const auto& f : groundAtomic.ante) c.ante.push_back(conv(f));
  for (const auto& f : groundAtomic.succ) c.succ.push_back(conv(f));
  return c;
}

Clause Evaluator::evalClause(const Sequent& clauseSchema, std::uint64_t n) {
  return toClause(evalSequent(clauseSchema, n));
}

// --- proof checking ---------------------------------------------------------

namespace {

std::vector<FormulaPtr> tail(const std::vector<FormulaPtr>& v, std::size_t from = 1) {
  return {v.begin() + static_cast<long>(from), v.end()};
}

std::vector<FormulaPtr> dropLast(const std::vector<FormulaPtr>& v, std::size_t k = 1) {
  return {v.begin(), v.end() - static_cast<long>(k)};
}

[[noreturn]] void fail(const Proof& node, const std::string& what) {
  throw CheckError(std::string(ruleName(node.rule)) + ": " + what);
}

bool sameList(const std::vector<FormulaPtr>& a, const std::vector<FormulaPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!equal(a[i], b[i])) return false;
  return true;
}

} // namespace

Sequent Evaluator::checkProof(const ProofPtr& p, const std::string& selfName,
                              std::map<const Proof*, Sequent>* annotations) {
  if (!p) throw CheckError("empty proof");
  auto rec = [&](const ProofPtr& q) { return checkProof(q, selfName, annotations); };
  Sequent out;
  switch (p->rule) {
    case Rule::Ax: {
      if (!p->formula || !isAtomSchema(p->formula))
        fail(*p, "axiom must be P(a) |- P(a) over an atom schema");
      out = {{p->formula}, {p->formula}};
      break;
    }
    case Rule::Link: {
      const ProofDef* target = env_.proof(p->name);
      if (!target) fail(*p, "link to undefined proof " + p->name);
      out = substParamSequent(target->end, p->arg);
      break;
    }
    case Rule::WL: {
      Sequent s = rec(p->left);
      if (!p->formula) fail(*p, "missing weakening formula");
      out.ante.push_back(p->formula);
      out.ante.insert(out.ante.end(), s.ante.begin(), s.ante.end());
      out.succ = s.succ;
      break;
    }
    case Rule::WR: {
      Sequent s = rec(p->left);
      if (!p->formula) fail(*p, "missing weakening formula");
      out = s;
      out.succ.push_back(p->formula);
      break;
    }
    case Rule::CL: {
      Sequent s = rec(p->left);
      if (s.ante.size() < 2 || !equal(s.ante[0], s.ante[1]))
        fail(*p, "premise must start with two equal formulas");
      out = {tail(s.ante), s.succ};
      break;
    }
    case Rule::CR: {
      Sequent s = rec(p->left);
      std::size_t k = s.succ.size();
      if (k < 2 || !equal(s.succ[k - 1], s.succ[k - 2]))
        fail(*p, "premise must end with two equal formulas");
      out = {s.ante, dropLast(s.succ)};
      break;
    }
    case Rule::XL: {
      Sequent s = rec(p->left);
      if (p->pos + 1 >= s.ante.size()) fail(*p, "exchange position out of range");
      out = s;
      std::swap(out.ante[p->pos], out.ante[p->pos + 1]);
      break;
    }
    case Rule::XR: {
      Sequent s = rec(p->left);
      if (p->pos + 1 >= s.succ.size()) fail(*p, "exchange position out of range");
      out = s;
      std::swap(out.succ[p->pos], out.succ[p->pos + 1]);
      break;
    }
    case Rule::NegL: {
      Sequent s = rec(p->left);
      if (s.succ.empty()) fail(*p, "premise needs a succedent formula");
      out.ante.push_back(mkNeg(s.succ.back()));
      out.ante.insert(out.ante.end(), s.ante.begin(), s.ante.end());
      out.succ = dropLast(s.succ);
      break;
    }
    case Rule::NegR: {
      Sequent s = rec(p->left);
      if (s.ante.empty()) fail(*p, "premise needs an antecedent formula");
      out.ante = tail(s.ante);
      out.succ = s.succ;
      out.succ.push_back(mkNeg(s.ante.front()));
      break;
    }
    case Rule::AndL1: {
      Sequent s = rec(p->left);
      if (s.ante.empty() || !p->formula) fail(*p, "needs head formula and payload");
      out.ante.push_back(mkAnd(s.ante.front(), p->formula));
      auto t = tail(s.ante);
      out.ante.insert(out.ante.end(), t.begin(), t.end());
      out.succ = s.succ;
      break;
    }
    case Rule::AndL2: {
      Sequent s = rec(p->left);
      if (s.ante.empty() || !p->formula) fail(*p, "needs head formula and payload");
      out.ante.push_back(mkAnd(p->formula, s.ante.front()));
      auto t = tail(s.ante);
      out.ante.insert(out.ante.end(), t.begin(), t.end());
      out.succ = s.succ;
      break;
    }
    case Rule::OrR1: {
      Sequent s = rec(p->left);
      if (s.succ.empty() || !p->formula) fail(*p, "needs last formula and payload");
      out.ante = s.ante;
      out.succ = dropLast(s.succ);
      out.succ.push_back(mkOr(s.succ.back(), p->formula));
      break;
    }
    case Rule::OrR2: {
      Sequent s = rec(p->left);
      if (s.succ.empty() || !p->formula) fail(*p, "needs last formula and payload");
      out.ante = s.ante;
      out.succ = dropLast(s.succ);
      out.succ.push_back(mkOr(p->formula, s.succ.back()));
      break;
    }
    case Rule::ImplR: {
      Sequent s = rec(p->left);
      if (s.ante.empty() || s.succ.empty()) fail(*p, "premise needs F,Gamma |- Delta,G");
      out.ante = tail(s.ante);
      out.succ = dropLast(s.succ);
      out.succ.push_back(mkImpl(s.ante.front(), s.succ.back()));
      break;
    }
    case Rule::AndR: {
      Sequent l = rec(p->left), r = rec(p->right);
      if (l.succ.empty() || r.succ.empty()) fail(*p, "premises need succedent formulas");
      if (!sameList(l.ante, r.ante) || !sameList(dropLast(l.succ), dropLast(r.succ)))
        fail(*p, "premise contexts differ");
      out.ante = l.ante;
      out.succ = dropLast(l.succ);
      out.succ.push_back(mkAnd(l.succ.back(), r.succ.back()));
      break;
    }
    case Rule::OrL: {
      Sequent l = rec(p->left), r = rec(p->right);
      if (l.ante.empty() || r.ante.empty()) fail(*p, "premises need antecedent formulas");
      if (!sameList(tail(l.ante), tail(r.ante)) || !sameList(l.succ, r.succ))
        fail(*p, "premise contexts differ");
      out.ante.push_back(mkOr(l.ante.front(), r.ante.front()));
      auto t = tail(l.ante);
      out.ante.insert(out.ante.end(), t.begin(), t.end());
      out.succ = l.succ;
      break;
    }
    case Rule::ImplL: {
      Sequent l = rec(p->left), r = rec(p->right);
      if (l.succ.empty() || r.ante.empty()) fail(*p, "premises need auxiliary formulas");
      out.ante.push_back(mkImpl(l.succ.back(), r.ante.front()));
      out.ante.insert(out.ante.end(), l.ante.begin(), l.ante.end());
      auto t = tail(r.ante);
      out.ante.insert(out.ante.end(), t.begin(), t.end());
      out.succ = dropLast(l.succ);
      out.succ.insert(out.succ.end(), r.succ.begin(), r.succ.end());
      break;
    }
    case Rule::Cut: {
      Sequent l = rec(p->left), r = rec(p->right);
      if (!p->formula) fail(*p, "missing cut formula");
      if (l.succ.empty() || !equal(l.succ.back(), p->formula))
        fail(*p, "left premise must end with the cut formula in the succedent");
      if (r.ante.empty() || !equal(r.ante.front(), p->formula))
        fail(*p, "right premise must start with the cut formula in the antecedent");
      out.ante = l.ante;
      auto t = tail(r.ante);
      out.ante.insert(out.ante.end(), t.begin(), t.end());
      out.succ = dropLast(l.succ);
      out.succ.insert(out.succ.end(), r.succ.begin(), r.succ.end());
      break;
    }
    case Rule::Def: {
      Sequent s = rec(p->left);
      const Sequent& c = p->sequent;
      if (c.ante.size() != s.ante.size() || c.succ.size() != s.succ.size())
        fail(*p, "def must preserve the sequent shape");
      for (std::size_t i = 0; i < c.ante.size(); ++i)
        if (!defEquivalent(c.ante[i], s.ante[i], env_))
          fail(*p, "antecedent position " + std::to_string(i) + " does not unfold: " +
                       toString(c.ante[i]) + " vs " + toString(s.ante[i]));
      for (std::size_t i = 0; i < c.succ.size(); ++i)
        if (!defEquivalent(c.succ[i], s.succ[i], env_))
          fail(*p, "succedent position " + std::to_string(i) + " does not unfold: " +
                       toString(c.succ[i]) + " vs " + toString(s.succ[i]));
      out = c;
      break;
    }
  }
  if (annotations) (*annotations)[p.get()] = out;
  return out;
}

namespace {

bool paramFreeProof(const ProofPtr& p) {
  if (!p) return true;
  auto pf = [](const FormulaPtr& f) { return !f || !containsParam(f); };
  if (!pf(p->formula)) return false;
  for (const auto& f : p->sequent.ante)
    if (!pf(f)) return false;
  for (const auto& f : p->sequent.succ)
    if (!pf(f)) return false;
  if (p->rule == Rule::Link && p->arg.coeff != 0) return false;
  return paramFreeProof(p->left) && paramFreeProof(p->right);
}

void checkSelfLinksAtN(const ProofPtr& p, const std::string& name) {
  if (!p) return;
  if (p->rule == Rule::Link && p->name == name && p->arg != ArithExpr::var())
    throw CheckError("self proof link " + name + "(" + toString(p->arg) +
                     ") must use the parameter n");
  checkSelfLinksAtN(p->left, name);
  checkSelfLinksAtN(p->right, name);
}

} // namespace

void Evaluator::checkProofDef(const ProofDef& d) {
  if (containsLinkTo(d.base, d.name))
    throw CheckError("proof " + d.name + ": base case must not link to itself");
  if (!paramFreeProof(d.base))
    throw CheckError("proof " + d.name + ": base case must not mention n");
  checkSelfLinksAtN(d.rec, d.name);

  Sequent baseEnd = checkProof(d.base, d.name);
  Sequent want0 = substParamSequent(d.end, ArithExpr::constant(0));
  if (evalSequent(baseEnd, 0) != evalSequent(want0, 0))
    throw CheckError("proof " + d.name + ": base end-sequent " + toString(baseEnd) +
                     " does not evaluate to " + toString(want0));

  Sequent recEnd = checkProof(d.rec, d.name);
  Sequent want1 = substParamSequent(d.end, ArithExpr{1, 1});
  if (recEnd != want1)
    throw CheckError("proof " + d.name + ": step end-sequent " + toString(recEnd) +
                     ", declared " + toString(want1));
}

ProofPtr Evaluator::evalProof(const std::string& name, std::uint64_t k) {
  if (auto it = proofMemo_.find({name, k}); it != proofMemo_.end()) return it->second;
  const ProofDef* pd = env_.proof(name);
  if (!pd) throw EvalError("undefined proof " + name);
  // Iterative over levels so that deep recursions do not nest native frames.
  std::uint64_t start = 0;
  ProofPtr cur;
  for (std::uint64_t b = k; b-- > 0;) {
    if (auto it = proofMemo_.find({name, b}); it != proofMemo_.end()) {
      start = b + 1;
      cur = it->second;
      break;
    }
  }
  if (!cur) {
    cur = evalProofBody(pd->base, 0);
    proofMemo_[{name, 0}] = cur;
    start = 1;
  }
  for (std::uint64_t b = start; b <= k; ++b) {
    cur = evalProofBody(pd->rec, b - 1, name, cur);
    proofMemo_[{name, b}] = cur;
  }
  trimCaches();
  proofMemo_[{name, k}] = cur;
  return cur;
}

ProofPtr Evaluator::evalProofBody(const ProofPtr& p, std::uint64_t n,
                                  const std::string& selfName, const ProofPtr& selfGround) {
  if (!p) return p;
  switch (p->rule) {
    case Rule::Ax:
      return mkAx(evalFormula(p->formula, n));
    case Rule::Def:
      // def inferences are erased by evaluation
      return evalProofBody(p->left, n, selfName, selfGround);
    case Rule::Link: {
      if (!selfName.empty() && p->name == selfName) return selfGround;
      return evalProof(p->name, evalArith(p->arg, n));
    }
    default: {
      Proof q;
      q.rule = p->rule;
      q.pos = p->pos;
      if (p->formula) q.formula = evalFormula(p->formula, n);
      q.left = evalProofBody(p->left, n, selfName, selfGround);
      q.right = evalProofBody(p->right, n, selfName, selfGround);
      return std::make_shared<Proof>(std::move(q));
    }
  }
}

// --- clause set terms ---------------------------------------------------------

const std::map<std::string, CTPtr>& Evaluator::groupLevel(std::size_t group, std::uint64_t level) {
  GroupSeqKey key{group, level};
  if (auto it = termMemo_.find(key); it != termMemo_.end()) return it->second;
  const TermGroup& g = env_.termGroups[group];
  // Iterate levels bottom-up; each level copies the previous one so cache
  // trimming cannot invalidate it mid-step.
  std::uint64_t start = 0;
  std::map<std::string, CTPtr> prev;
  for (std::uint64_t b = level; b-- > 0;) {
    if (auto it = termMemo_.find(GroupSeqKey{group, b}); it != termMemo_.end()) {
      prev = it->second;
      start = b + 1;
      break;
    }
  }
  if (start == 0) {
    for (const auto& m : g.members) prev[m] = evalCT(g.defs.at(m).base, 0);
    termMemo_[GroupSeqKey{group, 0}] = prev;
    start = 1;
  }
  for (std::uint64_t b = start; b <= level; ++b) {
    std::map<std::string, CTPtr> cur;
    for (const auto& m : g.members) {
      CTPtr body = g.defs.at(m).rec;
      for (const auto& [name, value] : prev) body = substTermVar(body, name, value);
      cur[m] = evalCT(body, b - 1);
    }
    termMemo_[GroupSeqKey{group, b}] = cur;
    prev = std::move(cur);
  }
  trimCaches();
  return termMemo_[key] = std::move(prev);
}

CTPtr Evaluator::evalCT(const CTPtr& t, std::uint64_t n) {
  switch (t->kind) {
    case ClauseTerm::Kind::Leaf:
      return ctLeaf(evalSequent(t->clause, n));
    case ClauseTerm::Kind::Plus:
      return ctPlus(evalCT(t->lhs, n), evalCT(t->rhs, n));
    case ClauseTerm::Kind::Times:
      return ctTimes(evalCT(t->lhs, n), evalCT(t->rhs, n));
    case ClauseTerm::Kind::Var:
      throw EvalError("free clause set term variable " + t->name);
    case ClauseTerm::Kind::App: {
      auto member = env_.termMember(t->name);
      if (!member) throw EvalError("undefined clause set term symbol " + t->name);
      return groupLevel(member->first, evalArith(t->arg, n)).at(member->second);
    }
  }
  throw EvalError("bad clause term");
}

ClauseSet Evaluator::ctSemantics(const CTPtr& ground) {
  switch (ground->kind) {
    case ClauseTerm::Kind::Leaf: {
      ClauseSet s;
      s.insert(toClause(ground->clause));
      return s;
    }
    case ClauseTerm::Kind::Plus:
      return setUnion(ctSemantics(ground->lhs), ctSemantics(ground->rhs));
    case ClauseTerm::Kind::Times:
      return setProduct(ctSemantics(ground->lhs), ctSemantics(ground->rhs));
    default:
      throw EvalError("clause term semantics needs a ground term");
  }
}

ClauseSet Evaluator::evalClauseSetOf(const CTPtr& t, std::uint64_t n) {
  return ctSemantics(evalCT(t, n));
}

// --- clause schemata and resolution ------------------------------------------

Clause Evaluator::unfoldClauseDef(const std::string& name, std::uint64_t k) {
  if (auto it = clauseDefMemo_.find({name, k}); it != clauseDefMemo_.end()) return it->second;
  const ClauseDef* cd = env_.clauseDef(name);
  if (!cd) throw EvalError("undefined clause symbol " + name);
  Clause cur;
  std::uint64_t start = 0;
  bool have = false;
  for (std::uint64_t b = k; b-- > 0;) {
    if (auto it = clauseDefMemo_.find({name, b}); it != clauseDefMemo_.end()) {
      cur = it->second;
      start = b + 1;
      have = true;
      break;
    }
  }
  if (!have) {
    cur = evalClauseSchema(cd->base, 0, {});
    clauseDefMemo_[{name, 0}] = cur;
    start = 1;
  }
  for (std::uint64_t b = start; b <= k; ++b) {
    cur = evalClauseSchema(cd->rec, b - 1, {{name, cur}});
    clauseDefMemo_[{name, b}] = cur;
  }
  return clauseDefMemo_.at({name, k});
}

Clause Evaluator::evalClauseSchema(const CSPtr& c, std::uint64_t n,
                                   const std::map<std::string, Clause>& clauseVars) {
  switch (c->kind) {
    case ClauseSchema::Kind::Literal:
      return evalClause(c->lit, n);
    case ClauseSchema::Kind::Compose: {
      Clause l = evalClauseSchema(c->lhs, n, clauseVars);
      Clause r = evalClauseSchema(c->rhs, n, clauseVars);
      l.ante.insert(l.ante.end(), r.ante.begin(), r.ante.end());
      l.succ.insert(l.succ.end(), r.succ.begin(), r.succ.end());
      return l;
    }
    case ClauseSchema::Kind::Var: {
      auto it = clauseVars.find(c->name);
      if (it == clauseVars.end()) throw EvalError("unbound clause variable " + c->name);
      return it->second;
    }
    case ClauseSchema::Kind::App:
      return unfoldClauseDef(c->name, evalArith(c->arg, n));
  }
  throw EvalError("bad clause schema");
}

namespace {

void collectSelfApps(const RSPtr& r, const std::string& self,
                     std::vector<const ResSchema*>& out) {
  if (!r) return;
  if (r->kind == ResSchema::Kind::App && r->name == self) out.push_back(r.get());
  collectSelfApps(r->lhs, self, out);
  collectSelfApps(r->rhs, self, out);
}

} // namespace

const Deduction* Evaluator::unfoldResDef(const std::string& name, std::uint64_t k,
                                         const std::vector<Clause>& args,
                                         DeductionArena& arena) {
  const ResDef* rd = env_.resDef(name);
  if (!rd) throw EvalError("undefined resolution symbol " + name);
  if (args.size() != rd->params.size())
    throw EvalError("resolution symbol " + name + " expects " +
                    std::to_string(rd->params.size()) + " clause arguments");
  auto bindOf = [&](const std::vector<Clause>& a) {
    std::map<std::string, Clause> bind;
    for (std::size_t i = 0; i < a.size(); ++i) bind[rd->params[i]] = a[i];
    return bind;
  };

  std::vector<const ResSchema*> selfApps;
  collectSelfApps(rd->rec, name, selfApps);
  const ResSchema* selfApp = selfApps.empty() ? nullptr : selfApps.front();

  // Deep chains (one self-application per step) unfold level by level so
  // that 2^16-node deductions never nest native stack frames.
  if (selfApps.size() == 1 && k > 64) {
    std::vector<std::vector<Clause>> argChain(k + 1);
    argChain[k] = args;
    for (std::uint64_t m = k; m >= 1; --m) {
      auto bind = bindOf(argChain[m]);
      std::vector<Clause> next;
      next.reserve(selfApp->clauseArgs.size());
      for (const auto& c : selfApp->clauseArgs)
        next.push_back(evalClauseSchema(c, m - 1, bind));
      argChain[m - 1] = std::move(next);
      if (m == 1) break;
    }
    SelfOverride over{name, nullptr};
    const Deduction* cur = evalRes(rd->base, 0, arena, bindOf(argChain[0]));
    for (std::uint64_t m = 1; m <= k; ++m) {
      over.result = cur;
      cur = evalRes(rd->rec, m - 1, arena, bindOf(argChain[m]), &over);
    }
    return cur;
  }

  if (k == 0) return evalRes(rd->base, 0, arena, bindOf(args));
  return evalRes(rd->rec, k - 1, arena, bindOf(args));
}

const Deduction* Evaluator::evalRes(const RSPtr& r, std::uint64_t n, DeductionArena& arena,
                                    const std::map<std::string, Clause>& clauseVars,
                                    const SelfOverride* self) {
  switch (r->kind) {
    case ResSchema::Kind::Leaf:
      return arena.leaf(evalClauseSchema(r->clause, n, clauseVars));
    case ResSchema::Kind::Res: {
      auto* a = std::get_if<Formula::Atom>(&r->pivot->node);
      if (!a) throw EvalError("resolution pivot must be an atom schema");
      const Deduction* l = evalRes(r->lhs, n, arena, clauseVars, self);
      const Deduction* rr = evalRes(r->rhs, n, arena, clauseVars, self);
      return arena.res(l, rr, Atom{a->sym, evalArith(a->idx, n)});
    }
    case ResSchema::Kind::Weak: {
      const Deduction* c = evalRes(r->lhs, n, arena, clauseVars, self);
      return arena.weak(c, evalClauseSchema(r->clause, n, clauseVars));
    }
    case ResSchema::Kind::App: {
      if (self && r->name == self->name) return self->result;
      std::vector<Clause> args;
      args.reserve(r->clauseArgs.size());
      for (const auto& c : r->clauseArgs) args.push_back(evalClauseSchema(c, n, clauseVars));
      return unfoldResDef(r->name, evalArith(r->arg, n), args, arena);
    }
  }
  throw EvalError("bad resolution schema");
}

// --- clause bound ---------------------------------------------------------------

namespace {

std::size_t countSelfApps(const RSPtr& r, const std::string& self) {
  if (!r) return 0;
  std::size_t n = r->kind == ResSchema::Kind::App && r->name == self ? 1 : 0;
  if (r->lhs) n += countSelfApps(r->lhs, self);
  if (r->rhs) n += countSelfApps(r->rhs, self);
  return n;
}

} // namespace

ClauseBound Evaluator::resDefBound(const std::string& name) {
  if (auto it = boundMemo_.find(name); it != boundMemo_.end()) return it->second;
  const ResDef* rd = env_.resDef(name);
  if (!rd) throw EvalError("undefined resolution symbol " + name);

  bool exact = true;
  // Polynomial weight of a body: every clause leaf is one slot (variables
  // inside it add nothing); self-applications count zero, like the
  // recursion variable they stand for.
  auto weigh = [&](const RSPtr& body, auto&& weighRef) -> Polynomial {
    if (!body) return {};
    switch (body->kind) {
      case ResSchema::Kind::Leaf:
        return Polynomial::constant(Rational{1});
      case ResSchema::Kind::Res:
        return weighRef(body->lhs, weighRef) + weighRef(body->rhs, weighRef);
      case ResSchema::Kind::Weak:
        return weighRef(body->lhs, weighRef) + Polynomial::constant(Rational{1});
      case ResSchema::Kind::App: {
        if (body->name == name) return {};
        ClauseBound sub = resDefBound(body->name);
        exact = exact && sub.exact;
        return composeLinear(sub.poly, body->arg.coeff, body->arg.offset);
      }
    }
    return {};
  };

  Polynomial basePoly = weigh(rd->base, weigh);
  if (basePoly.degree() > 0)
    throw EvalError("resolution base of " + name + " must not mention n");
  Rational k = basePoly.coeffs.empty() ? Rational{0} : basePoly.coeffs[0];
  Polynomial p = weigh(rd->rec, weigh);
  std::size_t selfCount = countSelfApps(rd->rec, name);

  ClauseBound out;
  if (selfCount <= 1) {
    out.poly = iterateSum(k, p);
    out.exact = exact;
  } else {
    // More than one self-recursion per step grows the true count
    // super-polynomially; interpolate the exact values on 0..8 and flag the
    // bound as advisory beyond that window.
    std::vector<std::pair<Rational, Rational>> pts;
    Rational v = k;
    for (std::uint64_t m = 0; m <= 8; ++m) {
      pts.push_back({Rational{static_cast<std::int64_t>(m)}, v});
      Rational step = evalPoly(p, m);
      v = v * Rational{static_cast<std::int64_t>(selfCount)} + step;
    }
    out.poly = interpolate(pts);
    out.exact = false;
  }
  boundMemo_[name] = out;
  return out;
}

ClauseBound Evaluator::clauseBound(const RSPtr& r) {
  bool exact = true;
  auto go = [&](const RSPtr& body, auto&& goRef) -> Polynomial {
    switch (body->kind) {
      case ResSchema::Kind::Leaf:
        return Polynomial::constant(Rational{1});
      case ResSchema::Kind::Res:
        return goRef(body->lhs, goRef) + goRef(body->rhs, goRef);
      case ResSchema::Kind::Weak:
        return goRef(body->lhs, goRef) + Polynomial::constant(Rational{1});
      case ResSchema::Kind::App: {
        ClauseBound sub = resDefBound(body->name);
        exact = exact && sub.exact;
        return composeLinear(sub.poly, body->arg.coeff, body->arg.offset);
      }
    }
    return {};
  };
  ClauseBound out;
  out.poly = go(r, go);
  out.exact = exact;
  return out;
}

// --- environment validation -----------------------------------------------------

namespace {

void forEachDefAtom(const FormulaPtr& f, const std::function<void(const Formula::DefAtom&)>& fn) {
  if (auto* d = std::get_if<Formula::DefAtom>(&f->node)) {
    fn(*d);
    return;
  }
  if (auto* n = std::get_if<Formula::Neg>(&f->node)) {
    forEachDefAtom(n->f, fn);
    return;
  }
  if (auto* b = std::get_if<Formula::Bin>(&f->node)) {
    forEachDefAtom(b->lhs, fn);
    forEachDefAtom(b->rhs, fn);
  }
}

bool csContainsVarOtherThan(const CSPtr& c, const std::vector<std::string>& allowed) {
  switch (c->kind) {
    case ClauseSchema::Kind::Var:
      return std::find(allowed.begin(), allowed.end(), c->name) == allowed.end();
    case ClauseSchema::Kind::Compose:
      return csContainsVarOtherThan(c->lhs, allowed) || csContainsVarOtherThan(c->rhs, allowed);
    default:
      return false;
  }
}

void forEachResApp(const RSPtr& r, const std::function<void(const ResSchema&)>& fn) {
  if (!r) return;
  if (r->kind == ResSchema::Kind::App) fn(*r);
  if (r->lhs) forEachResApp(r->lhs, fn);
  if (r->rhs) forEachResApp(r->rhs, fn);
}

void forEachResLeafClause(const RSPtr& r, const std::function<void(const CSPtr&)>& fn) {
  if (!r) return;
  if (r->kind == ResSchema::Kind::Leaf || r->kind == ResSchema::Kind::Weak) fn(r->clause);
  if (r->kind == ResSchema::Kind::App)
    for (const auto& c : r->clauseArgs) fn(c);
  if (r->lhs) forEachResLeafClause(r->lhs, fn);
  if (r->rhs) forEachResLeafClause(r->rhs, fn);
}

void forEachTermNode(const CTPtr& t, const std::function<void(const ClauseTerm&)>& fn) {
  if (!t) return;
  fn(*t);
  if (t->lhs) forEachTermNode(t->lhs, fn);
  if (t->rhs) forEachTermNode(t->rhs, fn);
}

} // namespace

void Evaluator::validate() {
  for (std::size_t i = 0; i < env_.formulas.size(); ++i) {
    const PropDef& d = env_.formulas[i];
    if (containsPropVar(d.base))
      throw CheckError("formula " + d.name + ": base case must not use X");
    if (containsParam(d.base))
      throw CheckError("formula " + d.name + ": base case must not mention n");
    if (mentionsSymbol(d.rec, d.name) || mentionsSymbol(d.base, d.name))
      throw CheckError("formula " + d.name + " must not occur in its own specification");
    auto checkScope = [&](const FormulaPtr& f) {
      forEachDefAtom(f, [&](const Formula::DefAtom& a) {
        for (std::size_t j = 0; j < i; ++j)
          if (env_.formulas[j].name == a.sym) return;
        throw CheckError("formula " + d.name + " uses " + a.sym +
                         " which is not defined earlier");
      });
    };
    checkScope(d.base);
    checkScope(d.rec);
  }

  for (const auto& d : env_.proofs) checkProofDef(d);

  for (const auto& d : env_.clauseDefs) {
    if (csContainsVarOtherThan(d.base, {}))
      throw CheckError("clause " + d.name + ": base case must be variable-free");
    if (csContainsVarOtherThan(d.rec, {d.name}))
      throw CheckError("clause " + d.name + ": step case may only use its own variable");
  }

  for (const auto& d : env_.resDefs) {
    auto checkVars = [&](const RSPtr& body, const char* which) {
      forEachResLeafClause(body, [&](const CSPtr& c) {
        if (csContainsVarOtherThan(c, d.params))
          throw CheckError("res " + d.name + ": " + which + " uses an undeclared clause variable");
      });
    };
    checkVars(d.base, "base case");
    checkVars(d.rec, "step case");
    forEachResApp(d.base, [&](const ResSchema& app) {
      if (app.name == d.name)
        throw CheckError("res " + d.name + ": base case must not call itself");
    });
    forEachResApp(d.rec, [&](const ResSchema& app) {
      if (app.name == d.name && app.arg != ArithExpr::var())
        throw CheckError("res " + d.name + ": self-application must use the parameter n");
    });
  }

  for (const auto& g : env_.termGroups) {
    for (const auto& m : g.members) {
      const CTDef& def = g.defs.at(m);
      forEachTermNode(def.base, [&](const ClauseTerm& t) {
        if (t.kind == ClauseTerm::Kind::Var)
          throw CheckError("term " + m + ": base case must be variable-free");
        if (t.kind == ClauseTerm::Kind::Leaf && !isClauseSchema(t.clause))
          throw CheckError("term " + m + ": leaves must be clause schemata");
      });
      forEachTermNode(def.rec, [&](const ClauseTerm& t) {
        if (t.kind == ClauseTerm::Kind::Var &&
            std::find(g.members.begin(), g.members.end(), t.name) == g.members.end())
          throw CheckError("term " + m + ": variable " + t.name + " is not in the group");
        if (t.kind == ClauseTerm::Kind::Leaf && !isClauseSchema(t.clause))
          throw CheckError("term " + m + ": leaves must be clause schemata");
      });
    }
  }
}

} // namespace ceres
