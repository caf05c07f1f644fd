#include "ceres/refute.hpp"

#include <algorithm>
#include <functional>

#include "ceres/error.hpp"

namespace ceres {

std::vector<Atom> atomsOf(const ClauseSet& s) {
  std::vector<Atom> out;
  for (const auto& c : s.clauses) {
    out.insert(out.end(), c.ante.begin(), c.ante.end());
    out.insert(out.end(), c.succ.begin(), c.succ.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Atom> distinctAtomsOf(const ClauseSet& s) {
  std::vector<Atom> out = atomsOf(s);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ClauseSet topClauseSet(const std::vector<Atom>& atoms, std::size_t maxAtoms) {
  if (atoms.size() > maxAtoms)
    throw Error("top clause set over " + std::to_string(atoms.size()) +
                " atoms exceeds the cap of " + std::to_string(maxAtoms));
  ClauseSet out;
  std::size_t k = atoms.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    Clause c;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::uint64_t{1} << i))
        c.ante.push_back(atoms[i]);
      else
        c.succ.push_back(atoms[i]);
    }
    out.insert(c);
  }
  return out;
}

std::vector<WeakeningTerm> saturate(const ClauseSet& s, std::size_t maxAtoms) {
  ClauseSet top = topClauseSet(distinctAtomsOf(s), maxAtoms);
  std::vector<WeakeningTerm> out;
  out.reserve(s.size() * top.size());
  for (const auto& c : s.clauses)
    for (const auto& d : top.clauses) out.push_back({c, d});
  return out;
}

std::string toString(const AtomSetSchema& a) {
  std::string out = "{ ";
  bool first = true;
  for (const auto& [sym, bound] : a.bounds) {
    if (!first) out += ", ";
    first = false;
    out += "<" + sym + ", " + toString(bound) + ">";
  }
  return out + " }";
}

std::vector<Atom> evalAtomSet(const AtomSetSchema& a, std::uint64_t n) {
  std::vector<Atom> out;
  for (const auto& [sym, bound] : a.bounds)
    for (std::uint64_t i = 0; i <= evalArith(bound, n); ++i) out.push_back({sym, i});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using BoundMap = std::map<std::string, ArithExpr>;

void mergeBound(BoundMap& m, const std::string& sym, const ArithExpr& e) {
  auto it = m.find(sym);
  if (it == m.end())
    m[sym] = e;
  else
    it->second = maxExpr(it->second, e);
}

void mergeAll(BoundMap& m, const BoundMap& other) {
  for (const auto& [sym, e] : other) mergeBound(m, sym, e);
}

struct BoundComputer {
  Evaluator& ev;
  std::map<std::size_t, BoundMap> groupMemo;

  BoundMap term(const CTPtr& t) {
    BoundMap out;
    switch (t->kind) {
      case ClauseTerm::Kind::Leaf: {
        auto addSide = [&](const std::vector<FormulaPtr>& side) {
          for (const auto& f : side) {
            auto* a = std::get_if<Formula::Atom>(&f->node);
            if (!a) throw Error("atom bound: clause leaves must hold atom schemata");
            mergeBound(out, a->sym, a->idx);
          }
        };
        addSide(t->clause.ante);
        addSide(t->clause.succ);
        break;
      }
      case ClauseTerm::Kind::Plus:
      case ClauseTerm::Kind::Times:
        out = term(t->lhs);
        mergeAll(out, term(t->rhs));
        break;
      case ClauseTerm::Kind::Var:
        break;  // covered by the group-wide bound
      case ClauseTerm::Kind::App: {
        auto member = ev.env().termMember(t->name);
        if (!member) throw EvalError("undefined clause set term symbol " + t->name);
        for (const auto& [sym, g] : group(member->first)) mergeBound(out, sym, subst(g, t->arg));
        break;
      }
    }
    return out;
  }

  // Group-wide bound g per symbol: g|0 covers every base; g|(k+1) covers the
  // step bodies evaluated at level k (the step bound shifted one level) and
  // g|k itself. That needs alpha >= every step coefficient and
  // alpha + beta >= every step offset.
  const BoundMap& group(std::size_t g) {
    if (auto it = groupMemo.find(g); it != groupMemo.end()) return it->second;
    groupMemo[g] = {};  // cycle guard; groups reference earlier groups only
    const TermGroup& tg = ev.env().termGroups[g];
    BoundMap bases, recs;
    for (const auto& m : tg.members) {
      mergeAll(bases, term(tg.defs.at(m).base));
      mergeAll(recs, term(tg.defs.at(m).rec));
    }
    BoundMap out = bases;
    for (const auto& [sym, r] : recs) mergeBound(out, sym, ArithExpr{r.coeff, 0});
    for (auto& [sym, bound] : out) {
      auto it = recs.find(sym);
      if (it == recs.end()) continue;
      std::uint64_t need = it->second.offset;
      std::uint64_t have = bound.coeff;
      if (bound.offset + have < need) bound.offset = need - have;
    }
    return groupMemo[g] = out;
  }
};

} // namespace

AtomSetSchema atomSetSchemaFor(Evaluator& ev, const CTPtr& term) {
  BoundComputer bc{ev, {}};
  return AtomSetSchema{bc.term(term)};
}

std::string TopRefutation::prettyPrint() const {
  if (atoms.bounds.size() != 1)
    return "topRefutation over " + toString(atoms);
  const auto& [sym, bound] = *atoms.bounds.begin();
  std::string p = sym;
  std::string out;
  out += "rho'(0; C) = r(C o (|- " + p + "(0)), C o (" + p + "(0) |-); " + p + "(0))\n";
  out += "rho'(n+1; C) = r(rho'(n; C o (|- " + p + "(n+1))), rho'(n; C o (" + p +
         "(n+1) |-)); " + p + "(n+1))\n";
  out += "rho = rho'(" + toString(bound) + "; |-)";
  return out;
}

namespace {

const Deduction* buildTopTree(const std::vector<Atom>& atoms, std::size_t i, Clause prefix,
                              DeductionArena& arena,
                              const std::function<const Deduction*(DeductionArena&, const Clause&)>& mkLeaf) {
  if (i == 0) return mkLeaf(arena, prefix);
  const Atom& pivot = atoms[i - 1];
  Clause l = prefix, r = prefix;
  l.succ.push_back(pivot);
  r.ante.push_back(pivot);
  const Deduction* dl = buildTopTree(atoms, i - 1, std::move(l), arena, mkLeaf);
  const Deduction* dr = buildTopTree(atoms, i - 1, std::move(r), arena, mkLeaf);
  return arena.res(dl, dr, pivot);
}

void checkTopCap(std::size_t k, std::size_t maxAtoms) {
  if (k > maxAtoms)
    throw Error("top refutation over " + std::to_string(k) + " atoms exceeds the cap of " +
                std::to_string(maxAtoms));
}

} // namespace

const Deduction* topRefutationTree(const std::vector<Atom>& atoms, DeductionArena& arena,
                                   std::size_t maxAtoms) {
  checkTopCap(atoms.size(), maxAtoms);
  return buildTopTree(atoms, atoms.size(), Clause{}, arena,
                      [](DeductionArena& a, const Clause& c) { return a.leaf(c); });
}

RefutationSchema buildRefutationSchema(Evaluator& ev, const CTPtr& theta,
                                       std::vector<TermGroup> groups) {
  RefutationSchema r;
  r.theta = theta;
  r.groups = std::move(groups);
  r.atoms = atomSetSchemaFor(ev, theta);
  r.rho = TopRefutation{r.atoms};
  return r;
}

const Deduction* evalRefutation(Evaluator& ev, const RefutationSchema& r, std::uint64_t n,
                                DeductionArena& arena, std::size_t maxAtoms) {
  ClauseSet instance = ev.evalClauseSetOf(r.theta, n);
  std::vector<Atom> atoms = evalAtomSet(r.atoms, n);
  checkTopCap(atoms.size(), maxAtoms);

  auto weakenedLeaf = [&](DeductionArena& a, const Clause& top) -> const Deduction* {
    Clause d = normalized(top);
    for (const auto& c : instance.clauses) {
      if (isTautology(c) || !subsumes(c, d)) continue;
      Clause rest;
      for (const auto& x : d.ante)
        if (std::find(c.ante.begin(), c.ante.end(), x) == c.ante.end()) rest.ante.push_back(x);
      for (const auto& x : d.succ)
        if (std::find(c.succ.begin(), c.succ.end(), x) == c.succ.end()) rest.succ.push_back(x);
      return a.weak(a.leaf(c), rest);
    }
    throw Error("no non-tautological clause of the instance subsumes " + toString(d) +
                "; the instance would be satisfiable");
  };

  return buildTopTree(atoms, atoms.size(), Clause{}, arena, weakenedLeaf);
}

// --- canonic clause sets ------------------------------------------------------

ClauseSet canonicLeft(const FormulaPtr& f) {
  return std::visit(
      [&](const auto& x) -> ClauseSet {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Formula::Atom>) {
          if (x.idx.coeff != 0) throw Error("canonic clause set needs a ground formula");
          ClauseSet s;
          s.insert(Clause{{Atom{x.sym, x.idx.offset}}, {}});
          return s;
        } else if constexpr (std::is_same_v<T, Formula::Neg>) {
          return canonicRight(x.f);
        } else if constexpr (std::is_same_v<T, Formula::Bin>) {
          switch (x.op) {
            case BinOp::And: return setProduct(canonicLeft(x.lhs), canonicLeft(x.rhs));
            case BinOp::Or: return setUnion(canonicLeft(x.lhs), canonicLeft(x.rhs));
            case BinOp::Impl: return setUnion(canonicRight(x.lhs), canonicLeft(x.rhs));
          }
          throw Error("bad connective");
        } else {
          throw Error("canonic clause set needs a ground formula");
        }
      },
      f->node);
}

ClauseSet canonicRight(const FormulaPtr& f) {
  return std::visit(
      [&](const auto& x) -> ClauseSet {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Formula::Atom>) {
          if (x.idx.coeff != 0) throw Error("canonic clause set needs a ground formula");
          ClauseSet s;
          s.insert(Clause{{}, {Atom{x.sym, x.idx.offset}}});
          return s;
        } else if constexpr (std::is_same_v<T, Formula::Neg>) {
          return canonicLeft(x.f);
        } else if constexpr (std::is_same_v<T, Formula::Bin>) {
          switch (x.op) {
            case BinOp::And: return setUnion(canonicRight(x.lhs), canonicRight(x.rhs));
            case BinOp::Or: return setProduct(canonicRight(x.lhs), canonicRight(x.rhs));
            case BinOp::Impl: return setProduct(canonicLeft(x.lhs), canonicRight(x.rhs));
          }
          throw Error("bad connective");
        } else {
          throw Error("canonic clause set needs a ground formula");
        }
      },
      f->node);
}

ClauseSet canonicFormulaSet(const FormulaPtr& f) {
  return setUnion(canonicLeft(f), canonicRight(f));
}

ClauseSet canonicSequent(const Sequent& s) {
  ClauseSet acc;
  acc.insert(Clause{});
  for (const auto& f : s.ante) acc = setProduct(acc, canonicLeft(f));
  for (const auto& f : s.succ) acc = setProduct(acc, canonicRight(f));
  return acc;
}

ProofPtr canonicHalfProof(const FormulaPtr& f) {
  return std::visit(
      [&](const auto& x) -> ProofPtr {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Formula::Atom>) {
          return mkAx(f);
        } else if constexpr (std::is_same_v<T, Formula::Neg>) {
          return mkUnary(Rule::NegR, mkExch(Rule::XL, 0, mkUnary(Rule::NegL, canonicHalfProof(x.f))));
        } else if constexpr (std::is_same_v<T, Formula::Bin>) {
          ProofPtr l = canonicHalfProof(x.lhs);
          ProofPtr r = canonicHalfProof(x.rhs);
          switch (x.op) {
            case BinOp::And:
              return mkBinary(Rule::AndR, mkUnaryF(Rule::AndL1, x.rhs, l),
                              mkUnaryF(Rule::AndL2, x.lhs, r));
            case BinOp::Or:
              return mkBinary(Rule::OrL, mkUnaryF(Rule::OrR1, x.rhs, l),
                              mkUnaryF(Rule::OrR2, x.lhs, r));
            case BinOp::Impl:
              return mkUnary(Rule::ImplR, mkExch(Rule::XL, 0, mkBinary(Rule::ImplL, l, r)));
          }
          throw Error("bad connective");
        } else {
          throw Error("canonic proof needs a plain formula");
        }
      },
      f->node);
}

ProofPtr canonicProof(const FormulaPtr& f) {
  return mkCut(f, canonicHalfProof(f), canonicHalfProof(f));
}

} // namespace ceres
