#include "ceres/json_io.hpp"

#include "ceres/error.hpp"

namespace ceres {

Json toJson(const ArithExpr& a) {
  return Json{{"coeff", a.coeff}, {"offset", a.offset}};
}

ArithExpr arithFromJson(const Json& j) {
  return {j.at("coeff").get<std::uint64_t>(), j.at("offset").get<std::uint64_t>()};
}

Json toJson(const FormulaPtr& f) {
  return std::visit(
      [&](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Formula::Atom>) {
          return Json{{"node", "atom"}, {"sym", x.sym}, {"idx", toJson(x.idx)}};
        } else if constexpr (std::is_same_v<T, Formula::DefAtom>) {
          return Json{{"node", "defatom"}, {"sym", x.sym}, {"idx", toJson(x.idx)}};
        } else if constexpr (std::is_same_v<T, Formula::PropVar>) {
          return Json{{"node", "var"}};
        } else if constexpr (std::is_same_v<T, Formula::Neg>) {
          return Json{{"node", "neg"}, {"arg", toJson(x.f)}};
        } else {
          const char* op = x.op == BinOp::And ? "and" : x.op == BinOp::Or ? "or" : "impl";
          return Json{{"node", op}, {"lhs", toJson(x.lhs)}, {"rhs", toJson(x.rhs)}};
        }
      },
      f->node);
}

FormulaPtr formulaFromJson(const Json& j) {
  const std::string node = j.at("node").get<std::string>();
  if (node == "atom") return mkAtom(j.at("sym").get<std::string>(), arithFromJson(j.at("idx")));
  if (node == "defatom")
    return mkDefAtom(j.at("sym").get<std::string>(), arithFromJson(j.at("idx")));
  if (node == "var") return mkPropVar();
  if (node == "neg") return mkNeg(formulaFromJson(j.at("arg")));
  BinOp op = node == "and" ? BinOp::And : node == "or" ? BinOp::Or : BinOp::Impl;
  if (node != "and" && node != "or" && node != "impl") throw Error("bad formula node " + node);
  return mkBin(op, formulaFromJson(j.at("lhs")), formulaFromJson(j.at("rhs")));
}

Json toJson(const Sequent& s) {
  Json ante = Json::array(), succ = Json::array();
  for (const auto& f : s.ante) ante.push_back(toJson(f));
  for (const auto& f : s.succ) succ.push_back(toJson(f));
  return Json{{"ante", ante}, {"succ", succ}};
}

Sequent sequentFromJson(const Json& j) {
  Sequent s;
  for (const auto& f : j.at("ante")) s.ante.push_back(formulaFromJson(f));
  for (const auto& f : j.at("succ")) s.succ.push_back(formulaFromJson(f));
  return s;
}

Json toJson(const ProofPtr& p) {
  Json j{{"rule", ruleName(p->rule)}};
  switch (p->rule) {
    case Rule::Ax:
    case Rule::WL:
    case Rule::WR:
    case Rule::AndL1:
    case Rule::AndL2:
    case Rule::OrR1:
    case Rule::OrR2:
    case Rule::Cut:
      j["formula"] = toJson(p->formula);
      break;
    case Rule::XL:
    case Rule::XR:
      j["pos"] = p->pos;
      break;
    case Rule::Def:
      j["sequent"] = toJson(p->sequent);
      break;
    case Rule::Link:
      j["name"] = p->name;
      j["arg"] = toJson(p->arg);
      break;
    default:
      break;
  }
  if (p->left) j["children"] = Json::array({toJson(p->left)});
  if (p->right) j["children"].push_back(toJson(p->right));
  return j;
}

ProofPtr proofFromJson(const Json& j) {
  const std::string rule = j.at("rule").get<std::string>();
  auto child = [&](std::size_t i) { return proofFromJson(j.at("children").at(i)); };
  for (Rule r : {Rule::Ax, Rule::WL, Rule::WR, Rule::CL, Rule::CR, Rule::XL, Rule::XR,
                 Rule::NegL, Rule::NegR, Rule::AndL1, Rule::AndL2, Rule::AndR, Rule::OrL,
                 Rule::OrR1, Rule::OrR2, Rule::ImplL, Rule::ImplR, Rule::Cut, Rule::Def,
                 Rule::Link}) {
    if (rule != ruleName(r)) continue;
    switch (r) {
      case Rule::Ax:
        return mkAx(formulaFromJson(j.at("formula")));
      case Rule::WL:
      case Rule::WR:
      case Rule::AndL1:
      case Rule::AndL2:
      case Rule::OrR1:
      case Rule::OrR2:
        return mkUnaryF(r, formulaFromJson(j.at("formula")), child(0));
      case Rule::XL:
      case Rule::XR:
        return mkExch(r, j.at("pos").get<std::size_t>(), child(0));
      case Rule::Cut:
        return mkCut(formulaFromJson(j.at("formula")), child(0), child(1));
      case Rule::Def:
        return mkDef(sequentFromJson(j.at("sequent")), child(0));
      case Rule::Link:
        return mkLink(j.at("name").get<std::string>(), arithFromJson(j.at("arg")));
      case Rule::AndR:
      case Rule::OrL:
      case Rule::ImplL:
        return mkBinary(r, child(0), child(1));
      default:
        return mkUnary(r, child(0));
    }
  }
  throw Error("bad proof rule " + rule);
}

Json toJson(const Clause& c) {
  auto side = [](const std::vector<Atom>& v) {
    Json out = Json::array();
    for (const auto& a : v) out.push_back(Json{{"sym", a.sym}, {"idx", a.idx}});
    return out;
  };
  return Json{{"ante", side(c.ante)}, {"succ", side(c.succ)}};
}

Clause clauseFromJson(const Json& j) {
  Clause c;
  for (const auto& a : j.at("ante"))
    c.ante.push_back({a.at("sym").get<std::string>(), a.at("idx").get<std::uint64_t>()});
  for (const auto& a : j.at("succ"))
    c.succ.push_back({a.at("sym").get<std::string>(), a.at("idx").get<std::uint64_t>()});
  return c;
}

Json toJson(const ClauseSet& s) {
  Json out = Json::array();
  for (const auto& c : s.clauses) out.push_back(toJson(c));
  return out;
}

ClauseSet clauseSetFromJson(const Json& j) {
  ClauseSet s;
  for (const auto& c : j) s.insert(clauseFromJson(c));
  return s;
}

Json toJson(const CTPtr& t) {
  switch (t->kind) {
    case ClauseTerm::Kind::Leaf:
      return Json{{"node", "leaf"}, {"clause", toJson(t->clause)}};
    case ClauseTerm::Kind::Plus:
      return Json{{"node", "plus"}, {"lhs", toJson(t->lhs)}, {"rhs", toJson(t->rhs)}};
    case ClauseTerm::Kind::Times:
      return Json{{"node", "times"}, {"lhs", toJson(t->lhs)}, {"rhs", toJson(t->rhs)}};
    case ClauseTerm::Kind::Var:
      return Json{{"node", "var"}, {"name", t->name}};
    case ClauseTerm::Kind::App:
      return Json{{"node", "app"}, {"name", t->name}, {"arg", toJson(t->arg)}};
  }
  throw Error("bad clause term");
}

CTPtr termFromJson(const Json& j) {
  const std::string node = j.at("node").get<std::string>();
  if (node == "leaf") return ctLeaf(sequentFromJson(j.at("clause")));
  if (node == "plus") return ctPlus(termFromJson(j.at("lhs")), termFromJson(j.at("rhs")));
  if (node == "times") return ctTimes(termFromJson(j.at("lhs")), termFromJson(j.at("rhs")));
  if (node == "var") return ctVar(j.at("name").get<std::string>());
  if (node == "app")
    return ctApp(j.at("name").get<std::string>(), arithFromJson(j.at("arg")));
  throw Error("bad clause term node " + node);
}

Json toJson(const TermGroup& g) {
  Json defs = Json::array();
  for (const auto& m : g.members)
    defs.push_back(Json{{"name", m},
                        {"base", toJson(g.defs.at(m).base)},
                        {"rec", toJson(g.defs.at(m).rec)}});
  return Json{{"members", defs}};
}

TermGroup termGroupFromJson(const Json& j) {
  TermGroup g;
  for (const auto& d : j.at("members")) {
    std::string name = d.at("name").get<std::string>();
    g.members.push_back(name);
    g.defs[name] = CTDef{termFromJson(d.at("base")), termFromJson(d.at("rec"))};
  }
  return g;
}

Json toJson(const CSPtr& c) {
  switch (c->kind) {
    case ClauseSchema::Kind::Literal:
      return Json{{"node", "literal"}, {"clause", toJson(c->lit)}};
    case ClauseSchema::Kind::Compose:
      return Json{{"node", "compose"}, {"lhs", toJson(c->lhs)}, {"rhs", toJson(c->rhs)}};
    case ClauseSchema::Kind::Var:
      return Json{{"node", "var"}, {"name", c->name}};
    case ClauseSchema::Kind::App:
      return Json{{"node", "app"}, {"name", c->name}, {"arg", toJson(c->arg)}};
  }
  throw Error("bad clause schema");
}

CSPtr clauseSchemaFromJson(const Json& j) {
  const std::string node = j.at("node").get<std::string>();
  if (node == "literal") return csLiteral(sequentFromJson(j.at("clause")));
  if (node == "compose")
    return csCompose(clauseSchemaFromJson(j.at("lhs")), clauseSchemaFromJson(j.at("rhs")));
  if (node == "var") return csVar(j.at("name").get<std::string>());
  if (node == "app")
    return csApp(j.at("name").get<std::string>(), arithFromJson(j.at("arg")));
  throw Error("bad clause schema node " + node);
}

Json toJson(const RSPtr& r) {
  switch (r->kind) {
    case ResSchema::Kind::Leaf:
      return Json{{"node", "leaf"}, {"clause", toJson(r->clause)}};
    case ResSchema::Kind::Res:
      return Json{{"node", "res"},
                  {"lhs", toJson(r->lhs)},
                  {"rhs", toJson(r->rhs)},
                  {"pivot", toJson(r->pivot)}};
    case ResSchema::Kind::Weak:
      return Json{{"node", "weak"}, {"child", toJson(r->lhs)}, {"clause", toJson(r->clause)}};
    case ResSchema::Kind::App: {
      Json args = Json::array();
      for (const auto& c : r->clauseArgs) args.push_back(toJson(c));
      return Json{{"node", "app"}, {"name", r->name}, {"arg", toJson(r->arg)}, {"args", args}};
    }
  }
  throw Error("bad resolution schema");
}

RSPtr resSchemaFromJson(const Json& j) {
  const std::string node = j.at("node").get<std::string>();
  if (node == "leaf") return rsLeaf(clauseSchemaFromJson(j.at("clause")));
  if (node == "res")
    return rsRes(resSchemaFromJson(j.at("lhs")), resSchemaFromJson(j.at("rhs")),
                 formulaFromJson(j.at("pivot")));
  if (node == "weak")
    return rsWeak(resSchemaFromJson(j.at("child")), clauseSchemaFromJson(j.at("clause")));
  if (node == "app") {
    std::vector<CSPtr> args;
    for (const auto& c : j.at("args")) args.push_back(clauseSchemaFromJson(c));
    return rsApp(j.at("name").get<std::string>(), arithFromJson(j.at("arg")), std::move(args));
  }
  throw Error("bad resolution schema node " + node);
}

Json toJson(const Deduction* d) {
  switch (d->kind) {
    case Deduction::Kind::Leaf:
      return Json{{"node", "leaf"}, {"clause", toJson(d->clause)}};
    case Deduction::Kind::Res:
      return Json{{"node", "res"},
                  {"pivot", Json{{"sym", d->pivot.sym}, {"idx", d->pivot.idx}}},
                  {"clause", toJson(d->clause)},
                  {"lhs", toJson(d->left)},
                  {"rhs", toJson(d->right)}};
    case Deduction::Kind::Weak:
      return Json{{"node", "weak"},
                  {"weakened", toJson(d->weakened)},
                  {"clause", toJson(d->clause)},
                  {"child", toJson(d->left)}};
  }
  throw Error("bad deduction");
}

const Deduction* deductionFromJson(const Json& j, DeductionArena& arena) {
  const std::string node = j.at("node").get<std::string>();
  if (node == "leaf") return arena.leaf(clauseFromJson(j.at("clause")));
  if (node == "res") {
    const Deduction* l = deductionFromJson(j.at("lhs"), arena);
    const Deduction* r = deductionFromJson(j.at("rhs"), arena);
    Atom pivot{j.at("pivot").at("sym").get<std::string>(),
               j.at("pivot").at("idx").get<std::uint64_t>()};
    return arena.res(l, r, pivot);
  }
  if (node == "weak") {
    const Deduction* c = deductionFromJson(j.at("child"), arena);
    return arena.weak(c, clauseFromJson(j.at("weakened")));
  }
  throw Error("bad deduction node " + node);
}

Json toJson(const AtomSetSchema& a) {
  Json out = Json::array();
  for (const auto& [sym, bound] : a.bounds)
    out.push_back(Json{{"sym", sym}, {"bound", toJson(bound)}});
  return out;
}

Json toJson(const CharExtraction& e) {
  Json groups = Json::array();
  for (const auto& g : e.groups) groups.push_back(toJson(g));
  return Json{{"term", toJson(e.term)}, {"groups", groups}};
}

} // namespace ceres
