#include "ceres/formula.hpp"

namespace ceres {

bool operator==(const Formula& a, const Formula& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, Formula::Atom> ||
                      std::is_same_v<T, Formula::DefAtom> ||
                      std::is_same_v<T, Formula::PropVar>) {
          return x == y;
        } else if constexpr (std::is_same_v<T, Formula::Neg>) {
          return equal(x.f, y.f);
        } else {
          return x.op == y.op && equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
        }
      },
      a.node);
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

FormulaPtr mkAtom(std::string sym, ArithExpr idx) {
  return std::make_shared<Formula>(Formula{Formula::Atom{std::move(sym), idx}});
}
FormulaPtr mkPropVar() {
  return std::make_shared<Formula>(Formula{Formula::PropVar{}});
}
FormulaPtr mkNeg(FormulaPtr f) {
  return std::make_shared<Formula>(Formula{Formula::Neg{std::move(f)}});
}
FormulaPtr mkBin(BinOp op, FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(Formula{Formula::Bin{op, std::move(l), std::move(r)}});
}
FormulaPtr mkDefAtom(std::string sym, ArithExpr idx) {
  return std::make_shared<Formula>(Formula{Formula::DefAtom{std::move(sym), idx}});
}

namespace {

template <class Pred>
bool anyNode(const FormulaPtr& f, Pred pred) {
  if (pred(*f)) return true;
  if (auto* n = std::get_if<Formula::Neg>(&f->node)) return anyNode(n->f, pred);
  if (auto* b = std::get_if<Formula::Bin>(&f->node))
    return anyNode(b->lhs, pred) || anyNode(b->rhs, pred);
  return false;
}

} // namespace

bool containsPropVar(const FormulaPtr& f) {
  return anyNode(f, [](const Formula& g) {
    return std::holds_alternative<Formula::PropVar>(g.node);
  });
}

bool containsParam(const FormulaPtr& f) {
  return anyNode(f, [](const Formula& g) {
    if (auto* a = std::get_if<Formula::Atom>(&g.node)) return a->idx.coeff > 0;
    if (auto* d = std::get_if<Formula::DefAtom>(&g.node)) return d->idx.coeff > 0;
    return false;
  });
}

bool mentionsSymbol(const FormulaPtr& f, const std::string& defSym) {
  return anyNode(f, [&](const Formula& g) {
    auto* d = std::get_if<Formula::DefAtom>(&g.node);
    return d && d->sym == defSym;
  });
}

bool isGround(const FormulaPtr& f) {
  return !anyNode(f, [](const Formula& g) {
    if (auto* a = std::get_if<Formula::Atom>(&g.node)) return a->idx.coeff > 0;
    return !std::holds_alternative<Formula::Atom>(g.node) &&
           !std::holds_alternative<Formula::Neg>(g.node) &&
           !std::holds_alternative<Formula::Bin>(g.node);
  });
}

bool isAtomSchema(const FormulaPtr& f) {
  return std::holds_alternative<Formula::Atom>(f->node);
}

FormulaPtr substPropVar(const FormulaPtr& f, const FormulaPtr& g) {
  return std::visit(
      [&](const auto& x) -> FormulaPtr {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Formula::PropVar>) {
          return g;
        } else if constexpr (std::is_same_v<T, Formula::Neg>) {
          return mkNeg(substPropVar(x.f, g));
        } else if constexpr (std::is_same_v<T, Formula::Bin>) {
          return mkBin(x.op, substPropVar(x.lhs, g), substPropVar(x.rhs, g));
        } else {
          return f;
        }
      },
      f->node);
}

FormulaPtr substParam(const FormulaPtr& f, const ArithExpr& a) {
  return std::visit(
      [&](const auto& x) -> FormulaPtr {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Formula::Atom>) {
          return mkAtom(x.sym, subst(x.idx, a));
        } else if constexpr (std::is_same_v<T, Formula::DefAtom>) {
          return mkDefAtom(x.sym, subst(x.idx, a));
        } else if constexpr (std::is_same_v<T, Formula::Neg>) {
          return mkNeg(substParam(x.f, a));
        } else if constexpr (std::is_same_v<T, Formula::Bin>) {
          return mkBin(x.op, substParam(x.lhs, a), substParam(x.rhs, a));
        } else {
          return f;
        }
      },
      f->node);
}

namespace {

// Sub-formulas that are themselves binary get parenthesized, so the printed
// form is unambiguous without precedence rules (parser accepts both).
std::string render(const FormulaPtr& f, bool parenBin) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Formula::Atom>) {
          return x.sym + "(" + toString(x.idx) + ")";
        } else if constexpr (std::is_same_v<T, Formula::DefAtom>) {
          return x.sym + "(" + toString(x.idx) + ")";
        } else if constexpr (std::is_same_v<T, Formula::PropVar>) {
          return "X";
        } else if constexpr (std::is_same_v<T, Formula::Neg>) {
          return "~" + render(x.f, true);
        } else {
          const char* op = x.op == BinOp::And ? " /\\ " : x.op == BinOp::Or ? " \\/ " : " -> ";
          std::string s = render(x.lhs, true) + op + render(x.rhs, true);
          return parenBin ? "(" + s + ")" : s;
        }
      },
      f->node);
}

} // namespace

std::string toString(const FormulaPtr& f) { return render(f, false); }

} // namespace ceres
