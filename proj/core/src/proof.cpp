#include "ceres/proof.hpp"

#include "ceres/error.hpp"

namespace ceres {

const char* ruleName(Rule r) {
  switch (r) {
    case Rule::Ax: return "ax";
    case Rule::WL: return "wl";
    case Rule::WR: return "wr";
    case Rule::CL: return "cl";
    case Rule::CR: return "cr";
    case Rule::XL: return "xl";
    case Rule::XR: return "xr";
    case Rule::NegL: return "negl";
    case Rule::NegR: return "negr";
    case Rule::AndL1: return "andl1";
    case Rule::AndL2: return "andl2";
    case Rule::AndR: return "andr";
    case Rule::OrL: return "orl";
    case Rule::OrR1: return "orr1";
    case Rule::OrR2: return "orr2";
    case Rule::ImplL: return "impll";
    case Rule::ImplR: return "implr";
    case Rule::Cut: return "cut";
    case Rule::Def: return "def";
    case Rule::Link: return "link";
  }
  return "?";
}

bool isUnaryRule(Rule r) {
  switch (r) {
    case Rule::WL: case Rule::WR: case Rule::CL: case Rule::CR:
    case Rule::XL: case Rule::XR: case Rule::NegL: case Rule::NegR:
    case Rule::AndL1: case Rule::AndL2: case Rule::OrR1: case Rule::OrR2:
    case Rule::ImplR: case Rule::Def:
      return true;
    default:
      return false;
  }
}

bool isBinaryRule(Rule r) {
  return r == Rule::AndR || r == Rule::OrL || r == Rule::ImplL || r == Rule::Cut;
}

namespace {
ProofPtr mk(Proof p) { return std::make_shared<Proof>(std::move(p)); }
} // namespace

ProofPtr mkAx(FormulaPtr atom) {
  Proof p;
  p.rule = Rule::Ax;
  p.formula = std::move(atom);
  return mk(std::move(p));
}

ProofPtr mkUnary(Rule r, ProofPtr child) {
  Proof p;
  p.rule = r;
  p.left = std::move(child);
  return mk(std::move(p));
}

ProofPtr mkUnaryF(Rule r, FormulaPtr payload, ProofPtr child) {
  Proof p;
  p.rule = r;
  p.formula = std::move(payload);
  p.left = std::move(child);
  return mk(std::move(p));
}

ProofPtr mkExch(Rule r, std::size_t pos, ProofPtr child) {
  Proof p;
  p.rule = r;
  p.pos = pos;
  p.left = std::move(child);
  return mk(std::move(p));
}

ProofPtr mkBinary(Rule r, ProofPtr l, ProofPtr rr) {
  Proof p;
  p.rule = r;
  p.left = std::move(l);
  p.right = std::move(rr);
  return mk(std::move(p));
}

ProofPtr mkCut(FormulaPtr cutFormula, ProofPtr l, ProofPtr r) {
  Proof p;
  p.rule = Rule::Cut;
  p.formula = std::move(cutFormula);
  p.left = std::move(l);
  p.right = std::move(r);
  return mk(std::move(p));
}

ProofPtr mkDef(Sequent conclusion, ProofPtr child) {
  Proof p;
  p.rule = Rule::Def;
  p.sequent = std::move(conclusion);
  p.left = std::move(child);
  return mk(std::move(p));
}

ProofPtr mkLink(std::string name, ArithExpr arg) {
  Proof p;
  p.rule = Rule::Link;
  p.name = std::move(name);
  p.arg = arg;
  return mk(std::move(p));
}

bool equal(const ProofPtr& a, const ProofPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->rule != b->rule || a->pos != b->pos || a->name != b->name || a->arg != b->arg)
    return false;
  if ((a->formula != nullptr) != (b->formula != nullptr)) return false;
  if (a->formula && !equal(a->formula, b->formula)) return false;
  if (a->sequent != b->sequent) return false;
  return equal(a->left, b->left) && equal(a->right, b->right);
}

bool containsLink(const ProofPtr& p) {
  if (!p) return false;
  if (p->rule == Rule::Link) return true;
  return containsLink(p->left) || containsLink(p->right);
}

bool containsLinkTo(const ProofPtr& p, const std::string& name) {
  if (!p) return false;
  if (p->rule == Rule::Link) return p->name == name;
  return containsLinkTo(p->left, name) || containsLinkTo(p->right, name);
}

ProofPtr substLinks(const ProofPtr& p, const std::string& name, const ProofPtr& body,
                    bool requireOnlyTarget) {
  if (!p) return p;
  if (p->rule == Rule::Link) {
    if (p->name == name) return body;
    if (requireOnlyTarget)
      throw Error("substLinks: link targets " + p->name + ", expected " + name);
    return p;
  }
  ProofPtr l = substLinks(p->left, name, body, requireOnlyTarget);
  ProofPtr r = substLinks(p->right, name, body, requireOnlyTarget);
  if (l == p->left && r == p->right) return p;
  Proof q = *p;
  q.left = std::move(l);
  q.right = std::move(r);
  return std::make_shared<Proof>(std::move(q));
}

bool principalMarked(const Proof& node, const Config& omega) {
  switch (node.rule) {
    case Rule::AndR: return !omega.succ.empty() && omega.succ.back();
    case Rule::OrL: return !omega.ante.empty() && omega.ante.front();
    case Rule::ImplL: return !omega.ante.empty() && omega.ante.front();
    default: return false;
  }
}

namespace {

Config badMask(const Proof& node, const Config& omega) {
  throw Error(std::string("induced configuration: mask mismatch at ") +
              ruleName(node.rule) + " (mask " + omega.key() + ")");
}

std::vector<bool> slice(const std::vector<bool>& v, std::size_t from, std::size_t to) {
  return {v.begin() + static_cast<long>(from), v.begin() + static_cast<long>(to)};
}

} // namespace

Config inducedConfig(const Proof& node, const Sequent& conclusion,
                     const Sequent& premise0, const Sequent* premise1,
                     const Config& omega, std::size_t premiseIndex) {
  if (!omega.matches(conclusion)) return badMask(node, omega);
  const auto& a = omega.ante;
  const auto& s = omega.succ;
  Config r;
  switch (node.rule) {
    case Rule::WL:
      r.ante = slice(a, 1, a.size());
      r.succ = s;
      break;
    case Rule::WR:
      r.ante = a;
      r.succ = slice(s, 0, s.size() - 1);
      break;
    case Rule::CL:
      r.ante.push_back(a.front());
      r.ante.insert(r.ante.end(), a.begin(), a.end());
      r.succ = s;
      break;
    case Rule::CR:
      r.ante = a;
      r.succ = s;
      r.succ.push_back(s.back());
      break;
    case Rule::XL:
      r = omega;
      std::swap(r.ante[node.pos], r.ante[node.pos + 1]);
      break;
    case Rule::XR:
      r = omega;
      std::swap(r.succ[node.pos], r.succ[node.pos + 1]);
      break;
    case Rule::NegL:
      // conclusion ~F, Gamma |- Delta; premise Gamma |- Delta, F
      r.ante = slice(a, 1, a.size());
      r.succ = s;
      r.succ.push_back(a.front());
      break;
    case Rule::NegR:
      // conclusion Gamma |- Delta, ~F; premise F, Gamma |- Delta
      r.ante.push_back(s.back());
      r.ante.insert(r.ante.end(), a.begin(), a.end());
      r.succ = slice(s, 0, s.size() - 1);
      break;
    case Rule::AndL1:
    case Rule::AndL2:
    case Rule::OrR1:
    case Rule::OrR2:
    case Rule::Def:
      r = omega;
      break;
    case Rule::ImplR:
      // conclusion Gamma |- Delta, F->G; premise F, Gamma |- Delta, G
      r.ante.push_back(s.back());
      r.ante.insert(r.ante.end(), a.begin(), a.end());
      r.succ = s;
      break;
    case Rule::AndR:
    case Rule::OrL:
      r = omega;
      break;
    case Rule::ImplL: {
      // conclusion F->G, Gamma, Pi |- Delta, Lambda;
      // premises Gamma |- Delta, F and G, Pi |- Lambda
      std::size_t gamma = premise0.ante.size();
      std::size_t delta = premise0.succ.size() - 1;
      bool p = a.front();
      if (premiseIndex == 0) {
        r.ante = slice(a, 1, 1 + gamma);
        r.succ = slice(s, 0, delta);
        r.succ.push_back(p);
      } else {
        r.ante.push_back(p);
        auto tail = slice(a, 1 + gamma, a.size());
        r.ante.insert(r.ante.end(), tail.begin(), tail.end());
        r.succ = slice(s, delta, s.size());
      }
      break;
    }
    case Rule::Cut: {
      // premises Gamma |- Delta, F and F, Pi |- Lambda; cut formula tracked
      // in both premises.
      std::size_t gamma = premise0.ante.size();
      std::size_t delta = premise0.succ.size() - 1;
      if (premiseIndex == 0) {
        r.ante = slice(a, 0, gamma);
        r.succ = slice(s, 0, delta);
        r.succ.push_back(true);
      } else {
        r.ante.push_back(true);
        auto tail = slice(a, gamma, a.size());
        r.ante.insert(r.ante.end(), tail.begin(), tail.end());
        r.succ = slice(s, delta, s.size());
      }
      break;
    }
    case Rule::Ax:
    case Rule::Link:
      throw Error("induced configuration requested on a leaf");
  }
  const Sequent& target = premiseIndex == 0 ? premise0 : *premise1;
  if (!r.matches(target)) return badMask(node, omega);
  return r;
}

} // namespace ceres
