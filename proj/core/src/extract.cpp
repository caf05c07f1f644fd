#include "ceres/extract.hpp"

#include <deque>
#include <map>
#include <set>

#include "ceres/error.hpp"

namespace ceres {

std::string configMemberName(const std::string& proofName, const Config& omega) {
  return proofName + "@" + omega.key();
}

namespace {

// Walks a checked proof body and builds the clause-set term. Self links
// become group variables, applications of other proof symbols become term
// applications; both are reported through the callbacks so the caller can
// drive the fixpoint over (symbol, configuration) pairs.
struct BodyExtractor {
  Evaluator& ev;
  std::string selfName;  // empty for plain proofs
  std::map<const Proof*, Sequent> conclusions;
  // (symbol, config) pairs demanded by links/applications in this body.
  std::vector<std::pair<std::string, Config>>* demands{nullptr};

  CTPtr run(const ProofPtr& p, const Config& omega) {
    const Sequent& concl = conclusions.at(p.get());
    if (!omega.matches(concl))
      throw Error("extraction: configuration does not match " + toString(concl));
    switch (p->rule) {
      case Rule::Ax:
        return ctLeaf(applyConfig(concl, omega));
      case Rule::Link: {
        if (demands) demands->push_back({p->name, omega});
        if (!selfName.empty() && p->name == selfName) {
          if (p->arg != ArithExpr::var())
            throw Error("extraction: self link must use the parameter n");
          return ctVar(configMemberName(p->name, omega));
        }
        return ctApp(configMemberName(p->name, omega), p->arg);
      }
      case Rule::Cut:
      case Rule::AndR:
      case Rule::OrL:
      case Rule::ImplL: {
        const Sequent& l = conclusions.at(p->left.get());
        const Sequent& r = conclusions.at(p->right.get());
        Config o1 = inducedConfig(*p, concl, l, &r, omega, 0);
        Config o2 = inducedConfig(*p, concl, l, &r, omega, 1);
        CTPtr tl = run(p->left, o1);
        CTPtr tr = run(p->right, o2);
        bool plus = p->rule == Rule::Cut || principalMarked(*p, omega);
        return plus ? ctPlus(tl, tr) : ctTimes(tl, tr);
      }
      default: {
        const Sequent& l = conclusions.at(p->left.get());
        Config o1 = inducedConfig(*p, concl, l, nullptr, omega, 0);
        return run(p->left, o1);
      }
    }
  }
};

} // namespace

CTPtr extractProofTerm(Evaluator& ev, const ProofPtr& proof, const Config& omega) {
  BodyExtractor ex{ev, {}, {}, nullptr};
  ev.checkProof(proof, {}, &ex.conclusions);
  return ex.run(proof, omega);
}

CharExtraction extractChar(Evaluator& ev, const std::string& proofName, const Config& omega) {
  const DefEnv& env = ev.env();
  if (!env.proof(proofName)) throw EvalError("undefined proof " + proofName);

  // Fixpoint over reachable (symbol, configuration) pairs. Each proof symbol
  // yields one term group whose members are its reachable configurations.
  std::map<std::string, TermGroup> groups;
  std::set<std::pair<std::string, std::string>> done;  // (symbol, config key)
  std::deque<std::pair<std::string, Config>> work{{proofName, omega}};

  while (!work.empty()) {
    auto [sym, cfg] = work.front();
    work.pop_front();
    if (!done.insert({sym, cfg.key()}).second) continue;
    const ProofDef* pd = env.proof(sym);
    if (!pd) throw EvalError("undefined proof " + sym);
    if (!cfg.matches(pd->end))
      throw Error("extraction: configuration does not match the end-sequent of " + sym);

    std::vector<std::pair<std::string, Config>> demands;

    BodyExtractor baseEx{ev, sym, {}, &demands};
    ev.checkProof(pd->base, sym, &baseEx.conclusions);
    Config baseCfg = cfg;  // base end-sequent has the same shape as end[n->0]
    CTPtr baseTerm = baseEx.run(pd->base, baseCfg);

    BodyExtractor recEx{ev, sym, {}, &demands};
    ev.checkProof(pd->rec, sym, &recEx.conclusions);
    CTPtr recTerm = recEx.run(pd->rec, cfg);

    std::string member = configMemberName(sym, cfg);
    TermGroup& g = groups[sym];
    g.members.push_back(member);
    g.defs[member] = CTDef{baseTerm, recTerm};

    for (auto& d : demands) work.push_back(std::move(d));
  }

  CharExtraction out;
  out.term = ctApp(configMemberName(proofName, omega), ArithExpr::var());
  // Emit groups in environment (dependency) order.
  for (const auto& pd : env.proofs) {
    auto it = groups.find(pd.name);
    if (it != groups.end()) out.groups.push_back(std::move(it->second));
  }
  return out;
}

DefEnv withExtraction(const DefEnv& env, const CharExtraction& ex) {
  DefEnv out = env;
  for (const auto& g : ex.groups) out.termGroups.push_back(g);
  return out;
}

} // namespace ceres
