#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ceres/defenv.hpp"
#include "ceres/polynomial.hpp"

namespace ceres {

// One-step unfolding of a defined symbol: P(0) -> base,
// P(a*n+(b+1)) -> rec[n -> a*n+b][X -> P(a*n+b)]. nullopt when not
// applicable; throws EvalError on an unknown defined symbol.
std::optional<FormulaPtr> defStep(const FormulaPtr& f, const DefEnv& env);

// Reverse search: the defined atom that defStep-unfolds to g, if any.
std::optional<FormulaPtr> foldStep(const FormulaPtr& g, const DefEnv& env);

// Point of the reflexive-symmetric closure: equal, or one side unfolds to
// the other.
bool defEquivalent(const FormulaPtr& a, const FormulaPtr& b, const DefEnv& env);

struct ClauseBound {
  Polynomial poly;
  // False when the schema self-recurses more than once per step (the bound
  // is then exact only on the sampled window 0..8).
  bool exact{true};
};

// Evaluation and checking against one frozen DefEnv. Memo tables are
// per-instance; use one Evaluator per task for concurrent work.
class Evaluator {
 public:
  explicit Evaluator(const DefEnv& env, std::size_t cacheLimit = 0);

  const DefEnv& env() const { return env_; }

  // --- formulas -----------------------------------------------------------
  FormulaPtr evalFormula(const FormulaPtr& f, std::uint64_t n);
  Sequent evalSequent(const Sequent& s, std::uint64_t n);
  Clause toClause(const Sequent& groundAtomic) const;
  Clause evalClause(const Sequent& clauseSchema, std::uint64_t n);

  // --- proofs -------------------------------------------------------------
  // Validates every inference and returns the (symbolic) end-sequent.
  // selfName designates the ProofDef under validation, allowing self-links.
  // When annotations is given, every node's conclusion is recorded in it.
  Sequent checkProof(const ProofPtr& p, const std::string& selfName = {},
                     std::map<const Proof*, Sequent>* annotations = nullptr);
  // Validates one ProofDef: base/rec bodies and their declared end-sequents.
  void checkProofDef(const ProofDef& d);

  // Ground proof for a defined symbol at instance k (def inferences erased,
  // links unfolded, formulas evaluated).
  ProofPtr evalProof(const std::string& name, std::uint64_t k);
  // Evaluation of a proof body at parameter value n.
  ProofPtr evalProofBody(const ProofPtr& p, std::uint64_t n,
                         const std::string& selfName = {},
                         const ProofPtr& selfGround = nullptr);

  // --- clause set terms ----------------------------------------------------
  // Ground clause term; defined symbols unfold through their per-level
  // sequences, whole groups at a time.
  CTPtr evalCT(const CTPtr& t, std::uint64_t n);
  // |.| of a ground term.
  ClauseSet ctSemantics(const CTPtr& ground);
  ClauseSet evalClauseSetOf(const CTPtr& t, std::uint64_t n);

  // --- clause schemata / resolution ----------------------------------------
  struct SelfOverride {
    std::string name;
    const Deduction* result;
  };

  Clause evalClauseSchema(const CSPtr& c, std::uint64_t n,
                          const std::map<std::string, Clause>& clauseVars);
  const Deduction* evalRes(const RSPtr& r, std::uint64_t n, DeductionArena& arena,
                           const std::map<std::string, Clause>& clauseVars = {},
                           const SelfOverride* self = nullptr);

  // Polynomial bound on distinct clauses in evaluations of r.
  ClauseBound clauseBound(const RSPtr& r);

  // Validates every definition in the environment.
  void validate();

 private:
  struct GroupSeqKey {
    std::size_t group;
    std::uint64_t level;
    friend auto operator<=>(const GroupSeqKey&, const GroupSeqKey&) = default;
  };

  FormulaPtr definedInstance(const std::string& sym, std::uint64_t beta);
  Clause unfoldClauseDef(const std::string& name, std::uint64_t k);
  const Deduction* unfoldResDef(const std::string& name, std::uint64_t k,
                                const std::vector<Clause>& args, DeductionArena& arena);
  const std::map<std::string, CTPtr>& groupLevel(std::size_t group, std::uint64_t level);
  ClauseBound resDefBound(const std::string& name);
  void trimCaches();

  const DefEnv& env_;
  std::size_t cacheLimit_;
  std::map<std::pair<std::string, std::uint64_t>, FormulaPtr> formulaMemo_;
  std::map<std::pair<std::string, std::uint64_t>, ProofPtr> proofMemo_;
  std::map<GroupSeqKey, std::map<std::string, CTPtr>> termMemo_;
  std::map<std::pair<std::string, std::uint64_t>, Clause> clauseDefMemo_;
  std::map<std::string, ClauseBound> boundMemo_;
};

} // namespace ceres
