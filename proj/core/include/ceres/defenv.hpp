#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ceres/clause.hpp"
#include "ceres/clauseterm.hpp"
#include "ceres/proof.hpp"
#include "ceres/resolution.hpp"

namespace ceres {

// Primitive recursive specification of a defined propositional symbol.
// base is X-free and n-free (earlier defined symbols at constant indices are
// allowed); rec may use X and earlier symbols, but not the symbol itself.
struct PropDef {
  std::string name;
  FormulaPtr base, rec;
};

struct ProofDef {
  std::string name;
  Sequent end;
  ProofPtr base, rec;
};

struct ClauseDef {
  std::string name;
  CSPtr base, rec;
};

struct ResDef {
  std::string name;
  std::vector<std::string> params;  // clause variable names
  RSPtr base, rec;
};

// Parsed schema file: ordered, definition-before-use registries plus named
// inline sequents and clause sets. Frozen after parsing.
struct DefEnv {
  std::vector<PropDef> formulas;
  std::vector<ProofDef> proofs;
  std::vector<ClauseDef> clauseDefs;
  std::vector<ResDef> resDefs;
  std::vector<TermGroup> termGroups;
  std::vector<std::pair<std::string, Sequent>> sequents;
  std::vector<std::pair<std::string, ClauseSet>> clauseSets;

  const PropDef* formula(const std::string& name) const;
  const ProofDef* proof(const std::string& name) const;
  const ClauseDef* clauseDef(const std::string& name) const;
  const ResDef* resDef(const std::string& name) const;
  // (group index, member name) for a defined term symbol.
  std::optional<std::pair<std::size_t, std::string>> termMember(const std::string& name) const;
  const Sequent* sequent(const std::string& name) const;
  const ClauseSet* clauseSet(const std::string& name) const;

  bool knownName(const std::string& name) const;
};

} // namespace ceres
