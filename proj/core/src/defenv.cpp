#include "ceres/defenv.hpp"

namespace ceres {

const PropDef* DefEnv::formula(const std::string& name) const {
  for (const auto& d : formulas)
    if (d.name == name) return &d;
  return nullptr;
}

const ProofDef* DefEnv::proof(const std::string& name) const {
  for (const auto& d : proofs)
    if (d.name == name) return &d;
  return nullptr;
}

const ClauseDef* DefEnv::clauseDef(const std::string& name) const {
  for (const auto& d : clauseDefs)
    if (d.name == name) return &d;
  return nullptr;
}

const ResDef* DefEnv::resDef(const std::string& name) const {
  for (const auto& d : resDefs)
    if (d.name == name) return &d;
  return nullptr;
}

std::optional<std::pair<std::size_t, std::string>> DefEnv::termMember(const std::string& name) const {
  for (std::size_t g = 0; g < termGroups.size(); ++g)
    for (const auto& m : termGroups[g].members)
      if (m == name) return {{g, m}};
  return std::nullopt;
}

const Sequent* DefEnv::sequent(const std::string& name) const {
  for (const auto& [k, v] : sequents)
    if (k == name) return &v;
  return nullptr;
}

const ClauseSet* DefEnv::clauseSet(const std::string& name) const {
  for (const auto& [k, v] : clauseSets)
    if (k == name) return &v;
  return nullptr;
}

bool DefEnv::knownName(const std::string& name) const {
  return formula(name) || proof(name) || clauseDef(name) || resDef(name) ||
         termMember(name) || sequent(name) || clauseSet(name);
}

} // namespace ceres
