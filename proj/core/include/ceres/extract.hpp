#pragma once

#include <string>
#include <vector>

#include "ceres/eval.hpp"

namespace ceres {

// Extraction result: the root term plus the clause-set term definitions it
// needs. Groups are keyed per proof symbol; members are named
// "<symbol>@<configkey>" and are mutually recursive within a group.
struct CharExtraction {
  CTPtr term;
  std::vector<TermGroup> groups;
};

// Characteristic term of a link-free proof under omega (ground or schematic;
// the proof must have been checked).
CTPtr extractProofTerm(Evaluator& ev, const ProofPtr& proof, const Config& omega);

// Characteristic term schema of a defined proof symbol under omega, with
// definitions generated for every configuration reachable from omega. The
// root term is <name>@<key>(n).
CharExtraction extractChar(Evaluator& ev, const std::string& proofName, const Config& omega);

// Environment extended with the extraction's term groups appended; lets one
// Evaluator resolve the generated symbols.
DefEnv withExtraction(const DefEnv& env, const CharExtraction& ex);

std::string configMemberName(const std::string& proofName, const Config& omega);

} // namespace ceres
