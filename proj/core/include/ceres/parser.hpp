#pragma once

#include <string>

#include "ceres/defenv.hpp"

namespace ceres {

// Parses a schema file into a frozen, validated environment. Diagnostics
// carry line and column. See docs/format.md for the grammar.
DefEnv parse(const std::string& text);

// Single-item helpers for CLI flags and tests. Names are resolved against
// env's definitions.
Sequent parseSequent(const std::string& text, const DefEnv& env);
ClauseSet parseClauseSet(const std::string& text, const DefEnv& env);
FormulaPtr parseFormula(const std::string& text, const DefEnv& env);
CSPtr parseClauseSchemaText(const std::string& text, const DefEnv& env);
ArithExpr parseArith(const std::string& text);
Config parseConfig(const std::string& text);  // "010|1" or "**o|*" style masks

} // namespace ceres
