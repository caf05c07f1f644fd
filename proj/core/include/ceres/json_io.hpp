#pragma once

#include <json.hpp>

#include "ceres/defenv.hpp"
#include "ceres/extract.hpp"
#include "ceres/refute.hpp"

namespace ceres {

using Json = nlohmann::json;

Json toJson(const ArithExpr& a);
Json toJson(const FormulaPtr& f);
Json toJson(const Sequent& s);
Json toJson(const ProofPtr& p);
Json toJson(const Clause& c);
Json toJson(const ClauseSet& s);
Json toJson(const CTPtr& t);
Json toJson(const TermGroup& g);
Json toJson(const CSPtr& c);
Json toJson(const RSPtr& r);
Json toJson(const Deduction* d);
Json toJson(const AtomSetSchema& a);
Json toJson(const CharExtraction& e);

ArithExpr arithFromJson(const Json& j);
FormulaPtr formulaFromJson(const Json& j);
Sequent sequentFromJson(const Json& j);
ProofPtr proofFromJson(const Json& j);
Clause clauseFromJson(const Json& j);
ClauseSet clauseSetFromJson(const Json& j);
CTPtr termFromJson(const Json& j);
TermGroup termGroupFromJson(const Json& j);
CSPtr clauseSchemaFromJson(const Json& j);
RSPtr resSchemaFromJson(const Json& j);
const Deduction* deductionFromJson(const Json& j, DeductionArena& arena);

} // namespace ceres
