#pragma once

#include <string>

#include "ceres/defenv.hpp"

namespace ceres {

// Schema-file rendering; parse(print(env)) reproduces env.
std::string print(const DefEnv& env);

std::string printProofTerm(const ProofPtr& p);

bool operator==(const DefEnv& a, const DefEnv& b);

} // namespace ceres
