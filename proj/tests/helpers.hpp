#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "ceres/error.hpp"
#include "ceres/eval.hpp"
#include "ceres/oracle.hpp"
#include "ceres/parser.hpp"

namespace ceres::test {

inline std::string corpusPath(const std::string& file) {
  return std::string(CERES_CORPUS_DIR) + "/" + file;
}

inline DefEnv loadCorpus(const std::string& file) {
  std::ifstream in(corpusPath(file));
  std::stringstream ss;
  ss << in.rdbuf();
  DefEnv env = parse(ss.str());
  Evaluator ev(env);
  ev.validate();
  return env;
}

// Shorthand builders for ground material.
inline FormulaPtr at(const std::string& sym, std::uint64_t i) {
  return mkAtom(sym, ArithExpr::constant(i));
}
inline FormulaPtr atn(const std::string& sym, std::uint64_t coeff, std::uint64_t off) {
  return mkAtom(sym, ArithExpr{coeff, off});
}
inline Atom ga(const std::string& sym, std::uint64_t i) { return Atom{sym, i}; }

inline Clause cl(std::vector<Atom> ante, std::vector<Atom> succ) {
  return Clause{std::move(ante), std::move(succ)};
}

inline ClauseSet cs(std::initializer_list<Clause> clauses) {
  ClauseSet s;
  for (const auto& c : clauses) s.insert(c);
  return s;
}

// Deterministic RNG for the randomized suites.
inline std::mt19937& rng() {
  static std::mt19937 gen(20240811);
  return gen;
}

inline std::uint64_t randNat(std::uint64_t lo, std::uint64_t hi) {
  std::uniform_int_distribution<std::uint64_t> d(lo, hi);
  return d(rng());
}

// Random ground clause over symbols P/Q with indices < maxIdx.
inline Clause randomClause(std::size_t maxAtoms, std::uint64_t maxIdx) {
  Clause c;
  std::size_t n = randNat(0, maxAtoms);
  for (std::size_t i = 0; i < n; ++i) {
    Atom a{randNat(0, 1) ? "P" : "Q", randNat(0, maxIdx - 1)};
    if (randNat(0, 1))
      c.ante.push_back(a);
    else
      c.succ.push_back(a);
  }
  return c;
}

inline ClauseSet randomClauseSet(std::size_t clauses, std::size_t maxAtoms, std::uint64_t maxIdx) {
  ClauseSet s;
  for (std::size_t i = 0; i < clauses; ++i) s.insert(randomClause(maxAtoms, maxIdx));
  return s;
}

// Random ground formula of bounded depth over P(0..maxIdx-1).
inline FormulaPtr randomFormula(std::size_t depth, std::uint64_t maxIdx) {
  if (depth == 0 || randNat(0, 3) == 0) return at(randNat(0, 1) ? "P" : "Q", randNat(0, maxIdx - 1));
  switch (randNat(0, 3)) {
    case 0: return mkNeg(randomFormula(depth - 1, maxIdx));
    case 1: return mkAnd(randomFormula(depth - 1, maxIdx), randomFormula(depth - 1, maxIdx));
    case 2: return mkOr(randomFormula(depth - 1, maxIdx), randomFormula(depth - 1, maxIdx));
    default: return mkImpl(randomFormula(depth - 1, maxIdx), randomFormula(depth - 1, maxIdx));
  }
}

} // namespace ceres::test
