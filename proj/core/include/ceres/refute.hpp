#pragma once

#include <map>
#include <string>
#include <vector>

#include "ceres/extract.hpp"

namespace ceres {

// Multiset of atoms occurring in a clause set (both sides).
std::vector<Atom> atomsOf(const ClauseSet& s);
std::vector<Atom> distinctAtomsOf(const ClauseSet& s);

// All 2^k clauses placing each atom on exactly one side. Guarded: refuses
// more than `maxAtoms` atoms.
ClauseSet topClauseSet(const std::vector<Atom>& atoms, std::size_t maxAtoms = 20);

struct WeakeningTerm {
  Clause from;  // clause of S
  Clause to;    // top clause it is weakened to
  friend bool operator==(const WeakeningTerm&, const WeakeningTerm&) = default;
};

// Saturate(S) = { w(C; D) | C in S, D in CLt(Atoms(S)) }, in sorted order.
std::vector<WeakeningTerm> saturate(const ClauseSet& s, std::size_t maxAtoms = 20);

// Per-symbol linear bounds on occurring atom indices.
struct AtomSetSchema {
  std::map<std::string, ArithExpr> bounds;

  friend bool operator==(const AtomSetSchema&, const AtomSetSchema&) = default;
};

std::string toString(const AtomSetSchema& a);

// { P(0), ..., P(bound|N) } per pair, canonically ordered.
std::vector<Atom> evalAtomSet(const AtomSetSchema& a, std::uint64_t n);

// Atom set schema dominating T: Atoms(|T|N|) is contained in the evaluation
// for every N. Defined symbols are bounded group-wide with the recursion
// step shifted down one level, which keeps the bound tight on corpus terms.
AtomSetSchema atomSetSchemaFor(Evaluator& ev, const CTPtr& term);

// Generic refutation of the top clause set schema over an atom set schema:
// at every N, the complete binary resolution tree over evalAtomSet(A, N).
struct TopRefutation {
  AtomSetSchema atoms;

  // Example-18-style recursive rendering for single-symbol atom sets.
  std::string prettyPrint() const;
};

// The plain top-clause-set refutation tree (leaves are top clauses).
const Deduction* topRefutationTree(const std::vector<Atom>& atoms, DeductionArena& arena,
                                   std::size_t maxAtoms = 20);

struct RefutationSchema {
  CTPtr theta;
  std::vector<TermGroup> groups;  // definitions backing theta
  AtomSetSchema atoms;
  TopRefutation rho;
};

// Theorem-8 pipeline: atom set schema for theta, generic top refutation.
RefutationSchema buildRefutationSchema(Evaluator& ev, const CTPtr& theta,
                                       std::vector<TermGroup> groups = {});

// Evaluation of a refutation schema: refutation tree at N with every leaf D
// replaced by w(C; D\C) for the least non-tautological C in |theta|N| that
// subsumes D. The result is a w-resolution refutation of |theta|N|.
const Deduction* evalRefutation(Evaluator& ev, const RefutationSchema& r, std::uint64_t n,
                                DeductionArena& arena, std::size_t maxAtoms = 20);

// Canonic clause sets of ground formulas and sequents.
ClauseSet canonicLeft(const FormulaPtr& f);
ClauseSet canonicRight(const FormulaPtr& f);
ClauseSet canonicFormulaSet(const FormulaPtr& f);  // L(F) u R(F)
ClauseSet canonicSequent(const Sequent& s);

// The cut(pi_F, pi_F) proof whose characteristic clause set is canonic.
ProofPtr canonicProof(const FormulaPtr& f);
// pi_F itself: F |- F, cut-free.
ProofPtr canonicHalfProof(const FormulaPtr& f);

} // namespace ceres
