#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace ceres {

/// Ground indexed atom P(i).
struct Atom {
  std::string sym;
  std::uint64_t idx{0};

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom&, const Atom&) = default;
};

std::string toString(const Atom& a);

// Atomic sequent. Sides are kept as written; set-based comparisons and the
// normalized form implement the "clauses as sets of atoms" reading used by
// the resolution calculus.
struct Clause {
  std::vector<Atom> ante, succ;

  friend bool operator==(const Clause&, const Clause&) = default;
  friend std::strong_ordering operator<=>(const Clause&, const Clause&) = default;

  bool empty() const { return ante.empty() && succ.empty(); }
};

// Per-side sorted with duplicates removed.
Clause normalized(const Clause& c);
bool setEqual(const Clause& c, const Clause& d);

bool isTautology(const Clause& c);

// C subsumes D: set inclusion per side.
bool subsumes(const Clause& c, const Clause& d);

// res(C, D; A) = Gamma, Pi' |- Delta', Lambda with every occurrence of A
// removed from Delta and Pi; result normalized.
Clause resolvent(const Clause& c, const Clause& d, const Atom& a);

std::string toString(const Clause& c);

// Canonical set of normalized clauses, ordered by (ante, succ) under
// (symbol, index) atom order.
struct ClauseSet {
  std::set<Clause> clauses;

  friend bool operator==(const ClauseSet&, const ClauseSet&) = default;

  void insert(const Clause& c) { clauses.insert(normalized(c)); }
  bool contains(const Clause& c) const { return clauses.count(normalized(c)) > 0; }
  std::size_t size() const { return clauses.size(); }
  bool empty() const { return clauses.empty(); }
};

ClauseSet setUnion(const ClauseSet& a, const ClauseSet& b);
// Pairwise composition {C o D}.
ClauseSet setProduct(const ClauseSet& a, const ClauseSet& b);

std::string toString(const ClauseSet& s);

} // namespace ceres
