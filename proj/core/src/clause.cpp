#include "ceres/clause.hpp"

#include <algorithm>

namespace ceres {

std::string toString(const Atom& a) {
  return a.sym + "(" + std::to_string(a.idx) + ")";
}

namespace {

std::vector<Atom> normalizedSide(std::vector<Atom> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool sideIncluded(const std::vector<Atom>& a, const std::vector<Atom>& b) {
  for (const auto& x : a)
    if (std::find(b.begin(), b.end(), x) == b.end()) return false;
  return true;
}

} // namespace

Clause normalized(const Clause& c) {
  return {normalizedSide(c.ante), normalizedSide(c.succ)};
}

bool setEqual(const Clause& c, const Clause& d) {
  return normalized(c) == normalized(d);
}

bool isTautology(const Clause& c) {
  for (const auto& a : c.ante)
    if (std::find(c.succ.begin(), c.succ.end(), a) != c.succ.end()) return true;
  return false;
}

bool subsumes(const Clause& c, const Clause& d) {
  return sideIncluded(c.ante, d.ante) && sideIncluded(c.succ, d.succ);
}

Clause resolvent(const Clause& c, const Clause& d, const Atom& a) {
  Clause r;
  r.ante = c.ante;
  for (const auto& x : d.ante)
    if (x != a) r.ante.push_back(x);
  for (const auto& x : c.succ)
    if (x != a) r.succ.push_back(x);
  r.succ.insert(r.succ.end(), d.succ.begin(), d.succ.end());
  return normalized(r);
}

std::string toString(const Clause& c) {
  std::string out;
  for (std::size_t i = 0; i < c.ante.size(); ++i) {
    if (i) out += ", ";
    out += toString(c.ante[i]);
  }
  out += c.ante.empty() ? "|-" : " |-";
  for (std::size_t i = 0; i < c.succ.size(); ++i) {
    out += i ? ", " : " ";
    out += toString(c.succ[i]);
  }
  return out;
}

ClauseSet setUnion(const ClauseSet& a, const ClauseSet& b) {
  ClauseSet r = a;
  r.clauses.insert(b.clauses.begin(), b.clauses.end());
  return r;
}

ClauseSet setProduct(const ClauseSet& a, const ClauseSet& b) {
  ClauseSet r;
  for (const auto& c : a.clauses)
    for (const auto& d : b.clauses) {
      Clause cd = c;
      cd.ante.insert(cd.ante.end(), d.ante.begin(), d.ante.end());
      cd.succ.insert(cd.succ.end(), d.succ.begin(), d.succ.end());
      r.insert(cd);
    }
  return r;
}

std::string toString(const ClauseSet& s) {
  std::string out = "{ ";
  bool first = true;
  for (const auto& c : s.clauses) {
    if (!first) out += "; ";
    first = false;
    out += toString(c);
  }
  out += " }";
  return out;
}

} // namespace ceres
