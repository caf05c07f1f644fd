#include "ceres/sequent.hpp"

#include <algorithm>

#include "ceres/error.hpp"

namespace ceres {

namespace {

bool listEqual(const std::vector<FormulaPtr>& a, const std::vector<FormulaPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!equal(a[i], b[i])) return false;
  return true;
}

bool multisetIncluded(const std::vector<FormulaPtr>& a, const std::vector<FormulaPtr>& b) {
  std::vector<bool> used(b.size(), false);
  for (const auto& f : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && equal(f, b[j])) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

} // namespace

bool operator==(const Sequent& a, const Sequent& b) {
  return listEqual(a.ante, b.ante) && listEqual(a.succ, b.succ);
}

Sequent compose(const Sequent& s, const Sequent& t) {
  Sequent r = s;
  r.ante.insert(r.ante.end(), t.ante.begin(), t.ante.end());
  r.succ.insert(r.succ.end(), t.succ.begin(), t.succ.end());
  return r;
}

bool subsequent(const Sequent& s, const Sequent& t) {
  return multisetIncluded(s.ante, t.ante) && multisetIncluded(s.succ, t.succ);
}

Sequent substParamSequent(const Sequent& s, const ArithExpr& a) {
  Sequent r;
  r.ante.reserve(s.ante.size());
  r.succ.reserve(s.succ.size());
  for (const auto& f : s.ante) r.ante.push_back(substParam(f, a));
  for (const auto& f : s.succ) r.succ.push_back(substParam(f, a));
  return r;
}

bool isClauseSchema(const Sequent& s) {
  auto atom = [](const FormulaPtr& f) { return isAtomSchema(f); };
  return std::all_of(s.ante.begin(), s.ante.end(), atom) &&
         std::all_of(s.succ.begin(), s.succ.end(), atom);
}

std::string toString(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.ante.size(); ++i) {
    if (i) out += ", ";
    out += toString(s.ante[i]);
  }
  out += s.ante.empty() ? "|-" : " |-";
  for (std::size_t i = 0; i < s.succ.size(); ++i) {
    out += i ? ", " : " ";
    out += toString(s.succ[i]);
  }
  return out;
}

Config Config::allOff(const Sequent& s) {
  return {std::vector<bool>(s.ante.size(), false), std::vector<bool>(s.succ.size(), false)};
}

Config Config::allOn(const Sequent& s) {
  return {std::vector<bool>(s.ante.size(), true), std::vector<bool>(s.succ.size(), true)};
}

std::string Config::key() const {
  std::string k;
  k.reserve(ante.size() + succ.size() + 1);
  for (bool b : ante) k += b ? '1' : '0';
  k += '|';
  for (bool b : succ) k += b ? '1' : '0';
  return k;
}

Sequent applyConfig(const Sequent& s, const Config& omega) {
  if (!omega.matches(s))
    throw Error("configuration length mismatch: sequent " + toString(s) +
                " vs mask " + omega.key());
  Sequent r;
  for (std::size_t i = 0; i < s.ante.size(); ++i)
    if (omega.ante[i]) r.ante.push_back(s.ante[i]);
  for (std::size_t i = 0; i < s.succ.size(); ++i)
    if (omega.succ[i]) r.succ.push_back(s.succ[i]);
  return r;
}

} // namespace ceres
