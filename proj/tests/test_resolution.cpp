#include <doctest.h>

#include "ceres/refute.hpp"
#include "helpers.hpp"

using namespace ceres;
using namespace ceres::test;

TEST_CASE("tautology detection") {
  CHECK(isTautology(cl({ga("P", 0)}, {ga("P", 0)})));
  CHECK(!isTautology(cl({ga("P", 0)}, {ga("P", 1)})));
  CHECK(isTautology(cl({ga("P", 2), ga("Q", 1)}, {ga("P", 2)})));
  CHECK(!isTautology(Clause{}));
}

TEST_CASE("subsumption is per-side set inclusion") {
  CHECK(subsumes(cl({}, {ga("P", 0)}), cl({ga("P", 1)}, {ga("P", 0), ga("P", 2)})));
  CHECK(subsumes(cl({ga("A", 0), ga("A", 0)}, {}), cl({ga("A", 0)}, {})));
  CHECK(!subsumes(cl({}, {ga("A", 0)}), cl({ga("A", 0)}, {})));
}

TEST_CASE("subsumption is a preorder") {
  std::vector<Clause> clauses;
  for (int i = 0; i < 40; ++i) clauses.push_back(randomClause(4, 3));
  for (const auto& c : clauses) CHECK(subsumes(c, c));
  for (const auto& a : clauses)
    for (const auto& b : clauses)
      for (const auto& c : clauses)
        if (subsumes(a, b) && subsumes(b, c)) CHECK(subsumes(a, c));
}

TEST_CASE("resolvents remove every pivot occurrence") {
  CHECK(resolvent(cl({}, {ga("A", 0)}), cl({ga("A", 0)}, {ga("B", 0)}), ga("A", 0)) ==
        cl({}, {ga("B", 0)}));
  // nested step of the two-step refutation example
  Clause inner = resolvent(cl({ga("A", 0)}, {ga("B", 0)}), cl({ga("B", 0)}, {}), ga("B", 0));
  CHECK(inner == cl({ga("A", 0)}, {}));
  CHECK(resolvent(cl({}, {ga("A", 0)}), inner, ga("A", 0)) == Clause{});
  CHECK(resolvent(cl({}, {ga("A", 0), ga("A", 0)}), cl({ga("A", 0), ga("A", 0)}, {}),
                  ga("A", 0)) == Clause{});
}

TEST_CASE("resolvents are sound") {
  for (int round = 0; round < 200; ++round) {
    Clause c = randomClause(3, 2), d = randomClause(3, 2);
    Atom a{"P", randNat(0, 1)};
    Clause r = resolvent(c, d, a);
    // every interpretation over P(0..1), Q(0..1) satisfying c and d
    // satisfies the resolvent
    std::vector<Atom> atoms = {ga("P", 0), ga("P", 1), ga("Q", 0), ga("Q", 1)};
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
      Interpretation i;
      for (std::size_t b = 0; b < atoms.size(); ++b)
        if (mask & (1u << b)) i.assignment[atoms[b]] = true;
      if (satisfies(c, i) && satisfies(d, i)) CHECK(satisfies(r, i));
    }
  }
}

TEST_CASE("checking the two published ground deductions") {
  DeductionArena arena;
  ClauseSet set4 = cs({cl({}, {ga("A", 0)}), cl({ga("A", 0)}, {ga("B", 0)}), cl({ga("B", 0)}, {})});
  const Deduction* inner =
      arena.res(arena.leaf(cl({ga("A", 0)}, {ga("B", 0)})), arena.leaf(cl({ga("B", 0)}, {})),
                ga("B", 0));
  const Deduction* full = arena.res(arena.leaf(cl({}, {ga("A", 0)})), inner, ga("A", 0));
  CHECK(checkDeduction(full, set4, false) == Clause{});
  CHECK(isRefutation(full, set4, false));
  CHECK(depth(full) == 2);

  // the variant that needs a weakening step
  ClauseSet set5 = cs({cl({}, {ga("A", 0)}), cl({ga("B", 0)}, {}), cl({ga("A", 0)}, {})});
  const Deduction* weak = arena.weak(arena.leaf(cl({ga("A", 0)}, {})), cl({}, {ga("B", 0)}));
  const Deduction* inner5 = arena.res(weak, arena.leaf(cl({ga("B", 0)}, {})), ga("B", 0));
  const Deduction* full5 = arena.res(arena.leaf(cl({}, {ga("A", 0)})), inner5, ga("A", 0));
  CHECK(checkDeduction(full5, set5, true) == Clause{});
  CHECK_THROWS_AS(checkDeduction(full5, set5, false), CheckError);

  // single leaf
  const Deduction* leaf = arena.leaf(cl({}, {ga("A", 0)}));
  CHECK(checkDeduction(leaf, set5, false) == cl({}, {ga("A", 0)}));

  // leaf not in the set
  const Deduction* stray = arena.leaf(cl({}, {ga("C", 7)}));
  CHECK_THROWS_AS(checkDeduction(stray, set5, false), CheckError);
}

TEST_CASE("evaluating the one-step schema") {
  DefEnv env;
  Evaluator ev(env);
  // r((P(n+1) |- P(n)), (P(n) |-); P(n))
  RSPtr rho = rsRes(rsLeaf(csLiteral(Sequent{{atn("P", 1, 1)}, {atn("P", 1, 0)}})),
                    rsLeaf(csLiteral(Sequent{{atn("P", 1, 0)}, {}})), atn("P", 1, 0));
  for (std::uint64_t n = 0; n <= 5; ++n) {
    DeductionArena arena;
    const Deduction* d = ev.evalRes(rho, n, arena);
    CHECK(d->clause == cl({ga("P", n + 1)}, {}));
  }
  DeductionArena arena;
  const Deduction* d3 = ev.evalRes(rho, 3, arena);
  CHECK(d3->pivot == ga("P", 3));
  CHECK(d3->left->clause == cl({ga("P", 4)}, {ga("P", 3)}));
}

TEST_CASE("clause-variable schemata thread their arguments") {
  DefEnv env = loadCorpus("ex18.sch");
  Evaluator ev(env);
  // base instance: rhoTop(0; |-)
  DeductionArena arena;
  const Deduction* base =
      ev.evalRes(rsApp("rhoTop", ArithExpr::constant(0), {csLiteral(Sequent{})}), 0, arena);
  CHECK(base->kind == Deduction::Kind::Res);
  CHECK(base->pivot == ga("P", 0));
  CHECK(base->left->clause == cl({}, {ga("P", 0)}));
  CHECK(base->right->clause == cl({ga("P", 0)}, {}));
  CHECK(base->clause == Clause{});

  // instances refute the top clause sets over P(0..N)
  for (std::uint64_t n = 0; n <= 6; ++n) {
    DeductionArena a2;
    const Deduction* d =
        ev.evalRes(rsApp("rhoTop", ArithExpr::var(), {csLiteral(Sequent{})}), n, a2);
    std::vector<Atom> atoms;
    for (std::uint64_t i = 0; i <= n; ++i) atoms.push_back(ga("P", i));
    CHECK(isRefutation(d, topClauseSet(atoms), false));
    CHECK(leafCount(d) == (std::size_t{1} << (n + 1)));
    CHECK(depth(d) == n + 1);
  }
}

TEST_CASE("section 4.1 refutation instance at 1") {
  DefEnv env = loadCorpus("sec41.sch");
  Evaluator ev(env);
  DeductionArena arena;
  const Deduction* d =
      ev.evalRes(rsApp("rho41", ArithExpr{1, 1}, {csLiteral(Sequent{})}), 1, arena);
  CHECK(leafCount(d) == 4);
  ClauseSet t = ev.evalClauseSetOf(ctApp("T41", ArithExpr::var()), 1);
  CHECK(isRefutation(d, t, false));
}

TEST_CASE("defined clause schemata unfold") {
  DefEnv env = loadCorpus("sec41.sch");
  Evaluator ev(env);
  for (std::uint64_t n = 0; n <= 5; ++n) {
    Clause c = ev.evalClauseSchema(csApp("CL15", ArithExpr::var()), n, {});
    Clause expected;
    for (std::uint64_t i = 0; i <= n; ++i) expected.ante.push_back(ga("P", i));
    CHECK(setEqual(c, expected));
  }
}

TEST_CASE("evaluator output always passes the checker on its own leaves") {
  DefEnv env = loadCorpus("ch6.sch");
  Evaluator ev(env);
  for (std::uint64_t n = 0; n <= 6; ++n) {
    DeductionArena arena;
    const Deduction* d = ev.evalRes(rsApp("rho", ArithExpr{1, 1}, {}), n, arena);
    ClauseSet leaves;
    forEachLeaf(d, [&](const Deduction& leaf) { leaves.insert(leaf.clause); });
    CHECK(checkDeduction(d, leaves, true) == d->clause);
  }
}

TEST_CASE("depth") {
  DeductionArena arena;
  const Deduction* leaf = arena.leaf(cl({ga("P", 0)}, {}));
  CHECK(depth(leaf) == 0);
  // weakening does not add depth
  const Deduction* w = arena.weak(leaf, cl({}, {ga("Q", 0)}));
  CHECK(depth(w) == 0);
  // balanced tree over k pivots has depth k
  for (std::size_t k = 1; k <= 6; ++k) {
    std::vector<Atom> atoms;
    for (std::uint64_t i = 0; i < k; ++i) atoms.push_back(ga("P", i));
    DeductionArena a2;
    CHECK(depth(topRefutationTree(atoms, a2)) == k);
  }
}

TEST_CASE("deep chains do not overflow the stack") {
  DefEnv env = loadCorpus("ch6.sch");
  Evaluator ev(env);
  DeductionArena arena;
  const std::uint64_t n = 1 << 16;
  const Deduction* d = ev.evalRes(rsApp("rhoD", ArithExpr::var(), {}), n, arena);
  CHECK(arena.size() >= (std::size_t{1} << 16));
  CHECK(depth(d) == n);
  CHECK(d->clause == cl({ga("P", n)}, {}));
  ClauseSet leaves;
  forEachLeaf(d, [&](const Deduction& leaf) { leaves.insert(leaf.clause); });
  CHECK(checkDeduction(d, leaves, false) == d->clause);
}

namespace {

// Direct summation oracle for the iterated-sum closed form.
Rational sumByHand(const Rational& k, const Polynomial& p, std::uint64_t n) {
  Rational acc = k;
  for (std::uint64_t i = 0; i < n; ++i) acc = acc + evalPoly(p, i);
  return acc;
}

} // namespace

TEST_CASE("iterated sums have exact polynomial closed forms") {
  // q(0)=1, q(n+1)=q(n)+1  =>  q(n)=n+1
  Polynomial one = Polynomial::constant(Rational{1});
  Polynomial q1 = iterateSum(Rational{1}, one);
  CHECK(q1 == Polynomial{{Rational{1}, Rational{1}}});
  // q(0)=0, q(n+1)=q(n)+n  =>  q(n)=n(n-1)/2
  Polynomial q2 = iterateSum(Rational{0}, Polynomial::var());
  for (std::uint64_t n = 0; n <= 10; ++n) {
    CHECK(evalPoly(q2, n) == sumByHand(Rational{0}, Polynomial::var(), n));
    CHECK(evalPoly(q2, n) ==
          Rational{static_cast<std::int64_t>(n * (n - 1) / 2)});
  }
}

TEST_CASE("clause bounds") {
  DefEnv env = loadCorpus("ch6.sch");
  Evaluator ev(env);
  // #(r(C, D; A)) = 2
  RSPtr two = rsRes(rsLeaf(csLiteral(Sequent{{at("C", 0)}, {}})),
                    rsLeaf(csLiteral(Sequent{{at("D", 0)}, {}})), at("A", 0));
  ClauseBound b = ev.clauseBound(two);
  CHECK(b.exact);
  CHECK(evalPoly(b.poly, std::uint64_t{0}) == Rational{2});

  // the chain refutation stays within its polynomial bound
  ClauseBound chain = ev.clauseBound(rsApp("rho", ArithExpr{1, 1}, {}));
  CHECK(chain.exact);
  for (std::uint64_t a = 0; a <= 6; ++a) {
    DeductionArena arena;
    const Deduction* d = ev.evalRes(rsApp("rho", ArithExpr{1, 1}, {}), a, arena);
    Rational bound = evalPoly(chain.poly, a);
    CHECK(Rational{static_cast<std::int64_t>(distinctLeafClauseCount(d))}.num * bound.den <=
          bound.num);
  }
}

TEST_CASE("clause-variable schemata get advisory bounds that still hold early") {
  for (const char* file : {"sec41.sch", "ex18.sch"}) {
    DefEnv env = loadCorpus(file);
    Evaluator ev(env);
    const char* name = env.resDefs.front().name.c_str();
    RSPtr call = rsApp(name, ArithExpr{1, 1}, {csLiteral(Sequent{})});
    ClauseBound b = ev.clauseBound(call);
    CHECK(!b.exact);
    for (std::uint64_t a = 0; a <= 6; ++a) {
      DeductionArena arena;
      const Deduction* d = ev.evalRes(call, a, arena);
      Rational bound = evalPoly(b.poly, a);
      CHECK(Rational{static_cast<std::int64_t>(distinctLeafClauseCount(d))}.num * bound.den <=
            bound.num);
    }
  }
}
