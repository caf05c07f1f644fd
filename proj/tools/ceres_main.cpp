#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "ceres/error.hpp"
#include "ceres/eval.hpp"
#include "ceres/extract.hpp"
#include "ceres/json_io.hpp"
#include "ceres/oracle.hpp"
#include "ceres/parser.hpp"
#include "ceres/printer.hpp"
#include "ceres/refute.hpp"

using namespace ceres;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t cacheLimitFromEnv() {
  const char* v = std::getenv("CERES_CACHE_SIZE");
  return v ? static_cast<std::size_t>(std::strtoull(v, nullptr, 10)) : 0;
}

struct Session {
  DefEnv env;
  Evaluator ev;

  explicit Session(const std::string& schemaPath)
      : env(parse(slurp(schemaPath))), ev(env, cacheLimitFromEnv()) {
    ev.validate();
  }
};

// Inline text starts with '{'; otherwise a file holding either a bare
// clause set or a schema file with clauses blocks.
ClauseSet loadClauseSet(const std::string& spec, const std::string& name) {
  std::string text = !spec.empty() && spec[0] == '{' ? spec : slurp(spec);
  std::size_t firstBrace = text.find_first_not_of(" \t\r\n");
  if (firstBrace != std::string::npos && text[firstBrace] == '{')
    return parseClauseSet(text.substr(firstBrace), DefEnv{});
  DefEnv env = parse(text);
  if (env.clauseSets.empty()) throw Error("no clause set found in " + spec);
  if (name.empty()) return env.clauseSets.front().second;
  const ClauseSet* s = env.clauseSet(name);
  if (!s) throw Error("no clause set named " + name + " in " + spec);
  return *s;
}

// "N" or "A..B".
std::pair<std::uint64_t, std::uint64_t> parseRange(const std::string& at) {
  auto dots = at.find("..");
  if (dots == std::string::npos) {
    std::uint64_t n = std::strtoull(at.c_str(), nullptr, 10);
    return {n, n};
  }
  return {std::strtoull(at.substr(0, dots).c_str(), nullptr, 10),
          std::strtoull(at.substr(dots + 2).c_str(), nullptr, 10)};
}

// Instances of a range may be evaluated in parallel; each task gets its own
// evaluator over the shared frozen environment.
template <class Fn>
void forRange(const DefEnv& env, const std::string& at, Fn fn) {
  auto [lo, hi] = parseRange(at);
  if (lo == hi) {
    Evaluator ev(env, cacheLimitFromEnv());
    std::cout << fn(ev, lo);
    return;
  }
  std::vector<std::future<std::string>> results;
  for (std::uint64_t n = lo; n <= hi; ++n)
    results.push_back(std::async(std::launch::async, [&env, n, &fn] {
      Evaluator ev(env, cacheLimitFromEnv());
      return fn(ev, n);
    }));
  for (auto& r : results) std::cout << r.get();
}

Config configFor(const Sequent& end, const std::string& mask) {
  if (mask.empty()) return Config::allOff(end);
  Config c = parseConfig(mask);
  if (!c.matches(end)) throw Error("configuration does not match the end-sequent");
  return c;
}

void writeFile(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

int runEval(const std::string& schema, const std::string& formula, const std::string& proof,
            const std::string& res, const std::string& arg, const std::string& at,
            const std::string& jsonPath) {
  Session s(schema);
  if (!formula.empty()) {
    if (!s.env.formula(formula)) throw Error("unknown formula " + formula);
    forRange(s.env, at, [&](Evaluator& ev, std::uint64_t n) {
      FormulaPtr f = ev.evalFormula(mkDefAtom(formula, parseArith(arg)), n);
      if (!jsonPath.empty()) writeFile(jsonPath, toJson(f).dump(2) + "\n");
      return toString(f) + "\n";
    });
    return 0;
  }
  if (!proof.empty()) {
    if (!s.env.proof(proof)) throw Error("unknown proof " + proof);
    forRange(s.env, at, [&](Evaluator& ev, std::uint64_t n) {
      ProofPtr g = ev.evalProof(proof, evalArith(parseArith(arg), n));
      Sequent end = ev.checkProof(g);
      if (!jsonPath.empty()) writeFile(jsonPath, toJson(g).dump(2) + "\n");
      return printProofTerm(g) + "\n|- end: " + toString(end) + "\n";
    });
    return 0;
  }
  if (!res.empty()) {
    if (!s.env.resDef(res)) throw Error("unknown resolution schema " + res);
    forRange(s.env, at, [&](Evaluator& ev, std::uint64_t n) {
      DeductionArena arena;
      const Deduction* d = ev.evalRes(rsApp(res, parseArith(arg), {}), n, arena);
      if (!jsonPath.empty()) writeFile(jsonPath, toJson(d).dump(2) + "\n");
      return toString(d) + "\nend-clause: " + toString(d->clause) + "\n";
    });
    return 0;
  }
  throw Error("eval needs one of --formula/--proof/--res");
}

int runCheck(const std::string& schema, const std::string& proof) {
  Session s(schema);
  if (!proof.empty()) {
    const ProofDef* d = s.env.proof(proof);
    if (!d) throw Error("unknown proof " + proof);
    s.ev.checkProofDef(*d);
    std::cout << "ok: " << proof << " with end-sequent " << toString(d->end) << "\n";
    return 0;
  }
  for (const auto& d : s.env.proofs) {
    s.ev.checkProofDef(d);
    std::cout << "ok: " << d.name << " with end-sequent " << toString(d.end) << "\n";
  }
  return 0;
}

int runChar(const std::string& schema, const std::string& proof, const std::string& mask,
            const std::string& at, const std::string& jsonPath, bool pruneTautologies) {
  Session s(schema);
  const ProofDef* d = s.env.proof(proof);
  if (!d) throw Error("unknown proof " + proof);
  Config omega = configFor(d->end, mask);
  CharExtraction ex = extractChar(s.ev, proof, omega);
  std::cout << "term: " << toString(ex.term) << "\n";
  for (const auto& g : ex.groups)
    for (const auto& m : g.members) {
      std::cout << m << " {\n  0 -> " << toString(g.defs.at(m).base) << ";\n  n+1 -> "
                << toString(g.defs.at(m).rec) << ";\n}\n";
    }
  if (!jsonPath.empty()) writeFile(jsonPath, toJson(ex).dump(2) + "\n");
  if (!at.empty()) {
    DefEnv extended = withExtraction(s.env, ex);
    forRange(extended, at, [&](Evaluator& ev, std::uint64_t n) {
      ClauseSet set = ev.evalClauseSetOf(ex.term, n);
      if (pruneTautologies) {
        ClauseSet pruned;
        for (const auto& c : set.clauses)
          if (!isTautology(c)) pruned.insert(c);
        set = pruned;
      }
      return std::to_string(n) + " | " + toString(set) + "\n";
    });
  }
  return 0;
}

int runClauses(const std::string& schema, const std::string& term, const std::string& at) {
  Session s(schema);
  if (!s.env.termMember(term)) throw Error("unknown clause set term symbol " + term);
  forRange(s.env, at, [&](Evaluator& ev, std::uint64_t n) {
    CTPtr ground = ev.evalCT(ctApp(term, ArithExpr::var()), n);
    ClauseSet set = ev.ctSemantics(ground);
    return toString(ground) + "\n" + toString(set) + "\n";
  });
  return 0;
}

int runRefute(const std::string& schema, const std::string& proof, const std::string& mask,
              const std::string& at, bool verify, const std::string& emitTree) {
  Session s(schema);
  const ProofDef* d = s.env.proof(proof);
  if (!d) throw Error("unknown proof " + proof);
  Config omega = configFor(d->end, mask);
  CharExtraction ex = extractChar(s.ev, proof, omega);
  DefEnv extended = withExtraction(s.env, ex);
  Evaluator ev(extended, cacheLimitFromEnv());
  RefutationSchema rs = buildRefutationSchema(ev, ex.term, ex.groups);
  std::cout << "theta: " << toString(rs.theta) << "\n";
  std::cout << "atom set schema: " << toString(rs.atoms) << "\n";
  std::cout << rs.rho.prettyPrint() << "\n";
  if (at.empty()) return 0;
  auto [lo, hi] = parseRange(at);
  for (std::uint64_t n = lo; n <= hi; ++n) {
    DeductionArena arena;
    const Deduction* inst = evalRefutation(ev, rs, n, arena);
    std::cout << "N=" << n << ": " << leafCount(inst) << " leaves, depth " << depth(inst)
              << ", end-clause " << toString(inst->clause) << "\n";
    if (!emitTree.empty()) writeFile(emitTree, toJson(inst).dump(2) + "\n");
    if (verify) {
      ClauseSet instSet = ev.evalClauseSetOf(rs.theta, n);
      Clause end = checkDeduction(inst, instSet, true);
      if (!end.empty()) throw Error("instance does not end in the empty clause");
      if (satisfiable(instSet)) throw Error("oracle found the instance satisfiable");
      std::cout << "N=" << n << ": verified against " << instSet.size()
                << " clauses; oracle agrees the set is unsatisfiable\n";
    }
  }
  return 0;
}

int runVerify(const std::string& schema, const std::string& res, const std::string& arg,
              const std::vector<std::string>& withArgs, const std::string& proof,
              const std::string& clausesSpec, const std::string& clausesName,
              const std::string& at, bool weakening) {
  Session s(schema);
  if (!s.env.resDef(res)) throw Error("unknown resolution schema " + res);
  std::vector<CSPtr> clauseArgs;
  for (const auto& w : withArgs) clauseArgs.push_back(parseClauseSchemaText(w, s.env));
  auto [lo, hi] = parseRange(at);
  for (std::uint64_t n = lo; n <= hi; ++n) {
    ClauseSet against;
    if (!proof.empty()) {
      const ProofDef* d = s.env.proof(proof);
      if (!d) throw Error("unknown proof " + proof);
      CharExtraction ex = extractChar(s.ev, proof, Config::allOff(d->end));
      DefEnv extended = withExtraction(s.env, ex);
      Evaluator ev2(extended, cacheLimitFromEnv());
      against = ev2.evalClauseSetOf(ex.term, n);
    } else if (!clausesSpec.empty()) {
      against = loadClauseSet(clausesSpec, clausesName);
    } else {
      throw Error("verify needs --proof or --clauses to check against");
    }
    DeductionArena arena;
    const Deduction* ded = s.ev.evalRes(rsApp(res, parseArith(arg), clauseArgs), n, arena);
    Clause end = checkDeduction(ded, against, weakening);
    std::cout << "N=" << n << ": end-clause " << toString(end) << "\n";
    if (end.empty() && satisfiable(against))
      throw Error("refutation checked but the oracle found a model; checker bug");
  }
  return 0;
}

int runSat(const std::string& clausesSpec, const std::string& name) {
  ClauseSet s = loadClauseSet(clausesSpec, name);
  auto model = satisfiable(s);
  if (!model) {
    std::cout << "unsatisfiable\n";
    return 1;
  }
  std::cout << "satisfiable:";
  for (const auto& [a, v] : model->assignment)
    if (v) std::cout << " " << toString(a);
  std::cout << " (all others false)\n";
  return 0;
}

int runEntails(const std::string& left, const std::string& right, const std::string& name) {
  ClauseSet l = loadClauseSet(left, name);
  ClauseSet r = loadClauseSet(right, name);
  bool ok = entails(l, r);
  std::cout << (ok ? "entails\n" : "does not entail\n");
  return ok ? 0 : 1;
}

int runSaturate(const std::string& clausesSpec, const std::string& name) {
  ClauseSet s = loadClauseSet(clausesSpec, name);
  auto terms = saturate(s);
  for (const auto& t : terms)
    std::cout << "w(" << toString(t.from) << "; " << toString(t.to) << ")\n";
  std::cout << terms.size() << " weakening terms\n";
  return 0;
}

int runCanonic(const std::string& schema, const std::string& sequentText,
               const std::string& formulaText) {
  DefEnv env = schema.empty() ? DefEnv{} : parse(slurp(schema));
  if (!formulaText.empty()) {
    FormulaPtr f = parseFormula(formulaText, env);
    std::cout << "L: " << toString(canonicLeft(f)) << "\n";
    std::cout << "R: " << toString(canonicRight(f)) << "\n";
    std::cout << "C: " << toString(canonicFormulaSet(f)) << "\n";
    return 0;
  }
  Sequent s = parseSequent(sequentText, env);
  std::cout << toString(canonicSequent(s)) << "\n";
  return 0;
}

int runGolden(const std::string& schema, const std::string& proof, std::uint64_t upto) {
  Session s(schema);
  const ProofDef* d = s.env.proof(proof);
  if (!d) throw Error("unknown proof " + proof);
  CharExtraction ex = extractChar(s.ev, proof, Config::allOff(d->end));
  DefEnv extended = withExtraction(s.env, ex);
  Evaluator ev(extended, cacheLimitFromEnv());
  for (std::uint64_t n = 0; n <= upto; ++n) {
    ClauseSet set = ev.evalClauseSetOf(ex.term, n);
    std::cout << n << " | ";
    bool first = true;
    for (const auto& c : set.clauses) {
      if (!first) std::cout << "; ";
      first = false;
      std::cout << toString(c);
    }
    std::cout << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"CERES-style cut-elimination machinery for propositional proof schemata"};
  app.require_subcommand(1);

  std::string schema, formula, proof, res, term, arg = "n", at, mask, jsonPath, emitTree;
  std::string clausesSpec, clausesLeft, clausesRight, name, sequentText, formulaText;
  std::vector<std::string> withArgs;
  bool verify = false, weakening = false, prune = false;
  std::uint64_t upto = 9;

  auto addSchema = [&](CLI::App* c, bool required = true) {
    auto* opt = c->add_option("-s,--schema", schema, "schema definition file");
    if (required) opt->required();
  };

  auto* evalCmd = app.add_subcommand("eval", "evaluate a formula/proof/res schema at N");
  addSchema(evalCmd);
  evalCmd->add_option("--formula", formula, "defined formula symbol");
  evalCmd->add_option("--proof", proof, "defined proof symbol");
  evalCmd->add_option("--res", res, "defined resolution symbol");
  evalCmd->add_option("--arg", arg, "argument expression (default n)");
  evalCmd->add_option("--at", at, "parameter value N or range A..B")->required();
  evalCmd->add_option("--json", jsonPath, "write the evaluated object as JSON");

  auto* checkCmd = app.add_subcommand("check", "check proof well-formedness");
  addSchema(checkCmd);
  checkCmd->add_option("--proof", proof, "proof symbol (default: all)");

  auto* charCmd = app.add_subcommand("char", "characteristic clause-set term schema");
  addSchema(charCmd);
  charCmd->add_option("--proof", proof)->required();
  charCmd->add_option("--config", mask, "configuration mask like 01|1 (default all-0)");
  charCmd->add_option("--at", at, "also evaluate the clause set at N or A..B");
  charCmd->add_option("--json", jsonPath, "write the term schema as JSON");
  charCmd->add_flag("--prune-tautologies", prune, "drop tautological clauses from output");

  auto* clausesCmd = app.add_subcommand("clauses", "evaluate a clause set term schema");
  addSchema(clausesCmd);
  clausesCmd->add_option("--term", term)->required();
  clausesCmd->add_option("--at", at)->required();

  auto* refuteCmd = app.add_subcommand("refute", "two-step refutation schema pipeline");
  addSchema(refuteCmd);
  refuteCmd->add_option("--proof", proof)->required();
  refuteCmd->add_option("--config", mask);
  refuteCmd->add_option("--at", at, "instantiate at N or A..B");
  refuteCmd->add_flag("--verify", verify, "check the instance and cross-check the oracle");
  refuteCmd->add_option("--emit-tree", emitTree, "write the instance deduction as JSON");

  auto* verifyCmd = app.add_subcommand("verify", "check a resolution schema instance");
  addSchema(verifyCmd);
  verifyCmd->add_option("--res", res)->required();
  verifyCmd->add_option("--arg", arg, "application argument (default n)");
  verifyCmd->add_option("--with", withArgs, "clause arguments for the application");
  verifyCmd->add_option("--proof", proof, "check against this proof's clause sets");
  verifyCmd->add_option("--clauses", clausesSpec, "check against a clause set file/inline");
  verifyCmd->add_option("--name", name, "clause set name inside the file");
  verifyCmd->add_option("--at", at)->required();
  verifyCmd->add_flag("--weakening", weakening, "allow weakening terms");

  auto* satCmd = app.add_subcommand("sat", "satisfiability of a clause set");
  satCmd->add_option("--clauses", clausesSpec)->required();
  satCmd->add_option("--name", name);

  auto* entailsCmd = app.add_subcommand("entails", "clause set entailment");
  entailsCmd->add_option("--left", clausesLeft)->required();
  entailsCmd->add_option("--right", clausesRight)->required();

  auto* saturateCmd = app.add_subcommand("saturate", "saturation to the top clause set");
  saturateCmd->add_option("--clauses", clausesSpec)->required();
  saturateCmd->add_option("--name", name);

  auto* canonicCmd = app.add_subcommand("canonic", "canonic clause set of a sequent/formula");
  canonicCmd->add_option("-s,--schema", schema, "optional schema file for defined symbols");
  canonicCmd->add_option("--sequent", sequentText);
  canonicCmd->add_option("--formula", formulaText);

  auto* goldenCmd = app.add_subcommand("golden", "regenerate the characteristic-set table");
  addSchema(goldenCmd);
  goldenCmd->add_option("--proof", proof)->required();
  goldenCmd->add_option("--upto", upto, "last row (default 9)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (evalCmd->parsed()) return runEval(schema, formula, proof, res, arg, at, jsonPath);
    if (checkCmd->parsed()) return runCheck(schema, proof);
    if (charCmd->parsed()) return runChar(schema, proof, mask, at, jsonPath, prune);
    if (clausesCmd->parsed()) return runClauses(schema, term, at);
    if (refuteCmd->parsed()) return runRefute(schema, proof, mask, at, verify, emitTree);
    if (verifyCmd->parsed())
      return runVerify(schema, res, arg, withArgs, proof, clausesSpec, name, at, weakening);
    if (satCmd->parsed()) return runSat(clausesSpec, name);
    if (entailsCmd->parsed()) return runEntails(clausesLeft, clausesRight, name);
    if (saturateCmd->parsed()) return runSaturate(clausesSpec, name);
    if (canonicCmd->parsed()) return runCanonic(schema, sequentText, formulaText);
    if (goldenCmd->parsed()) return runGolden(schema, proof, upto);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
