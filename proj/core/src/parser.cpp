#include "ceres/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "ceres/error.hpp"

namespace ceres {

namespace {

struct Token {
  enum class Kind { Ident, Nat, Punct, End };
  Kind kind{Kind::End};
  std::string text;
  std::uint64_t nat{0};
  int line{1}, col{1};
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : src_(&text) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    const std::string& src = *src_;
    skipSpace();
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src.size()) {
      tok_.kind = Token::Kind::End;
      return;
    }
    char c = src[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      tok_.kind = Token::Kind::Nat;
      std::uint64_t v = 0;
      while (pos_ < src.size() && std::isdigit(static_cast<unsigned char>(src[pos_]))) {
        std::uint64_t d = static_cast<std::uint64_t>(src[pos_] - '0');
        if (v > (UINT64_MAX - d) / 10) throw ParseError("numeric literal overflow", line_, col_);
        v = v * 10 + d;
        bump();
      }
      tok_.nat = v;
      tok_.text = std::to_string(v);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok_.kind = Token::Kind::Ident;
      while (pos_ < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos_])) || src[pos_] == '_' ||
              src[pos_] == '\'')) {
        tok_.text += src[pos_];
        bump();
      }
      return;
    }
    tok_.kind = Token::Kind::Punct;
    // multi-char punctuation first
    static const char* multi[] = {"|-", "->", "/\\", "\\/"};
    for (const char* m : multi) {
      std::size_t len = std::char_traits<char>::length(m);
      if (src.compare(pos_, len, m) == 0) {
        tok_.text = m;
        for (std::size_t i = 0; i < len; ++i) bump();
        return;
      }
    }
    tok_.text = std::string(1, c);
    bump();
  }

  void skipSpace() {
    const std::string& src = *src_;
    for (;;) {
      while (pos_ < src.size() && std::isspace(static_cast<unsigned char>(src[pos_]))) bump();
      if (pos_ + 1 < src.size() && src[pos_] == '/' && src[pos_ + 1] == '/') {
        while (pos_ < src.size() && src[pos_] != '\n') bump();
        continue;
      }
      break;
    }
  }

  void bump() {
    if ((*src_)[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string* src_;
  std::size_t pos_{0};
  int line_{1}, col_{1};
  Token tok_;
};

struct Parser {
  Lexer lex;
  DefEnv env;

  explicit Parser(const std::string& text) : lex(text) {}

  [[noreturn]] void err(const std::string& msg) {
    throw ParseError(msg, lex.peek().line, lex.peek().col);
  }

  bool peekPunct(const std::string& p) {
    return lex.peek().kind == Token::Kind::Punct && lex.peek().text == p;
  }
  bool peekIdent(const std::string& id) {
    return lex.peek().kind == Token::Kind::Ident && lex.peek().text == id;
  }
  void expectPunct(const std::string& p) {
    if (!peekPunct(p)) err("expected '" + p + "'");
    lex.next();
  }
  std::string expectIdent() {
    if (lex.peek().kind != Token::Kind::Ident) err("expected an identifier");
    return lex.next().text;
  }
  std::uint64_t expectNat() {
    if (lex.peek().kind != Token::Kind::Nat) err("expected a number");
    return lex.next().nat;
  }

  void defineName(const std::string& name) {
    if (env.knownName(name)) err("redefinition of " + name);
  }

  // ---- arithmetic expressions: nat | n | nat*n | [nat*]n+nat ----
  ArithExpr parseExpr() {
    std::uint64_t coeff = 0, offset = 0;
    bool sawVar = false;
    if (lex.peek().kind == Token::Kind::Nat) {
      std::uint64_t v = expectNat();
      if (peekPunct("*")) {
        lex.next();
        if (!peekIdent("n")) err("expected 'n' after '*'");
        lex.next();
        coeff = v;
        sawVar = true;
      } else {
        offset = v;
      }
    } else if (peekIdent("n")) {
      lex.next();
      coeff = 1;
      sawVar = true;
    } else {
      err("expected an arithmetic expression");
    }
    if (sawVar && peekPunct("+")) {
      lex.next();
      offset = expectNat();
    }
    return {coeff, offset};
  }

  // ---- formulas ----------------------------------------------------------
  // selfFormula: name whose occurrences mean the schema variable (rec bodies)
  FormulaPtr parseFormulaExpr(const std::string& selfFormula) {
    FormulaPtr lhs = parseOr(selfFormula);
    if (peekPunct("->")) {
      lex.next();
      return mkImpl(lhs, parseFormulaExpr(selfFormula));
    }
    return lhs;
  }

  FormulaPtr parseOr(const std::string& selfFormula) {
    FormulaPtr f = parseAnd(selfFormula);
    while (peekPunct("\\/")) {
      lex.next();
      f = mkOr(f, parseAnd(selfFormula));
    }
    return f;
  }

  FormulaPtr parseAnd(const std::string& selfFormula) {
    FormulaPtr f = parseUnary(selfFormula);
    while (peekPunct("/\\")) {
      lex.next();
      f = mkAnd(f, parseUnary(selfFormula));
    }
    return f;
  }

  FormulaPtr parseUnary(const std::string& selfFormula) {
    if (peekPunct("~")) {
      lex.next();
      return mkNeg(parseUnary(selfFormula));
    }
    if (peekPunct("(")) {
      lex.next();
      FormulaPtr f = parseFormulaExpr(selfFormula);
      expectPunct(")");
      return f;
    }
    if (lex.peek().kind != Token::Kind::Ident) err("expected a formula");
    std::string name = lex.next().text;
    if (name == "X") return mkPropVar();
    expectPunct("(");
    ArithExpr idx = parseExpr();
    expectPunct(")");
    if (name == selfFormula) {
      if (idx != ArithExpr::var())
        err("self-reference " + name + " must be applied to n");
      return mkPropVar();
    }
    if (env.formula(name)) return mkDefAtom(name, idx);
    return mkAtom(name, idx);
  }

  // ---- sequents -----------------------------------------------------------
  // stopAtConstructor: ends a formula list before a proof-term constructor,
  // so `def(S, term)` can be parsed without separators around S.
  Sequent parseSequentBody(const std::string& selfFormula, bool stopAtConstructor = false) {
    Sequent s;
    if (!peekPunct("|-")) {
      s.ante.push_back(parseFormulaExpr(selfFormula));
      while (peekPunct(",")) {
        lex.next();
        s.ante.push_back(parseFormulaExpr(selfFormula));
      }
    }
    expectPunct("|-");
    if (!listEnds() && !(stopAtConstructor && peekPunct(",") && nextIsConstructorCall())) {
      s.succ.push_back(parseFormulaExpr(selfFormula));
      while (peekPunct(",")) {
        if (stopAtConstructor && nextIsConstructorCall()) break;
        lex.next();
        s.succ.push_back(parseFormulaExpr(selfFormula));
      }
    }
    return s;
  }

  bool listEnds() {
    if (lex.peek().kind == Token::Kind::Punct &&
        (lex.peek().text == ";" || lex.peek().text == ")" || lex.peek().text == "]" ||
         lex.peek().text == "}"))
      return true;
    return lex.peek().kind == Token::Kind::End;
  }

  // Lookahead used inside def(S, t): a "," followed by a proof constructor
  // call terminates the sequent.
  bool nextIsConstructorCall() {
    Lexer save = lex;
    lex.next();  // the comma
    bool is = false;
    if (lex.peek().kind == Token::Kind::Ident && isProofConstructor(lex.peek().text)) {
      std::string id = lex.next().text;
      is = peekPunct("(");
      (void)id;
    }
    lex = save;
    return is;
  }

  static bool isProofConstructor(const std::string& id) {
    static const std::set<std::string> ctors = {
        "ax",   "wl",    "wr",    "cl",  "cr",  "xl",   "xr",    "negl", "negr", "andl1",
        "andl2", "andr", "orl",  "orr1", "orr2", "impll", "implr", "cut",  "def",  "link"};
    return ctors.count(id) > 0;
  }

  // ---- proof terms ----------------------------------------------------------
  ProofPtr parseProofTerm(const std::string& selfProof) {
    std::string ctor = expectIdent();
    if (!isProofConstructor(ctor)) err("unknown proof constructor " + ctor);
    expectPunct("(");
    ProofPtr result;
    auto sub = [&] { return parseProofTerm(selfProof); };
    auto formulaArg = [&] {
      FormulaPtr f = parseFormulaExpr("");
      expectPunct(",");
      return f;
    };
    if (ctor == "ax") {
      FormulaPtr f = parseFormulaExpr("");
      if (!isAtomSchema(f)) err("axiom formula must be an atom");
      result = mkAx(f);
    } else if (ctor == "wl" || ctor == "wr") {
      FormulaPtr f = formulaArg();
      result = mkUnaryF(ctor == "wl" ? Rule::WL : Rule::WR, f, sub());
    } else if (ctor == "cl" || ctor == "cr") {
      result = mkUnary(ctor == "cl" ? Rule::CL : Rule::CR, sub());
    } else if (ctor == "xl" || ctor == "xr") {
      std::uint64_t pos = expectNat();
      expectPunct(",");
      result = mkExch(ctor == "xl" ? Rule::XL : Rule::XR, pos, sub());
    } else if (ctor == "negl" || ctor == "negr") {
      result = mkUnary(ctor == "negl" ? Rule::NegL : Rule::NegR, sub());
    } else if (ctor == "andl1" || ctor == "andl2" || ctor == "orr1" || ctor == "orr2") {
      FormulaPtr f = formulaArg();
      Rule r = ctor == "andl1" ? Rule::AndL1
               : ctor == "andl2" ? Rule::AndL2
               : ctor == "orr1" ? Rule::OrR1
                                 : Rule::OrR2;
      result = mkUnaryF(r, f, sub());
    } else if (ctor == "andr" || ctor == "orl" || ctor == "impll") {
      Rule r = ctor == "andr" ? Rule::AndR : ctor == "orl" ? Rule::OrL : Rule::ImplL;
      ProofPtr l = sub();
      expectPunct(",");
      result = mkBinary(r, l, sub());
    } else if (ctor == "implr") {
      result = mkUnary(Rule::ImplR, sub());
    } else if (ctor == "cut") {
      FormulaPtr f = formulaArg();
      ProofPtr l = sub();
      expectPunct(",");
      result = mkCut(f, l, sub());
    } else if (ctor == "def") {
      Sequent s = parseSequentBody("", true);
      expectPunct(",");
      result = mkDef(s, sub());
    } else if (ctor == "link") {
      std::string name = expectIdent();
      expectPunct(",");
      ArithExpr a = parseExpr();
      if (name != selfProof && !env.proof(name)) err("link to undefined proof " + name);
      result = mkLink(name, a);
    }
    expectPunct(")");
    return result;
  }

  // ---- clause schemata --------------------------------------------------------
  CSPtr parseClauseSchema(const std::vector<std::string>& vars, const std::string& selfClause) {
    CSPtr c = parseClausePrimary(vars, selfClause);
    while (peekIdent("o")) {
      lex.next();
      c = csCompose(c, parseClausePrimary(vars, selfClause));
    }
    return c;
  }

  CSPtr parseClausePrimary(const std::vector<std::string>& vars, const std::string& selfClause) {
    if (peekPunct("(")) {
      lex.next();
      Sequent s = parseSequentBody("");
      expectPunct(")");
      if (!isClauseSchema(s)) err("clause literals may contain only atoms");
      return csLiteral(s);
    }
    if (peekPunct("|-")) {  // bare literal with empty antecedent
      Sequent s = parseSequentBody("");
      if (!isClauseSchema(s)) err("clause literals may contain only atoms");
      return csLiteral(s);
    }
    if (lex.peek().kind != Token::Kind::Ident) err("expected a clause schema");
    std::string name = lex.peek().text;
    bool isVar = std::find(vars.begin(), vars.end(), name) != vars.end();
    bool isSelf = name == selfClause;
    bool isDef = env.clauseDef(name) != nullptr;
    if (!isVar && !isSelf && !isDef) {
      // plain atoms start a bare clause literal
      Sequent s = parseSequentBody("");
      if (!isClauseSchema(s)) err("clause literals may contain only atoms");
      return csLiteral(s);
    }
    lex.next();
    if (isVar) return csVar(name);
    expectPunct("(");
    ArithExpr a = parseExpr();
    expectPunct(")");
    if (isSelf) {
      if (a != ArithExpr::var()) err("self-reference " + name + " must be applied to n");
      return csVar(name);
    }
    return csApp(name, a);
  }

  // ---- resolution terms ---------------------------------------------------------
  RSPtr parseResTerm(const std::vector<std::string>& vars, const std::string& selfRes) {
    if (peekIdent("r")) {
      Lexer save = lex;
      lex.next();
      if (peekPunct("(")) {
        lex.next();
        RSPtr l = parseResTerm(vars, selfRes);
        expectPunct(",");
        RSPtr rr = parseResTerm(vars, selfRes);
        expectPunct(";");
        FormulaPtr pivot = parseFormulaExpr("");
        if (!isAtomSchema(pivot)) err("resolution pivot must be an atom");
        expectPunct(")");
        return rsRes(l, rr, pivot);
      }
      lex = save;
    }
    if (peekIdent("w")) {
      Lexer save = lex;
      lex.next();
      if (peekPunct("(")) {
        lex.next();
        RSPtr child = parseResTerm(vars, selfRes);
        expectPunct(";");
        CSPtr d = parseClauseSchema(vars, "");
        expectPunct(")");
        return rsWeak(child, d);
      }
      lex = save;
    }
    // res-symbol application?
    if (lex.peek().kind == Token::Kind::Ident) {
      std::string name = lex.peek().text;
      if (name == selfRes || env.resDef(name)) {
        lex.next();
        expectPunct("(");
        ArithExpr a = parseExpr();
        std::vector<CSPtr> args;
        if (peekPunct(";")) {
          lex.next();
          args.push_back(parseClauseSchema(vars, ""));
          while (peekPunct(",")) {
            lex.next();
            args.push_back(parseClauseSchema(vars, ""));
          }
        }
        expectPunct(")");
        return rsApp(name, a, std::move(args));
      }
    }
    return rsLeaf(parseClauseSchema(vars, ""));
  }

  // ---- clause set terms -----------------------------------------------------------
  CTPtr parseTermExpr(const std::vector<std::string>& groupMembers) {
    CTPtr t = parseTermFactor(groupMembers);
    while (peekPunct("+")) {
      lex.next();
      t = ctPlus(t, parseTermFactor(groupMembers));
    }
    return t;
  }

  CTPtr parseTermFactor(const std::vector<std::string>& groupMembers) {
    CTPtr t = parseTermPrimary(groupMembers);
    while (peekPunct("*")) {
      lex.next();
      t = ctTimes(t, parseTermPrimary(groupMembers));
    }
    return t;
  }

  CTPtr parseTermPrimary(const std::vector<std::string>& groupMembers) {
    if (peekPunct("[")) {
      lex.next();
      Sequent s = parseSequentBody("");
      expectPunct("]");
      if (!isClauseSchema(s)) err("clause set term leaves must hold atoms");
      return ctLeaf(s);
    }
    if (peekPunct("(")) {
      lex.next();
      CTPtr t = parseTermExpr(groupMembers);
      expectPunct(")");
      return t;
    }
    std::string name = expectIdent();
    expectPunct("(");
    ArithExpr a = parseExpr();
    expectPunct(")");
    bool inGroup = std::find(groupMembers.begin(), groupMembers.end(), name) != groupMembers.end();
    if (inGroup) {
      if (a != ArithExpr::var()) err("in-group reference " + name + " must be applied to n");
      return ctVar(name);
    }
    if (!env.termMember(name)) err("unknown clause set term symbol " + name);
    return ctApp(name, a);
  }

  // ---- top-level blocks --------------------------------------------------------------
  void parseCase(std::uint64_t& seenBase, std::uint64_t& seenRec, bool& isBase) {
    if (lex.peek().kind == Token::Kind::Nat && lex.peek().nat == 0) {
      lex.next();
      isBase = true;
      if (seenBase++) err("duplicate base case");
    } else if (peekIdent("n")) {
      lex.next();
      expectPunct("+");
      if (expectNat() != 1) err("step case must be labelled n+1");
      isBase = false;
      if (seenRec++) err("duplicate step case");
    } else {
      err("expected a case label 0 or n+1");
    }
    expectPunct("->");
  }

  template <class Body>
  void parseTwoCases(Body&& body) {
    expectPunct("{");
    std::uint64_t base = 0, rec = 0;
    while (!peekPunct("}")) {
      bool isBase = false;
      parseCase(base, rec, isBase);
      body(isBase);
      expectPunct(";");
    }
    if (!base || !rec) err("definition needs both a base and a step case");
    expectPunct("}");
  }

  void parseFormulaDef() {
    std::string name = expectIdent();
    defineName(name);
    PropDef d;
    d.name = name;
    parseTwoCases([&](bool isBase) {
      // the self name stands for the schema variable; using it in the base
      // case trips the arity/variable checks downstream
      FormulaPtr f = parseFormulaExpr(name);
      (isBase ? d.base : d.rec) = f;
    });
    env.formulas.push_back(std::move(d));
  }

  void parseProofDef() {
    std::string name = expectIdent();
    defineName(name);
    ProofDef d;
    d.name = name;
    expectPunct("{");
    if (!peekIdent("end")) err("proof definition must declare 'end:' first");
    lex.next();
    expectPunct(":");
    d.end = parseSequentBody("");
    expectPunct(";");
    std::uint64_t base = 0, rec = 0;
    while (!peekPunct("}")) {
      bool isBase = false;
      parseCase(base, rec, isBase);
      ProofPtr p = parseProofTerm(name);
      (isBase ? d.base : d.rec) = p;
      expectPunct(";");
    }
    if (!base || !rec) err("proof definition needs both cases");
    expectPunct("}");
    env.proofs.push_back(std::move(d));
  }

  void parseClauseDef() {
    std::string name = expectIdent();
    defineName(name);
    ClauseDef d;
    d.name = name;
    parseTwoCases([&](bool isBase) {
      CSPtr c = parseClauseSchema({}, name);
      (isBase ? d.base : d.rec) = c;
    });
    env.clauseDefs.push_back(std::move(d));
  }

  void parseResDef() {
    std::string name = expectIdent();
    defineName(name);
    ResDef d;
    d.name = name;
    if (peekPunct("(")) {
      lex.next();
      d.params.push_back(expectIdent());
      while (peekPunct(",")) {
        lex.next();
        d.params.push_back(expectIdent());
      }
      expectPunct(")");
    }
    parseTwoCases([&](bool isBase) {
      RSPtr r = parseResTerm(d.params, name);
      (isBase ? d.base : d.rec) = r;
    });
    env.resDefs.push_back(std::move(d));
  }

  void parseTermBody(TermGroup& g, const std::string& member) {
    CTDef d;
    parseTwoCases([&](bool isBase) {
      CTPtr t = parseTermExpr(g.members);
      (isBase ? d.base : d.rec) = t;
    });
    g.defs[member] = std::move(d);
  }

  void parseTermsBlock() {
    TermGroup g;
    expectPunct("{");
    // names first so mutual references resolve while parsing bodies
    Lexer save = lex;
    while (!peekPunct("}")) {
      std::string m = expectIdent();
      defineName(m);
      if (std::find(g.members.begin(), g.members.end(), m) != g.members.end())
        err("duplicate member " + m);
      g.members.push_back(m);
      skipBalancedBraces();
    }
    lex = save;
    for (std::size_t i = 0; i < g.members.size(); ++i) {
      std::string m = expectIdent();
      parseTermBody(g, m);
    }
    expectPunct("}");
    env.termGroups.push_back(std::move(g));
  }

  void skipBalancedBraces() {
    expectPunct("{");
    int depth = 1;
    while (depth > 0) {
      if (lex.peek().kind == Token::Kind::End) err("unterminated block");
      if (peekPunct("{")) ++depth;
      if (peekPunct("}")) --depth;
      lex.next();
    }
  }

  void parseSingleTerm() {
    std::string name = expectIdent();
    defineName(name);
    TermGroup g;
    g.members.push_back(name);
    parseTermBody(g, name);
    env.termGroups.push_back(std::move(g));
  }

  void parseSequentDecl() {
    std::string name = expectIdent();
    defineName(name);
    expectPunct(":");
    Sequent s = parseSequentBody("");
    expectPunct(";");
    env.sequents.push_back({name, std::move(s)});
  }

  void parseClausesDecl() {
    std::string name = expectIdent();
    defineName(name);
    expectPunct("{");
    ClauseSet set;
    while (!peekPunct("}")) {
      Sequent s = parseSequentBody("");
      expectPunct(";");
      if (!isClauseSchema(s)) err("clause sets may contain only atoms");
      Clause c;
      auto conv = [&](const FormulaPtr& f) {
        const auto& a = std::get<Formula::Atom>(f->node);
        if (a.idx.coeff != 0) err("clause sets must be ground");
        return Atom{a.sym, a.idx.offset};
      };
      for (const auto& f : s.ante) c.ante.push_back(conv(f));
      for (const auto& f : s.succ) c.succ.push_back(conv(f));
      set.insert(c);
    }
    expectPunct("}");
    env.clauseSets.push_back({name, std::move(set)});
  }

  DefEnv run() {
    while (lex.peek().kind != Token::Kind::End) {
      std::string kw = expectIdent();
      if (kw == "formula")
        parseFormulaDef();
      else if (kw == "proof")
        parseProofDef();
      else if (kw == "clause")
        parseClauseDef();
      else if (kw == "res")
        parseResDef();
      else if (kw == "terms")
        parseTermsBlock();
      else if (kw == "term")
        parseSingleTerm();
      else if (kw == "sequent")
        parseSequentDecl();
      else if (kw == "clauses")
        parseClausesDecl();
      else
        err("unknown block '" + kw + "'");
    }
    return std::move(env);
  }
};

} // namespace

DefEnv parse(const std::string& text) {
  Parser p(text);
  return p.run();
}

Sequent parseSequent(const std::string& text, const DefEnv& env) {
  Parser p(text);
  p.env = env;
  Sequent s = p.parseSequentBody("");
  if (p.lex.peek().kind != Token::Kind::End) p.err("trailing input after sequent");
  return s;
}

ClauseSet parseClauseSet(const std::string& text, const DefEnv& env) {
  Parser p(text);
  p.env = env;
  p.expectPunct("{");
  ClauseSet set;
  while (!p.peekPunct("}")) {
    Sequent s = p.parseSequentBody("");
    if (p.peekPunct(";")) p.lex.next();
    if (!isClauseSchema(s)) p.err("clause sets may contain only atoms");
    Clause c;
    for (const auto& f : s.ante) {
      const auto& a = std::get<Formula::Atom>(f->node);
      if (a.idx.coeff != 0) p.err("clause sets must be ground");
      c.ante.push_back({a.sym, a.idx.offset});
    }
    for (const auto& f : s.succ) {
      const auto& a = std::get<Formula::Atom>(f->node);
      if (a.idx.coeff != 0) p.err("clause sets must be ground");
      c.succ.push_back({a.sym, a.idx.offset});
    }
    set.insert(c);
  }
  return set;
}

FormulaPtr parseFormula(const std::string& text, const DefEnv& env) {
  Parser p(text);
  p.env = env;
  FormulaPtr f = p.parseFormulaExpr("");
  if (p.lex.peek().kind != Token::Kind::End) p.err("trailing input after formula");
  return f;
}

CSPtr parseClauseSchemaText(const std::string& text, const DefEnv& env) {
  Parser p(text);
  p.env = env;
  CSPtr c = p.parseClauseSchema({}, "");
  if (p.lex.peek().kind != Token::Kind::End) p.err("trailing input after clause schema");
  return c;
}

ArithExpr parseArith(const std::string& text) {
  Parser p(text);
  ArithExpr a = p.parseExpr();
  if (p.lex.peek().kind != Token::Kind::End) p.err("trailing input after expression");
  return a;
}

Config parseConfig(const std::string& text) {
  Config c;
  bool succSide = false;
  for (char ch : text) {
    if (ch == '|') {
      if (succSide) throw Error("configuration has more than one '|'");
      succSide = true;
      continue;
    }
    bool on = ch == '1' || ch == '*';
    if (!on && ch != '0' && ch != 'o')
      throw Error(std::string("bad configuration character '") + ch + "'");
    (succSide ? c.succ : c.ante).push_back(on);
  }
  if (!succSide) throw Error("configuration needs a '|' separator");
  return c;
}

} // namespace ceres
