#include "linlog/syntax.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace linlog {

// AST helpers -----------------------------------------------------------------

bool Term::operator==(const Term &o) const {
  if (isVar != o.isVar || name != o.name) return false;
  if (isVar) return true;
  if (args.size() != o.args.size()) return false;
  for (size_t i = 0; i < args.size(); ++i)
    if (!(args[i] == o.args[i])) return false;
  return true;
}

LF lf_atom(PredSymP p, std::vector<Term> args) {
  auto f = std::make_shared<LinearFormula>();
  f->kind = NK::Atom;
  f->pred = std::move(p);
  f->args = std::move(args);
  return f;
}
LF lf_unit(NK k) {
  auto f = std::make_shared<LinearFormula>();
  f->kind = k;
  return f;
}
LF lf_bin(NK k, LF a, LF b) {
  auto f = std::make_shared<LinearFormula>();
  f->kind = k;
  f->a = std::move(a);
  f->b = std::move(b);
  return f;
}
LF lf_un(NK k, LF a) {
  auto f = std::make_shared<LinearFormula>();
  f->kind = k;
  f->a = std::move(a);
  return f;
}
LF lf_quant(NK k, std::string var, std::string sort, LF body) {
  auto f = std::make_shared<LinearFormula>();
  f->kind = k;
  f->var = std::move(var);
  f->varSort = std::move(sort);
  f->a = std::move(body);
  return f;
}

bool lf_equal(const LF &x, const LF &y) {
  if (!x || !y) return x == y;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
  case NK::Atom:
    if (x->pred->name != y->pred->name || x->args.size() != y->args.size()) return false;
    for (size_t i = 0; i < x->args.size(); ++i)
      if (!(x->args[i] == y->args[i])) return false;
    return true;
  case NK::Top: case NK::Bot:
    return true;
  case NK::Neg: case NK::Bang: case NK::WhyNot:
    return lf_equal(x->a, y->a);
  case NK::Forall: case NK::Exists:
    return x->var == y->var && x->varSort == y->varSort && lf_equal(x->a, y->a);
  default:
    return lf_equal(x->a, y->a) && lf_equal(x->b, y->b);
  }
}

IF if_atom(PredSymP p, bool dual, std::vector<Term> args) {
  auto f = std::make_shared<IntFormula>();
  f->kind = IK::Atom;
  f->pred = std::move(p);
  f->dual = dual;
  f->args = std::move(args);
  return f;
}
IF if_unit(IK k) {
  auto f = std::make_shared<IntFormula>();
  f->kind = k;
  return f;
}
IF if_bin(IK k, IF a, IF b) {
  auto f = std::make_shared<IntFormula>();
  f->kind = k;
  f->a = std::move(a);
  f->b = std::move(b);
  return f;
}
IF if_not(IF a) {
  auto f = std::make_shared<IntFormula>();
  f->kind = IK::Not;
  f->a = std::move(a);
  return f;
}
IF if_quant(IK k, std::string var, std::string sort, IF body) {
  auto f = std::make_shared<IntFormula>();
  f->kind = k;
  f->var = std::move(var);
  f->varSort = std::move(sort);
  f->a = std::move(body);
  return f;
}

bool if_equal(const IF &x, const IF &y) {
  if (!x || !y) return x == y;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
  case IK::Atom:
    if (x->pred->name != y->pred->name || x->dual != y->dual ||
        x->args.size() != y->args.size())
      return false;
    for (size_t i = 0; i < x->args.size(); ++i)
      if (!(x->args[i] == y->args[i])) return false;
    return true;
  case IK::True: case IK::False:
    return true;
  case IK::Not:
    return if_equal(x->a, y->a);
  case IK::Forall: case IK::Exists:
    return x->var == y->var && x->varSort == y->varSort && if_equal(x->a, y->a);
  default:
    return if_equal(x->a, y->a) && if_equal(x->b, y->b);
  }
}

PredSymP Theory::findPred(const std::string &n) const {
  auto it = preds.find(n);
  return it == preds.end() ? nullptr : it->second;
}
bool Theory::isKnownSymbol(const std::string &n) const {
  if (preds.count(n) || dualIndex.count(n) || funcs.count(n)) return true;
  for (auto &s : sorts)
    if (s == n) return true;
  return false;
}

// Lexer -----------------------------------------------------------------------

namespace {

enum class Tok {
  Ident, Star, At, Amp, PlusT, Limp, Liff, Tilde, Bang, Quest, LPar, RPar,
  Comma, Dot, Colon, LBrk, RBrk, Turnstile, BigMeet, BigJoin, End
};

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

std::vector<Token> lex(const std::string &text, int startLine = 1) {
  std::vector<Token> out;
  int line = startLine, col = 1;
  size_t i = 0;
  auto push = [&](Tok k, std::string t) { out.push_back({k, std::move(t), line, col}); };
  while (i < text.size()) {
    char c = text[i];
    int tokCol = col;
    auto adv = [&](size_t n) { i += n; col += static_cast<int>(n); };
    if (c == '\n') { ++i; ++line; col = 1; continue; }
    if (std::isspace(static_cast<unsigned char>(c))) { adv(1); continue; }
    if (c == '#') { while (i < text.size() && text[i] != '\n') ++i; continue; }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                 text[j] == '_' || text[j] == '\''))
        ++j;
      std::string id = text.substr(i, j - i);
      if (id == "o" && text.compare(j, 2, "-o") == 0) {
        out.push_back({Tok::Liff, "o-o", line, tokCol});
        adv(j - i + 2);
        continue;
      }
      out.push_back({Tok::Ident, id, line, tokCol});
      adv(j - i);
      continue;
    }
    auto two = text.substr(i, 2);
    col = tokCol;
    if (two == "|-") { push(Tok::Turnstile, two); adv(2); continue; }
    if (two == "-o") { push(Tok::Limp, two); adv(2); continue; }
    if (two == "/\\") { push(Tok::BigMeet, two); adv(2); continue; }
    if (two == "\\/") { push(Tok::BigJoin, two); adv(2); continue; }
    switch (c) {
    case '*': push(Tok::Star, "*"); break;
    case '@': push(Tok::At, "@"); break;
    case '&': push(Tok::Amp, "&"); break;
    case '+': push(Tok::PlusT, "+"); break;
    case '~': push(Tok::Tilde, "~"); break;
    case '!': push(Tok::Bang, "!"); break;
    case '?': push(Tok::Quest, "?"); break;
    case '(': push(Tok::LPar, "("); break;
    case ')': push(Tok::RPar, ")"); break;
    case ',': push(Tok::Comma, ","); break;
    case '.': push(Tok::Dot, "."); break;
    case ':': push(Tok::Colon, ":"); break;
    case '[': push(Tok::LBrk, "["); break;
    case ']': push(Tok::RBrk, "]"); break;
    default:
      throw ParseError(std::string("unexpected character '") + c + "'", line, tokCol);
    }
    adv(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

// Parser ----------------------------------------------------------------------

struct Parser {
  std::vector<Token> toks;
  size_t pos = 0;
  const Theory *theory;
  std::map<std::string, std::string> bound; // var -> sort
  std::map<std::string, PredSymP> *implicit; // pool for theory-less parsing

  const Token &peek(size_t k = 0) const { return toks[std::min(pos + k, toks.size() - 1)]; }
  const Token &next() { return toks[pos++]; }
  bool at(Tok k) const { return peek().kind == k; }
  Token expect(Tok k, const std::string &what) {
    if (!at(k)) throw ParseError("expected " + what + ", found '" + peek().text + "'",
                                 peek().line, peek().col);
    return next();
  }
  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(msg, peek().line, peek().col);
  }

  PredSymP implicitPred(const std::string &name, size_t arity,
                        const std::vector<std::string> &argSorts) {
    auto it = implicit->find(name);
    if (it != implicit->end()) {
      if (it->second->argSorts.size() != arity)
        fail("inconsistent arity for atom '" + name + "'");
      return it->second;
    }
    auto p = std::make_shared<PredSym>();
    p->name = name;
    p->argSorts = argSorts;
    p->dualName = name + "'";
    (*implicit)[name] = p;
    return p;
  }

  Term parseTerm() {
    Token t = expect(Tok::Ident, "term");
    auto bv = bound.find(t.text);
    if (bv != bound.end()) {
      Term v;
      v.isVar = true;
      v.name = t.text;
      v.sort = bv->second;
      return v;
    }
    if (!theory) fail("unknown variable '" + t.text + "'");
    auto fit = theory->funcs.find(t.text);
    if (fit == theory->funcs.end()) fail("unknown symbol '" + t.text + "'");
    Term a;
    a.isVar = false;
    a.name = t.text;
    a.fn = fit->second;
    a.sort = fit->second->resSort;
    if (at(Tok::LPar)) {
      next();
      while (!at(Tok::RPar)) {
        a.args.push_back(parseTerm());
        if (at(Tok::Comma)) next();
        else break;
      }
      expect(Tok::RPar, "')'");
    }
    if (a.args.size() != a.fn->argSorts.size())
      fail("arity mismatch for '" + a.name + "'");
    for (size_t i = 0; i < a.args.size(); ++i)
      if (a.args[i].sort != a.fn->argSorts[i])
        fail("sort mismatch in argument " + std::to_string(i + 1) + " of '" + a.name + "'");
    return a;
  }

  LF parseAtomArgs(PredSymP p, bool viaDual) {
    std::vector<Term> args;
    std::vector<std::string> argSorts;
    if (at(Tok::LPar)) {
      next();
      while (!at(Tok::RPar)) {
        args.push_back(parseTerm());
        argSorts.push_back(args.back().sort);
        if (at(Tok::Comma)) next();
        else break;
      }
      expect(Tok::RPar, "')'");
    }
    if (!p) fail("internal: missing predicate");
    if (p->argSorts.size() != args.size())
      fail("arity mismatch for predicate '" + p->name + "'");
    for (size_t i = 0; i < args.size(); ++i)
      if (!p->argSorts[i].empty() && args[i].sort != p->argSorts[i])
        fail("sort mismatch in argument " + std::to_string(i + 1) + " of '" + p->name + "'");
    auto atom = lf_atom(p, std::move(args));
    return viaDual ? lf_un(NK::Neg, atom) : atom;
  }

  // `t in! S` sugar: existence predicate of sort S applied to t.
  LF parseInBang(Term t) {
    next(); // "in"
    expect(Tok::Bang, "'!' after 'in'");
    Token s = expect(Tok::Ident, "sort name");
    if (!theory) fail("'in!' requires a theory");
    PredSymP found;
    for (auto &[n, p] : theory->preds)
      if (p->affirmative && p->argSorts.size() == 1 && p->argSorts[0] == s.text) {
        if (found) fail("ambiguous existence predicate for sort '" + s.text + "'");
        found = p;
      }
    if (!found) fail("no affirmative existence predicate declared for sort '" + s.text + "'");
    if (t.sort != s.text) fail("'in!' sort mismatch: term has sort '" + t.sort + "'");
    return lf_atom(found, {std::move(t)});
  }

  LF parsePrimary() {
    if (at(Tok::LPar)) {
      next();
      LF f = parseFormula();
      expect(Tok::RPar, "')'");
      return f;
    }
    Token t = expect(Tok::Ident, "formula");
    if (t.text == "T") return lf_unit(NK::Top);
    if (t.text == "F") return lf_unit(NK::Bot);
    if (theory) {
      if (auto p = theory->findPred(t.text)) return parseAtomArgs(p, false);
      auto d = theory->dualIndex.find(t.text);
      if (d != theory->dualIndex.end()) return parseAtomArgs(d->second, true);
      // Otherwise a term: must be `t in! S` sugar or a bound variable misuse.
      --pos;
      Term tm = parseTerm();
      if (at(Tok::Ident) && peek().text == "in") return parseInBang(std::move(tm));
      fail("term without predicate: '" + tm.name + "'");
    }
    // Theory-less mode: identifiers are implicit predicates; a trailing prime
    // means the dual (linear negation) of the base name.
    bool viaDual = false;
    std::string name = t.text;
    if (name.size() > 1 && name.back() == '\'') {
      viaDual = true;
      name.pop_back();
    }
    std::vector<Term> args;
    std::vector<std::string> argSorts;
    if (at(Tok::LPar)) {
      next();
      while (!at(Tok::RPar)) {
        Token v = expect(Tok::Ident, "variable");
        auto bv = bound.find(v.text);
        if (bv == bound.end()) fail("unknown variable '" + v.text + "'");
        Term tv;
        tv.isVar = true;
        tv.name = v.text;
        tv.sort = bv->second;
        args.push_back(tv);
        argSorts.push_back(tv.sort);
        if (at(Tok::Comma)) next();
        else break;
      }
      expect(Tok::RPar, "')'");
    }
    auto p = implicitPred(name, args.size(), argSorts);
    auto atom = lf_atom(p, std::move(args));
    return viaDual ? lf_un(NK::Neg, atom) : atom;
  }

  LF parseOperand() {
    switch (peek().kind) {
    case Tok::Tilde: next(); return lf_un(NK::Neg, parseOperand());
    case Tok::Bang: next(); return lf_un(NK::Bang, parseOperand());
    case Tok::Quest: next(); return lf_un(NK::WhyNot, parseOperand());
    case Tok::BigMeet:
    case Tok::BigJoin:
      return parseQuantifier();
    default:
      return parsePrimary();
    }
  }

  LF parseQuantifier() {
    NK k = at(Tok::BigMeet) ? NK::Forall : NK::Exists;
    next();
    Token v = expect(Tok::Ident, "bound variable");
    expect(Tok::Colon, "':'");
    Token s = expect(Tok::Ident, "sort");
    expect(Tok::Dot, "'.'");
    auto saved = bound.find(v.text) != bound.end()
                     ? std::optional<std::string>(bound[v.text]) : std::nullopt;
    bound[v.text] = s.text;
    LF body = parseFormula(); // body extends maximally right
    if (saved) bound[v.text] = *saved;
    else bound.erase(v.text);
    return lf_quant(k, v.text, s.text, body);
  }

  // Unparenthesized binary chains must use one operator throughout.
  LF parseChain() {
    LF acc = parseOperand();
    Tok op = Tok::End;
    while (at(Tok::Star) || at(Tok::At) || at(Tok::Amp) || at(Tok::PlusT)) {
      Tok k = peek().kind;
      if (op != Tok::End && k != op)
        fail("mixed connective chain needs parentheses (operator '" + peek().text + "')");
      op = k;
      next();
      LF rhs = parseOperand();
      NK nk = k == Tok::Star ? NK::Tensor
              : k == Tok::At ? NK::Par
              : k == Tok::Amp ? NK::With : NK::Plus;
      acc = lf_bin(nk, acc, rhs);
    }
    return acc;
  }

  LF parseFormula() {
    if (at(Tok::BigMeet) || at(Tok::BigJoin)) return parseQuantifier();
    LF lhs = parseChain();
    if (at(Tok::Limp) || at(Tok::Liff)) {
      NK k = at(Tok::Limp) ? NK::Limp : NK::Liff;
      next();
      LF rhs = parseFormula(); // right-associative
      return lf_bin(k, lhs, rhs);
    }
    return lhs;
  }
};

} // namespace

LF parse_linear(const std::string &text, const Theory *theory,
                const std::map<std::string, std::string> *boundVars) {
  Parser p;
  p.toks = lex(text);
  p.theory = theory;
  if (boundVars) p.bound = *boundVars;
  std::map<std::string, PredSymP> pool;
  p.implicit = &pool;
  LF f = p.parseFormula();
  if (!p.at(Tok::End)) p.fail("trailing input after formula");
  return f;
}

// Theory files ----------------------------------------------------------------

namespace {

std::vector<std::string> splitCommaList(const std::string &s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') { out.push_back(cur); cur.clear(); }
    else if (!std::isspace(static_cast<unsigned char>(c))) cur += c;
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

} // namespace

Theory parse_theory(const std::string &text) {
  Theory th;
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  auto haveSort = [&](const std::string &s) {
    for (auto &x : th.sorts)
      if (x == s) return true;
    return false;
  };
  auto nameFree = [&](const std::string &n, int ln) {
    if (th.preds.count(n) || th.dualIndex.count(n) || th.funcs.count(n) || haveSort(n))
      throw ParseError("duplicate name '" + n + "'", ln, 1);
  };
  while (std::getline(in, line)) {
    ++lineNo;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "theory") {
      ls >> th.name;
    } else if (kw == "sort") {
      std::string s;
      if (!(ls >> s)) throw ParseError("sort: missing name", lineNo, 1);
      nameFree(s, lineNo);
      th.sorts.push_back(s);
    } else if (kw == "pred" || kw == "fun" || kw == "const") {
      std::string rest;
      std::getline(ls, rest);
      // name(args) tail
      auto lp = rest.find('(');
      std::string name, argsPart, tail;
      if (lp != std::string::npos) {
        auto rp = rest.find(')', lp);
        if (rp == std::string::npos) throw ParseError("missing ')'", lineNo, 1);
        name = rest.substr(0, lp);
        argsPart = rest.substr(lp + 1, rp - lp - 1);
        tail = rest.substr(rp + 1);
      } else {
        std::istringstream rs(rest);
        rs >> name;
        std::getline(rs, tail);
      }
      // allow "const e: G" where the colon sticks to the name token
      if (auto nc = name.find(':'); nc != std::string::npos) {
        tail = name.substr(nc) + tail;
        name = name.substr(0, nc);
      }
      // trim name
      std::string nm;
      for (char c : name)
        if (!std::isspace(static_cast<unsigned char>(c))) nm += c;
      name = nm;
      if (name.empty()) throw ParseError(kw + ": missing name", lineNo, 1);
      nameFree(name, lineNo);
      std::vector<std::string> argSorts = splitCommaList(argsPart);
      for (auto &s : argSorts)
        if (!haveSort(s)) throw ParseError("undeclared sort '" + s + "'", lineNo, 1);
      if (kw == "pred") {
        auto p = std::make_shared<PredSym>();
        p->name = name;
        p->argSorts = argSorts;
        std::istringstream ts(tail);
        std::string w;
        while (ts >> w) {
          if (w == "dual") {
            if (!(ts >> p->dualName)) throw ParseError("dual: missing name", lineNo, 1);
          } else if (w == "affirmative") {
            p->affirmative = true;
          } else {
            throw ParseError("unexpected token '" + w + "' in pred declaration", lineNo, 1);
          }
        }
        if (!p->dualName.empty()) {
          if (p->dualName == p->name)
            throw ParseError("dual name equals predicate name", lineNo, 1);
          if (p->affirmative)
            throw ParseError("affirmative predicate cannot declare a dual", lineNo, 1);
          nameFree(p->dualName, lineNo);
          th.dualIndex[p->dualName] = p;
        }
        th.preds[name] = p;
      } else { // fun / const
        auto f = std::make_shared<FuncSym>();
        f->name = name;
        f->argSorts = argSorts;
        auto colon = tail.find(':');
        if (colon == std::string::npos)
          throw ParseError(kw + ": missing result sort", lineNo, 1);
        std::istringstream rs(tail.substr(colon + 1));
        if (!(rs >> f->resSort)) throw ParseError(kw + ": missing result sort", lineNo, 1);
        if (!haveSort(f->resSort))
          throw ParseError("undeclared sort '" + f->resSort + "'", lineNo, 1);
        if (kw == "const" && !f->argSorts.empty())
          throw ParseError("const cannot take arguments", lineNo, 1);
        th.funcs[name] = f;
      }
    } else if (kw == "axiom") {
      std::string rest;
      std::getline(ls, rest);
      auto colon = rest.find(':');
      if (colon == std::string::npos) throw ParseError("axiom: missing ':'", lineNo, 1);
      Sequent seq;
      {
        std::istringstream ns(rest.substr(0, colon));
        if (!(ns >> seq.name)) throw ParseError("axiom: missing name", lineNo, 1);
      }
      Parser p;
      p.toks = lex(rest.substr(colon + 1), lineNo);
      p.theory = &th;
      std::map<std::string, PredSymP> pool;
      p.implicit = &pool;
      // The variable context "[x:S, ...]" is optional; ground axioms omit it.
      if (p.at(Tok::LBrk)) {
      p.expect(Tok::LBrk, "'['");
      while (!p.at(Tok::RBrk)) {
        Token v = p.expect(Tok::Ident, "context variable");
        p.expect(Tok::Colon, "':'");
        Token s = p.expect(Tok::Ident, "sort");
        if (!haveSort(s.text)) p.fail("undeclared sort '" + s.text + "'");
        if (p.bound.count(v.text)) p.fail("duplicate context variable '" + v.text + "'");
        seq.context.emplace_back(v.text, s.text);
        p.bound[v.text] = s.text;
        if (p.at(Tok::Comma)) p.next();
        else break;
      }
      p.expect(Tok::RBrk, "']'");
      }
      if (!p.at(Tok::Turnstile)) {
        LF lhs = p.parseFormula();
        // Flatten the top-level tensor spine into the hypothesis list.
        std::vector<LF> stack{lhs};
        std::vector<LF> hyps;
        std::function<void(const LF &)> flat = [&](const LF &f) {
          if (f->kind == NK::Tensor) { flat(f->a); flat(f->b); }
          else hyps.push_back(f);
        };
        flat(lhs);
        seq.hyps = hyps;
      }
      p.expect(Tok::Turnstile, "'|-'");
      seq.concl = p.parseFormula();
      if (!p.at(Tok::End)) p.fail("trailing input after axiom");
      for (auto &kv : pool)
        throw ParseError("unknown symbol '" + kv.first + "' in axiom '" + seq.name + "'",
                         lineNo, 1);
      th.axioms.push_back(std::move(seq));
    } else {
      throw ParseError("unknown directive '" + kw + "'", lineNo, 1);
    }
  }
  return th;
}

Theory parse_theory_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_theory(ss.str());
}

// Desugar, substitution, free variables ---------------------------------------

LF desugar(const LF &f) {
  if (!f) return f;
  switch (f->kind) {
  case NK::Atom: case NK::Top: case NK::Bot:
    return f;
  case NK::Liff: {
    LF a = desugar(f->a), b = desugar(f->b);
    return lf_bin(NK::With, lf_bin(NK::Limp, a, b), lf_bin(NK::Limp, b, a));
  }
  case NK::Neg: case NK::Bang: case NK::WhyNot:
    return lf_un(f->kind, desugar(f->a));
  case NK::Forall: case NK::Exists:
    return lf_quant(f->kind, f->var, f->varSort, desugar(f->a));
  default:
    return lf_bin(f->kind, desugar(f->a), desugar(f->b));
  }
}

namespace {
Term substTerm(const Term &t, const std::string &var, const Term &repl) {
  if (t.isVar) return t.name == var ? repl : t;
  Term out = t;
  for (auto &a : out.args) a = substTerm(a, var, repl);
  return out;
}
std::set<std::string> termVars(const Term &t) {
  if (t.isVar) return {t.name};
  std::set<std::string> out;
  for (auto &a : t.args) {
    auto v = termVars(a);
    out.insert(v.begin(), v.end());
  }
  return out;
}
} // namespace

std::set<std::string> free_vars(const LF &f) {
  if (!f) return {};
  std::set<std::string> out;
  switch (f->kind) {
  case NK::Atom:
    for (auto &t : f->args) {
      auto v = termVars(t);
      out.insert(v.begin(), v.end());
    }
    return out;
  case NK::Top: case NK::Bot:
    return out;
  case NK::Forall: case NK::Exists:
    out = free_vars(f->a);
    out.erase(f->var);
    return out;
  default:
    out = free_vars(f->a);
    if (f->b) {
      auto v = free_vars(f->b);
      out.insert(v.begin(), v.end());
    }
    return out;
  }
}

LF substitute(const LF &f, const std::string &var, const Term &term) {
  if (!f) return f;
  switch (f->kind) {
  case NK::Atom: {
    std::vector<Term> args;
    for (auto &t : f->args) args.push_back(substTerm(t, var, term));
    return lf_atom(f->pred, std::move(args));
  }
  case NK::Top: case NK::Bot:
    return f;
  case NK::Neg: case NK::Bang: case NK::WhyNot:
    return lf_un(f->kind, substitute(f->a, var, term));
  case NK::Forall: case NK::Exists: {
    if (f->var == var) return f;
    auto tv = termVars(term);
    if (tv.count(f->var)) {
      // Capture: rename the binder first.
      std::string fresh = f->var;
      auto fv = free_vars(f->a);
      do fresh += "'";
      while (tv.count(fresh) || fv.count(fresh));
      Term v;
      v.isVar = true;
      v.name = fresh;
      v.sort = f->varSort;
      LF renamed = substitute(f->a, f->var, v);
      return lf_quant(f->kind, fresh, f->varSort, substitute(renamed, var, term));
    }
    return lf_quant(f->kind, f->var, f->varSort, substitute(f->a, var, term));
  }
  default:
    return lf_bin(f->kind, substitute(f->a, var, term), substitute(f->b, var, term));
  }
}

// Printing --------------------------------------------------------------------

std::string print_term(const Term &t) {
  if (t.isVar || t.args.empty()) return t.name;
  std::string s = t.name + "(";
  for (size_t i = 0; i < t.args.size(); ++i) {
    if (i) s += ",";
    s += print_term(t.args[i]);
  }
  return s + ")";
}

namespace {

std::string atomText(const PredSymP &p, const std::vector<Term> &args, bool dualDisplay) {
  std::string s = dualDisplay ? p->dualName : p->name;
  if (!args.empty()) {
    s += "(";
    for (size_t i = 0; i < args.size(); ++i) {
      if (i) s += ",";
      s += print_term(args[i]);
    }
    s += ")";
  }
  return s;
}

const char *binTokLF(NK k) {
  switch (k) {
  case NK::Tensor: return "*";
  case NK::Par: return "@";
  case NK::With: return "&";
  case NK::Plus: return "+";
  case NK::Limp: return "-o";
  default: return "o-o";
  }
}

// Levels: 4 atom-like, 3 prefix, 2 chain {*,@,&,+}, 1 -o/o-o, 0 quantifier.
int levelLF(const LF &f) {
  switch (f->kind) {
  case NK::Atom: case NK::Top: case NK::Bot:
    return 4;
  case NK::Neg:
    return (f->a->kind == NK::Atom && !f->a->pred->dualName.empty()) ? 4 : 3;
  case NK::Bang: case NK::WhyNot:
    return 3;
  case NK::Tensor: case NK::Par: case NK::With: case NK::Plus:
    return 2;
  case NK::Limp: case NK::Liff:
    return 1;
  default:
    return 0;
  }
}

std::string pr(const LF &f);

std::string wrap(const LF &f, bool parens) {
  std::string s = pr(f);
  return parens ? "(" + s + ")" : s;
}

std::string pr(const LF &f) {
  switch (f->kind) {
  case NK::Atom:
    return atomText(f->pred, f->args, false);
  case NK::Top: return "T";
  case NK::Bot: return "F";
  case NK::Neg:
    if (f->a->kind == NK::Atom && !f->a->pred->dualName.empty())
      return atomText(f->a->pred, f->a->args, true);
    return "~" + wrap(f->a, levelLF(f->a) < 3);
  case NK::Bang:
    return "!" + wrap(f->a, levelLF(f->a) < 3);
  case NK::WhyNot:
    return "?" + wrap(f->a, levelLF(f->a) < 3);
  case NK::Forall:
    return "/\\" + f->var + ":" + f->varSort + ". " + pr(f->a);
  case NK::Exists:
    return "\\/" + f->var + ":" + f->varSort + ". " + pr(f->a);
  case NK::Limp: case NK::Liff: {
    // Right-associative; left operand must be a chain or tighter.
    bool lp = levelLF(f->a) < 2;
    bool rp = levelLF(f->b) == 0; // quantifier RHS is fine bare, but see below
    (void)rp;
    return wrap(f->a, lp) + " " + binTokLF(f->kind) + " " + pr(f->b);
  }
  default: {
    // Chain ops: same operator on the left stays bare (left-assoc);
    // everything else below atom/prefix level is parenthesized.
    bool lp = !(levelLF(f->a) >= 3 || f->a->kind == f->kind);
    bool rp = levelLF(f->b) < 3;
    return wrap(f->a, lp) + " " + binTokLF(f->kind) + " " + wrap(f->b, rp);
  }
  }
}

} // namespace

std::string print_linear(const LF &f) { return pr(f); }

std::string print_linear_sexpr(const LF &f) {
  switch (f->kind) {
  case NK::Atom: return "(Atom " + atomText(f->pred, f->args, false) + ")";
  case NK::Top: return "Top";
  case NK::Bot: return "Bot";
  case NK::Neg: return "(Neg " + print_linear_sexpr(f->a) + ")";
  case NK::Bang: return "(Bang " + print_linear_sexpr(f->a) + ")";
  case NK::WhyNot: return "(WhyNot " + print_linear_sexpr(f->a) + ")";
  case NK::Forall:
    return "(Forall " + f->var + ":" + f->varSort + " " + print_linear_sexpr(f->a) + ")";
  case NK::Exists:
    return "(Exists " + f->var + ":" + f->varSort + " " + print_linear_sexpr(f->a) + ")";
  case NK::Tensor: case NK::Par: case NK::With: case NK::Plus: case NK::Limp: case NK::Liff: {
    const char *n = f->kind == NK::Tensor ? "Tensor"
                    : f->kind == NK::Par ? "Par"
                    : f->kind == NK::With ? "With"
                    : f->kind == NK::Plus ? "Plus"
                    : f->kind == NK::Limp ? "Limp" : "Liff";
    return std::string("(") + n + " " + print_linear_sexpr(f->a) + " " +
           print_linear_sexpr(f->b) + ")";
  }
  }
  return "?";
}

namespace {

// Levels: 4 atom-like/prefix, 3 and, 2 or, 1 imp, 0 quantifier.
int levelIF(const IF &f) {
  switch (f->kind) {
  case IK::Atom: case IK::True: case IK::False: case IK::Not:
    return 4;
  case IK::And: return 3;
  case IK::Or: return 2;
  case IK::Imp: return 1;
  default: return 0;
  }
}

std::string prI(const IF &f);

std::string wrapI(const IF &f, bool parens) {
  std::string s = prI(f);
  return parens ? "(" + s + ")" : s;
}

std::string prI(const IF &f) {
  switch (f->kind) {
  case IK::Atom:
    return atomText(f->pred, f->args, f->dual);
  case IK::True: return "1";
  case IK::False: return "0";
  case IK::Not:
    return "~" + wrapI(f->a, levelIF(f->a) < 4);
  case IK::Forall:
    return "forall " + f->var + ":" + f->varSort + ". " + prI(f->a);
  case IK::Exists:
    return "exists " + f->var + ":" + f->varSort + ". " + prI(f->a);
  case IK::And: case IK::Or: {
    int lvl = levelIF(f);
    const char *tok = f->kind == IK::And ? " & " : " \\/ ";
    // Associative: same-kind children print bare on both sides.
    bool lp = levelIF(f->a) < lvl && f->a->kind != f->kind;
    bool rp = levelIF(f->b) < lvl && f->b->kind != f->kind;
    return wrapI(f->a, lp) + tok + wrapI(f->b, rp);
  }
  case IK::Imp:
    return wrapI(f->a, levelIF(f->a) < 2) + " -> " + wrapI(f->b, levelIF(f->b) == 0 && false);
  }
  return "?";
}

} // namespace

std::string print_int(const IF &f) { return prI(f); }

} // namespace linlog
