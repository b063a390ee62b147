#ifndef LINLOG_SYNTAX_HPP
#define LINLOG_SYNTAX_HPP

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace linlog {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string &msg, int line_, int col_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                           std::to_string(col_) + ")"),
        line(line_), col(col_) {}
};

struct FuncSym { // constants are 0-ary functions
  std::string name;
  std::vector<std::string> argSorts;
  std::string resSort;
};

struct PredSym {
  std::string name;
  std::vector<std::string> argSorts;
  std::string dualName;    // empty if none
  bool affirmative = false;
};

using FuncSymP = std::shared_ptr<const FuncSym>;
using PredSymP = std::shared_ptr<const PredSym>;

struct Term {
  bool isVar = false;
  std::string name;        // variable name if isVar
  std::string sort;
  FuncSymP fn;             // if !isVar
  std::vector<Term> args;
  bool operator==(const Term &o) const;
};

enum class NK { Atom, Top, Bot, Tensor, Par, With, Plus, Limp, Liff, Neg, Bang, WhyNot, Forall, Exists };

struct LinearFormula;
using LF = std::shared_ptr<const LinearFormula>;

struct LinearFormula {
  NK kind;
  PredSymP pred;           // Atom
  std::vector<Term> args;  // Atom
  LF a, b;                 // children (unary: a)
  std::string var, varSort; // quantifiers
};

LF lf_atom(PredSymP p, std::vector<Term> args);
LF lf_unit(NK k);
LF lf_bin(NK k, LF a, LF b);
LF lf_un(NK k, LF a);
LF lf_quant(NK k, std::string var, std::string sort, LF body);
bool lf_equal(const LF &a, const LF &b);

enum class IK { Atom, True, False, And, Or, Imp, Not, Forall, Exists };

struct IntFormula;
using IF = std::shared_ptr<const IntFormula>;

struct IntFormula {
  IK kind;
  PredSymP pred;           // Atom; displayed with dualName if dual
  bool dual = false;
  std::vector<Term> args;
  IF a, b;
  std::string var, varSort;
};

IF if_atom(PredSymP p, bool dual, std::vector<Term> args);
IF if_unit(IK k);
IF if_bin(IK k, IF a, IF b);
IF if_not(IF a);
IF if_quant(IK k, std::string var, std::string sort, IF body);
bool if_equal(const IF &a, const IF &b);

struct Sequent {
  std::string name;
  std::vector<std::pair<std::string, std::string>> context; // (var, sort)
  std::vector<LF> hyps;   // implicitly tensor-combined
  LF concl;
};

struct Theory {
  std::string name;
  std::vector<std::string> sorts;
  std::map<std::string, PredSymP> preds;   // by primary name
  std::map<std::string, PredSymP> dualIndex; // dual name -> pred
  std::map<std::string, FuncSymP> funcs;   // including constants (0-ary)
  std::vector<Sequent> axioms;
  PredSymP findPred(const std::string &n) const;
  bool isKnownSymbol(const std::string &n) const;
};

// Parsing ---------------------------------------------------------------------

// When theory is null, unknown identifiers become fresh 0-ary predicates whose
// dual name is the identifier with a prime appended.
LF parse_linear(const std::string &text, const Theory *theory = nullptr,
                const std::map<std::string, std::string> *boundVars = nullptr);
Theory parse_theory(const std::string &text);
Theory parse_theory_file(const std::string &path);

// AST operations --------------------------------------------------------------

LF desugar(const LF &f);
LF substitute(const LF &f, const std::string &var, const Term &term);
std::set<std::string> free_vars(const LF &f);
std::string print_linear(const LF &f);
std::string print_term(const Term &t);
std::string print_int(const IF &f);
std::string print_linear_sexpr(const LF &f); // parenthesized AST dump

} // namespace linlog

#endif
