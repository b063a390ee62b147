#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "linlog/syntax.hpp"

using namespace linlog;

TEST_CASE("mixed multiplicative/additive levels require parentheses") {
  CHECK_THROWS_AS((void)parse_linear("p * q + r"), ParseError);
  try {
    (void)parse_linear("p * q + r");
  } catch (const ParseError &e) {
    CHECK(e.col == 7);
    CHECK(e.line == 1);
  }
  CHECK_NOTHROW((void)parse_linear("(p * q) + r"));
  CHECK_NOTHROW((void)parse_linear("p * (q + r)"));
}

TEST_CASE("round trip: print then reparse is the identity") {
  const char *samples[] = {
      "p",           "~p",          "!p * ?q",     "(p & q) + r", "p -o q -o r",
      "p o-o q",     "T * (p @ F)", "~(p * q)",    "!(p & q)",    "((p + q) & r) * s",
  };
  for (const char *s : samples) {
    CAPTURE(s);
    LF f = parse_linear(s);
    LF g = parse_linear(print_linear(f));
    CHECK(lf_equal(f, g));
  }
}

TEST_CASE("implicit atoms get primed duals") {
  LF f = parse_linear("p");
  REQUIRE(f->kind == NK::Atom);
  CHECK(f->pred->name == "p");
  CHECK(f->pred->dualName == "p'");
}

TEST_CASE("quantifiers and free variables") {
  LF f = parse_linear("/\\x:D. Q(x) -o (\\/y:D. R(x, y))");
  CHECK(f->kind == NK::Forall);
  CHECK(free_vars(f).empty());
  std::map<std::string, std::string> bound{{"x", "D"}};
  LF open = parse_linear("\\/y:D. R(x, y)", nullptr, &bound);
  auto fv = free_vars(open);
  CHECK(fv == std::set<std::string>{"x"});
}

TEST_CASE("substitute replaces only free occurrences") {
  std::map<std::string, std::string> bound{{"x", "D"}};
  LF f = parse_linear("Q(x) * (\\/x:D. Q(x))", nullptr, &bound);
  Term c;
  c.isVar = false;
  c.name = "c";
  LF g = substitute(f, "x", c);
  // free occurrence replaced, bound occurrence untouched
  CHECK(g->a->args[0].name == "c");
  CHECK_FALSE(g->a->args[0].isVar);
  CHECK(g->b->a->args[0].isVar);
  CHECK(g->b->a->args[0].name == "x");
}

TEST_CASE("desugar eliminates linear biconditional") {
  LF f = desugar(parse_linear("p o-o q"));
  LF expect = desugar(parse_linear("(p -o q) & (q -o p)"));
  CHECK(lf_equal(f, expect));
}

TEST_CASE("theory parsing: declarations and axioms") {
  Theory th = parse_theory(R"(
theory t
sort A
pred eq(A, A) dual neq
pred U(A) affirmative
const e: A
fun m(A, A): A
axiom ground: |- U(e)
axiom one: [x:A, y:A] eq(x, y) * U(x) |- U(y)
)");
  CHECK(th.name == "t");
  CHECK(th.findPred("eq")->dualName == "neq");
  CHECK(th.findPred("U")->affirmative);
  CHECK(th.funcs.at("e")->argSorts.empty());
  CHECK(th.funcs.at("m")->resSort == "A");
  REQUIRE(th.axioms.size() == 2);
  CHECK(th.axioms[0].hyps.empty());
  CHECK(th.axioms[1].hyps.size() == 2); // tensor spine flattened
}

TEST_CASE("theory parsing rejects bad declarations") {
  CHECK_THROWS_AS((void)parse_theory("theory t\nsort A\npred p(A) dual p"), ParseError);
  CHECK_THROWS_AS((void)parse_theory("theory t\npred p(A)"), ParseError); // undeclared sort
  CHECK_THROWS_AS((void)parse_theory("theory t\nsort A\npred p(A) affirmative dual q"),
                  ParseError);
  CHECK_THROWS_AS((void)parse_theory("theory t\nsort A\naxiom a: [x:A] |- mystery(x)"),
                  ParseError); // unknown symbol
  CHECK_THROWS_AS((void)parse_theory("theory t\nsort A\nconst e"), ParseError);
}

TEST_CASE("sexpr dump is parenthesized and deterministic") {
  LF f = parse_linear("!p * ?q");
  std::string s = print_linear_sexpr(f);
  CHECK(s.find('(') != std::string::npos);
  CHECK(s == print_linear_sexpr(parse_linear("!p * ?q")));
}
