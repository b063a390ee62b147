#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "linlog/translate.hpp"

using namespace linlog;

namespace {

const char *kSetEq = R"(
theory set-equality
sort A
pred eq(A, A) dual neq
axiom refl: [x:A] |- eq(x, x)
axiom sym: [x:A, y:A] eq(x, y) |- eq(y, x)
axiom trans: [x:A, y:A, z:A] eq(x, y) * eq(y, z) |- eq(x, z)
)";

std::string joinLines(const std::vector<TranslatedSequent> &ts) {
  std::string out;
  for (const auto &t : ts) out += print_translated(t) + "\n";
  return out;
}

} // namespace

TEST_CASE("chu_split of the connectives follows the standard interpretation") {
  auto split = [](const char *txt) {
    auto s = chu_split(desugar(parse_linear(txt)));
    return std::pair<std::string, std::string>{print_int(s.pf), print_int(s.rf)};
  };
  auto [pfAtom, rfAtom] = split("p");
  CHECK(pfAtom == "p");
  CHECK(rfAtom == "p'");
  auto [pfNeg, rfNeg] = split("~p");
  CHECK(pfNeg == "p'");
  CHECK(rfNeg == "p");
  auto [pfTensor, rfTensor] = split("p * q");
  CHECK(pfTensor == "p & q");
  CHECK(rfTensor == "(p -> q') & (q -> p')");
  auto [pfBang, rfBang] = split("!p");
  CHECK(pfBang == "p");
  CHECK(rfBang == "~p");
  auto [pfWhy, rfWhy] = split("?p");
  CHECK(pfWhy == "~p'");
  CHECK(rfWhy == "p'");
  auto [pfWith, rfWith] = split("p & q");
  CHECK(pfWith == "p & q");
  CHECK(rfWith == "p' \\/ q'");
  auto [pfAll, rfAll] = split("/\\x:D. Q(x)");
  CHECK(pfAll == "forall x:D. Q(x)");
  CHECK(rfAll == "exists x:D. Q'(x)");
}

TEST_CASE("translate_theory produces disjointness plus normalized clauses") {
  Theory th = parse_theory(kSetEq);
  auto ts = translate_theory(th);
  std::string all = joinLines(ts);
  CHECK(all.find("eq.disjoint: |- ~(eq(x1,x2) & neq(x1,x2))") != std::string::npos);
  CHECK(all.find("refl.proof: |- eq(x,x)") != std::string::npos);
  CHECK(all.find("trans.contra2: neq(x,z), eq(x,y) |- neq(y,z)") != std::string::npos);
  CHECK(ts.size() == 7);
}

TEST_CASE("With-hypotheses produce a strong disjunctive clause") {
  Theory th = parse_theory(R"(
theory t
sort A
pred eq(A, A) dual neq
axiom trans: [x:A, y:A, z:A] eq(x, y) & eq(y, z) |- eq(x, z)
)");
  std::string all = joinLines(translate_theory(th));
  CHECK(all.find("trans.strong: neq(x,z) |- neq(x,y) \\/ neq(y,z)") != std::string::npos);
  CHECK(all.find("contra") == std::string::npos);
}

TEST_CASE("affirmative hypotheses get no contrapositive clause") {
  Theory th = parse_theory(R"(
theory t
sort A
pred U(A) affirmative
pred eq(A, A) dual neq
axiom a: [x:A, y:A] U(x) * eq(x, y) |- eq(y, x)
)");
  std::string all = joinLines(translate_theory(th));
  CHECK(all.find("a.proof:") != std::string::npos);
  CHECK(all.find("a.contra1: neq(y,x), U(x) |- neq(x,y)") != std::string::npos);
  CHECK(all.find("contra2") == std::string::npos); // no clause triggered on U
}

TEST_CASE("normalization splits conjunction conclusions and curries implications") {
  Theory th = parse_theory(R"(
theory t
sort A
pred p(A) dual np
pred q(A) dual nq
axiom both: [x:A] |- p(x) * q(x)
axiom toFalse: [x:A] p(x) * q(x) |- F
)");
  std::string all = joinLines(translate_theory(th));
  CHECK(all.find("both.proof.1: |- p(x)") != std::string::npos);
  CHECK(all.find("both.proof.2: |- q(x)") != std::string::npos);
  CHECK(all.find("toFalse.proof: |- ~(p(x) & q(x))") != std::string::npos);
}

TEST_CASE("non-affirmative predicate without a dual is rejected") {
  // parse_theory itself allows it only via implicit formula atoms; build by hand.
  Theory th = parse_theory(kSetEq);
  auto lone = std::make_shared<PredSym>();
  lone->name = "w";
  lone->argSorts = {"A"};
  th.preds["w"] = lone;
  CHECK_THROWS((void)translate_theory(th));
}

TEST_CASE("embed_int round trip is semantically faithful") {
  Theory th = parse_theory(kSetEq);
  for (const auto &t : translate_theory(th)) {
    LF back = embed_int(t.concl);
    CHECK(!print_linear(back).empty());
  }
}

TEST_CASE("canonical_sequent_body identifies alpha-variants") {
  Theory th = parse_theory(kSetEq);
  auto c1 = canonical_sequent_body("neq(x,y) |- neq(y,x)", th);
  auto c2 = canonical_sequent_body("neq(a,b) |- neq(b,a)", th);
  CHECK(c1 == c2);
  // hypothesis order is irrelevant
  auto h1 = canonical_sequent_body("eq(x,y), neq(x,z) |- neq(y,z)", th);
  auto h2 = canonical_sequent_body("neq(a,c), eq(a,b) |- neq(b,c)", th);
  CHECK(h1 == h2);
  auto different = canonical_sequent_body("neq(x,y) |- neq(x,y)", th);
  CHECK(c1 != different);
}

TEST_CASE("diff_iseq catches injected golden drift") {
  Theory th = parse_theory(kSetEq);
  auto ts = translate_theory(th);
  std::string golden;
  for (const auto &t : ts) golden += print_translated(t) + "\n";
  auto ok = diff_iseq(ts, golden, th);
  CHECK(ok.match);
  // drop a line and tamper with another
  std::string bad = golden.substr(golden.find('\n') + 1);
  bad += "phantom.proof: |- eq(x,y)\n";
  auto r = diff_iseq(ts, bad, th);
  CHECK_FALSE(r.match);
  CHECK(r.onlyInOutput.size() == 1);
  CHECK(r.onlyInGolden.size() == 1);
}

TEST_CASE("diff_iseq ignores comments and blank lines") {
  Theory th = parse_theory(kSetEq);
  auto ts = translate_theory(th);
  std::string golden = "# header comment\n\n";
  for (const auto &t : ts) golden += print_translated(t) + "\n";
  CHECK(diff_iseq(ts, golden, th).match);
}

TEST_CASE("verify_translation: exhaustive propositional sweep on small algebras") {
  for (const char *latId : {"chain2", "chain3", "bool2"}) {
    auto H = make_lattice(latId);
    CAPTURE(latId);
    for (const char *txt :
         {"p", "~p", "p * q", "p @ q", "p & q", "p + q", "p -o q", "!p", "?q",
          "!(p & q) -o (!p * !q)", "~(p * ~q)"}) {
      CAPTURE(txt);
      auto rep = verify_translation(desugar(parse_linear(txt)), *H, 0);
      if (!rep.ok()) MESSAGE(rep.firstMismatch);
      CHECK(rep.ok());
    }
  }
}

TEST_CASE("verify_translation covers quantified random formulas") {
  auto H = make_lattice("chain3");
  for (uint64_t seed = 1; seed <= 25; ++seed) {
    LF f = random_formula(seed, 5, 3);
    CAPTURE(print_linear(f));
    auto rep = verify_translation(f, *H, 30, seed);
    if (!rep.ok()) MESSAGE(rep.firstMismatch);
    CHECK(rep.ok());
  }
}

TEST_CASE("translated_to_json is schema-versioned and deterministic") {
  Theory th = parse_theory(kSetEq);
  auto ts = translate_theory(th);
  std::string j1 = translated_to_json(ts);
  std::string j2 = translated_to_json(translate_theory(th));
  CHECK(j1 == j2);
  CHECK(j1.find("\"schema\"") != std::string::npos);
}
