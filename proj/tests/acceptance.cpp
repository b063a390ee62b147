// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "linlog/translate.hpp"

using namespace linlog;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int n, const std::string &what, bool ok, const std::string &note = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " " << n << ". " << what;
  if (!note.empty()) std::cout << " [" << note << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

double secondsSince(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------------------

bool criterion1(std::string &note) {
  auto t0 = Clock::now();
  auto m = make_model("chu0:chain2");
  if (m->enumeration().size() != 3) {
    note = "carrier size != 3";
    return false;
  }
  auto rep = restrict_chu3_check();
  if (!rep.ok()) {
    note = rep.mismatches.front();
    return false;
  }
  std::ostringstream os;
  os << rep.checkedEntries << " table entries, " << secondsSince(t0) << " s";
  note = os.str();
  return secondsSince(t0) < 1.0;
}

bool criterion2(std::string &note) {
  auto t0 = Clock::now();
  SweepProtocol proto;
  int rows = 0;
  for (const auto &lat : lattice_zoo_ids()) {
    if (make_lattice(lat)->size > 16) continue;
    auto m = make_model("chu0:" + lat);
    for (const auto &suite : law_suite_names())
      for (const auto &r : law_suite(suite, {m}, proto)) {
        ++rows;
        if (r.law == "mix-units") continue; // Chu(H,0) units differ by design
        if (r.status != "holds") {
          note = lat + "/" + suite + "/" + r.law + ": " + r.status + " " + r.witness;
          return false;
        }
      }
  }
  double sec = secondsSince(t0);
  std::ostringstream os;
  os << rows << " law rows over 10 algebras, " << sec << " s";
  note = os.str();
  return sec < 60.0;
}

bool criterion3(std::string &note) {
  for (const auto &lat : lattice_zoo_ids()) {
    auto cm = std::dynamic_pointer_cast<const ChuModel>(make_model("chu1:" + lat));
    const auto &H = cm->base();
    Value one{ChuVal{H.top, H.top}};
    std::vector<Value> tensorUnits, parUnits;
    for (const auto &e : cm->enumeration()) {
      bool tU = true, pU = true;
      for (const auto &x : cm->enumeration()) {
        if (!value_equal(cm->bin(BinOp::Tensor, e, x), x)) tU = false;
        if (!value_equal(cm->bin(BinOp::Par, e, x), x)) pU = false;
      }
      if (tU) tensorUnits.push_back(e);
      if (pU) parUnits.push_back(e);
    }
    if (tensorUnits.size() != 1 || parUnits.size() != 1 ||
        !value_equal(tensorUnits[0], parUnits[0]) || !value_equal(tensorUnits[0], one)) {
      note = lat + ": units are not uniquely (1,1)";
      return false;
    }
  }
  note = "tensor and par units coincide at (1,1) on all " +
         std::to_string(lattice_zoo_ids().size()) + " algebras";
  return true;
}

bool criterion4(std::string &note) {
  auto t0 = Clock::now();
  std::vector<std::shared_ptr<const FiniteHeyting>> algebras;
  for (const auto &lat : lattice_zoo_ids()) {
    auto H = make_lattice(lat);
    if (H->size <= 8) algebras.push_back(H);
  }
  int formulas = 0;
  for (uint64_t seed = 1; seed <= 1000; ++seed) {
    LF f = random_formula(seed, 6, 1 + (int)(seed % 4));
    ++formulas;
    for (const auto &H : algebras) {
      auto rep = verify_translation(f, *H, 20, seed);
      if (!rep.ok()) {
        note = "seed " + std::to_string(seed) + " on " + H->id + ": " + rep.firstMismatch;
        return false;
      }
    }
  }
  double sec = secondsSince(t0);
  std::ostringstream os;
  os << formulas << " formulas x " << algebras.size() << " algebras, " << sec << " s";
  note = os.str();
  return sec < 120.0;
}

bool criterion5(std::string &note) {
  const char *names[] = {"set-equality",  "strong-set",          "complemented-subset",
                         "function",      "subgroup",            "strong-subgroup",
                         "partial-order", "strong-partial-order", "total-or",
                         "total-par"};
  for (const char *name : names) {
    std::string base = std::string(LLT_CORPUS_DIR) + "/" + name;
    Theory th = parse_theory_file(base + ".llt");
    auto ts = translate_theory(th);
    std::ifstream in(base + ".iseq");
    if (!in) {
      note = std::string(name) + ": golden missing";
      return false;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    auto d = diff_iseq(ts, ss.str(), th);
    if (!d.match) {
      note = std::string(name) + ": diff mismatch (" +
             (d.onlyInOutput.empty() ? d.onlyInGolden.front() : d.onlyInOutput.front()) + ")";
      return false;
    }
  }
  note = "10 theories match their goldens modulo renaming";
  return true;
}

bool criterion6(std::string &note) {
  SweepProtocol proto;
  auto luk = make_model("luk:grid5");
  auto i3 = make_model("int:3pt");

  // Lukasiewicz fails !P = P*P at P = 3/4, witness replays.
  auto r = check_law(find_law("chu-special", "bang-squaring"), luk, proto);
  if (r.status != "fails" || r.witness.find("3/4") == std::string::npos ||
      !replay_witness(find_law("chu-special", "bang-squaring"), luk, r)) {
    note = "luk bang-squaring: " + r.status + " " + r.witness;
    return false;
  }
  Value threeQ{Rat(3, 4)};
  if (value_equal(luk->un(UnOp::Bang, threeQ), luk->bin(BinOp::Tensor, threeQ, threeQ))) {
    note = "luk bang-squaring does not fail at 3/4";
    return false;
  }

  // int:3pt fails ?!P |- !?P at P={a} and !(P+Q) = !P+!Q at P={a,b}, Q={b,c}.
  Value pa{PtSet{0b001}}, pab{PtSet{0b011}}, qbc{PtSet{0b110}};
  auto bangClo = i3->un(UnOp::Bang, i3->un(UnOp::WhyNot, pa));
  auto cloBang = i3->un(UnOp::WhyNot, i3->un(UnOp::Bang, pa));
  if (i3->leq(cloBang, bangClo)) {
    note = "int:3pt exp-dist does not fail at P={a}";
    return false;
  }
  auto lhs = i3->un(UnOp::Bang, i3->bin(BinOp::Plus, pab, qbc));
  auto rhs = i3->bin(BinOp::Plus, i3->un(UnOp::Bang, pab), i3->un(UnOp::Bang, qbc));
  if (value_equal(lhs, rhs)) {
    note = "int:3pt exact-exp does not fail at P={a,b}, Q={b,c}";
    return false;
  }
  for (const char *law : {"exp-dist", "exact-exp"}) {
    auto rr = check_law(find_law("chu-special", law), i3, proto);
    if (rr.status != "fails" || !replay_witness(find_law("chu-special", law), i3, rr)) {
      note = std::string("int:3pt ") + law + ": " + rr.status;
      return false;
    }
  }

  // Both models pass the core affine suite (mix-units is the documented gap)
  // and the Seely condition.
  for (const auto &m : {luk, i3}) {
    for (const auto &row : law_suite("core", {m}, proto)) {
      bool expectHolds = row.law != "mix-units";
      if ((row.status == "holds") != expectHolds) {
        note = m->id() + " core/" + row.law + ": " + row.status;
        return false;
      }
    }
    for (const char *law : {"seely", "seely-dual"}) {
      auto rr = check_law(find_law("exponential", law), m, proto);
      if (rr.status != "holds") {
        note = m->id() + " " + law + ": " + rr.status;
        return false;
      }
    }
  }
  note = "documented failures replay; core suite and Seely hold";
  return true;
}

bool criterion7(std::string &note) {
  Theory th = parse_theory(R"(
theory eqth
sort A
pred eq(A, A) dual neq
axiom trans: [x:A, y:A, z:A] eq(x, y) * eq(y, z) |- eq(x, z)
axiom strong-trans: [x:A, y:A, z:A] eq(x, y) & eq(y, z) |- eq(x, z)
)");
  auto model = make_model("luk:grid5");
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<int> den(1, 6);
  int triangleYes = 0, ultraYes = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4;
    Rat d[n][n];
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        if (i == j) {
          d[i][j] = Rat(0);
          continue;
        }
        int q = den(rng);
        std::uniform_int_distribution<int> num(0, q);
        d[i][j] = d[j][i] = Rat(num(rng), q);
      }
    bool triangle = true, ultra = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          if (d[i][k] > d[i][j] + d[j][k]) triangle = false;
          if (d[i][k] > rat_max(d[i][j], d[j][k])) ultra = false;
        }
    Structure s;
    s.model = model;
    s.sortDomains["A"] = {"p0", "p1", "p2", "p3"};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s.predTables["eq"][{i, j}] = Value{Rat(1) - d[i][j]};
    bool tensorTrans = holds_sequent(th.axioms[0], s).holds;
    bool withTrans = holds_sequent(th.axioms[1], s).holds;
    if (tensorTrans != triangle || withTrans != ultra) {
      note = "trial " + std::to_string(trial) + ": sequent/oracle disagreement";
      return false;
    }
    triangleYes += triangle;
    ultraYes += ultra;
  }
  std::ostringstream os;
  os << "200/200 agree; " << triangleYes << " metric, " << ultraYes << " ultrametric";
  note = os.str();
  return true;
}

bool criterion8(std::string &note) {
  Theory plusEm = parse_theory(R"(
theory plus-em
sort D
pred p(D) dual np
axiom plus-em: [x:D] |- p(x) + ~p(x)
)");
  Theory parEm = parse_theory(R"(
theory par-em
sort D
pred p(D) dual np
axiom par-em: [x:D] |- p(x) @ ~p(x)
)");
  auto r = search_countermodel(plusEm, make_model("chu0:chain2"), 1);
  if (!r.found || structure_to_json(r.structure).find("(0,0)") == std::string::npos) {
    note = "plus-em countermodel at N not found";
    return false;
  }
  // The multiplicative law of excluded middle has no countermodel in the
  // affine families (Chu(H,1) is not affine and documents mult-em failures).
  int swept = 0;
  for (const auto &id : model_zoo_ids()) {
    if (id.rfind("chu1:", 0) == 0) continue;
    auto rr = search_countermodel(parEm, make_model(id), 1);
    ++swept;
    if (rr.found) {
      note = id + ": unexpected par-em countermodel";
      return false;
    }
  }
  note = "plus-em fails at N on chu0:chain2; par-em: none up to bound on " +
         std::to_string(swept) + " affine models";
  return true;
}

} // namespace

int main() {
  struct Criterion {
    int n;
    const char *what;
    bool (*fn)(std::string &);
  } criteria[] = {
      {1, "three-valued correspondence (chu0:chain2 vs Lukasiewicz tables)", criterion1},
      {2, "Chu(H,0) law suites exhaustive over all |H| <= 16 algebras", criterion2},
      {3, "Chu(H,1) MIX: tensor and par units coincide at (1,1)", criterion3},
      {4, "translation soundness on 1000 seeded random formulas", criterion4},
      {5, "corpus fidelity via translate --diff goldens", criterion5},
      {6, "model differentiation with replayable witnesses", criterion6},
      {7, "metric correspondence on 200 random distance matrices", criterion7},
      {8, "countermodel sanity for additive vs multiplicative excluded middle", criterion8},
  };
  for (const auto &c : criteria) {
    std::string note;
    bool ok = false;
    try {
      ok = c.fn(note);
    } catch (const std::exception &e) {
      note = std::string("exception: ") + e.what();
    }
    report(c.n, c.what, ok, note);
  }
  return failures == 0 ? 0 : 1;
}
