#include "linlog/translate.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace linlog {

// chu_split -------------------------------------------------------------------

namespace {

ChuSplit swapSplit(ChuSplit s) { return {s.rf, s.pf}; }

ChuSplit tensorSplit(const ChuSplit &a, const ChuSplit &b) {
  return {if_bin(IK::And, a.pf, b.pf),
          if_bin(IK::And, if_bin(IK::Imp, a.pf, b.rf), if_bin(IK::Imp, b.pf, a.rf))};
}

} // namespace

ChuSplit chu_split(const LF &f) {
  switch (f->kind) {
  case NK::Atom: {
    IF pos = if_atom(f->pred, false, f->args);
    if (f->pred->affirmative) return {pos, if_not(pos)};
    if (!f->pred->dualName.empty()) return {pos, if_atom(f->pred, true, f->args)};
    throw std::runtime_error("predicate '" + f->pred->name +
                             "' is neither affirmative nor dual-paired");
  }
  case NK::Top: return {if_unit(IK::True), if_unit(IK::False)};
  case NK::Bot: return {if_unit(IK::False), if_unit(IK::True)};
  case NK::Neg: return swapSplit(chu_split(f->a));
  case NK::Tensor: return tensorSplit(chu_split(f->a), chu_split(f->b));
  case NK::Par: // de Morgan: ~(~P * ~Q)
    return swapSplit(tensorSplit(swapSplit(chu_split(f->a)), swapSplit(chu_split(f->b))));
  case NK::With: {
    ChuSplit a = chu_split(f->a), b = chu_split(f->b);
    return {if_bin(IK::And, a.pf, b.pf), if_bin(IK::Or, a.rf, b.rf)};
  }
  case NK::Plus: {
    ChuSplit a = chu_split(f->a), b = chu_split(f->b);
    return {if_bin(IK::Or, a.pf, b.pf), if_bin(IK::And, a.rf, b.rf)};
  }
  case NK::Limp: {
    ChuSplit a = chu_split(f->a), b = chu_split(f->b);
    return {if_bin(IK::And, if_bin(IK::Imp, a.pf, b.pf), if_bin(IK::Imp, b.rf, a.rf)),
            if_bin(IK::And, a.pf, b.rf)};
  }
  case NK::Bang: {
    ChuSplit a = chu_split(f->a);
    return {a.pf, if_not(a.pf)};
  }
  case NK::WhyNot: {
    ChuSplit a = chu_split(f->a);
    return {if_not(a.rf), a.rf};
  }
  case NK::Forall: {
    ChuSplit a = chu_split(f->a);
    return {if_quant(IK::Forall, f->var, f->varSort, a.pf),
            if_quant(IK::Exists, f->var, f->varSort, a.rf)};
  }
  case NK::Exists: {
    ChuSplit a = chu_split(f->a);
    return {if_quant(IK::Exists, f->var, f->varSort, a.pf),
            if_quant(IK::Forall, f->var, f->varSort, a.rf)};
  }
  case NK::Liff:
    throw std::runtime_error("chu_split requires a desugared formula (found o-o)");
  }
  throw std::runtime_error("chu_split: bad node");
}

// Sequent splitting -----------------------------------------------------------

namespace {

// Hypotheses that are affirmative on the face of it contribute no
// contrapositive clause (their refutation part is a plain negation).
bool affirmativeShaped(const LF &h) {
  if (h->kind == NK::Top || h->kind == NK::Bang) return true;
  if (h->kind == NK::Atom) return h->pred->affirmative;
  return false;
}

} // namespace

std::vector<TranslatedSequent> sequent_split(const Sequent &seq, const Theory &) {
  std::vector<LF> hyps;
  for (auto &h : seq.hyps) hyps.push_back(desugar(h));
  LF concl = desugar(seq.concl);
  std::vector<ChuSplit> hs;
  for (auto &h : hyps) hs.push_back(chu_split(h));
  ChuSplit cs = chu_split(concl);
  std::vector<TranslatedSequent> out;
  TranslatedSequent proof;
  proof.axiom = seq.name;
  proof.clause = "proof";
  proof.context = seq.context;
  for (auto &h : hs) proof.hyps.push_back(h.pf);
  proof.concl = cs.pf;
  out.push_back(proof);
  int counter = 0;
  for (size_t i = 0; i < hyps.size(); ++i) {
    if (affirmativeShaped(hyps[i])) continue;
    ++counter;
    TranslatedSequent t;
    t.axiom = seq.name;
    t.clause = hyps[i]->kind == NK::With ? "strong" : ("contra" + std::to_string(counter));
    t.context = seq.context;
    t.hyps.push_back(cs.rf); // contrapositive trigger first
    for (size_t j = 0; j < hyps.size(); ++j)
      if (j != i) t.hyps.push_back(hs[j].pf);
    t.concl = hs[i].rf;
    out.push_back(t);
  }
  return out;
}

// normalize_int ---------------------------------------------------------------

namespace {

IF foldAnd(const std::vector<IF> &fs) {
  if (fs.empty()) return if_unit(IK::True);
  IF acc = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) acc = if_bin(IK::And, acc, fs[i]);
  return acc;
}

void normalizeInto(TranslatedSequent s, std::vector<TranslatedSequent> &out) {
  // Conclusion rewrites to fixpoint.
  while (true) {
    if (s.concl->kind == IK::And) {
      TranslatedSequent l = s, r = s;
      l.concl = s.concl->a;
      r.concl = s.concl->b;
      normalizeInto(std::move(l), out);
      normalizeInto(std::move(r), out);
      return;
    }
    if (s.concl->kind == IK::Imp) { // curry into the hypothesis list
      s.hyps.push_back(s.concl->a);
      s.concl = s.concl->b;
      continue;
    }
    break;
  }
  if (s.concl->kind == IK::True) return; // trivial sequent dropped
  // Hypothesis rewrites: flatten conjunctions, drop True.
  std::vector<IF> hyps;
  std::function<void(const IF &)> flat = [&](const IF &h) {
    if (h->kind == IK::And) { flat(h->a); flat(h->b); }
    else if (h->kind != IK::True) hyps.push_back(h);
  };
  for (auto &h : s.hyps) flat(h);
  s.hyps = std::move(hyps);
  // |- 0 with hypotheses becomes the negated-hypothesis form.
  if (s.concl->kind == IK::False && !s.hyps.empty()) {
    s.concl = if_not(foldAnd(s.hyps));
    s.hyps.clear();
  }
  out.push_back(std::move(s));
}

} // namespace

std::vector<TranslatedSequent> normalize_int(const TranslatedSequent &s) {
  std::vector<TranslatedSequent> out;
  normalizeInto(s, out);
  if (out.size() > 1)
    for (size_t i = 0; i < out.size(); ++i)
      out[i].clause += "." + std::to_string(i + 1);
  return out;
}

std::vector<TranslatedSequent> translate_theory(const Theory &theory) {
  for (auto &[name, p] : theory.preds)
    if (!p->affirmative && p->dualName.empty())
      throw std::runtime_error("predicate '" + name +
                               "' is used non-affirmatively but declares no dual");
  std::vector<TranslatedSequent> out;
  for (auto &[name, p] : theory.preds) {
    if (p->dualName.empty()) continue;
    TranslatedSequent d;
    d.axiom = name;
    d.clause = "disjoint";
    std::vector<Term> args;
    for (size_t i = 0; i < p->argSorts.size(); ++i) {
      Term t;
      t.isVar = true;
      t.name = "x" + std::to_string(i + 1);
      t.sort = p->argSorts[i];
      d.context.emplace_back(t.name, t.sort);
      args.push_back(t);
    }
    d.hyps = {if_atom(p, false, args), if_atom(p, true, args)};
    d.concl = if_unit(IK::False);
    for (auto &n : normalize_int(d)) out.push_back(n);
  }
  for (auto &ax : theory.axioms)
    for (auto &raw : sequent_split(ax, theory))
      for (auto &n : normalize_int(raw)) out.push_back(n);
  return out;
}

// embed_int -------------------------------------------------------------------

LF embed_int(const IF &f) {
  switch (f->kind) {
  case IK::Atom: {
    LF atom = lf_atom(f->pred, f->args);
    return lf_un(NK::Bang, f->dual ? lf_un(NK::Neg, atom) : atom);
  }
  case IK::True: return lf_unit(NK::Top);
  case IK::False: return lf_unit(NK::Bot);
  case IK::And: return lf_bin(NK::Tensor, embed_int(f->a), embed_int(f->b));
  case IK::Or: return lf_bin(NK::Plus, embed_int(f->a), embed_int(f->b));
  case IK::Imp: return lf_un(NK::Bang, lf_bin(NK::Limp, embed_int(f->a), embed_int(f->b)));
  case IK::Not: return lf_un(NK::Bang, lf_un(NK::Neg, embed_int(f->a)));
  case IK::Forall: return lf_quant(NK::Forall, f->var, f->varSort, embed_int(f->a));
  case IK::Exists: return lf_quant(NK::Exists, f->var, f->varSort, embed_int(f->a));
  }
  throw std::runtime_error("embed_int: bad node");
}

// Printing and diff -----------------------------------------------------------

namespace {

std::string bodyOf(const TranslatedSequent &t) {
  std::string s;
  for (size_t i = 0; i < t.hyps.size(); ++i) {
    if (i) s += ", ";
    s += print_int(t.hyps[i]);
  }
  s += s.empty() ? "|- " : " |- ";
  s += print_int(t.concl);
  return s;
}

} // namespace

std::string print_translated(const TranslatedSequent &t) {
  return t.axiom + "." + t.clause + ": " + bodyOf(t);
}

std::string translated_to_json(const std::vector<TranslatedSequent> &ts) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto &t : ts) {
    nlohmann::json j;
    j["axiom"] = t.axiom;
    j["clause"] = t.clause;
    nlohmann::json ctx = nlohmann::json::array();
    for (auto &[v, s] : t.context) ctx.push_back({v, s});
    j["context"] = ctx;
    nlohmann::json hs = nlohmann::json::array();
    for (auto &h : t.hyps) hs.push_back(print_int(h));
    j["hyps"] = hs;
    j["concl"] = print_int(t.concl);
    arr.push_back(j);
  }
  nlohmann::json root;
  root["schema"] = 1;
  root["sequents"] = arr;
  return root.dump(2);
}

namespace {

std::vector<std::string> tokenizeBody(const std::string &body) {
  std::vector<std::string> toks;
  size_t i = 0;
  while (i < body.size()) {
    char c = body[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < body.size() && (std::isalnum(static_cast<unsigned char>(body[j])) ||
                                 body[j] == '_' || body[j] == '\''))
        ++j;
      toks.push_back(body.substr(i, j - i));
      i = j;
      continue;
    }
    std::string two = body.substr(i, 2);
    if (two == "|-" || two == "->" || two == "\\/" || two == "/\\") {
      toks.push_back(two);
      i += 2;
      continue;
    }
    toks.push_back(std::string(1, c));
    ++i;
  }
  return toks;
}

std::string renderSorted(const std::vector<std::string> &toks) {
  // Sort top-level comma-separated hypotheses, keep the conclusion last.
  std::vector<std::vector<std::string>> hyps;
  std::vector<std::string> cur, concl;
  int depth = 0;
  bool inConcl = false;
  for (auto &t : toks) {
    if (t == "(") ++depth;
    if (t == ")") --depth;
    if (!inConcl && t == "|-") { inConcl = true; if (!cur.empty()) hyps.push_back(cur); cur.clear(); continue; }
    if (!inConcl && t == "," && depth == 0) { hyps.push_back(cur); cur.clear(); continue; }
    (inConcl ? concl : cur).push_back(t);
  }
  if (!cur.empty() && !inConcl) hyps.push_back(cur);
  auto join = [](const std::vector<std::string> &v) {
    std::string s;
    for (auto &t : v) {
      if (!s.empty()) s += " ";
      s += t;
    }
    return s;
  };
  std::vector<std::string> hs;
  for (auto &h : hyps) hs.push_back(join(h));
  std::sort(hs.begin(), hs.end());
  std::string out;
  for (auto &h : hs) {
    if (!out.empty()) out += " , ";
    out += h;
  }
  out += out.empty() ? "|- " : " |- ";
  out += join(concl);
  return out;
}

} // namespace

std::string canonical_sequent_body(const std::string &body, const Theory &theory) {
  auto toks = tokenizeBody(body);
  // Variable tokens: identifiers the theory does not know.
  std::vector<std::string> vars;
  for (auto &t : toks) {
    if (t.empty() || !(std::isalpha(static_cast<unsigned char>(t[0])) || t[0] == '_')) continue;
    if (t == "forall" || t == "exists") continue;
    if (theory.isKnownSymbol(t)) continue;
    if (std::find(vars.begin(), vars.end(), t) == vars.end()) vars.push_back(t);
  }
  size_t k = vars.size();
  if (k > 6) {
    // Too many variables for the permutation sweep: first-occurrence renaming.
    std::vector<std::string> renamed = toks;
    for (auto &t : renamed)
      for (size_t i = 0; i < k; ++i)
        if (t == vars[i]) t = "v" + std::to_string(i + 1);
    return renderSorted(renamed);
  }
  std::vector<size_t> perm(k);
  for (size_t i = 0; i < k; ++i) perm[i] = i;
  std::string best;
  do {
    std::vector<std::string> renamed = toks;
    for (auto &t : renamed)
      for (size_t i = 0; i < k; ++i)
        if (t == vars[i]) t = "v" + std::to_string(perm[i] + 1);
    std::string r = renderSorted(renamed);
    if (best.empty() || r < best) best = r;
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (k == 0) best = renderSorted(toks);
  return best;
}

DiffResult diff_iseq(const std::vector<TranslatedSequent> &output,
                     const std::string &goldenText, const Theory &theory) {
  std::map<std::string, std::string> outSet, goldSet; // canonical -> display
  for (auto &t : output) {
    std::string body = bodyOf(t);
    outSet.emplace(canonical_sequent_body(body, theory), print_translated(t));
  }
  std::istringstream in(goldenText);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    auto colon = line.find(':');
    std::string body = colon == std::string::npos ? line : line.substr(colon + 1);
    goldSet.emplace(canonical_sequent_body(body, theory), line);
  }
  DiffResult d;
  d.match = true;
  for (auto &[c, disp] : outSet)
    if (!goldSet.count(c)) {
      d.match = false;
      d.onlyInOutput.push_back(disp);
    }
  for (auto &[c, disp] : goldSet)
    if (!outSet.count(c)) {
      d.match = false;
      d.onlyInGolden.push_back(disp);
    }
  return d;
}

// verify_translation ----------------------------------------------------------

namespace {

struct IntEnv {
  const FiniteHeyting *H;
  const Structure *st; // pred tables hold ChuVal pairs; funcs for constants
};

int evalIntTerm(const Term &t, const IntEnv &env, const Valuation &v) {
  if (t.isVar) return v.at(t.name);
  std::vector<int> tuple;
  for (auto &a : t.args) tuple.push_back(evalIntTerm(a, env, v));
  return env.st->funcTables.at(t.name).at(tuple);
}

int evalInt(const IF &f, const IntEnv &env, const Valuation &v) {
  const FiniteHeyting &H = *env.H;
  switch (f->kind) {
  case IK::Atom: {
    std::vector<int> tuple;
    for (auto &t : f->args) tuple.push_back(evalIntTerm(t, env, v));
    ChuVal pair = std::get<ChuVal>(env.st->predTables.at(f->pred->name).at(tuple));
    return f->dual ? pair.rf : pair.pf;
  }
  case IK::True: return H.top;
  case IK::False: return H.bot;
  case IK::Not: return H.neg(evalInt(f->a, env, v));
  case IK::And: return H.meet(evalInt(f->a, env, v), evalInt(f->b, env, v));
  case IK::Or: return H.join(evalInt(f->a, env, v), evalInt(f->b, env, v));
  case IK::Imp: return H.imp(evalInt(f->a, env, v), evalInt(f->b, env, v));
  case IK::Forall: case IK::Exists: {
    int n = env.st->domainSize(f->varSort);
    int acc = f->kind == IK::Forall ? H.top : H.bot;
    Valuation v2 = v;
    for (int i = 0; i < n; ++i) {
      v2[f->var] = i;
      int x = evalInt(f->a, env, v2);
      acc = f->kind == IK::Forall ? H.meet(acc, x) : H.join(acc, x);
    }
    return acc;
  }
  }
  throw std::runtime_error("evalInt: bad node");
}

// Every (predicate, argument-tuple) slot appearing in f.
struct Slot {
  std::string pred;
  std::vector<int> arity; // just the tuple length via sorts
  size_t tupleCount;
};

void collectPreds(const LF &f, std::map<std::string, size_t> &preds,
                  std::set<std::string> &sorts) {
  switch (f->kind) {
  case NK::Atom:
    preds[f->pred->name] = f->args.size();
    return;
  case NK::Top: case NK::Bot:
    return;
  case NK::Forall: case NK::Exists:
    sorts.insert(f->varSort);
    collectPreds(f->a, preds, sorts);
    return;
  default:
    if (f->a) collectPreds(f->a, preds, sorts);
    if (f->b) collectPreds(f->b, preds, sorts);
  }
}

} // namespace

VerifyReport verify_translation(const LF &fRaw, const FiniteHeyting &H, int trials,
                                uint64_t seed) {
  LF f = desugar(fRaw);
  auto Hp = std::make_shared<FiniteHeyting>(H);
  auto model = std::make_shared<ChuModel>(Hp, ChuVariant::Strict0, "chu0:" + H.id);
  ChuSplit split = chu_split(f);

  // Canonical pairs of H.
  std::vector<ChuVal> pairs;
  for (int p = 0; p < H.size; ++p)
    for (int r = 0; r < H.size; ++r)
      if (H.meet(p, r) == H.bot) pairs.push_back({p, r});

  Structure st;
  st.model = model;
  std::map<std::string, size_t> preds;
  std::set<std::string> sorts;
  collectPreds(f, preds, sorts);
  sorts.insert("D");
  for (auto &s : sorts) st.sortDomains[s] = {"d0", "d1"};
  st.funcTables["c"][{}] = 0;

  // Assignment slots: one canonical pair per (pred, tuple).
  struct PSlot {
    std::string name;
    std::vector<int> tuple;
  };
  std::vector<PSlot> slots;
  for (auto &[name, arity] : preds) {
    std::vector<std::vector<int>> tuples{{}};
    for (size_t i = 0; i < arity; ++i) {
      std::vector<std::vector<int>> next;
      for (auto &t : tuples)
        for (int e = 0; e < 2; ++e) {
          auto u = t;
          u.push_back(e);
          next.push_back(u);
        }
      tuples = std::move(next);
    }
    for (auto &t : tuples) slots.push_back({name, t});
  }

  VerifyReport rep;
  IntEnv env{&H, &st};
  auto runTrial = [&]() {
    ++rep.trials;
    Value lin = eval(f, st, {});
    ChuVal canon = model->canon(evalInt(split.pf, env, {}), evalInt(split.rf, env, {}));
    if (value_equal(lin, Value(canon))) {
      ++rep.agree;
    } else if (rep.firstMismatch.empty()) {
      std::string assigns;
      for (auto &s : slots) {
        if (!assigns.empty()) assigns += ", ";
        assigns += s.name + "=" +
                   model->printValue(st.predTables.at(s.name).at(s.tuple));
      }
      rep.firstMismatch = print_linear(f) + " with " + assigns + ": linear=" +
                          model->printValue(lin) + " int=" + model->printValue(Value(canon));
    }
  };

  if (trials <= 0) {
    // Exhaustive sweep over all canonical-pair assignments.
    uint64_t total = 1;
    for (size_t i = 0; i < slots.size(); ++i) {
      total *= pairs.size();
      if (total > 1000000) throw std::runtime_error("verify_translation: exhaustive sweep too large");
    }
    std::vector<size_t> idx(slots.size(), 0);
    while (true) {
      for (size_t i = 0; i < slots.size(); ++i)
        st.predTables[slots[i].name][slots[i].tuple] = pairs[idx[i]];
      runTrial();
      size_t j = 0;
      while (j < idx.size()) {
        if (++idx[j] < pairs.size()) break;
        idx[j] = 0;
        ++j;
      }
      if (j == idx.size()) break;
      if (slots.empty()) break;
    }
  } else {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
      for (auto &s : slots) st.predTables[s.name][s.tuple] = pairs[rng() % pairs.size()];
      runTrial();
    }
  }
  return rep;
}

} // namespace linlog
