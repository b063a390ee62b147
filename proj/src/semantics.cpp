#include "linlog/semantics.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace linlog {

// Structures ------------------------------------------------------------------

int Structure::domainSize(const std::string &sort) const {
  auto it = sortDomains.find(sort);
  return it == sortDomains.end() ? 0 : static_cast<int>(it->second.size());
}

int Structure::domainIndex(const std::string &sort, const std::string &elem) const {
  auto it = sortDomains.find(sort);
  if (it == sortDomains.end()) throw std::runtime_error("unknown sort: " + sort);
  for (size_t i = 0; i < it->second.size(); ++i)
    if (it->second[i] == elem) return static_cast<int>(i);
  throw std::runtime_error("unknown domain element '" + elem + "' of sort " + sort);
}

namespace {

std::vector<std::vector<int>> allTuples(const Structure &s,
                                        const std::vector<std::string> &sorts) {
  std::vector<std::vector<int>> out{{}};
  for (auto &sort : sorts) {
    int n = s.domainSize(sort);
    std::vector<std::vector<int>> next;
    for (auto &t : out)
      for (int i = 0; i < n; ++i) {
        auto u = t;
        u.push_back(i);
        next.push_back(u);
      }
    out = std::move(next);
  }
  return out;
}

} // namespace

void validate_structure(const Structure &s, const Theory &theory) {
  for (auto &[name, p] : theory.preds) {
    auto it = s.predTables.find(name);
    if (it == s.predTables.end())
      throw std::runtime_error("structure: missing table for predicate '" + name + "'");
    for (auto &t : allTuples(s, p->argSorts))
      if (!it->second.count(t))
        throw std::runtime_error("structure: incomplete table for predicate '" + name + "'");
    if (p->affirmative)
      for (auto &[t, v] : it->second)
        if (!value_equal(v, s.model->un(UnOp::Bang, v)))
          throw std::runtime_error("structure: affirmative predicate '" + name +
                                   "' has a non-affirmative table entry " +
                                   s.model->printValue(v));
  }
  for (auto &[name, f] : theory.funcs) {
    auto it = s.funcTables.find(name);
    if (it == s.funcTables.end())
      throw std::runtime_error("structure: missing table for function '" + name + "'");
    for (auto &t : allTuples(s, f->argSorts)) {
      auto e = it->second.find(t);
      if (e == it->second.end())
        throw std::runtime_error("structure: incomplete table for function '" + name + "'");
      if (e->second < 0 || e->second >= s.domainSize(f->resSort))
        throw std::runtime_error("structure: function '" + name + "' maps outside its sort");
    }
  }
}

Structure structure_from_json_file(const std::string &path, const Theory &theory,
                                   ModelP modelOverride) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open file: " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  Structure s;
  s.model = modelOverride ? modelOverride : make_model(j.at("model").get<std::string>());
  for (auto &[sort, elems] : j.at("sorts").items())
    s.sortDomains[sort] = elems.get<std::vector<std::string>>();
  auto keyTuple = [&](const std::string &key, const std::vector<std::string> &sorts) {
    std::vector<int> t;
    if (key.empty()) return t;
    std::stringstream ks(key);
    std::string part;
    size_t i = 0;
    while (std::getline(ks, part, ',')) {
      if (i >= sorts.size()) throw std::runtime_error("tuple too long: " + key);
      t.push_back(s.domainIndex(sorts[i], part));
      ++i;
    }
    return t;
  };
  if (j.count("preds"))
    for (auto &[name, tab] : j.at("preds").items()) {
      auto p = theory.findPred(name);
      if (!p) throw std::runtime_error("structure: unknown predicate '" + name + "'");
      for (auto &[key, lit] : tab.items())
        s.predTables[name][keyTuple(key, p->argSorts)] =
            s.model->parseValue(lit.get<std::string>());
    }
  if (j.count("funcs"))
    for (auto &[name, tab] : j.at("funcs").items()) {
      auto f = theory.funcs.find(name);
      if (f == theory.funcs.end())
        throw std::runtime_error("structure: unknown function '" + name + "'");
      for (auto &[key, lit] : tab.items())
        s.funcTables[name][keyTuple(key, f->second->argSorts)] =
            s.domainIndex(f->second->resSort, lit.get<std::string>());
    }
  if (j.count("consts"))
    for (auto &[name, lit] : j.at("consts").items()) {
      auto f = theory.funcs.find(name);
      if (f == theory.funcs.end())
        throw std::runtime_error("structure: unknown constant '" + name + "'");
      s.funcTables[name][{}] = s.domainIndex(f->second->resSort, lit.get<std::string>());
    }
  validate_structure(s, theory);
  return s;
}

std::string structure_to_json(const Structure &s) {
  nlohmann::json j;
  j["schema"] = 1;
  j["model"] = s.model->id();
  for (auto &[sort, elems] : s.sortDomains) j["sorts"][sort] = elems;
  auto domName = [&](const std::string &sort, int i) { return s.sortDomains.at(sort)[i]; };
  // Tuples are rendered with the element names; sorts are unknown here, so we
  // render indices via the (unique) domain each table's theory sorts give.
  // predTables/funcTables keep raw names; callers supply matching domains.
  for (auto &[name, tab] : s.predTables) {
    nlohmann::json t = nlohmann::json::object();
    for (auto &[tuple, v] : tab) {
      std::string key;
      for (size_t i = 0; i < tuple.size(); ++i) {
        if (i) key += ",";
        // All search-generated structures use a single shared domain list.
        key += s.sortDomains.begin()->second[tuple[i]];
      }
      t[key] = s.model->printValue(v);
    }
    j["preds"][name] = t;
  }
  for (auto &[name, tab] : s.funcTables) {
    nlohmann::json t = nlohmann::json::object();
    for (auto &[tuple, v] : tab) {
      std::string key;
      for (size_t i = 0; i < tuple.size(); ++i) {
        if (i) key += ",";
        key += s.sortDomains.begin()->second[tuple[i]];
      }
      t[key] = domName(s.sortDomains.begin()->first, v);
    }
    j["funcs"][name] = t;
  }
  return j.dump(2);
}

// Evaluation ------------------------------------------------------------------

namespace {

int evalTerm(const Term &t, const Structure &s, const Valuation &v) {
  if (t.isVar) {
    auto it = v.find(t.name);
    if (it == v.end()) throw std::runtime_error("unbound variable: " + t.name);
    return it->second;
  }
  std::vector<int> tuple;
  for (auto &a : t.args) tuple.push_back(evalTerm(a, s, v));
  auto ft = s.funcTables.find(t.name);
  if (ft == s.funcTables.end())
    throw std::runtime_error("no table for function '" + t.name + "'");
  auto e = ft->second.find(tuple);
  if (e == ft->second.end())
    throw std::runtime_error("incomplete table for function '" + t.name + "'");
  return e->second;
}

} // namespace

Value eval(const LF &f, const Structure &s, const Valuation &v) {
  switch (f->kind) {
  case NK::Atom: {
    std::vector<int> tuple;
    for (auto &t : f->args) tuple.push_back(evalTerm(t, s, v));
    auto pt = s.predTables.find(f->pred->name);
    if (pt == s.predTables.end())
      throw std::runtime_error("no table for predicate '" + f->pred->name + "'");
    auto e = pt->second.find(tuple);
    if (e == pt->second.end())
      throw std::runtime_error("incomplete table for predicate '" + f->pred->name + "'");
    return e->second;
  }
  case NK::Top: return s.model->top();
  case NK::Bot: return s.model->bot();
  case NK::Neg: return s.model->un(UnOp::Neg, eval(f->a, s, v));
  case NK::Bang: return s.model->un(UnOp::Bang, eval(f->a, s, v));
  case NK::WhyNot: return s.model->un(UnOp::WhyNot, eval(f->a, s, v));
  case NK::Tensor: return s.model->bin(BinOp::Tensor, eval(f->a, s, v), eval(f->b, s, v));
  case NK::Par: return s.model->bin(BinOp::Par, eval(f->a, s, v), eval(f->b, s, v));
  case NK::With: return s.model->bin(BinOp::With, eval(f->a, s, v), eval(f->b, s, v));
  case NK::Plus: return s.model->bin(BinOp::Plus, eval(f->a, s, v), eval(f->b, s, v));
  case NK::Limp: return s.model->bin(BinOp::Limp, eval(f->a, s, v), eval(f->b, s, v));
  case NK::Liff:
    throw std::runtime_error("eval requires a desugared formula (found o-o)");
  case NK::Forall: case NK::Exists: {
    std::vector<Value> family;
    int n = s.domainSize(f->varSort);
    Valuation v2 = v;
    for (int i = 0; i < n; ++i) {
      v2[f->var] = i;
      family.push_back(eval(f->a, s, v2));
    }
    return s.model->quant(f->kind == NK::Forall ? QuantOp::Forall : QuantOp::Exists, family);
  }
  }
  throw std::runtime_error("eval: bad node");
}

SequentResult holds_sequent(const Sequent &seq, const Structure &s) {
  std::vector<int> sizes;
  for (auto &[var, sort] : seq.context) sizes.push_back(s.domainSize(sort));
  std::vector<int> idx(sizes.size(), 0);
  bool done = sizes.empty() ? false : false;
  while (true) {
    Valuation v;
    for (size_t i = 0; i < idx.size(); ++i) v[seq.context[i].first] = idx[i];
    Value lhs = s.model->top();
    for (auto &h : seq.hyps) lhs = s.model->bin(BinOp::Tensor, lhs, eval(h, s, v));
    Value rhs = eval(seq.concl, s, v);
    if (!s.model->leq(lhs, rhs)) {
      SequentResult r;
      r.holds = false;
      r.witness = v;
      std::string txt;
      for (size_t i = 0; i < idx.size(); ++i) {
        if (i) txt += ", ";
        txt += seq.context[i].first + "=" + s.sortDomains.at(seq.context[i].second)[idx[i]];
      }
      r.witnessText = txt;
      return r;
    }
    // Next valuation (mixed radix); empty context runs the single iteration.
    size_t k = 0;
    while (k < idx.size()) {
      if (++idx[k] < sizes[k]) break;
      idx[k] = 0;
      ++k;
    }
    if (k == idx.size()) break;
    (void)done;
  }
  return SequentResult{true, {}, ""};
}

// Law suites ------------------------------------------------------------------

namespace {

LawSchema mk(std::string name, std::string note, LawRel rel, std::string lhs, std::string rhs,
             std::vector<std::string> atoms, bool fam = false) {
  LawSchema l;
  l.name = std::move(name);
  l.paperNote = std::move(note);
  l.rel = rel;
  l.lhs = std::move(lhs);
  l.rhs = std::move(rhs);
  l.atoms = std::move(atoms);
  l.usesFamily = fam;
  return l;
}

std::vector<LawSchema> buildCore() {
  std::vector<LawSchema> v;
  v.push_back(mk("involution", "double linear negation", LawRel::Equiv, "~~p", "p", {"p"}));
  v.push_back(mk("demorgan-tensor", "de Morgan for the multiplicatives", LawRel::Equiv,
                 "~(p * q)", "~p @ ~q", {"p", "q"}));
  v.push_back(mk("demorgan-with", "de Morgan for the additives", LawRel::Equiv,
                 "~(p & q)", "~p + ~q", {"p", "q"}));
  {
    LawSchema a;
    a.name = "adjunction";
    a.paperNote = "*-autonomy: P*Q <= R iff P <= Q -o R";
    a.kind = LawKind::Adjunction;
    a.atoms = {"p", "q", "r"};
    v.push_back(a);
  }
  v.push_back(mk("unit-tensor", "affine unit collapse", LawRel::Equiv, "p * T", "p", {"p"}));
  v.push_back(mk("unit-with", "affine unit collapse", LawRel::Equiv, "p & T", "p", {"p"}));
  v.push_back(mk("unit-plus", "affine unit collapse", LawRel::Equiv, "p + F", "p", {"p"}));
  v.push_back(mk("unit-par", "affine unit collapse", LawRel::Equiv, "p @ F", "p", {"p"}));
  v.push_back(mk("mult-em", "multiplicative excluded middle", LawRel::Entails,
                 "T", "p @ ~p", {"p"}));
  v.push_back(mk("mult-noncontra", "multiplicative non-contradiction", LawRel::Entails,
                 "T", "~(p * ~p)", {"p"}));
  v.push_back(mk("frobenius-tensor", "Frobenius law for tensor over join", LawRel::Equiv,
                 "p * \\/x:D. Q(x)", "\\/x:D. p * Q(x)", {"p"}, true));
  v.push_back(mk("frobenius-par", "Frobenius law for par over meet", LawRel::Equiv,
                 "p @ /\\x:D. Q(x)", "/\\x:D. p @ Q(x)", {"p"}, true));
  {
    LawSchema a;
    a.name = "mix-units";
    a.paperNote = "MIX: tensor and par units coincide";
    a.kind = LawKind::MixUnits;
    v.push_back(a);
  }
  return v;
}

std::vector<LawSchema> buildExponential() {
  std::vector<LawSchema> v;
  v.push_back(mk("seely", "Seely condition", LawRel::Equiv, "!(p & q)", "!p * !q", {"p", "q"}));
  v.push_back(mk("seely-dual", "dual Seely condition", LawRel::Equiv, "?(p + q)", "?p @ ?q",
                 {"p", "q"}));
  v.push_back(mk("bang-idem", "comonad idempotence", LawRel::Equiv, "!!p", "!p", {"p"}));
  v.push_back(mk("bang-counit", "comonad counit", LawRel::Entails, "!p", "p", {"p"}));
  v.push_back(mk("whynot-idem", "monad idempotence", LawRel::Equiv, "??p", "?p", {"p"}));
  v.push_back(mk("whynot-unit", "monad unit", LawRel::Entails, "p", "?p", {"p"}));
  v.push_back(mk("bang-whynot-duality", "? as de Morgan dual of !", LawRel::Equiv,
                 "?p", "~!~p", {"p"}));
  return v;
}

std::vector<LawSchema> buildChuSpecial() {
  std::vector<LawSchema> v;
  v.push_back(mk("add-dist", "additive distributivity", LawRel::Equiv,
                 "p & (q + r)", "(p & q) + (p & r)", {"p", "q", "r"}));
  v.push_back(mk("weak-idem", "P*P*P = P*P", LawRel::Equiv, "p * p * p", "p * p", {"p"}));
  v.push_back(mk("bang-squaring", "!P = P*P", LawRel::Equiv, "!p", "p * p", {"p"}));
  v.push_back(mk("refut-aff", "?(P -o !P)", LawRel::Entails, "T", "?(p -o !p)", {"p"}));
  v.push_back(mk("exp-dist", "?!P entails !?P", LawRel::Entails, "?!p", "!?p", {"p"}));
  v.push_back(mk("exact-exp", "! distributes over +", LawRel::Equiv,
                 "!(p + q)", "!p + !q", {"p", "q"}));
  v.push_back(mk("cont-exp", "! distributes over finite joins", LawRel::Equiv,
                 "!(\\/x:D. Q(x))", "\\/x:D. !Q(x)", {}, true));
  return v;
}

} // namespace

const std::vector<LawSchema> &law_suite_schemas(const std::string &suite) {
  static const std::vector<LawSchema> core = buildCore();
  static const std::vector<LawSchema> expo = buildExponential();
  static const std::vector<LawSchema> chu = buildChuSpecial();
  if (suite == "core") return core;
  if (suite == "exponential") return expo;
  if (suite == "chu-special") return chu;
  throw std::invalid_argument("unknown law suite: " + suite);
}

std::vector<std::string> law_suite_names() { return {"core", "exponential", "chu-special"}; }

const LawSchema &find_law(const std::string &suite, const std::string &name) {
  for (auto &l : law_suite_schemas(suite))
    if (l.name == name) return l;
  throw std::invalid_argument("unknown law '" + name + "' in suite " + suite);
}

bool expected_to_fail(const std::string &law, const std::string &modelId) {
  auto is = [&](const char *prefix) { return modelId.rfind(prefix, 0) == 0; };
  if (is("chu0:")) return law == "mix-units";
  if (is("chu1:"))
    return law == "unit-tensor" || law == "unit-par" || law == "mult-em" ||
           law == "mult-noncontra" || law == "bang-counit" || law == "whynot-unit" ||
           law == "bang-squaring" || law == "exp-dist";
  if (is("luk:"))
    return law == "mix-units" || law == "weak-idem" || law == "bang-squaring";
  if (modelId == "int:disc2") return law == "mix-units";
  if (modelId == "int:sierp")
    return law == "mix-units" || law == "bang-squaring" || law == "exact-exp" ||
           law == "cont-exp";
  if (is("int:"))
    return law == "mix-units" || law == "bang-squaring" || law == "exact-exp" ||
           law == "cont-exp" || law == "exp-dist";
  return false;
}

namespace {

struct LawContext {
  std::vector<std::string> slots; // atom names, then Q(d0), Q(d1)
  LF lhs, rhs;
  Structure st;
};

LawContext makeContext(const LawSchema &law, const ModelP &m) {
  LawContext c;
  c.st.model = m;
  c.st.sortDomains["D"] = {"d0", "d1"};
  c.slots = law.atoms;
  if (law.usesFamily) {
    c.slots.push_back("Q(d0)");
    c.slots.push_back("Q(d1)");
  }
  if (law.kind == LawKind::Formula) {
    c.lhs = desugar(parse_linear(law.lhs));
    c.rhs = desugar(parse_linear(law.rhs));
  }
  return c;
}

void assign(LawContext &c, const LawSchema &law, const std::vector<Value> &vals) {
  size_t i = 0;
  for (auto &a : law.atoms) c.st.predTables[a][{}] = vals[i++];
  if (law.usesFamily) {
    c.st.predTables["Q"][{0}] = vals[i++];
    c.st.predTables["Q"][{1}] = vals[i++];
  }
}

bool violated(const LawSchema &law, const LawContext &c, const ModelP &m) {
  Value l = eval(c.lhs, c.st, {}), r = eval(c.rhs, c.st, {});
  if (law.rel == LawRel::Entails) return !m->leq(l, r);
  return !(m->leq(l, r) && m->leq(r, l));
}

std::string protocolString(const ModelP &m, const SweepProtocol &p) {
  std::string s = m->protocol();
  if (!m->exhaustive())
    s += "+rand" + std::to_string(p.randomTuples) + ":seed=" + std::to_string(p.seed);
  return s;
}

LawResult checkMixUnits(const LawSchema &law, const ModelP &m, const SweepProtocol &p) {
  LawResult r;
  r.law = law.name;
  r.model = m->id();
  r.protocol = protocolString(m, p);
  r.expected = expected_to_fail(law.name, m->id()) ? "fails" : "holds";
  auto elems = m->enumeration();
  auto isUnit = [&](BinOp op, const Value &u) {
    for (auto &x : elems) {
      Value y = m->bin(op, x, u);
      if (!(m->leq(x, y) && m->leq(y, x))) return false;
    }
    return true;
  };
  std::vector<Value> tUnits, pUnits;
  for (auto &u : elems) {
    if (isUnit(BinOp::Tensor, u)) tUnits.push_back(u);
    if (isUnit(BinOp::Par, u)) pUnits.push_back(u);
  }
  bool ok = tUnits.size() == 1 && pUnits.size() == 1 && value_equal(tUnits[0], pUnits[0]);
  if (ok)
    if (auto *chu = dynamic_cast<const ChuModel *>(m.get()))
      if (chu->variant() == ChuVariant::Chu1)
        ok = value_equal(tUnits[0], Value(ChuVal{chu->base().top, chu->base().top}));
  r.status = ok ? "holds" : "fails";
  if (!ok) {
    std::string w = "tensor-units={";
    for (auto &u : tUnits) w += m->printValue(u);
    w += "} par-units={";
    for (auto &u : pUnits) w += m->printValue(u);
    w += "}";
    r.witness = w;
    if (!tUnits.empty()) r.witnessVals["tensor-unit"] = tUnits[0];
    if (!pUnits.empty()) r.witnessVals["par-unit"] = pUnits[0];
  }
  return r;
}

} // namespace

LawResult check_law(const LawSchema &law, const ModelP &m, const SweepProtocol &p) {
  if (law.kind == LawKind::MixUnits) return checkMixUnits(law, m, p);
  LawResult r;
  r.law = law.name;
  r.model = m->id();
  r.protocol = protocolString(m, p);
  r.expected = expected_to_fail(law.name, m->id()) ? "fails" : "holds";
  r.status = "holds";
  auto elems = m->enumeration();
  if (law.kind == LawKind::Adjunction) {
    auto sweepTriple = [&](const Value &a, const Value &b, const Value &c) {
      bool l = m->leq(m->bin(BinOp::Tensor, a, b), c);
      bool q = m->leq(a, m->bin(BinOp::Limp, b, c));
      return l == q;
    };
    std::mt19937_64 rng(p.seed);
    std::vector<std::vector<Value>> extra;
    if (!m->exhaustive())
      for (size_t i = 0; i < p.randomTuples; ++i) extra.push_back(m->randomSample(rng, 3));
    for (auto &a : elems)
      for (auto &b : elems)
        for (auto &c : elems)
          if (!sweepTriple(a, b, c)) {
            r.status = "fails";
            r.witness = "p=" + m->printValue(a) + ", q=" + m->printValue(b) +
                        ", r=" + m->printValue(c);
            r.witnessVals = {{"p", a}, {"q", b}, {"r", c}};
            return r;
          }
    for (auto &t : extra)
      if (!sweepTriple(t[0], t[1], t[2])) {
        r.status = "fails";
        r.witness = "p=" + m->printValue(t[0]) + ", q=" + m->printValue(t[1]) +
                    ", r=" + m->printValue(t[2]);
        r.witnessVals = {{"p", t[0]}, {"q", t[1]}, {"r", t[2]}};
        return r;
      }
    return r;
  }
  LawContext ctx = makeContext(law, m);
  size_t k = ctx.slots.size();
  auto tryAssignment = [&](const std::vector<Value> &vals) {
    assign(ctx, law, vals);
    if (violated(law, ctx, m)) {
      r.status = "fails";
      std::string w;
      for (size_t i = 0; i < k; ++i) {
        if (i) w += ", ";
        w += ctx.slots[i] + "=" + m->printValue(vals[i]);
      }
      r.witness = w;
      for (size_t i = 0; i < k; ++i) r.witnessVals[ctx.slots[i]] = vals[i];
      return true;
    }
    return false;
  };
  // Exhaustive product over the enumeration (grid for Lukasiewicz)...
  std::vector<size_t> idx(k, 0);
  while (true) {
    std::vector<Value> vals;
    for (size_t i = 0; i < k; ++i) vals.push_back(elems[idx[i]]);
    if (tryAssignment(vals)) return r;
    size_t j = 0;
    while (j < k) {
      if (++idx[j] < elems.size()) break;
      idx[j] = 0;
      ++j;
    }
    if (j == k) break;
    if (k == 0) break;
  }
  // ...plus seeded random tuples for non-exhaustive carriers.
  if (!m->exhaustive()) {
    std::mt19937_64 rng(p.seed);
    for (size_t t = 0; t < p.randomTuples; ++t) {
      auto vals = m->randomSample(rng, k);
      if (tryAssignment(vals)) return r;
    }
  }
  return r;
}

bool replay_witness(const LawSchema &law, const ModelP &m, const LawResult &r) {
  if (r.status != "fails") return false;
  if (law.kind == LawKind::MixUnits) {
    // Re-run the whole unit search; it is already deterministic.
    return checkMixUnits(law, m, SweepProtocol{}).status == "fails";
  }
  if (law.kind == LawKind::Adjunction) {
    const Value &a = r.witnessVals.at("p"), &b = r.witnessVals.at("q"),
                &c = r.witnessVals.at("r");
    return m->leq(m->bin(BinOp::Tensor, a, b), c) != m->leq(a, m->bin(BinOp::Limp, b, c));
  }
  LawContext ctx = makeContext(law, m);
  std::vector<Value> vals;
  for (auto &s : ctx.slots) vals.push_back(r.witnessVals.at(s));
  assign(ctx, law, vals);
  return violated(law, ctx, m);
}

std::vector<LawResult> law_suite(const std::string &suite, const std::vector<ModelP> &models,
                                 const SweepProtocol &p) {
  std::vector<LawResult> out;
  for (auto &m : models)
    for (auto &law : law_suite_schemas(suite)) out.push_back(check_law(law, m, p));
  return out;
}

// Classification --------------------------------------------------------------

Classification classify(const Value &v, const ModelP &m) {
  Classification c;
  auto same = [&](const Value &a, const Value &b) { return m->leq(a, b) && m->leq(b, a); };
  c.affirmative = same(v, m->un(UnOp::Bang, v));
  c.refutative = same(v, m->un(UnOp::WhyNot, v));
  c.decidable = m->leq(m->top(), m->bin(BinOp::Plus, v, m->un(UnOp::Neg, v)));
  return c;
}

// Countermodel search ---------------------------------------------------------

SearchResult search_countermodel(const Theory &theory, const ModelP &m, int maxDomain,
                                 const std::string &targetAxiom, uint64_t structureCap) {
  SearchResult res;
  if (maxDomain < 1) maxDomain = 1;
  auto carrier = m->enumeration();
  if (!targetAxiom.empty()) {
    bool found = false;
    for (auto &a : theory.axioms)
      if (a.name == targetAxiom) found = true;
    if (!found) throw std::invalid_argument("unknown axiom: " + targetAxiom);
  }
  for (int d = 1; d <= maxDomain; ++d) {
    Structure st;
    st.model = m;
    std::vector<std::string> dom;
    for (int i = 0; i < d; ++i) dom.push_back("e" + std::to_string(i));
    for (auto &s : theory.sorts) st.sortDomains[s] = dom;
    // Slot layout: predicate entries range over the carrier, function entries
    // over the domain. Deterministic: map order, lexicographic tuples.
    struct Slot {
      bool isPred;
      std::string name;
      std::vector<int> tuple;
      size_t radix;
    };
    std::vector<Slot> slots;
    uint64_t total = 1;
    for (auto &[name, p] : theory.preds)
      for (auto &t : allTuples(st, p->argSorts)) {
        slots.push_back({true, name, t, carrier.size()});
        if (total > structureCap / carrier.size() + 1) total = structureCap + 1;
        else total *= carrier.size();
      }
    for (auto &[name, f] : theory.funcs)
      for (auto &t : allTuples(st, f->argSorts)) {
        slots.push_back({false, name, t, static_cast<size_t>(d)});
        if (total > structureCap / d + 1) total = structureCap + 1;
        else total *= d;
      }
    if (total > structureCap) {
      res.capExceeded = true;
      return res;
    }
    std::vector<size_t> idx(slots.size(), 0);
    while (true) {
      ++res.structuresTried;
      st.predTables.clear();
      st.funcTables.clear();
      for (size_t i = 0; i < slots.size(); ++i) {
        if (slots[i].isPred) st.predTables[slots[i].name][slots[i].tuple] = carrier[idx[i]];
        else st.funcTables[slots[i].name][slots[i].tuple] = static_cast<int>(idx[i]);
      }
      // Affirmative predicates constrain admissible structures.
      bool admissible = true;
      for (auto &[name, p] : theory.preds)
        if (p->affirmative)
          for (auto &[t, v] : st.predTables[name])
            if (!value_equal(v, m->un(UnOp::Bang, v))) admissible = false;
      if (admissible) {
        if (targetAxiom.empty()) {
          for (auto &a : theory.axioms) {
            auto sr = holds_sequent(a, st);
            if (!sr.holds) {
              res.found = true;
              res.structure = st;
              res.failedAxiom = a.name;
              res.witnessText = sr.witnessText;
              return res;
            }
          }
        } else {
          bool othersHold = true;
          SequentResult targetRes{true, {}, ""};
          for (auto &a : theory.axioms) {
            auto sr = holds_sequent(a, st);
            if (a.name == targetAxiom) targetRes = sr;
            else if (!sr.holds) othersHold = false;
            if (!othersHold) break;
          }
          if (othersHold && !targetRes.holds) {
            res.found = true;
            res.structure = st;
            res.failedAxiom = targetAxiom;
            res.witnessText = targetRes.witnessText;
            return res;
          }
        }
      }
      size_t j = 0;
      while (j < idx.size()) {
        if (++idx[j] < slots[j].radix) break;
        idx[j] = 0;
        ++j;
      }
      if (j == idx.size()) break;
      if (slots.empty()) break;
    }
  }
  return res;
}

// Random formulas -------------------------------------------------------------

std::vector<PredSymP> random_formula_preds(int numAtoms) {
  std::vector<PredSymP> out;
  for (int i = 1; i <= numAtoms; ++i) {
    auto p = std::make_shared<PredSym>();
    p->name = "p" + std::to_string(i);
    p->argSorts = {"D"};
    p->dualName = p->name + "'";
    out.push_back(p);
  }
  return out;
}

namespace {

struct RandomGen {
  std::mt19937_64 rng;
  std::vector<PredSymP> preds;
  FuncSymP constC;
  int varCounter = 0;

  LF atom(const std::vector<std::pair<std::string, std::string>> &scope) {
    auto &p = preds[rng() % preds.size()];
    Term arg;
    if (!scope.empty() && rng() % 4 != 0) {
      auto &v = scope[rng() % scope.size()];
      arg.isVar = true;
      arg.name = v.first;
      arg.sort = v.second;
    } else {
      arg.isVar = false;
      arg.name = "c";
      arg.fn = constC;
      arg.sort = "D";
    }
    LF a = lf_atom(p, {arg});
    return rng() % 2 ? a : lf_un(NK::Neg, a); // half the atoms appear dually
  }

  LF gen(int depth, std::vector<std::pair<std::string, std::string>> scope) {
    if (depth <= 0) {
      switch (rng() % 6) {
      case 0: return lf_unit(NK::Top);
      case 1: return lf_unit(NK::Bot);
      default: return atom(scope);
      }
    }
    switch (rng() % 16) {
    case 0: return atom(scope);
    case 1: return lf_unit(NK::Top);
    case 2: return lf_unit(NK::Bot);
    case 3: return lf_bin(NK::Tensor, gen(depth - 1, scope), gen(depth - 1, scope));
    case 4: return lf_bin(NK::Par, gen(depth - 1, scope), gen(depth - 1, scope));
    case 5: return lf_bin(NK::With, gen(depth - 1, scope), gen(depth - 1, scope));
    case 6: return lf_bin(NK::Plus, gen(depth - 1, scope), gen(depth - 1, scope));
    case 7: case 8: return lf_bin(NK::Limp, gen(depth - 1, scope), gen(depth - 1, scope));
    case 9: return lf_un(NK::Neg, gen(depth - 1, scope));
    case 10: return lf_un(NK::Bang, gen(depth - 1, scope));
    case 11: return lf_un(NK::WhyNot, gen(depth - 1, scope));
    case 12: case 13: {
      std::string v = "x" + std::to_string(++varCounter);
      scope.emplace_back(v, "D");
      return lf_quant(NK::Forall, v, "D", gen(depth - 1, scope));
    }
    default: {
      std::string v = "x" + std::to_string(++varCounter);
      scope.emplace_back(v, "D");
      return lf_quant(NK::Exists, v, "D", gen(depth - 1, scope));
    }
    }
  }
};

} // namespace

LF random_formula(uint64_t seed, int depth, int numAtoms) {
  if (depth > 8) throw std::invalid_argument("random_formula: depth must be <= 8");
  RandomGen g;
  g.rng.seed(seed);
  g.preds = random_formula_preds(numAtoms);
  auto c = std::make_shared<FuncSym>();
  c->name = "c";
  c->resSort = "D";
  g.constC = c;
  return g.gen(depth, {});
}

} // namespace linlog
