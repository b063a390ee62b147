// llt: affine/linear logic toolkit command-line interface.
//
// Subcommands: parse, eval, laws, translate, check, search, models.
// Exit codes: 0 success, 1 semantic failure, 2 usage/IO error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "linlog/models.hpp"
#include "linlog/semantics.hpp"
#include "linlog/translate.hpp"

using namespace linlog;
using nlohmann::json;

namespace {

std::string readFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeOut(const std::string &path, const std::string &text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot write file: " + path);
  out << text;
}

bool endsWith(const std::string &s, const std::string &suf) {
  return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

std::string defaultFormat() {
  const char *env = std::getenv("LLT_FORMAT");
  return env ? env : "text";
}

// parse -----------------------------------------------------------------------

int cmdParse(const std::string &path) {
  std::string text = readFile(path);
  if (endsWith(path, ".llt")) {
    Theory th = parse_theory(text);
    std::cout << "theory " << th.name << ": " << th.sorts.size() << " sorts, "
              << th.preds.size() << " predicates, " << th.funcs.size() << " functions, "
              << th.axioms.size() << " axioms\n";
    for (auto &ax : th.axioms) {
      std::cout << ax.name << ":";
      for (auto &h : ax.hyps) std::cout << " " << print_linear_sexpr(h);
      std::cout << " |- " << print_linear_sexpr(ax.concl) << "\n";
    }
    return 0;
  }
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  bool any = false;
  while (std::getline(in, line)) {
    ++lineNo;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    any = true;
    try {
      LF f = parse_linear(line);
      std::cout << print_linear_sexpr(f) << "\n";
    } catch (const ParseError &e) {
      std::cerr << path << ":" << lineNo << ": " << e.what() << "\n";
      return 1;
    }
  }
  if (!any) {
    std::cerr << path << ": no formulas found\n";
    return 1;
  }
  return 0;
}

// eval ------------------------------------------------------------------------

int cmdEval(const std::string &modelId, const std::string &formulaText,
            const std::vector<std::string> &domains,
            const std::vector<std::string> &assigns, bool classifyFlag) {
  ModelP m = make_model(modelId);
  LF f = parse_linear(formulaText);
  Structure st;
  st.model = m;
  for (auto &d : domains) { // "D=a,b"
    auto eq = d.find('=');
    if (eq == std::string::npos) throw std::ios_base::failure("bad --domain: " + d);
    std::string sort = d.substr(0, eq);
    std::vector<std::string> elems;
    std::string cur;
    for (char c : d.substr(eq + 1)) {
      if (c == ',') { elems.push_back(cur); cur.clear(); }
      else if (!std::isspace(static_cast<unsigned char>(c))) cur += c;
    }
    if (!cur.empty()) elems.push_back(cur);
    st.sortDomains[sort] = elems;
  }
  // Assignments: "p=lit" or "Q(a)=lit"; atom tables are filled per mention.
  for (auto &a : assigns) {
    auto eq = a.find('=');
    if (eq == std::string::npos) throw std::ios_base::failure("bad --assign: " + a);
    std::string lhs = a.substr(0, eq), lit = a.substr(eq + 1);
    std::string name = lhs;
    std::vector<int> tuple;
    auto par = lhs.find('(');
    if (par != std::string::npos) {
      if (lhs.back() != ')') throw std::ios_base::failure("bad --assign: " + a);
      name = lhs.substr(0, par);
      std::string cur;
      std::vector<std::string> elems;
      for (char c : lhs.substr(par + 1, lhs.size() - par - 2)) {
        if (c == ',') { elems.push_back(cur); cur.clear(); }
        else if (!std::isspace(static_cast<unsigned char>(c))) cur += c;
      }
      if (!cur.empty()) elems.push_back(cur);
      for (auto &e : elems) {
        int idx = -1;
        for (auto &[sort, dom] : st.sortDomains)
          for (size_t i = 0; i < dom.size(); ++i)
            if (dom[i] == e) idx = static_cast<int>(i);
        if (idx < 0) throw std::ios_base::failure("unknown domain element: " + e);
        tuple.push_back(idx);
      }
    }
    st.predTables[name][tuple] = m->parseValue(lit);
  }
  Value v = eval(f, st, {});
  std::cout << m->printValue(v) << "\n";
  if (classifyFlag) {
    Classification c = classify(v, m);
    std::cout << "affirmative=" << (c.affirmative ? "yes" : "no")
              << " refutative=" << (c.refutative ? "yes" : "no")
              << " decidable=" << (c.decidable ? "yes" : "no") << "\n";
  }
  return 0;
}

// laws ------------------------------------------------------------------------

int cmdLaws(const std::string &suite, std::vector<std::string> modelIds,
            const std::string &format, uint64_t seed, const std::string &outPath) {
  if (modelIds.empty()) modelIds = model_zoo_ids();
  std::vector<ModelP> models;
  for (auto &id : modelIds) models.push_back(make_model(id));
  SweepProtocol prot;
  prot.seed = seed;
  std::vector<LawResult> results = law_suite(suite, models, prot);
  int rc = 0;
  for (auto &r : results) {
    if (r.status != r.expected) rc = 1;
  }
  if (format == "json") {
    json arr = json::array();
    for (auto &r : results) {
      json j;
      j["law"] = r.law;
      j["model"] = r.model;
      j["status"] = r.status;
      j["expected"] = r.expected;
      j["witness"] = r.witness;
      j["protocol"] = r.protocol;
      arr.push_back(j);
    }
    json root;
    root["schema"] = 1;
    root["suite"] = suite;
    root["seed"] = seed;
    root["results"] = arr;
    writeOut(outPath, root.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "suite " << suite << " (seed " << seed << ")\n";
    for (auto &r : results) {
      std::string tag = r.status == "holds"
                            ? "Holds"
                            : (r.expected == "fails" ? "FAILED (documented)" : "FAILED");
      out << r.model << "  " << r.law << "  " << tag;
      if (r.status == "fails" && !r.witness.empty()) out << "  witness: " << r.witness;
      if (r.status != r.expected) out << "  ** expected " << r.expected << " **";
      out << "\n";
    }
    writeOut(outPath, out.str());
  }
  return rc;
}

// translate -------------------------------------------------------------------

int cmdTranslate(const std::string &theoryPath, const std::string &outPath,
                 const std::string &diffPath, const std::string &format) {
  Theory th = parse_theory_file(theoryPath);
  std::vector<TranslatedSequent> ts = translate_theory(th);
  std::ostringstream out;
  if (format == "json") {
    out << translated_to_json(ts) << "\n";
  } else {
    out << "# standard interpretation of theory " << th.name << "\n";
    for (auto &t : ts) out << print_translated(t) << "\n";
  }
  if (!outPath.empty()) writeOut(outPath, out.str());
  else if (diffPath.empty()) std::cout << out.str();
  if (diffPath.empty()) return 0;
  DiffResult d = diff_iseq(ts, readFile(diffPath), th);
  if (d.match) {
    std::cout << "diff: match (" << ts.size() << " sequents)\n";
    return 0;
  }
  std::cout << "diff: MISMATCH\n";
  for (auto &s : d.onlyInOutput) std::cout << "  only in output: " << s << "\n";
  for (auto &s : d.onlyInGolden) std::cout << "  only in golden: " << s << "\n";
  return 1;
}

// check -----------------------------------------------------------------------

int cmdCheck(const std::string &theoryPath, const std::string &structPath,
             const std::string &modelId, const std::string &format) {
  Theory th = parse_theory_file(theoryPath);
  ModelP m = modelId.empty() ? nullptr : make_model(modelId);
  Structure st = structure_from_json_file(structPath, th, m);
  validate_structure(st, th);
  int rc = 0;
  json arr = json::array();
  for (auto &ax : th.axioms) {
    SequentResult r = holds_sequent(ax, st);
    if (!r.holds) rc = 1;
    if (format == "json") {
      json j;
      j["axiom"] = ax.name;
      j["holds"] = r.holds;
      j["witness"] = r.witnessText;
      arr.push_back(j);
    } else {
      std::cout << ax.name << ": " << (r.holds ? "Holds" : "Fails");
      if (!r.holds) std::cout << "  witness: " << r.witnessText;
      std::cout << "\n";
    }
  }
  if (format == "json") {
    json root;
    root["schema"] = 1;
    root["model"] = st.model->id();
    root["results"] = arr;
    std::cout << root.dump(2) << "\n";
  }
  return rc;
}

// search ----------------------------------------------------------------------

int cmdSearch(const std::string &theoryPath, const std::string &modelId, int maxDomain,
              const std::string &axiom, uint64_t cap, const std::string &format) {
  Theory th = parse_theory_file(theoryPath);
  ModelP m = make_model(modelId);
  SearchResult r = search_countermodel(th, m, maxDomain, axiom, cap);
  if (format == "json") {
    json root;
    root["schema"] = 1;
    root["found"] = r.found;
    root["structuresTried"] = r.structuresTried;
    root["capExceeded"] = r.capExceeded;
    if (r.found) {
      root["failedAxiom"] = r.failedAxiom;
      root["witness"] = r.witnessText;
      root["structure"] = json::parse(structure_to_json(r.structure));
    }
    std::cout << root.dump(2) << "\n";
  } else if (r.found) {
    std::cout << "countermodel found (axiom " << r.failedAxiom << ", "
              << r.structuresTried << " structures tried)\n";
    std::cout << "witness: " << r.witnessText << "\n";
    std::cout << structure_to_json(r.structure) << "\n";
  } else {
    std::cout << "none up to bound (max domain " << maxDomain << ", "
              << r.structuresTried << " structures tried"
              << (r.capExceeded ? ", cap exceeded" : "") << ")\n";
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"affine/linear logic toolkit"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker count (accepted for compatibility)");

  std::string parsePath;
  auto *sParse = app.add_subcommand("parse", "parse a formula (.llf) or theory (.llt) file");
  sParse->add_option("path", parsePath)->required();

  std::string evModel, evFormula;
  std::vector<std::string> evDomains, evAssigns;
  bool evClassify = false;
  auto *sEval = app.add_subcommand("eval", "evaluate a formula in a model");
  sEval->add_option("--model", evModel)->required();
  sEval->add_option("formula", evFormula)->required();
  sEval->add_option("--domain", evDomains, "sort domain, e.g. D=a,b");
  sEval->add_option("--assign", evAssigns, "atom value, e.g. p=(1,0) or Q(a)=(1,0)");
  sEval->add_flag("--classify", evClassify, "also print affirmative/refutative/decidable");

  std::string lwSuite, lwFormat = defaultFormat(), lwOut;
  std::vector<std::string> lwModels;
  uint64_t lwSeed = 1;
  auto *sLaws = app.add_subcommand("laws", "run a law suite");
  sLaws->add_option("--suite", lwSuite)->required();
  sLaws->add_option("--model", lwModels, "model ids (default: whole zoo)");
  sLaws->add_option("--format", lwFormat)->check(CLI::IsMember({"text", "json"}));
  sLaws->add_option("--seed", lwSeed);
  sLaws->add_option("-o,--output", lwOut);

  std::string trPath, trOut, trDiff, trFormat = defaultFormat();
  auto *sTr = app.add_subcommand("translate", "standard interpretation of a theory");
  sTr->add_option("path", trPath)->required();
  sTr->add_option("-o,--output", trOut);
  sTr->add_option("--diff", trDiff, "golden .iseq to compare against");
  sTr->add_option("--format", trFormat)->check(CLI::IsMember({"text", "json"}));

  std::string ckTheory, ckStruct, ckModel, ckFormat = defaultFormat();
  auto *sCk = app.add_subcommand("check", "check a structure against a theory");
  sCk->add_option("theory", ckTheory)->required();
  sCk->add_option("structure", ckStruct)->required();
  sCk->add_option("--model", ckModel, "override the structure's model id");
  sCk->add_option("--format", ckFormat)->check(CLI::IsMember({"text", "json"}));

  std::string shTheory, shModel, shAxiom, shFormat = defaultFormat();
  int shMax = 2;
  uint64_t shCap = 2000000;
  auto *sSh = app.add_subcommand("search", "search for a finite countermodel");
  sSh->add_option("theory", shTheory)->required();
  sSh->add_option("--model", shModel)->required();
  sSh->add_option("--max-domain", shMax);
  sSh->add_option("--axiom", shAxiom, "target axiom: others hold, target fails");
  sSh->add_option("--cap", shCap, "structure enumeration cap");
  sSh->add_option("--format", shFormat)->check(CLI::IsMember({"text", "json"}));

  auto *sModels = app.add_subcommand("models", "list the model zoo");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;
  }

  try {
    if (sParse->parsed()) return cmdParse(parsePath);
    if (sEval->parsed()) return cmdEval(evModel, evFormula, evDomains, evAssigns, evClassify);
    if (sLaws->parsed()) return cmdLaws(lwSuite, lwModels, lwFormat, lwSeed, lwOut);
    if (sTr->parsed()) return cmdTranslate(trPath, trOut, trDiff, trFormat);
    if (sCk->parsed()) return cmdCheck(ckTheory, ckStruct, ckModel, ckFormat);
    if (sSh->parsed()) return cmdSearch(shTheory, shModel, shMax, shAxiom, shCap, shFormat);
    if (sModels->parsed()) {
      for (auto &id : model_zoo_ids()) std::cout << id << "\n";
      return 0;
    }
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::ios_base::failure &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
