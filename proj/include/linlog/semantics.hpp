#ifndef LINLOG_SEMANTICS_HPP
#define LINLOG_SEMANTICS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linlog/models.hpp"
#include "linlog/syntax.hpp"

namespace linlog {

// Finite first-order structure over an affine model.
struct Structure {
  ModelP model;
  std::map<std::string, std::vector<std::string>> sortDomains;
  std::map<std::string, std::map<std::vector<int>, Value>> predTables;
  std::map<std::string, std::map<std::vector<int>, int>> funcTables; // consts: empty tuple
  int domainSize(const std::string &sort) const;
  int domainIndex(const std::string &sort, const std::string &elem) const;
};

// Throws on affirmative predicates whose table is not bang-fixed.
void validate_structure(const Structure &s, const Theory &theory);
Structure structure_from_json_file(const std::string &path, const Theory &theory,
                                   ModelP modelOverride = nullptr);
std::string structure_to_json(const Structure &s);

using Valuation = std::map<std::string, int>; // variable -> domain element index

Value eval(const LF &f, const Structure &s, const Valuation &v);

struct SequentResult {
  bool holds;
  Valuation witness; // first failing valuation when !holds
  std::string witnessText;
};
SequentResult holds_sequent(const Sequent &seq, const Structure &s);

// Law suites ------------------------------------------------------------------

enum class LawKind { Formula, Adjunction, MixUnits };
enum class LawRel { Equiv, Entails };

struct LawSchema {
  std::string name;
  std::string paperNote;
  LawKind kind = LawKind::Formula;
  LawRel rel = LawRel::Equiv;
  std::string lhs, rhs;            // formula text over atoms p,q,r and family Q(x):D
  std::vector<std::string> atoms;  // propositional metavariables
  bool usesFamily = false;         // adds Q(d0), Q(d1) metavariables
};

struct LawResult {
  std::string law, model;
  std::string status;   // "holds" | "fails" | "skipped"
  std::string expected; // "holds" | "fails"
  std::string witness;  // printable assignment when fails
  std::map<std::string, Value> witnessVals;
  std::string protocol;
};

const std::vector<LawSchema> &law_suite_schemas(const std::string &suite); // core, exponential, chu-special
std::vector<std::string> law_suite_names();
bool expected_to_fail(const std::string &law, const std::string &modelId);

struct SweepProtocol {
  size_t randomTuples = 2000; // extra tuples for non-exhaustive models
  uint64_t seed = 1;
};

LawResult check_law(const LawSchema &law, const ModelP &m, const SweepProtocol &p);
std::vector<LawResult> law_suite(const std::string &suite, const std::vector<ModelP> &models,
                                 const SweepProtocol &p);
// A fails-result must replay: re-evaluates the stored witness and confirms the violation.
bool replay_witness(const LawSchema &law, const ModelP &m, const LawResult &r);
const LawSchema &find_law(const std::string &suite, const std::string &name);

// Classification --------------------------------------------------------------

struct Classification {
  bool affirmative, refutative, decidable;
};
Classification classify(const Value &v, const ModelP &m);

// Countermodel search ---------------------------------------------------------

struct SearchResult {
  bool found = false;
  bool capExceeded = false;
  Structure structure;
  std::string failedAxiom;
  std::string witnessText;
  uint64_t structuresTried = 0;
};
// Enumerates structures (domains of size 1..maxDomain, tables over the carrier
// enumeration) in deterministic order. With targetAxiom set, looks for a
// structure satisfying every other axiom while falsifying the target;
// otherwise returns the first structure falsifying any axiom.
SearchResult search_countermodel(const Theory &theory, const ModelP &m, int maxDomain,
                                 const std::string &targetAxiom = "",
                                 uint64_t structureCap = 2000000);

// Random formulas -------------------------------------------------------------

// Seeded distribution over all connective kinds; quantifiers range over the
// designated sort "D"; atoms are unary predicates applied to a bound variable
// when one is in scope, else to the constant "c".
LF random_formula(uint64_t seed, int depth, int numAtoms);
// Predicate symbols used by random_formula (p1..pk with duals p1'..pk') plus "c"/"D".
std::vector<PredSymP> random_formula_preds(int numAtoms);

} // namespace linlog

#endif
