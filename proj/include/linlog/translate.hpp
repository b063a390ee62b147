#ifndef LINLOG_TRANSLATE_HPP
#define LINLOG_TRANSLATE_HPP

#include <string>
#include <vector>

#include "linlog/lattice.hpp"
#include "linlog/semantics.hpp"
#include "linlog/syntax.hpp"

namespace linlog {

// Standard interpretation of a linear formula: intuitionistic proof/refutation pair.
struct ChuSplit {
  IF pf, rf;
};
ChuSplit chu_split(const LF &f);

struct TranslatedSequent {
  std::string axiom;  // source axiom name ("" for standing clauses)
  std::string clause; // proof | contra<i> | strong | disjoint, with .N suffix after splitting
  std::vector<std::pair<std::string, std::string>> context;
  std::vector<IF> hyps;
  IF concl;
};

// Raw split of one axiom: proof sequent plus one contrapositive per
// non-affirmative hypothesis (With-hypotheses yield disjunctive conclusions).
std::vector<TranslatedSequent> sequent_split(const Sequent &seq, const Theory &theory);

// Confluent cleanup rewrites producing the paper's tabulated style.
std::vector<TranslatedSequent> normalize_int(const TranslatedSequent &s);

// Full theory expansion: disjointness clause per dual-paired predicate, then
// normalized splits of every axiom. Throws if a predicate is neither
// affirmative nor dual-paired.
std::vector<TranslatedSequent> translate_theory(const Theory &theory);

LF embed_int(const IF &f);

std::string print_translated(const TranslatedSequent &t); // "axiom.clause: h1, h2 |- c"
std::string translated_to_json(const std::vector<TranslatedSequent> &ts);

// Golden-file diff: sequent bodies as sets modulo variable renaming.
struct DiffResult {
  bool match;
  std::vector<std::string> onlyInOutput, onlyInGolden;
};
DiffResult diff_iseq(const std::vector<TranslatedSequent> &output,
                     const std::string &goldenText, const Theory &theory);
// Canonical body of one sequent line (used by diff; exposed for tests).
std::string canonical_sequent_body(const std::string &body, const Theory &theory);

// Semantic soundness of the translation --------------------------------------

struct VerifyReport {
  int trials = 0, agree = 0;
  std::string firstMismatch;
  bool ok() const { return trials == agree; }
};
// Assign every atom instance a canonical Chu(H,0) pair; compare eval in
// Chu(H,0) with the canonicalized pair of intuitionistic evaluations in H.
// trials = 0 requests the exhaustive sweep (propositional formulas only).
VerifyReport verify_translation(const LF &f, const FiniteHeyting &H, int trials,
                                uint64_t seed = 1);

} // namespace linlog

#endif
