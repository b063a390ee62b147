#ifndef LINLOG_LATTICE_HPP
#define LINLOG_LATTICE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace linlog {

// Presentation of a finite poset by element names and a covering relation.
struct PosetSpec {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> covers; // (lower, upper) index pairs
};

// Finite topological space: point names plus the family of open sets (bitmasks).
struct TopSpaceSpec {
  std::vector<std::string> points;
  std::vector<uint32_t> opens;
  bool isOpen(uint32_t u) const;
  std::string setLabel(uint32_t u) const;
  uint32_t full() const { return (points.size() >= 32) ? ~0u : ((1u << points.size()) - 1u); }
};

// Explicit finite Heyting algebra: dense element indices, all tables precomputed.
struct FiniteHeyting {
  int size = 0;
  std::string id;
  std::vector<std::string> label;
  std::vector<uint8_t> leqTab;           // size*size
  std::vector<int> meetTab, joinTab, impTab; // size*size
  std::vector<int> negTab;               // size
  int top = -1, bot = -1;

  bool leq(int a, int b) const { return leqTab[a * size + b] != 0; }
  int meet(int a, int b) const { return meetTab[a * size + b]; }
  int join(int a, int b) const { return joinTab[a * size + b]; }
  int imp(int a, int b) const { return impTab[a * size + b]; }
  int neg(int a) const { return negTab[a]; }
};

FiniteHeyting heyting_chain(int n);
FiniteHeyting heyting_boolean(int n);
FiniteHeyting heyting_from_downsets(const PosetSpec &p);
FiniteHeyting heyting_opens(const TopSpaceSpec &t);

struct HeytingReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
HeytingReport verify_heyting(const FiniteHeyting &h);

// Builtin zoo -----------------------------------------------------------------

// Ids: chain2..chain5, bool1..bool3, downset:<poset-id>, opens:<space-id>.
std::vector<std::string> lattice_zoo_ids();
std::shared_ptr<const FiniteHeyting> make_lattice(const std::string &id);

// Space ids: sierp, disc2, 3pt (shared by opens:<id> lattices and int:<id> models).
std::vector<std::string> space_zoo_ids();
TopSpaceSpec make_space(const std::string &id);

} // namespace linlog

#endif
