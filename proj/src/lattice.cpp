#include "linlog/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace linlog {

namespace {

constexpr int kMaxSize = 32;

// Build every table from an explicit order relation. Meets/joins are found as
// least upper / greatest lower bounds; implication is the residuation maximum
// (join of all x with x /\ a <= b), cross-checked below in verify_heyting.
FiniteHeyting build_from_order(std::vector<std::string> labels,
                               const std::vector<uint8_t> &leq, const std::string &what) {
  int n = static_cast<int>(labels.size());
  if (n < 1) throw std::invalid_argument(what + ": empty carrier");
  if (n > kMaxSize) throw std::invalid_argument(what + ": carrier exceeds size cap 32");
  FiniteHeyting h;
  h.size = n;
  h.label = std::move(labels);
  h.leqTab = leq;
  auto le = [&](int a, int b) { return leq[a * n + b] != 0; };
  for (int a = 0; a < n; ++a) {
    if (!le(a, a)) throw std::invalid_argument(what + ": order not reflexive");
    for (int b = 0; b < n; ++b)
      if (a != b && le(a, b) && le(b, a))
        throw std::invalid_argument(what + ": order not antisymmetric");
  }
  h.meetTab.assign(n * n, -1);
  h.joinTab.assign(n * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int m = -1, j = -1;
      for (int x = 0; x < n; ++x) {
        if (le(x, a) && le(x, b) && (m < 0 || le(m, x))) m = x;
        if (le(a, x) && le(b, x) && (j < 0 || le(x, j))) j = x;
      }
      // Confirm glb/lub really bound every candidate.
      for (int x = 0; x < n; ++x) {
        if (le(x, a) && le(x, b) && (m < 0 || !le(x, m))) m = -2;
        if (le(a, x) && le(b, x) && (j < 0 || !le(j, x))) j = -2;
      }
      if (m < 0 || j < 0) throw std::invalid_argument(what + ": not a lattice");
      h.meetTab[a * n + b] = m;
      h.joinTab[a * n + b] = j;
    }
  h.bot = 0;
  h.top = 0;
  for (int x = 0; x < n; ++x) {
    if (le(x, h.bot)) h.bot = x;
    if (le(h.top, x)) h.top = x;
  }
  for (int x = 0; x < n; ++x)
    if (!le(h.bot, x) || !le(x, h.top))
      throw std::invalid_argument(what + ": no top/bottom");
  h.impTab.assign(n * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int r = h.bot;
      for (int x = 0; x < n; ++x)
        if (le(h.meetTab[x * n + a], b)) r = h.joinTab[r * n + x];
      if (!le(h.meetTab[r * n + a], b))
        throw std::invalid_argument(what + ": residuation maximum does not exist (not Heyting)");
      h.impTab[a * n + b] = r;
    }
  h.negTab.resize(n);
  for (int a = 0; a < n; ++a) h.negTab[a] = h.impTab[a * n + h.bot];
  return h;
}

FiniteHeyting build_from_sets(std::vector<uint32_t> sets, const std::vector<std::string> &points,
                              const std::string &what) {
  std::sort(sets.begin(), sets.end(), [](uint32_t a, uint32_t b) {
    int ca = __builtin_popcount(a), cb = __builtin_popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  int n = static_cast<int>(sets.size());
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    std::string s = "{";
    for (size_t p = 0; p < points.size(); ++p)
      if (sets[i] & (1u << p)) {
        if (s.size() > 1) s += ",";
        s += points[p];
      }
    labels[i] = s + "}";
  }
  std::vector<uint8_t> leq(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) leq[a * n + b] = (sets[a] & ~sets[b]) == 0;
  return build_from_order(std::move(labels), leq, what);
}

} // namespace

bool TopSpaceSpec::isOpen(uint32_t u) const {
  return std::find(opens.begin(), opens.end(), u) != opens.end();
}

std::string TopSpaceSpec::setLabel(uint32_t u) const {
  std::string s = "{";
  for (size_t p = 0; p < points.size(); ++p)
    if (u & (1u << p)) {
      if (s.size() > 1) s += ",";
      s += points[p];
    }
  return s + "}";
}

FiniteHeyting heyting_chain(int n) {
  if (n < 1) throw std::invalid_argument("heyting_chain: n must be >= 1");
  if (n > kMaxSize) throw std::invalid_argument("heyting_chain: size cap exceeded");
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    if (i == 0) labels[i] = "0";
    else if (i == n - 1) labels[i] = "1";
    else labels[i] = std::to_string(i) + "/" + std::to_string(n - 1);
  }
  std::vector<uint8_t> leq(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) leq[a * n + b] = a <= b;
  auto h = build_from_order(std::move(labels), leq, "heyting_chain");
  h.id = "chain" + std::to_string(n);
  return h;
}

FiniteHeyting heyting_boolean(int n) {
  if (n < 0 || n > 5) throw std::invalid_argument("heyting_boolean: need 0 <= n <= 5");
  std::vector<std::string> points;
  for (int i = 0; i < n; ++i) points.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<uint32_t> sets;
  for (uint32_t s = 0; s < (1u << n); ++s) sets.push_back(s);
  auto h = build_from_sets(sets, points, "heyting_boolean");
  h.id = "bool" + std::to_string(n);
  return h;
}

FiniteHeyting heyting_from_downsets(const PosetSpec &p) {
  int n = static_cast<int>(p.names.size());
  if (n > 6) throw std::invalid_argument("heyting_from_downsets: poset exceeds 6 elements");
  // Reflexive-transitive closure of the covering relation; detect cycles.
  std::vector<uint8_t> le(n * n, 0);
  for (int i = 0; i < n; ++i) le[i * n + i] = 1;
  for (auto &[lo, hi] : p.covers) {
    if (lo < 0 || hi < 0 || lo >= n || hi >= n)
      throw std::invalid_argument("heyting_from_downsets: cover index out of range");
    le[lo * n + hi] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (le[i * n + k] && le[k * n + j]) le[i * n + j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && le[i * n + j] && le[j * n + i])
        throw std::invalid_argument("heyting_from_downsets: covering relation is cyclic");
  std::vector<uint32_t> downsets;
  for (uint32_t s = 0; s < (1u << n); ++s) {
    bool down = true;
    for (int i = 0; i < n && down; ++i)
      if (s & (1u << i))
        for (int j = 0; j < n; ++j)
          if (le[j * n + i] && !(s & (1u << j))) down = false;
    if (down) downsets.push_back(s);
  }
  return build_from_sets(downsets, p.names, "heyting_from_downsets");
}

FiniteHeyting heyting_opens(const TopSpaceSpec &t) {
  int n = static_cast<int>(t.points.size());
  if (n > 5) throw std::invalid_argument("heyting_opens: more than 5 points");
  if (!t.isOpen(0) || !t.isOpen(t.full()))
    throw std::invalid_argument("heyting_opens: family lacks empty or full set");
  for (uint32_t u : t.opens)
    for (uint32_t v : t.opens) {
      if (!t.isOpen(u | v)) throw std::invalid_argument("heyting_opens: not closed under union");
      if (!t.isOpen(u & v))
        throw std::invalid_argument("heyting_opens: not closed under intersection");
    }
  return build_from_sets(t.opens, t.points, "heyting_opens");
}

HeytingReport verify_heyting(const FiniteHeyting &h) {
  HeytingReport rep;
  int n = h.size;
  auto name = [&](int x) { return h.label[x]; };
  for (int a = 0; a < n; ++a) {
    if (!h.leq(a, a)) rep.failures.push_back("order not reflexive at " + name(a));
    if (!h.leq(h.bot, a) || !h.leq(a, h.top))
      rep.failures.push_back("top/bot bound fails at " + name(a));
    if (h.neg(a) != h.imp(a, h.bot))
      rep.failures.push_back("neg(a) != imp(a,bot) at " + name(a));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (h.leq(a, b) && h.leq(b, a) && a != b)
        rep.failures.push_back("antisymmetry fails at (" + name(a) + "," + name(b) + ")");
      int m = h.meet(a, b), j = h.join(a, b);
      if (!h.leq(m, a) || !h.leq(m, b) || !h.leq(a, j) || !h.leq(b, j))
        rep.failures.push_back("meet/join bound fails at (" + name(a) + "," + name(b) + ")");
      for (int x = 0; x < n; ++x) {
        if (h.leq(x, a) && h.leq(x, b) && !h.leq(x, m))
          rep.failures.push_back("meet not greatest at (" + name(a) + "," + name(b) + ")");
        if (h.leq(a, x) && h.leq(b, x) && !h.leq(j, x))
          rep.failures.push_back("join not least at (" + name(a) + "," + name(b) + ")");
        if (h.leq(a, b) && h.leq(b, x) && !h.leq(a, x))
          rep.failures.push_back("transitivity fails at (" + name(a) + "," + name(b) + "," + name(x) + ")");
        // Residuation: x /\ a <= b  iff  x <= a -> b.
        bool lhs = h.leq(h.meet(x, a), b), rhs = h.leq(x, h.imp(a, b));
        if (lhs != rhs)
          rep.failures.push_back("residuation fails at (" + name(a) + "," + name(b) + ") with x=" + name(x));
      }
    }
  return rep;
}

// Zoo -------------------------------------------------------------------------

std::vector<std::string> space_zoo_ids() { return {"sierp", "disc2", "3pt"}; }

TopSpaceSpec make_space(const std::string &id) {
  if (id == "sierp") return TopSpaceSpec{{"a", "b"}, {0b00, 0b01, 0b11}};
  if (id == "disc2") return TopSpaceSpec{{"a", "b"}, {0b00, 0b01, 0b10, 0b11}};
  // {0,{a},{c},{a,c},X} over {a,b,c}
  if (id == "3pt") return TopSpaceSpec{{"a", "b", "c"}, {0b000, 0b001, 0b100, 0b101, 0b111}};
  throw std::invalid_argument("unknown space id: " + id);
}

namespace {
PosetSpec make_poset(const std::string &id) {
  if (id == "v") // two minimal elements under one top
    return PosetSpec{{"l", "r", "t"}, {{0, 2}, {1, 2}}};
  if (id == "diamond") // bottom, two incomparable middles, top
    return PosetSpec{{"b", "l", "r", "t"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}};
  throw std::invalid_argument("unknown poset id: " + id);
}
} // namespace

std::vector<std::string> lattice_zoo_ids() {
  return {"chain2", "chain3", "chain4", "chain5", "bool1", "bool2", "bool3",
          "downset:v", "downset:diamond", "opens:sierp", "opens:disc2", "opens:3pt"};
}

std::shared_ptr<const FiniteHeyting> make_lattice(const std::string &id) {
  FiniteHeyting h;
  if (id.rfind("chain", 0) == 0)
    h = heyting_chain(std::stoi(id.substr(5)));
  else if (id.rfind("bool", 0) == 0)
    h = heyting_boolean(std::stoi(id.substr(4)));
  else if (id.rfind("downset:", 0) == 0)
    h = heyting_from_downsets(make_poset(id.substr(8)));
  else if (id.rfind("opens:", 0) == 0)
    h = heyting_opens(make_space(id.substr(6)));
  else
    throw std::invalid_argument("unknown lattice id: " + id);
  h.id = id;
  return std::make_shared<FiniteHeyting>(std::move(h));
}

} // namespace linlog
