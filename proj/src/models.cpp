#include "linlog/models.hpp"

#include <cctype>
#include <stdexcept>

namespace linlog {

// Lukasiewicz -----------------------------------------------------------------

LukModel::LukModel(int gridPoints, std::string id) : AffineModel(std::move(id)) {
  if (gridPoints < 2) throw std::invalid_argument("luk grid needs at least 2 points");
  for (int i = 0; i < gridPoints; ++i) grid_.push_back(Rat(i, gridPoints - 1));
}

Rat LukModel::get(const Value &v) const {
  if (auto *r = std::get_if<Rat>(&v)) {
    if (*r < Rat(0) || *r > Rat(1))
      throw std::invalid_argument(id() + ": value outside [0,1]: " + rat_to_string(*r));
    return *r;
  }
  throw std::invalid_argument(id() + ": value is not a rational");
}

Value LukModel::top() const { return Rat(1); }
Value LukModel::bot() const { return Rat(0); }

Value LukModel::bin(BinOp op, const Value &av, const Value &bv) const {
  Rat a = get(av), b = get(bv);
  switch (op) {
  case BinOp::With: return rat_min(a, b);
  case BinOp::Plus: return rat_max(a, b);
  case BinOp::Tensor: return rat_max(Rat(0), a + b - Rat(1));
  case BinOp::Par: return rat_min(Rat(1), a + b);
  case BinOp::Limp: return rat_min(Rat(1), Rat(1) - a + b);
  }
  throw std::invalid_argument("unknown binary op");
}

Value LukModel::un(UnOp op, const Value &av) const {
  Rat a = get(av);
  switch (op) {
  case UnOp::Neg: return Rat(1) - a;
  case UnOp::Bang: return a == Rat(1) ? Rat(1) : Rat(0);
  case UnOp::WhyNot: return a == Rat(0) ? Rat(0) : Rat(1);
  }
  throw std::invalid_argument("unknown unary op");
}

Value LukModel::quant(QuantOp op, const std::vector<Value> &family) const {
  Rat acc = op == QuantOp::Forall ? Rat(1) : Rat(0);
  for (auto &v : family)
    acc = op == QuantOp::Forall ? rat_min(acc, get(v)) : rat_max(acc, get(v));
  return acc;
}

bool LukModel::leq(const Value &a, const Value &b) const { return get(a) <= get(b); }

std::vector<Value> LukModel::enumeration() const {
  std::vector<Value> out;
  for (auto &r : grid_) out.push_back(r);
  return out;
}

std::string LukModel::protocol() const {
  return "grid" + std::to_string(grid_.size()) + "+seeded-random(den<=16)";
}

std::vector<Value> LukModel::randomSample(std::mt19937_64 &rng, size_t n) const {
  std::vector<Value> out;
  std::uniform_int_distribution<long long> dens(1, 16);
  for (size_t i = 0; i < n; ++i) {
    long long den = dens(rng);
    std::uniform_int_distribution<long long> nums(0, den);
    out.push_back(Rat(nums(rng), den));
  }
  return out;
}

std::string LukModel::printValue(const Value &v) const { return rat_to_string(get(v)); }
Value LukModel::parseValue(const std::string &s) const {
  Rat r = rat_from_string(s);
  if (r < Rat(0) || r > Rat(1)) throw std::runtime_error(id() + ": literal outside [0,1]: " + s);
  return r;
}

// Interior model --------------------------------------------------------------

InteriorModel::InteriorModel(TopSpaceSpec space, std::string id)
    : AffineModel(std::move(id)), space_(std::move(space)) {
  heyting_opens(space_); // validates the topology (and the <=5 point cap)
}

uint32_t InteriorModel::get(const Value &v) const {
  if (auto *p = std::get_if<PtSet>(&v)) {
    if (p->bits & ~space_.full())
      throw std::invalid_argument(id() + ": subset outside the space");
    return p->bits;
  }
  throw std::invalid_argument(id() + ": value is not a point set");
}

uint32_t InteriorModel::interior(uint32_t u) const {
  uint32_t acc = 0;
  for (uint32_t o : space_.opens)
    if ((o & ~u) == 0) acc |= o;
  return acc;
}

Value InteriorModel::top() const { return PtSet{space_.full()}; }
Value InteriorModel::bot() const { return PtSet{0}; }

Value InteriorModel::bin(BinOp op, const Value &av, const Value &bv) const {
  uint32_t a = get(av), b = get(bv), full = space_.full();
  switch (op) {
  case BinOp::Tensor: case BinOp::With: return PtSet{a & b};
  case BinOp::Par: case BinOp::Plus: return PtSet{a | b};
  case BinOp::Limp: return PtSet{(full & ~a) | b};
  }
  throw std::invalid_argument("unknown binary op");
}

Value InteriorModel::un(UnOp op, const Value &av) const {
  uint32_t a = get(av), full = space_.full();
  switch (op) {
  case UnOp::Neg: return PtSet{full & ~a};
  case UnOp::Bang: return PtSet{interior(a)};
  case UnOp::WhyNot: // de Morgan dual of interior = topological closure
    return PtSet{full & ~interior(full & ~a)};
  }
  throw std::invalid_argument("unknown unary op");
}

Value InteriorModel::quant(QuantOp op, const std::vector<Value> &family) const {
  uint32_t acc = op == QuantOp::Forall ? space_.full() : 0;
  for (auto &v : family)
    acc = op == QuantOp::Forall ? (acc & get(v)) : (acc | get(v));
  return PtSet{acc};
}

bool InteriorModel::leq(const Value &a, const Value &b) const {
  return (get(a) & ~get(b)) == 0;
}

std::vector<Value> InteriorModel::enumeration() const {
  std::vector<Value> out;
  for (uint32_t s = 0; s <= space_.full(); ++s) out.push_back(PtSet{s});
  return out;
}

std::string InteriorModel::printValue(const Value &v) const {
  return space_.setLabel(get(v));
}

Value InteriorModel::parseValue(const std::string &s) const {
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw std::runtime_error(id() + ": bad point-set literal '" + s + "'");
  uint32_t bits = 0;
  std::string cur;
  auto take = [&]() {
    if (cur.empty()) return;
    for (size_t p = 0; p < space_.points.size(); ++p)
      if (space_.points[p] == cur) {
        bits |= 1u << p;
        cur.clear();
        return;
      }
    throw std::runtime_error(id() + ": unknown point '" + cur + "'");
  };
  for (size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] == ',') take();
    else if (!std::isspace(static_cast<unsigned char>(s[i]))) cur += s[i];
  }
  take();
  return PtSet{bits};
}

// Registry --------------------------------------------------------------------

ModelP make_model(const std::string &id) {
  if (id.rfind("chu0:", 0) == 0)
    return std::make_shared<ChuModel>(make_lattice(id.substr(5)), ChuVariant::Strict0, id);
  if (id.rfind("chu1:", 0) == 0)
    return std::make_shared<ChuModel>(make_lattice(id.substr(5)), ChuVariant::Chu1, id);
  if (id.rfind("luk:grid", 0) == 0)
    return std::make_shared<LukModel>(std::stoi(id.substr(8)), id);
  if (id.rfind("int:", 0) == 0)
    return std::make_shared<InteriorModel>(make_space(id.substr(4)), id);
  throw std::invalid_argument("unknown model id: " + id);
}

std::vector<std::string> model_zoo_ids() {
  std::vector<std::string> out;
  for (auto &l : lattice_zoo_ids()) out.push_back("chu0:" + l);
  for (auto &l : lattice_zoo_ids()) out.push_back("chu1:" + l);
  out.push_back("luk:grid5");
  for (auto &s : space_zoo_ids()) out.push_back("int:" + s);
  return out;
}

// Three-valued correspondence -------------------------------------------------

Chu3Report restrict_chu3_check() {
  Chu3Report rep;
  auto chu = std::make_shared<ChuModel>(make_lattice("chain2"), ChuVariant::Strict0,
                                        "chu0:chain2");
  auto luk = std::make_shared<LukModel>(3, "luk:grid3"); // {0, 1/2, 1}
  auto elems = chu->enumeration();
  if (elems.size() != 3) {
    rep.mismatches.push_back("Chu(chain2,0) has " + std::to_string(elems.size()) +
                             " elements, expected 3");
    return rep;
  }
  // Bijection via the order: F=(0,1) < N=(0,0) < T=(1,0) maps to 0 < 1/2 < 1.
  auto toLuk = [&](const Value &v) -> Value {
    ChuVal c = std::get<ChuVal>(v);
    if (c.pf == 1) return Rat(1);
    if (c.rf == 1) return Rat(0);
    return Rat(1, 2);
  };
  auto note = [&](const std::string &what, const Value &chuRes, const Value &lukRes) {
    ++rep.checkedEntries;
    if (!(toLuk(chuRes) == lukRes))
      rep.mismatches.push_back(what + ": chu=" + chu->printValue(chuRes) +
                               " luk=" + luk->printValue(lukRes));
  };
  const std::pair<BinOp, const char *> bins[] = {
      {BinOp::Tensor, "*"}, {BinOp::Par, "@"}, {BinOp::With, "&"},
      {BinOp::Plus, "+"}, {BinOp::Limp, "-o"}};
  const std::pair<UnOp, const char *> uns[] = {
      {UnOp::Neg, "~"}, {UnOp::Bang, "!"}, {UnOp::WhyNot, "?"}};
  for (auto &a : elems) {
    for (auto &[op, nm] : uns)
      note(std::string(nm) + chu->printValue(a), chu->un(op, a), luk->un(op, toLuk(a)));
    for (auto &b : elems)
      for (auto &[op, nm] : bins)
        note(chu->printValue(a) + nm + chu->printValue(b), chu->bin(op, a, b),
             luk->bin(op, toLuk(a), toLuk(b)));
  }
  return rep;
}

} // namespace linlog
