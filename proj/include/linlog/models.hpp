#ifndef LINLOG_MODELS_HPP
#define LINLOG_MODELS_HPP

#include <memory>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "linlog/lattice.hpp"
#include "linlog/rational.hpp"

namespace linlog {

// Carrier element of some affine model.
struct ChuVal {
  int pf, rf;
  bool operator==(const ChuVal &o) const = default;
};
struct PtSet {
  uint32_t bits;
  bool operator==(const PtSet &o) const = default;
};
using Value = std::variant<ChuVal, Rat, PtSet>;

inline bool value_equal(const Value &a, const Value &b) { return a == b; }

enum class BinOp { Tensor, Par, With, Plus, Limp };
enum class UnOp { Neg, Bang, WhyNot };
enum class QuantOp { Forall, Exists };

// Semicartesian *-autonomous lattice with a Seely comonad.
class AffineModel {
public:
  explicit AffineModel(std::string id) : id_(std::move(id)) {}
  virtual ~AffineModel() = default;
  const std::string &id() const { return id_; }

  virtual Value top() const = 0;
  virtual Value bot() const = 0;
  virtual Value bin(BinOp op, const Value &a, const Value &b) const = 0;
  virtual Value un(UnOp op, const Value &a) const = 0;
  virtual Value quant(QuantOp op, const std::vector<Value> &family) const = 0;
  virtual bool leq(const Value &a, const Value &b) const = 0;

  // Exhaustive carrier for enumerable models, finite sample grid otherwise.
  virtual std::vector<Value> enumeration() const = 0;
  virtual bool exhaustive() const = 0;
  virtual std::string protocol() const { return "exhaustive"; }
  virtual std::vector<Value> randomSample(std::mt19937_64 &, size_t) const { return {}; }

  virtual std::string printValue(const Value &v) const = 0;
  virtual Value parseValue(const std::string &s) const = 0;

private:
  std::string id_;
};

using ModelP = std::shared_ptr<const AffineModel>;

// Chu(H,0) / Chu(H,1) ---------------------------------------------------------

enum class ChuVariant { Strict0, Chu1 };

class ChuModel : public AffineModel {
public:
  ChuModel(std::shared_ptr<const FiniteHeyting> base, ChuVariant variant, std::string id);
  const FiniteHeyting &base() const { return *H_; }
  ChuVariant variant() const { return variant_; }

  ChuVal canon(int pf, int rf) const;
  Value top() const override;
  Value bot() const override;
  Value bin(BinOp op, const Value &a, const Value &b) const override;
  Value un(UnOp op, const Value &a) const override;
  Value quant(QuantOp op, const std::vector<Value> &family) const override;
  bool leq(const Value &a, const Value &b) const override;
  std::vector<Value> enumeration() const override;
  bool exhaustive() const override { return true; }
  std::string printValue(const Value &v) const override;
  Value parseValue(const std::string &s) const override;

private:
  ChuVal get(const Value &v) const;
  std::shared_ptr<const FiniteHeyting> H_;
  ChuVariant variant_;
};

// Exact-rational Lukasiewicz model on [0,1] -----------------------------------

class LukModel : public AffineModel {
public:
  LukModel(int gridPoints, std::string id); // grid 0, 1/(n-1), ..., 1
  Value top() const override;
  Value bot() const override;
  Value bin(BinOp op, const Value &a, const Value &b) const override;
  Value un(UnOp op, const Value &a) const override;
  Value quant(QuantOp op, const std::vector<Value> &family) const override;
  bool leq(const Value &a, const Value &b) const override;
  std::vector<Value> enumeration() const override;
  bool exhaustive() const override { return false; }
  std::string protocol() const override;
  std::vector<Value> randomSample(std::mt19937_64 &rng, size_t n) const override;
  std::string printValue(const Value &v) const override;
  Value parseValue(const std::string &s) const override;

private:
  Rat get(const Value &v) const;
  std::vector<Rat> grid_;
};

// Boolean powerset with the topological interior comonad ----------------------

class InteriorModel : public AffineModel {
public:
  InteriorModel(TopSpaceSpec space, std::string id);
  const TopSpaceSpec &space() const { return space_; }
  uint32_t interior(uint32_t u) const;
  Value top() const override;
  Value bot() const override;
  Value bin(BinOp op, const Value &a, const Value &b) const override;
  Value un(UnOp op, const Value &a) const override;
  Value quant(QuantOp op, const std::vector<Value> &family) const override;
  bool leq(const Value &a, const Value &b) const override;
  std::vector<Value> enumeration() const override;
  bool exhaustive() const override { return true; }
  std::string printValue(const Value &v) const override;
  Value parseValue(const std::string &s) const override;

private:
  uint32_t get(const Value &v) const;
  TopSpaceSpec space_;
};

// Registry --------------------------------------------------------------------

// Ids: chu0:<lattice>, chu1:<lattice>, luk:grid<n>, int:<space>.
ModelP make_model(const std::string &id);
std::vector<std::string> model_zoo_ids();

// Three-valued correspondence check: Chu(chain2,0) against the Lukasiewicz
// tables restricted to {0, 1/2, 1} under T<->1, N<->1/2, F<->0.
struct Chu3Report {
  std::vector<std::string> mismatches;
  int checkedEntries = 0;
  bool ok() const { return mismatches.empty(); }
};
Chu3Report restrict_chu3_check();

} // namespace linlog

#endif
