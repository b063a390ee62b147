#include <stdexcept>

#include "linlog/models.hpp"

namespace linlog {

ChuModel::ChuModel(std::shared_ptr<const FiniteHeyting> base, ChuVariant variant, std::string id)
    : AffineModel(std::move(id)), H_(std::move(base)), variant_(variant) {}

ChuVal ChuModel::get(const Value &v) const {
  if (auto *c = std::get_if<ChuVal>(&v)) return *c;
  throw std::invalid_argument(id() + ": value is not a Chu pair");
}

ChuVal ChuModel::canon(int pf, int rf) const {
  if (variant_ == ChuVariant::Chu1) return {pf, rf};
  // (P+, P-) ~ (P+, P- /\ ~P+): one canonical representative per class.
  return {pf, H_->meet(rf, H_->neg(pf))};
}

Value ChuModel::top() const { return canon(H_->top, H_->bot); }
Value ChuModel::bot() const { return canon(H_->bot, H_->top); }

Value ChuModel::bin(BinOp op, const Value &av, const Value &bv) const {
  const FiniteHeyting &H = *H_;
  ChuVal a = get(av), b = get(bv);
  switch (op) {
  case BinOp::With:
    return canon(H.meet(a.pf, b.pf), H.join(a.rf, b.rf));
  case BinOp::Plus:
    return canon(H.join(a.pf, b.pf), H.meet(a.rf, b.rf));
  case BinOp::Tensor:
    return canon(H.meet(a.pf, b.pf), H.meet(H.imp(a.pf, b.rf), H.imp(b.pf, a.rf)));
  case BinOp::Limp:
    return canon(H.meet(H.imp(a.pf, b.pf), H.imp(b.rf, a.rf)), H.meet(a.pf, b.rf));
  case BinOp::Par: {
    // ~(~P (x) ~Q), the de Morgan definition.
    Value na = un(UnOp::Neg, av), nb = un(UnOp::Neg, bv);
    return un(UnOp::Neg, bin(BinOp::Tensor, na, nb));
  }
  }
  throw std::invalid_argument("unknown binary op");
}

Value ChuModel::un(UnOp op, const Value &av) const {
  const FiniteHeyting &H = *H_;
  ChuVal a = get(av);
  switch (op) {
  case UnOp::Neg:
    return canon(a.rf, a.pf);
  case UnOp::Bang:
    return canon(a.pf, H.neg(a.pf));
  case UnOp::WhyNot:
    return canon(H.neg(a.rf), a.rf);
  }
  throw std::invalid_argument("unknown unary op");
}

Value ChuModel::quant(QuantOp op, const std::vector<Value> &family) const {
  const FiniteHeyting &H = *H_;
  int pf, rf;
  if (op == QuantOp::Forall) {
    pf = H.top;
    rf = H.bot;
    for (auto &v : family) {
      ChuVal c = get(v);
      pf = H.meet(pf, c.pf);
      rf = H.join(rf, c.rf);
    }
  } else {
    pf = H.bot;
    rf = H.top;
    for (auto &v : family) {
      ChuVal c = get(v);
      pf = H.join(pf, c.pf);
      rf = H.meet(rf, c.rf);
    }
  }
  return canon(pf, rf);
}

bool ChuModel::leq(const Value &av, const Value &bv) const {
  ChuVal a = get(av), b = get(bv);
  return H_->leq(a.pf, b.pf) && H_->leq(b.rf, a.rf);
}

std::vector<Value> ChuModel::enumeration() const {
  std::vector<Value> out;
  for (int p = 0; p < H_->size; ++p)
    for (int r = 0; r < H_->size; ++r) {
      if (variant_ == ChuVariant::Strict0 && H_->meet(p, r) != H_->bot) continue;
      out.push_back(ChuVal{p, r});
    }
  return out;
}

std::string ChuModel::printValue(const Value &v) const {
  ChuVal c = get(v);
  return "(" + H_->label[c.pf] + "," + H_->label[c.rf] + ")";
}

Value ChuModel::parseValue(const std::string &s) const {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw std::runtime_error(id() + ": bad Chu literal '" + s + "'");
  std::string body = s.substr(1, s.size() - 2);
  // Labels may contain commas inside {..}; split at depth 0.
  int depth = 0;
  size_t cut = std::string::npos;
  for (size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '{') ++depth;
    else if (body[i] == '}') --depth;
    else if (body[i] == ',' && depth == 0) { cut = i; break; }
  }
  if (cut == std::string::npos)
    throw std::runtime_error(id() + ": bad Chu literal '" + s + "'");
  auto find = [&](const std::string &lbl) {
    for (int i = 0; i < H_->size; ++i)
      if (H_->label[i] == lbl) return i;
    throw std::runtime_error(id() + ": unknown lattice element '" + lbl + "'");
  };
  ChuVal c{find(body.substr(0, cut)), find(body.substr(cut + 1))};
  if (variant_ == ChuVariant::Strict0 && H_->meet(c.pf, c.rf) != H_->bot)
    throw std::runtime_error(id() + ": literal violates disjointness: " + s);
  return c;
}

} // namespace linlog
