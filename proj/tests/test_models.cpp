#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "linlog/models.hpp"

using namespace linlog;

namespace {
Value rv(long long n, long long d) { return Value{Rat(n, d)}; }
}

TEST_CASE("Lukasiewicz connective formulas on exact rationals") {
  auto m = make_model("luk:grid5");
  CHECK(value_equal(m->bin(BinOp::Tensor, rv(3, 4), rv(3, 4)), rv(1, 2)));
  CHECK(value_equal(m->bin(BinOp::Limp, rv(3, 4), rv(1, 4)), rv(1, 2)));
  CHECK(value_equal(m->un(UnOp::Neg, rv(3, 4)), rv(1, 4)));
  CHECK(value_equal(m->bin(BinOp::With, rv(1, 3), rv(2, 3)), rv(1, 3)));
  CHECK(value_equal(m->bin(BinOp::Plus, rv(1, 3), rv(2, 3)), rv(2, 3)));
  CHECK(value_equal(m->bin(BinOp::Par, rv(2, 3), rv(2, 3)), rv(1, 1)));
  CHECK(value_equal(m->un(UnOp::Bang, rv(1, 1)), rv(1, 1)));
  CHECK(value_equal(m->un(UnOp::Bang, rv(99, 100)), rv(0, 1)));
  CHECK(value_equal(m->un(UnOp::WhyNot, rv(1, 100)), rv(1, 1)));
  CHECK(value_equal(m->un(UnOp::WhyNot, rv(0, 1)), rv(0, 1)));
}

TEST_CASE("luk grid enumeration and protocol") {
  auto m = make_model("luk:grid5");
  auto e = m->enumeration();
  CHECK(e.size() == 5);
  CHECK(value_equal(e.front(), rv(0, 1)));
  CHECK(value_equal(e.back(), rv(1, 1)));
  CHECK_FALSE(m->exhaustive());
  CHECK(m->protocol() != "exhaustive");
  std::mt19937_64 rng(7), rng2(7);
  auto s1 = m->randomSample(rng, 10);
  auto s2 = m->randomSample(rng2, 10);
  REQUIRE(s1.size() == 10);
  for (size_t i = 0; i < 10; ++i) CHECK(value_equal(s1[i], s2[i]));
}

TEST_CASE("luk values outside [0,1] are rejected") {
  auto m = make_model("luk:grid5");
  CHECK_THROWS_AS((void)m->bin(BinOp::Tensor, rv(3, 2), rv(1, 2)), std::invalid_argument);
}

TEST_CASE("interior model: ! is interior, ? is closure") {
  auto im = std::dynamic_pointer_cast<const InteriorModel>(make_model("int:sierp"));
  REQUIRE(im);
  // Sierpinski: points {a, b}, opens {∅, {a}, X}; interior of {b} is ∅.
  CHECK(im->interior(0b10) == 0);
  CHECK(im->interior(0b01) == 0b01);
  auto m3 = std::dynamic_pointer_cast<const InteriorModel>(make_model("int:3pt"));
  REQUIRE(m3);
  // opens {∅, {a}, {c}, {a,c}, X}: interior of {a,b} is {a}
  CHECK(m3->interior(0b011) == 0b001);
  // closure of {a} via ?U = ~int(~U): complement {b,c}, interior {c}, complement {a,b}
  Value cl = m3->un(UnOp::WhyNot, Value{PtSet{0b001}});
  CHECK(std::get<PtSet>(cl).bits == 0b011);
}

TEST_CASE("interior model multiplicatives collapse to boolean set algebra") {
  auto m = make_model("int:3pt");
  for (const auto &a : m->enumeration())
    for (const auto &b : m->enumeration()) {
      CHECK(value_equal(m->bin(BinOp::Tensor, a, b), m->bin(BinOp::With, a, b)));
      CHECK(value_equal(m->bin(BinOp::Par, a, b), m->bin(BinOp::Plus, a, b)));
    }
}

TEST_CASE("model registry covers the zoo and round-trips values") {
  auto ids = model_zoo_ids();
  CHECK(ids.size() == 28);
  for (const auto &id : ids) {
    CAPTURE(id);
    auto m = make_model(id);
    REQUIRE(m);
    CHECK(m->id() == id);
    for (const auto &v : m->enumeration())
      CHECK(value_equal(m->parseValue(m->printValue(v)), v));
  }
  CHECK_THROWS((void)make_model("chu0:nonsense"));
}

TEST_CASE("three-valued correspondence with Lukasiewicz tables") {
  auto rep = restrict_chu3_check();
  for (const auto &m : rep.mismatches) MESSAGE(m);
  CHECK(rep.ok());
  CHECK(rep.checkedEntries > 0);
}
