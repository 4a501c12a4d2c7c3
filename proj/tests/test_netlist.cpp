#include "dadda/netlist.hpp"

#include <cstdint>

#include "dadda/analysis.hpp"
#include "doctest.h"

using namespace dadda;

namespace {

// Exhaustive 3-variable lane packing: lane v holds (a,b,c) = bits of v.
std::vector<Words> three_var_lanes(const Netlist& nl) {
  std::vector<Words> in(nl.inputs().size());
  std::uint64_t a = 0, b = 0, c = 0;
  for (int v = 0; v < 8; ++v) {
    a |= static_cast<std::uint64_t>(v & 1) << v;
    b |= static_cast<std::uint64_t>((v >> 1) & 1) << v;
    c |= static_cast<std::uint64_t>((v >> 2) & 1) << v;
  }
  std::uint64_t vals[] = {a, b, c};
  for (std::size_t i = 0; i < in.size(); ++i) in[i] = {vals[i]};
  return in;
}

}  // namespace

TEST_CASE("adder macros compute single-column binary sums") {
  Netlist nl;
  NetId a = nl.add_input("a", 1)[0];
  NetId b = nl.add_input("b", 1)[0];
  NetId c = nl.add_input("c", 1)[0];
  auto ha = nl.half_adder(a, b);
  auto fa = nl.full_adder(a, b, c);
  nl.set_output("o", {ha.sum, ha.carry, fa.sum, fa.carry});

  Words val = evaluate(nl, three_var_lanes(nl), 0xff);
  for (int v = 0; v < 8; ++v) {
    int av = v & 1, bv = (v >> 1) & 1, cv = (v >> 2) & 1;
    int ha_total = av + bv;
    int fa_total = av + bv + cv;
    CHECK(((val[ha.sum] >> v) & 1) == static_cast<unsigned>(ha_total & 1));
    CHECK(((val[ha.carry] >> v) & 1) == static_cast<unsigned>(ha_total >> 1));
    CHECK(((val[fa.sum] >> v) & 1) == static_cast<unsigned>(fa_total & 1));
    CHECK(((val[fa.carry] >> v) & 1) == static_cast<unsigned>(fa_total >> 1));
  }
}

TEST_CASE("mux selects between its data legs") {
  Netlist nl;
  NetId s = nl.add_input("s", 1)[0];
  NetId d0 = nl.add_input("d0", 1)[0];
  NetId d1 = nl.add_input("d1", 1)[0];
  NetId m = nl.mux(s, d0, d1);
  nl.set_output("o", {m});
  Words val = evaluate(nl, three_var_lanes(nl), 0xff);
  for (int v = 0; v < 8; ++v) {
    int sv = v & 1, v0 = (v >> 1) & 1, v1 = (v >> 2) & 1;
    CHECK(((val[m] >> v) & 1) == static_cast<unsigned>(sv ? v1 : v0));
  }
}

TEST_CASE("constant operands fold instead of emitting gates") {
  Netlist nl;
  NetId x = nl.add_input("x", 1)[0];
  NetId zero = nl.const0();
  NetId one = nl.const1();
  std::size_t cells = nl.cells().size();  // just the two constants

  CHECK(nl.g(Gate::And2, x, zero) == zero);
  CHECK(nl.g(Gate::And2, zero, x) == zero);
  CHECK(nl.g(Gate::And2, x, one) == x);
  CHECK(nl.g(Gate::Or2, x, zero) == x);
  CHECK(nl.g(Gate::Or2, x, one) == one);
  CHECK(nl.g(Gate::Xor2, x, zero) == x);
  CHECK(nl.g(Gate::And2, one, zero) == zero);
  CHECK(nl.g(Gate::Or2, one, zero) == one);
  CHECK(nl.g(Gate::Xor2, one, one) == zero);
  CHECK(nl.g(Gate::Not, zero) == one);
  CHECK(nl.g(Gate::Not, one) == zero);
  CHECK(nl.cells().size() == cells);  // nothing above created a gate

  NetId nx = nl.g(Gate::Xor2, x, one);  // degrades to an inverter
  CHECK(nl.cells().size() == cells + 1);
  CHECK(nl.cells().back().op == Gate::Not);
  nl.set_output("o", {nx});
  Words val = evaluate(nl, {{0b01ull}}, 0x3);
  CHECK((val[nx] & 0x3) == 0b10);
}

TEST_CASE("build depth follows unit-gate arrivals with double-cost xor") {
  Netlist nl;
  NetId a = nl.add_input("a", 1)[0];
  NetId b = nl.add_input("b", 1)[0];
  NetId c = nl.add_input("c", 1)[0];
  auto fa = nl.full_adder(a, b, c);
  CHECK(nl.build_depth(a) == 0);
  CHECK(nl.build_depth(fa.sum) == 4);    // xor(xor) = 2 + 2
  CHECK(nl.build_depth(fa.carry) == 4);  // and(xor) + or = 2+1+1
  NetId inv = nl.g(Gate::Not, fa.sum);
  CHECK(nl.build_depth(inv) == 5);
}

TEST_CASE("evaluate confines inversion and constants to the lane mask") {
  Netlist nl;
  NetId x = nl.add_input("x", 1)[0];
  NetId nx = nl.g(Gate::Not, x);
  NetId one = nl.const1();
  nl.set_output("o", {nx, one});
  Words val = evaluate(nl, {{0b0101ull}}, 0xf);
  CHECK(val[nx] == 0b1010);
  CHECK(val[one] == 0xf);
}

TEST_CASE("restore rejects structure that breaks the id ordering contract") {
  std::vector<Port> inputs{{"a", {0, 1}}};
  std::vector<Port> outputs{{"o", {2}}};

  SUBCASE("valid structure restores") {
    std::vector<Cell> cells{{Gate::And2, 0, 1, 2}};
    Netlist nl = Netlist::restore(inputs, cells, outputs, {});
    CHECK(nl.net_count() == 3);
    CHECK(nl.build_depth(2) == 1);
  }
  SUBCASE("gate output off the dense sequence") {
    std::vector<Cell> cells{{Gate::And2, 0, 1, 5}};
    CHECK_THROWS(Netlist::restore(inputs, cells, outputs, {}));
  }
  SUBCASE("gate consuming a later net") {
    std::vector<Cell> cells{{Gate::And2, 0, 3, 2}, {Gate::Not, 0, 0, 3}};
    CHECK_THROWS(Netlist::restore(inputs, cells, outputs, {}));
  }
  SUBCASE("output referencing an unknown net") {
    std::vector<Cell> cells{{Gate::And2, 0, 1, 2}};
    CHECK_THROWS(Netlist::restore(inputs, cells, {{"o", {9}}}, {}));
  }
  SUBCASE("input bits not dense from zero") {
    CHECK_THROWS(Netlist::restore({{"a", {1, 2}}}, {}, {}, {}));
  }
}
