#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dadda {

using NetId = std::uint32_t;

enum class Gate : std::uint8_t { And2, Or2, Xor2, Not, Const0, Const1 };

constexpr bool is_const(Gate g) { return g == Gate::Const0 || g == Gate::Const1; }
constexpr bool is_unary(Gate g) { return g == Gate::Not; }
constexpr int gate_arity(Gate g) { return is_const(g) ? 0 : is_unary(g) ? 1 : 2; }

// Arrival contribution of a gate under the default unit-gate timing:
// two-input XOR counts double, constants are free.
constexpr int unit_delay(Gate g) {
  return is_const(g) ? 0 : g == Gate::Xor2 ? 2 : 1;
}
constexpr int unit_area(Gate g) { return unit_delay(g); }

std::string_view gate_name(Gate g);
std::optional<Gate> gate_from_name(std::string_view name);

struct Cell {
  Gate op;
  NetId in0 = 0;
  NetId in1 = 0;  // unused for NOT and constants
  NetId out = 0;
};

struct Port {
  std::string name;
  std::vector<NetId> bits;  // LSB first
};

// Generator provenance carried along in netlist files. Everything here is
// redundant with the structure itself; it exists so downstream commands can
// label rows and pick module names without re-deriving configuration.
struct NetlistMeta {
  int n = 0;             // operand width, 0 when not generator-produced
  std::string variant;   // "regular-cla", "partitioned-cla", "partitioned-hybrid"
  int k = -1;            // low-part overflow width (partitioned variants)
  std::string inpart;    // completion-adder knob ("cla" or "rca")
  std::string bec;       // incrementer prefix shape ("chain" or "tree")
  std::string mbec;      // block select style ("fused" or "mux")
  std::vector<std::pair<int, bool>> plan;  // final-adder blocks (width, with_carry)

  bool empty() const { return n == 0 && variant.empty(); }
};

// Gate-level combinational netlist plus its construction API.
//
// Nets are dense ids in creation order: primary input bits first, then one
// net per gate output, so the cell list is topologically sorted by
// construction. The builder folds constant operands instead of emitting dead
// gates, and it tracks per-net arrival depth under the default unit-gate
// timing so callers can shape structures (prefix trees) by arrival.
class Netlist {
 public:
  std::vector<NetId> add_input(std::string name, int width);
  void set_output(std::string name, std::vector<NetId> bits);

  NetId const0();
  NetId const1();
  NetId g(Gate op, NetId a);            // NOT
  NetId g(Gate op, NetId a, NetId b);   // AND2 / OR2 / XOR2

  struct SumCarry {
    NetId sum;
    NetId carry;
  };
  SumCarry half_adder(NetId a, NetId b);
  // Shared-XOR form: sum = (a^b)^c, carry = ab | (a^b)c. 5 gates, depth 4.
  SumCarry full_adder(NetId a, NetId b, NetId c);
  // sel ? a1 : a0. Pass nsel to share an existing NOT of sel.
  NetId mux(NetId sel, NetId a0, NetId a1);
  NetId mux(NetId sel, NetId a0, NetId a1, NetId nsel);

  std::size_t net_count() const { return dep_.size(); }
  const std::vector<Cell>& cells() const { return cells_; }
  const std::vector<Port>& inputs() const { return inputs_; }
  const std::vector<Port>& outputs() const { return outputs_; }
  std::size_t input_bit_count() const;

  // Arrival depth under the default unit-gate timing, fixed at build time.
  int build_depth(NetId id) const { return dep_[id]; }

  bool is_const0(NetId id) const { return c0_ && *c0_ == id; }
  bool is_const1(NetId id) const { return c1_ && *c1_ == id; }

  NetlistMeta& meta() { return meta_; }
  const NetlistMeta& meta() const { return meta_; }

  // Rebuilds a netlist from parsed parts without any folding or renaming.
  // Enforces the generator ordering contract: input bits are exactly
  // 0..I-1 in declaration order, gate outputs continue contiguously, and
  // every gate input refers to an already-defined net. Throws on violation.
  static Netlist restore(std::vector<Port> inputs, std::vector<Cell> cells,
                         std::vector<Port> outputs, NetlistMeta meta);

 private:
  NetId fresh(int depth);
  std::optional<NetId> fold_binary(Gate op, NetId a, NetId b);

  std::vector<Cell> cells_;
  std::vector<Port> inputs_;
  std::vector<Port> outputs_;
  std::vector<int> dep_;
  std::optional<NetId> c0_;
  std::optional<NetId> c1_;
  NetlistMeta meta_;
};

}  // namespace dadda
