#include "dadda/netlist.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace dadda {

std::string_view gate_name(Gate g) {
  switch (g) {
    case Gate::And2: return "AND2";
    case Gate::Or2: return "OR2";
    case Gate::Xor2: return "XOR2";
    case Gate::Not: return "NOT";
    case Gate::Const0: return "CONST0";
    case Gate::Const1: return "CONST1";
  }
  return "?";
}

std::optional<Gate> gate_from_name(std::string_view name) {
  if (name == "AND2") return Gate::And2;
  if (name == "OR2") return Gate::Or2;
  if (name == "XOR2") return Gate::Xor2;
  if (name == "NOT") return Gate::Not;
  if (name == "CONST0") return Gate::Const0;
  if (name == "CONST1") return Gate::Const1;
  return std::nullopt;
}

NetId Netlist::fresh(int depth) {
  dep_.push_back(depth);
  return static_cast<NetId>(dep_.size() - 1);
}

std::vector<NetId> Netlist::add_input(std::string name, int width) {
  if (width <= 0) throw std::invalid_argument("input width must be positive");
  std::vector<NetId> ids;
  ids.reserve(static_cast<std::size_t>(width));
  for (int i = 0; i < width; ++i) ids.push_back(fresh(0));
  inputs_.push_back({std::move(name), ids});
  return ids;
}

void Netlist::set_output(std::string name, std::vector<NetId> bits) {
  for (NetId b : bits)
    if (b >= dep_.size()) throw std::invalid_argument("output references unknown net");
  outputs_.push_back({std::move(name), std::move(bits)});
}

std::size_t Netlist::input_bit_count() const {
  std::size_t n = 0;
  for (const Port& p : inputs_) n += p.bits.size();
  return n;
}

NetId Netlist::const0() {
  if (!c0_) {
    NetId out = fresh(0);
    cells_.push_back({Gate::Const0, 0, 0, out});
    c0_ = out;
  }
  return *c0_;
}

NetId Netlist::const1() {
  if (!c1_) {
    NetId out = fresh(0);
    cells_.push_back({Gate::Const1, 0, 0, out});
    c1_ = out;
  }
  return *c1_;
}

std::optional<NetId> Netlist::fold_binary(Gate op, NetId a, NetId b) {
  bool ca = is_const0(a) || is_const1(a);
  bool cb = is_const0(b) || is_const1(b);
  if (!ca && !cb) return std::nullopt;
  if (ca && !cb) std::swap(a, b);  // constant operand now in b
  if (ca && cb) {
    int x = is_const1(a) ? 1 : 0;
    int y = is_const1(b) ? 1 : 0;
    int v = op == Gate::And2 ? (x & y) : op == Gate::Or2 ? (x | y) : (x ^ y);
    return v ? const1() : const0();
  }
  bool bzero = is_const0(b);
  switch (op) {
    case Gate::And2: return bzero ? const0() : a;
    case Gate::Or2: return bzero ? a : const1();
    case Gate::Xor2: return bzero ? a : g(Gate::Not, a);
    default: return std::nullopt;
  }
}

NetId Netlist::g(Gate op, NetId a) {
  if (op != Gate::Not) throw std::invalid_argument("unary overload is NOT only");
  if (a >= dep_.size()) throw std::invalid_argument("gate input references unknown net");
  if (is_const0(a)) return const1();
  if (is_const1(a)) return const0();
  NetId out = fresh(dep_[a] + unit_delay(op));
  cells_.push_back({op, a, 0, out});
  return out;
}

NetId Netlist::g(Gate op, NetId a, NetId b) {
  if (gate_arity(op) != 2) throw std::invalid_argument("binary overload needs a 2-input op");
  if (a >= dep_.size() || b >= dep_.size())
    throw std::invalid_argument("gate input references unknown net");
  if (auto folded = fold_binary(op, a, b)) return *folded;
  NetId out = fresh(std::max(dep_[a], dep_[b]) + unit_delay(op));
  cells_.push_back({op, a, b, out});
  return out;
}

Netlist::SumCarry Netlist::half_adder(NetId a, NetId b) {
  NetId s = g(Gate::Xor2, a, b);
  NetId c = g(Gate::And2, a, b);
  return {s, c};
}

Netlist::SumCarry Netlist::full_adder(NetId a, NetId b, NetId c) {
  NetId x = g(Gate::Xor2, a, b);
  NetId s = g(Gate::Xor2, x, c);
  NetId t1 = g(Gate::And2, a, b);
  NetId t2 = g(Gate::And2, x, c);
  NetId co = g(Gate::Or2, t1, t2);
  return {s, co};
}

NetId Netlist::mux(NetId sel, NetId a0, NetId a1) { return mux(sel, a0, a1, g(Gate::Not, sel)); }

NetId Netlist::mux(NetId sel, NetId a0, NetId a1, NetId nsel) {
  NetId t1 = g(Gate::And2, sel, a1);
  NetId t0 = g(Gate::And2, nsel, a0);
  return g(Gate::Or2, t1, t0);
}

Netlist Netlist::restore(std::vector<Port> inputs, std::vector<Cell> cells,
                         std::vector<Port> outputs, NetlistMeta meta) {
  Netlist nl;
  NetId next = 0;
  for (Port& p : inputs) {
    if (p.bits.empty()) throw std::runtime_error("netlist: empty input port " + p.name);
    for (NetId b : p.bits) {
      if (b != next)
        throw std::runtime_error("netlist: input bits must be dense ids in declaration order");
      ++next;
    }
    nl.dep_.insert(nl.dep_.end(), p.bits.size(), 0);
  }
  nl.inputs_ = std::move(inputs);

  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell& c = cells[i];
    if (c.out != next)
      throw std::runtime_error("netlist: gate outputs must continue the dense id sequence");
    int arity = gate_arity(c.op);
    int d = 0;
    if (arity >= 1) {
      if (c.in0 >= c.out) throw std::runtime_error("netlist: gate input after its output");
      d = nl.dep_[c.in0];
    }
    if (arity == 2) {
      if (c.in1 >= c.out) throw std::runtime_error("netlist: gate input after its output");
      d = std::max(d, nl.dep_[c.in1]);
    }
    nl.dep_.push_back(d + unit_delay(c.op));
    if (c.op == Gate::Const0 && !nl.c0_) nl.c0_ = c.out;
    if (c.op == Gate::Const1 && !nl.c1_) nl.c1_ = c.out;
    ++next;
  }
  nl.cells_ = std::move(cells);

  for (Port& p : outputs)
    for (NetId b : p.bits)
      if (b >= nl.dep_.size()) throw std::runtime_error("netlist: output references unknown net");
  nl.outputs_ = std::move(outputs);
  nl.meta_ = std::move(meta);
  return nl;
}

}  // namespace dadda
