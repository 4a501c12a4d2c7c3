#include "dadda/verilog.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace dadda {

std::string verilog_module_name(const Netlist& nl) {
  const NetlistMeta& m = nl.meta();
  if (m.variant.empty() || m.n <= 0) return "netlist";
  std::string v = m.variant;
  for (char& c : v)
    if (c == '-') c = '_';
  return "dadda_mul_n" + std::to_string(m.n) + "_" + v;
}

std::string to_verilog(const Netlist& nl) {
  std::ostringstream out;
  // Name every input bit as port[index]; gate outputs get w<id> wires.
  std::unordered_map<NetId, std::string> ref;
  for (const Port& p : nl.inputs())
    for (std::size_t i = 0; i < p.bits.size(); ++i)
      ref[p.bits[i]] = p.name + "[" + std::to_string(i) + "]";
  for (const Cell& c : nl.cells()) ref[c.out] = "w" + std::to_string(c.out);

  out << "module " << verilog_module_name(nl) << "(";
  bool first = true;
  for (const Port& p : nl.inputs()) {
    out << (first ? "" : ", ") << p.name;
    first = false;
  }
  for (const Port& p : nl.outputs()) {
    out << (first ? "" : ", ") << p.name;
    first = false;
  }
  out << ");\n";
  for (const Port& p : nl.inputs())
    out << "  input [" << p.bits.size() - 1 << ":0] " << p.name << ";\n";
  for (const Port& p : nl.outputs())
    out << "  output [" << p.bits.size() - 1 << ":0] " << p.name << ";\n";

  for (const Cell& c : nl.cells()) out << "  wire w" << c.out << ";\n";

  for (const Cell& c : nl.cells()) {
    switch (c.op) {
      case Gate::And2:
      case Gate::Or2:
      case Gate::Xor2: {
        const char* prim = c.op == Gate::And2 ? "and" : c.op == Gate::Or2 ? "or" : "xor";
        out << "  " << prim << " g" << c.out << "(w" << c.out << ", " << ref.at(c.in0)
            << ", " << ref.at(c.in1) << ");\n";
        break;
      }
      case Gate::Not:
        out << "  not g" << c.out << "(w" << c.out << ", " << ref.at(c.in0) << ");\n";
        break;
      case Gate::Const0:
        out << "  assign w" << c.out << " = 1'b0;\n";
        break;
      case Gate::Const1:
        out << "  assign w" << c.out << " = 1'b1;\n";
        break;
    }
  }

  for (const Port& p : nl.outputs())
    for (std::size_t i = 0; i < p.bits.size(); ++i)
      out << "  assign " << p.name << "[" << i << "] = " << ref.at(p.bits[i]) << ";\n";
  out << "endmodule\n";
  return out.str();
}

}  // namespace dadda
