#pragma once

#include <string>

#include "dadda/netlist.hpp"

namespace dadda {

// Structural Verilog: primitive instantiations only (and/or/xor/not), one
// wire per gate output, constants as assigns, ports named after the netlist
// ports. Net count in the module equals gate outputs plus primary inputs.
std::string to_verilog(const Netlist& nl);

std::string verilog_module_name(const Netlist& nl);

}  // namespace dadda
