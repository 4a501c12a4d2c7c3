#pragma once

#include <optional>
#include <vector>

#include "dadda/netlist.hpp"
#include "dadda/ppgen.hpp"

namespace dadda {

// Carry-lookahead group widths across W bits: 4-bit groups with the
// remainder trailing. A positive lead carves a shorter leading group first,
// used where the deepest arrival sits at bit 0 so the low carry can launch
// before the rest of the chain.
std::vector<int> cla_group_widths(int w, int lead = 0);

struct AdderOut {
  std::vector<NetId> sums;
  std::optional<NetId> cout;  // absent when suppressed or never formed
};

// Group carry-lookahead adder. Per group: p_i = x_i ^ y_i, g_i = x_i y_i, and
// each group carry is an OR of discrete product terms built over a shared
// serial propagate prefix, with the carry-in term folded in last. Groups
// chain through their carry-out. want_cout=false suppresses the final carry.
AdderOut build_cla(Netlist& nl, const std::vector<NetId>& x, const std::vector<NetId>& y,
                   std::optional<NetId> cin, bool want_cout, int lead = 0);

AdderOut build_rca(Netlist& nl, const std::vector<NetId>& x, const std::vector<NetId>& y,
                   std::optional<NetId> cin);

// Completion adders collapse reduced columns (height <= 2) to one row.
enum class CpaKind { Rca, Cla, ClaLead1 };
// Returns sums from weight 0 upward; the top carry, when it exists, lands as
// one extra bit.
std::vector<NetId> completion_adder(Netlist& nl, const Columns& cols, CpaKind kind);

// AND of all nets, combining shallowest-first (by build depth, then id) so
// the latest arrival sits nearest the root.
NetId and_reduce_by_depth(Netlist& nl, const std::vector<NetId>& nets);

enum class PrefixShape { Chain, Tree };

struct BecOut {
  std::vector<NetId> xs;        // (value + 1) mod 2^m, LSB first
  std::optional<NetId> carry;   // wrap-around carry when requested
};

// Binary-excess incrementer: xs_0 = !b_0 and xs_i = b_i ^ (b_0 & .. & b_{i-1}),
// with the optional carry being the AND across all bits. Chain shares one
// running prefix; Tree builds each prefix arrival-aware.
BecOut build_bec(Netlist& nl, const std::vector<NetId>& bits, bool with_carry,
                 PrefixShape shape);

struct FinalAdderPlan {
  struct Block {
    int width;
    bool with_carry;  // propagates the block select onward
  };
  std::vector<Block> blocks;
};

// Doubling block ladder over the n-k bits above the select CLA: 4, 8, 16, ...
// while at least twice the block remains, then one terminal block without
// carry propagation.
FinalAdderPlan default_final_plan(int n, int k);

// Enforces the block-plan shape: widths positive and summing to n-k, every
// non-terminal block a power of two >= 4 with with_carry set, terminal block
// without. Throws std::invalid_argument with a reason.
void validate_final_plan(const FinalAdderPlan& plan, int n, int k);

enum class SelectStyle { Fused, Mux };

// Hybrid completion of upper = p1 + ovf for a k-bit overflow: a k-bit CLA
// forms the low sums and the first block select, then each plan block either
// fuses the select into its increment XORs (sel & prefix) or muxes between
// raw and incremented copies. Returns the n upper product bits; sels_out,
// when given, records each block's entry select.
std::vector<NetId> build_hybrid_adder(Netlist& nl, const std::vector<NetId>& ovf,
                                      const std::vector<NetId>& p1,
                                      const FinalAdderPlan& plan, PrefixShape shape,
                                      SelectStyle style,
                                      std::vector<NetId>* sels_out = nullptr);

}  // namespace dadda
