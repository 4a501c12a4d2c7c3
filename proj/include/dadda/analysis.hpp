#pragma once

#include <cstdint>
#include <vector>

#include "dadda/cost_model.hpp"
#include "dadda/netlist.hpp"

namespace dadda {

// One 64-bit word per net: 64 independent evaluation lanes.
using Words = std::vector<std::uint64_t>;

std::vector<int> net_depths(const Netlist& nl, const CostModel& model);

// Longest input-to-output arrival over all declared output bits.
int critical_depth(const Netlist& nl, const CostModel& model);

std::uint64_t total_area(const Netlist& nl, const CostModel& model);

struct GateCounts {
  std::uint64_t and2 = 0;
  std::uint64_t or2 = 0;
  std::uint64_t xor2 = 0;
  std::uint64_t not1 = 0;
  std::uint64_t consts = 0;
};
GateCounts count_gates(const Netlist& nl);

// Evaluates all nets on up to 64 lanes at once. inputs[i][j] carries the lane
// word for bit j of input port i. lane_mask clears unused lanes so inversion
// and constant-1 cannot leak into them.
Words evaluate(const Netlist& nl, const std::vector<Words>& inputs,
               std::uint64_t lane_mask = ~0ull);

// Zero-delay switching proxy: every lane draws two full operand tuples from a
// seeded stream; the count is the number of net-value flips between the two
// evaluations summed over all nets and lanes. Deterministic in (pairs, seed).
std::uint64_t toggle_count(const Netlist& nl, int pairs, std::uint64_t seed);

// Marks the cells reachable backwards from the given roots. Constant cells
// are never marked: shared constants do not constitute shared logic.
std::vector<bool> fanin_cone(const Netlist& nl, const std::vector<NetId>& roots);

}  // namespace dadda
