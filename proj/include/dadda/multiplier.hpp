#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dadda/adders.hpp"
#include "dadda/analysis.hpp"
#include "dadda/netlist.hpp"
#include "dadda/reduce.hpp"

namespace dadda {

enum class Variant { RegularCla, PartitionedCla, PartitionedHybrid };

std::string variant_name(Variant v);
std::optional<Variant> variant_from_name(std::string_view name);

struct MultiplierConfig {
  int n = 8;
  Variant variant = Variant::RegularCla;
  // Completion adders for the two partition halves. The upper half's deepest
  // arrival is its lowest bit, hence the leading short group there.
  CpaKind inpart_low = CpaKind::Cla;
  CpaKind inpart_high = CpaKind::ClaLead1;
  PrefixShape bec = PrefixShape::Tree;
  SelectStyle mbec = SelectStyle::Fused;
  std::optional<FinalAdderPlan> plan;  // hybrid only; default ladder otherwise

  static MultiplierConfig make(int n, Variant v);
  // Maps the user-facing completion-adder knob onto both halves.
  void set_inpart(std::string_view knob);  // "cla" or "rca"
  std::string inpart_knob() const;
};

// Construction byproducts the analyses consume: reduction schedules with
// per-stage snapshots, the partition seam rows, and the block selects.
struct BuildInfo {
  int k = 0;
  ReduceResult full;           // regular variant
  ReduceResult part0, part1;   // partitioned variants
  std::vector<NetId> s0, s1;   // completed partition rows (s0 carries the overflow)
  std::vector<NetId> sels;     // hybrid block entry selects
};

// Builds the requested multiplier over inputs a, b with output p.
// Partitioned variants require n >= 4 (the overflow CLA needs width >= 2).
Netlist build_multiplier(const MultiplierConfig& cfg, BuildInfo* info = nullptr);

// Width of the low partition's completion row beyond n: the overflow bits
// needed for the worst-case column sum, computed from the arithmetic bound.
int overflow_width(int n);

struct Counterexample {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  unsigned __int128 got = 0;
  unsigned __int128 want = 0;
};

std::string hex_u128(unsigned __int128 v, int min_digits = 1);

// Bit-exact check against integer multiplication, 64 operand pairs per pass.
// Returns the first mismatch in scan order, or nothing when clean.
std::optional<Counterexample> verify_exhaustive(const Netlist& nl, int n);
std::optional<Counterexample> verify_random(const Netlist& nl, int n, std::uint64_t count,
                                            std::uint64_t seed);

// True when the gate cones feeding the two partition rows share no logic
// (primary inputs and folded constants excluded by construction).
bool partition_cones_disjoint(const Netlist& nl, const BuildInfo& info);

// Per-lane weighted sums over a reduction's snapshots: entry 0 is the initial
// matrix, then one entry per stage. A correct stage schedule keeps all
// entries equal for every operand pair.
std::vector<unsigned __int128> stage_sums(const ReduceResult& r, const Words& values,
                                          int lane, int base_weight);

}  // namespace dadda
