#pragma once

#include <vector>

#include "dadda/netlist.hpp"
#include "dadda/ppgen.hpp"

namespace dadda {

// Stage height targets for a matrix of height h: the d_j sequence
// d_1 = 2, d_{j+1} = floor(3 d_j / 2), taken descending and strictly below h.
// h <= 2 needs no stages.
std::vector<int> dadda_targets(int h);

struct CounterPlacement {
  int weight;       // column the counter consumed from
  bool full_adder;  // (3,2) when true, (2,2) otherwise
};

struct ReduceStage {
  int target;                               // height bound met by this stage
  Columns columns;                          // snapshot after the stage
  std::vector<CounterPlacement> placements; // counters in creation order
};

struct ReduceResult {
  Columns initial;                 // columns as handed in
  Columns columns;                 // final two-row form
  std::vector<ReduceStage> stages;
  int fa_count = 0;
  int ha_count = 0;
};

// Dadda column compression to height two. Each stage places the exact
// minimum counter set per column: with pool height p and target d,
// need = p - d, so floor(need/2) full adders and (need mod 2) half adders.
// The pool at column w is the stage-start contents followed by the carries
// produced at column w-1 in this same stage, consumed oldest-first; sums
// land after the survivors, carries feed column w+1 within the stage.
ReduceResult reduce_to_two(Netlist& nl, Columns cols);

}  // namespace dadda
