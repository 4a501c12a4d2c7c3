#include "dadda/analysis.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace dadda {

std::vector<int> net_depths(const Netlist& nl, const CostModel& model) {
  std::vector<int> d(nl.net_count(), 0);
  for (const Cell& c : nl.cells()) {
    int arr = 0;
    int arity = gate_arity(c.op);
    if (arity >= 1) arr = d[c.in0];
    if (arity == 2) arr = std::max(arr, d[c.in1]);
    d[c.out] = arr + model.of(c.op).delay;
  }
  return d;
}

int critical_depth(const Netlist& nl, const CostModel& model) {
  std::vector<int> d = net_depths(nl, model);
  int best = 0;
  for (const Port& p : nl.outputs())
    for (NetId b : p.bits) best = std::max(best, d[b]);
  return best;
}

std::uint64_t total_area(const Netlist& nl, const CostModel& model) {
  std::uint64_t a = 0;
  for (const Cell& c : nl.cells()) a += static_cast<std::uint64_t>(model.of(c.op).area);
  return a;
}

GateCounts count_gates(const Netlist& nl) {
  GateCounts g;
  for (const Cell& c : nl.cells()) {
    switch (c.op) {
      case Gate::And2: ++g.and2; break;
      case Gate::Or2: ++g.or2; break;
      case Gate::Xor2: ++g.xor2; break;
      case Gate::Not: ++g.not1; break;
      case Gate::Const0:
      case Gate::Const1: ++g.consts; break;
    }
  }
  return g;
}

Words evaluate(const Netlist& nl, const std::vector<Words>& inputs, std::uint64_t lane_mask) {
  const auto& ports = nl.inputs();
  if (inputs.size() != ports.size())
    throw std::invalid_argument("evaluate: input port count mismatch");
  Words val(nl.net_count(), 0);
  for (std::size_t i = 0; i < ports.size(); ++i) {
    if (inputs[i].size() != ports[i].bits.size())
      throw std::invalid_argument("evaluate: input width mismatch for " + ports[i].name);
    for (std::size_t j = 0; j < inputs[i].size(); ++j)
      val[ports[i].bits[j]] = inputs[i][j] & lane_mask;
  }
  for (const Cell& c : nl.cells()) {
    switch (c.op) {
      case Gate::And2: val[c.out] = val[c.in0] & val[c.in1]; break;
      case Gate::Or2: val[c.out] = val[c.in0] | val[c.in1]; break;
      case Gate::Xor2: val[c.out] = val[c.in0] ^ val[c.in1]; break;
      case Gate::Not: val[c.out] = lane_mask ^ val[c.in0]; break;
      case Gate::Const0: val[c.out] = 0; break;
      case Gate::Const1: val[c.out] = lane_mask; break;
    }
  }
  return val;
}

std::uint64_t toggle_count(const Netlist& nl, int pairs, std::uint64_t seed) {
  if (pairs <= 0) return 0;
  const auto& ports = nl.inputs();
  std::mt19937_64 rng(seed);
  std::uint64_t total = 0;
  for (int base = 0; base < pairs; base += 64) {
    int lanes = std::min(64, pairs - base);
    std::uint64_t mask = lanes == 64 ? ~0ull : ((1ull << lanes) - 1);
    std::vector<Words> first(ports.size()), second(ports.size());
    for (std::size_t i = 0; i < ports.size(); ++i) {
      first[i].assign(ports[i].bits.size(), 0);
      second[i].assign(ports[i].bits.size(), 0);
    }
    for (int lane = 0; lane < lanes; ++lane) {
      for (int draw = 0; draw < 2; ++draw) {
        auto& dst = draw == 0 ? first : second;
        for (std::size_t i = 0; i < ports.size(); ++i) {
          std::size_t w = ports[i].bits.size();
          std::uint64_t opmask = w >= 64 ? ~0ull : ((1ull << w) - 1);
          std::uint64_t v = rng() & opmask;
          for (std::size_t j = 0; j < w; ++j)
            dst[i][j] |= ((v >> j) & 1) << lane;
        }
      }
    }
    Words v1 = evaluate(nl, first, mask);
    Words v2 = evaluate(nl, second, mask);
    for (std::size_t i = 0; i < v1.size(); ++i)
      total += static_cast<std::uint64_t>(std::popcount(v1[i] ^ v2[i]));
  }
  return total;
}

std::vector<bool> fanin_cone(const Netlist& nl, const std::vector<NetId>& roots) {
  std::vector<std::int64_t> cell_of(nl.net_count(), -1);
  for (std::size_t i = 0; i < nl.cells().size(); ++i)
    cell_of[nl.cells()[i].out] = static_cast<std::int64_t>(i);
  std::vector<bool> marked(nl.cells().size(), false);
  std::vector<NetId> stack(roots);
  while (!stack.empty()) {
    NetId id = stack.back();
    stack.pop_back();
    std::int64_t cell = cell_of[id];
    if (cell < 0 || marked[cell]) continue;  // primary input or already seen
    const Cell& c = nl.cells()[cell];
    if (is_const(c.op)) continue;
    marked[cell] = true;
    int arity = gate_arity(c.op);
    if (arity >= 1) stack.push_back(c.in0);
    if (arity == 2) stack.push_back(c.in1);
  }
  return marked;
}

}  // namespace dadda
