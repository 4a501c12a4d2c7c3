#include "dadda/reduce.hpp"

#include <algorithm>
#include <stdexcept>

namespace dadda {

std::vector<int> dadda_targets(int h) {
  std::vector<int> seq{2};
  while (seq.back() < h) seq.push_back(seq.back() * 3 / 2);
  std::vector<int> out;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it)
    if (*it < h) out.push_back(*it);
  return out;
}

ReduceResult reduce_to_two(Netlist& nl, Columns cols) {
  ReduceResult r;
  r.initial = cols;
  int maxh = 0;
  for (const auto& c : cols) maxh = std::max(maxh, static_cast<int>(c.size()));

  for (int d : dadda_targets(maxh)) {
    int width = static_cast<int>(cols.size());
    Columns carry(width + 2), next(width + 2);
    std::vector<CounterPlacement> placements;
    for (int w = 0; w <= width; ++w) {
      std::vector<NetId> pool = w < width ? cols[w] : std::vector<NetId>{};
      pool.insert(pool.end(), carry[w].begin(), carry[w].end());
      int need = std::max(0, static_cast<int>(pool.size()) - d);
      int nfa = need / 2;
      int nha = need % 2;
      std::size_t idx = 0;
      std::vector<NetId> sums;
      for (int i = 0; i < nfa; ++i) {
        auto sc = nl.full_adder(pool[idx], pool[idx + 1], pool[idx + 2]);
        idx += 3;
        sums.push_back(sc.sum);
        carry[w + 1].push_back(sc.carry);
        placements.push_back({w, true});
        ++r.fa_count;
      }
      for (int i = 0; i < nha; ++i) {
        auto sc = nl.half_adder(pool[idx], pool[idx + 1]);
        idx += 2;
        sums.push_back(sc.sum);
        carry[w + 1].push_back(sc.carry);
        placements.push_back({w, false});
        ++r.ha_count;
      }
      next[w].assign(pool.begin() + static_cast<std::ptrdiff_t>(idx), pool.end());
      next[w].insert(next[w].end(), sums.begin(), sums.end());
    }
    if (!carry[width + 1].empty())
      next[width + 1].insert(next[width + 1].end(), carry[width + 1].begin(),
                             carry[width + 1].end());
    while (!next.empty() && next.back().empty()) next.pop_back();
    for (const auto& c : next)
      if (static_cast<int>(c.size()) > d)
        throw std::logic_error("reduction stage exceeded its height target");
    cols = next;
    r.stages.push_back({d, cols, std::move(placements)});
  }
  r.columns = cols;
  return r;
}

}  // namespace dadda
