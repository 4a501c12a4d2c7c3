#include "dadda/adders.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

namespace dadda {

std::vector<int> cla_group_widths(int w, int lead) {
  std::vector<int> gs;
  int base = 0;
  if (lead > 0 && w > lead) {
    gs.push_back(lead);
    base = lead;
  }
  while (base < w) {
    int m = std::min(4, w - base);
    gs.push_back(m);
    base += m;
  }
  return gs;
}

AdderOut build_cla(Netlist& nl, const std::vector<NetId>& x, const std::vector<NetId>& y,
                   std::optional<NetId> cin, bool want_cout, int lead) {
  int w = static_cast<int>(x.size());
  if (w == 0 || y.size() != x.size())
    throw std::invalid_argument("cla needs equal non-empty operand widths");
  std::vector<NetId> sums(x.size());
  std::optional<NetId> c = cin;
  int base = 0;
  for (int m : cla_group_widths(w, lead)) {
    bool last = base + m >= w;
    std::vector<NetId> p(m), gg(m);
    for (int i = 0; i < m; ++i) p[i] = nl.g(Gate::Xor2, x[base + i], y[base + i]);
    for (int i = 0; i < m; ++i) gg[i] = nl.g(Gate::And2, x[base + i], y[base + i]);

    std::vector<std::optional<NetId>> carries{c};
    for (int j = 1; j <= m; ++j) {
      if (j == m && last && !want_cout) {
        carries.push_back(std::nullopt);
        continue;
      }
      std::vector<NetId> terms{gg[j - 1]};
      std::optional<NetId> prod;
      for (int t = j - 2; t >= 0; --t) {
        prod = !prod ? p[j - 1] : nl.g(Gate::And2, *prod, p[t + 1]);
        terms.push_back(nl.g(Gate::And2, *prod, gg[t]));
      }
      if (c) {
        NetId full;
        if (j == 1) {
          full = p[0];
        } else {
          if (!prod) prod = p[j - 1];
          full = nl.g(Gate::And2, *prod, p[0]);
        }
        terms.push_back(nl.g(Gate::And2, full, *c));
      }
      NetId acc = terms[0];
      for (std::size_t t = 1; t < terms.size(); ++t) acc = nl.g(Gate::Or2, acc, terms[t]);
      carries.push_back(acc);
    }
    for (int i = 0; i < m; ++i)
      sums[base + i] = carries[i] ? nl.g(Gate::Xor2, p[i], *carries[i]) : p[i];
    c = carries[m];
    base += m;
  }
  return {std::move(sums), c};
}

AdderOut build_rca(Netlist& nl, const std::vector<NetId>& x, const std::vector<NetId>& y,
                   std::optional<NetId> cin) {
  if (x.empty() || y.size() != x.size())
    throw std::invalid_argument("rca needs equal non-empty operand widths");
  std::vector<NetId> sums;
  std::optional<NetId> c = cin;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Netlist::SumCarry sc = c ? nl.full_adder(x[i], y[i], *c) : nl.half_adder(x[i], y[i]);
    sums.push_back(sc.sum);
    c = sc.carry;
  }
  return {std::move(sums), c};
}

namespace {

std::vector<NetId> cpa_ripple(Netlist& nl, const Columns& cols) {
  std::vector<NetId> out;
  std::optional<NetId> carry;
  for (const auto& col : cols) {
    std::vector<NetId> nets = col;
    if (carry) nets.push_back(*carry);
    switch (nets.size()) {
      case 0:
        out.push_back(nl.const0());
        carry.reset();
        break;
      case 1:
        out.push_back(nets[0]);
        carry.reset();
        break;
      case 2: {
        auto sc = nl.half_adder(nets[0], nets[1]);
        out.push_back(sc.sum);
        carry = sc.carry;
        break;
      }
      case 3: {
        auto sc = nl.full_adder(nets[0], nets[1], nets[2]);
        out.push_back(sc.sum);
        carry = sc.carry;
        break;
      }
      default:
        throw std::invalid_argument("completion adder requires columns reduced to height 2");
    }
  }
  if (carry) out.push_back(*carry);
  return out;
}

std::vector<NetId> cpa_lookahead(Netlist& nl, const Columns& cols, int lead) {
  std::vector<NetId> x, y;
  for (const auto& col : cols) {
    if (col.size() > 2)
      throw std::invalid_argument("completion adder requires columns reduced to height 2");
    x.push_back(!col.empty() ? col[0] : nl.const0());
    y.push_back(col.size() > 1 ? col[1] : nl.const0());
  }
  AdderOut r = build_cla(nl, x, y, std::nullopt, /*want_cout=*/true, lead);
  std::vector<NetId> out = std::move(r.sums);
  if (r.cout) out.push_back(*r.cout);
  return out;
}

}  // namespace

std::vector<NetId> completion_adder(Netlist& nl, const Columns& cols, CpaKind kind) {
  switch (kind) {
    case CpaKind::Rca: return cpa_ripple(nl, cols);
    case CpaKind::Cla: return cpa_lookahead(nl, cols, 0);
    case CpaKind::ClaLead1: return cpa_lookahead(nl, cols, 1);
  }
  throw std::invalid_argument("unknown completion adder kind");
}

NetId and_reduce_by_depth(Netlist& nl, const std::vector<NetId>& nets) {
  if (nets.empty()) throw std::invalid_argument("and_reduce_by_depth needs at least one net");
  using Item = std::pair<int, NetId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  for (NetId x : nets) heap.push({nl.build_depth(x), x});
  while (heap.size() > 1) {
    NetId u = heap.top().second;
    heap.pop();
    NetId v = heap.top().second;
    heap.pop();
    NetId r = nl.g(Gate::And2, u, v);
    heap.push({nl.build_depth(r), r});
  }
  return heap.top().second;
}

BecOut build_bec(Netlist& nl, const std::vector<NetId>& bits, bool with_carry,
                 PrefixShape shape) {
  if (bits.empty()) throw std::invalid_argument("bec needs at least one bit");
  std::size_t m = bits.size();
  std::vector<NetId> xs{nl.g(Gate::Not, bits[0])};
  std::optional<NetId> cy;
  if (shape == PrefixShape::Chain) {
    NetId t = bits[0];
    for (std::size_t i = 1; i < m; ++i) {
      xs.push_back(nl.g(Gate::Xor2, bits[i], t));
      if (i < m - 1 || with_carry) t = nl.g(Gate::And2, t, bits[i]);
    }
    if (with_carry) cy = t;
  } else {
    for (std::size_t i = 1; i < m; ++i) {
      std::vector<NetId> prefix(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(i));
      xs.push_back(nl.g(Gate::Xor2, bits[i], and_reduce_by_depth(nl, prefix)));
    }
    if (with_carry) cy = and_reduce_by_depth(nl, bits);
  }
  return {std::move(xs), cy};
}

FinalAdderPlan default_final_plan(int n, int k) {
  int rem = n - k;
  FinalAdderPlan plan;
  int size = 4;
  while (rem >= 2 * size) {
    plan.blocks.push_back({size, true});
    rem -= size;
    size *= 2;
  }
  plan.blocks.push_back({rem, false});
  return plan;
}

void validate_final_plan(const FinalAdderPlan& plan, int n, int k) {
  if (plan.blocks.empty()) throw std::invalid_argument("plan: needs at least one block");
  int sum = 0;
  for (std::size_t i = 0; i < plan.blocks.size(); ++i) {
    const auto& b = plan.blocks[i];
    if (b.width < 1) throw std::invalid_argument("plan: block widths must be positive");
    sum += b.width;
    bool terminal = i + 1 == plan.blocks.size();
    if (terminal) {
      if (b.with_carry)
        throw std::invalid_argument("plan: terminal block must not propagate a carry");
    } else {
      if (!b.with_carry)
        throw std::invalid_argument("plan: non-terminal blocks must propagate the select");
      if (b.width < 4 || (b.width & (b.width - 1)) != 0)
        throw std::invalid_argument("plan: non-terminal block widths must be powers of two >= 4");
    }
  }
  if (sum != n - k)
    throw std::invalid_argument("plan: block widths must sum to " + std::to_string(n - k));
}

std::vector<NetId> build_hybrid_adder(Netlist& nl, const std::vector<NetId>& ovf,
                                      const std::vector<NetId>& p1,
                                      const FinalAdderPlan& plan, PrefixShape shape,
                                      SelectStyle style, std::vector<NetId>* sels_out) {
  std::size_t k = ovf.size();
  if (k == 0 || p1.size() < k)
    throw std::invalid_argument("hybrid adder needs 0 < |ovf| <= |p1|");

  std::vector<NetId> low(p1.begin(), p1.begin() + static_cast<std::ptrdiff_t>(k));
  AdderOut r = build_cla(nl, low, ovf, std::nullopt, /*want_cout=*/true);
  std::vector<NetId> out = std::move(r.sums);
  NetId sel = *r.cout;

  std::size_t pos = k;
  for (const auto& block : plan.blocks) {
    std::size_t m = static_cast<std::size_t>(block.width);
    if (pos + m > p1.size()) throw std::invalid_argument("hybrid adder plan exceeds input width");
    if (sels_out) sels_out->push_back(sel);
    std::vector<NetId> bits(p1.begin() + static_cast<std::ptrdiff_t>(pos),
                            p1.begin() + static_cast<std::ptrdiff_t>(pos + m));
    pos += m;
    if (style == SelectStyle::Fused) {
      // mux(sel, b_i, b_i ^ pre_i) == b_i ^ (sel & pre_i), with pre_0 == 1.
      std::vector<NetId> pres(m, 0);
      std::optional<NetId> full;
      if (shape == PrefixShape::Tree) {
        for (std::size_t i = 1; i < m; ++i) {
          std::vector<NetId> prefix(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(i));
          pres[i] = and_reduce_by_depth(nl, prefix);
        }
        if (block.with_carry) full = and_reduce_by_depth(nl, bits);
      } else {
        NetId t = bits[0];
        for (std::size_t i = 1; i < m; ++i) {
          pres[i] = t;
          if (i < m - 1 || block.with_carry) t = nl.g(Gate::And2, t, bits[i]);
        }
        full = t;
      }
      out.push_back(nl.g(Gate::Xor2, bits[0], sel));
      for (std::size_t i = 1; i < m; ++i)
        out.push_back(nl.g(Gate::Xor2, bits[i], nl.g(Gate::And2, sel, pres[i])));
      if (block.with_carry) sel = nl.g(Gate::And2, sel, *full);
    } else {
      NetId nsel = nl.g(Gate::Not, sel);
      BecOut bec = build_bec(nl, bits, block.with_carry, shape);
      for (std::size_t i = 0; i < m; ++i)
        out.push_back(nl.mux(sel, bits[i], bec.xs[i], nsel));
      if (block.with_carry) sel = nl.mux(sel, nl.const0(), *bec.carry, nsel);
    }
  }
  if (pos != p1.size())
    throw std::invalid_argument("hybrid adder plan does not cover the input width");
  return out;
}

}  // namespace dadda
