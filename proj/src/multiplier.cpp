#include "dadda/multiplier.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "dadda/ppgen.hpp"

namespace dadda {

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::RegularCla: return "regular-cla";
    case Variant::PartitionedCla: return "partitioned-cla";
    case Variant::PartitionedHybrid: return "partitioned-hybrid";
  }
  return "?";
}

std::optional<Variant> variant_from_name(std::string_view name) {
  if (name == "regular-cla") return Variant::RegularCla;
  if (name == "partitioned-cla") return Variant::PartitionedCla;
  if (name == "partitioned-hybrid") return Variant::PartitionedHybrid;
  return std::nullopt;
}

MultiplierConfig MultiplierConfig::make(int n, Variant v) {
  MultiplierConfig cfg;
  cfg.n = n;
  cfg.variant = v;
  return cfg;
}

void MultiplierConfig::set_inpart(std::string_view knob) {
  if (knob == "cla") {
    inpart_low = CpaKind::Cla;
    inpart_high = CpaKind::ClaLead1;
  } else if (knob == "rca") {
    inpart_low = CpaKind::Rca;
    inpart_high = CpaKind::Rca;
  } else {
    throw std::invalid_argument("inpart knob must be cla or rca");
  }
}

std::string MultiplierConfig::inpart_knob() const {
  return inpart_low == CpaKind::Rca ? "rca" : "cla";
}

int overflow_width(int n) {
  // Worst case low-partition value: sum over w < n of (w+1) 2^w = (n-1) 2^n + 1.
  unsigned __int128 max = 0;
  for (int w = 0; w < n; ++w)
    max += static_cast<unsigned __int128>(w + 1) << w;
  int bits = 0;
  while (max >> bits) ++bits;
  return bits - n;
}

namespace {

const char* prefix_name(PrefixShape s) { return s == PrefixShape::Chain ? "chain" : "tree"; }
const char* select_name(SelectStyle s) { return s == SelectStyle::Fused ? "fused" : "mux"; }

Netlist build_regular(const MultiplierConfig& cfg, BuildInfo* info) {
  int n = cfg.n;
  Netlist nl;
  auto a = nl.add_input("a", n);
  auto b = nl.add_input("b", n);
  Columns cols = partial_product_columns(nl, a, b);
  ReduceResult red = reduce_to_two(nl, std::move(cols));
  std::vector<NetId> p = completion_adder(nl, red.columns, CpaKind::Cla);
  if (static_cast<int>(p.size()) > 2 * n) p.resize(2 * n);
  if (static_cast<int>(p.size()) != 2 * n)
    throw std::logic_error("regular multiplier produced wrong product width");
  nl.set_output("p", p);
  nl.meta().n = n;
  nl.meta().variant = variant_name(cfg.variant);
  if (info) info->full = std::move(red);
  return nl;
}

Netlist build_partitioned(const MultiplierConfig& cfg, BuildInfo* info) {
  int n = cfg.n;
  Netlist nl;
  auto a = nl.add_input("a", n);
  auto b = nl.add_input("b", n);
  Columns cols = partial_product_columns(nl, a, b);
  Columns low(cols.begin(), cols.begin() + n);
  Columns high(cols.begin() + n, cols.end());

  ReduceResult r0 = reduce_to_two(nl, std::move(low));
  ReduceResult r1 = reduce_to_two(nl, std::move(high));
  std::vector<NetId> s0 = completion_adder(nl, r0.columns, cfg.inpart_low);
  std::vector<NetId> s1 = completion_adder(nl, r1.columns, cfg.inpart_high);
  int k = static_cast<int>(s0.size()) - n;
  if (k < 2 || static_cast<int>(s1.size()) != n)
    throw std::logic_error("partition rows came out with unexpected widths");

  std::vector<NetId> ovf(s0.begin() + n, s0.end());
  std::vector<NetId> upper;
  std::vector<NetId> sels;
  if (cfg.variant == Variant::PartitionedHybrid) {
    FinalAdderPlan plan = cfg.plan ? *cfg.plan : default_final_plan(n, k);
    validate_final_plan(plan, n, k);
    upper = build_hybrid_adder(nl, ovf, s1, plan, cfg.bec, cfg.mbec, &sels);
    for (const auto& blk : plan.blocks) nl.meta().plan.emplace_back(blk.width, blk.with_carry);
    nl.meta().bec = prefix_name(cfg.bec);
    nl.meta().mbec = select_name(cfg.mbec);
  } else {
    std::vector<NetId> y = ovf;
    while (static_cast<int>(y.size()) < n) y.push_back(nl.const0());
    upper = build_cla(nl, s1, y, std::nullopt, /*want_cout=*/false).sums;
  }

  std::vector<NetId> p(s0.begin(), s0.begin() + n);
  p.insert(p.end(), upper.begin(), upper.end());
  if (static_cast<int>(p.size()) != 2 * n)
    throw std::logic_error("partitioned multiplier produced wrong product width");
  nl.set_output("p", p);
  nl.meta().n = n;
  nl.meta().variant = variant_name(cfg.variant);
  nl.meta().k = k;
  nl.meta().inpart = cfg.inpart_knob();
  if (info) {
    info->k = k;
    info->part0 = std::move(r0);
    info->part1 = std::move(r1);
    info->s0 = std::move(s0);
    info->s1 = std::move(s1);
    info->sels = std::move(sels);
  }
  return nl;
}

}  // namespace

Netlist build_multiplier(const MultiplierConfig& cfg, BuildInfo* info) {
  if (cfg.n < 1 || cfg.n > 64)
    throw std::invalid_argument("operand width must be in 1..64");
  if (cfg.variant == Variant::RegularCla) return build_regular(cfg, info);
  if (cfg.n < 4)
    throw std::invalid_argument("partitioned variants need n >= 4");
  return build_partitioned(cfg, info);
}

std::string hex_u128(unsigned __int128 v, int min_digits) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  while (v || static_cast<int>(s.size()) < min_digits) {
    s.push_back(digits[static_cast<unsigned>(v & 0xf)]);
    v >>= 4;
  }
  std::reverse(s.begin(), s.end());
  return "0x" + s;
}

namespace {

std::optional<Counterexample> check_lanes(const Netlist& nl, int n,
                                          const std::vector<std::uint64_t>& avals,
                                          const std::vector<std::uint64_t>& bvals) {
  int lanes = static_cast<int>(avals.size());
  std::uint64_t mask = lanes == 64 ? ~0ull : ((1ull << lanes) - 1);
  std::vector<Words> in(2);
  in[0].assign(n, 0);
  in[1].assign(n, 0);
  for (int lane = 0; lane < lanes; ++lane) {
    for (int i = 0; i < n; ++i) {
      in[0][i] |= ((avals[lane] >> i) & 1) << lane;
      in[1][i] |= ((bvals[lane] >> i) & 1) << lane;
    }
  }
  Words val = evaluate(nl, in, mask);
  const std::vector<NetId>& pbits = nl.outputs().at(0).bits;
  for (int lane = 0; lane < lanes; ++lane) {
    unsigned __int128 got = 0;
    for (std::size_t i = 0; i < pbits.size(); ++i)
      got |= static_cast<unsigned __int128>((val[pbits[i]] >> lane) & 1) << i;
    unsigned __int128 want =
        static_cast<unsigned __int128>(avals[lane]) * static_cast<unsigned __int128>(bvals[lane]);
    if (got != want) return Counterexample{avals[lane], bvals[lane], got, want};
  }
  return std::nullopt;
}

void require_mul_ports(const Netlist& nl, int n) {
  if (nl.inputs().size() != 2 || nl.outputs().size() != 1 ||
      static_cast<int>(nl.inputs()[0].bits.size()) != n ||
      static_cast<int>(nl.inputs()[1].bits.size()) != n ||
      static_cast<int>(nl.outputs()[0].bits.size()) != 2 * n)
    throw std::invalid_argument("netlist does not have n x n multiplier ports");
}

}  // namespace

std::optional<Counterexample> verify_exhaustive(const Netlist& nl, int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("exhaustive verification supports n <= 16");
  require_mul_ports(nl, n);
  std::uint64_t span = 1ull << n;
  for (std::uint64_t a = 0; a < span; ++a) {
    for (std::uint64_t b0 = 0; b0 < span; b0 += 64) {
      int lanes = static_cast<int>(std::min<std::uint64_t>(64, span - b0));
      std::vector<std::uint64_t> avals(lanes, a), bvals(lanes);
      for (int lane = 0; lane < lanes; ++lane) bvals[lane] = b0 + lane;
      if (auto bad = check_lanes(nl, n, avals, bvals)) return bad;
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> verify_random(const Netlist& nl, int n, std::uint64_t count,
                                            std::uint64_t seed) {
  if (n < 1 || n > 64) throw std::invalid_argument("operand width must be in 1..64");
  require_mul_ports(nl, n);
  std::mt19937_64 rng(seed);
  std::uint64_t mask = n == 64 ? ~0ull : ((1ull << n) - 1);
  std::uint64_t done = 0;
  while (done < count) {
    int lanes = static_cast<int>(std::min<std::uint64_t>(64, count - done));
    std::vector<std::uint64_t> avals(lanes), bvals(lanes);
    for (int lane = 0; lane < lanes; ++lane) {
      avals[lane] = rng() & mask;
      bvals[lane] = rng() & mask;
    }
    if (auto bad = check_lanes(nl, n, avals, bvals)) return bad;
    done += static_cast<std::uint64_t>(lanes);
  }
  return std::nullopt;
}

bool partition_cones_disjoint(const Netlist& nl, const BuildInfo& info) {
  if (info.s0.empty() || info.s1.empty())
    throw std::invalid_argument("partition cone check needs partitioned build info");
  std::vector<bool> cone0 = fanin_cone(nl, info.s0);
  std::vector<bool> cone1 = fanin_cone(nl, info.s1);
  for (std::size_t i = 0; i < cone0.size(); ++i)
    if (cone0[i] && cone1[i]) return false;
  return true;
}

std::vector<unsigned __int128> stage_sums(const ReduceResult& r, const Words& values,
                                          int lane, int base_weight) {
  auto sum_columns = [&](const Columns& cols) {
    unsigned __int128 total = 0;
    for (std::size_t w = 0; w < cols.size(); ++w)
      for (NetId id : cols[w])
        total += static_cast<unsigned __int128>((values[id] >> lane) & 1)
                 << (base_weight + static_cast<int>(w));
    return total;
  };
  std::vector<unsigned __int128> sums{sum_columns(r.initial)};
  for (const ReduceStage& st : r.stages) sums.push_back(sum_columns(st.columns));
  return sums;
}

}  // namespace dadda
