#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dadda/analysis.hpp"
#include "dadda/cost_model.hpp"
#include "dadda/netlist.hpp"

namespace dadda {

struct DesignMetrics {
  std::string id;
  int n = 0;
  std::string variant;
  GateCounts counts;
  std::uint64_t area_units = 0;
  int depth_units = 0;
  std::optional<std::uint64_t> toggles;  // absent when no activity vectors ran
  CostModel model = CostModel::unit_gate();
};

// Static metrics under the given model; toggle_pairs > 0 additionally runs
// the seeded switching proxy. toggle_pairs == 0 leaves toggles absent.
DesignMetrics analyze(const Netlist& nl, const CostModel& model, std::string id,
                      int toggle_pairs = 0, std::uint64_t toggle_seed = 0);

// Relative improvements of candidate over baseline, positive = candidate
// smaller: delta = (baseline - candidate) / candidate * 100. Refuses metrics
// taken under different cost models.
struct MetricsDelta {
  double area_pct = 0;
  double depth_pct = 0;
  std::optional<double> toggles_pct;  // absent unless both sides measured
};
MetricsDelta compare(const DesignMetrics& baseline, const DesignMetrics& candidate);

// CSV with the fixed column set:
// n,variant,and_count,or_count,xor_count,not_count,area_units,depth_units,toggles
std::string metrics_csv(const std::vector<DesignMetrics>& rows);

struct ComparisonRow {
  int n = 0;
  std::string candidate;
  MetricsDelta delta;
};
// Markdown table of baseline-relative deltas, one row per candidate design.
std::string comparison_markdown(const std::string& baseline_label,
                                const std::vector<ComparisonRow>& rows);

std::string format_pct(double v);  // "%+.2f"

}  // namespace dadda
