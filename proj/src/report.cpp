#include "dadda/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace dadda {

DesignMetrics analyze(const Netlist& nl, const CostModel& model, std::string id,
                      int toggle_pairs, std::uint64_t toggle_seed) {
  DesignMetrics m;
  m.id = std::move(id);
  m.n = nl.meta().n > 0 ? nl.meta().n
                        : (nl.inputs().empty() ? 0 : static_cast<int>(nl.inputs()[0].bits.size()));
  m.variant = nl.meta().variant;
  m.counts = count_gates(nl);
  m.area_units = total_area(nl, model);
  m.depth_units = critical_depth(nl, model);
  if (toggle_pairs > 0) m.toggles = toggle_count(nl, toggle_pairs, toggle_seed);
  m.model = model;
  return m;
}

MetricsDelta compare(const DesignMetrics& baseline, const DesignMetrics& candidate) {
  if (baseline.model != candidate.model)
    throw std::invalid_argument("refusing to compare metrics taken under different cost models");
  auto pct = [](double base, double cand) { return (base - cand) / cand * 100.0; };
  MetricsDelta d;
  d.area_pct = pct(static_cast<double>(baseline.area_units),
                   static_cast<double>(candidate.area_units));
  d.depth_pct = pct(baseline.depth_units, candidate.depth_units);
  if (baseline.toggles && candidate.toggles)
    d.toggles_pct = pct(static_cast<double>(*baseline.toggles),
                        static_cast<double>(*candidate.toggles));
  return d;
}

std::string format_pct(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%+.2f", v);
  return buf;
}

std::string metrics_csv(const std::vector<DesignMetrics>& rows) {
  std::ostringstream out;
  out << "n,variant,and_count,or_count,xor_count,not_count,area_units,depth_units,toggles\n";
  for (const DesignMetrics& m : rows) {
    out << m.n << ',' << (m.variant.empty() ? "custom" : m.variant) << ',' << m.counts.and2
        << ',' << m.counts.or2 << ',' << m.counts.xor2 << ',' << m.counts.not1 << ','
        << m.area_units << ',' << m.depth_units << ',';
    if (m.toggles) out << *m.toggles;
    out << '\n';
  }
  return out.str();
}

std::string comparison_markdown(const std::string& baseline_label,
                                const std::vector<ComparisonRow>& rows) {
  std::ostringstream out;
  out << "deltas vs " << baseline_label << ", positive = candidate smaller:"
      << " (baseline - candidate) / candidate * 100\n\n";
  out << "| n | candidate | area % | depth % | toggles % |\n";
  out << "|---|-----------|--------|---------|-----------|\n";
  for (const ComparisonRow& r : rows) {
    out << "| " << r.n << " | " << r.candidate << " | " << format_pct(r.delta.area_pct)
        << " | " << format_pct(r.delta.depth_pct) << " | "
        << (r.delta.toggles_pct ? format_pct(*r.delta.toggles_pct) : std::string("-"))
        << " |\n";
  }
  return out.str();
}

}  // namespace dadda
