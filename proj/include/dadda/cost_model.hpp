#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "dadda/netlist.hpp"

namespace dadda {

struct GateCost {
  int delay = 0;
  int area = 0;
  bool operator==(const GateCost&) const = default;
};

// Per-kind delay/area table. Models are value types; two models are the same
// model iff their cost tables are equal (names are labels only), which is the
// rule comparisons use to refuse mixed-model deltas.
class CostModel {
 public:
  static CostModel unit_gate();
  static CostModel from_json_text(const std::string& text, std::string name);
  static CostModel load(const std::filesystem::path& file);

  const GateCost& of(Gate g) const;
  const std::map<std::string, GateCost>& costs() const { return costs_; }
  const std::string& name() const { return name_; }

  bool operator==(const CostModel& o) const { return costs_ == o.costs_; }
  bool operator!=(const CostModel& o) const { return !(*this == o); }

 private:
  std::map<std::string, GateCost> costs_;
  std::string name_;
};

}  // namespace dadda
