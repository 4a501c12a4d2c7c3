#include "dadda/cost_model.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dadda {

namespace {

const char* cost_key(Gate g) {
  switch (g) {
    case Gate::And2: return "AND2";
    case Gate::Or2: return "OR2";
    case Gate::Xor2: return "XOR2";
    case Gate::Not: return "NOT";
    case Gate::Const0:
    case Gate::Const1: return "CONST";
  }
  return "?";
}

// The model names every 2-input kind a technology mapper could substitute,
// not just the kinds the generator emits.
constexpr const char* kKeys[] = {"AND2",  "OR2",  "NAND2", "NOR2",
                                 "NOT",   "XOR2", "XNOR2", "CONST"};

}  // namespace

CostModel CostModel::unit_gate() {
  CostModel m;
  m.name_ = "unit-gate";
  for (const char* key : kKeys) {
    std::string k = key;
    int u = (k == "XOR2" || k == "XNOR2") ? 2 : (k == "CONST") ? 0 : 1;
    m.costs_[k] = {u, u};
  }
  return m;
}

CostModel CostModel::from_json_text(const std::string& text, std::string name) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("cost model: " + std::string(e.what()));
  }
  if (!j.is_object()) throw std::runtime_error("cost model: top level must be an object");

  CostModel m;
  m.name_ = std::move(name);
  for (const char* key : kKeys) {
    if (!j.contains(key))
      throw std::runtime_error(std::string("cost model: missing entry ") + key);
    const auto& e = j.at(key);
    if (!e.is_object() || !e.contains("delay") || !e.contains("area") ||
        !e.at("delay").is_number_integer() || !e.at("area").is_number_integer())
      throw std::runtime_error(std::string("cost model: entry ") + key +
                               " needs integer delay and area");
    int d = e.at("delay").get<int>();
    int a = e.at("area").get<int>();
    if (d < 0 || a < 0)
      throw std::runtime_error(std::string("cost model: entry ") + key + " must be non-negative");
    m.costs_[key] = {d, a};
  }
  if (j.size() != std::size(kKeys))
    throw std::runtime_error("cost model: unknown extra entries present");
  return m;
}

CostModel CostModel::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cost model: cannot open " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str(), file.string());
}

const GateCost& CostModel::of(Gate g) const {
  auto it = costs_.find(cost_key(g));
  if (it == costs_.end()) throw std::logic_error("cost model: incomplete table");
  return it->second;
}

}  // namespace dadda
