#include "dadda/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dadda {

using json = nlohmann::ordered_json;

namespace {

json meta_to_json(const NetlistMeta& m) {
  json j = json::object();
  j["n"] = m.n;
  j["variant"] = m.variant;
  if (m.k >= 0) j["k"] = m.k;
  if (!m.inpart.empty()) j["inpart"] = m.inpart;
  if (!m.bec.empty()) j["bec"] = m.bec;
  if (!m.mbec.empty()) j["mbec"] = m.mbec;
  if (!m.plan.empty()) {
    json blocks = json::array();
    for (const auto& [width, with_carry] : m.plan)
      blocks.push_back({{"width", width}, {"with_carry", with_carry}});
    j["plan"] = std::move(blocks);
  }
  return j;
}

NetlistMeta meta_from_json(const json& j) {
  NetlistMeta m;
  if (j.contains("n")) m.n = j.at("n").get<int>();
  if (j.contains("variant")) m.variant = j.at("variant").get<std::string>();
  if (j.contains("k")) m.k = j.at("k").get<int>();
  if (j.contains("inpart")) m.inpart = j.at("inpart").get<std::string>();
  if (j.contains("bec")) m.bec = j.at("bec").get<std::string>();
  if (j.contains("mbec")) m.mbec = j.at("mbec").get<std::string>();
  if (j.contains("plan"))
    for (const auto& b : j.at("plan"))
      m.plan.emplace_back(b.at("width").get<int>(), b.at("with_carry").get<bool>());
  return m;
}

json ports_to_json(const std::vector<Port>& ports) {
  json arr = json::array();
  for (const Port& p : ports) {
    json bits = json::array();
    for (NetId b : p.bits) bits.push_back(b);
    arr.push_back({{"name", p.name}, {"bits", std::move(bits)}});
  }
  return arr;
}

std::vector<Port> ports_from_json(const json& arr, const char* what) {
  if (!arr.is_array()) throw std::runtime_error(std::string("netlist: ") + what + " must be an array");
  std::vector<Port> ports;
  for (const auto& p : arr) {
    Port port;
    port.name = p.at("name").get<std::string>();
    for (const auto& b : p.at("bits")) port.bits.push_back(b.get<NetId>());
    ports.push_back(std::move(port));
  }
  return ports;
}

}  // namespace

std::string netlist_to_json(const Netlist& nl) {
  json j = json::object();
  j["version"] = kNetlistFormatVersion;
  j["generator"] = std::string("daddagen ") + kToolVersion;
  if (!nl.meta().empty()) j["meta"] = meta_to_json(nl.meta());
  j["inputs"] = ports_to_json(nl.inputs());
  json gates = json::array();
  for (const Cell& c : nl.cells()) {
    json in = json::array();
    int arity = gate_arity(c.op);
    if (arity >= 1) in.push_back(c.in0);
    if (arity == 2) in.push_back(c.in1);
    gates.push_back({{"op", gate_name(c.op)}, {"in", std::move(in)}, {"out", c.out}});
  }
  j["gates"] = std::move(gates);
  j["outputs"] = ports_to_json(nl.outputs());
  return j.dump();
}

Netlist netlist_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("netlist: " + std::string(e.what()));
  }
  if (!j.is_object()) throw std::runtime_error("netlist: top level must be an object");
  if (!j.contains("version") || !j.at("version").is_number_integer() ||
      j.at("version").get<int>() != kNetlistFormatVersion)
    throw std::runtime_error("netlist: unsupported format version");

  std::vector<Port> inputs = ports_from_json(j.at("inputs"), "inputs");
  std::vector<Port> outputs = ports_from_json(j.at("outputs"), "outputs");

  std::vector<Cell> cells;
  if (!j.contains("gates") || !j.at("gates").is_array())
    throw std::runtime_error("netlist: gates must be an array");
  for (const auto& g : j.at("gates")) {
    Cell c;
    auto op = gate_from_name(g.at("op").get<std::string>());
    if (!op) throw std::runtime_error("netlist: unknown op " + g.at("op").get<std::string>());
    c.op = *op;
    const auto& in = g.at("in");
    if (!in.is_array() || static_cast<int>(in.size()) != gate_arity(c.op))
      throw std::runtime_error(std::string("netlist: wrong input count for ") +
                               std::string(gate_name(c.op)));
    if (in.size() >= 1) c.in0 = in[0].get<NetId>();
    if (in.size() == 2) c.in1 = in[1].get<NetId>();
    c.out = g.at("out").get<NetId>();
    cells.push_back(c);
  }

  NetlistMeta meta;
  if (j.contains("meta")) meta = meta_from_json(j.at("meta"));
  return Netlist::restore(std::move(inputs), std::move(cells), std::move(outputs),
                          std::move(meta));
}

void save_netlist(const Netlist& nl, const std::filesystem::path& file) {
  write_file(file, netlist_to_json(nl));
}

Netlist load_netlist(const std::filesystem::path& file) {
  return netlist_from_json(read_file(file));
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& file, std::string_view content) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write failed for " + file.string());
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "0x%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

}  // namespace dadda
