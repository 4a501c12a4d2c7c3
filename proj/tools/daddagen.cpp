#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dadda/adders.hpp"
#include "dadda/analysis.hpp"
#include "dadda/json_io.hpp"
#include "dadda/multiplier.hpp"
#include "dadda/report.hpp"
#include "dadda/verilog.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct ManifestRun {
  std::string command;  // canonical invocation, the entry's identity
  json flags;
  json seeds;
  std::vector<std::pair<std::string, std::string>> outputs;  // file name -> digest
};

// manifest.json per output directory. Entries are keyed by the canonical
// command, so rerunning an identical invocation rewrites its own entry and
// the file stays byte-identical.
void update_manifest(const fs::path& dir, const ManifestRun& run) {
  fs::path file = dir / "manifest.json";
  std::vector<json> runs;
  if (fs::exists(file)) {
    try {
      json doc = json::parse(dadda::read_file(file));
      if (doc.is_object() && doc.contains("runs") && doc["runs"].is_array())
        for (auto& r : doc["runs"])
          if (r.is_object() && r.value("command", std::string()) != run.command)
            runs.push_back(r);
    } catch (const std::exception&) {
      // unreadable manifest: rebuild from scratch
    }
  }
  json entry = json::object();
  entry["command"] = run.command;
  entry["flags"] = run.flags;
  entry["seeds"] = run.seeds;
  json outs = json::array();
  for (const auto& [name, digest] : run.outputs)
    outs.push_back({{"file", name}, {"fnv1a64", digest}});
  entry["outputs"] = std::move(outs);
  runs.push_back(std::move(entry));
  std::sort(runs.begin(), runs.end(), [](const json& a, const json& b) {
    return a.value("command", std::string()) < b.value("command", std::string());
  });
  json doc = json::object();
  doc["tool"] = "daddagen";
  doc["version"] = dadda::kToolVersion;
  doc["runs"] = json::array();
  for (auto& r : runs) doc["runs"].push_back(std::move(r));
  dadda::write_file(file, doc.dump(2) + "\n");
}

dadda::FinalAdderPlan load_plan_file(const fs::path& path) {
  json j;
  try {
    j = json::parse(dadda::read_file(path));
  } catch (const std::exception& e) {
    throw std::runtime_error("plan file: " + std::string(e.what()));
  }
  if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array())
    throw std::runtime_error("plan file: expected {\"blocks\": [{\"width\":..,\"with_carry\":..}, ..]}");
  dadda::FinalAdderPlan plan;
  for (const auto& b : j["blocks"])
    plan.blocks.push_back({b.at("width").get<int>(), b.at("with_carry").get<bool>()});
  return plan;
}

struct GenArgs {
  int n = 8;
  std::string variant;
  std::string plan = "default";
  std::string inpart = "cla";
  std::string bec = "tree";
  std::string mbec = "fused";
  std::string out = "out";
};

int run_gen(const GenArgs& a) {
  dadda::MultiplierConfig cfg =
      dadda::MultiplierConfig::make(a.n, *dadda::variant_from_name(a.variant));
  cfg.set_inpart(a.inpart);
  cfg.bec = a.bec == "chain" ? dadda::PrefixShape::Chain : dadda::PrefixShape::Tree;
  cfg.mbec = a.mbec == "mux" ? dadda::SelectStyle::Mux : dadda::SelectStyle::Fused;
  if (a.plan != "default") {
    if (cfg.variant != dadda::Variant::PartitionedHybrid)
      throw std::runtime_error("a custom --plan applies to partitioned-hybrid only");
    cfg.plan = load_plan_file(a.plan);
  }
  dadda::Netlist nl = dadda::build_multiplier(cfg);

  fs::path dir = fs::path(a.out) / std::to_string(a.n) / a.variant;
  fs::create_directories(dir);
  std::string text = dadda::netlist_to_json(nl);
  dadda::write_file(dir / "netlist.json", text);

  ManifestRun run;
  run.command = "gen --n " + std::to_string(a.n) + " --variant " + a.variant + " --plan " +
                a.plan + " --inpart " + a.inpart + " --bec " + a.bec + " --mbec " + a.mbec +
                " --out " + a.out;
  run.flags = {{"n", a.n},     {"variant", a.variant}, {"plan", a.plan}, {"inpart", a.inpart},
               {"bec", a.bec}, {"mbec", a.mbec},       {"out", a.out}};
  run.seeds = json::object();
  run.outputs = {{"netlist.json", dadda::fnv1a64_hex(text)}};
  update_manifest(dir, run);

  std::cout << "wrote " << (dir / "netlist.json").string() << " (gates=" << nl.cells().size()
            << ", nets=" << nl.net_count() << ")\n";
  return 0;
}

int multiplier_width(const dadda::Netlist& nl) {
  if (nl.meta().n > 0) return nl.meta().n;
  if (!nl.inputs().empty()) return static_cast<int>(nl.inputs()[0].bits.size());
  throw std::runtime_error("netlist has no inputs");
}

int run_verify(const std::string& in, bool exhaustive, bool have_random, std::uint64_t count,
               std::uint64_t seed) {
  if (exhaustive == have_random)
    throw std::runtime_error("choose exactly one of --exhaustive / --random N");
  dadda::Netlist nl = dadda::load_netlist(in);
  int n = multiplier_width(nl);
  std::optional<dadda::Counterexample> bad;
  std::uint64_t pairs = 0;
  if (exhaustive) {
    if (n > 10)
      throw std::runtime_error("exhaustive verification is limited to n <= 10; use --random N");
    bad = dadda::verify_exhaustive(nl, n);
    pairs = 1ull << (2 * n);
  } else {
    if (count == 0) throw std::runtime_error("--random needs a positive pair count");
    bad = dadda::verify_random(nl, n, count, seed);
    pairs = count;
  }
  if (bad) {
    int opd = (n + 3) / 4, prd = (2 * n + 3) / 4;
    std::cout << "mismatch: a=" << dadda::hex_u128(bad->a, opd) << " b="
              << dadda::hex_u128(bad->b, opd) << " got=" << dadda::hex_u128(bad->got, prd)
              << " want=" << dadda::hex_u128(bad->want, prd) << "\n";
    return 1;
  }
  std::cout << "ok: " << pairs << " operand pairs verified"
            << (exhaustive ? " exhaustively" : "") << " (n=" << n
            << (nl.meta().variant.empty() ? std::string() : ", variant=" + nl.meta().variant)
            << ")\n";
  return 0;
}

std::string metrics_markdown_table(const std::vector<dadda::DesignMetrics>& rows) {
  std::ostringstream out;
  out << "| n | variant | and | or | xor | not | area | depth | toggles |\n";
  out << "|---|---------|-----|----|-----|-----|------|-------|---------|\n";
  for (const auto& m : rows) {
    out << "| " << m.n << " | " << (m.variant.empty() ? "custom" : m.variant) << " | "
        << m.counts.and2 << " | " << m.counts.or2 << " | " << m.counts.xor2 << " | "
        << m.counts.not1 << " | " << m.area_units << " | " << m.depth_units << " | ";
    if (m.toggles)
      out << *m.toggles;
    else
      out << "-";
    out << " |\n";
  }
  return out.str();
}

struct ReportArgs {
  std::vector<std::string> designs;
  std::string cost_model;
  int vectors = 0;
  std::uint64_t seed = 0;
  std::string csv;
  std::string md;
};

int run_report(const ReportArgs& a) {
  dadda::CostModel model =
      a.cost_model.empty() ? dadda::CostModel::unit_gate() : dadda::CostModel::load(a.cost_model);
  std::vector<dadda::DesignMetrics> rows;
  for (const std::string& path : a.designs) {
    if (!fs::exists(path)) throw std::runtime_error("unknown design: " + path);
    dadda::Netlist nl = dadda::load_netlist(path);
    rows.push_back(dadda::analyze(nl, model, path, a.vectors, a.seed));
  }

  // Regular-CLA rows of each width are the comparison baseline for the other
  // variants of the same width.
  std::vector<dadda::ComparisonRow> comp;
  std::string baseline_name = dadda::variant_name(dadda::Variant::RegularCla);
  for (const auto& cand : rows) {
    if (cand.variant == baseline_name || cand.variant.empty()) continue;
    for (const auto& base : rows) {
      if (base.variant == baseline_name && base.n == cand.n) {
        comp.push_back({cand.n, cand.variant, dadda::compare(base, cand)});
        break;
      }
    }
  }

  std::string csv_text = dadda::metrics_csv(rows);
  std::string md_text = "# multiplier metrics\n\n" + metrics_markdown_table(rows);
  if (!comp.empty())
    md_text += "\n## deltas vs " + baseline_name + "\n\n" +
               dadda::comparison_markdown(baseline_name, comp);

  std::string command = "report --designs ";
  for (std::size_t i = 0; i < a.designs.size(); ++i)
    command += (i ? "," : "") + a.designs[i];
  if (!a.cost_model.empty()) command += " --cost-model " + a.cost_model;
  command += " --vectors " + std::to_string(a.vectors) + " --seed " + std::to_string(a.seed);
  if (!a.csv.empty()) command += " --csv " + a.csv;
  if (!a.md.empty()) command += " --md " + a.md;

  json seeds = {{"seed", a.seed}, {"vectors", a.vectors}};
  json flags = {{"designs", a.designs},
                {"cost_model", a.cost_model.empty() ? "unit-gate" : a.cost_model},
                {"vectors", a.vectors},
                {"seed", a.seed}};

  std::map<fs::path, std::vector<std::pair<std::string, std::string>>> written;
  auto emit = [&](const std::string& path, const std::string& text) {
    fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    dadda::write_file(p, text);
    fs::path dir = p.has_parent_path() ? p.parent_path() : fs::path(".");
    written[dir].emplace_back(p.filename().string(), dadda::fnv1a64_hex(text));
    std::cout << "wrote " << path << "\n";
  };
  if (!a.csv.empty()) emit(a.csv, csv_text);
  if (!a.md.empty()) emit(a.md, md_text);
  for (const auto& [dir, files] : written)
    update_manifest(dir, ManifestRun{command, flags, seeds, files});
  if (written.empty()) {
    std::cout << csv_text;
    if (!comp.empty()) std::cout << "\n" << dadda::comparison_markdown(baseline_name, comp);
  }
  return 0;
}

int run_emit_verilog(const std::string& in, const std::string& out) {
  dadda::Netlist nl = dadda::load_netlist(in);
  std::string text = dadda::to_verilog(nl);
  fs::path p(out);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  dadda::write_file(p, text);
  ManifestRun run;
  run.command = "emit-verilog --in " + in + " --out " + out;
  run.flags = {{"in", in}, {"out", out}};
  run.seeds = json::object();
  run.outputs = {{p.filename().string(), dadda::fnv1a64_hex(text)}};
  update_manifest(p.has_parent_path() ? p.parent_path() : fs::path("."), run);
  std::cout << "wrote " << out << " (nets=" << nl.cells().size() + nl.input_bit_count()
            << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gate-level dadda multiplier generator, verifier, and reporter"};
  app.require_subcommand(1);

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "generate a multiplier netlist");
  gen->add_option("--n", ga.n, "operand width")->required()->check(CLI::Range(1, 64));
  gen->add_option("--variant", ga.variant, "multiplier architecture")
      ->required()
      ->check(CLI::IsMember({"regular-cla", "partitioned-cla", "partitioned-hybrid"}));
  gen->add_option("--plan", ga.plan, "final-adder block plan: 'default' or a JSON file");
  gen->add_option("--inpart", ga.inpart, "partition completion adders")
      ->check(CLI::IsMember({"cla", "rca"}));
  gen->add_option("--bec", ga.bec, "incrementer prefix shape")
      ->check(CLI::IsMember({"chain", "tree"}));
  gen->add_option("--mbec", ga.mbec, "block select style")
      ->check(CLI::IsMember({"fused", "mux"}));
  gen->add_option("--out", ga.out, "output root directory");

  std::string verify_in;
  bool exhaustive = false;
  std::uint64_t random_count = 0, verify_seed = 0;
  auto* verify = app.add_subcommand("verify", "check a netlist against integer products");
  verify->add_option("--in", verify_in, "netlist.json to verify")->required();
  verify->add_flag("--exhaustive", exhaustive, "all operand pairs (n <= 10)");
  auto* random_opt = verify->add_option("--random", random_count, "random operand pair count");
  verify->add_option("--seed", verify_seed, "random stream seed");

  ReportArgs ra;
  auto* report = app.add_subcommand("report", "metrics table and baseline deltas");
  report->add_option("--designs", ra.designs, "netlist.json paths (comma separated)")
      ->required()
      ->delimiter(',');
  report->add_option("--cost-model", ra.cost_model, "cost model JSON (default: unit-gate)");
  report->add_option("--vectors", ra.vectors, "switching-proxy vector pairs (0 = skip)");
  report->add_option("--seed", ra.seed, "switching-proxy seed");
  report->add_option("--csv", ra.csv, "write the metrics table here");
  report->add_option("--md", ra.md, "write the markdown report here");

  std::string emit_in, emit_out;
  auto* emitv = app.add_subcommand("emit-verilog", "structural verilog for a netlist");
  emitv->add_option("--in", emit_in, "netlist.json to emit")->required();
  emitv->add_option("--out", emit_out, "verilog output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) return run_gen(ga);
    if (verify->parsed())
      return run_verify(verify_in, exhaustive, random_opt->count() > 0, random_count,
                        verify_seed);
    if (report->parsed()) return run_report(ra);
    if (emitv->parsed()) return run_emit_verilog(emit_in, emit_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
