#define DOCTEST_CONFIG_IMPLEMENT
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

std::string g_bin;  // daddagen path, taken from --bin=

struct RunResult {
  int code = -1;
  std::string out;  // stdout and stderr interleaved
};

RunResult run(const std::string& args) {
  std::string cmd = g_bin + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  for (std::size_t got; (got = std::fread(buf, 1, sizeof buf, pipe)) > 0;)
    r.out.append(buf, got);
  int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

// Fresh per-test scratch directory under the system temp root.
fs::path scratch(const std::string& tag) {
  fs::path dir = fs::temp_directory_path() / ("daddagen_cli_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path gen_netlist(const fs::path& dir, int n, const std::string& variant,
                     const std::string& extra = "") {
  auto r = run("gen --n " + std::to_string(n) + " --variant " + variant + " --out " +
               dir.string() + (extra.empty() ? "" : " " + extra));
  REQUIRE(r.code == 0);
  return dir / std::to_string(n) / variant / "netlist.json";
}

}  // namespace

TEST_CASE("gen writes the netlist and reruns byte-identically") {
  fs::path dir = scratch("gen");
  fs::path netlist = gen_netlist(dir, 8, "partitioned-hybrid");
  fs::path manifest = netlist.parent_path() / "manifest.json";
  REQUIRE(fs::exists(netlist));
  REQUIRE(fs::exists(manifest));
  std::string n1 = slurp(netlist), m1 = slurp(manifest);
  CHECK(m1.find("\"command\": \"gen --n 8 --variant partitioned-hybrid") != std::string::npos);
  CHECK(m1.find("\"fnv1a64\"") != std::string::npos);

  gen_netlist(dir, 8, "partitioned-hybrid");
  CHECK(slurp(netlist) == n1);
  CHECK(slurp(manifest) == m1);

  // A different invocation into the same directory adds a second entry.
  gen_netlist(dir, 8, "partitioned-hybrid", "--bec chain");
  std::string m2 = slurp(manifest);
  CHECK(m2 != m1);
  CHECK(m2.find("--bec chain") != std::string::npos);
  CHECK(m2.find("--bec tree") != std::string::npos);
}

TEST_CASE("gen refuses impossible requests") {
  fs::path dir = scratch("gen_bad");
  auto r = run("gen --n 3 --variant partitioned-cla --out " + dir.string());
  CHECK(r.code == 2);
  CHECK(r.out.find("error:") != std::string::npos);
  CHECK(run("gen --n 0 --variant regular-cla --out " + dir.string()).code == 2);
  CHECK(run("gen --n 8 --variant csd --out " + dir.string()).code == 2);
  CHECK(run("gen --variant regular-cla --out " + dir.string()).code == 2);  // --n required
}

TEST_CASE("verify passes clean netlists and rejects bad modes") {
  fs::path dir = scratch("verify");
  fs::path netlist = gen_netlist(dir, 8, "regular-cla");

  auto ok = run("verify --in " + netlist.string() + " --exhaustive");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("ok: 65536 operand pairs verified exhaustively") != std::string::npos);
  CHECK(ok.out.find("variant=regular-cla") != std::string::npos);

  auto rnd = run("verify --in " + netlist.string() + " --random 500 --seed 3");
  CHECK(rnd.code == 0);
  CHECK(rnd.out.find("ok: 500 operand pairs verified") != std::string::npos);

  CHECK(run("verify --in " + netlist.string()).code == 2);  // no mode picked
  CHECK(run("verify --in " + netlist.string() + " --exhaustive --random 5").code == 2);
  CHECK(run("verify --in " + netlist.string() + " --random 0").code == 2);
  CHECK(run("verify --in " + (dir / "nope.json").string() + " --exhaustive").code == 2);

  fs::path wide = gen_netlist(dir, 16, "regular-cla");
  auto refused = run("verify --in " + wide.string() + " --exhaustive");
  CHECK(refused.code == 2);
  CHECK(refused.out.find("n <= 10") != std::string::npos);
}

TEST_CASE("verify reports a counterexample for corrupted logic") {
  fs::path dir = scratch("verify_bad");
  fs::path netlist = gen_netlist(dir, 8, "regular-cla");
  std::string text = slurp(netlist);
  auto pos = text.find("\"XOR2\"");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 6, "\"OR2\"");
  fs::path bad = dir / "bad.json";
  spit(bad, text);

  auto r = run("verify --in " + bad.string() + " --exhaustive");
  CHECK(r.code == 1);
  CHECK(r.out.find("mismatch: a=0x") != std::string::npos);
  CHECK(r.out.find("want=0x") != std::string::npos);

  // Structural corruption is caught at load time instead.
  std::string broken = slurp(netlist);
  auto gpos = broken.find("\"gates\"");
  REQUIRE(gpos != std::string::npos);
  broken.replace(gpos, 7, "\"fates\"");
  spit(bad, broken);
  CHECK(run("verify --in " + bad.string() + " --exhaustive").code == 2);
}

TEST_CASE("report writes tables with manifests and compares against the baseline") {
  fs::path dir = scratch("report");
  fs::path reg = gen_netlist(dir, 8, "regular-cla");
  fs::path hyb = gen_netlist(dir, 8, "partitioned-hybrid");
  fs::path csv = dir / "tables" / "metrics.csv";
  fs::path md = dir / "tables" / "metrics.md";

  auto r = run("report --designs " + reg.string() + "," + hyb.string() + " --csv " +
               csv.string() + " --md " + md.string());
  CHECK(r.code == 0);
  REQUIRE(fs::exists(csv));
  REQUIRE(fs::exists(md));

  std::string csv_text = slurp(csv);
  CHECK(csv_text.find("n,variant,and_count,or_count,xor_count,not_count,area_units,"
                      "depth_units,toggles\n") == 0);
  CHECK(csv_text.find("8,regular-cla,") != std::string::npos);
  CHECK(csv_text.find("8,partitioned-hybrid,") != std::string::npos);

  std::string md_text = slurp(md);
  CHECK(md_text.find("# multiplier metrics") == 0);
  CHECK(md_text.find("## deltas vs regular-cla") != std::string::npos);
  CHECK(md_text.find("| 8 | partitioned-hybrid | ") != std::string::npos);

  // Both tables land in one manifest next to them.
  std::string manifest = slurp(dir / "tables" / "manifest.json");
  CHECK(manifest.find("metrics.csv") != std::string::npos);
  CHECK(manifest.find("metrics.md") != std::string::npos);

  // A lone non-baseline design produces no comparison section.
  fs::path md2 = dir / "tables" / "solo.md";
  CHECK(run("report --designs " + hyb.string() + " --md " + md2.string()).code == 0);
  CHECK(slurp(md2).find("## deltas") == std::string::npos);

  // Without output paths the table goes to stdout.
  auto stdout_run = run("report --designs " + reg.string());
  CHECK(stdout_run.code == 0);
  CHECK(stdout_run.out.find("8,regular-cla,") != std::string::npos);

  CHECK(run("report --designs " + (dir / "missing.json").string()).code == 2);
}

TEST_CASE("report runs the switching proxy only when asked") {
  fs::path dir = scratch("report_toggles");
  fs::path reg = gen_netlist(dir, 8, "regular-cla");
  auto without = run("report --designs " + reg.string());
  CHECK(without.out.find("28,\n") != std::string::npos);  // trailing empty toggle cell
  auto with = run("report --designs " + reg.string() + " --vectors 100 --seed 5");
  CHECK(with.code == 0);
  CHECK(with.out.find("28,\n") == std::string::npos);
  auto again = run("report --designs " + reg.string() + " --vectors 100 --seed 5");
  CHECK(again.out == with.out);
}

TEST_CASE("emit-verilog writes a structural module") {
  fs::path dir = scratch("emitv");
  fs::path netlist = gen_netlist(dir, 8, "partitioned-hybrid");
  fs::path v = dir / "rtl" / "mul.v";
  auto r = run("emit-verilog --in " + netlist.string() + " --out " + v.string());
  CHECK(r.code == 0);
  std::string text = slurp(v);
  CHECK(text.find("module dadda_mul_n8_partitioned_hybrid(a, b, p);") == 0);
  CHECK(text.rfind("endmodule\n") == text.size() - 10);
  CHECK(fs::exists(dir / "rtl" / "manifest.json"));
}

TEST_CASE("custom block plans are honored and validated") {
  fs::path dir = scratch("plan");
  fs::path plan = dir / "plan.json";
  spit(plan, R"({"blocks": [{"width": 4, "with_carry": true}, {"width": 1, "with_carry": false}]})");
  fs::path netlist =
      gen_netlist(dir, 8, "partitioned-hybrid", "--plan " + plan.string());
  auto ok = run("verify --in " + netlist.string() + " --exhaustive");
  CHECK(ok.code == 0);

  fs::path bad = dir / "bad_plan.json";
  spit(bad, R"({"blocks": [{"width": 5, "with_carry": true}]})");
  auto r = run("gen --n 8 --variant partitioned-hybrid --plan " + bad.string() + " --out " +
               dir.string());
  CHECK(r.code == 2);
  CHECK(r.out.find("error:") != std::string::npos);

  spit(bad, R"({"rungs": []})");
  CHECK(run("gen --n 8 --variant partitioned-hybrid --plan " + bad.string() + " --out " +
            dir.string())
            .code == 2);

  auto wrong_variant = run("gen --n 8 --variant regular-cla --plan " + plan.string() +
                           " --out " + dir.string());
  CHECK(wrong_variant.code == 2);
  CHECK(wrong_variant.out.find("partitioned-hybrid only") != std::string::npos);
}

int main(int argc, char** argv) {
  doctest::Context ctx;
  std::vector<char*> rest;
  for (int i = 0; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg.rfind("--bin=", 0) == 0)
      g_bin = arg.substr(6);
    else
      rest.push_back(argv[i]);
  }
  if (g_bin.empty()) {
    std::fprintf(stderr, "usage: cli_tests --bin=<path-to-daddagen> [doctest args]\n");
    return 1;
  }
  ctx.applyCommandLine(static_cast<int>(rest.size()), rest.data());
  return ctx.run();
}
