#include <array>
#include <map>
#include <set>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "dlab/cli.hpp"
#include "dlab/fixtures.hpp"
#include "dlab/report.hpp"

using namespace dlab;
namespace fs = std::filesystem;

namespace {

std::string fixture_path(const std::string& name) { return std::string(DLAB_SOURCE_DIR) + "/fixtures/" + name + ".rot"; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(RunConfig c) {
  std::ostringstream out, err;
  int code = run_command(c, out, err);
  return {code, out.str(), err.str()};
}

Run run_args(std::vector<std::string> args) {
  std::vector<const char*> argv{"discharge-lab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

RunConfig config(Command cmd, const std::string& fixture_name, bool as_json = false) {
  RunConfig c;
  c.command = cmd;
  c.input = fixture_path(fixture_name);
  c.json = as_json;
  return c;
}

fs::path temp_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("dlab_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

void write_bytes(const fs::path& p, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(p, std::ios::binary);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace

TEST_CASE("discharge F1 as JSON") {
  Run r = run(config(Command::Discharge, "F1", true));
  CHECK(r.code == exit_ok);
  json j = json::parse(r.out);
  CHECK(j["schema_version"] == report_schema_version);
  CHECK(j["kind"] == "discharge");
  CHECK(j["sum"] == "0/1");
  CHECK(j["conserved"] == true);
  for (const auto& t : j["ledger"]["transfers"]) CHECK(t["amount"].is_string());
}

TEST_CASE("class F2 is a non-member with a special 9-cycle witness") {
  Run r = run(config(Command::Class, "F2"));
  CHECK(r.code == exit_finding);
  CHECK(r.out.find("G: non-member") != std::string::npos);
  CHECK(r.out.find("special 9-cycle") != std::string::npos);
}

TEST_CASE("color F4 prints none") {
  Run r = run(config(Command::Color, "F4"));
  CHECK(r.code == exit_finding);
  CHECK(r.out == "none\n");
}

TEST_CASE("exit codes for every fixture") {
  // analyze, class, discharge, color, audit
  const std::map<std::string, std::array<int, 5>> expected = {
      {"F1", {0, 0, 0, 0, 0}}, {"F2", {0, 1, 0, 0, 0}}, {"F3", {0, 0, 0, 0, 1}}, {"F4", {0, 1, 0, 1, 1}},
      {"F5", {0, 0, 0, 0, 0}}, {"F6", {0, 0, 0, 0, 0}}, {"F7", {0, 1, 0, 0, 1}}, {"F8", {0, 0, 0, 0, 1}},
      {"F9", {0, 0, 0, 0, 1}}, {"F10", {0, 0, 0, 0, 1}},
  };
  const Command cmds[] = {Command::Analyze, Command::Class, Command::Discharge, Command::Color, Command::Audit};
  for (const auto& [name, codes] : expected) {
    for (int i = 0; i < 5; ++i) {
      CAPTURE(name);
      CAPTURE(i);
      CHECK(run(config(cmds[i], name)).code == codes[i]);
      CHECK(run(config(cmds[i], name, true)).code == codes[i]);
    }
  }
}

TEST_CASE("input errors exit with 2") {
  RunConfig c;
  c.command = Command::Color;
  c.input = "/nonexistent/graph.rot";
  CHECK(run(c).code == exit_input_error);

  fs::path dir = temp_dir("bad_input");
  std::ofstream(dir / "bad.rot") << "3\n1: 2 3\n2: 3 1\n3: 1 2 9\n";
  c.input = (dir / "bad.rot").string();
  Run r = run(c);
  CHECK(r.code == exit_input_error);
  CHECK(r.err.find("vertex-range") != std::string::npos);

  CHECK(run_args({"color"}).code == exit_input_error);
  CHECK(run_args({"nonsense", "-i", "x"}).code == exit_input_error);
  CHECK(run_args({"batch", "-i", "x", "--limit", "0"}).code == exit_input_error);
}

TEST_CASE("outer face override") {
  Run r = run_args({"analyze", "-i", fixture_path("F5"), "--outer", "1,2,3", "--json"});
  REQUIRE(r.code == exit_ok);
  CHECK(run_args({"analyze", "-i", fixture_path("F5"), "--outer", "1 2 4"}).code == exit_input_error);
}

TEST_CASE("JSON reports round-trip") {
  for (const Fixture& fx : fixtures()) {
    CAPTURE(fx.name);
    ChargeLedger l = apply_discharging(fx.graph);
    json a = l;
    ChargeLedger back = json::parse(a.dump()).get<ChargeLedger>();
    CHECK(json(back) == a);
    CHECK(back.final_vertex == l.final_vertex);

    for (const ClassReport& c : {check_class_G(fx.graph, true), check_theorem3_class(fx.graph, true)}) {
      json cj = c;
      CHECK(json(json::parse(cj.dump()).get<ClassReport>()) == cj);
    }
    for (const CycleRecord& rec : enumerate_cycles(fx.graph, 12)) {
      json rj = rec;
      CHECK(json(json::parse(rj.dump()).get<CycleRecord>()) == rj);
    }
    for (const AuditFinding& f : audit_lemma_configurations(fx.graph)) {
      json fj = f;
      CHECK(json(json::parse(fj.dump()).get<AuditFinding>()) == fj);
    }
    if (fx.graph.face(fx.graph.outer_face()).simple) {
      json ej = check_extension_property(fx.graph);
      CHECK(json(json::parse(ej.dump()).get<ExtensionReport>()) == ej);
    }
  }
  ConditionReport cr = reduction_check(fixture("F3").graph, {{11}, ReductionKind::Identify, 1, 6});
  json crj = cr;
  CHECK(json(json::parse(crj.dump()).get<ConditionReport>()) == crj);
}

TEST_CASE("every command's JSON output carries the schema version") {
  for (Command cmd : {Command::Analyze, Command::Class, Command::Discharge, Command::Color, Command::Extend,
                      Command::Audit, Command::Batch}) {
    Run r = run(config(cmd, "F1", true));
    json j = json::parse(r.out);
    CHECK(j["schema_version"] == report_schema_version);
  }
}

TEST_CASE("batch over the fixture directory") {
  RunConfig c;
  c.command = Command::Batch;
  c.input = std::string(DLAB_SOURCE_DIR) + "/fixtures";
  c.json = true;
  Run r = run(c);
  CHECK(r.code == exit_ok);
  json j = json::parse(r.out);
  const json& s = j["summary"];
  CHECK(s["graphs"] == 10);
  CHECK(s["no469_members"] == 4);
  CHECK(s["G_members"] == 7);
  CHECK(s["uncolorable"] == 1);
  CHECK(s["contradictions"] == 0);
  std::set<std::string> t3;
  for (const auto& rec : j["records"])
    if (rec["no469_member"] == true) {
      t3.insert(rec["name"].get<std::string>());
      CHECK(rec["colorable"] == true);
    }
  CHECK(t3 == std::set<std::string>{"F3.rot", "F5.rot", "F6.rot", "F8.rot"});

  c.limit = 3;
  CHECK(json::parse(run(c).out)["summary"]["graphs"] == 3);
}

TEST_CASE("batch over planar_code streams") {
  fs::path dir = temp_dir("pcode");
  std::vector<PlaneGraph> gs;
  for (const Fixture& fx : fixtures()) gs.push_back(fx.graph);
  write_bytes(dir / "all.pc", emit_planar_code(gs));

  RunConfig c;
  c.command = Command::Batch;
  c.input = (dir / "all.pc").string();
  c.json = true;
  Run full = run(c);
  CHECK(full.code == exit_ok);
  CHECK(json::parse(full.out)["summary"]["graphs"] == 10);

  SUBCASE("empty corpus") {
    write_bytes(dir / "empty.pc", emit_planar_code(std::vector<PlaneGraph>{}));
    c.input = (dir / "empty.pc").string();
    Run r = run(c);
    CHECK(r.code == exit_ok);
    CHECK(json::parse(r.out)["summary"]["graphs"] == 0);
  }
  SUBCASE("truncated record") {
    auto bytes = emit_planar_code(gs);
    bytes.resize(bytes.size() - 3);
    write_bytes(dir / "cut.pc", bytes);
    c.input = (dir / "cut.pc").string();
    Run r = run(c);
    CHECK(r.code == exit_input_error);
    json j = json::parse(r.out);
    CHECK(j["summary"]["graphs"] == 9);
    CHECK(j["stream_error"]["last_good_index"] == 8);
    CHECK(r.err.find("last good graph index 8") != std::string::npos);
  }
  SUBCASE("single-graph commands want exactly one graph") {
    RunConfig one;
    one.command = Command::Color;
    one.input = (dir / "all.pc").string();
    CHECK(run(one).code == exit_input_error);
    write_bytes(dir / "k4.pc", emit_planar_code(std::vector<PlaneGraph>{fixture("F4").graph}));
    one.input = (dir / "k4.pc").string();
    CHECK(run(one).code == exit_finding);
  }
}

TEST_CASE("serial and parallel batch agree and merge associatively") {
  std::vector<BatchInput> inputs;
  for (const Fixture& fx : fixtures()) inputs.push_back({fx.name, fx.graph, std::nullopt});
  inputs.push_back({"broken", std::nullopt, std::string("bad record")});
  auto serial = batch_process_serial(inputs);
  auto parallel = batch_process_parallel(inputs);
  CHECK(serial == parallel);
  BatchSummary total = summarize(serial);
  CHECK(total.graphs == 11);
  CHECK(total.errors == 1);
  BatchSummary left = summarize({serial.begin(), serial.begin() + 4});
  BatchSummary right = summarize({serial.begin() + 4, serial.end()});
  left += right;
  CHECK(left == total);
}

TEST_CASE("thread cap from the environment") {
  setenv("DISCHARGE_LAB_THREADS", "1", 1);
  CHECK(worker_threads() == 1);
  setenv("DISCHARGE_LAB_THREADS", "junk", 1);
  CHECK(worker_threads() >= 1);
  unsetenv("DISCHARGE_LAB_THREADS");
}

TEST_CASE("fixture subcommand reproduces the shipped files") {
  for (const Fixture& fx : fixtures()) {
    Run r = run_args({"fixture", fx.name});
    CHECK(r.code == exit_ok);
    std::ifstream in(fixture_path(fx.name));
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(r.out == ss.str());
  }
}
