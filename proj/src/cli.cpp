#include "dlab/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dlab/fixtures.hpp"
#include "dlab/report.hpp"

namespace dlab {

namespace fs = std::filesystem;

int worker_threads() {
  int cap = omp_get_max_threads();
  if (const char* env = std::getenv("DISCHARGE_LAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min<long>(v, cap));
  }
  return cap;
}

void BatchSummary::add(const BatchRecord& r) {
  ++graphs;
  if (r.error) {
    ++errors;
    return;
  }
  no469_members += r.no469_member;
  g_members += r.g_member;
  colorable += r.colorable;
  uncolorable += !r.colorable;
  audit_clean += r.audit_clean;
  if (!r.extension_holds) ++extension_skipped;
  else if (*r.extension_holds) ++extension_holds;
  else ++extension_fails;
  contradictions += r.contradicts();
}

BatchSummary& BatchSummary::operator+=(const BatchSummary& o) {
  graphs += o.graphs;
  errors += o.errors;
  no469_members += o.no469_members;
  g_members += o.g_members;
  colorable += o.colorable;
  uncolorable += o.uncolorable;
  audit_clean += o.audit_clean;
  extension_holds += o.extension_holds;
  extension_fails += o.extension_fails;
  extension_skipped += o.extension_skipped;
  contradictions += o.contradictions;
  return *this;
}

BatchSummary summarize(const std::vector<BatchRecord>& records) {
  BatchSummary s;
  for (const BatchRecord& r : records) s.add(r);
  return s;
}

BatchRecord evaluate_graph(int index, const BatchInput& in) {
  BatchRecord r;
  r.index = index;
  r.name = in.name;
  if (!in.graph) {
    r.error = in.error.value_or("no graph");
    return r;
  }
  const PlaneGraph& g = *in.graph;
  r.n = g.n();
  try {
    r.no469_member = check_theorem3_class(g).member;
    r.g_member = r.no469_member || check_class_G(g).member;
    r.colorable = solve_3coloring(g).has_value();
    r.audit_clean = audit_lemma_configurations(g).empty();
    const Face& outer = g.face(g.outer_face());
    if (r.g_member && outer.simple) {
      ExtensionReport ext = check_extension_property(g);
      if (ext.hypothesis_holds) {
        r.extension_holds = ext.non_extendable() == 0;
        r.non_extendable = ext.non_extendable();
      }
    }
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

std::vector<BatchRecord> batch_process_serial(const std::vector<BatchInput>& inputs) {
  std::vector<BatchRecord> out;
  out.reserve(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) out.push_back(evaluate_graph(static_cast<int>(i), inputs[i]));
  return out;
}

std::vector<BatchRecord> batch_process_parallel(const std::vector<BatchInput>& inputs) {
  std::vector<BatchRecord> out(inputs.size());
  const long m = static_cast<long>(inputs.size());
#pragma omp parallel for schedule(dynamic) num_threads(worker_threads())
  for (long i = 0; i < m; ++i) out[i] = evaluate_graph(static_cast<int>(i), inputs[i]);
  return out;
}

namespace {

const char* command_name(Command c) {
  switch (c) {
    case Command::Analyze: return "analyze";
    case Command::Class: return "class";
    case Command::Discharge: return "discharge";
    case Command::Color: return "color";
    case Command::Extend: return "extend";
    case Command::Audit: return "audit";
    case Command::Batch: return "batch";
    case Command::Fixture: return "fixture";
  }
  return "?";
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

InputFormat resolve_format(const RunConfig& c) {
  if (c.format != InputFormat::Auto) return c.format;
  const std::string ext = fs::path(c.input).extension().string();
  if (ext == ".pc" || ext == ".pcode" || ext == ".planar_code" || ext == ".bin") return InputFormat::Pcode;
  return InputFormat::Rot;
}

std::string describe(const InputError& e) {
  std::string s = std::string("input error (") + to_string(e.kind()) + ")";
  if (e.graph_index()) s += " in graph " + std::to_string(*e.graph_index());
  return s + ": " + e.what();
}

PlaneGraph apply_outer(PlaneGraph g, const RunConfig& c) {
  if (!c.outer) return g;
  std::vector<Vertex> walk;
  for (Vertex v : *c.outer) walk.push_back(v - 1);
  return PlaneGraph::from_rotation(g.rotations(), walk);
}

PlaneGraph load_single(const RunConfig& c) {
  const std::string data = read_file(c.input);
  if (resolve_format(c) == InputFormat::Pcode) {
    std::vector<PlaneGraph> gs =
        parse_planar_code({reinterpret_cast<const std::uint8_t*>(data.data()), data.size()});
    if (gs.size() != 1)
      throw InputError(InputErrorKind::Unsupported,
                       "single-graph commands need exactly one graph, stream holds " + std::to_string(gs.size()));
    return apply_outer(std::move(gs[0]), c);
  }
  return apply_outer(parse_rotation_text(data), c);
}

std::string list(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + std::to_string(vs[i]);
  return s;
}

std::string partitions_line(const std::vector<BadPartition>& ps) {
  std::string s;
  for (const BadPartition& p : ps) {
    s += s.empty() ? "" : ", ";
    s += std::string(to_string(p.kind)) + " (";
    for (std::size_t i = 0; i < p.signature.size(); ++i) s += (i ? "," : "") + std::to_string(p.signature[i]);
    s += ")";
  }
  return s;
}

void print_class(std::ostream& out, const ClassReport& r) {
  out << to_string(r.checked_class) << ": " << (r.member ? "member" : "non-member") << "\n";
  for (const ClassWitness& w : r.witnesses)
    out << "  " << to_string(w.reason) << " [" << list(w.cycle) << "]" << (w.detail.empty() ? "" : " " + w.detail)
        << "\n";
}

int cmd_analyze(const PlaneGraph& g, const RunConfig& c, std::ostream& out) {
  auto cycles = enumerate_cycles(g, c.max_cycle_len);
  auto cg = check_class_G(g, true);
  auto t3 = check_theorem3_class(g, true);
  if (c.json) {
    json faces = json::array();
    for (const Face& f : g.faces()) faces.push_back(f);
    out << make_report("analyze", {{"n", g.n()},
                                   {"edges", g.edge_count()},
                                   {"outer_face", g.outer_face()},
                                   {"faces", faces},
                                   {"max_cycle_len", c.max_cycle_len},
                                   {"cycles", cycles},
                                   {"class_G", cg},
                                   {"class_no469", t3}})
               .dump(2)
        << "\n";
    return exit_ok;
  }
  out << "n = " << g.n() << ", m = " << g.edge_count() << ", faces = " << g.face_count() << ", outer face f"
      << g.outer_face() << "\n";
  out << "faces:\n";
  for (const Face& f : g.faces())
    out << "  f" << f.id << " (" << f.size() << (f.simple ? "" : ", not simple") << "): " << list(f.boundary) << "\n";
  out << "cycles up to length " << c.max_cycle_len << ": " << cycles.size() << "\n";
  for (const CycleRecord& r : cycles) {
    out << "  " << r.length << ": [" << list(r.vertices) << "]";
    const CycleFlags& fl = r.flags;
    for (auto [on, name] : {std::pair{fl.facial, "facial"}, std::pair{fl.separating, "separating"},
                            std::pair{fl.good, "good"}, std::pair{fl.bad, "bad"}, std::pair{fl.special9, "special9"},
                            std::pair{fl.triangular, "triangular"}, std::pair{fl.ext_triangular, "ext-triangular"}})
      if (on) out << " " << name;
    if (!r.partitions.empty()) out << "; " << partitions_line(r.partitions);
    out << "\n";
  }
  print_class(out, cg);
  print_class(out, t3);
  return exit_ok;
}

int cmd_class(const PlaneGraph& g, const RunConfig& c, std::ostream& out) {
  auto cg = check_class_G(g);
  auto t3 = check_theorem3_class(g);
  if (c.json)
    out << make_report("class", {{"class_G", cg}, {"class_no469", t3}}).dump(2) << "\n";
  else {
    print_class(out, cg);
    print_class(out, t3);
  }
  return cg.member ? exit_ok : exit_finding;
}

int cmd_discharge(const PlaneGraph& g, const RunConfig& c, std::ostream& out) {
  ChargeLedger l = apply_discharging(g);
  const bool ok = verify_conservation(l);
  NegativeReport neg = negative_report(g, l);
  if (c.json) {
    out << make_report("discharge", {{"ledger", l}, {"conserved", ok}, {"sum", l.final_sum()}, {"charges", neg}})
               .dump(2)
        << "\n";
  } else {
    out << "outer face f" << l.outer_face << "\n";
    out << "transfers: " << l.transfers.size() << "\n";
    for (const Transfer& t : l.transfers)
      out << "  " << t.rule << " " << t.source.str() << " -> " << t.sink.str() << " " << t.amount
          << (t.via ? " via " + t.via->str() : "") << "\n";
    for (const Diagnostic& d : l.diagnostics) out << "  note " << d.rule << " at " << d.at.str() << ": " << d.message << "\n";
    out << "final charges:\n";
    for (Vertex v = 0; v < g.n(); ++v) out << "  v" << v << " " << l.final_vertex[v] << "\n";
    for (FaceId f = 0; f < g.face_count(); ++f) out << "  f" << f << " " << l.final_face[f] << "\n";
    out << "sum " << l.initial_sum() << " -> " << l.final_sum() << (ok ? ", conserved" : ", NOT conserved") << "\n";
    out << "negative elements: " << neg.negatives.size() << ", positive boundary vertices: "
        << neg.positive_on_boundary.size() << "\n";
  }
  return ok ? exit_ok : exit_finding;
}

int cmd_color(const PlaneGraph& g, const RunConfig& c, std::ostream& out) {
  auto col = solve_3coloring(g);
  if (c.json)
    out << make_report("color", {{"colorable", col.has_value()}, {"coloring", col ? json(*col) : json(nullptr)}}).dump(2)
        << "\n";
  else if (col)
    out << "coloring: " << list(col->colors) << "\n";
  else
    out << "none\n";
  return col ? exit_ok : exit_finding;
}

int cmd_extend(const PlaneGraph& g, const RunConfig& c, std::ostream& out) {
  ExtensionReport r = check_extension_property_parallel(g);
  if (c.json) {
    out << make_report("extend", {{"extension", r}}).dump(2) << "\n";
  } else {
    out << "boundary: " << list(r.boundary) << " (" << (r.boundary_good ? "good" : "not good") << ")\n";
    out << "graph in G: " << (r.graph_in_G ? "yes" : "no") << "\n";
    out << "boundary colorings: " << r.total << ", extendable: " << r.extendable
        << ", non-extendable: " << r.non_extendable() << "\n";
    for (const auto& w : r.witnesses) out << "  non-extendable: " << list(w) << "\n";
  }
  return r.non_extendable() == 0 ? exit_ok : exit_finding;
}

int cmd_audit(const PlaneGraph& g, const RunConfig& c, std::ostream& out) {
  auto findings = audit_lemma_configurations(g);
  const bool in_g = check_class_G(g).member;
  std::optional<std::vector<AuditFinding>> catalog;
  if (in_g) catalog = check_bad_cycle_catalog(g);
  const bool clean = findings.empty() && (!catalog || catalog->empty());
  if (c.json) {
    out << make_report("audit", {{"findings", findings},
                                 {"catalog", catalog ? json(*catalog) : json(nullptr)},
                                 {"clean", clean}})
               .dump(2)
        << "\n";
  } else {
    out << "findings: " << findings.size() << "\n";
    for (const AuditFinding& f : findings)
      out << "  " << to_string(f.check) << " [" << list(f.vertices) << "] " << f.detail << "\n";
    if (catalog)
      out << "bad-cycle catalog: " << (catalog->empty() ? "all bad cycles catalogued" : "violations") << "\n";
    else
      out << "bad-cycle catalog: not applicable (graph not in G)\n";
  }
  return clean ? exit_ok : exit_finding;
}

int cmd_fixture(const RunConfig& c, std::ostream& out) {
  std::vector<const Fixture*> chosen;
  if (c.fixture == "all")
    for (const Fixture& f : fixtures()) chosen.push_back(&f);
  else
    chosen.push_back(&fixture(c.fixture));
  for (const Fixture* f : chosen) {
    std::string text = emit_rotation_text(f->graph, f->name + ": " + f->description);
    if (c.output_dir.empty()) {
      out << text;
      continue;
    }
    fs::create_directories(c.output_dir);
    std::ofstream file(fs::path(c.output_dir) / (f->name + ".rot"));
    file << text;
    if (!file) throw UsageError("cannot write to '" + c.output_dir + "'");
  }
  return exit_ok;
}

json record_json(const BatchRecord& r) {
  json j = {{"index", r.index}, {"name", r.name}};
  if (r.error) {
    j["error"] = *r.error;
    return j;
  }
  j["n"] = r.n;
  j["no469_member"] = r.no469_member;
  j["G_member"] = r.g_member;
  j["colorable"] = r.colorable;
  j["audit_clean"] = r.audit_clean;
  j["extension_holds"] = r.extension_holds ? json(*r.extension_holds) : json(nullptr);
  j["non_extendable"] = r.non_extendable;
  j["contradiction"] = r.contradicts();
  return j;
}

json summary_json(const BatchSummary& s) {
  return {{"graphs", s.graphs},
          {"errors", s.errors},
          {"no469_members", s.no469_members},
          {"G_members", s.g_members},
          {"colorable", s.colorable},
          {"uncolorable", s.uncolorable},
          {"audit_clean", s.audit_clean},
          {"extension_holds", s.extension_holds},
          {"extension_fails", s.extension_fails},
          {"extension_skipped", s.extension_skipped},
          {"contradictions", s.contradictions}};
}

int cmd_batch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::vector<BatchInput> inputs;
  std::optional<InputError> corruption;
  const std::size_t limit = c.limit ? static_cast<std::size_t>(*c.limit) : SIZE_MAX;
  if (fs::is_directory(c.input)) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(c.input))
      if (e.is_regular_file() && e.path().extension() == ".rot") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const fs::path& p : files) {
      if (inputs.size() >= limit) break;
      BatchInput in{p.filename().string(), std::nullopt, std::nullopt};
      try {
        in.graph = parse_rotation_text(read_file(p.string()));
      } catch (const InputError& e) {
        in.error = describe(e);
      }
      inputs.push_back(std::move(in));
    }
  } else {
    const std::string data = read_file(c.input);
    if (resolve_format(c) == InputFormat::Rot) {
      BatchInput in{fs::path(c.input).filename().string(), std::nullopt, std::nullopt};
      try {
        in.graph = parse_rotation_text(data);
      } catch (const InputError& e) {
        in.error = describe(e);
      }
      inputs.push_back(std::move(in));
    } else {
      PlanarCodeSplit split = split_planar_code({reinterpret_cast<const std::uint8_t*>(data.data()), data.size()});
      corruption = split.corruption;
      for (std::size_t i = 0; i < split.records.size() && inputs.size() < limit; ++i) {
        BatchInput in{"#" + std::to_string(i), std::nullopt, std::nullopt};
        try {
          in.graph = build_planar_code_record(split.records[i]);
        } catch (const InputError& e) {
          in.error = describe(e.with_graph_index(static_cast<int>(i)));
        }
        inputs.push_back(std::move(in));
      }
      if (c.limit && inputs.size() >= limit) corruption.reset();
    }
  }

  std::vector<BatchRecord> records = c.serial ? batch_process_serial(inputs) : batch_process_parallel(inputs);
  BatchSummary s = summarize(records);
  if (c.json) {
    json recs = json::array();
    for (const BatchRecord& r : records) recs.push_back(record_json(r));
    json body = {{"records", recs}, {"summary", summary_json(s)}};
    if (corruption) body["stream_error"] = {{"message", describe(*corruption)}, {"last_good_index", static_cast<int>(records.size()) - 1}};
    out << make_report("batch", body).dump(2) << "\n";
  } else {
    for (const BatchRecord& r : records) {
      out << r.index << " " << r.name << ": ";
      if (r.error) {
        out << "error: " << *r.error << "\n";
        continue;
      }
      out << "n=" << r.n << (r.no469_member ? " no469" : "") << (r.g_member ? " G" : "")
          << (r.colorable ? " colorable" : " uncolorable") << (r.audit_clean ? " audit-clean" : "");
      if (r.extension_holds) out << (*r.extension_holds ? " extension-holds" : " extension-FAILS");
      if (r.contradicts()) out << " CONTRADICTION";
      out << "\n";
    }
    out << "summary\n";
    const json table = summary_json(s);
    for (auto& [k, v] : table.items()) out << "  " << k << ": " << v << "\n";
  }
  if (corruption) {
    err << describe(*corruption) << "; last good graph index " << static_cast<int>(records.size()) - 1 << "\n";
    return exit_input_error;
  }
  return s.contradictions ? exit_finding : exit_ok;
}

}  // namespace

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.limit && *config.limit < 1) throw UsageError("--limit must be at least 1");
    omp_set_num_threads(worker_threads());
    if (config.command == Command::Fixture) return cmd_fixture(config, out);
    if (config.command == Command::Batch) return cmd_batch(config, out, err);
    const PlaneGraph g = load_single(config);
    switch (config.command) {
      case Command::Analyze: return cmd_analyze(g, config, out);
      case Command::Class: return cmd_class(g, config, out);
      case Command::Discharge: return cmd_discharge(g, config, out);
      case Command::Color: return cmd_color(g, config, out);
      case Command::Extend: return cmd_extend(g, config, out);
      case Command::Audit: return cmd_audit(g, config, out);
      default: break;
    }
  } catch (const InputError& e) {
    err << command_name(config.command) << ": " << describe(e) << "\n";
    return exit_input_error;
  } catch (const std::exception& e) {
    err << command_name(config.command) << ": " << e.what() << "\n";
    return exit_input_error;
  }
  return exit_input_error;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discharging and 3-coloring lab for plane graphs"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format = "auto";
  std::string outer;

  auto add_common = [&](CLI::App* sub, bool single) {
    sub->add_option("-i,--input", config.input, single ? "graph file (.rot text or planar_code)"
                                                       : "planar_code stream, .rot file or directory of .rot files")
        ->required();
    sub->add_option("-f,--format", format, "input format")->check(CLI::IsMember({"auto", "rot", "pcode"}));
    sub->add_flag("--json", config.json, "emit a JSON report");
    if (single) sub->add_option("--outer", outer, "outer face walk, 1-based vertex ids");
  };

  struct Entry {
    const char* name;
    Command cmd;
    const char* help;
  };
  const Entry entries[] = {
      {"analyze", Command::Analyze, "faces, short cycles and their classification"},
      {"class", Command::Class, "membership in both graph classes"},
      {"discharge", Command::Discharge, "run the discharging rules and print the ledger"},
      {"color", Command::Color, "find a proper 3-coloring"},
      {"extend", Command::Extend, "check that boundary colorings extend"},
      {"audit", Command::Audit, "check the configurations a minimal counterexample avoids"},
  };
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_common(sub, true);
    if (e.cmd == Command::Analyze) sub->add_option("--max-cycle-len", config.max_cycle_len)->check(CLI::Range(3, 13));
    sub->callback([&config, cmd = e.cmd] { config.command = cmd; });
  }
  CLI::App* batch = app.add_subcommand("batch", "evaluate every graph of a corpus");
  add_common(batch, false);
  batch->add_option("--limit", config.limit, "process at most this many graphs")->check(CLI::PositiveNumber);
  batch->add_flag("--serial", config.serial, "use the single-threaded path");
  batch->callback([&config] { config.command = Command::Batch; });

  CLI::App* fx = app.add_subcommand("fixture", "print a built-in fixture as rotation text");
  fx->add_option("name", config.fixture, "F1..F10 or all")->required();
  fx->add_option("-o,--output-dir", config.output_dir, "write NAME.rot files here");
  fx->callback([&config] { config.command = Command::Fixture; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return exit_input_error;
  }

  config.format = format == "rot" ? InputFormat::Rot : format == "pcode" ? InputFormat::Pcode : InputFormat::Auto;
  if (!outer.empty()) {
    std::replace(outer.begin(), outer.end(), ',', ' ');
    std::istringstream ss(outer);
    std::vector<Vertex> walk;
    Vertex v;
    while (ss >> v) walk.push_back(v);
    if (!ss.eof() || walk.empty()) {
      err << "--outer: expected a list of vertex ids\n";
      return exit_input_error;
    }
    config.outer = walk;
  }
  return run_command(config, out, err);
}

}  // namespace dlab
