#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dlab/plane_graph.hpp"

namespace dlab {

enum class Command { Analyze, Class, Discharge, Color, Extend, Audit, Batch, Fixture };
enum class InputFormat { Auto, Rot, Pcode };

struct RunConfig {
  Command command = Command::Analyze;
  std::string input;  // file, or a directory of .rot files for batch
  InputFormat format = InputFormat::Auto;
  bool json = false;
  int max_cycle_len = 13;
  std::optional<int> limit;                 // batch: at most this many graphs
  std::optional<std::vector<Vertex>> outer;  // 1-based walk
  bool serial = false;                      // batch: disable the OpenMP path
  std::string fixture;                      // fixture: name, or "all"
  std::string output_dir;                   // fixture: write F*.rot here instead of stdout
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_finding = 1;
inline constexpr int exit_input_error = 2;

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);
// Parses argv (CLI11) and runs; usage errors exit with 2.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Number of worker threads: DISCHARGE_LAB_THREADS when set and positive,
// capped by the OpenMP default.
int worker_threads();

struct BatchRecord {
  int index = 0;
  std::string name;
  std::optional<std::string> error;  // graph could not be built
  int n = 0;
  bool no469_member = false;
  bool g_member = false;
  bool colorable = false;
  bool audit_clean = false;
  // Evaluated only when the graph is in G with a good simple outer cycle.
  std::optional<bool> extension_holds;
  std::uint64_t non_extendable = 0;

  bool contradicts() const {
    return !error && ((no469_member && !colorable) || (extension_holds && !*extension_holds));
  }
  friend bool operator==(const BatchRecord&, const BatchRecord&) = default;
};

struct BatchSummary {
  int graphs = 0;
  int errors = 0;
  int no469_members = 0;
  int g_members = 0;
  int colorable = 0;
  int uncolorable = 0;
  int audit_clean = 0;
  int extension_holds = 0;
  int extension_fails = 0;
  int extension_skipped = 0;
  int contradictions = 0;

  void add(const BatchRecord& r);
  BatchSummary& operator+=(const BatchSummary& o);
  friend bool operator==(const BatchSummary&, const BatchSummary&) = default;
};

struct BatchInput {
  std::string name;
  std::optional<PlaneGraph> graph;
  std::optional<std::string> error;
};

BatchRecord evaluate_graph(int index, const BatchInput& in);
std::vector<BatchRecord> batch_process_serial(const std::vector<BatchInput>& inputs);
// One graph per OpenMP worker; records come back in input order.
std::vector<BatchRecord> batch_process_parallel(const std::vector<BatchInput>& inputs);
BatchSummary summarize(const std::vector<BatchRecord>& records);

}  // namespace dlab
