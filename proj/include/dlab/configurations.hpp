#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dlab/plane_graph.hpp"
#include "dlab/structures.hpp"

namespace dlab {

enum class AuditCheck {
  MinDegree,
  TwoConnected,
  SeparatingGoodCycle,
  NonFacialSmallCycle,
  BadCycleCatalog,
  TriangularBadCycle,
  SplittingPathFace,
  GoodPathOnFace,
  AllThreeFace,
  LightSevenPair,
  ChordedEight,
  NineFaceConfig,
};
inline constexpr int audit_check_count = 12;
const char* to_string(AuditCheck c);

// A structure of the graph that a minimal counterexample cannot contain.
struct AuditFinding {
  AuditCheck check = AuditCheck::MinDegree;
  std::vector<Vertex> vertices;  // cycle, path or vertex set, canonicalised
  std::vector<FaceId> faces;
  std::string detail;
};

// All twelve checks; findings grouped by check, in a fixed order within each.
std::vector<AuditFinding> audit_lemma_configurations(const PlaneGraph& g);
std::vector<AuditFinding> audit_check(const PlaneGraph& g, AuditCheck check);

// True when the partition kind and signature belong to the bad-cycle catalogue
// for a cycle of the given length.
bool is_catalogued(int length, const BadPartition& p);

// Bad 12^- cycles of length other than 11/12 or without a catalogued
// partition. Throws std::invalid_argument unless g is in class G.
std::vector<AuditFinding> check_bad_cycle_catalog(const PlaneGraph& g);

enum class ReductionKind { Identify, AddEdge, IdentifyEdges };

// Delete the internal vertices S, then identify u with v, add the edge uv, or
// identify the edges (u, u2) and (v, v2) with u onto v.
struct ReductionSpec {
  std::vector<Vertex> remove;
  ReductionKind kind = ReductionKind::Identify;
  Vertex u = -1;
  Vertex v = -1;
  Vertex u2 = -1;
  Vertex v2 = -1;
};

struct ConditionReport {
  bool keeps_boundary = true;       // (a)
  bool no_short_cycle = true;       // (b): no created 6^- cycle and no ext-triangular 7- or 8-cycle
  std::optional<bool> edge_free;    // identify_edges: one edge on no 8^- cycle of G - S
  bool passed = true;
  std::vector<Path> created;        // paths that close up into offending cycles
  std::vector<std::string> notes;
  std::vector<ConditionReport> parts;  // identify_edges: the two vertex identifications
};

// Throws std::invalid_argument for a malformed spec.
ConditionReport reduction_check(const PlaneGraph& g, const ReductionSpec& spec);

}  // namespace dlab
