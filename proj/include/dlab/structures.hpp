#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "dlab/plane_graph.hpp"
#include "dlab/rational.hpp"

namespace dlab {

using Path = std::vector<Vertex>;
using Triangle = std::array<Vertex, 3>;  // sorted ascending

// Lexicographically smallest rotation/reflection of a cyclic sequence.
std::vector<Vertex> canonical_cycle(std::span<const Vertex> cycle);
std::vector<int> canonical_cyclic_signature(std::span<const int> lengths);

// How a cycle splits the embedding. The shore containing the outer face is
// the exterior; when the cycle bounds the outer face, that face alone is on
// the exterior shore.
struct CycleGeometry {
  std::vector<Vertex> cycle;
  std::vector<char> on_cycle;     // per vertex
  std::vector<char> face_inside;  // per face
  std::vector<char> vertex_inside;
  std::vector<Vertex> interior;   // ascending
  std::vector<Vertex> exterior;   // ascending

  bool is_cycle_edge(Vertex a, Vertex b) const;
  // Side of an edge that is not on the cycle.
  bool edge_inside(const PlaneGraph& g, Vertex a, Vertex b) const;
};

// Throws std::invalid_argument when `cycle` is not a cycle of g.
CycleGeometry cycle_geometry(const PlaneGraph& g, std::span<const Vertex> cycle);

struct Sides {
  std::vector<Vertex> interior;
  std::vector<Vertex> exterior;
};
Sides cycle_sides(const PlaneGraph& g, std::span<const Vertex> cycle);

enum class PartitionKind { Chord, Claw, Biclaw, Triclaw };
const char* to_string(PartitionKind kind);

// A cycle together with one chord, claw, biclaw or triclaw lying in its
// closed interior. Cells are the faces of that subgraph inside the cycle.
// Cells touching the cycle are listed in cyclic order along it, normalised to
// the smallest rotation/reflection of their lengths; cells not touching the
// cycle (the inner triangle of a triclaw) come first.
struct BadPartition {
  PartitionKind kind = PartitionKind::Chord;
  std::vector<Vertex> anchors;  // interior vertices of T (chord: empty)
  std::vector<Edge> legs;       // edges of T
  std::vector<std::vector<Vertex>> cells;
  std::vector<int> signature;
};

std::vector<BadPartition> find_bad_partitions(const PlaneGraph& g, std::span<const Vertex> cycle);
std::vector<BadPartition> find_bad_partitions(const PlaneGraph& g, const CycleGeometry& geo);

struct CycleFlags {
  bool facial = false;
  bool separating = false;
  bool good = false;
  bool bad = false;
  bool special9 = false;
  bool triangular = false;
  bool ext_triangular = false;
};

struct CycleRecord {
  std::vector<Vertex> vertices;  // canonical form
  int length = 0;
  std::vector<Vertex> interior;
  std::vector<Vertex> exterior;
  CycleFlags flags;
  std::vector<Triangle> adjacent_triangles;  // triangles sharing an edge with the cycle
  std::vector<BadPartition> partitions;
};

// Simple cycles of length <= max_len (capped at 13), canonical, ordered by
// (length, vertex sequence).
std::vector<std::vector<Vertex>> enumerate_cycle_sequences(const PlaneGraph& g, int max_len);
std::vector<CycleRecord> enumerate_cycles(const PlaneGraph& g, int max_len);
CycleRecord classify_cycle(const PlaneGraph& g, std::span<const Vertex> cycle);

// Triangles (3-cycles) of g through edge ab.
std::vector<Vertex> common_neighbours(const PlaneGraph& g, Vertex a, Vertex b);
bool on_triangle(const PlaneGraph& g, Vertex a, Vertex b);
bool is_triangular_vertex(const PlaneGraph& g, Vertex v);
// Internal triangular 3-vertex.
bool is_bad_vertex(const PlaneGraph& g, Vertex v);
bool face_is_triangular(const PlaneGraph& g, const Face& f);

// Paths with `len` edges, ends on `outer` (which must bound the outer face)
// and inner vertices strictly inside it. Each path is reported once, from
// its smaller end.
std::vector<Path> find_splitting_paths(const PlaneGraph& g, std::span<const Vertex> outer, int len);

// 3-paths along the face boundary made of internal 3-vertices whose first or
// last edge lies on a triangle.
std::vector<Path> find_good_paths(const PlaneGraph& g, const Face& f);

bool is_light_7face(const PlaneGraph& g, const Face& f);

struct FaceVertexClasses {
  std::vector<Vertex> a;  // good, both boundary neighbours bad
  std::vector<Vertex> b;  // good, exactly one boundary neighbour bad
  std::vector<Vertex> c;  // good, both boundary neighbours good
  std::vector<Vertex> d;  // bad
  Rational star_bound;    // |A|/3 + 7|B|/24 + |C|/6 + |f|/3 - 4
};

// Throws std::invalid_argument for a non-simple boundary.
FaceVertexClasses classify_face_vertices(const PlaneGraph& g, const Face& f);

}  // namespace dlab
