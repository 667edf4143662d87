#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dlab {

// Vertices are 0-based internally; both file formats use 1-based ids.
using Vertex = int;
using FaceId = int;

struct Edge {
  Vertex u;
  Vertex v;  // u < v
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Face {
  FaceId id = 0;
  // Cyclic walk; boundary[i] -> boundary[i+1] is a dart of the face.
  std::vector<Vertex> boundary;
  int size() const { return static_cast<int>(boundary.size()); }
  // True when the walk visits no vertex twice and has length >= 3.
  bool simple = false;
};

enum class InputErrorKind {
  Syntax,
  VertexRange,
  Asymmetric,
  Loop,
  ParallelEdge,
  Disconnected,
  EulerViolation,
  OuterFace,
  Truncated,
  Unsupported,
};

const char* to_string(InputErrorKind kind);

class InputError : public std::runtime_error {
 public:
  InputError(InputErrorKind kind, const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(what), kind_(kind), line_(line), column_(column) {}

  InputErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }
  // Position of the offending graph in a multi-graph stream, if any.
  std::optional<int> graph_index() const { return graph_index_; }
  InputError with_graph_index(int index) const {
    InputError e = *this;
    e.graph_index_ = index;
    return e;
  }

 private:
  InputErrorKind kind_;
  int line_;
  int column_;
  std::optional<int> graph_index_;
};

// Connected simple plane graph given by a clockwise rotation system. Faces
// are derived on construction and the graph is immutable afterwards.
class PlaneGraph {
 public:
  // Validates and builds. `outer_walk`, when given, must match some face's
  // boundary walk up to rotation (either direction); otherwise the largest
  // face (smallest id on ties) becomes the outer face.
  static PlaneGraph from_rotation(std::vector<std::vector<Vertex>> rotation,
                                  std::optional<std::vector<Vertex>> outer_walk = std::nullopt);

  int n() const { return static_cast<int>(rotation_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  std::span<const Vertex> rotation(Vertex v) const { return rotation_[v]; }
  const std::vector<std::vector<Vertex>>& rotations() const { return rotation_; }
  int degree(Vertex v) const { return static_cast<int>(rotation_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(FaceId f) const { return faces_[f]; }

  FaceId outer_face() const { return outer_; }
  bool is_external(Vertex v) const { return external_[v]; }

  // Face containing dart u -> v.
  FaceId face_of_dart(Vertex u, Vertex v) const;
  // The two faces on either side of edge uv (equal for bridges).
  std::pair<FaceId, FaceId> faces_of_edge(Vertex u, Vertex v) const;
  // Distinct faces around v in rotation order.
  std::vector<FaceId> faces_at(Vertex v) const;

  // Same embedding with a different designated outer face.
  PlaneGraph with_outer_face(FaceId f) const;

 private:
  PlaneGraph() = default;
  void derive_faces();
  void set_outer(FaceId f);
  int index_in_rotation(Vertex v, Vertex u) const;

  std::vector<std::vector<Vertex>> rotation_;
  std::vector<std::vector<Vertex>> sorted_nbrs_;
  std::vector<std::vector<FaceId>> dart_face_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  FaceId outer_ = 0;
  std::vector<bool> external_;
};

// Trace faces of a symmetric, loop-free rotation system. Each dart is used
// exactly once. Faces are numbered in order of their first dart (vertex id,
// then rotation position).
std::vector<Face> derive_faces(const std::vector<std::vector<Vertex>>& rotation);

struct ValidationReport {
  bool simple = false;
  bool connected = false;
  bool euler = false;
  bool biconnected = false;
  bool faces_simple = false;
  std::vector<Vertex> cut_vertices;
};

ValidationReport validate(const PlaneGraph& g);

// Articulation points, ascending.
std::vector<Vertex> cut_vertices(const std::vector<std::vector<Vertex>>& adjacency);

// Rotation text: '#' comments, "n", then "v: a b c" lines (1-based,
// clockwise), optional "outer: v1 ... vk".
PlaneGraph parse_rotation_text(std::string_view text);
std::string emit_rotation_text(const PlaneGraph& g, std::string_view comment = {});

// planar_code: optional ">>planar_code<<" header, then per graph one byte n
// followed by each vertex's clockwise neighbour list terminated by 0.
struct PlanarCodeRecord {
  std::vector<std::vector<Vertex>> rotation;  // 0-based; range is checked when the graph is built
  std::size_t offset = 0;                     // byte offset of the record
};

struct PlanarCodeSplit {
  std::vector<PlanarCodeRecord> records;
  // Set when the stream ends inside a record; records before it are intact.
  std::optional<InputError> corruption;
};

PlanarCodeSplit split_planar_code(std::span<const std::uint8_t> bytes);
PlaneGraph build_planar_code_record(const PlanarCodeRecord& record);
std::vector<PlaneGraph> parse_planar_code(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> emit_planar_code(std::span<const PlaneGraph> graphs, bool header = true);

// Face sizes, sorted ascending.
std::vector<int> face_size_multiset(const PlaneGraph& g);

}  // namespace dlab
