#include "dlab/plane_graph.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

namespace dlab {

const char* to_string(InputErrorKind kind) {
  switch (kind) {
    case InputErrorKind::Syntax: return "syntax";
    case InputErrorKind::VertexRange: return "vertex-range";
    case InputErrorKind::Asymmetric: return "asymmetric-rotation";
    case InputErrorKind::Loop: return "loop";
    case InputErrorKind::ParallelEdge: return "parallel-edge";
    case InputErrorKind::Disconnected: return "disconnected";
    case InputErrorKind::EulerViolation: return "euler-violation";
    case InputErrorKind::OuterFace: return "outer-face";
    case InputErrorKind::Truncated: return "truncated";
    case InputErrorKind::Unsupported: return "unsupported";
  }
  return "unknown";
}

namespace {

bool is_connected(const std::vector<std::vector<Vertex>>& adj) {
  if (adj.empty()) return false;
  std::vector<char> seen(adj.size(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == adj.size();
}

// Index of u in rotation of v, or -1.
int find_in(const std::vector<Vertex>& rot, Vertex u) {
  auto it = std::find(rot.begin(), rot.end(), u);
  return it == rot.end() ? -1 : static_cast<int>(it - rot.begin());
}

bool same_cyclic_walk(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  if (a.size() != b.size()) return false;
  const std::size_t k = a.size();
  if (k == 0) return true;
  for (std::size_t s = 0; s < k; ++s) {
    bool fwd = true;
    bool bwd = true;
    for (std::size_t i = 0; i < k && (fwd || bwd); ++i) {
      if (a[i] != b[(s + i) % k]) fwd = false;
      if (a[i] != b[(s + k - i) % k]) bwd = false;
    }
    if (fwd || bwd) return true;
  }
  return false;
}

}  // namespace

std::vector<Face> derive_faces(const std::vector<std::vector<Vertex>>& rotation) {
  const int n = static_cast<int>(rotation.size());
  std::vector<std::vector<char>> used(n);
  for (int v = 0; v < n; ++v) used[v].assign(rotation[v].size(), 0);

  std::vector<Face> faces;
  if (n == 1 && rotation[0].empty()) {
    faces.push_back(Face{0, {}, false});
    return faces;
  }
  for (Vertex s = 0; s < n; ++s) {
    for (std::size_t si = 0; si < rotation[s].size(); ++si) {
      if (used[s][si]) continue;
      Face f;
      f.id = static_cast<FaceId>(faces.size());
      Vertex u = s;
      std::size_t ui = si;
      while (!used[u][ui]) {
        used[u][ui] = 1;
        f.boundary.push_back(u);
        Vertex v = rotation[u][ui];
        int back = find_in(rotation[v], u);
        ui = (static_cast<std::size_t>(back) + 1) % rotation[v].size();
        u = v;
      }
      std::vector<Vertex> sorted = f.boundary;
      std::sort(sorted.begin(), sorted.end());
      f.simple = f.boundary.size() >= 3 &&
                 std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      faces.push_back(std::move(f));
    }
  }
  return faces;
}

PlaneGraph PlaneGraph::from_rotation(std::vector<std::vector<Vertex>> rotation,
                                     std::optional<std::vector<Vertex>> outer_walk) {
  const int n = static_cast<int>(rotation.size());
  if (n == 0) throw InputError(InputErrorKind::Syntax, "graph has no vertices");

  PlaneGraph g;
  g.sorted_nbrs_.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : rotation[v]) {
      if (w < 0 || w >= n) {
        throw InputError(InputErrorKind::VertexRange, "vertex " + std::to_string(v + 1) +
                                                          " lists neighbour " + std::to_string(w + 1) +
                                                          " outside 1.." + std::to_string(n));
      }
      if (w == v) throw InputError(InputErrorKind::Loop, "loop at vertex " + std::to_string(v + 1));
    }
    auto& s = g.sorted_nbrs_[v];
    s = rotation[v];
    std::sort(s.begin(), s.end());
    auto dup = std::adjacent_find(s.begin(), s.end());
    if (dup != s.end()) {
      throw InputError(InputErrorKind::ParallelEdge, "parallel edge " + std::to_string(v + 1) + "-" +
                                                         std::to_string(*dup + 1));
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : rotation[v]) {
      if (!std::binary_search(g.sorted_nbrs_[w].begin(), g.sorted_nbrs_[w].end(), v)) {
        throw InputError(InputErrorKind::Asymmetric, "vertex " + std::to_string(v + 1) + " lists " +
                                                         std::to_string(w + 1) + " but not conversely");
      }
      if (v < w) g.edges_.push_back(Edge{v, w});
    }
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (!is_connected(g.sorted_nbrs_)) throw InputError(InputErrorKind::Disconnected, "graph is disconnected");

  g.rotation_ = std::move(rotation);
  g.derive_faces();
  const long long euler = static_cast<long long>(n) - g.edge_count() + g.face_count();
  if (euler != 2) {
    throw InputError(InputErrorKind::EulerViolation,
                     "rotation system is not planar: n - e + f = " + std::to_string(euler) + " (" +
                         std::to_string(g.face_count()) + " faces traced)");
  }

  FaceId outer = 0;
  if (outer_walk) {
    outer = -1;
    for (const Face& f : g.faces_) {
      if (same_cyclic_walk(f.boundary, *outer_walk)) {
        outer = f.id;
        break;
      }
    }
    if (outer < 0) throw InputError(InputErrorKind::OuterFace, "outer walk does not bound a face");
  } else {
    for (const Face& f : g.faces_) {
      if (f.size() > g.faces_[outer].size()) outer = f.id;
    }
  }
  g.set_outer(outer);
  return g;
}

void PlaneGraph::derive_faces() {
  const int n = this->n();
  faces_ = dlab::derive_faces(rotation_);
  dart_face_.assign(n, {});
  for (Vertex v = 0; v < n; ++v) dart_face_[v].assign(rotation_[v].size(), -1);
  for (const Face& f : faces_) {
    const int k = f.size();
    for (int i = 0; i < k; ++i) {
      Vertex u = f.boundary[i];
      Vertex w = f.boundary[(i + 1) % k];
      dart_face_[u][find_in(rotation_[u], w)] = f.id;
    }
  }
}

void PlaneGraph::set_outer(FaceId f) {
  outer_ = f;
  external_.assign(n(), false);
  for (Vertex v : faces_[f].boundary) external_[v] = true;
}

int PlaneGraph::index_in_rotation(Vertex v, Vertex u) const { return find_in(rotation_[v], u); }

bool PlaneGraph::adjacent(Vertex u, Vertex v) const {
  const auto& s = sorted_nbrs_[u];
  return std::binary_search(s.begin(), s.end(), v);
}

FaceId PlaneGraph::face_of_dart(Vertex u, Vertex v) const {
  int i = index_in_rotation(u, v);
  if (i < 0) throw std::invalid_argument("not an edge: " + std::to_string(u + 1) + "-" + std::to_string(v + 1));
  return dart_face_[u][i];
}

std::pair<FaceId, FaceId> PlaneGraph::faces_of_edge(Vertex u, Vertex v) const {
  return {face_of_dart(u, v), face_of_dart(v, u)};
}

std::vector<FaceId> PlaneGraph::faces_at(Vertex v) const {
  std::vector<FaceId> out;
  for (FaceId f : dart_face_[v]) {
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
  if (out.empty() && !faces_.empty()) out.push_back(0);
  return out;
}

PlaneGraph PlaneGraph::with_outer_face(FaceId f) const {
  if (f < 0 || f >= face_count()) throw std::out_of_range("face id out of range");
  PlaneGraph g = *this;
  g.set_outer(f);
  return g;
}

std::vector<Vertex> cut_vertices(const std::vector<std::vector<Vertex>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_cut(n, 0);
  int timer = 0;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (Vertex w : adj[v]) {
      if (w == parent) continue;
      if (disc[w] >= 0) {
        low[v] = std::min(low[v], disc[w]);
      } else {
        ++children;
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (parent >= 0 && low[w] >= disc[v]) is_cut[v] = 1;
      }
    }
    if (parent < 0 && children > 1) is_cut[v] = 1;
  };
  for (Vertex v = 0; v < n; ++v) {
    if (disc[v] < 0) dfs(v, -1);
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) out.push_back(v);
  }
  return out;
}

ValidationReport validate(const PlaneGraph& g) {
  ValidationReport r;
  const int n = g.n();
  r.simple = true;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> s(g.rotation(v).begin(), g.rotation(v).end());
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) r.simple = false;
    if (std::binary_search(s.begin(), s.end(), v)) r.simple = false;
  }
  r.connected = is_connected(g.rotations());
  r.euler = n - g.edge_count() + g.face_count() == 2;
  r.cut_vertices = cut_vertices(g.rotations());
  r.biconnected = r.connected && n >= 3 && r.cut_vertices.empty();
  r.faces_simple = std::all_of(g.faces().begin(), g.faces().end(), [](const Face& f) { return f.simple; });
  return r;
}

// ---------------------------------------------------------------------------
// Rotation text

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    out.push_back(Token{line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

int parse_positive(const Token& t, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size() || value < 1) {
    throw InputError(InputErrorKind::Syntax,
                     "line " + std::to_string(line) + ", column " + std::to_string(t.column) +
                         ": expected a positive integer, got '" + std::string(t.text) + "'",
                     line, t.column);
  }
  return value;
}

}  // namespace

PlaneGraph parse_rotation_text(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  {
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      std::size_t first = line.find_first_not_of(" \t");
      if (first != std::string_view::npos && line[first] != '#') lines.emplace_back(lineno, line);
      if (end == text.size()) break;
      pos = end + 1;
    }
  }
  if (lines.empty()) throw InputError(InputErrorKind::Syntax, "empty input: expected vertex count", 1, 1);

  auto header = tokenize(lines[0].second);
  if (header.size() != 1) {
    throw InputError(InputErrorKind::Syntax,
                     "line " + std::to_string(lines[0].first) + ": expected a single vertex count",
                     lines[0].first, header.empty() ? 1 : header[0].column);
  }
  const int n = parse_positive(header[0], lines[0].first);

  std::vector<std::vector<Vertex>> rotation(n);
  std::vector<char> seen(n, 0);
  std::optional<std::vector<Vertex>> outer;
  int listed = 0;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto [lineno, line] = lines[li];
    auto tokens = tokenize(line);
    if (outer) {
      throw InputError(InputErrorKind::Syntax,
                       "line " + std::to_string(lineno) + ": content after the outer line", lineno,
                       tokens[0].column);
    }
    std::string_view head = tokens[0].text;
    std::vector<Token> rest(tokens.begin() + 1, tokens.end());
    // Allow "v:" and "v :" and "v:a b".
    if (head.back() != ':' && head.find(':') != std::string_view::npos) {
      std::size_t c = head.find(':');
      Token after{head.substr(c + 1), tokens[0].column + static_cast<int>(c) + 1};
      head = head.substr(0, c + 1);
      rest.insert(rest.begin(), after);
    } else if (head.back() != ':' && !rest.empty() && rest[0].text == ":") {
      rest.erase(rest.begin());
    } else if (head.back() != ':') {
      throw InputError(InputErrorKind::Syntax,
                       "line " + std::to_string(lineno) + ", column " + std::to_string(tokens[0].column) +
                           ": expected 'v:' or 'outer:'",
                       lineno, tokens[0].column);
    }
    if (head.back() == ':') head.remove_suffix(1);

    if (head == "outer") {
      std::vector<Vertex> walk;
      for (const Token& t : rest) {
        int w = parse_positive(t, lineno);
        if (w > n) {
          throw InputError(InputErrorKind::VertexRange,
                           "line " + std::to_string(lineno) + ", column " + std::to_string(t.column) +
                               ": vertex " + std::to_string(w) + " out of range",
                           lineno, t.column);
        }
        walk.push_back(w - 1);
      }
      outer = std::move(walk);
      continue;
    }
    int v = parse_positive(Token{head, tokens[0].column}, lineno);
    if (v > n) {
      throw InputError(InputErrorKind::VertexRange,
                       "line " + std::to_string(lineno) + ": vertex " + std::to_string(v) + " out of range",
                       lineno, tokens[0].column);
    }
    if (seen[v - 1]) {
      throw InputError(InputErrorKind::Syntax,
                       "line " + std::to_string(lineno) + ": vertex " + std::to_string(v) + " listed twice",
                       lineno, tokens[0].column);
    }
    seen[v - 1] = 1;
    ++listed;
    for (const Token& t : rest) {
      if (t.text.empty()) continue;
      int w = parse_positive(t, lineno);
      if (w > n) {
        throw InputError(InputErrorKind::VertexRange,
                         "line " + std::to_string(lineno) + ", column " + std::to_string(t.column) +
                             ": neighbour " + std::to_string(w) + " out of range",
                         lineno, t.column);
      }
      rotation[v - 1].push_back(w - 1);
    }
  }
  if (listed != n) {
    throw InputError(InputErrorKind::Syntax,
                     "expected " + std::to_string(n) + " vertex lines, found " + std::to_string(listed),
                     lines.back().first, 1);
  }
  return PlaneGraph::from_rotation(std::move(rotation), std::move(outer));
}

std::string emit_rotation_text(const PlaneGraph& g, std::string_view comment) {
  std::ostringstream os;
  if (!comment.empty()) os << "# " << comment << "\n";
  os << g.n() << "\n";
  for (Vertex v = 0; v < g.n(); ++v) {
    os << (v + 1) << ":";
    for (Vertex w : g.rotation(v)) os << " " << (w + 1);
    os << "\n";
  }
  os << "outer:";
  for (Vertex v : g.face(g.outer_face()).boundary) os << " " << (v + 1);
  os << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// planar_code

namespace {
constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";
}

PlanarCodeSplit split_planar_code(std::span<const std::uint8_t> bytes) {
  PlanarCodeSplit out;
  std::size_t pos = 0;
  if (bytes.size() >= 2 && bytes[0] == '>' && bytes[1] == '>') {
    // Header: ">>planar_code<<" or a variant such as ">>planar_code le<<".
    std::size_t end = 2;
    while (end + 1 < bytes.size() && !(bytes[end] == '<' && bytes[end + 1] == '<')) ++end;
    if (end + 1 >= bytes.size()) {
      out.corruption = InputError(InputErrorKind::Truncated, "unterminated planar_code header");
      return out;
    }
    std::string header(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>(end + 2));
    if (header != kPlanarCodeHeader) {
      out.corruption = InputError(InputErrorKind::Unsupported, "unsupported planar_code header '" + header + "'");
      return out;
    }
    pos = end + 2;
  }
  while (pos < bytes.size()) {
    const std::size_t start = pos;
    const int index = static_cast<int>(out.records.size());
    const int n = bytes[pos++];
    if (n == 0) {
      out.corruption = InputError(InputErrorKind::Unsupported,
                                  "graph " + std::to_string(index) + ": 2-byte planar_code entries are not supported")
                           .with_graph_index(index);
      return out;
    }
    PlanarCodeRecord rec;
    rec.offset = start;
    rec.rotation.resize(n);
    for (int v = 0; v < n; ++v) {
      while (true) {
        if (pos >= bytes.size()) {
          std::string last = index == 0 ? "none" : std::to_string(index - 1);
          out.corruption = InputError(InputErrorKind::Truncated,
                                      "graph " + std::to_string(index) +
                                          ": stream truncated inside record (last complete graph index: " + last + ")")
                               .with_graph_index(index);
          return out;
        }
        std::uint8_t b = bytes[pos++];
        if (b == 0) break;
        rec.rotation[v].push_back(static_cast<Vertex>(b) - 1);
      }
    }
    out.records.push_back(std::move(rec));
  }
  return out;
}

PlaneGraph build_planar_code_record(const PlanarCodeRecord& record) {
  return PlaneGraph::from_rotation(record.rotation);
}

std::vector<PlaneGraph> parse_planar_code(std::span<const std::uint8_t> bytes) {
  PlanarCodeSplit split = split_planar_code(bytes);
  if (split.corruption) throw *split.corruption;
  std::vector<PlaneGraph> out;
  out.reserve(split.records.size());
  for (std::size_t i = 0; i < split.records.size(); ++i) {
    try {
      out.push_back(build_planar_code_record(split.records[i]));
    } catch (const InputError& e) {
      InputError indexed(e.kind(), "graph " + std::to_string(i) + ": " + e.what());
      throw indexed.with_graph_index(static_cast<int>(i));
    }
  }
  return out;
}

std::vector<std::uint8_t> emit_planar_code(std::span<const PlaneGraph> graphs, bool header) {
  std::vector<std::uint8_t> out;
  if (header) out.insert(out.end(), kPlanarCodeHeader.begin(), kPlanarCodeHeader.end());
  for (const PlaneGraph& g : graphs) {
    if (g.n() > 255) throw std::invalid_argument("planar_code supports at most 255 vertices");
    out.push_back(static_cast<std::uint8_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) {
      for (Vertex w : g.rotation(v)) out.push_back(static_cast<std::uint8_t>(w + 1));
      out.push_back(0);
    }
  }
  return out;
}

std::vector<int> face_size_multiset(const PlaneGraph& g) {
  std::vector<int> sizes;
  for (const Face& f : g.faces()) sizes.push_back(f.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace dlab
