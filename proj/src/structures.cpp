#include "dlab/structures.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dlab {

const char* to_string(PartitionKind kind) {
  switch (kind) {
    case PartitionKind::Chord: return "chord";
    case PartitionKind::Claw: return "claw";
    case PartitionKind::Biclaw: return "biclaw";
    case PartitionKind::Triclaw: return "triclaw";
  }
  return "?";
}

namespace {

template <typename T>
std::vector<T> min_rotation_reflection(std::span<const T> seq, std::size_t* shift_out = nullptr,
                                       bool* reversed_out = nullptr) {
  const std::size_t k = seq.size();
  std::vector<T> best(seq.begin(), seq.end());
  std::size_t best_shift = 0;
  bool best_rev = false;
  std::vector<T> cand(k);
  for (int rev = 0; rev < 2; ++rev) {
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t i = 0; i < k; ++i) cand[i] = rev ? seq[(s + k - i) % k] : seq[(s + i) % k];
      if (cand < best) {
        best = cand;
        best_shift = s;
        best_rev = rev != 0;
      }
    }
  }
  if (shift_out) *shift_out = best_shift;
  if (reversed_out) *reversed_out = best_rev;
  return best;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<Vertex> neighbours_on(const PlaneGraph& g, Vertex v, const std::vector<char>& mark) {
  std::vector<Vertex> out;
  for (Vertex w : g.rotation(v)) {
    if (mark[w]) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool same_cycle(std::span<const Vertex> a, std::span<const Vertex> b) {
  if (a.size() != b.size()) return false;
  return canonical_cycle(a) == canonical_cycle(b);
}

}  // namespace

std::vector<Vertex> canonical_cycle(std::span<const Vertex> cycle) {
  return min_rotation_reflection(cycle);
}

std::vector<int> canonical_cyclic_signature(std::span<const int> lengths) {
  return min_rotation_reflection(lengths);
}

// ---------------------------------------------------------------------------
// Sides

bool CycleGeometry::is_cycle_edge(Vertex a, Vertex b) const {
  const std::size_t k = cycle.size();
  for (std::size_t i = 0; i < k; ++i) {
    Vertex x = cycle[i];
    Vertex y = cycle[(i + 1) % k];
    if ((x == a && y == b) || (x == b && y == a)) return true;
  }
  return false;
}

bool CycleGeometry::edge_inside(const PlaneGraph& g, Vertex a, Vertex b) const {
  return face_inside[g.face_of_dart(a, b)] != 0;
}

CycleGeometry cycle_geometry(const PlaneGraph& g, std::span<const Vertex> cycle) {
  const std::size_t k = cycle.size();
  CycleGeometry geo;
  geo.cycle.assign(cycle.begin(), cycle.end());
  geo.on_cycle.assign(g.n(), 0);
  if (k < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  for (Vertex v : cycle) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("cycle vertex out of range");
    if (geo.on_cycle[v]) throw std::invalid_argument("cycle repeats a vertex");
    geo.on_cycle[v] = 1;
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!g.adjacent(cycle[i], cycle[(i + 1) % k])) {
      throw std::invalid_argument("not a cycle of the graph: " + std::to_string(cycle[i] + 1) + " and " +
                                  std::to_string(cycle[(i + 1) % k] + 1) + " are not adjacent");
    }
  }

  UnionFind uf(g.face_count());
  for (const Edge& e : g.edges()) {
    if (geo.on_cycle[e.u] && geo.on_cycle[e.v] && geo.is_cycle_edge(e.u, e.v)) continue;
    auto [f1, f2] = g.faces_of_edge(e.u, e.v);
    uf.unite(f1, f2);
  }
  const int outside = uf.find(g.outer_face());
  geo.face_inside.assign(g.face_count(), 0);
  for (FaceId f = 0; f < g.face_count(); ++f) geo.face_inside[f] = uf.find(f) != outside;

  geo.vertex_inside.assign(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (geo.on_cycle[v]) continue;
    FaceId f = g.faces_at(v).front();
    if (geo.face_inside[f]) {
      geo.vertex_inside[v] = 1;
      geo.interior.push_back(v);
    } else {
      geo.exterior.push_back(v);
    }
  }
  return geo;
}

Sides cycle_sides(const PlaneGraph& g, std::span<const Vertex> cycle) {
  CycleGeometry geo = cycle_geometry(g, cycle);
  return Sides{std::move(geo.interior), std::move(geo.exterior)};
}

// ---------------------------------------------------------------------------
// Bad partitions

namespace {

BadPartition make_partition(const PlaneGraph& g, const CycleGeometry& geo, PartitionKind kind,
                            std::vector<Vertex> anchors, std::vector<Edge> legs) {
  const int n = g.n();
  const std::size_t k = geo.cycle.size();
  std::vector<std::set<Vertex>> h_adj(n);
  for (std::size_t i = 0; i < k; ++i) {
    Vertex a = geo.cycle[i];
    Vertex b = geo.cycle[(i + 1) % k];
    h_adj[a].insert(b);
    h_adj[b].insert(a);
  }
  for (const Edge& e : legs) {
    h_adj[e.u].insert(e.v);
    h_adj[e.v].insert(e.u);
  }
  // Restrict the embedding of g to H = C + T.
  std::vector<std::vector<Vertex>> rot(n);
  for (Vertex v = 0; v < n; ++v) {
    if (h_adj[v].empty()) continue;
    for (Vertex w : g.rotation(v)) {
      if (h_adj[v].count(w)) rot[v].push_back(w);
    }
  }
  std::vector<Face> faces = derive_faces(rot);

  std::vector<int> cycle_pos(n, -1);
  for (std::size_t i = 0; i < k; ++i) cycle_pos[geo.cycle[i]] = static_cast<int>(i);

  struct Cell {
    std::vector<Vertex> walk;
    int arc_start;  // smallest cycle-edge index in the cell, -1 if none
  };
  std::vector<Cell> inner_cells;
  std::vector<Cell> arc_cells;
  bool dropped_outside = false;
  for (const Face& f : faces) {
    if (!dropped_outside && f.size() == static_cast<int>(k) &&
        std::all_of(f.boundary.begin(), f.boundary.end(), [&](Vertex v) { return cycle_pos[v] >= 0; })) {
      dropped_outside = true;
      continue;
    }
    int arc = -1;
    const int m = f.size();
    for (int i = 0; i < m; ++i) {
      Vertex a = f.boundary[i];
      Vertex b = f.boundary[(i + 1) % m];
      int pa = cycle_pos[a];
      int pb = cycle_pos[b];
      if (pa < 0 || pb < 0) continue;
      int idx = -1;
      if ((pa + 1) % static_cast<int>(k) == pb) idx = pa;
      else if ((pb + 1) % static_cast<int>(k) == pa) idx = pb;
      if (idx >= 0 && (arc < 0 || idx < arc)) arc = idx;
    }
    Cell c{canonical_cycle(f.boundary), arc};
    (arc < 0 ? inner_cells : arc_cells).push_back(std::move(c));
  }
  std::sort(inner_cells.begin(), inner_cells.end(), [](const Cell& a, const Cell& b) {
    return a.walk.size() != b.walk.size() ? a.walk.size() < b.walk.size() : a.walk < b.walk;
  });
  std::sort(arc_cells.begin(), arc_cells.end(), [](const Cell& a, const Cell& b) { return a.arc_start < b.arc_start; });

  std::vector<int> arc_lengths;
  for (const Cell& c : arc_cells) arc_lengths.push_back(static_cast<int>(c.walk.size()));
  std::size_t shift = 0;
  bool reversed = false;
  std::vector<int> arc_sig = min_rotation_reflection<int>(arc_lengths, &shift, &reversed);

  BadPartition p;
  p.kind = kind;
  p.anchors = std::move(anchors);
  std::sort(p.anchors.begin(), p.anchors.end());
  p.legs = std::move(legs);
  std::sort(p.legs.begin(), p.legs.end());
  for (Cell& c : inner_cells) {
    p.signature.push_back(static_cast<int>(c.walk.size()));
    p.cells.push_back(std::move(c.walk));
  }
  const std::size_t t = arc_cells.size();
  for (std::size_t i = 0; i < t; ++i) {
    std::size_t j = reversed ? (shift + t - i) % t : (shift + i) % t;
    p.cells.push_back(arc_cells[j].walk);
  }
  p.signature.insert(p.signature.end(), arc_sig.begin(), arc_sig.end());
  return p;
}

Edge edge_of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

}  // namespace

std::vector<BadPartition> find_bad_partitions(const PlaneGraph& g, std::span<const Vertex> cycle) {
  return find_bad_partitions(g, cycle_geometry(g, cycle));
}

std::vector<BadPartition> find_bad_partitions(const PlaneGraph& g, const CycleGeometry& geo) {
  std::vector<BadPartition> out;
  const std::size_t k = geo.cycle.size();

  // Chords: inside edges joining nonconsecutive cycle vertices.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      Vertex a = geo.cycle[i];
      Vertex b = geo.cycle[j];
      if (!g.adjacent(a, b) || !geo.edge_inside(g, a, b)) continue;
      out.push_back(make_partition(g, geo, PartitionKind::Chord, {}, {edge_of(a, b)}));
    }
  }

  std::vector<std::vector<Vertex>> on_c(g.n());
  for (Vertex v : geo.interior) on_c[v] = neighbours_on(g, v, geo.on_cycle);

  // Claws.
  for (Vertex v : geo.interior) {
    const auto& nc = on_c[v];
    for (std::size_t a = 0; a < nc.size(); ++a)
      for (std::size_t b = a + 1; b < nc.size(); ++b)
        for (std::size_t c = b + 1; c < nc.size(); ++c) {
          out.push_back(make_partition(g, geo, PartitionKind::Claw, {v},
                                       {edge_of(v, nc[a]), edge_of(v, nc[b]), edge_of(v, nc[c])}));
        }
  }

  // Biclaws.
  for (Vertex u : geo.interior) {
    for (Vertex v : g.rotation(u)) {
      if (v <= u || !geo.vertex_inside[v]) continue;
      const auto& nu = on_c[u];
      const auto& nv = on_c[v];
      for (std::size_t a = 0; a < nu.size(); ++a)
        for (std::size_t b = a + 1; b < nu.size(); ++b)
          for (std::size_t c = 0; c < nv.size(); ++c)
            for (std::size_t d = c + 1; d < nv.size(); ++d) {
              out.push_back(make_partition(g, geo, PartitionKind::Biclaw, {u, v},
                                           {edge_of(u, v), edge_of(u, nu[a]), edge_of(u, nu[b]),
                                            edge_of(v, nv[c]), edge_of(v, nv[d])}));
            }
    }
  }

  // Triclaws.
  for (Vertex u : geo.interior) {
    for (Vertex v : g.rotation(u)) {
      if (v <= u || !geo.vertex_inside[v]) continue;
      for (Vertex w : g.rotation(v)) {
        if (w <= v || !geo.vertex_inside[w] || !g.adjacent(u, w)) continue;
        for (Vertex up : on_c[u])
          for (Vertex vp : on_c[v])
            for (Vertex wp : on_c[w]) {
              out.push_back(make_partition(g, geo, PartitionKind::Triclaw, {u, v, w},
                                           {edge_of(u, v), edge_of(v, w), edge_of(u, w), edge_of(u, up),
                                            edge_of(v, vp), edge_of(w, wp)}));
            }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Triangles and vertex classes

std::vector<Vertex> common_neighbours(const PlaneGraph& g, Vertex a, Vertex b) {
  std::vector<Vertex> out;
  for (Vertex t : g.rotation(a)) {
    if (t != b && g.adjacent(t, b)) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool on_triangle(const PlaneGraph& g, Vertex a, Vertex b) { return !common_neighbours(g, a, b).empty(); }

bool is_triangular_vertex(const PlaneGraph& g, Vertex v) {
  for (Vertex w : g.rotation(v)) {
    if (on_triangle(g, v, w)) return true;
  }
  return false;
}

bool is_bad_vertex(const PlaneGraph& g, Vertex v) {
  return !g.is_external(v) && g.degree(v) == 3 && is_triangular_vertex(g, v);
}

bool face_is_triangular(const PlaneGraph& g, const Face& f) {
  const int k = f.size();
  if (!f.simple) return false;
  for (int i = 0; i < k; ++i) {
    Vertex a = f.boundary[i];
    Vertex b = f.boundary[(i + 1) % k];
    for (Vertex t : common_neighbours(g, a, b)) {
      // A 3-face does not count as adjacent to itself.
      if (!(k == 3 && std::find(f.boundary.begin(), f.boundary.end(), t) != f.boundary.end())) return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Cycles

std::vector<std::vector<Vertex>> enumerate_cycle_sequences(const PlaneGraph& g, int max_len) {
  max_len = std::min(max_len, 13);
  std::vector<std::vector<Vertex>> out;
  const int n = g.n();
  std::vector<char> used(n, 0);
  std::vector<Vertex> path;
  // Anchor = smallest vertex of the cycle; direction fixed by path[1] < last.
  auto dfs = [&](auto&& self, Vertex s, Vertex x) -> void {
    for (Vertex y : g.rotation(x)) {
      if (y == s) {
        if (path.size() >= 3 && path[1] < path.back()) out.push_back(path);
        continue;
      }
      if (y < s || used[y] || static_cast<int>(path.size()) >= max_len) continue;
      used[y] = 1;
      path.push_back(y);
      self(self, s, y);
      path.pop_back();
      used[y] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    used[s] = 1;
    path.assign(1, s);
    dfs(dfs, s, s);
    used[s] = 0;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

CycleRecord classify_cycle(const PlaneGraph& g, std::span<const Vertex> cycle) {
  CycleGeometry geo = cycle_geometry(g, cycle);
  CycleRecord r;
  r.vertices = canonical_cycle(cycle);
  r.length = static_cast<int>(cycle.size());
  r.interior = geo.interior;
  r.exterior = geo.exterior;

  for (const Face& f : g.faces()) {
    if (f.simple && same_cycle(f.boundary, cycle)) {
      r.flags.facial = true;
      break;
    }
  }
  r.flags.separating = !geo.interior.empty() && !geo.exterior.empty();

  r.partitions = find_bad_partitions(g, geo);
  const bool has_claw_like = std::any_of(r.partitions.begin(), r.partitions.end(),
                                         [](const BadPartition& p) { return p.kind != PartitionKind::Chord; });
  if (r.length <= 12) {
    r.flags.bad = has_claw_like;
    r.flags.good = !has_claw_like;
  }
  if (r.length == 9) {
    for (const BadPartition& p : r.partitions) {
      if ((p.kind == PartitionKind::Chord && p.signature == std::vector<int>{3, 8}) ||
          (p.kind == PartitionKind::Claw && p.signature == std::vector<int>{5, 5, 5})) {
        r.flags.special9 = true;
      }
    }
  }

  const std::size_t k = cycle.size();
  std::set<Triangle> seen;
  for (std::size_t i = 0; i < k; ++i) {
    Vertex a = cycle[i];
    Vertex b = cycle[(i + 1) % k];
    for (Vertex t : common_neighbours(g, a, b)) {
      Triangle tri{a, b, t};
      std::sort(tri.begin(), tri.end());
      if (k == 3 && geo.on_cycle[t]) continue;  // the cycle itself
      if (!seen.insert(tri).second) continue;
      r.adjacent_triangles.push_back(tri);
      bool outside = true;
      for (auto [x, y] : {std::pair{a, t}, std::pair{b, t}}) {
        if (geo.on_cycle[x] && geo.on_cycle[y] && geo.is_cycle_edge(x, y)) continue;
        if (geo.edge_inside(g, x, y)) outside = false;
      }
      if (outside) r.flags.ext_triangular = true;
    }
  }
  std::sort(r.adjacent_triangles.begin(), r.adjacent_triangles.end());
  r.flags.triangular = !r.adjacent_triangles.empty();
  return r;
}

std::vector<CycleRecord> enumerate_cycles(const PlaneGraph& g, int max_len) {
  std::vector<CycleRecord> out;
  for (const auto& c : enumerate_cycle_sequences(g, max_len)) out.push_back(classify_cycle(g, c));
  return out;
}

// ---------------------------------------------------------------------------
// Paths and faces

std::vector<Path> find_splitting_paths(const PlaneGraph& g, std::span<const Vertex> outer, int len) {
  const Face& f0 = g.face(g.outer_face());
  if (!f0.simple || !same_cycle(f0.boundary, outer)) {
    throw std::invalid_argument("splitting paths need the boundary of the outer face");
  }
  if (len < 2 || len > 5) throw std::invalid_argument("splitting path length must be in 2..5");
  std::vector<Path> out;
  const int n = g.n();
  std::vector<char> on_d(n, 0);
  for (Vertex v : outer) on_d[v] = 1;
  std::vector<char> used(n, 0);
  Path path;
  auto dfs = [&](auto&& self, Vertex x) -> void {
    const int edges = static_cast<int>(path.size()) - 1;
    for (Vertex y : g.rotation(x)) {
      if (used[y]) continue;
      if (on_d[y]) {
        if (edges + 1 == len && path.front() < y) {
          path.push_back(y);
          out.push_back(path);
          path.pop_back();
        }
        continue;
      }
      if (edges + 1 >= len) continue;
      used[y] = 1;
      path.push_back(y);
      self(self, y);
      path.pop_back();
      used[y] = 0;
    }
  };
  for (Vertex s : outer) {
    used[s] = 1;
    path.assign(1, s);
    dfs(dfs, s);
    used[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> find_good_paths(const PlaneGraph& g, const Face& f) {
  std::vector<Path> out;
  const int k = f.size();
  if (!f.simple || k < 4) return out;
  auto internal3 = [&](Vertex v) { return !g.is_external(v) && g.degree(v) == 3; };
  for (int i = 0; i < k; ++i) {
    Path p{f.boundary[i], f.boundary[(i + 1) % k], f.boundary[(i + 2) % k], f.boundary[(i + 3) % k]};
    if (!std::all_of(p.begin(), p.end(), internal3)) continue;
    if (on_triangle(g, p[0], p[1]) || on_triangle(g, p[2], p[3])) out.push_back(std::move(p));
  }
  return out;
}

bool is_light_7face(const PlaneGraph& g, const Face& f) {
  if (f.size() != 7 || !f.simple) return false;
  if (!face_is_triangular(g, f)) return false;
  for (Vertex v : f.boundary) {
    if (g.is_external(v)) return false;
    if (!is_triangular_vertex(g, v) && g.degree(v) != 3) return false;
  }
  return true;
}

FaceVertexClasses classify_face_vertices(const PlaneGraph& g, const Face& f) {
  if (!f.simple) throw std::invalid_argument("face boundary is not a simple cycle");
  FaceVertexClasses out;
  const int k = f.size();
  std::vector<char> bad(k);
  for (int i = 0; i < k; ++i) bad[i] = is_bad_vertex(g, f.boundary[i]);
  for (int i = 0; i < k; ++i) {
    Vertex v = f.boundary[i];
    if (bad[i]) {
      out.d.push_back(v);
      continue;
    }
    int bad_nbrs = bad[(i + k - 1) % k] + bad[(i + 1) % k];
    (bad_nbrs == 2 ? out.a : bad_nbrs == 1 ? out.b : out.c).push_back(v);
  }
  for (auto* s : {&out.a, &out.b, &out.c, &out.d}) std::sort(s->begin(), s->end());
  auto count = [](const std::vector<Vertex>& s) { return static_cast<long long>(s.size()); };
  out.star_bound = Rational(1, 3) * count(out.a) + Rational(7, 24) * count(out.b) + Rational(1, 6) * count(out.c) +
                   Rational(1, 3) * k - Rational(4);
  return out;
}

}  // namespace dlab
