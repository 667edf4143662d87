#include "dlab/coloring.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "dlab/class_membership.hpp"
#include "dlab/structures.hpp"

namespace dlab {

bool verify_coloring(const PlaneGraph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.n()) return false;
  for (int col : c.colors) {
    if (col < -1 || col > 2) return false;
    if (col == -1 && !c.partial) return false;
  }
  for (const Edge& e : g.edges()) {
    if (c.colors[e.u] >= 0 && c.colors[e.u] == c.colors[e.v]) return false;
  }
  return true;
}

namespace {

struct State {
  std::vector<int> colors;
  std::vector<std::uint8_t> domain;
};

class Solver {
 public:
  explicit Solver(const PlaneGraph& g) : g_(g) {
    order_.resize(g.n());
    for (Vertex v = 0; v < g.n(); ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  }

  State empty() const { return {std::vector<int>(g_.n(), -1), std::vector<std::uint8_t>(g_.n(), 7)}; }

  // Colours v with c and follows forced moves. False on a conflict.
  bool assign(State& s, Vertex v, int c) const {
    if (!(s.domain[v] >> c & 1)) return false;
    s.colors[v] = c;
    s.domain[v] = static_cast<std::uint8_t>(1 << c);
    std::vector<Vertex> stack{v};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex w : g_.rotation(x)) {
        if (s.colors[w] == s.colors[x]) return false;
        if (s.colors[w] != -1) continue;
        s.domain[w] &= static_cast<std::uint8_t>(~(1 << s.colors[x]));
        if (s.domain[w] == 0) return false;
        if (std::popcount(s.domain[w]) == 1) {
          s.colors[w] = std::countr_zero(s.domain[w]);
          stack.push_back(w);
        }
      }
    }
    return true;
  }

  Vertex next_free(const State& s) const {
    for (Vertex v : order_)
      if (s.colors[v] == -1) return v;
    return -1;
  }

  bool search(State& s) const {
    Vertex v = next_free(s);
    if (v < 0) return true;
    for (int c = 0; c < 3; ++c) {
      if (!(s.domain[v] >> c & 1)) continue;
      State t = s;
      if (assign(t, v, c) && search(t)) {
        s = std::move(t);
        return true;
      }
    }
    return false;
  }

  std::uint64_t count(const State& s) const {
    Vertex v = next_free(s);
    if (v < 0) return 1;
    std::uint64_t total = 0;
    for (int c = 0; c < 3; ++c) {
      if (!(s.domain[v] >> c & 1)) continue;
      State t = s;
      if (assign(t, v, c)) total += count(t);
    }
    return total;
  }

 private:
  const PlaneGraph& g_;
  std::vector<Vertex> order_;
};

}  // namespace

std::optional<Coloring> solve_3coloring(const PlaneGraph& g, std::span<const int> pre) {
  Solver solver(g);
  State s = solver.empty();
  if (!pre.empty()) {
    if (static_cast<int>(pre.size()) != g.n()) throw std::invalid_argument("precoloring size differs from n");
    Coloring pc{std::vector<int>(pre.begin(), pre.end()), true};
    if (!verify_coloring(g, pc)) throw std::invalid_argument("precoloring is not proper");
    for (Vertex v = 0; v < g.n(); ++v) {
      if (pre[v] < 0 || s.colors[v] == pre[v]) continue;
      if (!solver.assign(s, v, pre[v])) return std::nullopt;
    }
  }
  if (!solver.search(s)) return std::nullopt;
  return Coloring{std::move(s.colors), false};
}

std::uint64_t count_3colorings(const PlaneGraph& g) {
  Solver solver(g);
  return solver.count(solver.empty());
}

std::uint64_t count_3colorings_naive(const PlaneGraph& g) {
  const int n = g.n();
  if (n > 20) throw std::length_error("naive colouring count is limited to 20 vertices");
  std::vector<int> col(n, 0);
  std::uint64_t total = 0;
  while (true) {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      if (col[e.u] == col[e.v]) {
        ok = false;
        break;
      }
    }
    total += ok;
    int i = 0;
    while (i < n && col[i] == 2) col[i++] = 0;
    if (i == n) break;
    ++col[i];
  }
  return total;
}

std::optional<Coloring> extend_precoloring(const PlaneGraph& g, std::span<const Vertex> boundary,
                                           std::span<const int> phi) {
  if (boundary.size() != phi.size()) throw std::invalid_argument("boundary and colouring sizes differ");
  std::vector<int> pre(g.n(), -1);
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    Vertex v = boundary[i];
    if (v < 0 || v >= g.n()) throw std::invalid_argument("boundary vertex out of range");
    if (phi[i] < 0 || phi[i] > 2) throw std::invalid_argument("colour outside {0,1,2}");
    if (pre[v] != -1) throw std::invalid_argument("boundary vertex repeated");
    pre[v] = phi[i];
  }
  return solve_3coloring(g, pre);
}

std::vector<std::vector<int>> enumerate_colorings(const PlaneGraph& g, std::span<const Vertex> vertices) {
  const int k = static_cast<int>(vertices.size());
  std::vector<std::vector<int>> out;
  std::vector<int> col(k, -1);
  // earlier[i]: positions j < i adjacent to vertices[i]
  std::vector<std::vector<int>> earlier(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < i; ++j)
      if (g.adjacent(vertices[i], vertices[j])) earlier[i].push_back(j);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == k) {
      out.push_back(col);
      return;
    }
    for (int c = 0; c < 3; ++c) {
      bool ok = true;
      for (int j : earlier[i]) ok = ok && col[j] != c;
      if (!ok) continue;
      col[i] = c;
      self(self, i + 1);
    }
    col[i] = -1;
  };
  rec(rec, 0);
  return out;
}

namespace {

ExtensionReport extension_header(const PlaneGraph& g) {
  const Face& outer = g.face(g.outer_face());
  if (!outer.simple) throw std::invalid_argument("outer boundary is not a simple cycle");
  ExtensionReport r;
  r.boundary = outer.boundary;
  r.boundary_good = classify_cycle(g, r.boundary).flags.good;
  r.graph_in_G = check_class_G(g).member;
  r.hypothesis_holds = r.boundary_good && r.graph_in_G;
  return r;
}

}  // namespace

ExtensionReport check_extension_property(const PlaneGraph& g) {
  ExtensionReport r = extension_header(g);
  for (const auto& phi : enumerate_colorings(g, r.boundary)) {
    ++r.total;
    if (extend_precoloring(g, r.boundary, phi)) {
      ++r.extendable;
    } else if (r.witnesses.size() < ExtensionReport::max_witnesses) {
      r.witnesses.push_back(phi);
    }
  }
  return r;
}

ExtensionReport check_extension_property_parallel(const PlaneGraph& g) {
  ExtensionReport r = extension_header(g);
  const auto phis = enumerate_colorings(g, r.boundary);
  const long m = static_cast<long>(phis.size());
  std::vector<char> extends(phis.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < m; ++i) extends[i] = extend_precoloring(g, r.boundary, phis[i]).has_value();
  r.total = phis.size();
  for (long i = 0; i < m; ++i) {
    if (extends[i]) {
      ++r.extendable;
    } else if (r.witnesses.size() < ExtensionReport::max_witnesses) {
      r.witnesses.push_back(phis[i]);
    }
  }
  return r;
}

}  // namespace dlab
