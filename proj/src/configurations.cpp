#include "dlab/configurations.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "dlab/class_membership.hpp"

namespace dlab {

const char* to_string(AuditCheck c) {
  switch (c) {
    case AuditCheck::MinDegree: return "MinDegree";
    case AuditCheck::TwoConnected: return "TwoConnected";
    case AuditCheck::SeparatingGoodCycle: return "SeparatingGoodCycle";
    case AuditCheck::NonFacialSmallCycle: return "NonFacialSmallCycle";
    case AuditCheck::BadCycleCatalog: return "BadCycleCatalog";
    case AuditCheck::TriangularBadCycle: return "TriangularBadCycle";
    case AuditCheck::SplittingPathFace: return "SplittingPathFace";
    case AuditCheck::GoodPathOnFace: return "GoodPathOnFace";
    case AuditCheck::AllThreeFace: return "AllThreeFace";
    case AuditCheck::LightSevenPair: return "LightSevenPair";
    case AuditCheck::ChordedEight: return "ChordedEight";
    case AuditCheck::NineFaceConfig: return "NineFaceConfig";
  }
  return "?";
}

bool is_catalogued(int length, const BadPartition& p) {
  using S = std::vector<int>;
  const S& s = p.signature;
  switch (p.kind) {
    case PartitionKind::Chord: return false;
    case PartitionKind::Claw:
      return (length == 11 && (s == S{3, 7, 7} || s == S{5, 5, 7})) || (length == 12 && s == S{5, 5, 8});
    case PartitionKind::Biclaw: return length == 12 && (s == S{3, 7, 5, 7} || s == S{5, 5, 5, 7});
    case PartitionKind::Triclaw: return length == 12 && s == S{3, 7, 7, 7};
  }
  return false;
}

namespace {

std::string signature_text(const BadPartition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.signature.size(); ++i) s += (i ? "," : "") + std::to_string(p.signature[i]);
  return s + ")-" + to_string(p.kind);
}

std::string partitions_text(const CycleRecord& c) {
  std::string s;
  for (const BadPartition& p : c.partitions) s += (s.empty() ? "" : " ") + signature_text(p);
  return s.empty() ? "none" : s;
}

bool internal_deg(const PlaneGraph& g, Vertex v, int d) { return !g.is_external(v) && g.degree(v) == d; }

FaceId across(const PlaneGraph& g, Vertex a, Vertex b, FaceId here) {
  auto [p, q] = g.faces_of_edge(a, b);
  return p == here ? q : p;
}

class Auditor {
 public:
  explicit Auditor(const PlaneGraph& g, const std::vector<CycleRecord>* cycles = nullptr) : g_(g), shared_(cycles) {}

  std::vector<AuditFinding> run(AuditCheck c) {
    out_.clear();
    switch (c) {
      case AuditCheck::MinDegree: min_degree(); break;
      case AuditCheck::TwoConnected: two_connected(); break;
      case AuditCheck::SeparatingGoodCycle: separating_good(); break;
      case AuditCheck::NonFacialSmallCycle: non_facial(); break;
      case AuditCheck::BadCycleCatalog: catalog(); break;
      case AuditCheck::TriangularBadCycle: triangular_bad(); break;
      case AuditCheck::SplittingPathFace: splitting(); break;
      case AuditCheck::GoodPathOnFace: good_paths(); break;
      case AuditCheck::AllThreeFace: all_three(); break;
      case AuditCheck::LightSevenPair: light_pair(); break;
      case AuditCheck::ChordedEight: chorded_eight(); break;
      case AuditCheck::NineFaceConfig: nine_face(); break;
    }
    std::stable_sort(out_.begin(), out_.end(), [](const AuditFinding& a, const AuditFinding& b) {
      return a.vertices != b.vertices ? a.vertices < b.vertices : a.faces < b.faces;
    });
    for (AuditFinding& f : out_) f.check = c;
    return std::move(out_);
  }

 private:
  const std::vector<CycleRecord>& cycles() {
    if (shared_) return *shared_;
    if (!cycles_) cycles_ = enumerate_cycles(g_, 12);
    return *cycles_;
  }

  bool facial(std::span<const Vertex> cycle) {
    if (facial_.empty()) {
      for (const Face& f : g_.faces())
        if (f.simple) facial_.insert(canonical_cycle(f.boundary));
    }
    return facial_.count(canonical_cycle(cycle)) > 0;
  }

  void add(std::vector<Vertex> vs, std::vector<FaceId> fs, std::string detail) {
    out_.push_back({AuditCheck::MinDegree, std::move(vs), std::move(fs), std::move(detail)});
  }

  void min_degree() {
    for (Vertex v = 0; v < g_.n(); ++v)
      if (!g_.is_external(v) && g_.degree(v) < 3)
        add({v}, {}, "internal vertex of degree " + std::to_string(g_.degree(v)));
  }

  void two_connected() {
    for (Vertex c : validate(g_).cut_vertices) add({c}, {}, "cut vertex");
  }

  void separating_good() {
    for (const CycleRecord& c : cycles())
      if (c.flags.good && c.flags.separating)
        add(c.vertices, {}, "separating good " + std::to_string(c.length) + "-cycle");
  }

  void non_facial() {
    for (const CycleRecord& c : cycles()) {
      if (c.length > 9 || c.flags.facial) continue;
      if (c.length == 8 && c.interior.empty() && c.partitions.size() == 1 &&
          c.partitions[0].kind == PartitionKind::Chord &&
          (c.partitions[0].signature == std::vector<int>{3, 7} || c.partitions[0].signature == std::vector<int>{5, 5}))
        continue;
      add(c.vertices, {}, "non-facial " + std::to_string(c.length) + "-cycle, partitions: " + partitions_text(c));
    }
  }

  void catalog() {
    for (const CycleRecord& c : cycles()) {
      if (!c.flags.bad) continue;
      bool ok = std::any_of(c.partitions.begin(), c.partitions.end(),
                            [&](const BadPartition& p) { return is_catalogued(c.length, p); });
      if (!ok) add(c.vertices, {}, "bad " + std::to_string(c.length) + "-cycle, partitions: " + partitions_text(c));
    }
  }

  void triangular_bad() {
    for (const CycleRecord& c : cycles()) {
      if (!c.flags.bad) continue;
      std::string why;
      if (c.adjacent_triangles.size() > 1)
        why = "adjacent to " + std::to_string(c.adjacent_triangles.size()) + " triangles";
      if (c.flags.ext_triangular) {
        bool allowed = std::any_of(c.partitions.begin(), c.partitions.end(), [](const BadPartition& p) {
          return (p.kind == PartitionKind::Claw && p.signature == std::vector<int>{5, 5, 7}) ||
                 (p.kind == PartitionKind::Biclaw && p.signature == std::vector<int>{5, 5, 5, 7});
        });
        if (!allowed) why += std::string(why.empty() ? "" : "; ") + "ext-triangular without (5,5,7)-claw or (5,5,5,7)-biclaw";
      }
      if (!why.empty()) add(c.vertices, {}, "bad " + std::to_string(c.length) + "-cycle " + why);
    }
  }

  void splitting() {
    const Face& outer = g_.face(g_.outer_face());
    if (!outer.simple) return;
    const auto& d = outer.boundary;
    const int k = static_cast<int>(d.size());
    std::vector<int> pos(g_.n(), -1);
    for (int i = 0; i < k; ++i) pos[d[i]] = i;
    for (int len = 2; len <= 5; ++len) {
      for (const Path& p : find_splitting_paths(g_, d, len)) {
        int i = pos[p.front()];
        int j = pos[p.back()];
        // D' runs along D from p.back() forward to p.front(), D'' from p.front() to p.back().
        std::vector<Vertex> d1(p.begin(), p.end());
        for (int t = (j + 1) % k; t != i; t = (t + 1) % k) d1.push_back(d[t]);
        std::vector<Vertex> d2(p.rbegin(), p.rend());
        for (int t = (i + 1) % k; t != j; t = (t + 1) % k) d2.push_back(d[t]);
        auto face_of_size = [&](const std::vector<Vertex>& c, std::initializer_list<int> sizes) {
          return std::find(sizes.begin(), sizes.end(), static_cast<int>(c.size())) != sizes.end() && facial(c);
        };
        bool ok = false;
        std::string need;
        switch (len) {
          case 2: ok = face_of_size(d1, {3}) || face_of_size(d2, {3}); need = "a 3-face"; break;
          case 3: ok = face_of_size(d1, {5}) || face_of_size(d2, {5}); need = "a 5-face"; break;
          case 4: ok = face_of_size(d1, {5, 7}) || face_of_size(d2, {5, 7}); need = "a 5- or 7-face"; break;
          default: ok = d1.size() <= 9 || d2.size() <= 9; need = "a 9^- cycle"; break;
        }
        if (!ok)
          add(p, {}, "splitting " + std::to_string(len) + "-path divides D into " + std::to_string(d1.size()) +
                         "- and " + std::to_string(d2.size()) + "-cycles, neither is " + need);
      }
    }
  }

  void good_paths() {
    for (const Face& f : g_.faces())
      for (Path& p : find_good_paths(g_, f)) add(std::move(p), {f.id}, "good path on a " + std::to_string(f.size()) + "-face");
  }

  void all_three() {
    for (const Face& f : g_.faces()) {
      if (!f.simple || (f.size() != 5 && f.size() != 7)) continue;
      if (std::all_of(f.boundary.begin(), f.boundary.end(), [&](Vertex v) { return internal_deg(g_, v, 3); }))
        add(canonical_cycle(f.boundary), {f.id}, std::to_string(f.size()) + "-face of internal 3-vertices");
    }
  }

  // f = [x v1 .. v6] read from x towards v1.
  static std::vector<Vertex> from(const Face& f, Vertex x, bool forward) {
    const int k = f.size();
    int i = static_cast<int>(std::find(f.boundary.begin(), f.boundary.end(), x) - f.boundary.begin());
    std::vector<Vertex> out;
    for (int s = 0; s < k; ++s) out.push_back(f.boundary[(i + (forward ? s : k - s)) % k]);
    return out;
  }

  void light_pair() {
    std::vector<const Face*> sevens;
    for (const Face& f : g_.faces())
      if (f.simple && f.size() == 7 && f.id != g_.outer_face()) sevens.push_back(&f);
    for (std::size_t a = 0; a < sevens.size(); ++a) {
      for (std::size_t b = a + 1; b < sevens.size(); ++b) {
        std::vector<Vertex> va = sevens[a]->boundary, vb = sevens[b]->boundary, common;
        std::sort(va.begin(), va.end());
        std::sort(vb.begin(), vb.end());
        std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
        if (common.size() != 1) continue;
        const Vertex x = common[0];
        bool found = false;
        for (int swap = 0; swap < 2 && !found; ++swap) {
          const Face& ff = swap ? *sevens[b] : *sevens[a];
          const Face& gg = swap ? *sevens[a] : *sevens[b];
          for (int df = 0; df < 2 && !found; ++df) {
            for (int dg = 0; dg < 2 && !found; ++dg) {
              auto fv = from(ff, x, df);
              auto gu = from(gg, x, dg);
              if (!g_.adjacent(fv[1], gu[1])) continue;
              if (!internal_deg(g_, x, 4) || !internal_deg(g_, gu[1], 4)) continue;
              bool rest = true;
              for (int i = 1; i < 7; ++i) rest = rest && internal_deg(g_, fv[i], 3);
              for (int i = 2; i < 7; ++i) rest = rest && internal_deg(g_, gu[i], 3);
              if (!rest) continue;
              std::vector<Vertex> w = fv;
              w.insert(w.end(), gu.begin() + 1, gu.end());
              add(std::move(w), {ff.id, gg.id}, "two 7-faces meeting only at a 4-vertex");
              found = true;
            }
          }
        }
      }
    }
  }

  void chorded_eight() {
    for (const CycleRecord& c : cycles()) {
      if (c.length != 8) continue;
      bool found = false;
      for (int dir = 0; dir < 2 && !found; ++dir) {
        for (int i = 0; i < 8 && !found; ++i) {
          auto at = [&](int s) { return c.vertices[dir ? (i - s + 16) % 8 : (i + s) % 8]; };
          Vertex x = at(0), z = at(2);
          if (!g_.adjacent(x, z) || !internal_deg(g_, z, 4)) continue;
          bool rest = true;
          for (int s = 0; s < 8; ++s)
            if (s != 2) rest = rest && internal_deg(g_, at(s), 3);
          if (!rest) continue;
          std::vector<Vertex> w;
          for (int s = 0; s < 8; ++s) w.push_back(at(s));
          add(std::move(w), {}, "8-cycle with chord xz at an internal 4-vertex z");
          found = true;
        }
      }
    }
  }

  void nine_face() {
    for (const Face& f : g_.faces()) {
      if (!f.simple || f.size() != 9) continue;
      bool found = false;
      for (int dir = 0; dir < 2 && !found; ++dir) {
        for (int i = 0; i < 9 && !found; ++i) {
          // u[1..9]
          auto u = [&](int s) { return f.boundary[dir ? (i - (s - 1) + 18) % 9 : (i + s - 1) % 9]; };
          bool ok = true;
          for (int s : {1, 2, 3, 5, 6, 7}) ok = ok && is_bad_vertex(g_, u(s));
          if (!ok || g_.degree(u(4)) != 4) continue;
          for (auto [a, b] : {std::pair{1, 2}, std::pair{3, 4}, std::pair{4, 5}, std::pair{6, 7}})
            ok = ok && g_.face(across(g_, u(a), u(b), f.id)).size() == 3;
          if (!ok) continue;
          std::vector<Vertex> w;
          for (int s = 1; s <= 9; ++s) w.push_back(u(s));
          add(std::move(w), {f.id}, "9-face with six bad vertices around a 4-vertex on two 3-faces");
          found = true;
        }
      }
    }
  }

  const PlaneGraph& g_;
  const std::vector<CycleRecord>* shared_;
  std::optional<std::vector<CycleRecord>> cycles_;
  std::set<std::vector<Vertex>> facial_;
  std::vector<AuditFinding> out_;
};

constexpr AuditCheck all_checks[] = {
    AuditCheck::MinDegree,         AuditCheck::TwoConnected,    AuditCheck::SeparatingGoodCycle,
    AuditCheck::NonFacialSmallCycle, AuditCheck::BadCycleCatalog, AuditCheck::TriangularBadCycle,
    AuditCheck::SplittingPathFace, AuditCheck::GoodPathOnFace,  AuditCheck::AllThreeFace,
    AuditCheck::LightSevenPair,    AuditCheck::ChordedEight,    AuditCheck::NineFaceConfig,
};

}  // namespace

std::vector<AuditFinding> audit_lemma_configurations(const PlaneGraph& g) {
  const std::vector<CycleRecord> cycles = enumerate_cycles(g, 12);
  std::vector<std::vector<AuditFinding>> parts(audit_check_count);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < audit_check_count; ++i) parts[i] = Auditor(g, &cycles).run(all_checks[i]);
  std::vector<AuditFinding> all;
  for (auto& part : parts) {
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return all;
}

std::vector<AuditFinding> audit_check(const PlaneGraph& g, AuditCheck check) { return Auditor(g).run(check); }

std::vector<AuditFinding> check_bad_cycle_catalog(const PlaneGraph& g) {
  if (!check_class_G(g).member) throw std::invalid_argument("graph is not in class G");
  return audit_check(g, AuditCheck::BadCycleCatalog);
}

// ---------------------------------------------------------------------------
// Reduction conditions

namespace {

class Reduction {
 public:
  Reduction(const PlaneGraph& g, const std::vector<char>& removed) : g_(g), removed_(removed) {}

  ConditionReport identify(Vertex u, Vertex v) const {
    ConditionReport r;
    const bool du = g_.is_external(u), dv = g_.is_external(v);
    if (du && dv) {
      r.keeps_boundary = false;
      r.notes.push_back("identifies two vertices of D");
    } else if (du || dv) {
      Vertex on = du ? u : v, off = du ? v : u;
      for (Vertex w : g_.rotation(off)) {
        if (removed_[w] || !g_.is_external(w) || w == on || g_.adjacent(on, w)) continue;
        r.keeps_boundary = false;
        r.notes.push_back("creates an edge between D-vertices " + std::to_string(on) + " and " + std::to_string(w));
      }
    }
    if (g_.adjacent(u, v)) {
      r.no_short_cycle = false;
      r.notes.push_back("identified vertices are adjacent");
    }
    for (Path& p : paths(u, v, 8)) {
      const int cycle_len = static_cast<int>(p.size()) - 1;
      if (cycle_len < 2) continue;
      judge(r, std::move(p), cycle_len);
    }
    r.passed = r.keeps_boundary && r.no_short_cycle;
    return r;
  }

  ConditionReport add_edge(Vertex u, Vertex v) const {
    ConditionReport r;
    if (g_.is_external(u) && g_.is_external(v)) {
      r.keeps_boundary = false;
      r.notes.push_back("new edge joins two vertices of D");
    }
    for (Path& p : paths(u, v, 7)) {
      const int cycle_len = static_cast<int>(p.size());
      judge(r, std::move(p), cycle_len);
    }
    r.passed = r.keeps_boundary && r.no_short_cycle;
    return r;
  }

  // Length of a shortest a-b path in G - S that avoids the edge ab itself.
  int detour(Vertex a, Vertex b) const {
    std::vector<int> dist(g_.n(), -1);
    std::deque<Vertex> q{a};
    dist[a] = 0;
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop_front();
      for (Vertex y : g_.rotation(x)) {
        if (removed_[y] || dist[y] >= 0 || (x == a && y == b)) continue;
        dist[y] = dist[x] + 1;
        q.push_back(y);
      }
    }
    return dist[b];
  }

 private:
  void judge(ConditionReport& r, Path p, int cycle_len) const {
    if (cycle_len <= 6) {
      r.no_short_cycle = false;
      r.notes.push_back("creates a " + std::to_string(cycle_len) + "-cycle");
      r.created.push_back(std::move(p));
    } else if (cycle_len <= 8 && ext_triangular(p, r)) {
      r.no_short_cycle = false;
      r.notes.push_back("creates an ext-triangular " + std::to_string(cycle_len) + "-cycle");
      r.created.push_back(std::move(p));
    }
  }

  std::vector<Path> paths(Vertex u, Vertex v, int max_edges) const {
    std::vector<Path> out;
    std::vector<char> used(g_.n(), 0);
    Path cur{u};
    used[u] = 1;
    auto dfs = [&](auto&& self, Vertex x) -> void {
      for (Vertex y : g_.rotation(x)) {
        if (removed_[y] || used[y]) continue;
        if (y == v) {
          cur.push_back(y);
          out.push_back(cur);
          cur.pop_back();
          continue;
        }
        if (static_cast<int>(cur.size()) >= max_edges) continue;
        used[y] = 1;
        cur.push_back(y);
        self(self, y);
        cur.pop_back();
        used[y] = 0;
      }
    };
    dfs(dfs, u);
    std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
  }

  // Route from p.back() to p.front() whose inner vertices are all deleted.
  std::optional<Path> closure(const Path& p) const {
    const Vertex from = p.back(), to = p.front();
    std::vector<Vertex> prev(g_.n(), -2);
    std::deque<Vertex> q;
    for (Vertex s : g_.rotation(from)) {
      if (!removed_[s]) continue;
      prev[s] = from;
      q.push_back(s);
    }
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop_front();
      if (g_.adjacent(x, to)) {
        Path route;
        for (Vertex y = x; y != from; y = prev[y]) route.push_back(y);
        std::reverse(route.begin(), route.end());
        return route;
      }
      for (Vertex y : g_.rotation(x)) {
        if (!removed_[y] || prev[y] != -2) continue;
        prev[y] = x;
        q.push_back(y);
      }
    }
    return std::nullopt;
  }

  // A surviving triangle on an edge of p lying outside the cycle the new
  // structure closes up. The cycle is modelled in G by closing p through S.
  bool ext_triangular(const Path& p, ConditionReport& r) const {
    auto route = closure(p);
    std::optional<CycleGeometry> geo;
    if (route) {
      Path cycle = p;
      cycle.insert(cycle.end(), route->begin(), route->end());
      geo = cycle_geometry(g_, cycle);
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      for (Vertex t : common_neighbours(g_, p[i], p[i + 1])) {
        if (removed_[t]) continue;
        if (!geo) {
          r.notes.push_back("no route through S closes the path; triangle side taken as exterior");
          return true;
        }
        bool outside = true;
        for (Vertex a : {p[i], p[i + 1]}) {
          if (geo->on_cycle[t] && geo->is_cycle_edge(a, t)) continue;
          if (geo->edge_inside(g_, a, t)) outside = false;
        }
        if (outside) return true;
      }
    }
    return false;
  }

  const PlaneGraph& g_;
  const std::vector<char>& removed_;
};

}  // namespace

ConditionReport reduction_check(const PlaneGraph& g, const ReductionSpec& spec) {
  auto bad = [](const std::string& m) { throw std::invalid_argument(m); };
  if (spec.remove.empty()) bad("deleted set is empty");
  std::vector<char> removed(g.n(), 0);
  for (Vertex s : spec.remove) {
    if (s < 0 || s >= g.n()) bad("deleted vertex out of range");
    if (g.is_external(s)) bad("deleted vertex " + std::to_string(s) + " is external");
    if (removed[s]) bad("deleted vertex listed twice");
    removed[s] = 1;
  }
  auto check_vertex = [&](Vertex x) {
    if (x < 0 || x >= g.n()) bad("operation vertex out of range");
    if (removed[x]) bad("operation vertex " + std::to_string(x) + " is deleted");
  };
  check_vertex(spec.u);
  check_vertex(spec.v);
  if (spec.u == spec.v) bad("operation needs two distinct vertices");
  Reduction red(g, removed);
  switch (spec.kind) {
    case ReductionKind::Identify: return red.identify(spec.u, spec.v);
    case ReductionKind::AddEdge:
      if (g.adjacent(spec.u, spec.v)) bad("edge already present");
      return red.add_edge(spec.u, spec.v);
    case ReductionKind::IdentifyEdges: {
      check_vertex(spec.u2);
      check_vertex(spec.v2);
      if (!g.adjacent(spec.u, spec.u2) || !g.adjacent(spec.v, spec.v2)) bad("identified pairs must be edges");
      if (spec.u2 == spec.v2) bad("second ends must differ");
      ConditionReport r;
      r.parts.push_back(red.identify(spec.u, spec.v));
      r.parts.push_back(red.identify(spec.u2, spec.v2));
      auto free_edge = [&](Vertex a, Vertex b) {
        int d = red.detour(a, b);
        return d < 0 || d + 1 > 8;
      };
      r.edge_free = free_edge(spec.u, spec.u2) || free_edge(spec.v, spec.v2);
      if (!*r.edge_free) r.notes.push_back("both edges lie on 8^- cycles of G - S");
      for (const ConditionReport& part : r.parts) {
        r.keeps_boundary = r.keeps_boundary && part.keeps_boundary;
        r.no_short_cycle = r.no_short_cycle && part.no_short_cycle;
      }
      r.passed = r.keeps_boundary && r.no_short_cycle && *r.edge_free;
      return r;
    }
  }
  return {};
}

}  // namespace dlab
