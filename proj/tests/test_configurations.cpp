#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "dlab/configurations.hpp"
#include "dlab/fixtures.hpp"
#include "planted.hpp"

using namespace dlab;

namespace {

std::vector<AuditFinding> only(const std::vector<AuditFinding>& all, AuditCheck c) {
  std::vector<AuditFinding> out;
  for (const auto& f : all)
    if (f.check == c) out.push_back(f);
  return out;
}

std::vector<Vertex> sorted(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

PlaneGraph relabel(const PlaneGraph& g, const std::vector<Vertex>& perm) {
  std::vector<std::vector<Vertex>> rot(g.n());
  for (Vertex v = 0; v < g.n(); ++v)
    for (Vertex w : g.rotation(v)) rot[perm[v]].push_back(perm[w]);
  std::vector<Vertex> outer;
  for (Vertex v : g.face(g.outer_face()).boundary) outer.push_back(perm[v]);
  return PlaneGraph::from_rotation(std::move(rot), outer);
}

// (check, vertex set) pairs: the label-free content of an audit.
std::multiset<std::pair<int, std::vector<Vertex>>> summary(const std::vector<AuditFinding>& all,
                                                           const std::vector<Vertex>& perm) {
  std::multiset<std::pair<int, std::vector<Vertex>>> out;
  for (const auto& f : all) {
    std::vector<Vertex> vs;
    for (Vertex v : f.vertices) vs.push_back(perm.empty() ? v : perm[v]);
    out.emplace(static_cast<int>(f.check), sorted(vs));
  }
  return out;
}

}  // namespace

TEST_CASE("audit examples on fixtures") {
  auto f9 = audit_lemma_configurations(fixture("F9").graph);
  auto md = only(f9, AuditCheck::MinDegree);
  REQUIRE(md.size() == 1);
  CHECK(md[0].vertices == std::vector<Vertex>{10});

  auto f10 = only(audit_lemma_configurations(fixture("F10").graph), AuditCheck::MinDegree);
  REQUIRE(f10.size() == 2);
  CHECK(f10[0].vertices == std::vector<Vertex>{12});
  CHECK(f10[1].vertices == std::vector<Vertex>{13});

  auto f3 = audit_lemma_configurations(fixture("F3").graph);
  CHECK(f3.size() == 2);
  std::set<std::vector<Vertex>> paths;
  for (const auto& f : only(f3, AuditCheck::SplittingPathFace)) paths.insert(f.vertices);
  // v1-u-v7 and v2-u-v7
  CHECK(paths == std::set<std::vector<Vertex>>{{0, 11, 6}, {1, 11, 6}});
}

TEST_CASE("audit is deterministic and grouped by check") {
  for (const auto& fx : fixtures()) {
    auto a = audit_lemma_configurations(fx.graph);
    auto b = audit_lemma_configurations(fx.graph);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].check == b[i].check);
      CHECK(a[i].vertices == b[i].vertices);
    }
    CHECK(std::is_sorted(a.begin(), a.end(), [](const AuditFinding& x, const AuditFinding& y) {
      return static_cast<int>(x.check) < static_cast<int>(y.check);
    }));
    for (const auto& f : a)
      for (Vertex v : f.vertices) CHECK((v >= 0 && v < fx.graph.n()));
  }
}

TEST_CASE("plant-free hosts are clean") {
  for (const PlaneGraph& g : planted::audit_hosts()) CHECK(audit_lemma_configurations(g).empty());
}

TEST_CASE("each check finds its planted instance exactly once") {
  auto all = planted::audit_plants();
  REQUIRE(all.size() == static_cast<std::size_t>(audit_check_count));
  for (const auto& p : all) {
    CAPTURE(to_string(p.check));
    auto found = audit_check(p.graph, p.check);
    REQUIRE(found.size() == 1);
    CHECK(sorted(found[0].vertices) == sorted(p.witness));
    CHECK(only(audit_lemma_configurations(p.graph), p.check).size() == 1);
  }
}

TEST_CASE("audit is invariant under relabeling") {
  std::mt19937 rng(7);
  std::vector<PlaneGraph> graphs;
  for (const auto& fx : fixtures()) graphs.push_back(fx.graph);
  for (const auto& p : planted::audit_plants()) graphs.push_back(p.graph);
  for (const PlaneGraph& g : graphs) {
    std::vector<Vertex> perm(g.n());
    for (int i = 0; i < g.n(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    auto before = summary(audit_lemma_configurations(g), perm);
    auto after = summary(audit_lemma_configurations(relabel(g, perm)), {});
    CHECK(before == after);
  }
}

TEST_CASE("bad-cycle catalog") {
  CHECK(check_bad_cycle_catalog(fixture("F3").graph).empty());
  CHECK(check_bad_cycle_catalog(fixture("F8").graph).empty());
  CHECK_THROWS_AS(check_bad_cycle_catalog(fixture("F2").graph), std::invalid_argument);

  BadPartition claw;
  claw.kind = PartitionKind::Claw;
  claw.signature = {3, 7, 7};
  CHECK(is_catalogued(11, claw));
  CHECK_FALSE(is_catalogued(12, claw));
  BadPartition tri;
  tri.kind = PartitionKind::Triclaw;
  tri.signature = {3, 7, 7, 7};
  CHECK(is_catalogued(12, tri));
  BadPartition chord;
  chord.signature = {5, 8};
  CHECK_FALSE(is_catalogued(11, chord));
}

TEST_CASE("reduction examples") {
  // F8: u = 12; v1 = 0, v7 = 6.
  auto r1 = reduction_check(fixture("F8").graph, {{12}, ReductionKind::AddEdge, 0, 6});
  CHECK_FALSE(r1.keeps_boundary);
  CHECK_FALSE(r1.passed);

  // F3: u = 11; v2 = 1, v7 = 6.
  auto r2 = reduction_check(fixture("F3").graph, {{11}, ReductionKind::Identify, 1, 6});
  CHECK_FALSE(r2.keeps_boundary);
  CHECK_FALSE(r2.no_short_cycle);
  REQUIRE_FALSE(r2.created.empty());
  CHECK(r2.created[0].size() == 6);

  // F10: a = 12, b = 13; v7 = 6.
  auto r3 = reduction_check(fixture("F10").graph, {{13}, ReductionKind::AddEdge, 12, 6});
  CHECK(r3.keeps_boundary);
  CHECK(r3.no_short_cycle);
  CHECK(r3.passed);
  CHECK(r3.created.empty());
}

TEST_CASE("reduction spec validation") {
  const PlaneGraph& f3 = fixture("F3").graph;
  CHECK_THROWS_AS(reduction_check(f3, {{}, ReductionKind::Identify, 1, 6}), std::invalid_argument);
  CHECK_THROWS_AS(reduction_check(f3, {{0}, ReductionKind::Identify, 1, 6}), std::invalid_argument);
  CHECK_THROWS_AS(reduction_check(f3, {{11}, ReductionKind::Identify, 11, 6}), std::invalid_argument);
  CHECK_THROWS_AS(reduction_check(f3, {{11}, ReductionKind::AddEdge, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(reduction_check(f3, {{11}, ReductionKind::IdentifyEdges, 1, 6, 3, 3}), std::invalid_argument);
}

TEST_CASE("identify_edges reports both parts and the edge condition") {
  // C12 with a hub: delete the hub, identify v1~v7 together with v2~v8.
  PlaneGraph g = cycle_with_hub(12, {1, 5, 9});
  auto r = reduction_check(g, {{12}, ReductionKind::IdentifyEdges, 0, 6, 1, 7});
  REQUIRE(r.parts.size() == 2);
  CHECK_FALSE(r.parts[0].keeps_boundary);
  REQUIRE(r.edge_free.has_value());
  // Without the hub every edge lies only on the 12-cycle.
  CHECK(*r.edge_free);
  CHECK_FALSE(r.passed);
}

namespace {

// Literal surgery on an abstract multigraph: delete S, merge u and v into u,
// then count closed walks through u that use one former u-edge and one former
// v-edge and repeat no vertex, by length.
std::map<int, int> created_by_surgery(const PlaneGraph& g, const std::vector<Vertex>& s, Vertex u, Vertex v, int max_len) {
  std::vector<char> gone(g.n(), 0);
  for (Vertex x : s) gone[x] = 1;
  struct E { Vertex a, b; int side; };  // side 0 plain, 1 from u, 2 from v
  std::vector<E> edges;
  for (const Edge& e : g.edges()) {
    Vertex a = e.u, b = e.v;
    if (gone[a] || gone[b]) continue;
    int side = 0;
    if (a == u || b == u) side = 1;
    if (a == v || b == v) side = side ? 3 : 2;
    if (side == 3) continue;  // becomes a loop
    if (a == v) a = u;
    if (b == v) b = u;
    edges.push_back({a, b, side});
  }
  std::map<int, int> out;
  std::vector<char> used_v(g.n(), 0);
  std::vector<char> used_e(edges.size(), 0);
  // walks leave u on a u-side edge and must return on a v-side edge
  auto dfs = [&](auto&& self, Vertex x, int len) -> void {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (used_e[i]) continue;
      const E& e = edges[i];
      if (e.a != x && e.b != x) continue;
      Vertex y = e.a == x ? e.b : e.a;
      if (y == u) {
        if (e.side == 2 && len + 1 <= max_len) ++out[len + 1];
        continue;
      }
      if (used_v[y] || len + 1 >= max_len) continue;
      used_v[y] = used_e[i] = 1;
      self(self, y, len + 1);
      used_v[y] = used_e[i] = 0;
    }
  };
  used_v[u] = 1;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const E& e = edges[i];
    if (e.side != 1) continue;
    Vertex y = e.a == u ? e.b : e.a;
    used_v[y] = used_e[i] = 1;
    dfs(dfs, y, 1);
    used_v[y] = used_e[i] = 0;
  }
  return out;
}

}  // namespace

TEST_CASE("identify agrees with literal surgery on every fixture") {
  int compared = 0;
  for (const auto& fx : fixtures()) {
    const PlaneGraph& g = fx.graph;
    std::vector<Vertex> internal;
    for (Vertex x = 0; x < g.n(); ++x)
      if (!g.is_external(x)) internal.push_back(x);
    for (Vertex s : internal) {
      for (Vertex u = 0; u < g.n(); ++u) {
        for (Vertex v = u + 1; v < g.n(); ++v) {
          if (u == s || v == s) continue;
          auto r = reduction_check(g, {{s}, ReductionKind::Identify, u, v});
          std::map<int, int> reported;
          for (const Path& p : r.created)
            if (p.size() - 1 <= 6) ++reported[static_cast<int>(p.size()) - 1];
          CAPTURE(fx.name);
          CAPTURE(u);
          CAPTURE(v);
          CHECK(reported == created_by_surgery(g, {s}, u, v, 6));
          ++compared;
        }
      }
    }
  }
  CHECK(compared > 0);
}
