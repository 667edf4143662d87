#include "planted.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace dlab::planted {

PlaneGraph draw(const std::vector<Point>& points, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  return PlaneGraph::from_rotation(rotation_from_drawing(points, edges));
}

namespace {

Point at(double radius, double degrees) {
  double t = degrees * std::numbers::pi / 180.0;
  return {radius * std::cos(t), radius * std::sin(t)};
}

// One ring vertex: the inner vertices it is joined to and, optionally, its
// polar angle in degrees.
struct Item {
  std::vector<int> inner;
  double angle = std::numeric_limits<double>::quiet_NaN();
};

// Ring vertices are listed clockwise. Unset angles are taken from the inner
// neighbours (mean direction) or spread evenly between anchored items.
struct Builder {
  std::vector<Point> pts;
  std::vector<std::pair<Vertex, Vertex>> edges;

  void ring(std::vector<Item> items, double radius) {
    const int m = static_cast<int>(items.size());
    for (Item& it : items) {
      if (!std::isnan(it.angle) || it.inner.empty()) continue;
      double x = 0, y = 0;
      for (int v : it.inner) {
        double r = std::hypot(pts[v].x, pts[v].y);
        x += pts[v].x / r;
        y += pts[v].y / r;
      }
      it.angle = std::atan2(y, x) * 180.0 / std::numbers::pi;
    }
    std::vector<int> anchored;
    for (int i = 0; i < m; ++i)
      if (!std::isnan(items[i].angle)) anchored.push_back(i);
    std::vector<double> angle(m);
    const int k = static_cast<int>(anchored.size());
    for (int a = 0; a < k; ++a) {
      int i = anchored[a];
      int j = anchored[(a + 1) % k];
      double from = items[i].angle;
      double to = items[j].angle;
      // clockwise: angles decrease from i to j
      while (to >= from) to -= 360.0;
      int gap = (j - i + m) % m;
      if (gap == 0) gap = m;
      for (int s = 0; s < gap; ++s) angle[(i + s) % m] = from + (to - from) * s / gap;
    }
    const int first = static_cast<int>(pts.size());
    for (int i = 0; i < m; ++i) {
      pts.push_back(at(radius, angle[i]));
      for (int inner : items[i].inner) edges.emplace_back(inner, first + i);
      edges.emplace_back(first + i, first + (i + 1) % m);
    }
  }
};

Builder heptagon() {
  Builder b;
  for (int i = 0; i < 7; ++i) b.pts.push_back(at(3.0, 90.0 + 180.0 / 7 - i * 360.0 / 7));
  for (int i = 0; i < 7; ++i) b.edges.emplace_back(i, (i + 1) % 7);
  return b;
}

Builder heptagon_with_triangle() {
  Builder b = heptagon();
  b.pts.push_back(at(5.0, 90.0));
  b.edges.emplace_back(0, 7);
  b.edges.emplace_back(1, 7);
  return b;
}

}  // namespace

Planted light_seven() {
  Builder b = heptagon_with_triangle();
  b.ring({{{7}}, {}, {}, {{2}}, {}, {{3}}, {}, {{4}}, {}, {{5}}, {}, {{6}}, {}, {}}, 10.0);
  return {draw(b.pts, b.edges), {0, 1, 2, 3, 4, 5, 6}};
}

Planted good_path() {
  Builder b = heptagon_with_triangle();
  b.ring({{{7}}, {}, {}, {{2}}, {}, {{3}}, {}, {{4}}, {}, {{5}, -130.0}, {}, {}, {{5}, -152.0}, {}, {{6}}, {}, {}}, 10.0);
  return {draw(b.pts, b.edges), {0, 1, 2, 3}};
}

Planted heavy_triangle_corner() {
  Builder b = heptagon_with_triangle();
  b.ring({{{7}}, {}, {}, {}, {{1}, 70.0}, {}, {}, {{1}, 45.0}, {}, {{2}}, {}, {{3}}, {}, {{4}}, {}, {{5}}, {}, {{6}}, {}, {}}, 10.0);
  return {draw(b.pts, b.edges), {0, 1, 2, 3, 4, 5, 6}};
}

Planted external_apex() {
  Builder b = heptagon();
  b.ring({{{0, 1}}, {}, {}, {}, {{2}}, {}, {{3}}, {}, {{4}}, {}, {{5}}, {}, {{6}}, {}, {}, {}}, 10.0);
  return {draw(b.pts, b.edges), {0, 1, 2, 3, 4, 5, 6}};
}

Planted through_corner() {
  Builder b = heptagon_with_triangle();
  b.ring({{{7}, 90.0}, {}, {}, {}, {{1}}, {}, {{2}}, {}, {{3}}, {}, {{4}}, {}, {{5}}, {}, {{6}}, {}, {}, {{7}, 125.0}, {}, {}}, 10.0);
  return {draw(b.pts, b.edges), {0, 1, 2, 3, 4, 5, 6}};
}

Planted bowtie() {
  std::vector<Point> pts{{0, 0}, {-2, 1}, {-2, -1}, {2, 1}, {2, -1}};
  return {draw(pts, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}), {0}};
}

Planted pendant_pentagon() {
  std::vector<Point> pts;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < 5; ++i) {
    pts.push_back(at(3.0, 90.0 - i * 72.0));
    edges.emplace_back(i, (i + 1) % 5);
  }
  pts.push_back(at(1.0, 90.0));
  pts.push_back(at(6.0, 90.0));
  edges.emplace_back(0, 5);
  edges.emplace_back(0, 6);
  return {draw(pts, edges), {0, 1, 2, 3, 4}};
}

Planted chorded_nine_with_tail() {
  std::vector<Point> pts;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < 9; ++i) {
    pts.push_back(at(3.0, 90.0 - i * 40.0));
    edges.emplace_back(i, (i + 1) % 9);
  }
  edges.emplace_back(0, 2);
  pts.push_back(at(6.0, 90.0 - 4 * 40.0));
  edges.emplace_back(4, 9);
  return {draw(pts, edges), {0, 1, 2, 3, 4, 5, 6, 7, 8}};
}

Planted spoked_pentagon() {
  Builder b;
  for (int i = 0; i < 5; ++i) {
    b.pts.push_back(at(3.0, 90.0 - i * 72.0));
    b.edges.emplace_back(i, (i + 1) % 5);
  }
  b.ring({{{0}}, {}, {{1}}, {}, {{2}}, {}, {{3}}, {}, {{4}}, {}}, 6.0);
  return {draw(b.pts, b.edges), {0, 1, 2, 3, 4}};
}

Planted light_seven_pair() {
  // x = 0; left heptagon 0, 1..6 clockwise from the top; right heptagon 0, 7..12.
  Builder b;
  b.pts.push_back({0, 0});
  for (int i = 1; i <= 6; ++i) b.pts.push_back({-3 + 3 * std::cos(i * 2 * std::numbers::pi / 7),
                                                3 * std::sin(i * 2 * std::numbers::pi / 7)});
  for (int i = 1; i <= 6; ++i) b.pts.push_back({3 - 3 * std::cos(i * 2 * std::numbers::pi / 7),
                                                3 * std::sin(i * 2 * std::numbers::pi / 7)});
  for (int h : {0, 6}) {
    b.edges.emplace_back(0, h + 1);
    for (int i = 1; i < 6; ++i) b.edges.emplace_back(h + i, h + i + 1);
    b.edges.emplace_back(h + 6, 0);
  }
  b.edges.emplace_back(1, 7);
  b.ring({{{7}}, {{8}}, {{9}}, {{10}}, {{11}}, {{12}}, {},
          {{6}}, {{5}}, {{4}}, {{3}}, {{2}}, {}},
         12.0);
  return {draw(b.pts, b.edges), {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}};
}

Planted chorded_eight() {
  Builder b = heptagon_with_triangle();
  b.ring({{{7}}, {}, {{1}}, {}, {{2}}, {}, {{3}}, {}, {{4}}, {}, {{5}}, {}, {{6}}, {}, {}}, 10.0);
  return {draw(b.pts, b.edges), {7, 1, 2, 3, 4, 5, 6, 0}};
}

Planted nine_face() {
  Builder b;
  for (int i = 0; i < 9; ++i) {
    b.pts.push_back(at(3.0, 90.0 - i * 40.0));
    b.edges.emplace_back(i, (i + 1) % 9);
  }
  // apexes on u1u2, u3u4, u4u5, u6u7
  int apex = 9;
  for (auto [a, c] : {std::pair{0, 1}, std::pair{2, 3}, std::pair{3, 4}, std::pair{5, 6}}) {
    b.pts.push_back(at(5.0, 90.0 - (a + c) * 20.0));
    b.edges.emplace_back(a, apex);
    b.edges.emplace_back(c, apex);
    ++apex;
  }
  b.ring({{{9}}, {}, {{10}}, {{11}}, {}, {{12}}, {}, {{7}}, {}, {{8}}, {}}, 10.0);
  return {draw(b.pts, b.edges), {0, 1, 2, 3, 4, 5, 6, 7, 8}};
}

std::vector<AuditPlant> audit_plants() {
  std::vector<AuditPlant> out;
  out.push_back({AuditCheck::MinDegree, fixture("F9").graph, {10}});
  out.push_back({AuditCheck::TwoConnected, bowtie().graph, bowtie().marked});
  out.push_back({AuditCheck::SeparatingGoodCycle, pendant_pentagon().graph, pendant_pentagon().marked});
  out.push_back({AuditCheck::NonFacialSmallCycle, chorded_nine_with_tail().graph, chorded_nine_with_tail().marked});
  out.push_back({AuditCheck::BadCycleCatalog, fixture("F7").graph, {0, 1, 2, 3, 4, 5, 6, 7, 8}});
  out.push_back({AuditCheck::TriangularBadCycle, cycle_with_hub(11, {1, 2, 3}), {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}});
  out.push_back({AuditCheck::SplittingPathFace, fixture("F9").graph, {0, 3, 10}});
  out.push_back({AuditCheck::GoodPathOnFace, good_path().graph, good_path().marked});
  out.push_back({AuditCheck::AllThreeFace, spoked_pentagon().graph, spoked_pentagon().marked});
  out.push_back({AuditCheck::LightSevenPair, light_seven_pair().graph, light_seven_pair().marked});
  out.push_back({AuditCheck::ChordedEight, chorded_eight().graph, chorded_eight().marked});
  out.push_back({AuditCheck::NineFaceConfig, nine_face().graph, nine_face().marked});
  return out;
}

std::vector<PlaneGraph> audit_hosts() { return {fixture("F1").graph, fixture("F6").graph, cycle_graph(12)}; }

std::vector<PlaneGraph> rule_plants() {
  std::vector<PlaneGraph> out;
  for (auto* make : {light_seven, good_path, heavy_triangle_corner, external_apex, through_corner})
    out.push_back(make().graph);
  out.push_back(cycle_with_hub(18, {1, 7, 13}));
  out.push_back(cycle_with_hub(20, {1, 2, 8, 14}));
  out.push_back(cycle_with_hub(20, {1, 2, 10, 11}));
  for (const Fixture& f : fixtures()) out.push_back(f.graph);
  return out;
}

}  // namespace dlab::planted
