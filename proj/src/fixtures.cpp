#include "dlab/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dlab {

std::vector<std::vector<Vertex>> rotation_from_drawing(const std::vector<Point>& points,
                                                       const std::vector<std::pair<Vertex, Vertex>>& edges) {
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<Vertex>> rot(n);
  for (auto [a, b] : edges) {
    rot[a].push_back(b);
    rot[b].push_back(a);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto angle = [&](Vertex w) { return std::atan2(points[w].y - points[v].y, points[w].x - points[v].x); };
    // Clockwise means decreasing polar angle.
    std::sort(rot[v].begin(), rot[v].end(), [&](Vertex a, Vertex b) { return angle(a) > angle(b); });
  }
  return rot;
}

namespace {

std::vector<Point> polygon(int k, double radius) {
  std::vector<Point> pts;
  for (int i = 0; i < k; ++i) {
    double t = 2.0 * std::numbers::pi * i / k;
    pts.push_back({radius * std::cos(t), radius * std::sin(t)});
  }
  return pts;
}

std::vector<std::pair<Vertex, Vertex>> cycle_edges(int k) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return e;
}

std::vector<Vertex> cycle_walk(int k) {
  std::vector<Vertex> w(k);
  for (int i = 0; i < k; ++i) w[i] = i;
  return w;
}

std::vector<std::string> cycle_labels(int k) {
  std::vector<std::string> l;
  for (int i = 1; i <= k; ++i) l.push_back("v" + std::to_string(i));
  return l;
}

Fixture make(std::string name, std::string description, PlaneGraph g, std::vector<std::string> labels) {
  return Fixture{std::move(name), std::move(description), std::move(g), std::move(labels)};
}

}  // namespace

PlaneGraph cycle_graph(int k) {
  return PlaneGraph::from_rotation(rotation_from_drawing(polygon(k, 10.0), cycle_edges(k)), cycle_walk(k));
}

PlaneGraph cycle_with_hub(int k, const std::vector<int>& hub_positions) {
  auto pts = polygon(k, 10.0);
  pts.push_back({0.0, 0.0});
  auto edges = cycle_edges(k);
  for (int p : hub_positions) edges.emplace_back(k, p - 1);
  return PlaneGraph::from_rotation(rotation_from_drawing(pts, edges), cycle_walk(k));
}

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = [] {
    std::vector<Fixture> out;
    out.push_back(make("F1", "9-cycle", cycle_graph(9), cycle_labels(9)));
    {
      auto edges = cycle_edges(9);
      edges.emplace_back(0, 2);
      PlaneGraph g = PlaneGraph::from_rotation(rotation_from_drawing(polygon(9, 10.0), edges), cycle_walk(9));
      out.push_back(make("F2", "9-cycle with chord v1v3", std::move(g), cycle_labels(9)));
    }
    {
      auto labels = cycle_labels(11);
      labels.push_back("u");
      out.push_back(make("F3", "11-cycle with hub u adjacent to v1, v2, v7", cycle_with_hub(11, {1, 2, 7}), labels));
    }
    {
      std::vector<Point> pts = polygon(3, 10.0);
      pts.push_back({0.0, 0.0});
      std::vector<std::pair<Vertex, Vertex>> edges = {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {3, 2}};
      PlaneGraph g = PlaneGraph::from_rotation(rotation_from_drawing(pts, edges), cycle_walk(3));
      out.push_back(make("F4", "K4", std::move(g), {"v1", "v2", "v3", "v4"}));
    }
    out.push_back(make("F5", "K3", cycle_graph(3), cycle_labels(3)));
    out.push_back(make("F6", "5-cycle", cycle_graph(5), cycle_labels(5)));
    {
      auto labels = cycle_labels(9);
      labels.push_back("u");
      out.push_back(make("F7", "9-cycle with hub u adjacent to v1, v4, v7", cycle_with_hub(9, {1, 4, 7}), labels));
    }
    {
      auto labels = cycle_labels(12);
      labels.push_back("u");
      out.push_back(make("F8", "12-cycle with hub u adjacent to v1, v4, v7", cycle_with_hub(12, {1, 4, 7}), labels));
    }
    {
      auto labels = cycle_labels(10);
      labels.push_back("u");
      out.push_back(make("F9", "10-cycle with hub u adjacent to v1, v4", cycle_with_hub(10, {1, 4}), labels));
    }
    {
      auto pts = polygon(12, 10.0);
      pts.push_back({3.3, 0.0});   // a
      pts.push_back({-3.3, 0.0});  // b
      auto edges = cycle_edges(12);
      edges.emplace_back(0, 12);
      edges.emplace_back(12, 13);
      edges.emplace_back(13, 6);
      PlaneGraph g = PlaneGraph::from_rotation(rotation_from_drawing(pts, edges), cycle_walk(12));
      auto labels = cycle_labels(12);
      labels.push_back("a");
      labels.push_back("b");
      out.push_back(make("F10", "12-cycle with internal path v1-a-b-v7", std::move(g), labels));
    }
    return out;
  }();
  return all;
}

const Fixture& fixture(const std::string& name) {
  for (const Fixture& f : fixtures()) {
    if (f.name == name) return f;
  }
  throw std::out_of_range("unknown fixture '" + name + "'");
}

}  // namespace dlab
