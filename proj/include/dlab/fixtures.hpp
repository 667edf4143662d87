#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dlab/plane_graph.hpp"

namespace dlab {

struct Point {
  double x;
  double y;
};

// Clockwise rotation system of a straight-line drawing. Only used to build
// fixtures and test graphs; the drawing must be crossing-free.
std::vector<std::vector<Vertex>> rotation_from_drawing(const std::vector<Point>& points,
                                                       const std::vector<std::pair<Vertex, Vertex>>& edges);

struct Fixture {
  std::string name;  // "F1" .. "F10"
  std::string description;
  PlaneGraph graph;
  std::vector<std::string> labels;  // display name per vertex: "v1", "u", "a", ...
};

// The ten built-in fixtures. Cycle vertices v1..vk get ids 0..k-1, extra
// vertices (u, a, b) follow. Hub and path fixtures use the big cycle as the
// outer face.
const std::vector<Fixture>& fixtures();
const Fixture& fixture(const std::string& name);

// Cycle C_k with a hub adjacent to the given 1-based cycle positions.
PlaneGraph cycle_with_hub(int k, const std::vector<int>& hub_positions);
PlaneGraph cycle_graph(int k);

}  // namespace dlab
