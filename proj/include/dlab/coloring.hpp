#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dlab/plane_graph.hpp"

namespace dlab {

// colors[v] in {0,1,2}, or -1 when v is not coloured.
struct Coloring {
  std::vector<int> colors;
  bool partial = false;
};

// Proper on its domain: no edge with both ends sharing a colour.
bool verify_coloring(const PlaneGraph& g, const Coloring& c);

// Deterministic backtracking: vertices by decreasing degree then id, colours
// tried 0, 1, 2; a vertex left with one colour is assigned at once.
// `pre` (size n, -1 = free) must be proper, else std::invalid_argument.
std::optional<Coloring> solve_3coloring(const PlaneGraph& g, std::span<const int> pre = {});

std::uint64_t count_3colorings(const PlaneGraph& g);
// Scans all 3^n assignments; throws std::length_error for n > 20.
std::uint64_t count_3colorings_naive(const PlaneGraph& g);

// phi[i] colours boundary[i]. Throws std::invalid_argument for colours outside
// {0,1,2}, repeated vertices, or a phi that is not proper on g[boundary].
std::optional<Coloring> extend_precoloring(const PlaneGraph& g, std::span<const Vertex> boundary,
                                           std::span<const int> phi);

// All proper 3-colourings of g[vertices], as colour vectors aligned with
// `vertices`, in lexicographic order.
std::vector<std::vector<int>> enumerate_colorings(const PlaneGraph& g, std::span<const Vertex> vertices);

struct ExtensionReport {
  std::vector<Vertex> boundary;  // outer face walk
  bool boundary_good = false;
  bool graph_in_G = false;
  bool hypothesis_holds = false;  // graph in G and boundary good
  std::uint64_t total = 0;        // proper colourings of g[V(D)]
  std::uint64_t extendable = 0;
  std::vector<std::vector<int>> witnesses;  // non-extendable, first ones in enumeration order
  static constexpr std::size_t max_witnesses = 10;

  std::uint64_t non_extendable() const { return total - extendable; }
};

// Throws std::invalid_argument when the outer boundary is not a simple cycle.
ExtensionReport check_extension_property(const PlaneGraph& g);
// Same report, boundary colourings checked across OpenMP threads.
ExtensionReport check_extension_property_parallel(const PlaneGraph& g);

}  // namespace dlab
