#pragma once

// Exhaustive generation of small connected planar graphs avoiding a set of
// cycle lengths, one representative per isomorphism class.

#include <cstdint>
#include <vector>

#include "dlab/plane_graph.hpp"

namespace dlab::corpus {

// Up to 16 vertices; adj[v] is a bitmask of neighbours.
struct SmallGraph {
  int n = 0;
  std::vector<std::uint16_t> adj;

  int edge_count() const;
  friend bool operator==(const SmallGraph&, const SmallGraph&) = default;
};

struct Generated {
  std::vector<std::vector<SmallGraph>> by_order;  // by_order[n], n = 1..max_n
  std::size_t candidates = 0;                     // graphs tested before deduplication
  std::size_t total() const;
};

// Every connected planar graph on 1..max_n vertices with no cycle whose length
// is in `forbidden`. Forbidding cycle lengths is closed under taking induced
// subgraphs, so each graph arises from a smaller one plus a vertex.
Generated generate(int max_n, const std::vector<int>& forbidden);

bool is_planar(const SmallGraph& g);
// A plane embedding (Boyer-Myrvold) of a planar graph.
PlaneGraph embed(const SmallGraph& g);
bool isomorphic(const SmallGraph& a, const SmallGraph& b);
std::uint64_t invariant_hash(const SmallGraph& g);

}  // namespace dlab::corpus
