#ifndef K4PERC_SMALLGRAPH_HPP
#define K4PERC_SMALLGRAPH_HPP

#include <array>
#include <bit>
#include <cstdint>

#include "k4perc/graph.hpp"

namespace k4perc {

// Mask-based graph on up to 16 vertices; the inner representation of the
// exhaustive census. One uint16 adjacency row per vertex.
struct SmallGraph {
  int k = 0;
  std::array<std::uint16_t, 16> adj{};

  void add_edge(int u, int v) {
    adj[u] |= std::uint16_t(1u << v);
    adj[v] |= std::uint16_t(1u << u);
  }
  void remove_edge(int u, int v) {
    adj[u] &= std::uint16_t(~(1u << v));
    adj[v] &= std::uint16_t(~(1u << u));
  }
  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
  int degree(int v) const { return std::popcount(adj[v]); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < k; ++v) twice += degree(v);
    return twice / 2;
  }

  static SmallGraph from_graph(const Graph& g);
  Graph to_graph() const;
};

bool small_connected(const SmallGraph& g);

// In-place K4 closure by sweeping non-adjacent pairs until stable; returns
// the number of edges added.
int small_closure_in_place(SmallGraph& g);

bool small_percolates(const SmallGraph& g);

// Percolates and every single-edge removal breaks percolation.
bool small_is_irreducible(const SmallGraph& g);

// Classification of an irreducible percolating graph: number of degree-2
// vertices, and core size q from peeling smallest-indexed degree-2
// vertices (q = 2 encodes the seed-edge case).
struct SmallClassification {
  int degree2_count;
  int core_size;
};
SmallClassification small_classify(const SmallGraph& g);

// Lexicographically minimal packed adjacency bits over all relabellings
// consistent with an iterated-refinement vertex invariant. Equal codes iff
// isomorphic. k <= 16.
std::uint64_t small_canonical_code(const SmallGraph& g);

}  // namespace k4perc

#endif  // K4PERC_SMALLGRAPH_HPP
