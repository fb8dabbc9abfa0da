#ifndef K4PERC_STRUCTURE_HPP
#define K4PERC_STRUCTURE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "k4perc/graph.hpp"

namespace k4perc {

// m - (2n - 3); zero for edge-minimal percolating graphs.
std::int64_t excess(const Graph& g);

struct GraphStats {
  int n;
  std::int64_t m;
  int min_degree;      // 0 for the empty graph
  int degree2_count;
  std::int64_t excess;
};
GraphStats graph_stats(const Graph& g);

// Percolating, and removing any single edge destroys percolation.
// Throws std::invalid_argument if g does not percolate.
bool is_irreducible(const Graph& g);

// Outcome of peeling degree-2 vertices off an irreducible percolating
// graph: either a seed edge or a percolating core of minimum degree >= 3,
// whose 2-neighbour closure recovers the whole graph.
struct CoreDecomposition {
  enum class Kind { SeedEdge, ThreeCore };
  Kind kind;
  VertexSet core;               // 2 vertices (seed edge) or >= 7 (core)
  std::int64_t excess;          // equals the excess of the input graph
  std::vector<int> peel_order;  // degree-2 vertices in removal order
};

// Requires g irreducible and percolating (checked). Peels the
// smallest-indexed degree-2 vertex until the remainder has minimum degree
// >= 3 or two vertices are left. All invariants of the result are
// re-verified before returning; a failure throws VerificationError.
CoreDecomposition core_decomposition(const Graph& g);

std::string core_decomposition_to_json(const CoreDecomposition& d);

// Greedily removes edges while the graph keeps percolating. The result is
// an irreducible percolating spanning subgraph of a percolating input.
// Convenience for callers that need to reduce before decomposing.
Graph irreducible_spanning_subgraph(const Graph& g);

}  // namespace k4perc

#endif  // K4PERC_STRUCTURE_HPP
