#ifndef K4PERC_BOOTSTRAP_HPP
#define K4PERC_BOOTSTRAP_HPP

#include "k4perc/graph.hpp"

namespace k4perc {

// Reference implementations of the two bootstrap dynamics. These are the
// oracles the fast engine is checked against; they favour being obviously
// correct over speed.

// Closure of G under completing K4-minus-an-edge: repeatedly add edge (u,v)
// whenever u,v are non-adjacent and some edge lies inside N(u) ∩ N(v).
// Idempotent; returns a supergraph of G on the same vertices.
Graph k4_closure_naive(const Graph& g);

// True iff the closure is the complete graph on V. Graphs on at most one
// vertex percolate vacuously; K2 percolates, the 2-vertex edgeless graph
// does not.
bool percolates(const Graph& g);

// Vertex bootstrap: starting from the active set `seeds`, repeatedly
// activate any vertex with at least 2 active neighbours. O(n + m).
VertexSet two_neighbour_closure(const Graph& g, const VertexSet& seeds);

// {u,v} activates every vertex.
bool is_contagious(const Graph& g, int u, int v);

// Contagious pair joined by an edge; throws if (u,v) is not an edge of g.
bool is_seed_edge(const Graph& g, int u, int v);

}  // namespace k4perc

#endif  // K4PERC_BOOTSTRAP_HPP
