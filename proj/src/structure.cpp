#include "k4perc/structure.hpp"

#include <algorithm>
#include <sstream>

#include "k4perc/bootstrap.hpp"
#include "k4perc/clique_process.hpp"

#include "json.hpp"

namespace k4perc {

std::int64_t excess(const Graph& g) {
  return g.m() - (2 * static_cast<std::int64_t>(g.n()) - 3);
}

GraphStats graph_stats(const Graph& g) {
  GraphStats s{g.n(), g.m(), 0, 0, excess(g)};
  if (g.n() > 0) {
    s.min_degree = g.degree(0);
    for (int v = 0; v < g.n(); ++v) {
      s.min_degree = std::min(s.min_degree, g.degree(v));
      if (g.degree(v) == 2) ++s.degree2_count;
    }
  }
  return s;
}

namespace {

Graph remove_edge(const Graph& g, const Edge& e) {
  std::vector<Edge> edges;
  edges.reserve(g.edges().size() - 1);
  for (const auto& f : g.edges())
    if (f != e) edges.push_back(f);
  return Graph::from_edge_list(g.n(), edges);
}

}  // namespace

bool is_irreducible(const Graph& g) {
  if (!percolates_fast(g))
    throw std::invalid_argument("is_irreducible: graph does not percolate");
  for (const auto& e : g.edges())
    if (percolates_fast(remove_edge(g, e))) return false;
  return true;
}

CoreDecomposition core_decomposition(const Graph& g) {
  if (!percolates_fast(g))
    throw std::invalid_argument("core_decomposition: graph does not percolate");
  if (!is_irreducible(g))
    throw std::invalid_argument("core_decomposition: graph is not irreducible");

  // Peel: repeatedly remove the smallest-indexed degree-2 vertex from the
  // induced remainder.
  std::vector<char> removed(g.n(), 0);
  std::vector<int> degree(g.n(), 0);
  for (int v = 0; v < g.n(); ++v) degree[v] = g.degree(v);
  int remaining = g.n();
  std::vector<int> peel_order;
  for (;;) {
    if (remaining == 2) break;
    int pick = -1;
    for (int v = 0; v < g.n(); ++v) {
      if (removed[v]) continue;
      if (degree[v] < 2)
        throw VerificationError(
            "core_decomposition: remainder has a vertex of degree < 2");
      if (degree[v] == 2) {
        pick = v;
        break;
      }
    }
    if (pick < 0) break;  // minimum degree >= 3
    removed[pick] = 1;
    --remaining;
    peel_order.push_back(pick);
    for (int u : g.neighbors(pick))
      if (!removed[u]) --degree[u];
  }

  CoreDecomposition out;
  out.peel_order = std::move(peel_order);
  out.excess = excess(g);
  for (int v = 0; v < g.n(); ++v)
    if (!removed[v]) out.core.push_back(v);
  out.kind = remaining == 2 ? CoreDecomposition::Kind::SeedEdge
                            : CoreDecomposition::Kind::ThreeCore;

  // The peeling above is only guaranteed to land on a valid decomposition
  // for irreducible inputs; re-verify every claimed property instead of
  // trusting it.
  const auto sub = induced_subgraph(g, out.core);
  if (out.kind == CoreDecomposition::Kind::SeedEdge) {
    if (sub.graph.m() != 1)
      throw VerificationError("core_decomposition: seed pair is not an edge");
  } else {
    const auto stats = graph_stats(sub.graph);
    if (stats.min_degree < 3)
      throw VerificationError("core_decomposition: core has degree-2 vertex");
    if (!percolates_fast(sub.graph))
      throw VerificationError("core_decomposition: core does not percolate");
  }
  if (excess(sub.graph) != out.excess)
    throw VerificationError("core_decomposition: excess mismatch");
  const auto activated = two_neighbour_closure(g, out.core);
  if (static_cast<int>(activated.size()) != g.n())
    throw VerificationError(
        "core_decomposition: core does not 2-neighbour-span the graph");
  return out;
}

std::string core_decomposition_to_json(const CoreDecomposition& d) {
  nlohmann::json j;
  j["kind"] =
      d.kind == CoreDecomposition::Kind::SeedEdge ? "seed-edge" : "three-core";
  j["core"] = d.core;
  j["excess"] = d.excess;
  j["peel_order"] = d.peel_order;
  return j.dump();
}

Graph irreducible_spanning_subgraph(const Graph& g) {
  if (!percolates_fast(g))
    throw std::invalid_argument(
        "irreducible_spanning_subgraph: graph does not percolate");
  // One pass suffices: an edge whose removal breaks percolation now stays
  // unremovable in every subgraph, since non-percolation is inherited
  // downward.
  Graph cur = g;
  for (const auto& e : g.edges()) {
    Graph next = remove_edge(cur, e);
    if (percolates_fast(next)) cur = std::move(next);
  }
  return cur;
}

}  // namespace k4perc
