#include "k4perc/graph.hpp"

#include <algorithm>

namespace k4perc {

VertexSet make_vertex_set(std::vector<int> vertices, int n) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  validate_vertex_set(vertices, n);
  return vertices;
}

void validate_vertex_set(const VertexSet& s, int n) {
  int prev = -1;
  for (int v : s) {
    if (v < 0 || v >= n) throw std::out_of_range("vertex set index out of range");
    if (v <= prev) throw std::invalid_argument("vertex set not sorted/unique");
    prev = v;
  }
}

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  build_adjacency();
}

Graph Graph::from_edge_list(int n, const std::vector<Edge>& edges,
                            DuplicateEdgePolicy dup) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup_at = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup_at != g.edges_.end()) {
    if (dup == DuplicateEdgePolicy::Reject)
      throw std::invalid_argument(
          "duplicate edge (" + std::to_string(dup_at->first) + "," +
          std::to_string(dup_at->second) + ")");
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()),
                   g.edges_.end());
  }
  g.build_adjacency();
  return g;
}

Graph Graph::complete(int n) {
  Graph g;
  g.n_ = n;
  g.edges_.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.edges_.emplace_back(u, v);
  g.build_adjacency();
  return g;
}

void Graph::build_adjacency() {
  adj_.assign(n_, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
  if (n_ <= kDenseLimit && n_ > 0) {
    row_words_ = (n_ + 63) / 64;
    rows_.assign(static_cast<std::size_t>(n_) * row_words_, 0);
    for (auto [u, v] : edges_) {
      rows_[static_cast<std::size_t>(u) * row_words_ + v / 64] |= 1ULL
                                                                  << (v % 64);
      rows_[static_cast<std::size_t>(v) * row_words_ + u / 64] |= 1ULL
                                                                  << (u % 64);
    }
  } else {
    row_words_ = 0;
    rows_.clear();
  }
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  if (dense())
    return (rows_[static_cast<std::size_t>(u) * row_words_ + v / 64] >>
            (v % 64)) & 1ULL;
  const auto& list = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const int target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(list.begin(), list.end(), target);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  validate_vertex_set(s, g.n());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.has_edge(s[i], s[j]))
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  InducedSubgraph out;
  out.graph = Graph::from_edge_list(static_cast<int>(s.size()), edges);
  out.vertices = s;
  return out;
}

}  // namespace k4perc
