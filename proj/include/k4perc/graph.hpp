#ifndef K4PERC_GRAPH_HPP
#define K4PERC_GRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace k4perc {

// Thrown when a run would exceed the configured memory/size guard.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a postcondition re-check fails (bad caller input or a bug);
// never silent.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Edge = std::pair<int, int>;

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<int>;

VertexSet make_vertex_set(std::vector<int> vertices, int n);
void validate_vertex_set(const VertexSet& s, int n);

enum class DuplicateEdgePolicy { Reject, Dedupe };

// Simple undirected graph on vertices 0..n-1, immutable after construction.
// Two adjacency representations: sorted neighbour lists always, plus bitset
// rows for n <= kDenseLimit (constant-time edge tests and row intersection
// for the closure and enumeration inner loops).
class Graph {
 public:
  static constexpr int kDenseLimit = 512;

  Graph() = default;
  explicit Graph(int n);

  static Graph from_edge_list(
      int n, const std::vector<Edge>& edges,
      DuplicateEdgePolicy dup = DuplicateEdgePolicy::Reject);
  static Graph complete(int n);

  int n() const { return n_; }
  std::int64_t m() const { return static_cast<std::int64_t>(edges_.size()); }

  // Edges normalized to (min,max), sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
  }

  bool has_edge(int u, int v) const;

  bool dense() const { return !rows_.empty(); }
  int row_words() const { return row_words_; }
  std::span<const std::uint64_t> row(int v) const {
    check_vertex(v);
    return {rows_.data() + static_cast<std::size_t>(v) * row_words_,
            static_cast<std::size_t>(row_words_)};
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
  }
  void build_adjacency();

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> rows_;
  int row_words_ = 0;
};

struct InducedSubgraph {
  Graph graph;       // on |vertices| relabelled vertices
  VertexSet vertices;  // vertices[i] = original index of new vertex i
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// G(n,p): each of the C(n,2) vertex pairs included independently with
// probability p. Deterministic function of (n, p, seed); linear-time in the
// output via geometric skipping over the colex pair order.
Graph sample_gnp(int n, double p, std::uint64_t seed);

}  // namespace k4perc

#endif  // K4PERC_GRAPH_HPP
