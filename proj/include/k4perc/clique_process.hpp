#ifndef K4PERC_CLIQUE_PROCESS_HPP
#define K4PERC_CLIQUE_PROCESS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "k4perc/graph.hpp"

namespace k4perc {

// Order in which available merges are applied. Any policy reaches the same
// terminal cluster family; only the trace differs.
enum class MergePolicy { Fifo, Random, IndexMin };

struct MergeEvent {
  enum class Kind { Pair, Triple };
  Kind kind;
  std::array<int, 3> inputs;       // cluster ids; inputs[2] = -1 for pairs
  std::array<int, 3> input_sizes;  // vertex counts of the inputs
  std::vector<int> witness;        // pair: all shared vertices (>=2);
                                   // triple: the triangle vertices x,y,z
  int output;
  int output_size;
};

// Result of running the cluster-merging process to termination: the family
// of maximal percolating clusters, plus the full merge trace.
struct ProcessState {
  int n = 0;
  std::vector<std::vector<int>> terminal_clusters;  // each sorted, size >= 2
  std::vector<MergeEvent> trace;

  std::size_t max_cluster_size() const;
  bool spans_all_vertices() const;  // some cluster covers every vertex
  // vertex -> indices into terminal_clusters
  std::vector<std::vector<int>> terminal_incidence() const;
  // sorted family of sorted vertex sets; equal across policies/seeds
  std::vector<std::vector<int>> canonical_terminal_family() const;
};

// Starts from one cluster per edge and merges until no two clusters share
// >= 2 vertices and no three clusters form exactly one triangle. Merges of
// two overlapping clusters are always preferred over triangle merges.
ProcessState run_clique_process(const Graph& g,
                                MergePolicy policy = MergePolicy::Fifo,
                                std::uint64_t seed = 0);

// Union of complete graphs on the terminal clusters (plus isolated
// vertices); equal to k4_closure_naive on every input. Throws
// ResourceLimitError if the result would exceed max_edges.
Graph k4_closure_fast(const Graph& g, std::int64_t max_edges = 30'000'000);

// Maximum terminal cluster size; 0 for edgeless graphs.
int largest_percolating_clique(const Graph& g);

// percolates() computed through the cluster process.
bool percolates_fast(const Graph& g);

// Exhaustive terminal-state re-check: clusters pairwise share <= 1 vertex
// and no three form exactly one triangle. Throws VerificationError on
// violation. Quadratic/cubic in the number of terminal clusters, intended
// for tests.
void verify_terminal_state(const ProcessState& state);

// JSON array of the merge events (kind, inputs, witness, output, step).
std::string trace_to_json(const ProcessState& state);

}  // namespace k4perc

#endif  // K4PERC_CLIQUE_PROCESS_HPP
