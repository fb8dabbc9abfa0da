#ifndef K4PERC_EXPERIMENTS_HPP
#define K4PERC_EXPERIMENTS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "k4perc/graph.hpp"

namespace k4perc {

// p = sqrt(alpha / (n log n)); throws if outside (0,1).
double p_from_alpha(double alpha, std::int64_t n);

struct ExperimentConfig {
  std::int64_t n = 1000;
  std::vector<double> alphas;
  int trials = 10;
  std::uint64_t master_seed = 0;
  int threads = 1;
  bool count_seed_edges = false;  // fill the seed_edges column (slower)
  // rows carry wall-clock timings only when asked; the default keeps the
  // output a pure function of the config
  bool record_timings = false;
  std::int64_t max_n = 200'000;               // resource guard
  std::int64_t max_expected_edges = 40'000'000;  // resource guard
};

struct ScanRow {
  std::int64_t n;
  double alpha;
  double p;
  int trial;
  std::uint64_t seed;  // derive_seed(master, alpha index, trial)
  bool percolated;
  int max_clique;  // largest terminal cluster (0 when edgeless)
  int isolated;    // isolated-vertex count, qualifies percolated/max_clique
  std::int64_t seed_edges;  // -1 when not computed
  double runtime_ms;        // 0 unless record_timings
};

// One row per (alpha, trial), ordered by (alpha index, trial). Rows are a
// deterministic function of the config; the thread count changes nothing.
std::vector<ScanRow> percolation_probability_scan(const ExperimentConfig& cfg);

struct CliqueScanSummary {
  std::int64_t n;
  double alpha;
  int trials;
  double mean_ratio;  // mean of max_clique / log n
  double sd_ratio;
  double min_ratio, q25_ratio, median_ratio, q75_ratio, max_ratio;
};

// Distribution of largest_percolating_clique / log n per alpha.
std::vector<CliqueScanSummary> largest_clique_scan(const ExperimentConfig& cfg);

// Number of edges (u,v) with contagious {u,v}; stops after examining cap
// edges when cap > 0.
std::int64_t seed_edge_census(const Graph& g, std::int64_t cap = 0);

// CSV with header n,alpha,p,trial,seed,percolated,max_clique,isolated,
// seed_edges,runtime_ms. Numbers use shortest round-trip formatting, so
// equal configs give byte-identical files.
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);
std::string scan_rows_to_json(const std::vector<ScanRow>& rows);
std::string clique_summaries_to_json(
    const std::vector<CliqueScanSummary>& summaries);

}  // namespace k4perc

#endif  // K4PERC_EXPERIMENTS_HPP
