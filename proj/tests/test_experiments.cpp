#include <cmath>
#include <sstream>

#include "doctest.h"

#include "k4perc/bootstrap.hpp"
#include "k4perc/experiments.hpp"
#include "test_util.hpp"

using namespace k4perc;
namespace tu = k4perc::testutil;

TEST_SUITE_BEGIN("experiments");

TEST_CASE("p from alpha") {
  const double p = p_from_alpha(0.2, 1000);
  CHECK(p == doctest::Approx(std::sqrt(0.2 / (1000 * std::log(1000.0))))
                 .epsilon(1e-15));
  CHECK_THROWS_AS(p_from_alpha(-1.0, 1000), std::invalid_argument);
  CHECK_THROWS_AS(p_from_alpha(0.2, 2), std::invalid_argument);
  CHECK_THROWS_AS(p_from_alpha(1e9, 10), std::invalid_argument);
}

TEST_CASE("scan rows are deterministic and thread-count independent") {
  ExperimentConfig cfg;
  cfg.n = 120;
  cfg.alphas = {0.1, 0.5, 2.0};
  cfg.trials = 6;
  cfg.master_seed = 99;
  cfg.threads = 1;
  const auto rows1 = percolation_probability_scan(cfg);
  cfg.threads = 4;
  const auto rows4 = percolation_probability_scan(cfg);

  std::ostringstream csv1, csv4;
  write_scan_csv(csv1, rows1);
  write_scan_csv(csv4, rows4);
  CHECK(csv1.str() == csv4.str());

  REQUIRE(rows1.size() == 18);
  for (std::size_t i = 0; i < rows1.size(); ++i) {
    CHECK(rows1[i].seed ==
          derive_seed(99, i / cfg.trials, i % cfg.trials));
    CHECK(rows1[i].runtime_ms == 0.0);  // timings off by default
  }
}

TEST_CASE("rows agree with the reference predicates at small n") {
  ExperimentConfig cfg;
  cfg.n = 60;
  cfg.alphas = {0.5, 2.0, 8.0};
  cfg.trials = 10;
  cfg.master_seed = 5;
  const auto rows = percolation_probability_scan(cfg);
  for (const auto& r : rows) {
    const Graph g = sample_gnp(static_cast<int>(r.n), r.p, r.seed);
    CHECK(percolates(g) == r.percolated);
    int isolated = 0;
    for (int v = 0; v < g.n(); ++v)
      if (g.degree(v) == 0) ++isolated;
    CHECK(isolated == r.isolated);
    if (r.isolated == 0)
      CHECK(r.percolated == (r.max_clique == r.n));
    if (g.m() >= 1) CHECK(r.max_clique >= 2);
  }
}

TEST_CASE("csv format") {
  ExperimentConfig cfg;
  cfg.n = 30;
  cfg.alphas = {1.0};
  cfg.trials = 2;
  const auto rows = percolation_probability_scan(cfg);
  std::ostringstream csv;
  write_scan_csv(csv, rows);
  const std::string text = csv.str();
  CHECK(text.rfind("n,alpha,p,trial,seed,percolated,max_clique,isolated,"
                   "seed_edges,runtime_ms\n", 0) == 0);
  // seed_edges defaults to the empty field
  CHECK(text.find(",,0") != std::string::npos);

  cfg.count_seed_edges = true;
  const auto rows2 = percolation_probability_scan(cfg);
  for (const auto& r : rows2) CHECK(r.seed_edges >= 0);
  const std::string json = scan_rows_to_json(rows2);
  CHECK(json.find("\"seed_edges\"") != std::string::npos);
}

TEST_CASE("largest clique scan summary") {
  ExperimentConfig cfg;
  cfg.n = 200;
  cfg.alphas = {0.2};
  cfg.trials = 8;
  cfg.master_seed = 12;
  const auto sums = largest_clique_scan(cfg);
  REQUIRE(sums.size() == 1);
  const auto& s = sums[0];
  CHECK(s.trials == 8);
  CHECK(s.min_ratio <= s.q25_ratio);
  CHECK(s.q25_ratio <= s.median_ratio);
  CHECK(s.median_ratio <= s.q75_ratio);
  CHECK(s.q75_ratio <= s.max_ratio);
  CHECK(s.mean_ratio >= s.min_ratio);
  CHECK(s.mean_ratio <= s.max_ratio);
  CHECK(s.sd_ratio >= 0);
  const std::string json = clique_summaries_to_json(sums);
  CHECK(json.find("mean_ratio") != std::string::npos);
}

TEST_CASE("seed edge census") {
  CHECK(seed_edge_census(Graph::complete(4)) == 6);
  CHECK(seed_edge_census(tu::cycle(5)) == 0);
  CHECK(seed_edge_census(Graph::complete(4), 3) <= 3);
  CHECK(seed_edge_census(Graph(5)) == 0);
}

TEST_CASE("resource guards") {
  ExperimentConfig cfg;
  cfg.n = 500'000;
  cfg.alphas = {0.2};
  CHECK_THROWS_AS(percolation_probability_scan(cfg), ResourceLimitError);
  cfg.n = 100'000;
  cfg.max_expected_edges = 1000;
  CHECK_THROWS_AS(percolation_probability_scan(cfg), ResourceLimitError);
  cfg.max_expected_edges = 40'000'000;
  cfg.trials = 0;
  CHECK_THROWS_AS(percolation_probability_scan(cfg), std::invalid_argument);
}

TEST_CASE("timings opt-in") {
  ExperimentConfig cfg;
  cfg.n = 50;
  cfg.alphas = {1.0};
  cfg.trials = 2;
  cfg.record_timings = true;
  const auto rows = percolation_probability_scan(cfg);
  for (const auto& r : rows) CHECK(r.runtime_ms >= 0.0);
}

TEST_SUITE_END();
