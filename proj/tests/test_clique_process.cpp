#include <map>

#include "doctest.h"

#include "k4perc/bootstrap.hpp"
#include "k4perc/clique_process.hpp"
#include "test_util.hpp"

using namespace k4perc;
namespace tu = k4perc::testutil;

TEST_SUITE_BEGIN("clique_process");

TEST_CASE("triangle merges in one triple step") {
  const auto state = run_clique_process(Graph::complete(3));
  REQUIRE(state.trace.size() == 1);
  CHECK(state.trace[0].kind == MergeEvent::Kind::Triple);
  REQUIRE(state.terminal_clusters.size() == 1);
  CHECK(state.terminal_clusters[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("bowtie ends as two 3-vertex clusters") {
  const auto state = run_clique_process(tu::bowtie());
  CHECK(state.trace.size() == 2);
  const auto family = state.canonical_terminal_family();
  REQUIRE(family.size() == 2);
  CHECK(family[0] == std::vector<int>{0, 1, 2});
  CHECK(family[1] == std::vector<int>{2, 3, 4});
  verify_terminal_state(state);
}

TEST_CASE("4-clique collapses to one cluster via a pair merge") {
  const auto state = run_clique_process(Graph::complete(4));
  REQUIRE(state.terminal_clusters.size() == 1);
  CHECK(state.terminal_clusters[0].size() == 4);
  bool has_pair = false;
  for (const auto& ev : state.trace)
    has_pair = has_pair || ev.kind == MergeEvent::Kind::Pair;
  CHECK(has_pair);
}

TEST_CASE("fast closure equals naive closure on spec-sized random graphs") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = sample_gnp(12, 0.35, seed);
    CHECK(k4_closure_fast(g) == k4_closure_naive(g));
  }
}

TEST_CASE("fast closure equals naive closure across densities") {
  Xoshiro256ss rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(24));
    const double p = rng.next_double();
    const Graph g = sample_gnp(n, p, rng.next());
    CHECK(k4_closure_fast(g) == k4_closure_naive(g));
  }
}

TEST_CASE("terminal family is the same for every policy and seed") {
  Xoshiro256ss rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + static_cast<int>(rng.next_below(20));
    const Graph g = sample_gnp(n, 0.3, rng.next());
    const auto reference =
        run_clique_process(g, MergePolicy::Fifo).canonical_terminal_family();
    CHECK(run_clique_process(g, MergePolicy::IndexMin)
              .canonical_terminal_family() == reference);
    for (std::uint64_t seed = 0; seed < 3; ++seed)
      CHECK(run_clique_process(g, MergePolicy::Random, seed)
                .canonical_terminal_family() == reference);
  }
}

TEST_CASE("traces satisfy the step-arity bound") {
  Xoshiro256ss rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4 + static_cast<int>(rng.next_below(30));
    const Graph g = sample_gnp(n, 0.25, rng.next());
    const auto state = run_clique_process(g);
    std::size_t prior_max = 2;  // clusters start as single edges
    for (const auto& ev : state.trace) {
      const int arity = ev.kind == MergeEvent::Kind::Pair ? 2 : 3;
      int input_sum = 0;
      for (int i = 0; i < arity; ++i) {
        CHECK(ev.input_sizes[i] >= 2);
        input_sum += ev.input_sizes[i];
      }
      CHECK(ev.output_size <= input_sum);
      CHECK(static_cast<std::size_t>(ev.output_size) <= 3 * prior_max);
      prior_max = std::max(prior_max, static_cast<std::size_t>(ev.output_size));
    }
  }
}

TEST_CASE("pair witnesses have >= 2 vertices, triple witnesses 3 distinct") {
  Xoshiro256ss rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = sample_gnp(14, 0.35, rng.next());
    for (const auto& ev : run_clique_process(g).trace) {
      if (ev.kind == MergeEvent::Kind::Pair) {
        CHECK(ev.witness.size() >= 2);
      } else {
        REQUIRE(ev.witness.size() == 3);
        CHECK(ev.witness[0] < ev.witness[1]);
        CHECK(ev.witness[1] < ev.witness[2]);
      }
    }
  }
}

TEST_CASE("percolation agrees with the spanning-cluster criterion") {
  Xoshiro256ss rng(47);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(13));
    const Graph g = sample_gnp(n, 0.2 + 0.6 * rng.next_double(), rng.next());
    const auto state = run_clique_process(g);
    bool isolated = false;
    for (int v = 0; v < n; ++v) isolated = isolated || g.degree(v) == 0;
    if (!isolated)
      CHECK(percolates(g) == state.spans_all_vertices());
    CHECK(percolates(g) == percolates_fast(g));
  }
}

TEST_CASE("largest percolating clique") {
  CHECK(largest_percolating_clique(Graph(6)) == 0);
  CHECK(largest_percolating_clique(tu::bowtie()) == 3);
  CHECK(largest_percolating_clique(Graph::from_edge_list(3, {{0, 1}})) == 2);

  // matches the exact maximum clique of the closure whenever that is >= 3
  Xoshiro256ss rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = sample_gnp(14, 0.3, rng.next());
    const int via_process = largest_percolating_clique(g);
    const int exact = tu::max_clique_size(k4_closure_naive(g));
    if (exact >= 3)
      CHECK(via_process == exact);
    else if (g.m() > 0)
      CHECK(via_process == 2);
  }
}

TEST_CASE("terminal state verifies cleanly") {
  Xoshiro256ss rng(59);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng.next_below(25));
    const Graph g = sample_gnp(n, 0.3, rng.next());
    verify_terminal_state(run_clique_process(g));
  }
}

TEST_CASE("trace exports as json") {
  const auto state = run_clique_process(Graph::complete(3));
  const std::string json = trace_to_json(state);
  CHECK(json.find("triple-merge") != std::string::npos);
  CHECK(json.find("\"witness\"") != std::string::npos);
  CHECK(json.find("\"step\":0") != std::string::npos);
}

TEST_CASE("terminal incidence maps vertices to their clusters") {
  const auto state = run_clique_process(tu::bowtie());
  const auto inc = state.terminal_incidence();
  CHECK(inc[2].size() == 2);  // the cut vertex lies in both clusters
  CHECK(inc[0].size() == 1);
}

TEST_SUITE_END();
