#include <cmath>
#include <sstream>

#include "doctest.h"

#include "k4perc/edgelist_io.hpp"
#include "k4perc/graph.hpp"

using namespace k4perc;

TEST_SUITE_BEGIN("graph");

TEST_CASE("triangle construction") {
  const Graph g = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(g.n() == 3);
  CHECK(g.m() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(2, 0));
  CHECK(g.degree(1) == 2);
}

TEST_CASE("edgeless graph") {
  const Graph g = Graph::from_edge_list(4, {});
  CHECK(g.n() == 4);
  CHECK(g.m() == 0);
}

TEST_CASE("duplicate handling") {
  CHECK_THROWS_AS(Graph::from_edge_list(4, {{0, 1}, {1, 0}}),
                  std::invalid_argument);
  const Graph g = Graph::from_edge_list(4, {{0, 1}, {1, 0}},
                                        DuplicateEdgePolicy::Dedupe);
  CHECK(g.m() == 1);
}

TEST_CASE("bad inputs") {
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), std::out_of_range);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{-1, 0}}), std::out_of_range);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("induced subgraph") {
  const Graph tri = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto sub = induced_subgraph(tri, {0, 1});
  CHECK(sub.graph.n() == 2);
  CHECK(sub.graph.m() == 1);

  const Graph k4 = Graph::complete(4);
  const auto whole = induced_subgraph(k4, {0, 1, 2, 3});
  CHECK(whole.graph == k4);

  const Graph c5 =
      Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  const auto path = induced_subgraph(c5, {0, 1, 2});
  CHECK(path.graph.n() == 3);
  CHECK(path.graph.m() == 2);
  CHECK(path.graph.has_edge(0, 1));
  CHECK(path.graph.has_edge(1, 2));
  CHECK_FALSE(path.graph.has_edge(0, 2));
}

TEST_CASE("gnp endpoints") {
  const Graph empty = sample_gnp(10, 0.0, 123);
  CHECK(empty.m() == 0);
  const Graph full = sample_gnp(10, 1.0, 123);
  CHECK(full.m() == 45);
}

TEST_CASE("gnp edge count near its mean") {
  // C(10^4,2) * 1e-3 = 49995, sigma ~ 223.5
  const Graph g = sample_gnp(10000, 1e-3, 1);
  CHECK(std::abs(static_cast<double>(g.m()) - 49995.0) < 4 * 224.0);
}

TEST_CASE("gnp reproducibility and handshake") {
  const Graph a = sample_gnp(300, 0.02, 99);
  const Graph b = sample_gnp(300, 0.02, 99);
  CHECK(a == b);
  const Graph c = sample_gnp(300, 0.02, 100);
  CHECK_FALSE(a == c);

  std::int64_t degree_sum = 0;
  for (int v = 0; v < a.n(); ++v) degree_sum += a.degree(v);
  CHECK(degree_sum == 2 * a.m());
}

TEST_CASE("gnp p validation") {
  CHECK_THROWS_AS(sample_gnp(5, -0.1, 0), std::invalid_argument);
  CHECK_THROWS_AS(sample_gnp(5, 1.5, 0), std::invalid_argument);
}

TEST_CASE("dense and sparse representations agree") {
  const Graph dense = sample_gnp(60, 0.2, 5);
  REQUIRE(dense.dense());
  const Graph big = sample_gnp(700, 0.01, 5);
  REQUIRE_FALSE(big.dense());
  for (int v = 0; v < big.n(); ++v)
    for (int u : big.neighbors(v)) CHECK(big.has_edge(v, u));
}

TEST_CASE("edge list round trip") {
  const Graph g = sample_gnp(40, 0.15, 17);
  std::stringstream buf;
  write_edge_list(buf, g);
  const Graph back = read_edge_list(buf);
  CHECK(back == g);
}

TEST_CASE("edge list parsing") {
  std::stringstream in(
      "# a comment\n"
      "3 2\n"
      "0 1\n"
      "# another\n"
      "1 2\n");
  const Graph g = read_edge_list(in);
  CHECK(g.n() == 3);
  CHECK(g.m() == 2);

  std::stringstream bad("3 5\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(bad), std::invalid_argument);
}

TEST_CASE("vertex sets validated") {
  CHECK_THROWS_AS(validate_vertex_set({0, 0, 1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(validate_vertex_set({2, 1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(validate_vertex_set({0, 5}, 3), std::out_of_range);
  CHECK(make_vertex_set({2, 0, 2, 1}, 3) == VertexSet{0, 1, 2});
}

TEST_SUITE_END();
