#include <cmath>
#include <cstdint>

#include "k4perc/graph.hpp"
#include "k4perc/rng.hpp"

namespace k4perc {

namespace {

// Pair index t in colex order: (u,v) with u < v maps to v(v-1)/2 + u.
// Inverse for t < C(n,2).
Edge unrank_pair(std::int64_t t) {
  auto v = static_cast<std::int64_t>(
      (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(t))) / 2.0);
  while (v * (v - 1) / 2 > t) --v;
  while ((v + 1) * v / 2 <= t) ++v;
  const std::int64_t u = t - v * (v - 1) / 2;
  return {static_cast<int>(u), static_cast<int>(v)};
}

}  // namespace

Graph sample_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("edge probability outside [0,1]");
  const std::int64_t total = static_cast<std::int64_t>(n) * (n - 1) / 2;
  std::vector<Edge> edges;
  if (p == 1.0) return Graph::complete(n);
  if (p > 0.0 && total > 0) {
    edges.reserve(static_cast<std::size_t>(
        static_cast<double>(total) * p + 6.0 * std::sqrt(total * p) + 16.0));
    Xoshiro256ss rng(seed);
    const double log_q = std::log1p(-p);
    std::int64_t t = -1;
    for (;;) {
      const double u = rng.next_double_open();
      const double skip = std::floor(std::log(u) / log_q);
      if (skip >= static_cast<double>(total)) break;  // also covers +inf
      t += 1 + static_cast<std::int64_t>(skip);
      if (t >= total) break;
      edges.push_back(unrank_pair(t));
    }
  }
  return Graph::from_edge_list(n, edges);
}

}  // namespace k4perc
