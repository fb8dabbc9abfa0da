#include "k4perc/bootstrap.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <set>
#include <unordered_set>

namespace k4perc {

namespace {

// Mutable adjacency used while the closure grows. Bitset rows when the
// graph fits the dense limit, sorted-set rows otherwise.
class MutableAdj {
 public:
  explicit MutableAdj(const Graph& g) : n_(g.n()) {
    if (n_ <= Graph::kDenseLimit) {
      words_ = (n_ + 63) / 64;
      bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
      for (auto [u, v] : g.edges()) set_bit(u, v);
    } else {
      lists_.assign(n_, {});
      for (auto [u, v] : g.edges()) {
        lists_[u].insert(v);
        lists_[v].insert(u);
      }
    }
  }

  bool dense() const { return words_ > 0; }

  bool has(int u, int v) const {
    if (dense()) return (bits_[row(u) + v / 64] >> (v % 64)) & 1ULL;
    return lists_[u].count(v) > 0;
  }

  void add(int u, int v) {
    if (dense()) {
      set_bit(u, v);
    } else {
      lists_[u].insert(v);
      lists_[v].insert(u);
    }
  }

  // Any edge inside N(u) ∩ N(v)?
  bool common_neighbourhood_has_edge(int u, int v) const {
    if (dense()) {
      const std::uint64_t* ru = bits_.data() + row(u);
      const std::uint64_t* rv = bits_.data() + row(v);
      for (int w = 0; w < words_; ++w) {
        std::uint64_t common = ru[w] & rv[w];
        while (common) {
          const int x = w * 64 + std::countr_zero(common);
          common &= common - 1;
          // an edge from x into the rest of the common neighbourhood
          const std::uint64_t* rx = bits_.data() + row(x);
          for (int w2 = 0; w2 < words_; ++w2)
            if (rx[w2] & ru[w2] & rv[w2]) return true;
        }
      }
      return false;
    }
    const auto& a = lists_[u];
    const auto& b = lists_[v];
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& big = a.size() <= b.size() ? b : a;
    std::vector<int> common;
    for (int w : small)
      if (big.count(w)) common.push_back(w);
    for (std::size_t i = 0; i < common.size(); ++i)
      for (std::size_t j = i + 1; j < common.size(); ++j)
        if (has(common[i], common[j])) return true;
    return false;
  }

  template <class Fn>
  void for_each_neighbor(int v, Fn&& fn) const {
    if (dense()) {
      const std::uint64_t* rv = bits_.data() + row(v);
      for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = rv[w];
        while (bits) {
          fn(w * 64 + std::countr_zero(bits));
          bits &= bits - 1;
        }
      }
    } else {
      for (int u : lists_[v]) fn(u);
    }
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int v = 0; v < n_; ++v)
      for_each_neighbor(v, [&](int u) {
        if (u > v) out.emplace_back(v, u);
      });
    return out;
  }

 private:
  std::size_t row(int v) const {
    return static_cast<std::size_t>(v) * words_;
  }
  void set_bit(int u, int v) {
    bits_[row(u) + v / 64] |= 1ULL << (v % 64);
    bits_[row(v) + u / 64] |= 1ULL << (u % 64);
  }

  int n_;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::set<int>> lists_;
};

}  // namespace

Graph k4_closure_naive(const Graph& g) {
  const int n = g.n();
  MutableAdj adj(g);

  std::deque<Edge> queue;
  std::unordered_set<std::uint64_t> queued;
  auto key = [n](int u, int v) {
    return static_cast<std::uint64_t>(std::min(u, v)) * n + std::max(u, v);
  };
  auto enqueue = [&](int u, int v) {
    if (u == v || adj.has(u, v)) return;
    if (queued.insert(key(u, v)).second)
      queue.emplace_back(std::min(u, v), std::max(u, v));
  };

  // Seed with all pairs at distance exactly 2.
  for (int w = 0; w < n; ++w) {
    std::vector<int> nb;
    adj.for_each_neighbor(w, [&](int u) { nb.push_back(u); });
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) enqueue(nb[i], nb[j]);
  }

  while (!queue.empty()) {
    auto [u, v] = queue.front();
    queue.pop_front();
    queued.erase(key(u, v));
    if (adj.has(u, v)) continue;
    if (!adj.common_neighbourhood_has_edge(u, v)) continue;

    adj.add(u, v);
    // Re-examine pairs whose common neighbourhood changed: (u,w) gained v
    // for w ~ v, (v,w) gained u for w ~ u, and pairs inside N(u) ∩ N(v)
    // gained the edge (u,v) itself.
    std::vector<int> common;
    adj.for_each_neighbor(v, [&](int w) {
      if (w != u) enqueue(u, w);
      if (adj.has(u, w)) common.push_back(w);
    });
    adj.for_each_neighbor(u, [&](int w) {
      if (w != v) enqueue(v, w);
    });
    for (std::size_t i = 0; i < common.size(); ++i)
      for (std::size_t j = i + 1; j < common.size(); ++j)
        enqueue(common[i], common[j]);
  }

  return Graph::from_edge_list(n, adj.edges());
}

bool percolates(const Graph& g) {
  const std::int64_t all = static_cast<std::int64_t>(g.n()) * (g.n() - 1) / 2;
  if (g.m() == all) return true;
  // cheap necessary condition: a percolating graph on >2 vertices is
  // connected, so any isolated vertex settles it
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0) return false;
  return k4_closure_naive(g).m() == all;
}

VertexSet two_neighbour_closure(const Graph& g, const VertexSet& seeds) {
  validate_vertex_set(seeds, g.n());
  std::vector<char> active(g.n(), 0);
  std::vector<int> active_neighbours(g.n(), 0);
  std::vector<int> stack;
  for (int v : seeds) {
    active[v] = 1;
    stack.push_back(v);
  }
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v)) {
      if (active[u]) continue;
      if (++active_neighbours[u] >= 2) {
        active[u] = 1;
        stack.push_back(u);
      }
    }
  }
  VertexSet out;
  for (int v = 0; v < g.n(); ++v)
    if (active[v]) out.push_back(v);
  return out;
}

bool is_contagious(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.n() || v < 0 || v >= g.n())
    throw std::out_of_range("vertex index out of range");
  VertexSet seeds{std::min(u, v), std::max(u, v)};
  if (u == v) seeds = {u};
  return static_cast<int>(two_neighbour_closure(g, seeds).size()) == g.n();
}

bool is_seed_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v))
    throw std::invalid_argument("is_seed_edge: pair is not an edge");
  return is_contagious(g, u, v);
}

}  // namespace k4perc
