#include "k4perc/smallgraph.hpp"

#include <algorithm>
#include <vector>

namespace k4perc {

SmallGraph SmallGraph::from_graph(const Graph& g) {
  if (g.n() > 16)
    throw std::invalid_argument("SmallGraph: more than 16 vertices");
  SmallGraph s;
  s.k = g.n();
  for (auto [u, v] : g.edges()) s.add_edge(u, v);
  return s;
}

Graph SmallGraph::to_graph() const {
  std::vector<Edge> edges;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v)
      if (has_edge(u, v)) edges.emplace_back(u, v);
  return Graph::from_edge_list(k, edges);
}

bool small_connected(const SmallGraph& g) {
  if (g.k <= 1) return true;
  std::uint16_t seen = 1;
  for (;;) {
    std::uint16_t next = seen;
    std::uint16_t frontier = seen;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.adj[v];
    }
    if (next == seen) break;
    seen = next;
  }
  return std::popcount(seen) == g.k;
}

int small_closure_in_place(SmallGraph& g) {
  const int k = g.k;
  int added = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < k; ++u) {
      for (int v = u + 1; v < k; ++v) {
        if (g.has_edge(u, v)) continue;
        std::uint16_t common = g.adj[u] & g.adj[v];
        bool completes = false;
        std::uint16_t scan = common;
        while (scan) {
          const int w = std::countr_zero(scan);
          scan &= scan - 1;
          if (g.adj[w] & common) {
            completes = true;
            break;
          }
        }
        if (completes) {
          g.add_edge(u, v);
          ++added;
          changed = true;
        }
      }
    }
  }
  return added;
}

bool small_percolates(const SmallGraph& g) {
  SmallGraph c = g;
  small_closure_in_place(c);
  const std::uint16_t full = static_cast<std::uint16_t>((1u << c.k) - 1);
  for (int v = 0; v < c.k; ++v)
    if (c.adj[v] != (full & ~(1u << v))) return false;
  return true;
}

bool small_is_irreducible(const SmallGraph& g) {
  if (!small_percolates(g)) return false;
  // percolating graphs need at least 2k-3 edges, so removals from an
  // edge-minimal graph cannot percolate
  if (g.edge_count() - 1 < 2 * g.k - 3) return true;
  SmallGraph h = g;
  for (int u = 0; u < g.k; ++u) {
    std::uint16_t bits = g.adj[u] & static_cast<std::uint16_t>(~((2u << u) - 1));
    while (bits) {
      const int v = std::countr_zero(bits);
      bits &= bits - 1;
      h.remove_edge(u, v);
      const bool still = small_percolates(h);
      h.add_edge(u, v);
      if (still) return false;
    }
  }
  return true;
}

SmallClassification small_classify(const SmallGraph& g) {
  SmallClassification out{0, 0};
  for (int v = 0; v < g.k; ++v)
    if (g.degree(v) == 2) ++out.degree2_count;

  SmallGraph h = g;
  std::uint16_t alive = static_cast<std::uint16_t>((1u << g.k) - 1);
  int remaining = g.k;
  while (remaining > 2) {
    int pick = -1;
    std::uint16_t scan = alive;
    while (scan) {
      const int v = std::countr_zero(scan);
      scan &= scan - 1;
      if (h.degree(v) == 2) {
        pick = v;
        break;
      }
    }
    if (pick < 0) break;
    alive &= static_cast<std::uint16_t>(~(1u << pick));
    std::uint16_t nb = h.adj[pick];
    while (nb) {
      const int u = std::countr_zero(nb);
      nb &= nb - 1;
      h.remove_edge(pick, u);
    }
    --remaining;
  }
  out.core_size = remaining;
  return out;
}

namespace {

// Iterated neighbourhood refinement producing an isomorphism-invariant
// ordered partition. Signatures pack into one word: own colour in the top
// nibble, then a 15-nibble histogram of neighbour colours (k <= 11 keeps
// every colour below 15 and every count below 16), so a round is one sort
// of at most 16 words.
struct Refinement {
  int class_count = 0;
  std::array<std::uint8_t, 16> color{};         // vertex -> class
  std::array<std::uint8_t, 16> class_offset{};  // class -> start slot
  std::array<std::uint8_t, 16> class_size{};
};

Refinement refine_classes(const SmallGraph& g) {
  const int k = g.k;
  Refinement r;
  for (int v = 0; v < k; ++v) r.color[v] = static_cast<std::uint8_t>(g.degree(v));
  std::array<std::pair<std::uint64_t, int>, 16> sig;
  for (int round = 0; round <= k; ++round) {
    for (int v = 0; v < k; ++v) {
      std::uint64_t hist = 0;
      std::uint16_t nb = g.adj[v];
      while (nb) {
        const int u = std::countr_zero(nb);
        nb &= nb - 1;
        hist += 1ULL << (4 * r.color[u]);
      }
      sig[v] = {(static_cast<std::uint64_t>(r.color[v]) << 60) | hist, v};
    }
    std::sort(sig.begin(), sig.begin() + k);
    std::array<std::uint8_t, 16> next{};
    int rank = 0;
    for (int i = 0; i < k; ++i) {
      if (i > 0 && sig[i].first != sig[i - 1].first) ++rank;
      next[sig[i].second] = static_cast<std::uint8_t>(rank);
    }
    if (next == r.color) break;
    r.color = next;
  }
  for (int v = 0; v < k; ++v) ++r.class_size[r.color[v]];
  r.class_count = 0;
  for (int c = 0; c < 16; ++c)
    if (r.class_size[c] > 0) r.class_count = c + 1;
  int at = 0;
  for (int c = 0; c < r.class_count; ++c) {
    r.class_offset[c] = static_cast<std::uint8_t>(at);
    at += r.class_size[c];
  }
  return r;
}

struct CodeSearch {
  const SmallGraph* g;
  const Refinement* classes;
  std::array<int, 16> perm;  // slot -> vertex
  std::uint64_t best;

  void leaf() {
    std::uint64_t code = 0;
    int t = 0;
    for (int j = 1; j < g->k; ++j) {
      const std::uint16_t row = g->adj[perm[j]];
      for (int i = 0; i < j; ++i, ++t)
        code |= static_cast<std::uint64_t>((row >> perm[i]) & 1u) << t;
    }
    best = std::min(best, code);
  }

  void rec(int cls) {
    if (cls == classes->class_count) {
      leaf();
      return;
    }
    const int at = classes->class_offset[cls];
    const int size = classes->class_size[cls];
    int* begin = perm.data() + at;
    std::sort(begin, begin + size);
    do {
      rec(cls + 1);
    } while (std::next_permutation(begin, begin + size));
  }
};

}  // namespace

std::uint64_t small_canonical_code(const SmallGraph& g) {
  if (g.k > 11)
    throw std::invalid_argument("canonical code: more than 11 vertices");
  if (g.k == 0) return 0;
  const Refinement classes = refine_classes(g);
  CodeSearch search;
  search.g = &g;
  search.classes = &classes;
  search.best = ~0ULL;
  std::array<int, 16> fill{};
  for (int v = 0; v < g.k; ++v)
    search.perm[classes.class_offset[classes.color[v]] +
                fill[classes.color[v]]++] = v;
  search.rec(0);
  return search.best;
}

}  // namespace k4perc
