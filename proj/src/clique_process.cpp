#include "k4perc/clique_process.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <type_traits>

#include "k4perc/rng.hpp"

#include "json.hpp"

namespace k4perc {

namespace {

// Sorted-vector intersection; returns up to `cap` common vertices (cap < 0
// means all of them).
int intersect_count(const std::vector<int>& a, const std::vector<int>& b,
                    std::vector<int>* out = nullptr, int cap = -1) {
  const std::vector<int>& small = a.size() <= b.size() ? a : b;
  const std::vector<int>& big = a.size() <= b.size() ? b : a;
  int count = 0;
  auto it = big.begin();
  for (int v : small) {
    it = std::lower_bound(it, big.end(), v);
    if (it == big.end()) break;
    if (*it == v) {
      ++count;
      if (out) out->push_back(v);
      ++it;
      if (cap >= 0 && count >= cap) break;
    }
  }
  return count;
}

struct PairEvent {
  int a, b;
};
struct TripleEvent {
  int a, b, c;
};

// Pending-merge pool with the three selection policies. Events are cheap
// and may be stale; the engine re-validates on pop.
template <class Event>
class EventPool {
 public:
  EventPool(MergePolicy policy, Xoshiro256ss* rng)
      : policy_(policy), rng_(rng) {}

  void push(const Event& e) {
    if (policy_ == MergePolicy::IndexMin)
      ordered_.insert(keyed(e));
    else
      fifo_.push_back(e);
  }

  bool pop(Event& out) {
    if (policy_ == MergePolicy::IndexMin) {
      if (ordered_.empty()) return false;
      out = unkeyed(*ordered_.begin());
      ordered_.erase(ordered_.begin());
      return true;
    }
    if (fifo_.empty()) return false;
    if (policy_ == MergePolicy::Random) {
      const std::size_t i =
          static_cast<std::size_t>(rng_->next_below(fifo_.size()));
      std::swap(fifo_[i], fifo_.back());
      out = fifo_.back();
      fifo_.pop_back();
      return true;
    }
    out = fifo_.front();
    fifo_.pop_front();
    return true;
  }

  bool empty() const {
    return policy_ == MergePolicy::IndexMin ? ordered_.empty()
                                            : fifo_.empty();
  }

 private:
  static std::array<int, 3> keyed(const PairEvent& e) {
    return {std::min(e.a, e.b), std::max(e.a, e.b), -1};
  }
  static std::array<int, 3> keyed(const TripleEvent& e) {
    std::array<int, 3> k{e.a, e.b, e.c};
    std::sort(k.begin(), k.end());
    return k;
  }
  static Event unkeyed(const std::array<int, 3>& k) {
    if constexpr (std::is_same_v<Event, PairEvent>)
      return PairEvent{k[0], k[1]};
    else
      return TripleEvent{k[0], k[1], k[2]};
  }

  MergePolicy policy_;
  Xoshiro256ss* rng_;
  std::deque<Event> fifo_;
  std::multiset<std::array<int, 3>> ordered_;
};

class Engine {
  static constexpr int kPairPushed = -2;

 public:
  Engine(const Graph& g, MergePolicy policy, std::uint64_t seed)
      : g_(g),
        rng_(seed),
        pairs_(policy, &rng_),
        triples_(policy, &rng_) {
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    members_.reserve(2 * m + 4);
    parent_.reserve(2 * m + 4);
    live_.reserve(2 * m + 4);
    deferred_.reserve(2 * m + 4);
    incidence_.assign(g.n(), {});
    for (int i = 0; i < m; ++i) {
      members_.push_back({edges[i].first, edges[i].second});
      parent_.push_back(i);
      live_.push_back(true);
      deferred_.push_back(false);
      incidence_[edges[i].first].push_back(i);
      incidence_[edges[i].second].push_back(i);
    }
    seen_stamp_.assign(2 * m + 4, -1);
    probe_stamp_.assign(2 * m + 4, -1);
    probe_count_.assign(2 * m + 4, 0);
    probe_witness_.assign(2 * m + 4, -1);
    seed_triangles();
  }

  ProcessState run() {
    for (;;) {
      if (apply_next_pair()) continue;
      if (apply_next_reexam()) continue;
      if (apply_next_triple()) continue;
      if (pairs_.empty() && reexam_.empty() && triples_.empty()) break;
    }
    ProcessState out;
    out.n = g_.n();
    for (std::size_t id = 0; id < members_.size(); ++id)
      if (live_[id]) out.terminal_clusters.push_back(std::move(members_[id]));
    out.trace = std::move(trace_);
    return out;
  }

 private:
  int find(int id) {
    while (parent_[id] != id) {
      parent_[id] = parent_[parent_[id]];
      id = parent_[id];
    }
    return id;
  }

  int edge_cluster(int u, int v) const {
    const Edge e{std::min(u, v), std::max(u, v)};
    const auto& edges = g_.edges();
    const auto it = std::lower_bound(edges.begin(), edges.end(), e);
    assert(it != edges.end() && *it == e);
    return static_cast<int>(it - edges.begin());
  }

  // Every triangle of g gives three edge clusters forming exactly one
  // triangle; these are the only merges available at the start (two
  // distinct edges never share two vertices).
  void seed_triangles() {
    for (std::size_t e = 0; e < g_.edges().size(); ++e) {
      const auto [u, v] = g_.edges()[e];
      const auto& nu = g_.neighbors(u);
      const auto& nv = g_.neighbors(v);
      auto iu = std::upper_bound(nu.begin(), nu.end(), v);
      auto iv = std::upper_bound(nv.begin(), nv.end(), v);
      while (iu != nu.end() && iv != nv.end()) {
        if (*iu < *iv) {
          ++iu;
        } else if (*iv < *iu) {
          ++iv;
        } else {
          const int w = *iu;
          triples_.push(TripleEvent{static_cast<int>(e), edge_cluster(u, w),
                                    edge_cluster(v, w)});
          ++iu;
          ++iv;
        }
      }
    }
  }

  bool apply_next_pair() {
    PairEvent e{};
    while (pairs_.pop(e)) {
      int a = find(e.a), b = find(e.b);
      if (a == b) {
        if (deferred_[a]) reexam_.push_back(a);
        continue;
      }
      std::vector<int> overlap;
      intersect_count(members_[a], members_[b], &overlap);
      if (overlap.size() < 2) {
        // speculative push that went stale; any deferred discovery that
        // was waiting behind this event must be retried
        if (deferred_[a]) reexam_.push_back(a);
        if (deferred_[b]) reexam_.push_back(b);
        continue;
      }
      merge_pair(a, b, overlap);
      return true;
    }
    return false;
  }

  bool apply_next_reexam() {
    while (!reexam_.empty()) {
      const int id = reexam_.front();
      reexam_.pop_front();
      if (!live_[id] || !deferred_[id]) continue;
      deferred_[id] = false;
      examine(id, nullptr, nullptr, /*full=*/true);
      return true;
    }
    return false;
  }

  bool apply_next_triple() {
    TripleEvent e{};
    while (triples_.pop(e)) {
      int a = find(e.a), b = find(e.b), c = find(e.c);
      if (a == b && b == c) continue;
      // Two inputs already merged: the union shares both remaining
      // triangle corners with the third, so retry as a pair.
      if (a == b || a == c || b == c) {
        const int x = a, y = (a == b) ? c : b;
        pairs_.push(PairEvent{x, y});
        return true;
      }
      std::vector<int> ab, ac, bc;
      intersect_count(members_[a], members_[b], &ab, 2);
      intersect_count(members_[a], members_[c], &ac, 2);
      intersect_count(members_[b], members_[c], &bc, 2);
      if (ab.size() >= 2) {
        pairs_.push(PairEvent{a, b});
        return true;
      }
      if (ac.size() >= 2) {
        pairs_.push(PairEvent{a, c});
        return true;
      }
      if (bc.size() >= 2) {
        pairs_.push(PairEvent{b, c});
        return true;
      }
      if (ab.empty() || ac.empty() || bc.empty()) continue;
      const int x = ab[0], y = ac[0], z = bc[0];
      if (x == y || x == z || y == z) continue;  // no three distinct corners
      merge_triple(a, b, c, {x, y, z});
      return true;
    }
    return false;
  }

  void merge_pair(int a, int b, const std::vector<int>& overlap) {
    if (members_[a].size() < members_[b].size()) std::swap(a, b);
    MergeEvent ev;
    ev.kind = MergeEvent::Kind::Pair;
    ev.inputs = {a, b, -1};
    ev.input_sizes = {static_cast<int>(members_[a].size()),
                      static_cast<int>(members_[b].size()), 0};
    ev.witness = overlap;

    const int id = new_cluster();
    const bool inherited = deferred_[a] || deferred_[b];
    parent_[a] = id;
    parent_[b] = id;
    live_[a] = live_[b] = false;
    if (overlap.size() == members_[b].size()) {
      // b ⊆ a: no new overlaps can appear, but an unfinished discovery
      // obligation carries over
      members_[id] = std::move(members_[a]);
      members_[b].clear();
      members_[b].shrink_to_fit();
      ev.output = id;
      ev.output_size = static_cast<int>(members_[id].size());
      trace_.push_back(std::move(ev));
      if (inherited) mark_deferred(id);
      return;
    }
    std::vector<int> merged;
    merged.reserve(members_[a].size() + members_[b].size() - overlap.size());
    std::set_union(members_[a].begin(), members_[a].end(),
                   members_[b].begin(), members_[b].end(),
                   std::back_inserter(merged));
    const std::vector<int> scan = std::move(members_[b]);
    members_[a].clear();
    members_[a].shrink_to_fit();
    members_[id] = std::move(merged);
    ev.output = id;
    ev.output_size = static_cast<int>(members_[id].size());
    trace_.push_back(std::move(ev));
    examine(id, &scan, nullptr, /*full=*/false, inherited);
  }

  void merge_triple(int a, int b, int c, std::vector<int> witness) {
    // keep the largest as the silent base, scan the other two
    if (members_[a].size() < members_[b].size()) std::swap(a, b);
    if (members_[a].size() < members_[c].size()) std::swap(a, c);
    MergeEvent ev;
    ev.kind = MergeEvent::Kind::Triple;
    ev.inputs = {a, b, c};
    ev.input_sizes = {static_cast<int>(members_[a].size()),
                      static_cast<int>(members_[b].size()),
                      static_cast<int>(members_[c].size())};
    std::sort(witness.begin(), witness.end());
    ev.witness = std::move(witness);

    const int id = new_cluster();
    const bool inherited = deferred_[a] || deferred_[b] || deferred_[c];
    parent_[a] = parent_[b] = parent_[c] = id;
    live_[a] = live_[b] = live_[c] = false;
    std::vector<int> bc;
    bc.reserve(members_[b].size() + members_[c].size());
    std::set_union(members_[b].begin(), members_[b].end(),
                   members_[c].begin(), members_[c].end(),
                   std::back_inserter(bc));
    std::vector<int> merged;
    merged.reserve(members_[a].size() + bc.size());
    std::set_union(members_[a].begin(), members_[a].end(), bc.begin(),
                   bc.end(), std::back_inserter(merged));
    std::vector<int> scan_b = std::move(members_[b]);
    std::vector<int> scan_c = std::move(members_[c]);
    members_[a].clear();
    members_[a].shrink_to_fit();
    members_[id] = std::move(merged);
    ev.output = id;
    ev.output_size = static_cast<int>(members_[id].size());
    trace_.push_back(std::move(ev));
    examine(id, &scan_b, &scan_c, /*full=*/false, inherited);
  }

  int new_cluster() {
    const int id = static_cast<int>(members_.size());
    members_.emplace_back();
    parent_.push_back(id);
    live_.push_back(true);
    deferred_.push_back(false);
    if (seen_stamp_.size() < members_.size()) {
      seen_stamp_.resize(members_.size() * 2, -1);
      probe_stamp_.resize(members_.size() * 2, -1);
      probe_count_.resize(members_.size() * 2, 0);
      probe_witness_.resize(members_.size() * 2, -1);
    }
    return id;
  }

  // Overlap of cluster r with members_[id], memoized per examination:
  // 0 = disjoint, 1 = single contact (witness in probe_witness_),
  // 2 = two or more shared vertices.
  int probe(int r, int id) {
    if (probe_stamp_[r] == stamp_) return probe_count_[r];
    probe_stamp_[r] = stamp_;
    std::vector<int> common;
    intersect_count(members_[r], members_[id], &common, 2);
    probe_count_[r] = static_cast<int>(common.size());
    probe_witness_[r] = common.empty() ? -1 : common[0];
    return probe_count_[r];
  }

  void mark_deferred(int id) {
    if (!deferred_[id]) {
      deferred_[id] = true;
      reexam_.push_back(id);
    }
  }

  // Discover merges made possible by the new cluster `id`. New pair
  // overlaps always involve the scanned parts (overlaps avoiding them
  // predate the merge, and those pending events survive via find()), so
  // scanning the smaller inputs suffices for pairs. Triangle discovery is
  // deferred while the cluster has pair merges coming: the successor
  // cluster redoes it over its full vertex set. This keeps the collapse
  // of dense graphs cheap; triangles are only hunted at quiescence.
  void examine(int id, const std::vector<int>* scan_b,
               const std::vector<int>* scan_c, bool full,
               bool inherited = false) {
    ++stamp_;
    touched_.clear();
    const std::vector<int>* parts[3] = {
        full ? &members_[id] : scan_b, full ? nullptr : scan_c, nullptr};
    for (const auto* part : parts) {
      if (!part) continue;
      for (int v : *part) {
        int last = -1;
        for (int raw : incidence_[v]) {
          const int r = find(raw);
          if (r == id || r == last) continue;
          last = r;
          if (seen_stamp_[r] != stamp_) {
            seen_stamp_[r] = stamp_;
            touched_.push_back(r);
          }
        }
      }
    }
    int pairs_pushed = 0;
    for (const int d : touched_) {
      if (probe(d, id) >= 2) {
        pairs_.push(PairEvent{id, d});
        probe_count_[d] = kPairPushed;
        ++pairs_pushed;
      }
    }
    if (inherited || pairs_pushed > 0) {
      // pair merges first, and inherited obligations stay deferred; the
      // triangle scan reruns over the full merged result at quiescence
      mark_deferred(id);
      return;
    }
    for (const int d : touched_) {
      if (probe(d, id) != 1) continue;
      // d touches the new cluster at exactly one vertex: look for a third
      // cluster closing a triangle through some other vertex of d
      const int y = probe_witness_[d];
      for (const int z : members_[d]) {
        if (z == y) continue;
        int last = -1;
        for (int raw : incidence_[z]) {
          const int f = find(raw);
          if (f == id || f == d || f == last) continue;
          last = f;
          const int fcount = probe(f, id);
          if (fcount == 1 && probe_witness_[f] != y) {
            triples_.push(TripleEvent{id, d, f});
          } else if (fcount >= 2) {
            pairs_.push(PairEvent{id, f});
            probe_count_[f] = kPairPushed;
            mark_deferred(id);
          }
        }
      }
    }
  }

  const Graph& g_;
  Xoshiro256ss rng_;
  EventPool<PairEvent> pairs_;
  EventPool<TripleEvent> triples_;
  std::vector<std::vector<int>> members_;
  std::vector<int> parent_;
  std::vector<char> live_;
  std::vector<char> deferred_;
  std::deque<int> reexam_;
  std::vector<std::vector<int>> incidence_;
  std::vector<int> seen_stamp_;
  std::vector<int> probe_stamp_;
  std::vector<int> probe_count_;
  std::vector<int> probe_witness_;
  std::vector<int> touched_;
  int stamp_ = 0;
  std::vector<MergeEvent> trace_;
};

}  // namespace

std::size_t ProcessState::max_cluster_size() const {
  std::size_t best = 0;
  for (const auto& c : terminal_clusters) best = std::max(best, c.size());
  return best;
}

bool ProcessState::spans_all_vertices() const {
  return max_cluster_size() == static_cast<std::size_t>(n) && n > 0;
}

std::vector<std::vector<int>> ProcessState::terminal_incidence() const {
  std::vector<std::vector<int>> inc(n);
  for (std::size_t i = 0; i < terminal_clusters.size(); ++i)
    for (int v : terminal_clusters[i]) inc[v].push_back(static_cast<int>(i));
  return inc;
}

std::vector<std::vector<int>> ProcessState::canonical_terminal_family() const {
  auto family = terminal_clusters;
  std::sort(family.begin(), family.end());
  return family;
}

ProcessState run_clique_process(const Graph& g, MergePolicy policy,
                                std::uint64_t seed) {
  return Engine(g, policy, seed).run();
}

Graph k4_closure_fast(const Graph& g, std::int64_t max_edges) {
  const ProcessState state = run_clique_process(g);
  std::int64_t total = 0;
  for (const auto& c : state.terminal_clusters) {
    const std::int64_t s = static_cast<std::int64_t>(c.size());
    total += s * (s - 1) / 2;
  }
  if (total > max_edges)
    throw ResourceLimitError("closure would have " + std::to_string(total) +
                             " edges (limit " + std::to_string(max_edges) +
                             ")");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(total));
  for (const auto& c : state.terminal_clusters)
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        edges.emplace_back(c[i], c[j]);
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw VerificationError("terminal clusters are not edge-disjoint");
  return Graph::from_edge_list(g.n(), edges);
}

int largest_percolating_clique(const Graph& g) {
  if (g.m() == 0) return 0;
  return static_cast<int>(run_clique_process(g).max_cluster_size());
}

bool percolates_fast(const Graph& g) {
  if (g.n() <= 1) return true;
  if (g.m() < 2 * static_cast<std::int64_t>(g.n()) - 3) return false;
  return run_clique_process(g).spans_all_vertices();
}

void verify_terminal_state(const ProcessState& state) {
  const auto& fam = state.terminal_clusters;
  const auto inc = state.terminal_incidence();
  // pairwise overlaps <= 1, via shared-vertex counting
  std::vector<std::vector<int>> overlap_with(fam.size());
  for (int v = 0; v < state.n; ++v)
    for (std::size_t i = 0; i < inc[v].size(); ++i)
      for (std::size_t j = i + 1; j < inc[v].size(); ++j) {
        const int a = inc[v][i], b = inc[v][j];
        overlap_with[a].push_back(b);
      }
  for (auto& list : overlap_with) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      throw VerificationError("terminal clusters share two vertices");
  }
  // no three clusters form exactly one triangle
  for (std::size_t a = 0; a < fam.size(); ++a) {
    for (const int b : overlap_with[a]) {
      for (const int c : overlap_with[a]) {
        if (c <= b) continue;
        std::vector<int> bc;
        intersect_count(fam[b], fam[static_cast<std::size_t>(c)], &bc, 2);
        if (bc.empty()) continue;
        std::vector<int> ab, ac;
        intersect_count(fam[a], fam[b], &ab, 2);
        intersect_count(fam[a], fam[static_cast<std::size_t>(c)], &ac, 2);
        if (ab.size() == 1 && ac.size() == 1 && bc.size() == 1 &&
            ab[0] != ac[0] && ab[0] != bc[0] && ac[0] != bc[0])
          throw VerificationError("terminal clusters form a triangle");
      }
    }
  }
}

std::string trace_to_json(const ProcessState& state) {
  nlohmann::json arr = nlohmann::json::array();
  int step = 0;
  for (const auto& ev : state.trace) {
    nlohmann::json j;
    j["step"] = step++;
    j["kind"] = ev.kind == MergeEvent::Kind::Pair ? "pair-merge" : "triple-merge";
    nlohmann::json inputs = nlohmann::json::array();
    const int arity = ev.kind == MergeEvent::Kind::Pair ? 2 : 3;
    for (int i = 0; i < arity; ++i) inputs.push_back(ev.inputs[i]);
    j["inputs"] = inputs;
    j["witness"] = ev.witness;
    j["output"] = ev.output;
    arr.push_back(j);
  }
  return arr.dump();
}

}  // namespace k4perc
