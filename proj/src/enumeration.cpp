#include "k4perc/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <thread>
#include <unordered_set>

#include "k4perc/asymptotics.hpp"
#include "k4perc/smallgraph.hpp"

#include "json.hpp"

namespace k4perc {

namespace {

constexpr int kMaxSlots = 56;

std::uint64_t binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

// Pairs in colex order: slot t <-> (u,v), u < v, t = v(v-1)/2 + u.
struct SlotTable {
  std::array<std::pair<int, int>, kMaxSlots> pair_of;
  explicit SlotTable(int k) {
    int t = 0;
    for (int v = 1; v < k; ++v)
      for (int u = 0; u < v; ++u) pair_of[t++] = {u, v};
  }
};

// m-subsets of {0..slots-1} in colex order, with combinatorial-number-
// system unranking so the index space splits into contiguous chunks.
struct Combination {
  int slots, m;
  std::array<int, kMaxSlots> c;

  void unrank(std::uint64_t rank) {
    for (int i = m - 1; i >= 0; --i) {
      int hi = slots - 1;
      // largest value x with C(x, i+1) <= rank
      while (binom(hi, i + 1) > rank) --hi;
      c[i] = hi;
      rank -= binom(hi, i + 1);
    }
  }

  bool next() {
    int i = 0;
    while (i + 1 < m && c[i] + 1 == c[i + 1]) ++i;
    if (c[i] + 1 >= slots && i + 1 >= m) return false;
    ++c[i];
    for (int j = 0; j < i; ++j) c[j] = j;
    return c[m - 1] < slots;
  }
};

struct ClassTally {
  std::uint64_t labelled = 0;
  std::unordered_set<std::uint64_t> codes;
};

// Tallies for one (k, ell) pass, keyed by (i, q).
using TallyMap = std::map<std::pair<int, int>, ClassTally>;

void census_chunk(int k, int m, const SlotTable& slots, std::uint64_t lo,
                  std::uint64_t hi, TallyMap& tally,
                  std::uint64_t max_codes) {
  Combination comb{k * (k - 1) / 2, m, {}};
  comb.unrank(lo);
  std::uint64_t stored = 0;
  for (std::uint64_t rank = lo; rank < hi; ++rank, comb.next()) {
    SmallGraph g;
    g.k = k;
    bool degree_ok = true;
    for (int e = 0; e < m; ++e) {
      auto [u, v] = slots.pair_of[comb.c[e]];
      g.add_edge(u, v);
    }
    for (int v = 0; v < k; ++v)
      if (g.degree(v) < 2) {
        degree_ok = false;
        break;
      }
    if (!degree_ok) continue;
    if (!small_connected(g)) continue;
    if (!small_percolates(g)) continue;
    if (!small_is_irreducible(g)) continue;
    const auto cls = small_classify(g);
    auto& bucket = tally[{cls.degree2_count, cls.core_size}];
    bucket.labelled += 1;
    if (bucket.codes.insert(small_canonical_code(g)).second)
      if (++stored > max_codes)
        throw ResourceLimitError("census: canonical-code store exceeded");
  }
}

}  // namespace

std::vector<EnumerationRecord> enumerate_census(int k, int ell_max,
                                                const CensusOptions& opts) {
  if (k < 3 || k > 8)
    throw std::invalid_argument("enumerate_census: k must be in [3,8]");
  if (ell_max < 0) throw std::invalid_argument("enumerate_census: ell_max < 0");
  const int threads = std::max(1, opts.threads);
  const SlotTable slots(k);
  const int nslots = k * (k - 1) / 2;

  std::vector<EnumerationRecord> records;
  for (int ell = 0; ell <= ell_max; ++ell) {
    const int m = 2 * k - 3 + ell;
    if (m > nslots) break;
    const std::uint64_t total = binom(nslots, m);
    const int chunks = std::min<std::uint64_t>(total, threads * 8);
    std::vector<TallyMap> partial(chunks);
    std::atomic<int> next_chunk{0};
    std::vector<std::string> errors(chunks);
    auto worker = [&]() {
      for (;;) {
        const int c = next_chunk.fetch_add(1);
        if (c >= chunks) return;
        const std::uint64_t lo = total * c / chunks;
        const std::uint64_t hi = total * (c + 1) / chunks;
        try {
          census_chunk(k, m, slots, lo, hi, partial[c],
                       opts.max_stored_codes);
        } catch (const std::exception& e) {
          errors[c] = e.what();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& err : errors)
      if (!err.empty()) throw ResourceLimitError(err);

    TallyMap merged;
    for (auto& part : partial)
      for (auto& [key, val] : part) {
        auto& dst = merged[key];
        dst.labelled += val.labelled;
        dst.codes.merge(val.codes);
      }
    for (const auto& [key, val] : merged)
      records.push_back(EnumerationRecord{
          k, ell, key.first, key.second, val.labelled,
          static_cast<std::uint64_t>(val.codes.size())});
  }
  return records;
}

std::vector<std::uint8_t> canonical_code(const Graph& g) {
  if (g.n() > 10)
    throw std::invalid_argument("canonical_code: supports n <= 10");
  const std::uint64_t code = small_canonical_code(SmallGraph::from_graph(g));
  const int bits = g.n() * (g.n() - 1) / 2;
  const int bytes = (bits + 7) / 8;
  std::vector<std::uint8_t> out(bytes);
  for (int b = 0; b < bytes; ++b)
    out[b] = static_cast<std::uint8_t>(code >> (8 * (bytes - 1 - b)));
  return out;
}

Graph find_seven_vertex_core() {
  const int k = 7, m = 11;
  const SlotTable slots(k);
  Combination comb{21, m, {}};
  for (int i = 0; i < m; ++i) comb.c[i] = i;
  std::unordered_set<std::uint64_t> codes;
  Graph found;
  do {
    SmallGraph g;
    g.k = k;
    for (int e = 0; e < m; ++e) {
      auto [u, v] = slots.pair_of[comb.c[e]];
      g.add_edge(u, v);
    }
    bool min3 = true;
    for (int v = 0; v < k; ++v)
      if (g.degree(v) < 3) {
        min3 = false;
        break;
      }
    if (!min3) continue;
    if (!small_percolates(g)) continue;
    if (!small_is_irreducible(g)) continue;
    if (codes.insert(small_canonical_code(g)).second && codes.size() == 1)
      found = g.to_graph();
  } while (comb.next());
  if (codes.size() != 1)
    throw VerificationError("expected exactly one 7-vertex core class, found " +
                            std::to_string(codes.size()));
  return found;
}

Graph nine_vertex_construction(const Graph& core7, Edge e) {
  if (core7.n() != 7)
    throw std::invalid_argument("nine_vertex_construction: need 7 vertices");
  const Edge norm{std::min(e.first, e.second), std::max(e.first, e.second)};
  if (!core7.has_edge(norm.first, norm.second))
    throw std::invalid_argument("nine_vertex_construction: not an edge");
  std::vector<Edge> edges;
  for (const auto& f : core7.edges())
    if (f != norm) edges.push_back(f);
  const int w1 = 7, w2 = 8;
  edges.push_back({norm.first, w1});
  edges.push_back({norm.first, w2});
  edges.push_back({norm.second, w1});
  edges.push_back({norm.second, w2});
  edges.push_back({w1, w2});
  return Graph::from_edge_list(9, edges);
}

BoundReport verify_count_bounds(const std::vector<EnumerationRecord>& records,
                                double eps) {
  BoundReport report;
  report.eps = eps;
  report.all_pass = true;
  std::map<std::tuple<int, int, int>, std::uint64_t> aggregate;
  for (const auto& r : records)
    aggregate[{r.k, r.ell, r.i}] += r.labelled_count;
  for (const auto& [key, total] : aggregate) {
    const auto [k, ell, i] = key;
    const long double log_bound =
        k * (std::log(2.0L) - 1.0L) + std::lgamma(k + 1.0L) +
        (k + 2 * ell + i) * std::log(static_cast<long double>(k));
    AggregateBoundRow row;
    row.k = k;
    row.ell = ell;
    row.i = i;
    row.labelled_total = total;
    row.log_bound = static_cast<double>(log_bound);
    row.ratio = static_cast<double>(
        std::exp(std::log(static_cast<long double>(total)) - log_bound));
    // comparison in log space with a safety margin far above rounding
    row.pass = total == 0 ||
               std::log(static_cast<long double>(total)) <= log_bound - 1e-9L;
    report.all_pass = report.all_pass && row.pass;
    report.rows.push_back(row);
  }
  for (const auto& r : records) {
    const long double y =
        static_cast<long double>(r.q) / static_cast<long double>(r.k);
    const long double psi = psi_rate(static_cast<double>(y), eps);
    const long double log_bound =
        r.k * std::log(psi) + std::lgamma(r.k + 1.0L) +
        (r.k + 2 * r.ell + r.i) * std::log(static_cast<long double>(r.k));
    PsiBoundRow row;
    row.k = r.k;
    row.ell = r.ell;
    row.i = r.i;
    row.q = r.q;
    row.labelled = r.labelled_count;
    row.log_bound = static_cast<double>(log_bound);
    row.ratio =
        r.labelled_count == 0
            ? 0.0
            : static_cast<double>(std::exp(
                  std::log(static_cast<long double>(r.labelled_count)) -
                  log_bound));
    report.psi_rows.push_back(row);
  }
  return report;
}

std::string census_to_json(const std::vector<EnumerationRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records)
    arr.push_back({{"k", r.k},
                   {"ell", r.ell},
                   {"i", r.i},
                   {"q", r.q},
                   {"labelled_count", r.labelled_count},
                   {"unlabeled_count", r.unlabeled_count}});
  return arr.dump(2);
}

void write_census_table(std::ostream& out,
                        const std::vector<EnumerationRecord>& records) {
  out << "  k ell   i   q      labelled     unlabeled\n";
  char line[96];
  for (const auto& r : records) {
    std::snprintf(line, sizeof line, "%3d %3d %3d %3d %13llu %13llu\n", r.k,
                  r.ell, r.i, r.q,
                  static_cast<unsigned long long>(r.labelled_count),
                  static_cast<unsigned long long>(r.unlabeled_count));
    out << line;
  }
}

std::string bound_report_to_json(const BoundReport& report) {
  nlohmann::json j;
  j["eps"] = report.eps;
  j["all_pass"] = report.all_pass;
  j["labelled_bound"] = nlohmann::json::array();
  for (const auto& r : report.rows)
    j["labelled_bound"].push_back({{"k", r.k},
                                   {"ell", r.ell},
                                   {"i", r.i},
                                   {"labelled_total", r.labelled_total},
                                   {"log_bound", r.log_bound},
                                   {"ratio", r.ratio},
                                   {"pass", r.pass}});
  j["core_size_bound_theta1"] = nlohmann::json::array();
  for (const auto& r : report.psi_rows)
    j["core_size_bound_theta1"].push_back({{"k", r.k},
                                           {"ell", r.ell},
                                           {"i", r.i},
                                           {"q", r.q},
                                           {"labelled", r.labelled},
                                           {"log_bound", r.log_bound},
                                           {"ratio", r.ratio}});
  return j.dump(2);
}

}  // namespace k4perc
