#include "k4perc/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <mutex>
#include <ostream>
#include <thread>

#include "k4perc/bootstrap.hpp"
#include "k4perc/clique_process.hpp"
#include "k4perc/rng.hpp"

#include "json.hpp"

namespace k4perc {

double p_from_alpha(double alpha, std::int64_t n) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  const double p =
      std::sqrt(alpha / (static_cast<double>(n) * std::log(static_cast<double>(n))));
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("p = sqrt(alpha/(n log n)) outside (0,1)");
  return p;
}

namespace {

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (cfg.alphas.empty()) throw std::invalid_argument("no alpha values");
  if (cfg.n > cfg.max_n)
    throw ResourceLimitError("n exceeds the configured guard of " +
                             std::to_string(cfg.max_n));
  for (double alpha : cfg.alphas) {
    const double p = p_from_alpha(alpha, cfg.n);
    const double expected_edges =
        0.5 * static_cast<double>(cfg.n) * static_cast<double>(cfg.n - 1) * p;
    if (expected_edges > static_cast<double>(cfg.max_expected_edges))
      throw ResourceLimitError("expected edge count " +
                               std::to_string(expected_edges) +
                               " exceeds the configured guard");
  }
}

ScanRow run_trial(const ExperimentConfig& cfg, std::size_t alpha_idx,
                  int trial) {
  ScanRow row{};
  row.n = cfg.n;
  row.alpha = cfg.alphas[alpha_idx];
  row.p = p_from_alpha(row.alpha, cfg.n);
  row.trial = trial;
  row.seed = derive_seed(cfg.master_seed, alpha_idx, trial);
  const auto start = std::chrono::steady_clock::now();

  const Graph g = sample_gnp(static_cast<int>(cfg.n), row.p, row.seed);
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0) ++row.isolated;
  const ProcessState state = run_clique_process(g);
  row.max_clique = static_cast<int>(state.max_cluster_size());
  row.percolated = cfg.n <= 1 || state.spans_all_vertices();
  row.seed_edges = cfg.count_seed_edges ? seed_edge_census(g) : -1;

  if (cfg.record_timings) {
    const auto stop = std::chrono::steady_clock::now();
    row.runtime_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
  }
  return row;
}

std::vector<ScanRow> run_scan(const ExperimentConfig& cfg) {
  validate_config(cfg);
  const std::size_t total = cfg.alphas.size() * cfg.trials;
  std::vector<ScanRow> rows(total);
  std::atomic<std::size_t> next{0};
  std::vector<std::string> errors;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= total) return;
      try {
        rows[idx] = run_trial(cfg, idx / cfg.trials,
                              static_cast<int>(idx % cfg.trials));
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        errors.emplace_back(e.what());
        return;
      }
    }
  };
  const int threads = std::max(1, cfg.threads);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (!errors.empty()) throw std::runtime_error(errors.front());
  return rows;
}

std::string format_double(double x) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace

std::vector<ScanRow> percolation_probability_scan(const ExperimentConfig& cfg) {
  return run_scan(cfg);
}

std::vector<CliqueScanSummary> largest_clique_scan(const ExperimentConfig& cfg) {
  const auto rows = run_scan(cfg);
  const double log_n = std::log(static_cast<double>(cfg.n));
  std::vector<CliqueScanSummary> out;
  for (std::size_t a = 0; a < cfg.alphas.size(); ++a) {
    std::vector<double> ratios;
    for (int t = 0; t < cfg.trials; ++t)
      ratios.push_back(rows[a * cfg.trials + t].max_clique / log_n);
    std::sort(ratios.begin(), ratios.end());
    const std::size_t T = ratios.size();
    double mean = 0;
    for (double r : ratios) mean += r;
    mean /= static_cast<double>(T);
    double var = 0;
    for (double r : ratios) var += (r - mean) * (r - mean);
    const double sd = T > 1 ? std::sqrt(var / static_cast<double>(T - 1)) : 0.0;
    auto quantile = [&](double f) {
      return ratios[std::min(T - 1, static_cast<std::size_t>(f * T))];
    };
    out.push_back(CliqueScanSummary{cfg.n, cfg.alphas[a], cfg.trials, mean,
                                    sd, ratios.front(), quantile(0.25),
                                    quantile(0.5), quantile(0.75),
                                    ratios.back()});
  }
  return out;
}

std::int64_t seed_edge_census(const Graph& g, std::int64_t cap) {
  std::int64_t count = 0;
  std::int64_t examined = 0;
  for (const auto& [u, v] : g.edges()) {
    if (cap > 0 && examined >= cap) break;
    ++examined;
    if (is_contagious(g, u, v)) ++count;
  }
  return count;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << "n,alpha,p,trial,seed,percolated,max_clique,isolated,seed_edges,"
         "runtime_ms\n";
  for (const auto& r : rows) {
    out << r.n << ',' << format_double(r.alpha) << ',' << format_double(r.p)
        << ',' << r.trial << ',' << r.seed << ',' << (r.percolated ? 1 : 0)
        << ',' << r.max_clique << ',' << r.isolated << ',';
    if (r.seed_edges >= 0) out << r.seed_edges;
    out << ',' << format_double(r.runtime_ms) << '\n';
  }
}

std::string scan_rows_to_json(const std::vector<ScanRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j{{"n", r.n},
                     {"alpha", r.alpha},
                     {"p", r.p},
                     {"trial", r.trial},
                     {"seed", r.seed},
                     {"percolated", r.percolated},
                     {"max_clique", r.max_clique},
                     {"isolated", r.isolated},
                     {"runtime_ms", r.runtime_ms}};
    if (r.seed_edges >= 0)
      j["seed_edges"] = r.seed_edges;
    else
      j["seed_edges"] = nullptr;
    arr.push_back(j);
  }
  return arr.dump(2);
}

std::string clique_summaries_to_json(
    const std::vector<CliqueScanSummary>& summaries) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : summaries)
    arr.push_back({{"n", s.n},
                   {"alpha", s.alpha},
                   {"trials", s.trials},
                   {"mean_ratio", s.mean_ratio},
                   {"sd_ratio", s.sd_ratio},
                   {"min_ratio", s.min_ratio},
                   {"q25_ratio", s.q25_ratio},
                   {"median_ratio", s.median_ratio},
                   {"q75_ratio", s.q75_ratio},
                   {"max_ratio", s.max_ratio}});
  return arr.dump(2);
}

}  // namespace k4perc
