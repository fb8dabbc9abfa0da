// Command-line front end: sampling, closures, structure analysis, the
// exhaustive census, the constants report and the Monte Carlo scans.
//
// Exit codes: 0 success (percolate: graph percolates), 1 percolate: graph
// does not percolate, 2 usage or input error, 3 I/O error, 4 resource
// guard tripped.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "k4perc/asymptotics.hpp"
#include "k4perc/bootstrap.hpp"
#include "k4perc/clique_process.hpp"
#include "k4perc/edgelist_io.hpp"
#include "k4perc/enumeration.hpp"
#include "k4perc/experiments.hpp"
#include "k4perc/graph.hpp"
#include "k4perc/structure.hpp"

namespace {

using namespace k4perc;

int default_threads() {
  if (const char* env = std::getenv("K4PERC_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot open " + path);
  out << text << '\n';
  if (!out) throw std::ios_base::failure("write failed: " + path);
}

struct Cli {
  std::uint64_t seed = 0;
  int threads = default_threads();
  std::string out;
  std::string format = "csv";
  bool strict = false;

  DuplicateEdgePolicy dup() const {
    return strict ? DuplicateEdgePolicy::Reject : DuplicateEdgePolicy::Dedupe;
  }
};

int run(int argc, char** argv) {
  CLI::App app{"K4 bootstrap percolation toolkit"};
  app.require_subcommand(1);
  Cli cli;
  app.add_option("--seed", cli.seed, "master RNG seed")->capture_default_str();
  app.add_option("--threads", cli.threads,
                 "worker threads (default from K4PERC_THREADS)")
      ->capture_default_str();
  app.add_option("--out", cli.out, "output path ('-' = stdout)");
  app.add_option("--format", cli.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--strict", cli.strict, "reject duplicate edges in inputs");
  app.fallthrough();

  // gnp
  auto* gnp = app.add_subcommand("gnp", "sample G(n,p) and write an edge list");
  std::int64_t gnp_n = 100;
  double gnp_p = -1, gnp_alpha = -1;
  gnp->add_option("--n", gnp_n, "vertex count")->required();
  gnp->add_option("--p", gnp_p, "edge probability");
  gnp->add_option("--alpha", gnp_alpha,
                  "sets p = sqrt(alpha/(n log n)) when --p is absent");

  // closure
  auto* closure = app.add_subcommand("closure", "write the K4 closure");
  std::string closure_in;
  std::string closure_algo = "fast";
  closure->add_option("--in", closure_in, "input edge list")->required();
  closure->add_option("--algo", closure_algo, "naive or fast")
      ->check(CLI::IsMember({"naive", "fast"}));

  // percolate
  auto* perc = app.add_subcommand("percolate",
                                  "exit 0 if the graph percolates, 1 if not");
  std::string perc_in;
  std::string perc_algo = "fast";
  perc->add_option("--in", perc_in, "input edge list")->required();
  perc->add_option("--algo", perc_algo, "naive or fast")
      ->check(CLI::IsMember({"naive", "fast"}));

  // core
  auto* core = app.add_subcommand(
      "core", "core decomposition of an irreducible percolating graph");
  std::string core_in;
  core->add_option("--in", core_in, "input edge list")->required();

  // enumerate
  auto* enumerate = app.add_subcommand(
      "enumerate", "census of irreducible percolating graphs");
  int enum_k = 7, enum_ell_max = 0;
  double bounds_eps = 0.05;
  std::string bounds_out;
  enumerate->add_option("--k", enum_k, "vertex count (3..8)")->required();
  enumerate->add_option("--ell-max", enum_ell_max, "maximum excess");
  enumerate->add_option("--bounds-out", bounds_out,
                        "also write the counting-bound report");
  enumerate->add_option("--bounds-eps", bounds_eps,
                        "eps for the core-size-sensitive bound");

  // constants
  auto* constants =
      app.add_subcommand("constants", "numeric constants report");
  int const_k = 8;
  constants->add_option("--k", const_k, "evaluation point (k >= 8)");

  // scan-threshold
  auto* scan = app.add_subcommand(
      "scan-threshold", "percolation probability across an alpha grid");
  std::int64_t scan_n = 1000;
  std::vector<double> scan_alphas;
  int scan_trials = 20;
  bool scan_seed_edges = false, scan_timings = false;
  scan->add_option("--n", scan_n, "vertex count")->required();
  scan->add_option("--alpha", scan_alphas, "alpha grid")->required();
  scan->add_option("--trials", scan_trials, "trials per alpha");
  scan->add_flag("--seed-edges", scan_seed_edges,
                 "also count seed edges per trial");
  scan->add_flag("--timings", scan_timings,
                 "record wall-clock per trial (breaks byte-reproducibility)");

  // scan-clique
  auto* clique = app.add_subcommand(
      "scan-clique", "largest percolating clique / log n statistics");
  std::int64_t clique_n = 1000;
  std::vector<double> clique_alphas;
  int clique_trials = 20;
  std::string clique_rows_out;
  clique->add_option("--n", clique_n, "vertex count")->required();
  clique->add_option("--alpha", clique_alphas, "alpha grid")->required();
  clique->add_option("--trials", clique_trials, "trials per alpha");
  clique->add_option("--rows-out", clique_rows_out, "also write per-trial rows");

  // seed-census
  auto* census = app.add_subcommand("seed-census", "count seed edges");
  std::string census_in;
  std::int64_t census_cap = 0;
  std::int64_t census_n = 0;
  double census_alpha = -1, census_p = -1;
  census->add_option("--in", census_in, "input edge list");
  census->add_option("--cap", census_cap, "stop after this many edges (0 = all)");
  census->add_option("--n", census_n, "sample G(n,p) instead of reading a file");
  census->add_option("--alpha", census_alpha, "alpha for sampling");
  census->add_option("--p", census_p, "p for sampling");

  CLI11_PARSE(app, argc, argv);

  if (gnp->parsed()) {
    const double p =
        gnp_p >= 0 ? gnp_p : p_from_alpha(gnp_alpha, gnp_n);
    const Graph g = sample_gnp(static_cast<int>(gnp_n), p, cli.seed);
    if (cli.out.empty() || cli.out == "-")
      write_edge_list(std::cout, g);
    else
      write_edge_list_file(cli.out, g);
    return 0;
  }

  if (closure->parsed()) {
    const Graph g = read_edge_list_file(closure_in, cli.dup());
    const Graph result =
        closure_algo == "naive" ? k4_closure_naive(g) : k4_closure_fast(g);
    if (cli.out.empty() || cli.out == "-")
      write_edge_list(std::cout, result);
    else
      write_edge_list_file(cli.out, result);
    return 0;
  }

  if (perc->parsed()) {
    const Graph g = read_edge_list_file(perc_in, cli.dup());
    const bool ok = perc_algo == "naive" ? percolates(g) : percolates_fast(g);
    std::cout << (ok ? "percolates" : "does not percolate") << '\n';
    return ok ? 0 : 1;
  }

  if (core->parsed()) {
    const Graph g = read_edge_list_file(core_in, cli.dup());
    write_text(cli.out, core_decomposition_to_json(core_decomposition(g)));
    return 0;
  }

  if (enumerate->parsed()) {
    CensusOptions opts;
    opts.threads = cli.threads;
    const auto records = enumerate_census(enum_k, enum_ell_max, opts);
    write_census_table(std::cerr, records);
    write_text(cli.out, census_to_json(records));
    if (!bounds_out.empty())
      write_text(bounds_out, bound_report_to_json(
                                 verify_count_bounds(records, bounds_eps)));
    return 0;
  }

  if (constants->parsed()) {
    write_text(cli.out, constants_report_to_json(proof_constants(const_k)));
    return 0;
  }

  if (scan->parsed()) {
    ExperimentConfig cfg;
    cfg.n = scan_n;
    cfg.alphas = scan_alphas;
    cfg.trials = scan_trials;
    cfg.master_seed = cli.seed;
    cfg.threads = cli.threads;
    cfg.count_seed_edges = scan_seed_edges;
    cfg.record_timings = scan_timings;
    const auto rows = percolation_probability_scan(cfg);
    if (cli.format == "json") {
      write_text(cli.out, scan_rows_to_json(rows));
    } else if (cli.out.empty() || cli.out == "-") {
      write_scan_csv(std::cout, rows);
    } else {
      std::ofstream out(cli.out);
      if (!out) throw std::ios_base::failure("cannot open " + cli.out);
      write_scan_csv(out, rows);
      if (!out) throw std::ios_base::failure("write failed: " + cli.out);
    }
    return 0;
  }

  if (clique->parsed()) {
    ExperimentConfig cfg;
    cfg.n = clique_n;
    cfg.alphas = clique_alphas;
    cfg.trials = clique_trials;
    cfg.master_seed = cli.seed;
    cfg.threads = cli.threads;
    if (!clique_rows_out.empty()) {
      const auto rows = percolation_probability_scan(cfg);
      std::ofstream out(clique_rows_out);
      if (!out) throw std::ios_base::failure("cannot open " + clique_rows_out);
      write_scan_csv(out, rows);
    }
    write_text(cli.out, clique_summaries_to_json(largest_clique_scan(cfg)));
    return 0;
  }

  if (census->parsed()) {
    Graph g;
    if (!census_in.empty()) {
      g = read_edge_list_file(census_in, cli.dup());
    } else if (census_n > 0) {
      const double p =
          census_p >= 0 ? census_p : p_from_alpha(census_alpha, census_n);
      g = sample_gnp(static_cast<int>(census_n), p, cli.seed);
    } else {
      throw std::invalid_argument("seed-census: need --in or --n");
    }
    const std::int64_t count = seed_edge_census(g, census_cap);
    std::ostringstream msg;
    msg << "{\"seed_edges\": " << count << ", \"m\": " << g.m() << "}";
    write_text(cli.out, msg.str());
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const k4perc::ResourceLimitError& e) {
    std::cerr << "resource guard: " << e.what() << '\n';
    return 4;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
