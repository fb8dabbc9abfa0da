#ifndef K4PERC_ENUMERATION_HPP
#define K4PERC_ENUMERATION_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "k4perc/graph.hpp"

namespace k4perc {

// One census row: labelled and unlabeled counts of irreducible percolating
// graphs on k vertices with excess ell, i degree-2 vertices and core size
// q (q = 2 encodes seed graphs).
struct EnumerationRecord {
  int k;
  int ell;
  int i;
  int q;
  std::uint64_t labelled_count;
  std::uint64_t unlabeled_count;
};

struct CensusOptions {
  int threads = 1;
  // guard against unbounded canonical-code sets
  std::uint64_t max_stored_codes = 50'000'000;
};

// Exhaustive census over all labelled graphs on k vertices with
// m = 2k-3+ell edges, for each ell <= ell_max. Exhaustive mode supports
// 3 <= k <= 8. Records are sorted by (ell, i, q); zero rows are omitted.
// The result is independent of the thread count.
std::vector<EnumerationRecord> enumerate_census(int k, int ell_max,
                                                const CensusOptions& opts = {});

// Canonical form for n <= 10: identical codes iff isomorphic. Big-endian
// packed bits of the lexicographically minimal relabelled adjacency
// matrix.
std::vector<std::uint8_t> canonical_code(const Graph& g);

// The unique minimum-degree-3 irreducible percolating graph on 7 vertices,
// found by exhaustive search (and verified unique).
Graph find_seven_vertex_core();

// Replace edge (u,v) of the 7-vertex core by a 4-clique missing the (u,v)
// edge: remove (u,v), add vertices 7,8 adjacent to u, v and each other.
// The result has 9 vertices and 15 edges.
Graph nine_vertex_construction(const Graph& core7, Edge e);

// Checks, per (k, ell, i) aggregate, the labelled-count bound
//   I <= (2/e)^k k! k^{k+2*ell+i},
// and reports, per record, the observational core-size-sensitive bound
//   I <= psi_eps(q/k)^k k! k^{k+2*ell+i}
// whose multiplicative constant is not pinned down (theta = 1 assumed).
struct AggregateBoundRow {
  int k, ell, i;
  std::uint64_t labelled_total;
  double log_bound;  // natural log of the bound
  double ratio;      // labelled_total / bound
  bool pass;
};
struct PsiBoundRow {
  int k, ell, i, q;
  std::uint64_t labelled;
  double log_bound;
  double ratio;
};
struct BoundReport {
  double eps;
  std::vector<AggregateBoundRow> rows;
  std::vector<PsiBoundRow> psi_rows;
  bool all_pass;
};
BoundReport verify_count_bounds(const std::vector<EnumerationRecord>& records,
                                double eps);

std::string census_to_json(const std::vector<EnumerationRecord>& records);
void write_census_table(std::ostream& out,
                        const std::vector<EnumerationRecord>& records);
std::string bound_report_to_json(const BoundReport& report);

}  // namespace k4perc

#endif  // K4PERC_ENUMERATION_HPP
