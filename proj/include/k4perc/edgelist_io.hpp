#ifndef K4PERC_EDGELIST_IO_HPP
#define K4PERC_EDGELIST_IO_HPP

#include <iosfwd>
#include <string>

#include "k4perc/graph.hpp"

namespace k4perc {

// Text edge-list format:
//   # comment lines start with '#'
//   n m
//   u v          (m lines, 0-based, whitespace separated)
// The writer emits edges sorted by (min endpoint, max endpoint).

Graph read_edge_list(std::istream& in,
                     DuplicateEdgePolicy dup = DuplicateEdgePolicy::Reject);
Graph read_edge_list_file(const std::string& path,
                          DuplicateEdgePolicy dup = DuplicateEdgePolicy::Reject);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace k4perc

#endif  // K4PERC_EDGELIST_IO_HPP
