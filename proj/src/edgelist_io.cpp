#include "k4perc/edgelist_io.hpp"

#include <fstream>
#include <sstream>

namespace k4perc {

namespace {

// Next line that is neither blank nor a '#' comment.
bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in, DuplicateEdgePolicy dup) {
  std::string line;
  if (!next_content_line(in, line))
    throw std::invalid_argument("edge list: missing header line");
  std::istringstream header(line);
  std::int64_t n = 0, m = 0;
  if (!(header >> n >> m) || n < 0 || m < 0)
    throw std::invalid_argument("edge list: bad header line");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    if (!next_content_line(in, line))
      throw std::invalid_argument("edge list: fewer edges than header claims");
    std::istringstream row(line);
    int u = 0, v = 0;
    if (!(row >> u >> v))
      throw std::invalid_argument("edge list: bad edge line: " + line);
    edges.emplace_back(u, v);
  }
  return Graph::from_edge_list(static_cast<int>(n), edges, dup);
}

Graph read_edge_list_file(const std::string& path, DuplicateEdgePolicy dup) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return read_edge_list(in, dup);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot open " + path);
  write_edge_list(out, g);
  out.flush();
  if (!out) throw std::ios_base::failure("write failed: " + path);
}

}  // namespace k4perc
