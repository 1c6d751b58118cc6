#include "subcount/io.hpp"

#include <fstream>
#include <sstream>

namespace subcount {

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedFile("cannot open " + path);
  std::string line;
  std::size_t n = 0;
  bool have_n = false;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto where = path + ":" + std::to_string(lineno);
    if (line.rfind("# n=", 0) == 0) {
      if (have_n) throw MalformedFile(where + ": duplicate header");
      std::istringstream hs(line.substr(4));
      if (!(hs >> n)) throw MalformedFile(where + ": bad header");
      have_n = true;
      continue;
    }
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::uint64_t u, v;
    if (!(ls >> u)) continue;  // blank / comment-only line
    std::string rest;
    if (!(ls >> v) || (ls >> rest))
      throw MalformedFile(where + ": expected 'u v'");
    if (!have_n) throw MalformedFile(path + ": missing '# n=<n>' header");
    if (u >= v) throw MalformedFile(where + ": require u < v");
    if (v >= n) throw MalformedFile(where + ": vertex id >= n");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!have_n) throw MalformedFile(path + ": missing '# n=<n>' header");
  Graph g = Graph::from_edges(n, edges);
  if (g.num_edges() != edges.size())
    throw InvariantViolation(path + ": duplicate edges");
  g.validate();
  return g;
}

void save_edge_list(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "# n=" << g.num_vertices() << "\n";
  for (const auto& e : g.edges()) out << e.u << " " << e.v << "\n";
}

}  // namespace subcount
