#pragma once

#include <string>

#include "subcount/graph.hpp"

namespace subcount {

// Edge-list text format: a required "# n=<n>" header line (so isolated
// vertices survive round-trips), then one "u v" pair per line with 0-based
// ids and u < v. '#' starts a comment.
struct MalformedFile : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph load_edge_list(const std::string& path);
void save_edge_list(const std::string& path, const Graph& g);

}  // namespace subcount
