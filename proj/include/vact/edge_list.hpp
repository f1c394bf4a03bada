#ifndef VACT_EDGE_LIST_HPP
#define VACT_EDGE_LIST_HPP

#include <string>
#include <string_view>

#include "vact/graph.hpp"

namespace vact {

/// Text format: a header line "n m" followed by m lines "u v" with 1-based
/// labels. Blank lines and lines starting with '#' are skipped. Errors are
/// InvalidInput with a "line N:" prefix.
Graph parse_edge_list(std::string_view text);

/// Header plus edges in ascending order; parse_edge_list inverts it.
std::string emit_edge_list(const Graph &g);

/// Reads a whole file ("-" means standard input) and parses it.
Graph read_edge_list_file(const std::string &path);

} // namespace vact

#endif // VACT_EDGE_LIST_HPP
