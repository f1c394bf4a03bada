#include "vact/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <vector>

#include "vact/error.hpp"

namespace vact {

namespace {

[[noreturn]] void fail(int line, const std::string &message) {
  throw InvalidInput("line " + std::to_string(line) + ": " + message);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Exactly two non-negative integers separated by whitespace.
std::optional<std::pair<long, long>> two_integers(std::string_view s) {
  long values[2] = {0, 0};
  std::size_t pos = 0;
  for (long &value : values) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    const char *begin = s.data() + pos;
    const auto [end, ec] = std::from_chars(begin, s.data() + s.size(), value);
    if (ec != std::errc() || end == begin) return std::nullopt;
    pos = static_cast<std::size_t>(end - s.data());
  }
  if (!trim(s.substr(pos)).empty()) return std::nullopt;
  return std::pair{values[0], values[1]};
}

} // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::pair<long, long>> header;
  std::vector<Edge> edges;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto pair = two_integers(line);
    if (!header) {
      if (!pair) fail(line_no, "expected header \"n m\", got \"" + std::string(line) + "\"");
      const auto [n, m] = *pair;
      if (n < 0 || n > kMaxVertices) {
        fail(line_no, "vertex count " + std::to_string(n) + " outside 0.." +
                          std::to_string(kMaxVertices));
      }
      if (m < 0 || m > n * (n - 1) / 2) {
        fail(line_no, "edge count " + std::to_string(m) + " impossible for " + std::to_string(n) +
                          " vertices");
      }
      header = pair;
      continue;
    }
    if (!pair) fail(line_no, "expected edge \"u v\", got \"" + std::string(line) + "\"");
    const auto [n, m] = *header;
    if (static_cast<long>(edges.size()) == m) {
      fail(line_no, "more edge lines than the " + std::to_string(m) + " announced");
    }
    const auto [u, v] = *pair;
    if (u < 1 || u > n || v < 1 || v > n) {
      fail(line_no, "label out of range 1.." + std::to_string(n) + " in edge " +
                        std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) fail(line_no, "self-loop at vertex " + std::to_string(u));
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!header) fail(line_no, "missing header \"n m\"");
  if (static_cast<long>(edges.size()) != header->second) {
    fail(line_no, "expected " + std::to_string(header->second) + " edges, found " +
                      std::to_string(edges.size()));
  }
  return new_graph(static_cast<int>(header->first), edges);
}

std::string emit_edge_list(const Graph &g) {
  std::ostringstream out;
  const std::vector<Edge> edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const Edge &e : edges) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph read_edge_list_file(const std::string &path) {
  if (path == "-") {
    const std::string text{std::istreambuf_iterator<char>(std::cin), {}};
    return parse_edge_list(text);
  }
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  const std::string text{std::istreambuf_iterator<char>(in), {}};
  try {
    return parse_edge_list(text);
  } catch (const InvalidInput &e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

} // namespace vact
