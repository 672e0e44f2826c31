#pragma once

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>

#include "flow3/multigraph.hpp"

namespace flow3 {

struct ParseError : std::runtime_error {
  int line;
  ParseError(const std::string& msg, int line_no)
      : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"),
        line(line_no) {}
};

/// Parses the multigraph edge-list format:
///   p mgraph <n> <m>
///   e <u> <v>        (0-based ids, one line per edge, parallels repeated)
///   c ...            (comment, ignored)
inline MultiGraph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1, m = -1;
  MultiGraph g;
  int seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (n != -1) throw ParseError("duplicate header", line_no);
      std::string fmt;
      if (!(ls >> fmt >> n >> m) || fmt != "mgraph" || n < 0 || m < 0)
        throw ParseError("malformed header, expected 'p mgraph <n> <m>'", line_no);
      g = MultiGraph(n);
      continue;
    }
    if (tag == "e") {
      if (n == -1) throw ParseError("edge before header", line_no);
      long long u, v;
      if (!(ls >> u >> v)) throw ParseError("malformed edge line", line_no);
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw ParseError("vertex id out of range", line_no);
      if (u == v) throw ParseError("loop edge rejected", line_no);
      g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
      ++seen;
      continue;
    }
    throw ParseError("unknown line tag '" + tag + "'", line_no);
  }
  if (n == -1) throw ParseError("missing header", line_no);
  if (seen != m) throw ParseError("edge count does not match header", line_no);
  return g;
}

inline MultiGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

/// Edge-list text in edge-id order; parse(serialize(g)) == g edge for edge.
inline std::string serialize_edge_list(const MultiGraph& g) {
  std::ostringstream out;
  out << "p mgraph " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const Edge& e : g.edges()) out << "e " << e.u << " " << e.v << "\n";
  return out.str();
}

/// Canonical text: header plus edges sorted lexicographically as
/// normalized (min,max) pairs. Used for hashing only.
inline std::string canonical_text(const MultiGraph& g) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(g.edge_count());
  for (const Edge& e : g.edges())
    pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(pairs.begin(), pairs.end());
  std::ostringstream out;
  out << "p mgraph " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : pairs) out << "e " << u << " " << v << "\n";
  return out.str();
}

namespace detail {

inline std::string fnv1a_hex(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hexd = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hexd[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace detail

/// Hex digest of the canonical serialization.
inline std::string graph_digest(const MultiGraph& g) {
  return detail::fnv1a_hex(canonical_text(g));
}

/// Parses a graph6 string (simple graphs, n <= 258047).
inline MultiGraph parse_graph6(const std::string& s) {
  size_t pos = 0;
  if (s.compare(0, 10, ">>graph6<<") == 0) pos = 10;
  if (pos >= s.size()) throw ParseError("empty graph6 string", 1);
  auto val = [&](size_t i) -> int {
    if (i >= s.size()) throw ParseError("truncated graph6 string", 1);
    int c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw ParseError("invalid graph6 character", 1);
    return c - 63;
  };
  long long n;
  if (s[pos] != '~') {
    n = val(pos);
    pos += 1;
  } else if (pos + 1 < s.size() && s[pos + 1] != '~') {
    n = (static_cast<long long>(val(pos + 1)) << 12) | (val(pos + 2) << 6) | val(pos + 3);
    pos += 4;
  } else {
    throw ParseError("graph6 order too large", 1);
  }
  MultiGraph g(static_cast<int>(n));
  int bit = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) {
      int chunk = val(pos + bit / 6);
      int b = (chunk >> (5 - bit % 6)) & 1;
      ++bit;
      if (b) g.add_edge(u, v);
    }
  return g;
}

/// graph6 encoding of a simple graph.
inline std::string to_graph6(const MultiGraph& g) {
  if (!g.is_simple())
    throw std::invalid_argument("graph6: defined for simple graphs only");
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  int acc = 0, nbits = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | adj[u][v];
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

/// Reads either format: edge-list if a 'p'/'c'/'e' tag leads, graph6 otherwise.
inline MultiGraph parse_input(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty input", 1);
  char c = text[first];
  if (c == 'p' || c == 'c' || c == 'e') return parse_edge_list(text);
  std::string line = text.substr(first);
  size_t end = line.find_first_of("\r\n");
  if (end != std::string::npos) line = line.substr(0, end);
  return parse_graph6(line);
}

}  // namespace flow3
