#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lct/errors.hpp"
#include "lct/graph.hpp"
#include "lct/treedec.hpp"

namespace lct {

enum class GraphFormat { edgelist, graph6, dot };

inline std::string to_string(GraphFormat f) {
  switch (f) {
    case GraphFormat::edgelist: return "edgelist";
    case GraphFormat::graph6: return "graph6";
    case GraphFormat::dot: return "dot";
  }
  return "?";
}

inline GraphFormat parse_format(const std::string& name) {
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  if (name == "dot") return GraphFormat::dot;
  throw parse_error("unknown graph format '" + name + "'", 0);
}

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Non-empty lines with their 1-based numbers; lines starting with '#' skipped.
inline std::vector<std::pair<int, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    out.emplace_back(no, line);
  }
  return out;
}

inline std::vector<long long> read_ints(const std::string& text, int line_no) {
  std::istringstream ss(text);
  std::vector<long long> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    long long x = 0;
    try {
      x = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok.empty()) throw parse_error("expected integer, got '" + tok + "'", line_no);
    out.push_back(x);
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// edgelist

inline Graph read_edgelist(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw parse_error("empty input, expected header 'n m'", 0);
  const auto head = detail::read_ints(lines[0].second, lines[0].first);
  if (head.size() != 2) throw parse_error("header must be 'n m'", lines[0].first);
  const long long n = head[0], m = head[1];
  if (n < 0 || m < 0) throw parse_error("negative count in header", lines[0].first);
  if (n > kMaxVertices) throw size_limit("graph has " + std::to_string(n) + " vertices", kMaxVertices);
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw parse_error("header announces " + std::to_string(m) + " edges, found " +
                          std::to_string(lines.size() - 1),
                      lines.size() > static_cast<std::size_t>(m) + 1 ? lines[m + 1].first : 0);
  Graph g(static_cast<int>(n));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [no, text] = lines[i];
    const auto uv = detail::read_ints(text, no);
    if (uv.size() != 2) throw parse_error("edge line must be 'u v'", no);
    if (uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n)
      throw parse_error("vertex out of range 0.." + std::to_string(n - 1), no);
    const auto u = static_cast<Vertex>(uv[0]), v = static_cast<Vertex>(uv[1]);
    if (u == v) throw parse_error("loop at vertex " + std::to_string(u), no);
    if (g.has_edge(u, v))
      throw parse_error("duplicate edge " + std::to_string(u) + " " + std::to_string(v), no);
    g.add_edge(u, v);
  }
  return g;
}

inline void write_edgelist(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

// ---------------------------------------------------------------------------
// graph6

inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string s;
  if (n <= 62) {
    s.push_back(static_cast<char>(63 + n));
  } else {
    s.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) s.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        s.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  if (filled > 0) s.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return s;
}

inline Graph from_graph6(std::string s, int line_no = 0) {
  s = detail::trim(s);
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  if (s.empty()) throw parse_error("empty graph6 string", line_no);
  for (char ch : s)
    if (ch < 63 || ch > 126) throw parse_error("invalid graph6 character", line_no);
  std::size_t pos = 0;
  long n = s[pos++] - 63;
  if (n == 63) {
    if (s.size() < 4) throw parse_error("truncated graph6 size", line_no);
    if (s[1] == 126) throw size_limit("graph6 input too large", kMaxVertices);
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | (s[pos++] - 63);
  }
  if (n > kMaxVertices) throw size_limit("graph has " + std::to_string(n) + " vertices", kMaxVertices);
  const long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() - pos != need)
    throw parse_error("graph6 body has " + std::to_string(s.size() - pos) + " bytes, expected " +
                          std::to_string(need),
                      line_no);
  Graph g(static_cast<int>(n));
  long k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = s[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  if (bits % 6 != 0 && ((s.back() - 63) & ((1 << (6 - bits % 6)) - 1)) != 0)
    throw parse_error("nonzero graph6 padding bits", line_no);
  return g;
}

inline Graph read_graph6(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.size() != 1) throw parse_error("expected exactly one graph6 line", lines.empty() ? 0 : lines[1].first);
  return from_graph6(lines[0].second, lines[0].first);
}

// ---------------------------------------------------------------------------
// dot (write only)

inline void write_dot(std::ostream& out, const Graph& g) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') q.push_back('\\');
      q.push_back(ch);
    }
    return q + "\"";
  };
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << " [label=" << quote(g.label(v)) << "];\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

// ---------------------------------------------------------------------------
// Dispatch

/// graph6 when the first content line is a single token, edgelist otherwise.
inline GraphFormat detect_format(const std::string& text) {
  std::istringstream in(text);
  const auto lines = detail::content_lines(in);
  if (lines.empty()) return GraphFormat::edgelist;
  const std::string& first = lines[0].second;
  if (first.rfind("graph", 0) == 0 || first.rfind("strict", 0) == 0) return GraphFormat::dot;
  if (first.find_first_of(" \t") == std::string::npos && first.find_first_of("0123456789") != 0)
    return GraphFormat::graph6;
  return GraphFormat::edgelist;
}

inline Graph read_graph(std::istream& in, std::optional<GraphFormat> format = std::nullopt) {
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const GraphFormat f = format.value_or(detect_format(text));
  std::istringstream src(text);
  switch (f) {
    case GraphFormat::edgelist: return read_edgelist(src);
    case GraphFormat::graph6: return read_graph6(src);
    case GraphFormat::dot: throw parse_error("dot is a write-only format", 0);
  }
  throw parse_error("unknown format", 0);
}

inline Graph read_graph_file(const std::string& path, std::optional<GraphFormat> format = std::nullopt) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path, 0);
  if (!format) {
    if (path.ends_with(".g6") || path.ends_with(".graph6")) format = GraphFormat::graph6;
    else if (path.ends_with(".dot")) format = GraphFormat::dot;
  }
  return read_graph(in, format);
}

inline void write_graph(std::ostream& out, const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::edgelist: write_edgelist(out, g); break;
    case GraphFormat::graph6: out << to_graph6(g) << '\n'; break;
    case GraphFormat::dot: write_dot(out, g); break;
  }
}

// ---------------------------------------------------------------------------
// Decomposition text format: "td <nodes> <width+1> <n>", "b <node> <v...>", "e <t> <t'>".
// Node and vertex ids are 0-based; lines starting with 'c' or '#' are comments.

struct TdFile {
  int node_count = 0;
  int max_bag = 0;  // declared width + 1
  int order = 0;
  std::vector<VertexSet> bags;
  std::vector<TreeEdge> edges;
};

inline TdFile read_td(std::istream& in) {
  auto lines = detail::content_lines(in);
  std::erase_if(lines, [](const auto& l) { return l.second[0] == 'c' && (l.second.size() == 1 || l.second[1] == ' '); });
  if (lines.empty()) throw parse_error("empty decomposition file", 0);
  auto tag_and_ints = [](const std::pair<int, std::string>& l, const std::string& tag) {
    if (l.second.rfind(tag + " ", 0) != 0 && l.second != tag)
      throw parse_error("expected '" + tag + "' line", l.first);
    return detail::read_ints(l.second.substr(tag.size()), l.first);
  };
  const auto head = tag_and_ints(lines[0], "td");
  if (head.size() != 3) throw parse_error("header must be 'td <nodes> <width+1> <n>'", lines[0].first);
  TdFile f;
  if (head[0] < 0 || head[1] < 0 || head[2] < 0) throw parse_error("negative count in header", lines[0].first);
  if (head[2] > kMaxVertices) throw size_limit("decomposition over " + std::to_string(head[2]) + " vertices", kMaxVertices);
  f.node_count = static_cast<int>(head[0]);
  f.max_bag = static_cast<int>(head[1]);
  f.order = static_cast<int>(head[2]);
  f.bags.resize(f.node_count);
  std::vector<bool> seen(f.node_count, false);
  int largest = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.second[0] == 'b') {
      const auto xs = tag_and_ints(l, "b");
      if (xs.empty()) throw parse_error("bag line needs a node id", l.first);
      if (xs[0] < 0 || xs[0] >= f.node_count) throw parse_error("node id out of range", l.first);
      const auto t = static_cast<Node>(xs[0]);
      if (seen[t]) throw parse_error("bag " + std::to_string(t) + " given twice", l.first);
      seen[t] = true;
      for (std::size_t j = 1; j < xs.size(); ++j) {
        if (xs[j] < 0 || xs[j] >= f.order) throw parse_error("vertex out of range", l.first);
        if (f.bags[t].contains(static_cast<Vertex>(xs[j]))) throw parse_error("vertex repeated in bag", l.first);
        f.bags[t].insert(static_cast<Vertex>(xs[j]));
      }
      largest = std::max(largest, f.bags[t].size());
    } else if (l.second[0] == 'e') {
      const auto xs = tag_and_ints(l, "e");
      if (xs.size() != 2) throw parse_error("tree edge line must be 'e t t2'", l.first);
      for (auto x : xs)
        if (x < 0 || x >= f.node_count) throw parse_error("node id out of range", l.first);
      f.edges.emplace_back(static_cast<Node>(xs[0]), static_cast<Node>(xs[1]));
    } else {
      throw parse_error("unexpected line '" + l.second + "'", l.first);
    }
  }
  for (Node t = 0; t < f.node_count; ++t)
    if (!seen[t]) throw parse_error("missing bag line for node " + std::to_string(t), 0);
  if (largest != f.max_bag)
    throw parse_error("header declares largest bag " + std::to_string(f.max_bag) + ", found " +
                          std::to_string(largest),
                      lines[0].first);
  return f;
}

inline TreeDecomposition attach_graph(const TdFile& f, const Graph& g) {
  if (f.order != g.order())
    throw parse_error("decomposition is over " + std::to_string(f.order) + " vertices, graph has " +
                          std::to_string(g.order()),
                      0);
  return TreeDecomposition(g, f.bags, f.edges);
}

inline void write_td(std::ostream& out, const TreeDecomposition& d) {
  int largest = 0;
  for (VertexSet b : d.bags()) largest = std::max(largest, b.size());
  out << "td " << d.node_count() << ' ' << largest << ' ' << d.graph().order() << '\n';
  for (Node t = 0; t < d.node_count(); ++t) {
    out << "b " << t;
    for (Vertex v : d.bag(t)) out << ' ' << v;
    out << '\n';
  }
  for (auto [a, b] : d.tree_edges()) out << "e " << a << ' ' << b << '\n';
}

inline TdFile read_td_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path, 0);
  return read_td(in);
}

}  // namespace lct
