#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lct/errors.hpp"
#include "lct/vertex_set.hpp"

namespace lct {

using Edge = std::pair<Vertex, Vertex>;

/**
 * Simple undirected graph on dense vertex ids 0..n-1.
 *
 * Adjacency rows are VertexSets, so the graph is limited to 64 vertices.
 * Labels are display names only; every algorithm works on ids.
 */
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : adj_(check_order(n)) {}

  Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int order() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return VertexSet::range(order()); }

  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw precondition_error("self-loop at vertex " + std::to_string(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
  }

  bool has_edge(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return adj_[v].size(); }

  int size() const {
    int twice = 0;
    for (auto row : adj_) twice += row.size();
    return twice / 2;
  }

  // Edges with u < v, ascending.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= order())
      throw invalid_vertex("vertex " + std::to_string(v) + " out of range 0.." +
                           std::to_string(order() - 1));
  }
  void check_set(VertexSet s) const {
    if (!s.is_subset_of(vertices()))
      throw invalid_vertex("vertex " + std::to_string(s.max()) + " out of range 0.." +
                           std::to_string(order() - 1));
  }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Vertex v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
  }

  void set_labels(std::vector<std::string> labels) {
    if (labels.size() != adj_.size())
      throw precondition_error("label count does not match vertex count");
    std::unordered_set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw precondition_error("labels are not unique");
    labels_ = std::move(labels);
  }

  std::optional<Vertex> find_label(const std::string& name) const {
    auto it = std::find(labels_.begin(), labels_.end(), name);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Vertex>(it - labels_.begin());
  }

  // Same vertex count and edge set; labels are ignored.
  bool same_edges(const Graph& o) const { return adj_ == o.adj_; }

  // Induced subgraph on s, renumbered in increasing id order.
  Graph induced(VertexSet s) const {
    std::vector<Vertex> ids = s.to_vector();
    std::vector<int> pos(order(), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = static_cast<int>(i);
    Graph h(static_cast<int>(ids.size()));
    for (auto [u, v] : edges())
      if (pos[u] >= 0 && pos[v] >= 0) h.add_edge(pos[u], pos[v]);
    return h;
  }

 private:
  static int check_order(int n) {
    if (n < 0 || n > kMaxVertices)
      throw size_limit("graph order " + std::to_string(n) + " unsupported", kMaxVertices);
    return n;
  }

  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

// Vertices reachable from `from` inside `allowed` (from must be in allowed).
inline VertexSet reach_within(const Graph& g, Vertex from, VertexSet allowed) {
  VertexSet seen = VertexSet::single(from);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next &= allowed;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// Connected components of g - s, ordered by their least vertex.
inline std::vector<VertexSet> components_without(const Graph& g, VertexSet s) {
  g.check_set(s);
  std::vector<VertexSet> out;
  VertexSet rest = g.vertices() - s;
  while (!rest.empty()) {
    VertexSet comp = reach_within(g, rest.min(), rest);
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

/// True iff two vertices of x \ s lie in different components of g - s.
inline bool separates(const Graph& g, VertexSet s, VertexSet x) {
  g.check_set(s);
  g.check_set(x);
  VertexSet outside = x - s;
  if (outside.size() < 2) return false;
  VertexSet comp = reach_within(g, outside.min(), g.vertices() - s);
  return !outside.is_subset_of(comp);
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return reach_within(g, 0, g.vertices()) == g.vertices();
}

inline bool is_2connected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  const VertexSet all = g.vertices();
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet rest = all - VertexSet::single(v);
    if (reach_within(g, rest.min(), rest) != rest) return false;
  }
  return true;
}

namespace detail {

inline void grow_clique(const Graph& g, int size, VertexSet candidates, int& best) {
  if (candidates.empty()) {
    best = std::max(best, size);
    return;
  }
  while (!candidates.empty()) {
    if (size + candidates.size() <= best) return;
    Vertex v = candidates.min();
    candidates.erase(v);
    grow_clique(g, size + 1, candidates & g.neighbors(v), best);
  }
}

}  // namespace detail

/// omega(g) by exhaustive branch and bound; 0 for the empty graph.
inline int max_clique_size(const Graph& g) {
  int best = 0;
  detail::grow_clique(g, 0, g.vertices(), best);
  return best;
}

inline bool is_clique(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if (!(s - VertexSet::single(v)).is_subset_of(g.neighbors(v))) return false;
  return true;
}

}  // namespace lct
