#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lct/cycle.hpp"
#include "lct/errors.hpp"
#include "lct/graph.hpp"

namespace lct {

using Node = int;
using TreeEdge = std::pair<Node, Node>;

/**
 * A tree T with one bag per node, decomposing an owned copy of the graph.
 *
 * Construction only checks that tree edges name existing nodes; whether the
 * pair is actually a tree decomposition is reported by validate().
 */
class TreeDecomposition {
 public:
  TreeDecomposition() = default;

  TreeDecomposition(Graph g, std::vector<VertexSet> bags, std::vector<TreeEdge> edges)
      : graph_(std::move(g)), bags_(std::move(bags)), edges_(std::move(edges)), adj_(bags_.size()) {
    for (auto [a, b] : edges_) {
      if (a < 0 || b < 0 || a >= node_count() || b >= node_count())
        throw precondition_error("tree edge names a missing node");
      if (a == b) throw precondition_error("tree edge is a loop");
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
  }

  const Graph& graph() const { return graph_; }
  int node_count() const { return static_cast<int>(bags_.size()); }
  VertexSet bag(Node t) const { return bags_.at(t); }
  const std::vector<VertexSet>& bags() const { return bags_; }
  const std::vector<TreeEdge>& tree_edges() const { return edges_; }
  const std::vector<Node>& tree_neighbors(Node t) const { return adj_.at(t); }

  bool has_tree_edge(Node a, Node b) const {
    const auto& row = adj_.at(a);
    return std::binary_search(row.begin(), row.end(), b);
  }

  // Nodes whose bag holds v.
  std::vector<Node> occurrences(Vertex v) const {
    std::vector<Node> out;
    for (Node t = 0; t < node_count(); ++t)
      if (bags_[t].contains(v)) out.push_back(t);
    return out;
  }

  // Tree nodes reachable from `from` without entering `blocked` (-1 for none).
  std::vector<bool> reachable(Node from, Node blocked) const {
    std::vector<bool> seen(bags_.size(), false);
    std::vector<Node> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
      Node t = stack.back();
      stack.pop_back();
      for (Node u : adj_[t])
        if (u != blocked && !seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
    }
    return seen;
  }

 private:
  Graph graph_;
  std::vector<VertexSet> bags_;
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<Node>> adj_;
};

struct ValidityReport {
  bool is_tree = true;
  std::string tree_problem;
  bool covers_vertices = true;  // axiom 1
  std::optional<Vertex> missing_vertex;
  bool covers_edges = true;  // axiom 2
  std::optional<Edge> uncovered_edge;
  bool connected_occurrences = true;  // axiom 3
  std::optional<Vertex> scattered_vertex;
  // Pairs of nodes with identical bags; reported, not a failure.
  std::vector<TreeEdge> duplicate_bags;

  bool valid() const { return is_tree && covers_vertices && covers_edges && connected_occurrences; }
};

inline ValidityReport validate(const TreeDecomposition& d) {
  ValidityReport r;
  const Graph& g = d.graph();
  const int m = d.node_count();

  if (m == 0) {
    r.is_tree = false;
    r.tree_problem = "no nodes";
  } else if (static_cast<int>(d.tree_edges().size()) != m - 1) {
    r.is_tree = false;
    r.tree_problem = "tree has " + std::to_string(d.tree_edges().size()) + " edges for " +
                     std::to_string(m) + " nodes";
  } else {
    auto seen = d.reachable(0, -1);
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      r.is_tree = false;
      r.tree_problem = "tree is disconnected";
    }
  }

  VertexSet covered;
  for (VertexSet b : d.bags()) {
    if (!b.is_subset_of(g.vertices())) {
      r.covers_vertices = false;
      r.tree_problem = "bag names a vertex outside the graph";
    }
    covered |= b;
  }
  if (VertexSet missing = g.vertices() - covered; !missing.empty()) {
    r.covers_vertices = false;
    r.missing_vertex = missing.min();
  }

  for (auto [u, v] : g.edges()) {
    const VertexSet e{u, v};
    bool found = std::any_of(d.bags().begin(), d.bags().end(),
                             [&](VertexSet b) { return e.is_subset_of(b); });
    if (!found) {
      r.covers_edges = false;
      r.uncovered_edge = Edge{u, v};
      break;
    }
  }

  if (r.is_tree) {
    for (Vertex v = 0; v < g.order() && r.connected_occurrences; ++v) {
      auto occ = d.occurrences(v);
      if (occ.size() < 2) continue;
      // Flood inside nodes holding v.
      std::vector<bool> seen(m, false);
      std::vector<Node> stack{occ.front()};
      seen[occ.front()] = true;
      while (!stack.empty()) {
        Node t = stack.back();
        stack.pop_back();
        for (Node u : d.tree_neighbors(t))
          if (!seen[u] && d.bag(u).contains(v)) {
            seen[u] = true;
            stack.push_back(u);
          }
      }
      for (Node t : occ)
        if (!seen[t]) {
          r.connected_occurrences = false;
          r.scattered_vertex = v;
          break;
        }
    }
  }

  for (Node a = 0; a < m; ++a)
    for (Node b = a + 1; b < m; ++b)
      if (d.bag(a) == d.bag(b)) r.duplicate_bags.emplace_back(a, b);
  return r;
}

namespace detail {
inline void require_valid(const TreeDecomposition& d) {
  if (!validate(d).valid()) throw precondition_error("not a valid tree decomposition");
}
}  // namespace detail

/// max |V_t| - 1.
inline int width(const TreeDecomposition& d) {
  detail::require_valid(d);
  int w = 0;
  for (VertexSet b : d.bags()) w = std::max(w, b.size());
  return w - 1;
}

/// Every bag has k+1 vertices and adjacent bags share exactly k.
inline bool is_full(const TreeDecomposition& d, int k) {
  for (VertexSet b : d.bags())
    if (b.size() != k + 1) return false;
  for (auto [a, b] : d.tree_edges())
    if ((d.bag(a) & d.bag(b)).size() != k) return false;
  return true;
}

namespace detail {

// Mutable tree used while normalizing a decomposition.
struct WorkTree {
  std::vector<VertexSet> bags;
  std::vector<std::vector<Node>> adj;
  std::vector<bool> alive;

  explicit WorkTree(const TreeDecomposition& d)
      : bags(d.bags()), adj(d.node_count()), alive(d.node_count(), true) {
    for (Node t = 0; t < d.node_count(); ++t) adj[t] = d.tree_neighbors(t);
  }

  // Fold node `gone` into neighbor `keep`.
  void contract(Node keep, Node gone) {
    bags[keep] |= bags[gone];
    for (Node u : adj[gone]) {
      if (u == keep) continue;
      std::replace(adj[u].begin(), adj[u].end(), gone, keep);
      adj[keep].push_back(u);
    }
    std::erase(adj[keep], gone);
    adj[gone].clear();
    alive[gone] = false;
  }

  // Contract one tree edge whose smaller bag is inside the other; false if none.
  bool contract_nested() {
    for (Node t = 0; t < static_cast<Node>(bags.size()); ++t) {
      if (!alive[t]) continue;
      for (Node u : adj[t])
        if (bags[u].is_subset_of(bags[t])) {
          contract(t, u);
          return true;
        }
    }
    return false;
  }

  // Grow one undersized bag by a vertex of a neighbor; false if none can grow.
  bool pad(int target) {
    for (Node t = 0; t < static_cast<Node>(bags.size()); ++t) {
      if (!alive[t] || bags[t].size() >= target) continue;
      std::vector<Node> nbrs = adj[t];
      std::sort(nbrs.begin(), nbrs.end());
      for (Node u : nbrs)
        if (VertexSet extra = bags[u] - bags[t]; !extra.empty()) {
          bags[t].insert(extra.min());
          return true;
        }
    }
    return false;
  }
};

}  // namespace detail

/**
 * A full decomposition of width k for the same graph.
 *
 * Nested neighbors are contracted, undersized bags are padded from a
 * neighbor, and every tree edge whose bags share fewer than k vertices is
 * subdivided so that consecutive bags swap one vertex at a time.
 */
inline TreeDecomposition make_full(const TreeDecomposition& d, int k) {
  const int w = width(d);
  if (w > k) throw precondition_error("decomposition width " + std::to_string(w) + " exceeds k");
  if (d.graph().order() <= k) throw precondition_error("graph needs more than k vertices");

  detail::WorkTree work(d);
  for (;;) {
    if (work.contract_nested()) continue;
    if (!work.pad(k + 1)) break;
  }

  // Renumber live nodes in id order.
  std::vector<Node> id(work.bags.size(), -1);
  std::vector<VertexSet> bags;
  for (Node t = 0; t < static_cast<Node>(work.bags.size()); ++t)
    if (work.alive[t]) {
      id[t] = static_cast<Node>(bags.size());
      bags.push_back(work.bags[t]);
    }
  std::vector<TreeEdge> edges;
  for (Node t = 0; t < static_cast<Node>(work.bags.size()); ++t) {
    if (!work.alive[t]) continue;
    std::vector<Node> nbrs = work.adj[t];
    std::sort(nbrs.begin(), nbrs.end());
    for (Node u : nbrs) {
      if (u < t) continue;
      VertexSet from = work.bags[t];
      const VertexSet to = work.bags[u];
      std::vector<Vertex> leave = (from - to).to_vector();
      std::vector<Vertex> enter = (to - from).to_vector();
      Node prev = id[t];
      // The last swap lands on `to` itself.
      for (std::size_t i = 0; i + 1 < leave.size(); ++i) {
        from.erase(leave[i]);
        from.insert(enter[i]);
        bags.push_back(from);
        Node mid = static_cast<Node>(bags.size()) - 1;
        edges.emplace_back(prev, mid);
        prev = mid;
      }
      edges.emplace_back(prev, id[u]);
    }
  }
  return TreeDecomposition(d.graph(), std::move(bags), std::move(edges));
}

/// Decomposition read off an elimination order: bag(v) = v plus its later
/// neighbours in the fill graph, attached to the earliest of them.
inline TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) throw precondition_error("order is not a permutation");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    g.check_vertex(order[i]);
    if (pos[order[i]] != -1) throw precondition_error("order is not a permutation");
    pos[order[i]] = i;
  }
  std::vector<VertexSet> fill(n);
  for (Vertex v = 0; v < n; ++v) fill[v] = g.neighbors(v);
  std::vector<VertexSet> bags(n);
  std::vector<TreeEdge> edges;
  std::vector<Node> roots;
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[i];
    VertexSet later;
    for (Vertex u : fill[v])
      if (pos[u] > i) later.insert(u);
    for (Vertex u : later) fill[u] |= later - VertexSet::single(u);
    bags[i] = later | VertexSet::single(v);
    if (later.empty()) {
      roots.push_back(i);
      continue;
    }
    int parent = n;
    for (Vertex u : later) parent = std::min(parent, pos[u]);
    edges.emplace_back(i, parent);
  }
  // One root per component; chain them so T stays a tree.
  for (std::size_t i = 1; i < roots.size(); ++i) edges.emplace_back(roots[i - 1], roots[i]);
  return TreeDecomposition(g, std::move(bags), std::move(edges));
}

inline constexpr int kTreewidthLimit = 15;

struct TreewidthResult {
  int width = 0;
  std::vector<Vertex> elimination_order;
  TreeDecomposition decomposition;
};

/**
 * Exact treewidth by dynamic programming over eliminated vertex sets:
 * TW(S) = min over v in S of max(TW(S - v), |Q(S - v, v)|), where Q(S, v)
 * are the vertices outside S + v reachable from v through S.
 */
inline TreewidthResult exact_treewidth(const Graph& g) {
  const int n = g.order();
  if (n > kTreewidthLimit)
    throw size_limit("exact treewidth refused for n=" + std::to_string(n), kTreewidthLimit);
  if (n == 0) throw precondition_error("treewidth of the empty graph is undefined");

  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<int> tw(std::size_t{full} + 1, std::numeric_limits<int>::max());
  std::vector<std::int8_t> last(std::size_t{full} + 1, -1);
  tw[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const VertexSet set(s);
    for (Vertex v : set) {
      const VertexSet before = set - VertexSet::single(v);
      const int prev = tw[before.bits()];
      if (prev >= tw[s]) continue;
      VertexSet through = reach_within(g, v, before | VertexSet::single(v));
      VertexSet boundary;
      for (Vertex u : through) boundary |= g.neighbors(u);
      boundary -= before | VertexSet::single(v);
      const int cost = std::max(prev, boundary.size());
      if (cost < tw[s]) {
        tw[s] = cost;
        last[s] = static_cast<std::int8_t>(v);
      }
    }
  }

  std::vector<Vertex> order(n);
  std::uint32_t s = full;
  for (int i = n - 1; i >= 0; --i) {
    order[i] = last[s];
    s &= ~(std::uint32_t{1} << last[s]);
  }
  TreewidthResult r{tw[full], order, decomposition_from_order(g, order)};
  return r;
}

/**
 * A branch of T at `root`: the component of T - root entered through the
 * tree neighbour `via`.
 */
struct Branch {
  Node root = -1;
  Node via = -1;
  std::vector<Node> nodes;  // sorted

  bool operator==(const Branch& o) const { return root == o.root && via == o.via; }
  bool contains(Node t) const { return std::binary_search(nodes.begin(), nodes.end(), t); }
};

/// Br_t(t'): the component of T - t holding t'.
inline Branch branch_of_node(const TreeDecomposition& d, Node t, Node other) {
  if (t == other) throw precondition_error("branch of a node at itself");
  if (t < 0 || other < 0 || t >= d.node_count() || other >= d.node_count())
    throw precondition_error("unknown tree node");
  auto seen = d.reachable(other, t);
  Branch b{t, -1, {}};
  for (Node u = 0; u < d.node_count(); ++u)
    if (seen[u]) b.nodes.push_back(u);
  for (Node u : d.tree_neighbors(t))
    if (seen[u]) b.via = u;
  return b;
}

/// Br_t(v) for a vertex v outside V_t.
inline Branch branch_of_vertex(const TreeDecomposition& d, Node t, Vertex v) {
  if (d.bag(t).contains(v))
    throw precondition_error("vertex " + std::to_string(v) + " lies in the bag of node " + std::to_string(t));
  auto occ = d.occurrences(v);
  if (occ.empty()) throw precondition_error("vertex " + std::to_string(v) + " is in no bag");
  return branch_of_node(d, t, occ.front());
}

/// Br_t(C) for an object fenced by V_t with a vertex outside V_t.
inline Branch branch_of_fenced(const TreeDecomposition& d, Node t, VertexSet object) {
  const VertexSet bag = d.bag(t);
  if (object.is_subset_of(bag)) throw precondition_error("object lies inside the bag");
  if (separates(d.graph(), bag, object)) throw precondition_error("object is not fenced by the bag");
  return branch_of_vertex(d, t, (object - bag).min());
}

inline Branch branch_of_fenced(const TreeDecomposition& d, Node t, const CycleSeq& c) {
  return branch_of_fenced(d, t, c.vertices());
}

inline Branch branch_of_fenced(const TreeDecomposition& d, Node t, const PathSeq& p) {
  return branch_of_fenced(d, t, p.vertices());
}

struct SeparationCheck {
  bool hypothesis = false;  // u in Br_t(t') and v in Br_t'(t)
  bool separated = false;   // V_t & V_t' separates u and v
  bool holds() const { return !hypothesis || separated; }
};

/// Evaluates the edge-separator property for tree edge tt' and vertices u, v.
inline SeparationCheck separated_by_edge(const TreeDecomposition& d, Node t, Node t2, Vertex u, Vertex v) {
  if (!d.has_tree_edge(t, t2)) throw precondition_error("nodes are not adjacent in T");
  if (d.bag(t).contains(u)) throw precondition_error("u lies in V_t");
  if (d.bag(t2).contains(v)) throw precondition_error("v lies in V_t'");
  SeparationCheck r;
  r.hypothesis = branch_of_vertex(d, t, u).via == t2 && branch_of_vertex(d, t2, v).via == t;
  const VertexSet sep = d.bag(t) & d.bag(t2);
  r.separated = !sep.contains(u) && !sep.contains(v) && separates(d.graph(), sep, VertexSet{u, v});
  return r;
}

}  // namespace lct
