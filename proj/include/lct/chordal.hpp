#pragma once

#include <algorithm>
#include <optional>
#include <tuple>
#include <vector>

#include "lct/cycle.hpp"
#include "lct/errors.hpp"
#include "lct/graph.hpp"
#include "lct/treedec.hpp"

namespace lct {

/// A vertex permutation; "perfect" when every vertex's later neighbours form a clique.
struct EliminationOrder {
  std::vector<Vertex> order;
  bool perfect = false;
};

/// Maximum cardinality search; ties go to the smallest id. The returned
/// sequence is the elimination order (reverse of the visit order).
inline std::vector<Vertex> mcs_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(n, 0);
  VertexSet unnumbered = g.vertices();
  std::vector<Vertex> visit;
  visit.reserve(n);
  while (!unnumbered.empty()) {
    Vertex pick = -1;
    for (Vertex v : unnumbered)
      if (pick < 0 || weight[v] > weight[pick]) pick = v;
    visit.push_back(pick);
    unnumbered.erase(pick);
    for (Vertex u : g.neighbors(pick) & unnumbered) ++weight[u];
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

// Later neighbours of each vertex under `order`, indexed by vertex.
inline std::vector<VertexSet> later_neighbors(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<VertexSet> later(g.order());
  VertexSet done;
  for (Vertex v : order) {
    done.insert(v);
    later[v] = g.neighbors(v) - done;
  }
  return later;
}

inline bool is_perfect_elimination_order(const Graph& g, const std::vector<Vertex>& order) {
  auto later = later_neighbors(g, order);
  for (Vertex v : order)
    if (!is_clique(g, later[v])) return false;
  return true;
}

/// An induced cycle of length >= 4, if one exists.
inline std::optional<CycleSeq> find_chordless_cycle(const Graph& g) {
  // A chordless cycle through v, x, y has its remaining vertices outside N[v].
  for (Vertex v = 0; v < g.order(); ++v) {
    const VertexSet nv = g.neighbors(v);
    for (Vertex x : nv)
      for (Vertex y : nv) {
        if (y <= x || g.has_edge(x, y)) continue;
        const VertexSet allowed = (g.vertices() - (nv | VertexSet::single(v))) | VertexSet{x, y};
        // BFS with parents for a shortest x-y path inside `allowed`.
        std::vector<Vertex> parent(g.order(), -1);
        VertexSet seen = VertexSet::single(x), frontier = seen;
        while (!frontier.empty() && !seen.contains(y)) {
          VertexSet next;
          for (Vertex a : frontier)
            for (Vertex b : (g.neighbors(a) & allowed) - seen - next) {
              parent[b] = a;
              next.insert(b);
            }
          seen |= next;
          frontier = next;
        }
        if (!seen.contains(y)) continue;
        std::vector<Vertex> cyc{v};
        for (Vertex a = y; a != -1; a = parent[a]) cyc.push_back(a);
        return CycleSeq(std::move(cyc));
      }
  }
  return std::nullopt;
}

struct ChordalityResult {
  bool chordal = false;
  EliminationOrder certificate;          // perfect when chordal
  std::optional<CycleSeq> chordless_cycle;  // set when not chordal
};

inline ChordalityResult is_chordal(const Graph& g) {
  ChordalityResult r;
  r.certificate.order = mcs_order(g);
  r.certificate.perfect = is_perfect_elimination_order(g, r.certificate.order);
  r.chordal = r.certificate.perfect;
  if (!r.chordal) r.chordless_cycle = find_chordless_cycle(g);
  return r;
}

namespace detail {
inline std::vector<Vertex> require_peo(const Graph& g) {
  auto order = mcs_order(g);
  if (!is_perfect_elimination_order(g, order)) throw precondition_error("graph is not chordal");
  return order;
}
}  // namespace detail

/// Maximal cliques of a chordal graph, read off a perfect elimination order.
inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
  auto order = detail::require_peo(g);
  auto later = later_neighbors(g, order);
  std::vector<VertexSet> candidates;
  for (Vertex v : order) candidates.push_back(later[v] | VertexSet::single(v));
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < candidates.size() && maximal; ++j)
      if (i != j && candidates[i].is_subset_of(candidates[j]) &&
          (candidates[i] != candidates[j] || j < i))
        maximal = false;
    if (maximal) out.push_back(candidates[i]);
  }
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return lex_less(a, b); });
  return out;
}

inline int omega_chordal(const Graph& g) {
  int best = 0;
  for (VertexSet c : maximal_cliques(g)) best = std::max(best, c.size());
  return best;
}

/**
 * Clique tree as a maximum-weight spanning tree of the clique intersection
 * graph (weight = |K_i & K_j|). Ties go to the lexicographically smaller
 * pair of node ids, and nodes are the cliques in lexicographic order.
 */
inline TreeDecomposition build_clique_tree(const Graph& g) {
  if (!is_connected(g)) throw precondition_error("clique tree needs a connected graph");
  auto cliques = maximal_cliques(g);
  const int m = static_cast<int>(cliques.size());

  std::vector<std::tuple<int, Node, Node>> candidates;
  for (Node a = 0; a < m; ++a)
    for (Node b = a + 1; b < m; ++b)
      if (int w = (cliques[a] & cliques[b]).size(); w > 0) candidates.emplace_back(-w, a, b);
  std::sort(candidates.begin(), candidates.end());

  std::vector<Node> parent(m);
  for (Node t = 0; t < m; ++t) parent[t] = t;
  auto find = [&](Node t) {
    while (parent[t] != t) t = parent[t] = parent[parent[t]];
    return t;
  };
  std::vector<TreeEdge> edges;
  for (auto [w, a, b] : candidates) {
    Node ra = find(a), rb = find(b);
    if (ra == rb) continue;
    parent[ra] = rb;
    edges.emplace_back(a, b);
  }
  return TreeDecomposition(g, std::move(cliques), std::move(edges));
}

}  // namespace lct
