#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "lct/errors.hpp"
#include "lct/graph.hpp"
#include "lct/random.hpp"
#include "lct/treedec.hpp"

namespace lct {

/**
 * Builds a k-tree by repeated attachment: begin with K_k, then each new
 * vertex is joined to an existing k-clique Q and gets the bag Q + v, hung
 * under the first existing node whose bag holds Q. The decomposition is
 * full for k once at least one vertex has been attached.
 */
class KTreeBuilder {
 public:
  KTreeBuilder(int k, int capacity) : k_(k), edges_(), capacity_(capacity) {
    if (k < 1) throw precondition_error("k must be positive");
    if (capacity > kMaxVertices) throw size_limit("k-tree too large", kMaxVertices);
    VertexSet base = VertexSet::range(k);
    for (Vertex u = 0; u < k; ++u)
      for (Vertex v = u + 1; v < k; ++v) edges_.emplace_back(u, v);
    order_ = k;
    add_clique(base);
  }

  int order() const { return order_; }
  const std::vector<VertexSet>& cliques() const { return cliques_; }

  Vertex attach(VertexSet clique) {
    if (clique.size() != k_ || seen_.count(clique.bits()) == 0)
      throw precondition_error("attachment set is not a k-clique of the construction");
    if (order_ >= capacity_) throw precondition_error("k-tree capacity reached");
    const Vertex v = order_++;
    for (Vertex u : clique) edges_.emplace_back(u, v);
    const VertexSet bag = clique | VertexSet::single(v);
    const Node node = static_cast<Node>(bags_.size());
    for (Node t = 0; t < node; ++t)
      if (clique.is_subset_of(bags_[t])) {
        tree_.emplace_back(t, node);
        break;
      }
    bags_.push_back(bag);
    for (Vertex x : clique) add_clique(bag - VertexSet::single(x));
    return v;
  }

  Graph graph() const { return Graph(order_, edges_); }

  // Decomposition with one bag per attached vertex (a single K_k bag if none).
  TreeDecomposition decomposition() const {
    if (bags_.empty()) return TreeDecomposition(graph(), {VertexSet::range(k_)}, {});
    return TreeDecomposition(graph(), bags_, tree_);
  }

 private:
  void add_clique(VertexSet c) {
    if (seen_.insert(c.bits()).second) cliques_.push_back(c);
  }

  int k_;
  std::vector<Edge> edges_;
  int capacity_;
  int order_ = 0;
  std::vector<VertexSet> cliques_;
  std::unordered_set<std::uint64_t> seen_;
  std::vector<VertexSet> bags_;
  std::vector<TreeEdge> tree_;
};

struct Generated {
  Graph graph;
  std::optional<TreeDecomposition> decomposition;  // width-k certificate for tree families
};

namespace detail {

inline void check_tree_family(int n, int k) {
  if (k < 2) throw precondition_error("k must be at least 2");
  if (n <= k) throw precondition_error("n must exceed k");
  if (n > kMaxVertices) throw size_limit("n too large", kMaxVertices);
}

inline Generated ktree_with(Rng& rng, int n, int k) {
  KTreeBuilder b(k, n);
  while (b.order() < n) b.attach(b.cliques()[rng.below(b.cliques().size())]);
  return {b.graph(), b.decomposition()};
}

}  // namespace detail

inline constexpr int kRetryBudget = 1000;

/// Random k-tree on n vertices with its full width-k decomposition.
inline Generated gen_ktree(int n, int k, std::uint64_t seed) {
  detail::check_tree_family(n, k);
  Rng rng(seed);
  return detail::ktree_with(rng, n, k);
}

/// Edges of a random k-tree kept independently with probability p. Each
/// attempt draws a fresh k-tree; attempts repeat until the result is 2-connected.
inline Generated gen_partial_ktree(int n, int k, double p, std::uint64_t seed) {
  detail::check_tree_family(n, k);
  if (!(p > 0.0 && p <= 1.0)) throw precondition_error("p must lie in (0, 1]");
  Rng rng(seed);
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    const Generated full = detail::ktree_with(rng, n, k);
    Graph g(n);
    for (auto [u, v] : full.graph.edges())
      if (rng.bernoulli(p)) g.add_edge(u, v);
    if (is_2connected(g))
      return {g, TreeDecomposition(g, full.decomposition->bags(), full.decomposition->tree_edges())};
  }
  throw precondition_error("no 2-connected partial " + std::to_string(k) + "-tree after " +
                           std::to_string(kRetryBudget) + " attempts (seed " + std::to_string(seed) + ")");
}

/// 2-connected partial 2-trees.
inline Generated gen_series_parallel(int n, double p, std::uint64_t seed) {
  return gen_partial_ktree(n, 2, p, seed);
}

/**
 * Random 2-connected chordal graph with omega <= k + 1. Starting from a
 * triangle, each new vertex is joined to a random clique of size 2..k inside
 * a random current maximal clique; the newcomer is simplicial, so the
 * reverse insertion order is a perfect elimination order.
 */
inline Generated gen_chordal(int n, int k, std::uint64_t seed) {
  if (k < 2) throw precondition_error("k must be at least 2");
  if (n < 3) throw precondition_error("n must be at least 3");
  if (n > kMaxVertices) throw size_limit("n too large", kMaxVertices);
  Rng rng(seed);
  Graph g(n);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  std::vector<VertexSet> maximal{VertexSet{0, 1, 2}};
  for (Vertex v = 3; v < n; ++v) {
    const std::size_t pick = rng.below(maximal.size());
    const VertexSet host = maximal[pick];
    const int size = rng.between(2, std::min(k, host.size()));
    std::vector<Vertex> pool = host.to_vector();
    VertexSet clique;
    for (int i = 0; i < size; ++i) {
      const std::size_t j = i + rng.below(pool.size() - i);
      std::swap(pool[i], pool[j]);
      clique.insert(pool[i]);
    }
    for (Vertex u : clique) g.add_edge(u, v);
    if (clique == host) maximal.erase(maximal.begin() + static_cast<std::ptrdiff_t>(pick));
    maximal.push_back(clique | VertexSet::single(v));
  }
  return {g, std::nullopt};
}

/// G(n, p) resampled until 2-connected.
inline Generated gen_random_2connected(int n, double p, std::uint64_t seed) {
  if (n < 3) throw precondition_error("n must be at least 3");
  if (n > kMaxVertices) throw size_limit("n too large", kMaxVertices);
  if (!(p > 0.0 && p <= 1.0)) throw precondition_error("p must lie in (0, 1]");
  Rng rng(seed);
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.bernoulli(p)) g.add_edge(u, v);
    if (is_2connected(g)) return {g, std::nullopt};
  }
  throw precondition_error("no 2-connected G(n,p) sample after " + std::to_string(kRetryBudget) +
                           " attempts (seed " + std::to_string(seed) + ")");
}

}  // namespace lct
