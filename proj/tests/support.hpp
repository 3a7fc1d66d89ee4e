#pragma once

#include <cstdint>
#include <random>

#include "lct/graph.hpp"

namespace support {

// Plain G(n, p), not necessarily connected.
inline lct::Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  lct::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline lct::Vertex id(const lct::Graph& g, const char* label) { return *g.find_label(label); }

}  // namespace support

#include <algorithm>
#include <vector>

#include "lct/lemma.hpp"

namespace support {

inline lct::Tree random_tree(int size, std::mt19937_64& rng) {
  std::vector<lct::TreeEdge> edges;
  for (int v = 1; v < size; ++v) edges.emplace_back(static_cast<int>(rng() % v), v);
  return lct::Tree(size, edges);
}

// Connected node set grown from a random node.
inline std::vector<lct::Node> random_subtree(const lct::Tree& t, std::mt19937_64& rng) {
  const int target = 1 + static_cast<int>(rng() % t.size());
  std::vector<lct::Node> nodes{static_cast<lct::Node>(rng() % t.size())};
  std::vector<bool> in(t.size(), false);
  in[nodes[0]] = true;
  while (static_cast<int>(nodes.size()) < target) {
    std::vector<lct::Node> frontier;
    for (lct::Node x : nodes)
      for (lct::Node y : t.neighbors(x))
        if (!in[y]) frontier.push_back(y);
    if (frontier.empty()) break;
    const lct::Node pick = frontier[rng() % frontier.size()];
    in[pick] = true;
    nodes.push_back(pick);
  }
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

inline bool pairwise_intersecting(const std::vector<std::vector<lct::Node>>& family) {
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      std::vector<lct::Node> both;
      std::set_intersection(family[i].begin(), family[i].end(), family[j].begin(), family[j].end(),
                            std::back_inserter(both));
      if (both.empty()) return false;
    }
  return true;
}

// A pairwise-intersecting family of 2..6 subtrees, by rejection.
inline std::vector<std::vector<lct::Node>> intersecting_family(const lct::Tree& t, std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::vector<lct::Node>> family(2 + rng() % 5);
    for (auto& s : family) s = random_subtree(t, rng);
    if (pairwise_intersecting(family)) return family;
  }
}

}  // namespace support
