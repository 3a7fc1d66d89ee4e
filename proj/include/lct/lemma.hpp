#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lct/chordal.hpp"
#include "lct/cycle.hpp"
#include "lct/enumerate.hpp"
#include "lct/errors.hpp"
#include "lct/graph.hpp"
#include "lct/transversal.hpp"
#include "lct/treedec.hpp"

namespace lct {

/// A plain tree on nodes 0..size-1.
class Tree {
 public:
  Tree() = default;
  Tree(int size, std::vector<TreeEdge> edges) : adj_(size), edges_(std::move(edges)) {
    for (auto [a, b] : edges_) {
      if (a < 0 || b < 0 || a >= size || b >= size || a == b) throw precondition_error("bad tree edge");
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
    if (size > 0 && static_cast<int>(edges_.size()) != size - 1) throw precondition_error("not a tree");
    if (size > 0) {
      auto hop = first_hops(0);
      if (std::count(hop.begin(), hop.end(), -1) > 1) throw precondition_error("not a tree");
    }
  }

  static Tree of(const TreeDecomposition& d) { return Tree(d.node_count(), d.tree_edges()); }

  int size() const { return static_cast<int>(adj_.size()); }
  const std::vector<Node>& neighbors(Node t) const { return adj_.at(t); }
  const std::vector<TreeEdge>& edges() const { return edges_; }

  // hop[u] = neighbour of `from` on the path from `from` to u; -1 for `from` and unreachable nodes.
  std::vector<Node> first_hops(Node from) const {
    std::vector<Node> hop(adj_.size(), -1);
    std::vector<bool> seen(adj_.size(), false);
    seen[from] = true;
    std::vector<Node> stack;
    for (Node u : adj_[from]) {
      hop[u] = u;
      seen[u] = true;
      stack.push_back(u);
    }
    while (!stack.empty()) {
      Node t = stack.back();
      stack.pop_back();
      for (Node u : adj_[t])
        if (!seen[u]) {
          seen[u] = true;
          hop[u] = hop[t];
          stack.push_back(u);
        }
    }
    return hop;
  }

  bool induces_subtree(const std::vector<Node>& nodes) const {
    if (nodes.empty()) return false;
    std::vector<bool> in(adj_.size(), false), seen(adj_.size(), false);
    for (Node t : nodes) {
      if (t < 0 || t >= size()) return false;
      in[t] = true;
    }
    std::vector<Node> stack{nodes.front()};
    seen[nodes.front()] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      Node t = stack.back();
      stack.pop_back();
      for (Node u : adj_[t])
        if (in[u] && !seen[u]) {
          seen[u] = true;
          ++count;
          stack.push_back(u);
        }
    }
    std::set<Node> distinct(nodes.begin(), nodes.end());
    return count == distinct.size();
  }

 private:
  std::vector<std::vector<Node>> adj_;
  std::vector<TreeEdge> edges_;
};

/**
 * A node shared by every subtree of a pairwise-intersecting family.
 *
 * Partial orientation: t -> t' when some subtree avoiding t lies in the
 * component of T - t holding t'. Starting from the least node of the first
 * subtree, the walk follows out-arcs and stops at a node with none, which
 * every subtree contains.
 */
inline Node helly_common_vertex(const Tree& t, const std::vector<std::vector<Node>>& subtrees) {
  if (subtrees.empty()) throw precondition_error("empty subtree family");
  std::vector<std::vector<bool>> member(subtrees.size(), std::vector<bool>(t.size(), false));
  for (std::size_t i = 0; i < subtrees.size(); ++i) {
    if (!t.induces_subtree(subtrees[i]))
      throw precondition_error("family member " + std::to_string(i) + " is not a subtree");
    for (Node x : subtrees[i]) member[i][x] = true;
  }
  for (std::size_t i = 0; i < subtrees.size(); ++i)
    for (std::size_t j = i + 1; j < subtrees.size(); ++j) {
      bool meet = std::any_of(subtrees[i].begin(), subtrees[i].end(), [&](Node x) { return member[j][x]; });
      if (!meet)
        throw precondition_error("subtrees " + std::to_string(i) + " and " + std::to_string(j) +
                                 " are disjoint");
    }

  auto out_arcs = [&](Node x) {
    std::set<Node> heads;
    auto hop = t.first_hops(x);
    for (std::size_t i = 0; i < subtrees.size(); ++i)
      if (!member[i][x]) heads.insert(hop[subtrees[i].front()]);
    return heads;
  };

  Node cur = *std::min_element(subtrees.front().begin(), subtrees.front().end());
  Node prev = -1;
  for (;;) {
    auto heads = out_arcs(cur);
    if (heads.empty()) return cur;
    if (heads.size() > 1 || *heads.begin() == prev)
      throw precondition_error("orientation walk found opposing arcs; family is not pairwise intersecting");
    prev = cur;
    cur = *heads.begin();
  }
}

struct ConflictWitness {
  Node t = -1;
  Node t2 = -1;
  CycleSeq cycle_at_t;   // in C(t), Br_t(cycle) = Br_t(t2)
  CycleSeq cycle_at_t2;  // in C(t2), Br_t2(cycle) = Br_t2(t)
};

/**
 * Given a nonempty set C(t) of cycles for every node, each fenced by V_t and
 * not inside V_t, finds a tree edge tt' and cycles C in C(t), D in C(t')
 * pointing at each other across it.
 *
 * Orientation: t -> t' when some C in C(t) has Br_t(C) = Br_t(t'). The walk
 * starts at node 0, repeatedly takes the least out-arc that does not return
 * to the previous node, and stops when only the reverse arc is left.
 */
inline ConflictWitness find_conflict_edge(const TreeDecomposition& d,
                                          const std::vector<std::vector<CycleSeq>>& cycles_of) {
  const int m = d.node_count();
  if (static_cast<int>(cycles_of.size()) != m) throw precondition_error("one cycle set per node required");

  // First cycle of C(t) pointing through each neighbour.
  std::vector<std::vector<std::pair<Node, const CycleSeq*>>> arcs(m);
  for (Node t = 0; t < m; ++t) {
    if (cycles_of[t].empty()) throw precondition_error("C(" + std::to_string(t) + ") is empty");
    for (const CycleSeq& c : cycles_of[t]) {
      if (c.vertices().is_subset_of(d.bag(t)) || separates(d.graph(), d.bag(t), c.vertices()))
        throw precondition_error("cycle " + format_cycle(d.graph(), c) + " in C(" + std::to_string(t) +
                                 ") is not fenced by the bag or lies inside it");
      const Node via = branch_of_fenced(d, t, c).via;
      auto it = std::find_if(arcs[t].begin(), arcs[t].end(), [&](auto& a) { return a.first == via; });
      if (it == arcs[t].end()) arcs[t].emplace_back(via, &c);
    }
    std::sort(arcs[t].begin(), arcs[t].end(), [](auto& a, auto& b) { return a.first < b.first; });
  }

  auto cycle_towards = [&](Node from, Node to) -> const CycleSeq* {
    for (auto& [via, c] : arcs[from])
      if (via == to) return c;
    return nullptr;
  };

  Node prev = -1, cur = 0;
  for (;;) {
    Node next = -1;
    for (auto& [via, c] : arcs[cur])
      if (via != prev) {
        next = via;
        break;
      }
    if (next == -1) {
      // Only cur -> prev is left, so prev -> cur and cur -> prev are both arcs.
      return {prev, cur, *cycle_towards(prev, cur), *cycle_towards(cur, prev)};
    }
    prev = cur;
    cur = next;
  }
}

// ---------------------------------------------------------------------------
// Named presets for C(t).

/// Every cycle of G fenced by V_t with a vertex outside V_t.
inline std::vector<std::vector<CycleSeq>> preset_fenced_cycles(const TreeDecomposition& d) {
  const auto cycles = enumerate_cycles(d.graph());
  std::vector<std::vector<CycleSeq>> out(d.node_count());
  for (Node t = 0; t < d.node_count(); ++t)
    for (const auto& c : cycles)
      if (!c.vertices().is_subset_of(d.bag(t)) && !separates(d.graph(), d.bag(t), c.vertices()))
        out[t].push_back(c);
  return out;
}

/// Longest cycles disjoint from V_t (one representative per vertex set).
inline std::vector<std::vector<CycleSeq>> preset_longest_avoiding_bag(const TreeDecomposition& d,
                                                                      const LongestCycleFamily& fam) {
  std::vector<std::vector<CycleSeq>> out(d.node_count());
  for (Node t = 0; t < d.node_count(); ++t)
    for (VertexSet m : fam.vertex_sets)
      if (!m.intersects(d.bag(t))) out[t].push_back(*least_cycle_on(d.graph(), m));
  return out;
}

/// Longest cycles that are l-attractors for V_t with l <= max_ell and not inside V_t.
inline std::vector<std::vector<CycleSeq>> preset_attractors(const TreeDecomposition& d,
                                                            const LongestCycleFamily& fam, int max_ell) {
  const Graph& g = d.graph();
  std::vector<std::vector<CycleSeq>> out(d.node_count());
  for (Node t = 0; t < d.node_count(); ++t) {
    const VertexSet bag = d.bag(t);
    for (VertexSet m : fam.vertex_sets) {
      if ((m & bag).size() > max_ell || m.is_subset_of(bag) || separates(g, bag, m)) continue;
      bool group_fenced = std::none_of(fam.vertex_sets.begin(), fam.vertex_sets.end(), [&](VertexSet o) {
        return (o & bag) == (m & bag) && separates(g, bag, o);
      });
      if (group_fenced) out[t].push_back(*least_cycle_on(g, m));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verification drivers.

struct Witness {
  std::string note;
  VertexSet transversal;
  std::vector<CycleSeq> cycles;
  std::vector<VertexSet> sets;
};

/// One verdict line; optional fields are left empty when not computed.
struct CheckReport {
  std::string check;
  std::uint64_t seed = 0;
  int n = 0;
  std::optional<int> k;
  std::optional<int> omega;
  std::optional<int> tw;
  std::optional<int> L;
  std::optional<int> lct;
  bool pass = true;
  std::optional<Witness> witness;
  std::vector<Edge> edges;  // instance edges, kept so failures can be replayed

  std::string verdict() const { return pass ? "pass" : "fail"; }
};

namespace detail {

inline void require_2connected(const Graph& g) {
  if (!is_2connected(g)) throw precondition_error("graph is not 2-connected");
}

inline CheckReport start_report(const std::string& check, const Graph& g) {
  CheckReport r;
  r.check = check;
  r.n = g.order();
  r.edges = g.edges();
  return r;
}

inline void fail_with_lct(CheckReport& r, const LctResult& res, std::string note) {
  r.pass = false;
  r.witness = Witness{std::move(note), res.transversal, res.longest_cycles, {}};
}

inline std::optional<int> treewidth_if_feasible(const Graph& g) {
  if (g.order() > kTreewidthLimit) return std::nullopt;
  return exact_treewidth(g).width;
}

}  // namespace detail

/// Every two longest cycles share at least two vertices.
inline CheckReport verify_prop1(const Graph& g) {
  detail::require_2connected(g);
  auto r = detail::start_report("prop1", g);
  const auto fam = longest_cycle_family(g);
  r.L = fam.length;
  for (std::size_t i = 0; i < fam.vertex_sets.size() && r.pass; ++i)
    for (std::size_t j = i + 1; j < fam.vertex_sets.size(); ++j)
      if ((fam.vertex_sets[i] & fam.vertex_sets[j]).size() < 2) {
        r.pass = false;
        r.witness = Witness{"longest cycles meeting in fewer than two vertices", {},
                            {*least_cycle_on(g, fam.vertex_sets[i]), *least_cycle_on(g, fam.vertex_sets[j])},
                            {}};
        break;
      }
  return r;
}

/// lct <= tw + 1, and lct <= omega when g is chordal.
inline CheckReport verify_cor1(const Graph& g) {
  detail::require_2connected(g);
  auto r = detail::start_report("cor1", g);
  const auto res = compute_lct(g);
  const int tw = exact_treewidth(g).width;
  const bool chordal = is_chordal(g).chordal;
  r.tw = tw;
  r.L = res.L;
  r.lct = res.value;
  r.omega = chordal ? omega_chordal(g) : max_clique_size(g);
  if (res.value > tw + 1) detail::fail_with_lct(r, res, "lct exceeds tw+1");
  else if (chordal && res.value > *r.omega) detail::fail_with_lct(r, res, "chordal graph with lct above omega");
  return r;
}

/**
 * lct <= k - 1 for a 2-connected graph of treewidth at most k. The width is
 * certified by `certificate` when given, else by exact treewidth. When
 * `is_ktree` is set the k-tree strengthening lct <= max(1, k - 2) is checked too.
 */
inline CheckReport verify_thm1(const Graph& g, int k, const TreeDecomposition* certificate = nullptr,
                               bool is_ktree = false) {
  detail::require_2connected(g);
  auto r = detail::start_report("thm1", g);
  r.k = k;
  r.tw = detail::treewidth_if_feasible(g);
  if (certificate != nullptr) {
    if (!validate(*certificate).valid() || width(*certificate) > k)
      throw precondition_error("certificate is not a decomposition of width <= k");
  } else if (!r.tw) {
    throw size_limit("treewidth hypothesis needs a certificate above n=15", kTreewidthLimit);
  }
  if (r.tw && *r.tw > k) throw precondition_error("graph has treewidth above k");
  const auto res = compute_lct(g);
  r.L = res.L;
  r.lct = res.value;
  if (res.value > k - 1) detail::fail_with_lct(r, res, "lct exceeds k-1");
  else if (is_ktree && res.value > std::max(1, k - 2)) detail::fail_with_lct(r, res, "k-tree with lct above max(1,k-2)");
  return r;
}

/// lct <= max(1, omega - 3) for 2-connected chordal g; with `ktree_k`, also
/// the k-tree bound lct <= max(1, k - 2).
inline CheckReport verify_thm2(const Graph& g, std::optional<int> ktree_k = std::nullopt) {
  detail::require_2connected(g);
  if (!is_chordal(g).chordal) throw precondition_error("graph is not chordal");
  auto r = detail::start_report("thm2", g);
  r.k = ktree_k;
  r.omega = omega_chordal(g);
  r.tw = *r.omega - 1;  // clique tree width
  const auto res = compute_lct(g);
  r.L = res.L;
  r.lct = res.value;
  if (res.value > std::max(1, *r.omega - 3)) detail::fail_with_lct(r, res, "lct exceeds max(1, omega-3)");
  else if (ktree_k && res.value > std::max(1, *ktree_k - 2)) detail::fail_with_lct(r, res, "k-tree with lct above max(1,k-2)");
  return r;
}

/// Open question for chordal graphs: do all longest cycles share a vertex?
inline CheckReport verify_conjecture_chordal(const Graph& g) {
  detail::require_2connected(g);
  if (!is_chordal(g).chordal) throw precondition_error("graph is not chordal");
  auto r = detail::start_report("conjecture-chordal", g);
  r.omega = omega_chordal(g);
  r.tw = *r.omega - 1;
  const auto res = compute_lct(g);
  r.L = res.L;
  r.lct = res.value;
  if (res.value != 1) detail::fail_with_lct(r, res, "2-connected chordal graph with lct > 1");
  return r;
}

/**
 * On a full decomposition: at every node t with lct > |V_t| - 2, V_t must
 * have an l-attractor with l <= 2.
 */
inline CheckReport verify_lemma5(const Graph& g, const TreeDecomposition& d) {
  detail::require_2connected(g);
  const int w = width(d);
  if (!is_full(d, w)) throw precondition_error("decomposition is not full");
  auto r = detail::start_report("lemma5", g);
  r.k = w;
  const auto fam = longest_cycle_family(g);
  r.L = fam.length;
  r.lct = min_hitting_set(fam.vertex_sets, g.vertices()).size();
  for (Node t = 0; t < d.node_count(); ++t) {
    if (*r.lct <= d.bag(t).size() - 2) continue;
    if (!find_attractor(g, d.bag(t), 2, fam)) {
      r.pass = false;
      r.witness = Witness{"bag without an l-attractor, l <= 2", {}, {}, {d.bag(t)}};
      break;
    }
  }
  return r;
}

/**
 * For 2-connected chordal g with lct > max(1, omega - 3): every maximal clique
 * K (|K| >= 2) has an l-attractor with l <= min(3, |K| - 1).
 */
inline CheckReport verify_lemma6(const Graph& g) {
  detail::require_2connected(g);
  if (!is_chordal(g).chordal) throw precondition_error("graph is not chordal");
  auto r = detail::start_report("lemma6", g);
  r.omega = omega_chordal(g);
  const auto fam = longest_cycle_family(g);
  r.L = fam.length;
  r.lct = min_hitting_set(fam.vertex_sets, g.vertices()).size();
  if (*r.lct <= std::max(1, *r.omega - 3)) return r;
  for (VertexSet clique : maximal_cliques(g)) {
    if (clique.size() < 2) continue;
    if (!find_attractor(g, clique, std::min(3, clique.size() - 1), fam)) {
      r.pass = false;
      r.witness = Witness{"maximal clique without a small attractor", {}, {}, {clique}};
      break;
    }
  }
  return r;
}

/// Checks a conflict witness against its defining conditions from scratch.
inline bool witness_holds(const TreeDecomposition& d, const std::vector<std::vector<CycleSeq>>& cycles_of,
                          const ConflictWitness& w) {
  if (w.t < 0 || w.t2 < 0 || !d.has_tree_edge(w.t, w.t2)) return false;
  auto in = [](const std::vector<CycleSeq>& v, const CycleSeq& c) {
    return std::find(v.begin(), v.end(), c) != v.end();
  };
  if (!in(cycles_of[w.t], w.cycle_at_t) || !in(cycles_of[w.t2], w.cycle_at_t2)) return false;
  return branch_of_fenced(d, w.t, w.cycle_at_t) == branch_of_node(d, w.t, w.t2) &&
         branch_of_fenced(d, w.t2, w.cycle_at_t2) == branch_of_node(d, w.t2, w.t);
}

}  // namespace lct
