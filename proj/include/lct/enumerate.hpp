#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lct/cycle.hpp"
#include "lct/errors.hpp"
#include "lct/graph.hpp"

namespace lct {

// Exhaustive DFS over cycles is refused above this order.
inline constexpr int kEnumerationLimit = 24;
// The subset DP keeps one word per vertex subset.
inline constexpr int kSubsetDpLimit = 22;

namespace detail {

inline void require_order(const Graph& g, int limit, const char* what) {
  if (g.order() > limit)
    throw size_limit(std::string(what) + " refused for n=" + std::to_string(g.order()), limit);
}

inline VertexSet above(Vertex s) { return VertexSet(~std::uint64_t{0} << (s + 1)); }

// DFS state for cycles whose least vertex is `start`.
class CycleSearch {
 public:
  using Visitor = std::function<void(const std::vector<Vertex>&)>;

  CycleSearch(const Graph& g, Vertex start, int* best)
      : g_(g), start_(start), allowed_(above(start) & g.vertices()), best_(best) {
    path_.push_back(start);
  }

  // Every cycle through `start` using only larger ids, each once.
  void all(const Visitor& visit) {
    extend(start_, VertexSet::single(start_), [&](const std::vector<Vertex>& p) { visit(p); }, false);
  }

  // Only cycles at least as long as *best; *best is raised as longer ones appear.
  void longest(const Visitor& visit) {
    extend(start_, VertexSet::single(start_), visit, true);
  }

 private:
  template <class F>
  void extend(Vertex end, VertexSet visited, const F& visit, bool prune) {
    const int len = static_cast<int>(path_.size());
    for (Vertex u : g_.neighbors(end)) {
      if (u == start_) {
        if (len >= 3 && path_[1] < end) visit(path_);
        continue;
      }
      if (!allowed_.contains(u) || visited.contains(u)) continue;
      if (prune) {
        const VertexSet room = reach_within(g_, u, allowed_ - visited);
        if (!room.intersects(g_.neighbors(start_))) continue;
        if (len + room.size() < *best_) continue;
      }
      path_.push_back(u);
      extend(u, visited | VertexSet::single(u), visit, prune);
      path_.pop_back();
    }
  }

  const Graph& g_;
  Vertex start_;
  VertexSet allowed_;
  int* best_;
  std::vector<Vertex> path_;
};

}  // namespace detail

/// Calls visit(seq) once per cycle of g; seq is in canonical form.
inline void for_each_cycle(const Graph& g, const std::function<void(const std::vector<Vertex>&)>& visit) {
  detail::require_order(g, kEnumerationLimit, "cycle enumeration");
  int unused = 0;
  for (Vertex s = 0; s < g.order(); ++s) detail::CycleSearch(g, s, &unused).all(visit);
}

inline std::vector<CycleSeq> enumerate_cycles(const Graph& g) {
  std::vector<CycleSeq> out;
  for_each_cycle(g, [&](const std::vector<Vertex>& seq) { out.emplace_back(seq); });
  std::sort(out.begin(), out.end());
  return out;
}

/// Every longest cycle of g exactly once, sorted by canonical form.
inline std::vector<CycleSeq> enumerate_longest_cycles(const Graph& g) {
  detail::require_order(g, kEnumerationLimit, "longest-cycle enumeration");
  int best = 3;
  std::vector<std::vector<Vertex>> found;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (g.order() - s < best) break;
    detail::CycleSearch(g, s, &best).longest([&](const std::vector<Vertex>& seq) {
      const int len = static_cast<int>(seq.size());
      if (len > best) {
        best = len;
        found.clear();
      }
      if (len == best) found.push_back(seq);
    });
  }
  if (found.empty()) throw no_cycle("graph has no cycle");
  std::vector<CycleSeq> out(found.begin(), found.end());
  std::sort(out.begin(), out.end());
  return out;
}

/**
 * The vertex sets of longest cycles.
 *
 * Everything that depends on a longest cycle only through V(C) (crossing,
 * S-equivalence, hitting) can be answered from this family, which is much
 * smaller than the list of cycles on dense graphs.
 */
struct LongestCycleFamily {
  int length = 0;
  std::vector<VertexSet> vertex_sets;  // distinct, lexicographic order
};

/**
 * For every vertex subset M, whether G[M] has a Hamiltonian cycle, via the
 * subset DP "path from min(M) covering M ends at v". Returns the subsets that
 * carry a cycle (|M| >= 3).
 */
inline std::vector<VertexSet> cycle_vertex_sets(const Graph& g) {
  detail::require_order(g, kSubsetDpLimit, "subset cycle DP");
  const int n = g.order();
  const std::uint32_t full = n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  std::vector<std::uint32_t> ends(std::size_t{full} + 1, 0);
  for (Vertex s = 0; s < n; ++s) ends[std::uint32_t{1} << s] = std::uint32_t{1} << s;

  std::vector<VertexSet> out;
  for (std::uint32_t mask = 1; mask != 0 && mask <= full; ++mask) {
    const std::uint32_t here = ends[mask];
    if (here == 0) continue;
    const VertexSet m(mask);
    const Vertex s = m.min();
    if (m.size() >= 3 && (VertexSet(here).intersects(g.neighbors(s)))) out.push_back(m);
    const VertexSet open = detail::above(s) - m;
    for (Vertex v : VertexSet(here))
      for (Vertex u : g.neighbors(v) & open)
        ends[mask | (std::uint32_t{1} << u)] |= std::uint32_t{1} << u;
  }
  return out;
}

inline LongestCycleFamily longest_cycle_family(const Graph& g) {
  LongestCycleFamily fam;
  for (VertexSet m : cycle_vertex_sets(g)) {
    if (m.size() > fam.length) {
      fam.length = m.size();
      fam.vertex_sets.clear();
    }
    if (m.size() == fam.length) fam.vertex_sets.push_back(m);
  }
  if (fam.vertex_sets.empty()) throw no_cycle("graph has no cycle");
  std::sort(fam.vertex_sets.begin(), fam.vertex_sets.end(),
            [](VertexSet a, VertexSet b) { return lex_less(a, b); });
  return fam;
}

inline int longest_cycle_length(const Graph& g) {
  if (g.order() <= kSubsetDpLimit) return longest_cycle_family(g).length;
  return enumerate_longest_cycles(g).front().length();
}

/// The canonically least cycle with vertex set exactly m, if G[m] has one.
inline std::optional<CycleSeq> least_cycle_on(const Graph& g, VertexSet m) {
  if (m.size() < 3) return std::nullopt;
  const Vertex s = m.min();
  const int want = m.size();
  std::vector<Vertex> path{s};
  std::optional<CycleSeq> found;
  std::function<void(Vertex, VertexSet)> extend = [&](Vertex end, VertexSet visited) {
    if (static_cast<int>(path.size()) == want) {
      if (g.has_edge(end, s) && path[1] < end) found.emplace(path);
      return;
    }
    const VertexSet left = m - visited;
    for (Vertex u : g.neighbors(end) & left) {
      if (found) return;
      if (reach_within(g, u, left) != left) continue;
      path.push_back(u);
      extend(u, visited | VertexSet::single(u));
      path.pop_back();
    }
  };
  extend(s, VertexSet::single(s));
  return found;
}

}  // namespace lct
