#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "lct/cycle.hpp"
#include "lct/enumerate.hpp"
#include "lct/errors.hpp"
#include "lct/graph.hpp"

namespace lct {

// ---------------------------------------------------------------------------
// The ~K relation and breaking vertices.

/// p ~K q: some vertex of p outside K shares a component of G - K with some
/// vertex of q outside K. Vertices of K belong to no such component.
inline bool sim_k(const Graph& g, const PathSeq& p, const PathSeq& q, VertexSet k_set) {
  g.check_set(k_set);
  const VertexSet from = p.vertices() - k_set;
  const VertexSet to = q.vertices() - k_set;
  if (from.empty() || to.empty()) return false;
  const VertexSet rest = g.vertices() - k_set;
  VertexSet reached;
  for (Vertex v : from) reached |= reach_within(g, v, rest);
  return reached.intersects(to);
}

/// v breaks c: c 3-crosses K at a triple holding v, and the two parts of c
/// at v are not ~K related.
inline bool breaks(const Graph& g, Vertex v, const CycleSeq& c, VertexSet k_set) {
  const auto rec = classify(g, c, k_set);
  if (rec.k != 3 || !rec.crosses()) throw precondition_error("cycle does not 3-cross the set");
  if (!rec.trace.contains(v)) throw precondition_error("vertex is not in the intersection triple");
  const VertexSet others = rec.trace - VertexSet::single(v);
  const Vertex x = others.min(), y = others.max();
  return !sim_k(g, part_between(c, rec.trace, v, x), part_between(c, rec.trace, v, y), k_set);
}

// ---------------------------------------------------------------------------
// Attractors.

struct AttractorReport {
  CycleSeq cycle;
  VertexSet set;
  int k = 0;  // |V(cycle) & set|
  bool fenced = false;
  bool is_attractor = false;
  std::optional<CycleSeq> violating_cycle;  // S-equivalent longest cycle that crosses
};

/// Checks c against the given list of all longest cycles (canonical order).
inline AttractorReport is_attractor(const Graph& g, const CycleSeq& c, VertexSet s,
                                    const std::vector<CycleSeq>& longest) {
  if (!std::binary_search(longest.begin(), longest.end(), c))
    throw precondition_error("cycle is not among the longest cycles");
  AttractorReport r;
  r.cycle = c;
  r.set = s;
  const auto rec = classify(g, c, s);
  r.k = rec.k;
  r.fenced = rec.fenced();
  for (const auto& d : longest)
    if (s_equivalent(c, d, s) && classify(g, d, s).crosses()) {
      r.violating_cycle = d;
      break;
    }
  r.is_attractor = r.fenced && !r.violating_cycle;
  return r;
}

/**
 * An attractor for s meeting s in at most max_ell vertices, if one exists.
 *
 * Longest cycles are grouped by their trace on s; a group yields attractors
 * exactly when none of its members crosses s. Groups are tried by increasing
 * trace size, then trace order, and the witness is the canonically least
 * cycle of the group.
 */
inline std::optional<AttractorReport> find_attractor(const Graph& g, VertexSet s, int max_ell,
                                                     const LongestCycleFamily& fam) {
  g.check_set(s);
  std::map<std::uint64_t, std::vector<VertexSet>> by_trace;
  for (VertexSet m : fam.vertex_sets) by_trace[(m & s).bits()].push_back(m);

  std::vector<VertexSet> traces;
  for (const auto& [bits, members] : by_trace) traces.emplace_back(bits);
  std::sort(traces.begin(), traces.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : lex_less(a, b);
  });

  for (VertexSet trace : traces) {
    if (trace.size() > max_ell) break;
    const auto& members = by_trace[trace.bits()];
    bool all_fenced = std::none_of(members.begin(), members.end(),
                                   [&](VertexSet m) { return separates(g, s, m); });
    if (!all_fenced) continue;
    std::optional<CycleSeq> best;
    for (VertexSet m : members) {
      auto c = least_cycle_on(g, m);
      if (c && (!best || *c < *best)) best = c;
    }
    AttractorReport r;
    r.cycle = *best;
    r.set = s;
    r.k = trace.size();
    r.fenced = true;
    r.is_attractor = true;
    return r;
  }
  return std::nullopt;
}

inline std::optional<AttractorReport> find_attractor(const Graph& g, VertexSet s, int max_ell) {
  return find_attractor(g, s, max_ell, longest_cycle_family(g));
}

// ---------------------------------------------------------------------------
// Exact longest cycle transversals.

struct LctResult {
  int value = 0;
  VertexSet transversal;
  int L = 0;
  // One canonical-least cycle per distinct longest-cycle vertex set.
  std::vector<CycleSeq> longest_cycles;
  std::vector<VertexSet> longest_vertex_sets;
};

namespace detail {

// Can `budget` vertices drawn from `allowed` hit every set in `sets`?
inline bool can_hit(const std::vector<VertexSet>& sets, VertexSet chosen, int budget, VertexSet allowed) {
  const VertexSet* pick = nullptr;
  int fewest = kMaxVertices + 1;
  for (const VertexSet& m : sets) {
    if (m.intersects(chosen)) continue;
    const int options = (m & allowed).size();
    if (options < fewest) {
      fewest = options;
      pick = &m;
    }
  }
  if (pick == nullptr) return true;
  if (budget == 0 || fewest == 0) return false;
  for (Vertex v : *pick & allowed) {
    if (can_hit(sets, chosen | VertexSet::single(v), budget - 1, allowed)) return true;
    allowed.erase(v);  // later branches never need v again
  }
  return false;
}

// Drop duplicates and supersets: hitting the remaining sets hits them all.
inline std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> out;
  for (VertexSet m : sets)
    if (std::none_of(out.begin(), out.end(), [&](VertexSet o) { return o.is_subset_of(m); }))
      out.push_back(m);
  return out;
}

}  // namespace detail

/// Minimum hitting set of `sets`; among optima the lexicographically least.
inline VertexSet min_hitting_set(const std::vector<VertexSet>& family, VertexSet universe) {
  const auto sets = detail::minimal_sets(family);
  if (sets.empty()) return {};
  int k = 1;
  while (!detail::can_hit(sets, {}, k, universe)) ++k;
  // Fix members one at a time, smallest feasible vertex first.
  VertexSet chosen;
  VertexSet allowed = universe;
  for (int left = k; left > 0; --left) {
    for (Vertex v : allowed) {
      VertexSet rest = allowed - VertexSet(v == 63 ? ~std::uint64_t{0} : (std::uint64_t{2} << v) - 1);
      if (detail::can_hit(sets, chosen | VertexSet::single(v), left - 1, rest)) {
        chosen.insert(v);
        allowed = rest;
        break;
      }
    }
  }
  return chosen;
}

inline LctResult compute_lct(const Graph& g) {
  const auto fam = longest_cycle_family(g);
  LctResult r;
  r.L = fam.length;
  r.longest_vertex_sets = fam.vertex_sets;
  for (VertexSet m : fam.vertex_sets) r.longest_cycles.push_back(*least_cycle_on(g, m));
  std::sort(r.longest_cycles.begin(), r.longest_cycles.end());
  r.transversal = min_hitting_set(fam.vertex_sets, g.vertices());
  r.value = r.transversal.size();
  return r;
}

inline constexpr int kNaiveLctLimit = 12;

/// Smallest vertex subset, by increasing size, meeting every enumerated longest cycle.
inline int lct_naive(const Graph& g) {
  if (g.order() > kNaiveLctLimit)
    throw size_limit("naive lct refused for n=" + std::to_string(g.order()), kNaiveLctLimit);
  const auto cycles = enumerate_longest_cycles(g);
  const std::uint64_t limit = std::uint64_t{1} << g.order();
  for (int size = 1; size <= g.order(); ++size)
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
      const VertexSet t(bits);
      if (t.size() != size) continue;
      if (std::all_of(cycles.begin(), cycles.end(),
                      [&](const CycleSeq& c) { return c.vertices().intersects(t); }))
        return size;
    }
  return g.order();
}

}  // namespace lct
