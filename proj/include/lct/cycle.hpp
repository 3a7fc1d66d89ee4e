#pragma once

#include <algorithm>
#include <compare>
#include <ostream>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "lct/errors.hpp"
#include "lct/graph.hpp"

namespace lct {

namespace detail {

inline VertexSet distinct_members(std::span<const Vertex> seq, const char* what) {
  VertexSet s;
  for (Vertex v : seq) {
    if (v < 0 || v >= kMaxVertices)
      throw invalid_vertex(std::string(what) + " vertex " + std::to_string(v) + " out of range");
    if (s.contains(v))
      throw precondition_error(std::string(what) + " repeats vertex " + std::to_string(v));
    s.insert(v);
  }
  return s;
}

}  // namespace detail

/// A simple path given by its vertex sequence (at least one vertex).
class PathSeq {
 public:
  PathSeq() = default;
  explicit PathSeq(std::vector<Vertex> vs) : seq_(std::move(vs)) {
    if (seq_.empty()) throw precondition_error("empty path");
    members_ = detail::distinct_members(seq_, "path");
  }

  const std::vector<Vertex>& sequence() const { return seq_; }
  VertexSet vertices() const { return members_; }
  Vertex front() const { return seq_.front(); }
  Vertex back() const { return seq_.back(); }
  int length() const { return static_cast<int>(seq_.size()) - 1; }
  // Vertices other than the two ends.
  VertexSet interior() const {
    VertexSet s = members_;
    s.erase(front());
    s.erase(back());
    return s;
  }

  PathSeq reversed() const { return PathSeq(std::vector<Vertex>(seq_.rbegin(), seq_.rend())); }

  // Same subgraph, either direction.
  bool same_as(const PathSeq& o) const {
    return seq_ == o.seq_ || std::equal(seq_.begin(), seq_.end(), o.seq_.rbegin(), o.seq_.rend());
  }

  bool lies_in(const Graph& g) const {
    if (!members_.is_subset_of(g.vertices())) return false;
    for (std::size_t i = 1; i < seq_.size(); ++i)
      if (!g.has_edge(seq_[i - 1], seq_[i])) return false;
    return true;
  }

  bool operator==(const PathSeq& o) const { return seq_ == o.seq_; }

 private:
  std::vector<Vertex> seq_;
  VertexSet members_;
};

/**
 * A cycle stored in canonical form: rotated so the least id comes first,
 * oriented so the second vertex is smaller than the last. Two sequences
 * describing the same cycle therefore compare equal.
 */
class CycleSeq {
 public:
  CycleSeq() = default;
  explicit CycleSeq(std::vector<Vertex> vs) : seq_(std::move(vs)) {
    if (seq_.size() < 3) throw precondition_error("a cycle needs at least three vertices");
    members_ = detail::distinct_members(seq_, "cycle");
    canonicalize();
  }

  const std::vector<Vertex>& sequence() const { return seq_; }
  VertexSet vertices() const { return members_; }
  int length() const { return static_cast<int>(seq_.size()); }
  bool contains(Vertex v) const { return members_.contains(v); }

  bool lies_in(const Graph& g) const {
    if (!members_.is_subset_of(g.vertices())) return false;
    for (std::size_t i = 0; i < seq_.size(); ++i)
      if (!g.has_edge(seq_[i], seq_[(i + 1) % seq_.size()])) return false;
    return true;
  }

  int position(Vertex v) const {
    auto it = std::find(seq_.begin(), seq_.end(), v);
    if (it == seq_.end()) throw precondition_error("vertex " + std::to_string(v) + " not on cycle");
    return static_cast<int>(it - seq_.begin());
  }

  // The arc walking forward (in stored order) from `from` to `to`.
  PathSeq forward_arc(Vertex from, Vertex to) const {
    const int n = length();
    int i = position(from);
    const int j = position(to);
    std::vector<Vertex> out{seq_[i]};
    while (i != j) {
      i = (i + 1) % n;
      out.push_back(seq_[i]);
    }
    return PathSeq(std::move(out));
  }

  auto operator<=>(const CycleSeq& o) const { return seq_ <=> o.seq_; }
  bool operator==(const CycleSeq& o) const { return seq_ == o.seq_; }

 private:
  void canonicalize() {
    auto lo = std::min_element(seq_.begin(), seq_.end());
    std::rotate(seq_.begin(), lo, seq_.end());
    if (seq_[1] > seq_.back()) std::reverse(seq_.begin() + 1, seq_.end());
  }

  std::vector<Vertex> seq_;
  VertexSet members_;
};

inline std::ostream& operator<<(std::ostream& os, const PathSeq& p) {
  for (std::size_t i = 0; i < p.sequence().size(); ++i) os << (i ? " " : "") << p.sequence()[i];
  return os;
}

inline std::ostream& operator<<(std::ostream& os, const CycleSeq& c) {
  for (Vertex v : c.sequence()) os << v << ' ';
  return os << c.sequence().front();
}

inline std::string format_labels(const Graph& g, std::span<const Vertex> seq) {
  std::string out;
  for (Vertex v : seq) {
    if (!out.empty()) out += ' ';
    out += g.label(v);
  }
  return out;
}

inline std::string format_cycle(const Graph& g, const CycleSeq& c) {
  std::vector<Vertex> closed = c.sequence();
  closed.push_back(closed.front());
  return format_labels(g, closed);
}

using PathOrCycle = std::variant<PathSeq, CycleSeq>;

/// a . b: join two paths sharing one endpoint (a path) or both endpoints (a cycle).
inline PathOrCycle concat(const PathSeq& a, const PathSeq& b) {
  const VertexSet shared = a.vertices() & b.vertices();
  const VertexSet a_ends = VertexSet{a.front(), a.back()};
  const VertexSet b_ends = VertexSet{b.front(), b.back()};

  if (a.length() > 0 && b.length() > 0 && a_ends.size() == 2 && a_ends == b_ends &&
      shared == a_ends) {
    std::vector<Vertex> seq = a.sequence();
    const PathSeq tail = b.front() == a.back() ? b : b.reversed();
    seq.insert(seq.end(), tail.sequence().begin() + 1, tail.sequence().end() - 1);
    if (seq.size() < 3) throw not_composable("two parallel edges do not form a simple cycle");
    return CycleSeq(std::move(seq));
  }

  if (shared.size() == 1) {
    const Vertex x = shared.min();
    const bool a_end = x == a.front() || x == a.back();
    const bool b_end = x == b.front() || x == b.back();
    if (a_end && b_end) {
      const PathSeq head = a.back() == x ? a : a.reversed();
      const PathSeq tail = b.front() == x ? b : b.reversed();
      std::vector<Vertex> seq = head.sequence();
      seq.insert(seq.end(), tail.sequence().begin() + 1, tail.sequence().end());
      return PathSeq(std::move(seq));
    }
  }
  throw not_composable("paths do not share compatible endpoints with disjoint interiors");
}

/// The two ab-parts of c: the arc a->b in stored order, then the arc b->a.
inline std::pair<PathSeq, PathSeq> ab_parts(const CycleSeq& c, Vertex a, Vertex b) {
  if (a == b) throw precondition_error("ab-parts need two distinct vertices");
  if (!c.contains(a) || !c.contains(b)) throw precondition_error("vertex not on cycle");
  return {c.forward_arc(a, b), c.forward_arc(b, a)};
}

struct AbcParts {
  PathSeq ab;
  PathSeq bc;
  PathSeq ca;
};

/// The three arcs of c between a, b and c3; each arc avoids the third vertex.
inline AbcParts abc_parts(const CycleSeq& c, Vertex a, Vertex b, Vertex c3) {
  if (a == b || b == c3 || a == c3) throw precondition_error("abc-parts need three distinct vertices");
  if (!c.contains(a) || !c.contains(b) || !c.contains(c3))
    throw precondition_error("vertex not on cycle");
  auto arc = [&](Vertex x, Vertex y, Vertex avoid) {
    PathSeq p = c.forward_arc(x, y);
    return p.vertices().contains(avoid) ? c.forward_arc(y, x).reversed() : p;
  };
  return {arc(a, b, c3), arc(b, c3, a), arc(c3, a, b)};
}

/// The (abc-)part of a 3-intersecting cycle between two of its named vertices.
inline PathSeq part_between(const CycleSeq& c, VertexSet triple, Vertex x, Vertex y) {
  if (triple.size() != 3 || !triple.contains(x) || !triple.contains(y) || x == y)
    throw precondition_error("part_between needs two distinct members of a triple");
  const Vertex third = (triple - VertexSet{x, y}).min();
  PathSeq p = c.forward_arc(x, y);
  return p.vertices().contains(third) ? c.forward_arc(y, x).reversed() : p;
}

enum class Verdict { crosses, fenced };

inline const char* to_string(Verdict v) { return v == Verdict::crosses ? "crosses" : "fenced"; }

struct ClassificationRecord {
  int k = 0;
  Verdict verdict = Verdict::fenced;
  VertexSet trace;

  bool crosses() const { return verdict == Verdict::crosses; }
  bool fenced() const { return verdict == Verdict::fenced; }
  bool operator==(const ClassificationRecord&) const = default;
};

inline ClassificationRecord classify(const Graph& g, VertexSet object, VertexSet s) {
  g.check_set(object);
  const VertexSet trace = object & s;
  return {trace.size(), separates(g, s, object) ? Verdict::crosses : Verdict::fenced, trace};
}

inline ClassificationRecord classify(const Graph& g, const PathSeq& p, VertexSet s) {
  return classify(g, p.vertices(), s);
}

inline ClassificationRecord classify(const Graph& g, const CycleSeq& c, VertexSet s) {
  return classify(g, c.vertices(), s);
}

inline bool s_equivalent(const CycleSeq& c, const CycleSeq& d, VertexSet s) {
  return (c.vertices() & s) == (d.vertices() & s);
}

}  // namespace lct
