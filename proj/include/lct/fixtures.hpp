#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lct/errors.hpp"
#include "lct/generators.hpp"
#include "lct/graph.hpp"
#include "lct/treedec.hpp"

namespace lct::fixtures {

namespace detail {

// Graph from labelled edges; vertex ids follow the order of `labels`.
inline Graph labelled(const std::vector<std::string>& labels,
                      const std::vector<std::pair<std::string, std::string>>& edges) {
  Graph g(static_cast<int>(labels.size()));
  g.set_labels(labels);
  for (const auto& [a, b] : edges) g.add_edge(*g.find_label(a), *g.find_label(b));
  return g;
}

inline VertexSet bag(const Graph& g, std::initializer_list<const char*> names) {
  VertexSet s;
  for (const char* name : names) {
    auto v = g.find_label(name);
    if (!v) throw precondition_error(std::string("unknown label ") + name);
    s.insert(*v);
  }
  return s;
}

}  // namespace detail

/// Fenced/crossing example graph, S = {a,b,c,d}; also the breaking-vertex example.
inline Graph fig1() {
  return detail::labelled({"a", "b", "c", "d", "v1", "v2", "v3", "v4", "v5"},
                          {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"a", "d"}, {"b", "d"},
                           {"c", "d"}, {"b", "v1"}, {"d", "v1"}, {"b", "v2"}, {"d", "v2"},
                           {"b", "v3"}, {"c", "v4"}, {"v3", "v4"}, {"v3", "c"}, {"v4", "b"},
                           {"a", "v1"}, {"a", "v2"}, {"a", "v5"}, {"v5", "c"}});
}

/// Treewidth-two example graph.
inline Graph fig2() {
  return detail::labelled({"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"},
                          {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v1", "v4"},
                           {"v1", "v5"}, {"v2", "v5"}, {"v2", "v6"}, {"v3", "v7"},
                           {"v3", "v6"}, {"v4", "v7"}, {"v4", "v8"}, {"v1", "v8"}});
}

/// Decomposition of fig2 with a width-3 centre bag (valid, not full).
inline TreeDecomposition fig2b() {
  Graph g = fig2();
  using detail::bag;
  std::vector<VertexSet> bags{bag(g, {"v1", "v2", "v3", "v4"}), bag(g, {"v1", "v2", "v5"}),
                              bag(g, {"v2", "v3", "v6"}), bag(g, {"v3", "v4", "v7"}),
                              bag(g, {"v1", "v4", "v8"})};
  return TreeDecomposition(g, bags, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
}

/// Full width-2 decomposition of fig2.
inline TreeDecomposition fig2c() {
  Graph g = fig2();
  using detail::bag;
  std::vector<VertexSet> bags{bag(g, {"v1", "v2", "v3"}), bag(g, {"v1", "v3", "v4"}),
                              bag(g, {"v1", "v2", "v5"}), bag(g, {"v2", "v3", "v6"}),
                              bag(g, {"v3", "v4", "v7"}), bag(g, {"v1", "v4", "v8"})};
  return TreeDecomposition(g, bags, {{0, 1}, {0, 2}, {1, 5}, {0, 3}, {1, 4}});
}

/**
 * The 3-tree grown from triangle abc by v1..v7, each attached to the listed
 * triangle; returns the builder so callers get both graph and bags.
 */
inline KTreeBuilder fig3_builder() {
  KTreeBuilder b(3, 10);
  // ids: a=0 b=1 c=2 v1=3 .. v7=9
  const Vertex a = 0, bb = 1, c = 2, v1 = 3, v3 = 5, v4 = 6, v5 = 7;
  b.attach(VertexSet{a, bb, c});    // v1
  b.attach(VertexSet{bb, c, v1});   // v2
  b.attach(VertexSet{a, c, v1});    // v3
  b.attach(VertexSet{a, c, v1});    // v4
  b.attach(VertexSet{a, c, v3});    // v5
  b.attach(VertexSet{a, v3, v5});   // v6
  b.attach(VertexSet{v1, v4, c});   // v7
  return b;
}

inline const std::vector<std::string>& fig3_labels() {
  static const std::vector<std::string> labels{"a", "b", "c", "v1", "v2", "v3", "v4", "v5", "v6", "v7"};
  return labels;
}

inline Graph fig3() {
  Graph g = fig3_builder().graph();
  g.set_labels(fig3_labels());
  return g;
}

inline TreeDecomposition fig3b() {
  auto d = fig3_builder().decomposition();
  return TreeDecomposition(fig3(), d.bags(), d.tree_edges());
}

/// Chordal example graph with omega = 5.
inline Graph fig4() {
  return detail::labelled({"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "v9"},
                          {{"v1", "v2"}, {"v1", "v3"}, {"v1", "v4"}, {"v1", "v5"}, {"v2", "v3"},
                           {"v2", "v4"}, {"v2", "v5"}, {"v3", "v4"}, {"v3", "v5"}, {"v4", "v5"},
                           {"v2", "v6"}, {"v3", "v6"}, {"v1", "v7"}, {"v4", "v7"}, {"v5", "v7"},
                           {"v1", "v8"}, {"v5", "v8"}, {"v7", "v8"}, {"v4", "v9"}, {"v5", "v9"},
                           {"v7", "v9"}});
}

/// The drawn clique tree of fig4.
inline TreeDecomposition fig4b() {
  Graph g = fig4();
  using detail::bag;
  std::vector<VertexSet> bags{bag(g, {"v1", "v2", "v3", "v4", "v5"}), bag(g, {"v1", "v4", "v5", "v7"}),
                              bag(g, {"v1", "v5", "v7", "v8"}), bag(g, {"v4", "v5", "v7", "v9"}),
                              bag(g, {"v2", "v3", "v6"})};
  return TreeDecomposition(g, bags, {{1, 2}, {1, 0}, {1, 3}, {0, 4}});
}

inline Graph petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

inline Graph complete(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle(int n) {
  if (n < 3) throw precondition_error("cycle needs at least three vertices");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph path(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

namespace detail {
inline int parse_size(const std::string& text, const std::string& name) {
  std::size_t used = 0;
  int n = -1;
  try {
    n = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || n < 0) throw precondition_error("bad size in fixture name " + name);
  return n;
}
}  // namespace detail

/// Names: petersen, fig1..fig4, complete(n) / Kn, cycle(n) / Cn.
inline Graph named(const std::string& name) {
  if (name == "petersen") return petersen();
  if (name == "fig1" || name == "fig6") return fig1();
  if (name == "fig2") return fig2();
  if (name == "fig3") return fig3();
  if (name == "fig4") return fig4();
  auto arg = [&](const std::string& head) -> std::optional<int> {
    if (name.rfind(head + "(", 0) == 0 && name.back() == ')')
      return detail::parse_size(name.substr(head.size() + 1, name.size() - head.size() - 2), name);
    return std::nullopt;
  };
  if (auto n = arg("complete")) return complete(*n);
  if (auto n = arg("cycle")) return cycle(*n);
  if (name.size() > 1 && name[0] == 'K') return complete(detail::parse_size(name.substr(1), name));
  if (name.size() > 1 && name[0] == 'C') return cycle(detail::parse_size(name.substr(1), name));
  throw precondition_error("unknown fixture '" + name + "'");
}

/// Names: fig2b, fig2c, fig3b, fig4b.
inline TreeDecomposition named_decomposition(const std::string& name) {
  if (name == "fig2b") return fig2b();
  if (name == "fig2c") return fig2c();
  if (name == "fig3b") return fig3b();
  if (name == "fig4b") return fig4b();
  throw precondition_error("unknown decomposition fixture '" + name + "'");
}

}  // namespace lct::fixtures
