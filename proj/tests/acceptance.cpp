// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Report lines for every verified instance go to acceptance_reports.jsonl.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "lct/lct.hpp"
#include "lct/report.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace lct;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (problems.size() < 5) problems.push_back(what);
    }
  }
};

std::ofstream reports("acceptance_reports.jsonl");
int failures = 0;

void record(const CheckReport& r) { reports << report_line(r) << '\n'; }

void criterion(int number, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.problems.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    o.pass = false;
    o.problems.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
  }
  std::ostringstream line;
  line << (o.pass ? "PASS" : "FAIL") << " criterion " << number << ": " << o.detail << " [" << std::fixed;
  line.precision(2);
  line << secs << " s]";
  std::cout << line.str() << '\n';
  for (const auto& p : o.problems) std::cout << "    " << p << '\n';
  std::cout.flush();
  if (!o.pass) ++failures;
}

Vertex id(const Graph& g, const char* label) { return *g.find_label(label); }

CycleSeq cycle_of(const Graph& g, std::initializer_list<const char*> names) {
  std::vector<Vertex> seq;
  for (const char* n : names) seq.push_back(id(g, n));
  return CycleSeq(seq);
}

PathSeq path_of(const Graph& g, std::initializer_list<const char*> names) {
  std::vector<Vertex> seq;
  for (const char* n : names) seq.push_back(id(g, n));
  return PathSeq(seq);
}

std::set<std::uint64_t> bag_bits(const std::vector<VertexSet>& bags) {
  std::set<std::uint64_t> out;
  for (VertexSet b : bags) out.insert(b.bits());
  return out;
}

// Shared between criteria 5 and 8.
int lemma5_checked = 0;
int lemma5_violations = 0;
// Shared with criterion 9.
int conjecture_total = 0;
int conjecture_holds = 0;
bool full_scale = true;

}  // namespace

int main() {
  std::cout << "acceptance run\n";

  criterion(1, 1.0, [] {
    Outcome o;
    const Graph g = fixtures::fig1();
    const VertexSet s{id(g, "a"), id(g, "b"), id(g, "c"), id(g, "d")};
    const auto p1 = classify(g, path_of(g, {"v1", "a", "v5"}), s);
    const auto p2 = classify(g, path_of(g, {"v3", "c", "d", "b", "v4"}), s);
    const CycleSeq c1 = cycle_of(g, {"v1", "b", "v2", "d"});
    const CycleSeq c2 = cycle_of(g, {"v3", "v4", "c", "a", "b"});
    const auto r1 = classify(g, c1, s);
    const auto r2 = classify(g, c2, s);
    o.require(p1.k == 1 && p1.crosses(), "P1 should 1-cross S");
    o.require(p2.k == 3 && p2.fenced(), "P2 should be 3-fenced");
    o.require(r1.k == 2 && r1.crosses(), "C1 should 2-cross S");
    o.require(r2.k == 3 && r2.fenced(), "C2 should be 3-fenced");
    o.require(classify(g, path_of(g, {"c", "d"}), s).fenced(), "path cd should be fenced");
    o.require(classify(g, cycle_of(g, {"a", "b", "d"}), s).fenced(), "cycle abda should be fenced");
    o.require(s_equivalent(c2, cycle_of(g, {"v1", "b", "c", "v5", "a"}), s), "C2 and v1bcv5av1 should be S-equivalent");

    const CycleSeq c = cycle_of(g, {"a", "v2", "b", "c", "v5"});
    const VertexSet triple{id(g, "a"), id(g, "b"), id(g, "c")};
    const Vertex a = id(g, "a"), b = id(g, "b"), cc = id(g, "c");
    const PathSeq ab = part_between(c, triple, a, b), ac = part_between(c, triple, a, cc),
                  bc = part_between(c, triple, b, cc);
    o.require(breaks(g, a, c, s), "a should break av2bcv5a");
    o.require(!sim_k(g, ab, ac, s), "C_ab and C_ac should be unrelated");
    o.require(!sim_k(g, ab, bc, s), "C_ab and C_bc should be unrelated");
    o.require(!sim_k(g, bc, ac, s), "C_bc and C_ac should be unrelated");
    for (const auto* cyc : {&c1, &c2, &c})
      o.require(cyc->lies_in(g), "caption cycle missing from the fixture");
    o.detail = "figure caption suite on fig1 (classify, S-equivalence, breaking vertex)";
    return o;
  });

  criterion(2, 1.0, [] {
    Outcome o;
    const auto b = fixtures::fig2b();
    const auto c = fixtures::fig2c();
    o.require(validate(b).valid(), "fig2(b) should validate");
    o.require(validate(b).valid() && width(b) == 3, "fig2(b) should have width 3");
    o.require(!is_full(b, 3), "fig2(b) should not be full");
    o.require(validate(c).valid(), "fig2(c) should validate");
    o.require(is_full(c, 2), "fig2(c) should be full for k=2");
    const int tw = exact_treewidth(fixtures::fig2()).width;
    o.require(tw == 2, "exact treewidth of fig2 is " + std::to_string(tw));
    o.detail = "fig2(b) width 3 not full, fig2(c) full for k=2, tw(fig2) = 2";
    return o;
  });

  criterion(3, 1.0, [] {
    Outcome o;
    const Graph g = fixtures::fig4();
    o.require(is_chordal(g).chordal, "fig4 should be chordal");
    o.require(omega_chordal(g) == 5, "omega(fig4) should be 5");
    const auto want = bag_bits(fixtures::fig4b().bags());
    o.require(bag_bits(maximal_cliques(g)) == want, "maximal cliques differ from the drawn bags");
    const auto tree = build_clique_tree(g);
    o.require(validate(tree).valid(), "clique tree does not validate");
    o.require(bag_bits(tree.bags()) == want && tree.node_count() == 5, "clique tree bag set differs");
    o.detail = "fig4 chordal, omega = 5, five maximal cliques, clique tree validates";
    return o;
  });

  criterion(4, 120.0, [] {
    Outcome o;
    const std::uint64_t master = 4004;
    int checked = 0;
    for (std::uint64_t i = 0; i < 500; ++i) {
      const std::uint64_t seed = instance_seed(master, i);
      const int n = 4 + static_cast<int>(seed % 7);  // 4..10
      auto r = verify_prop1(gen_random_2connected(n, 0.5, seed).graph);
      r.seed = seed;
      record(r);
      ++checked;
      o.require(r.pass, "violation at seed " + std::to_string(seed));
    }
    auto pet = verify_prop1(fixtures::petersen());
    record(pet);
    o.require(pet.pass, "violation on the Petersen graph");
    full_scale = full_scale && checked == 500;
    o.detail = std::to_string(checked) + " random 2-connected graphs (n <= 10) + Petersen: longest cycles pairwise share >= 2 vertices";
    return o;
  });

  criterion(5, 600.0, [] {
    Outcome o;
    int checked = 0;
    for (int k = 2; k <= 4; ++k) {
      const std::uint64_t master = 5000 + static_cast<std::uint64_t>(k);
      for (std::uint64_t i = 0; i < 300; ++i) {
        const std::uint64_t seed = instance_seed(master, i);
        const int n = k + 3 + static_cast<int>(seed % static_cast<std::uint64_t>(14 - k - 2));  // k+3..14
        const auto gen = gen_partial_ktree(n, k, 0.8, seed);
        auto r = verify_thm1(gen.graph, k, &*gen.decomposition);
        r.seed = seed;
        record(r);
        ++checked;
        o.require(r.pass, "lct > k-1 at k=" + std::to_string(k) + " seed " + std::to_string(seed));
        if (k == 2) o.require(*r.lct == 1, "k=2 instance with lct " + std::to_string(*r.lct) + " seed " + std::to_string(seed));

        // The construction decomposition is full; check the lemma5 implication on it.
        auto l5 = verify_lemma5(gen.graph, *gen.decomposition);
        l5.seed = seed;
        record(l5);
        ++lemma5_checked;
        if (!l5.pass) ++lemma5_violations;
      }
    }
    full_scale = full_scale && checked == 900;
    o.detail = std::to_string(checked) + " 2-connected partial k-trees (k = 2,3,4; n <= 14): lct <= k-1, lct = 1 for k = 2";
    return o;
  });

  criterion(6, 600.0, [] {
    Outcome o;
    const std::uint64_t master = 6006;
    int checked = 0;
    for (std::uint64_t i = 0; i < 300; ++i) {
      const std::uint64_t seed = instance_seed(master, i);
      const int n = 6 + static_cast<int>(seed % 9);             // 6..14
      const int k = 2 + static_cast<int>((seed >> 8) % 6);      // omega up to 8
      const Graph g = gen_chordal(n, k, seed).graph;
      auto r = verify_thm2(g);
      r.seed = seed;
      record(r);
      ++checked;
      o.require(r.pass, "lct > max(1, omega-3) at seed " + std::to_string(seed));
      auto conj = verify_conjecture_chordal(g);
      conj.seed = seed;
      record(conj);
      ++conjecture_total;
      if (conj.pass) ++conjecture_holds;
    }
    int trees = 0;
    for (std::uint64_t i = 0; i < 100; ++i) {
      const std::uint64_t seed = instance_seed(master + 1, i);
      const int n = 5 + static_cast<int>(seed % 10);  // 5..14
      const auto gen = gen_ktree(n, 3, seed);
      auto r = verify_thm2(gen.graph, 3);
      r.seed = seed;
      record(r);
      ++trees;
      o.require(r.pass && *r.lct == 1, "3-tree with lct " + std::to_string(*r.lct) + " seed " + std::to_string(seed));
    }
    full_scale = full_scale && checked == 300;
    o.detail = std::to_string(checked) + " 2-connected chordal graphs (n <= 14): lct <= max(1, omega-3); " +
               std::to_string(trees) + " 3-trees with lct = 1";
    return o;
  });
  std::cout << "LOG chordal conjecture (all longest cycles share a vertex): held on " << conjecture_holds << " of "
            << conjecture_total << " chordal instances"
            << (conjecture_holds == conjecture_total ? "" : "; counterexample candidates are in acceptance_reports.jsonl")
            << '\n';

  criterion(7, 300.0, [] {
    Outcome o;
    int lct_checked = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
      const std::uint64_t seed = instance_seed(7007, i);
      const int n = 4 + static_cast<int>(seed % 7);  // 4..10
      const Graph g = gen_random_2connected(n, 0.5, seed).graph;
      const int fast = compute_lct(g).value, naive = lct_naive(g);
      ++lct_checked;
      o.require(fast == naive, "compute_lct " + std::to_string(fast) + " vs naive " + std::to_string(naive) +
                                   " at seed " + std::to_string(seed));
    }
    int enum_checked = 0;
    for (std::uint64_t i = 0; i < 100; ++i) {
      const std::uint64_t seed = instance_seed(7008, i);
      const int n = 4 + static_cast<int>(seed % 5);  // 4..8
      const Graph g = gen_random_2connected(n, 0.5, seed).graph;
      std::set<std::vector<int>> got;
      for (const auto& c : enumerate_longest_cycles(g)) got.insert(c.sequence());
      ++enum_checked;
      o.require(got == oracle::longest_cycles(g), "longest cycle lists differ at seed " + std::to_string(seed));
    }
    full_scale = full_scale && lct_checked == 200 && enum_checked == 100;
    o.detail = "compute_lct = lct_naive on " + std::to_string(lct_checked) +
               " graphs (n <= 10); DFS longest cycles = permutation enumerator on " + std::to_string(enum_checked) +
               " graphs (n <= 8)";
    return o;
  });

  criterion(8, 0, [] {
    Outcome o;
    std::mt19937_64 rng(8008);
    int helly = 0;
    for (int i = 0; i < 200; ++i) {
      const Tree t = support::random_tree(1 + static_cast<int>(rng() % 15), rng);
      const auto family = support::intersecting_family(t, rng);
      const Node x = helly_common_vertex(t, family);
      const auto common = oracle::common_nodes(t.size(), family);
      ++helly;
      o.require(std::find(common.begin(), common.end(), x) != common.end(),
                "Helly walk left the common intersection at family " + std::to_string(i));
    }

    int conflicts = 0;
    for (std::uint64_t i = 0; conflicts < 100 && i < 1000; ++i) {
      const std::uint64_t seed = instance_seed(8009, i);
      const int k = 2 + static_cast<int>(seed % 2);
      const int n = k + 2 + static_cast<int>((seed >> 4) % 6);
      const auto gen = (seed >> 12) % 2 == 0 ? gen_ktree(n, k, seed) : gen_partial_ktree(n, k, 0.8, seed);
      const auto& d = *gen.decomposition;
      const auto cycles = preset_fenced_cycles(d);
      if (std::any_of(cycles.begin(), cycles.end(), [](const auto& c) { return c.empty(); })) continue;
      const auto w = find_conflict_edge(d, cycles);
      ++conflicts;
      // independent re-check: tree edge, membership, and both branch conditions
      bool ok = d.has_tree_edge(w.t, w.t2) &&
                std::find(cycles[w.t].begin(), cycles[w.t].end(), w.cycle_at_t) != cycles[w.t].end() &&
                std::find(cycles[w.t2].begin(), cycles[w.t2].end(), w.cycle_at_t2) != cycles[w.t2].end() &&
                branch_of_fenced(d, w.t, w.cycle_at_t).contains(w.t2) &&
                branch_of_fenced(d, w.t2, w.cycle_at_t2).contains(w.t);
      o.require(ok, "conflict witness fails re-check at seed " + std::to_string(seed));
    }
    o.require(conflicts == 100, "only " + std::to_string(conflicts) + " conflict-edge instances built");
    o.require(lemma5_checked == 900, "lemma5 checked on " + std::to_string(lemma5_checked) + " decompositions");
    o.require(lemma5_violations == 0, std::to_string(lemma5_violations) + " lemma5 violations");
    full_scale = full_scale && helly == 200 && conflicts == 100;
    o.detail = "Helly on " + std::to_string(helly) + " families, conflict-edge witnesses on " +
               std::to_string(conflicts) + " decompositions, lemma5 on " + std::to_string(lemma5_checked) +
               " full decompositions";
    return o;
  });

  criterion(9, 0, [] {
    Outcome o;
    o.require(full_scale, "some criterion ran below its stated scale");
    o.detail = "every bound checked directly at the stated scale, no substitution; chordal conjecture logged (" +
               std::to_string(conjecture_holds) + "/" + std::to_string(conjecture_total) + " with lct = 1)";
    return o;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
