#pragma once

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lct/lct.hpp"
#include "lct/report.hpp"

namespace lct::cli {

enum Exit : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kSizeLimit = 3 };

namespace detail {

using json = nlohmann::ordered_json;

// "named:<fixture>" or a file path.
inline Graph load_graph(const std::string& source, std::optional<GraphFormat> format) {
  if (source.rfind("named:", 0) == 0) return fixtures::named(source.substr(6));
  return read_graph_file(source, format);
}

inline TreeDecomposition load_decomposition(const std::string& source, const std::string& graph_source,
                                            std::optional<GraphFormat> format) {
  if (source.rfind("named:", 0) == 0) {
    auto d = fixtures::named_decomposition(source.substr(6));
    if (graph_source.empty()) return d;
    return attach_graph(TdFile{d.node_count(), 0, d.graph().order(), d.bags(), d.tree_edges()},
                        load_graph(graph_source, format));
  }
  if (graph_source.empty()) throw precondition_error("--graph is required for a decomposition file");
  return attach_graph(read_td_file(source), load_graph(graph_source, format));
}

inline std::string labels_of(const Graph& g, VertexSet s) {
  std::string out;
  for (Vertex v : s) out += (out.empty() ? "" : " ") + g.label(v);
  return out;
}

inline std::string cycle_labels(const Graph& g, const CycleSeq& c) {
  std::string out;
  for (Vertex v : c.sequence()) out += (out.empty() ? "" : " ") + g.label(v);
  return out;
}

struct Options {
  std::string format;
  bool json = false;
  std::string out_path;

  // shared positional / per-command values
  std::string file;
  std::string graph_source;
  bool all = false;
  std::string family = "random-2connected";
  int n = 10;
  std::optional<int> n_min;
  int k = 2;
  double p = 0.8;
  std::uint64_t seed = 0;
  int count = 100;
  std::string name;
  std::string td_out;
  unsigned threads = 0;
  std::optional<int> target_k;
  std::string action;
};

inline std::optional<GraphFormat> input_format(const Options& o) {
  if (o.format.empty()) return std::nullopt;
  return parse_format(o.format);
}

inline GraphFormat output_format(const Options& o) {
  return o.format.empty() ? GraphFormat::edgelist : parse_format(o.format);
}

// --- subcommands -----------------------------------------------------------

inline int cmd_lct(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.file, input_format(o));
  const auto r = compute_lct(g);
  if (o.json) {
    json j;
    j["n"] = g.order();
    j["L"] = r.L;
    j["lct"] = r.value;
    j["transversal"] = r.transversal.to_vector();
    j["longest_vertex_sets"] = r.longest_vertex_sets.size();
    out << j.dump() << '\n';
  } else {
    out << "lct " << r.value << '\n'
        << "transversal " << labels_of(g, r.transversal) << '\n'
        << "L " << r.L << '\n';
  }
  return kOk;
}

inline int cmd_cycles(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.file, input_format(o));
  const auto cycles = o.all ? enumerate_cycles(g) : enumerate_longest_cycles(g);
  if (o.json) {
    json j;
    j["n"] = g.order();
    j["count"] = cycles.size();
    auto& arr = j["cycles"] = json::array();
    for (const auto& c : cycles) arr.push_back(c.sequence());
    out << j.dump() << '\n';
  } else {
    for (const auto& c : cycles) out << cycle_labels(g, c) << '\n';
  }
  return kOk;
}

inline int cmd_treedec(const Options& o, std::ostream& out) {
  if (o.action == "tw") {
    const Graph g = load_graph(o.file, input_format(o));
    const auto tw = exact_treewidth(g);
    if (o.json) {
      json j;
      j["n"] = g.order();
      j["tw"] = tw.width;
      j["elimination_order"] = tw.elimination_order;
      out << j.dump() << '\n';
    } else {
      out << "tw " << tw.width << '\n';
    }
    if (!o.td_out.empty()) {
      std::ofstream f(o.td_out);
      write_td(f, tw.decomposition);
    }
    return kOk;
  }

  const auto d = load_decomposition(o.file, o.graph_source, input_format(o));
  const auto rep = validate(d);
  if (!rep.valid()) {
    std::string why = !rep.is_tree                ? "not a tree: " + rep.tree_problem
                      : !rep.covers_vertices      ? "vertex " + std::to_string(*rep.missing_vertex) + " in no bag"
                      : !rep.covers_edges         ? "edge " + std::to_string(rep.uncovered_edge->first) + " " +
                                                        std::to_string(rep.uncovered_edge->second) + " in no bag"
                                                  : "bags holding vertex " + std::to_string(*rep.scattered_vertex) +
                                                        " are not connected";
    if (o.json) {
      json j;
      j["valid"] = false;
      j["reason"] = why;
      out << j.dump() << '\n';
    } else {
      out << "invalid: " << why << '\n';
    }
    return kCheckFailed;
  }
  const int w = width(d);
  if (o.action == "check" || o.action == "width") {
    const bool full = is_full(d, w);
    if (o.json) {
      json j;
      j["valid"] = true;
      j["width"] = w;
      if (o.action == "check") j["full"] = full;
      out << j.dump() << '\n';
    } else if (o.action == "width") {
      out << w << '\n';
    } else {
      out << "valid\nwidth " << w << '\n' << (full ? "full" : "not full") << " for k=" << w << '\n';
    }
    return kOk;
  }
  // full: normalize to a full decomposition of width k (default: current width)
  write_td(out, make_full(d, o.target_k.value_or(w)));
  return kOk;
}

inline int cmd_chordal(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.file, input_format(o));
  const auto r = is_chordal(g);
  if (o.action == "check") {
    if (o.json) {
      json j;
      j["chordal"] = r.chordal;
      if (r.chordal) j["elimination_order"] = r.certificate.order;
      else if (r.chordless_cycle) j["chordless_cycle"] = r.chordless_cycle->sequence();
      out << j.dump() << '\n';
    } else if (r.chordal) {
      out << "chordal\nelimination order";
      for (Vertex v : r.certificate.order) out << ' ' << g.label(v);
      out << '\n';
    } else {
      out << "not chordal\nchordless cycle " << cycle_labels(g, *r.chordless_cycle) << '\n';
    }
    return r.chordal ? kOk : kCheckFailed;
  }
  if (!r.chordal) {
    out << "not chordal\n";
    return kCheckFailed;
  }
  if (o.action == "omega") {
    out << omega_chordal(g) << '\n';
    return kOk;
  }
  write_td(out, build_clique_tree(g));
  return kOk;
}

inline int cmd_gen(const Options& o, std::ostream& out) {
  GenSpec spec{parse_family(o.family), o.n, o.k, o.p, o.seed, o.name};
  const auto gen = generate(spec);
  write_graph(out, gen.graph, output_format(o));
  if (!o.td_out.empty()) {
    if (!gen.decomposition) throw precondition_error("family has no decomposition certificate");
    std::ofstream f(o.td_out);
    if (!f) throw parse_error("cannot write " + o.td_out, 0);
    write_td(f, *gen.decomposition);
  }
  return kOk;
}

// One instance of a verify run.
inline CheckReport verify_instance(const Options& o, std::uint64_t seed) {
  const Family family = parse_family(o.family);
  int n = o.n;
  if (o.n_min) {
    Rng pick(mix_seed(seed + 1));
    n = pick.between(*o.n_min, o.n);
  }
  const auto gen = generate(GenSpec{family, n, o.k, o.p, seed, o.name});
  const Graph& g = gen.graph;
  const bool ktree = family == Family::ktree;
  CheckReport r;
  if (o.action == "prop1") {
    r = verify_prop1(g);
  } else if (o.action == "cor1") {
    r = verify_cor1(g);
  } else if (o.action == "thm1") {
    const TreeDecomposition* cert = gen.decomposition ? &*gen.decomposition : nullptr;
    r = verify_thm1(g, o.k, cert, ktree);
  } else if (o.action == "thm2") {
    r = verify_thm2(g, ktree ? std::optional<int>(o.k) : std::nullopt);
  } else if (o.action == "lemma5") {
    if (gen.decomposition && is_full(*gen.decomposition, width(*gen.decomposition))) {
      r = verify_lemma5(g, *gen.decomposition);
    } else {
      const auto tw = exact_treewidth(g);
      r = verify_lemma5(g, make_full(tw.decomposition, tw.width));
    }
  } else if (o.action == "lemma6") {
    r = verify_lemma6(g);
  } else {
    r = verify_conjecture_chordal(g);
  }
  r.seed = seed;
  return r;
}

inline int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.count < 0) throw precondition_error("--count must be non-negative");
  if (o.n_min && *o.n_min > o.n) throw precondition_error("--n-min exceeds --n");
  parse_family(o.family);
  const std::size_t count = static_cast<std::size_t>(o.count);
  std::vector<std::optional<CheckReport>> reports(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        reports[i] = verify_instance(o, instance_seed(o.seed, i));
      } catch (...) {
        errors[i] = std::current_exception();
        next = count;  // stop handing out work
      }
    }
  };
  unsigned threads = o.threads ? o.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(count, 1));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < count; ++i)
    if (errors[i]) {
      err << "instance " << i << " (seed " << instance_seed(o.seed, i) << "): ";
      std::rethrow_exception(errors[i]);
    }

  std::size_t failed = 0;
  for (const auto& r : reports) {
    if (!r->pass) ++failed;
    if (o.json) out << report_line(*r) << '\n';
  }
  if (!o.json)
    out << o.action << ' ' << o.family << ": " << count << " instances, " << count - failed << " pass, " << failed
        << " fail\n";
  if (failed > 0) {
    for (const auto& r : reports)
      if (!r->pass) {
        err << "failing seed " << r->seed << ": " << (r->witness ? r->witness->note : "") << '\n';
        break;
      }
    return kCheckFailed;
  }
  return kOk;
}

inline int cmd_named(const Options& o, std::ostream& out) {
  write_graph(out, fixtures::named(o.name), output_format(o));
  return kOk;
}

}  // namespace detail

/// Runs the tool on `args` (without the program name); returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::Options;
  Options o;
  CLI::App app{"longest cycle transversal tools", "lct"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "graph format: edgelist, graph6, dot")
      ->check(CLI::IsMember({"edgelist", "graph6", "g6", "dot"}));
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_option("--out", o.out_path, "write output to this file");

  auto* lct = app.add_subcommand("lct", "minimum longest cycle transversal");
  lct->add_option("file", o.file, "graph file or named:<fixture>")->required();

  auto* cycles = app.add_subcommand("cycles", "list longest cycles");
  cycles->add_option("file", o.file)->required();
  cycles->add_flag("--all", o.all, "list every cycle");

  auto* treedec = app.add_subcommand("treedec", "tree decomposition tools");
  treedec->add_option("action", o.action)->required()->check(CLI::IsMember({"check", "width", "full", "tw"}));
  treedec->add_option("file", o.file, "decomposition file (graph file for tw)")->required();
  treedec->add_option("--graph", o.graph_source, "graph of the decomposition");
  treedec->add_option("--k", o.target_k, "target width for full");
  treedec->add_option("--td-out", o.td_out, "write the optimal decomposition (tw)");

  auto* chordal = app.add_subcommand("chordal", "chordal graph tools");
  chordal->add_option("action", o.action)->required()->check(CLI::IsMember({"check", "cliquetree", "omega"}));
  chordal->add_option("file", o.file)->required();

  auto* gen = app.add_subcommand("gen", "generate a graph");
  gen->add_option("family", o.family)->required();
  gen->add_option("--n", o.n);
  gen->add_option("--k", o.k);
  gen->add_option("--p", o.p);
  gen->add_option("--seed", o.seed);
  gen->add_option("--name", o.name, "fixture name for the named family");
  gen->add_option("--td-out", o.td_out, "write the construction decomposition here");

  auto* verify = app.add_subcommand("verify", "check a statement on generated instances");
  verify->add_option("check", o.action)
      ->required()
      ->check(CLI::IsMember({"prop1", "cor1", "thm1", "thm2", "lemma5", "lemma6", "conjecture-chordal"}));
  verify->add_option("--family", o.family);
  verify->add_option("--count", o.count);
  verify->add_option("--seed", o.seed);
  verify->add_option("--n", o.n, "instance size (upper end with --n-min)");
  verify->add_option("--n-min", o.n_min, "draw n uniformly from [n-min, n]");
  verify->add_option("--k", o.k);
  verify->add_option("--p", o.p);
  verify->add_option("--name", o.name);
  verify->add_option("--threads", o.threads);

  auto* named = app.add_subcommand("named", "print a fixture graph");
  named->add_option("name", o.name)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "lct: " << e.what() << '\n' << "run 'lct --help' for usage\n";
    return kUsage;
  }

  std::ofstream file_out;
  if (!o.out_path.empty()) {
    file_out.open(o.out_path);
    if (!file_out) {
      err << "lct: cannot write " << o.out_path << '\n';
      return kUsage;
    }
  }
  std::ostream& dest = o.out_path.empty() ? out : file_out;

  try {
    if (lct->parsed()) return detail::cmd_lct(o, dest);
    if (cycles->parsed()) return detail::cmd_cycles(o, dest);
    if (treedec->parsed()) return detail::cmd_treedec(o, dest);
    if (chordal->parsed()) return detail::cmd_chordal(o, dest);
    if (gen->parsed()) return detail::cmd_gen(o, dest);
    if (verify->parsed()) return detail::cmd_verify(o, dest, err);
    if (named->parsed()) return detail::cmd_named(o, dest);
  } catch (const size_limit& e) {
    err << "lct: " << e.what() << '\n';
    return kSizeLimit;
  } catch (const error& e) {
    err << "lct: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace lct::cli
