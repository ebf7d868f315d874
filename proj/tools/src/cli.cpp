#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hunt/bounds.hpp"
#include "hunt/constructions.hpp"
#include "hunt/engine.hpp"
#include "hunt/errors.hpp"
#include "hunt/families.hpp"
#include "hunt/gadgets.hpp"
#include "hunt/graph_io.hpp"
#include "hunt/layered.hpp"
#include "hunt/recognizer.hpp"
#include "hunt/separators.hpp"
#include "hunt/serialize.hpp"
#include "hunt/solver.hpp"
#include "play.hpp"
#include "render.hpp"

namespace hunt::cli {

namespace {

// Raised for problems the user fixes by changing flags or arguments.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "text";
  bool structured() const { return format == "structured"; }
};

void emit(const Common& common, const Json& j, std::ostream& out) {
  if (common.structured()) {
    out << j.dump() << "\n";
  } else {
    render_text(j, out);
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<std::size_t> parse_numbers(const std::string& s, const char* what) {
  std::vector<std::size_t> out;
  if (s.empty()) return out;
  for (const auto& tok : split(s, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) {
      throw UsageError(std::string("bad ") + what + " entry '" + tok + "'");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

VertexSet parse_start(const std::optional<std::string>& text, std::size_t n) {
  if (!text) return VertexSet::full(n);
  VertexSet s(n);
  for (std::size_t v : parse_numbers(*text, "--start")) {
    if (v >= n) throw UsageError("--start vertex " + std::to_string(v) + " out of range");
    s.insert(static_cast<Vertex>(v));
  }
  return s;
}

Json set_json(const VertexSet& s) { return s.to_vector(); }

Json strategy_json(const Strategy& s) { return Json::parse(write_strategy(s)); }

Json graph_json(const Graph& g) {
  Json j;
  j["n"] = g.order();
  j["m"] = g.edge_count();
  j["edges"] = Json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back({e.u, e.v});
  return j;
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::win: return "win";
    case Outcome::no_win: return "no_win";
    case Outcome::unknown: return "unknown";
  }
  return "unknown";
}

Json bracket_json(const Bracket& b) {
  if (b.exact()) return b.lower;
  return Json{{"lower", b.lower}, {"upper", b.upper}, {"exact", false}};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

// --- solve -----------------------------------------------------------------

struct SolveArgs {
  std::string graph;
  std::optional<std::size_t> k;
  std::optional<std::size_t> limit;
  std::optional<std::string> start;
  bool single_thread = false;
  unsigned threads = 0;
  std::optional<std::size_t> max_states;
  std::size_t timeout_ms = 0;
  bool timing = false;
};

int cmd_solve(const Common& common, const SolveArgs& a, std::ostream& out) {
  const Graph g = read_graph_file(a.graph);
  SearchLimits limits = SearchLimits::from_environment();
  if (a.max_states) limits.max_states = *a.max_states;
  limits.max_time = std::chrono::milliseconds(a.timeout_ms);
  limits.threads = a.single_thread ? 1U
                   : a.threads    ? a.threads
                                  : std::max(1U, std::thread::hardware_concurrency());

  SolveQuery q;
  if (a.start) q.start = parse_start(a.start, g.order());
  q.budget = a.k;
  q.limit = a.limit;
  const SolveResult r = a.k ? solve_k(g, q, limits) : hunting_number(g, q, limits);

  Json j;
  Json query;
  query["n"] = g.order();
  query["m"] = g.edge_count();
  query["start"] = q.start ? set_json(*q.start) : Json("all");
  query["k"] = a.k ? Json(*a.k) : Json(nullptr);
  query["limit"] = a.limit ? Json(*a.limit) : Json(nullptr);
  j["query"] = query;
  j["outcome"] = outcome_name(r.outcome);
  if (a.k) {
    j["verdict"] = r.outcome == Outcome::win      ? "win"
                   : r.outcome == Outcome::no_win ? "no_win"
                                                  : "unknown";
  } else {
    j["value"] = r.outcome == Outcome::win ? Json(r.value) : Json(nullptr);
    j["lower"] = r.lower;
    j["upper"] = r.upper;
  }
  j["strategy"] = r.strategy ? strategy_json(*r.strategy) : Json(nullptr);
  j["states_explored"] = r.states_explored;
  if (a.timing) j["elapsed_ms"] = r.elapsed.count();
  emit(common, j, out);
  return r.outcome == Outcome::unknown ? kUnknown : kOk;
}

// --- verify ----------------------------------------------------------------

int cmd_verify(const Common& common, const std::string& graph_path,
               const std::string& strategy_path, const std::optional<std::string>& start,
               std::ostream& out) {
  const Graph g = read_graph_file(graph_path);
  const Strategy s = read_strategy_file(strategy_path);
  if (s.universe() != g.order()) {
    throw UsageError("strategy is for " + std::to_string(s.universe()) +
                     " vertices, graph has " + std::to_string(g.order()));
  }
  if (s.empty()) throw UsageError("strategy has no shots");
  const auto v = verify_strategy(g, parse_start(start, g.order()), s);
  Json j;
  const TerritoryTrace* trace = nullptr;
  if (const auto* win = std::get_if<Win>(&v)) {
    j["result"] = "win";
    j["rounds"] = win->rounds();
    trace = &win->trace;
  } else {
    const auto& lose = std::get<Lose>(v);
    j["result"] = "lose";
    j["escape_walk"] = lose.escape.walk;
    trace = &lose.trace;
  }
  j["hunters"] = s.max_shot_size();
  j["trace"] = Json::array();
  for (const auto& r : trace->territories) j["trace"].push_back(set_json(r));
  emit(common, j, out);
  return kOk;
}

// --- recognize -------------------------------------------------------------

int cmd_recognize(const Common& common, const std::string& graph_path, const std::string& method,
                  std::ostream& out) {
  const Graph g = read_graph_file(graph_path);
  const auto m = method == "direct" ? RecognizerMethod::direct : RecognizerMethod::via_bg;
  const auto verdict = recognize(g, m);
  Json j;
  j["one_hunterwin"] = verdict.one_hunterwin;
  j["method"] = method;
  if (verdict.witness) {
    const Witness& w = *verdict.witness;
    Json wj;
    wj["kind"] = std::string(obstruction_name(w.kind));
    wj["host"] = m == RecognizerMethod::direct ? "G" : "B_G";
    wj["embedding"] = w.embedding;
    wj["edges"] = Json::array();
    for (const Edge& e : w.pattern.edges()) {
      Vertex a = w.embedding[e.u];
      Vertex b = w.embedding[e.v];
      wj["edges"].push_back({std::min(a, b), std::max(a, b)});
    }
    j["witness"] = wj;
  } else {
    j["witness"] = nullptr;
  }
  emit(common, j, out);
  return kOk;
}

// --- bounds ----------------------------------------------------------------

int cmd_bounds(const Common& common, const std::string& graph_path, std::optional<std::size_t> l,
               std::ostream& out) {
  const Graph g = read_graph_file(graph_path);
  const BoundsReport r = bounds_chain(g);
  Json j;
  j["n"] = r.order;
  j["bipartite"] = r.bipartite;
  j["matching"] = bracket_json(r.matching);
  j["vertex_cover"] = bracket_json(r.vertex_cover);
  j["double_cover_vertex_cover"] = r.double_cover_vc;
  j["degeneracy"] = r.degeneracy;
  j["h2"] = bracket_json(r.h2);
  Json chain;
  chain["ceil_vc_half"] = (r.vertex_cover.lower + 1) / 2;
  chain["ceil_double_cover_vc_half"] = (r.double_cover_vc + 1) / 2;
  chain["two_matching"] = 2 * r.matching.lower;
  const auto holds = chain_holds(r);
  chain["holds"] = holds ? Json(*holds) : Json(nullptr);
  if (g.loop_count() > 0) chain["note"] = "matching bounds assume a loopless graph";
  j["chain"] = chain;
  if (l) {
    const LayeredCut cut = layered_min_cut(g, *l);
    Json lj;
    lj["l"] = *l;
    lj["ca"] = cut.value;
    lj["shots"] = Json::array();
    for (const auto& s : cut.shots) lj["shots"].push_back({s.vertex, s.round});
    j["layered"] = lj;
  }
  emit(common, j, out);
  return kOk;
}

// --- separators ------------------------------------------------------------

int cmd_separators(const Common& common, const std::string& graph_path,
                   const std::string& problem, std::ostream& out) {
  const Graph g = read_graph_file(graph_path);
  const SeparatorPartition p = problem == "evb" ? evb_oracle(g) : bss_oracle(g);
  Json j;
  j["problem"] = problem;
  j["objective"] = p.objective;
  j["A"] = set_json(p.a);
  j["B"] = set_json(p.b);
  j["C"] = set_json(p.c);
  if (p.d) j["D"] = set_json(*p.d);
  emit(common, j, out);
  return kOk;
}

// --- generate --------------------------------------------------------------

int cmd_generate(const Common& common, const std::string& family,
                 const std::vector<double>& params, const std::string& output,
                 std::ostream& out) {
  const Graph g = generate_family(family, params);
  if (!output.empty()) {
    write_graph_file(g, output);
    Json j{{"family", family}, {"n", g.order()}, {"m", g.edge_count()}, {"written", output}};
    emit(common, j, out);
  } else if (common.structured()) {
    out << graph_json(g).dump() << "\n";
  } else {
    out << write_graph(g);
  }
  return kOk;
}

// --- reduce ----------------------------------------------------------------

struct ReduceArgs {
  std::string gadget;
  std::vector<std::string> inputs;
  std::string numbers;
  std::string partition;
  std::optional<std::size_t> k;
  std::optional<std::size_t> p;
  std::optional<std::size_t> m;
  std::optional<std::size_t> a;
  std::optional<std::string> start;
  std::string inner;
  std::string output;
};

struct Reduction {
  Graph graph;
  Layout layout;
  std::optional<VertexSet> start;
  std::optional<Strategy> strategy;
};

const std::string& input_at(const ReduceArgs& a, std::size_t i) {
  if (a.inputs.size() <= i) {
    throw UsageError("gadget '" + a.gadget + "' needs " + std::to_string(i + 1) +
                     " input graph(s)");
  }
  return a.inputs[i];
}

std::size_t need(const std::optional<std::size_t>& v, const char* flag, const std::string& gadget) {
  if (!v) throw UsageError("gadget '" + gadget + "' needs " + flag);
  return *v;
}

Layout two_blocks(std::size_t n1, std::size_t n2, const char* a, const char* b) {
  Layout l;
  l.add(a, 0, static_cast<Vertex>(n1));
  l.add(b, static_cast<Vertex>(n1), static_cast<Vertex>(n1 + n2));
  return l;
}

Reduction build_reduction(const ReduceArgs& a) {
  Reduction r;
  const std::string& kind = a.gadget;
  if (kind == "3partition") {
    auto gadget = gadget_3partition(parse_numbers(a.numbers, "--numbers"));
    if (!a.partition.empty()) {
      std::vector<std::vector<std::size_t>> groups;
      for (const auto& grp : split(a.partition, ';')) groups.push_back(parse_numbers(grp, "--partition"));
      r.strategy = proof_strategy_3partition(gadget, groups);
    }
    r.graph = std::move(gadget.graph);
    r.layout = std::move(gadget.layout);
    r.start = std::move(gadget.start);
  } else if (kind == "hs") {
    const Graph g = read_graph_file(input_at(a, 0));
    auto gadget = gadget_hs(g, parse_start(a.start, g.order()), need(a.k, "--k", kind));
    if (!a.inner.empty()) r.strategy = proof_strategy_hs(gadget, read_strategy_file(a.inner));
    r.graph = std::move(gadget.graph);
    r.layout = std::move(gadget.layout);
  } else if (kind == "2to3") {
    r.graph = gadget_2to3(read_graph_file(input_at(a, 0)), need(a.k, "--k", kind), &r.layout);
  } else if (kind == "lplus2") {
    r.graph = gadget_lplus2(read_graph_file(input_at(a, 0)), need(a.k, "--k", kind), &r.layout);
  } else if (kind == "tensor-k2") {
    const Graph g = read_graph_file(input_at(a, 0));
    r.graph = tensor_k2(g);
    r.layout = two_blocks(g.order(), g.order(), "V", "V'");
  } else if (kind == "loop-clique") {
    const Graph g = read_graph_file(input_at(a, 0));
    const std::size_t p = need(a.p, "--p", kind);
    r.graph = tensor_loop_clique(g, p);
    for (std::size_t i = 0; i < p; ++i) {
      r.layout.add("copy" + std::to_string(i), static_cast<Vertex>(i * g.order()),
                   static_cast<Vertex>((i + 1) * g.order()));
    }
  } else if (kind == "join") {
    const Graph g = read_graph_file(input_at(a, 0));
    const Graph h = read_graph_file(input_at(a, 1));
    r.graph = join(g, h);
    r.layout = two_blocks(g.order(), h.order(), "G", "H");
  } else if (kind == "blowup") {
    const Graph g = read_graph_file(input_at(a, 0));
    const std::size_t m = need(a.m, "--m", kind);
    r.graph = clique_blowup(g, m);
    for (Vertex v = 0; v < g.order(); ++v) {
      r.layout.add("H" + std::to_string(v), static_cast<Vertex>(v * m),
                   static_cast<Vertex>((v + 1) * m));
    }
  } else if (kind == "clique-tail") {
    const std::size_t av = need(a.a, "--a", kind);
    const std::size_t p = need(a.p, "--p", kind);
    r.graph = clique_with_tail(av, p);
    r.layout = two_blocks(av + 1, p - 1, "K", "P");
  } else {
    throw UsageError("unknown gadget '" + kind +
                     "' (3partition, hs, 2to3, lplus2, tensor-k2, loop-clique, join, blowup, "
                     "clique-tail)");
  }
  return r;
}

int cmd_reduce(const Common& common, const ReduceArgs& a, std::ostream& out) {
  const Reduction r = build_reduction(a);
  const std::string layout_text = write_layout(r.graph.order(), r.layout, r.start);
  if (!a.output.empty()) {
    Json written = Json::array();
    write_graph_file(r.graph, a.output + ".txt");
    written.push_back(a.output + ".txt");
    write_file(a.output + ".layout.json", layout_text);
    written.push_back(a.output + ".layout.json");
    if (r.strategy) {
      write_file(a.output + ".strategy.json", write_strategy(*r.strategy));
      written.push_back(a.output + ".strategy.json");
    }
    Json j{{"gadget", a.gadget}, {"n", r.graph.order()}, {"m", r.graph.edge_count()},
           {"written", written}};
    emit(common, j, out);
  } else if (common.structured()) {
    Json j;
    j["gadget"] = a.gadget;
    j["graph"] = graph_json(r.graph);
    j["layout"] = Json::parse(layout_text);
    j["strategy"] = r.strategy ? strategy_json(*r.strategy) : Json(nullptr);
    out << j.dump() << "\n";
  } else {
    // Sidecars travel as comment lines so the output stays a valid graph file.
    out << "# gadget " << a.gadget << "\n";
    out << "# layout " << Json::parse(layout_text).dump() << "\n";
    if (r.strategy) out << "# strategy " << write_strategy(*r.strategy);
    out << write_graph(r.graph);
  }
  return kOk;
}

// --- play ------------------------------------------------------------------

int cmd_play(const std::string& graph_path, std::size_t k, const std::optional<std::string>& start,
             bool blind, std::istream& in, std::ostream& out) {
  const Graph g = read_graph_file(graph_path);
  PlaySession session(g, parse_start(start, g.order()), k);
  play_loop(session, in, out, PlayOptions{blind});
  return kOk;
}

void report_error(std::ostream& err, const char* kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Hunters and rabbit: exact solver, bounds, recognizer and gadget generator"};
  app.name("hunt");
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Hunting number, or a fixed-budget verdict");
  solve->add_option("graph", solve_args.graph, "Edge-list file")->required();
  solve->add_option("--k", solve_args.k, "Decide this hunter budget only");
  solve->add_option("--limit", solve_args.limit, "Capture deadline l")->check(CLI::PositiveNumber);
  solve->add_option("--start", solve_args.start, "Rabbit start set, comma separated");
  solve->add_flag("--single-thread", solve_args.single_thread, "One search thread");
  solve->add_option("--threads", solve_args.threads, "Search threads (default: all cores)");
  solve->add_option("--max-states", solve_args.max_states, "Territory state budget");
  solve->add_option("--timeout-ms", solve_args.timeout_ms, "Wall-clock budget, 0 for none");
  solve->add_flag("--timing", solve_args.timing, "Include elapsed time in the output");

  std::string verify_graph, verify_strategy_path;
  std::optional<std::string> verify_start;
  auto* verify = app.add_subcommand("verify", "Check a strategy: win trace or escape walk");
  verify->add_option("graph", verify_graph, "Edge-list file")->required();
  verify->add_option("strategy", verify_strategy_path, "Strategy JSON file")->required();
  verify->add_option("--start", verify_start, "Rabbit start set, comma separated");

  std::string recog_graph, recog_method = "direct";
  auto* recog = app.add_subcommand("recognize", "Decide whether one hunter suffices");
  recog->add_option("graph", recog_graph, "Edge-list file")->required();
  recog->add_option("--method", recog_method, "direct or via-bg")
      ->check(CLI::IsMember({"direct", "via-bg"}));

  std::string bounds_graph;
  std::optional<std::size_t> bounds_l;
  auto* bounds = app.add_subcommand("bounds", "Matching / vertex cover bounds on h(G,2)");
  bounds->add_option("graph", bounds_graph, "Edge-list file")->required();
  bounds->add_option("--l", bounds_l, "Also compute the layered cut ca(G,l)")
      ->check(CLI::PositiveNumber);

  std::string gen_family, gen_output;
  std::vector<double> gen_params;
  auto* gen = app.add_subcommand("generate", "Write a named graph family");
  gen->add_option("family", gen_family, "path, cycle, complete, complete_with_loops, grid, "
                                        "hypercube, spider, H1..H4, random")
      ->required();
  gen->add_option("params", gen_params, "Family parameters");
  gen->add_option("-o,--output", gen_output, "Write to this file");

  ReduceArgs reduce_args;
  auto* reduce = app.add_subcommand("reduce", "Build a transformation or hardness gadget");
  reduce->add_option("gadget", reduce_args.gadget,
                     "3partition, hs, 2to3, lplus2, tensor-k2, loop-clique, join, blowup, "
                     "clique-tail")
      ->required();
  reduce->add_option("inputs", reduce_args.inputs, "Input graph file(s)");
  reduce->add_option("--numbers", reduce_args.numbers, "3-partition numbers a1,a2,...");
  reduce->add_option("--partition", reduce_args.partition,
                     "Groups of 0-based indices, e.g. 0,1,4;2,3,5");
  reduce->add_option("--k", reduce_args.k, "Gadget parameter k");
  reduce->add_option("--p", reduce_args.p, "Copies (loop-clique) or tail length (clique-tail)");
  reduce->add_option("--m", reduce_args.m, "Blowup clique size");
  reduce->add_option("--a", reduce_args.a, "Clique parameter of clique-tail");
  reduce->add_option("--start", reduce_args.start, "Start set S for hs");
  reduce->add_option("--inner", reduce_args.inner, "Winning h_S strategy to wrap (hs)");
  reduce->add_option("-o,--output", reduce_args.output, "Output prefix for graph and sidecars");

  std::string sep_graph, sep_problem;
  auto* sep = app.add_subcommand("separators", "Exhaustive EVB / BSS separator");
  sep->add_option("graph", sep_graph, "Edge-list file")->required();
  sep->add_option("--problem", sep_problem, "evb or bss")
      ->required()
      ->check(CLI::IsMember({"evb", "bss"}));

  std::string play_graph;
  std::size_t play_k = 0;
  std::optional<std::string> play_start;
  bool play_blind = false;
  auto* play = app.add_subcommand("play", "Hunt the rabbit interactively");
  play->add_option("graph", play_graph, "Edge-list file")->required();
  play->add_option("--k", play_k, "Hunters per round")->required();
  play->add_option("--start", play_start, "Rabbit start set, comma separated");
  play->add_flag("--blind", play_blind, "Hide the territory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage", e.what());
    return kUsage;
  }

  try {
    if (*solve) return cmd_solve(common, solve_args, out);
    if (*verify) return cmd_verify(common, verify_graph, verify_strategy_path, verify_start, out);
    if (*recog) return cmd_recognize(common, recog_graph, recog_method, out);
    if (*bounds) return cmd_bounds(common, bounds_graph, bounds_l, out);
    if (*gen) return cmd_generate(common, gen_family, gen_params, gen_output, out);
    if (*reduce) return cmd_reduce(common, reduce_args, out);
    if (*sep) return cmd_separators(common, sep_graph, sep_problem, out);
    if (*play) return cmd_play(play_graph, play_k, play_start, play_blind, in, out);
  } catch (const ParseError& e) {
    report_error(err, "parse", e.what());
    return kParse;
  } catch (const CapExceeded& e) {
    report_error(err, "resource", e.what());
    return kUnknown;
  } catch (const UsageError& e) {
    report_error(err, "usage", e.what());
    return kUsage;
  } catch (const std::invalid_argument& e) {
    report_error(err, "usage", e.what());
    return kUsage;
  } catch (const std::out_of_range& e) {
    report_error(err, "usage", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    report_error(err, "input", e.what());
    return kParse;
  }
  return kUsage;
}

}  // namespace hunt::cli
