#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ecg/cograph.hpp"
#include "ecg/edge_clique.hpp"
#include "ecg/errors.hpp"
#include "ecg/families.hpp"
#include "ecg/io.hpp"
#include "ecg/oracle.hpp"
#include "ecg/planar.hpp"
#include "ecg/random.hpp"
#include "ecg/reductions.hpp"
#include "ecg/tree_decomposition.hpp"
#include "ecg/treewidth_dp.hpp"
#include "json.hpp"

namespace ecg::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchema = "ecg.run-report/1";

struct Options {
  std::string in, out, format, method, family, suite, td_file;
  int k = 4;
  int n = 0;
  int m = 0;
  double p = 0.5;
  std::optional<std::uint64_t> seed;
  long budget_nodes = SolverBudget{}.max_nodes;
  double budget_seconds = SolverBudget{}.time_limit;
  int count = 100;
  bool json = false;
  bool timing = false;
};

// Thrown for command-line mistakes that CLI11 cannot see.
class UsageError : public Error {
 public:
  using Error::Error;
};

SolverBudget budget_of(const Options& o) {
  SolverBudget b;
  b.max_nodes = o.budget_nodes;
  b.time_limit = o.budget_seconds;
  b.validate();
  return b;
}

Json edges_json(const std::vector<EdgeRef>& edges) {
  Json a = Json::array();
  for (const auto& e : edges) a.push_back({e.u, e.v});
  return a;
}

Json report(const std::string& command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

struct Input {
  std::string text;
  io::Format format;
};

Input read_input(const Options& o) {
  if (o.in.empty()) throw UsageError("--in is required");
  Input in{io::read_file(o.in), io::Format::graph6};
  in.format = io::detect_format(in.text);
  return in;
}

Json input_json(const Options& o, const Input& in, const Graph& g) {
  static const char* names[] = {"g6", "edges", "planar"};
  return {{"path", o.in},
          {"format", names[static_cast<int>(in.format)]},
          {"n", g.vertex_count()},
          {"m", g.edge_count()}};
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw InvalidArgument("cannot write '" + o.out + "'");
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string graph_text(const Graph& g, const std::string& format) {
  switch (io::parse_format(format)) {
    case io::Format::graph6: return io::to_graph6(g) + "\n";
    case io::Format::edges: return io::to_edge_list(g);
    case io::Format::planar: throw UsageError("planar output needs an embedded graph");
  }
  return {};
}

int cmd_transform(const Options& o, std::ostream& out) {
  const Input in = read_input(o);
  const Graph g = io::parse_graph(in.text, in.format);
  const EdgeCliqueGraph ke = edge_clique_graph(g);
  if (!o.json) {
    emit(o, out, graph_text(ke.graph, o.format.empty() ? "edges" : o.format));
    return 0;
  }
  Json j = report("transform");
  j["input"] = input_json(o, in, g);
  j["result"] = {{"n", ke.graph.vertex_count()},
                 {"m", ke.graph.edge_count()},
                 {"graph6", io::to_graph6(ke.graph)}};
  j["edge_index"] = edges_json(ke.edges);
  emit(o, out, dump(j));
  return 0;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const Input in = read_input(o);
  const auto method = o.method;
  Json j = report("solve");
  j["method"] = method;
  Graph g;
  std::optional<PlanarEmbedding> pe;
  if (in.format == io::Format::planar) {
    pe = io::parse_planar(in.text);
    g = pe->graph();
  } else {
    g = io::parse_graph(in.text, in.format);
  }
  j["input"] = input_json(o, in, g);
  auto need_embedding = [&] {
    if (!pe) throw UsageError("method '" + method + "' needs an embedded-planar input");
    return *pe;
  };

  long size = 0;
  std::optional<std::vector<EdgeRef>> witness;
  Json details = Json::object();
  if (method == "oracle") {
    const auto r = alpha_prime_oracle(g, budget_of(o));
    size = r.size;
    witness = r.edges;
  } else if (method == "cograph") {
    Cotree t = build_cotree(g);
    const auto r = alpha_prime_cograph(t);
    size = r.value;
    witness = r.witness;
    details["weight_set"] = r.weight_set;
    Json d = Json::object();
    for (int x : r.weight_set) d[std::to_string(x)] = r.d_prime[x];
    details["d_prime"] = d;
  } else if (method == "baker") {
    const auto r = baker_alpha_prime(need_embedding(), o.k);
    size = r.size;
    witness = r.witness;
    details["k"] = o.k;
    details["shift"] = r.shift;
    details["shift_sizes"] = r.shift_sizes;
    details["guarantee"] = "at least (1 - 2/k) of the optimum";
  } else if (method == "matching") {
    const auto r = alpha_prime_planar_matching(need_embedding());
    size = r.size;
    witness = r.witness;
  } else if (method == "treewidth") {
    TreeDecomposition td;
    std::string source;
    if (!o.td_file.empty()) {
      td = io::parse_tree_decomposition(io::read_file(o.td_file));
      source = "file";
    } else {
      td = heuristic_decomposition(g);
      source = "min-fill";
      if (pe) {
        TreeDecomposition layered = layered_planar_decomposition(*pe);
        if (layered.width() < td.width()) {
          td = std::move(layered);
          source = "planar-layers";
        }
      }
    }
    const auto ntd = make_nice(g, td);
    const auto r = treewidth_dp(g, ntd);
    size = r.size;
    witness = r.witness;
    details["decomposition"] = source;
    details["width"] = ntd.width();
  } else if (method == "trivially-perfect") {
    size = alpha_prime_trivially_perfect(g);
  } else {
    throw UsageError("unknown method '" + method +
                     "' (oracle, cograph, baker, treewidth, matching, trivially-perfect)");
  }

  j["result"] = {{"size", size}};
  bool ok = true;
  Json assertions = Json::object();
  if (witness) {
    j["witness"] = edges_json(*witness);
    const bool independent = is_independent_edge_set(g, *witness);
    const bool sized = static_cast<long>(witness->size()) == size;
    assertions["witness_independent"] = independent;
    assertions["witness_size_matches"] = sized;
    ok = independent && sized;
  }
  j["assertions"] = assertions;
  if (!details.empty()) j["details"] = details;
  emit(o, out, dump(j));
  return ok ? 0 : 1;
}

bool randomized(const std::string& family) {
  return family == "tp" || family == "odd-wheel-free" || family == "cograph" ||
         family == "random" || family == "triangulation" || family == "triangulation-4c" ||
         family == "chordal";
}

int cmd_gen(const Options& o, std::ostream& out) {
  const auto& f = o.family;
  if (randomized(f) && !o.seed) throw UsageError("family '" + f + "' needs --seed");
  const std::uint64_t seed = o.seed.value_or(0);
  auto need_n = [&](int lo) {
    if (o.n < lo) throw UsageError("family '" + f + "' needs --n >= " + std::to_string(lo));
    return o.n;
  };
  std::optional<PlanarEmbedding> pe;
  Graph g;
  if (f == "cp") {
    g = cocktail_party(need_n(1));
  } else if (f == "tp") {
    g = random_trivially_perfect(need_n(1), seed);
  } else if (f == "multipartite") {
    if (o.m < 1) throw UsageError("family 'multipartite' needs --m >= 1 parts");
    g = complete_multipartite(need_n(1), o.m);
  } else if (f == "dh-counterexample") {
    g = dh_counterexample();
  } else if (f == "odd-wheel-free") {
    g = odd_wheel_free_random(need_n(1), o.p, seed);
  } else if (f == "cograph") {
    g = random_cograph(need_n(1), seed);
  } else if (f == "chordal") {
    g = random_chordal(need_n(1), seed);
  } else if (f == "random") {
    g = random_graph(need_n(0), o.p, seed);
  } else if (f == "grid") {
    if (o.m < 1) throw UsageError("family 'grid' needs --n rows and --m columns");
    pe = grid_embedding(need_n(1), o.m);
  } else if (f == "cycle") {
    pe = cycle_embedding(need_n(3));
  } else if (f == "wheel") {
    pe = wheel_embedding(need_n(3));
  } else if (f == "octahedron") {
    pe = octahedron_embedding();
  } else if (f == "k4") {
    pe = k4_embedding();
  } else if (f == "triangulation") {
    pe = random_triangulation(need_n(3), seed, o.m);
  } else if (f == "triangulation-4c") {
    pe = random_4connected_triangulation(need_n(6), seed);
  } else {
    throw UsageError("unknown family '" + f + "'");
  }
  if (pe) g = pe->graph();

  const std::string format = o.format.empty() ? (pe ? "planar" : "g6") : o.format;
  if (o.json) {
    Json j = report("gen");
    j["family"] = f;
    if (o.seed) j["seed"] = *o.seed;
    j["result"] = {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"graph6", io::to_graph6(g)}};
    if (pe) j["planar"] = io::to_planar(*pe);
    emit(o, out, dump(j));
  } else if (io::parse_format(format) == io::Format::planar) {
    if (!pe) throw UsageError("family '" + f + "' has no embedding; use --format g6 or edges");
    emit(o, out, io::to_planar(*pe));
  } else {
    emit(o, out, graph_text(g, format));
  }
  return 0;
}

int cmd_reduce_sat(const Options& o, std::ostream& out) {
  if (o.in.empty()) throw UsageError("--in is required");
  const CnfFormula f = parse_dimacs(io::read_file(o.in));
  const ReductionOutput r = sat_reduction(f);
  Json j = report("reduce sat");
  j["input"] = {{"path", o.in}, {"variables", f.num_vars}, {"clauses", f.clauses.size()}};
  j["threshold"] = r.threshold;
  j["odd_wheel_free"] = !check_no_odd_wheel(r.g).has_value();
  j["g"] = {{"n", r.g.vertex_count()},
            {"m", r.g.edge_count()},
            {"graph6", io::to_graph6(r.g)},
            {"labels", r.g.labels()}};
  j["k_graph"] = {{"n", r.k_graph.vertex_count()},
                  {"m", r.k_graph.edge_count()},
                  {"graph6", io::to_graph6(r.k_graph)},
                  {"edge_of_vertex", edges_json(r.k_edges)}};
  Json trace = Json::object();
  for (const auto& [name, ids] : r.trace) trace[name] = ids;
  j["trace"] = trace;
  emit(o, out, dump(j));
  return 0;
}

int cmd_reduce_lemma1(const Options& o, std::ostream& out) {
  const Input in = read_input(o);
  const Graph g = io::parse_graph(in.text, in.format);
  const Graph h = lemma1_reduction(g);
  if (!o.json) {
    emit(o, out, graph_text(h, o.format.empty() ? "g6" : o.format));
    return 0;
  }
  Json j = report("reduce lemma1");
  j["input"] = input_json(o, in, g);
  j["result"] = {{"n", h.vertex_count()},
                 {"m", h.edge_count()},
                 {"graph6", io::to_graph6(h)},
                 {"expected_alpha_prime", "2m + alpha(g)"}};
  emit(o, out, dump(j));
  return 0;
}

std::optional<Graph> optional_input(const Options& o, Json& j) {
  if (o.in.empty()) return std::nullopt;
  const Input in = read_input(o);
  Graph g = io::parse_graph(in.text, in.format);
  j["input"] = input_json(o, in, g);
  return g;
}

int cmd_verify(const Options& o, std::ostream& out) {
  Json j = report("verify");
  j["suite"] = o.suite;
  const SolverBudget budget = budget_of(o);
  const auto given = optional_input(o, j);
  const std::uint64_t seed = o.seed.value_or(1);
  bool pass = true;
  Json details = Json::object();

  // Runs `check` on the input graph, or on `count` random graphs from seed.
  auto over_graphs = [&](int max_n, const std::function<bool(const Graph&, Json&)>& check) {
    if (given) return check(*given, details);
    Rng rng(seed);
    int failures = 0;
    Json first_failure;
    for (int i = 0; i < o.count; ++i) {
      const int n = rng.between(1, max_n);
      const Graph g = random_graph(n, 0.2 + 0.6 * static_cast<double>(rng.below(1000)) / 999.0, rng.next());
      Json d = Json::object();
      if (!check(g, d)) {
        if (failures++ == 0) first_failure = {{"graph6", io::to_graph6(g)}, {"details", d}};
      }
    }
    details["graphs"] = o.count;
    details["failures"] = failures;
    if (failures) details["first_failure"] = first_failure;
    return failures == 0;
  };

  if (o.suite == "omega-identity") {
    pass = over_graphs(8, [&](const Graph& g, Json& d) {
      const int w = omega(g);
      const int wk = omega(edge_clique_graph(g).graph, 4096);
      d["omega"] = w;
      d["omega_ke"] = wk;
      return w < 2 || wk == w * (w - 1) / 2;
    });
  } else if (o.suite == "eq0-lowerbound") {
    pass = over_graphs(8, [&](const Graph& g, Json& d) {
      const long rhs = rhs_equation0(g, budget).value;
      const long ap = alpha_prime_oracle(g, budget).size;
      d["rhs_equation0"] = rhs;
      d["alpha_prime"] = ap;
      d["margin"] = ap - rhs;
      return rhs <= ap;
    });
  } else if (o.suite == "odd-wheel") {
    if (!given) throw UsageError("suite 'odd-wheel' needs --in");
    const auto w = check_no_odd_wheel(*given);
    pass = !w.has_value();
    if (w) details["odd_wheel"] = {{"hub", w->hub}, {"cycle", w->cycle}};
  } else if (o.suite == "gyarfas") {
    if (!given) throw UsageError("suite 'gyarfas' needs --in");
    const Graph& g = *given;
    bool applies = true;
    for (int v = 0; v < g.vertex_count() && applies; ++v) {
      if (g.degree(v) == 0) applies = false;
      for (int w : g.neighbors(v)) {
        Bitset a = g.row(v), b = g.row(w);
        a.set(v);
        b.set(w);
        if (a == b) applies = false;
      }
    }
    const int theta = theta_e_exact(g, budget);
    const double bound = gyarfas_bound(std::max(1, g.vertex_count()));
    details["theta_e"] = theta;
    details["bound"] = bound;
    details["precondition_met"] = applies;
    pass = !applies || theta >= bound - 1e-9;
  } else {
    throw UsageError("unknown suite '" + o.suite + "' (omega-identity, eq0-lowerbound, odd-wheel, gyarfas)");
  }
  j["pass"] = pass;
  j["details"] = details;
  emit(o, out, dump(j));
  return pass ? 0 : 1;
}

Json error_json(const std::string& command, const std::exception& e) {
  Json j = report(command);
  Json err;
  err["message"] = e.what();
  if (const auto* p = dynamic_cast<const NotCograph*>(&e)) {
    err["type"] = "NotCograph";
    err["induced_p4"] = p->witness();
  } else if (const auto* p = dynamic_cast<const NotTriviallyPerfect*>(&e)) {
    err["type"] = "NotTriviallyPerfect";
    err[p->is_cycle() ? "induced_c4" : "induced_p4"] = p->witness();
  } else if (const auto* p = dynamic_cast<const TriangleSeparatorPresent*>(&e)) {
    err["type"] = "TriangleSeparatorPresent";
    err["triangle"] = p->witness();
  } else if (dynamic_cast<const Disconnected*>(&e)) {
    err["type"] = "Disconnected";
  } else if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
    err["type"] = "ParseError";
    err["kind"] = to_string(p->kind());
    if (p->line()) err["line"] = p->line();
  } else if (dynamic_cast<const BudgetExceeded*>(&e)) {
    err["type"] = "BudgetExceeded";
  } else if (dynamic_cast<const InvalidEmbedding*>(&e)) {
    err["type"] = "InvalidEmbedding";
  } else if (dynamic_cast<const InvalidDecomposition*>(&e)) {
    err["type"] = "InvalidDecomposition";
  } else if (dynamic_cast<const UsageError*>(&e)) {
    err["type"] = "UsageError";
  } else if (dynamic_cast<const InternalError*>(&e)) {
    err["type"] = "InternalError";
  } else {
    err["type"] = "InvalidArgument";
  }
  j["error"] = err;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Independent sets of edges: alpha'(G) = alpha(K_e(G))", "ecg"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--in", o.in, "Input file");
    sub->add_option("--out", o.out, "Output file (default stdout)");
    sub->add_option("--format", o.format, "Output format: g6, edges, planar");
    sub->add_flag("--json", o.json, "JSON report instead of a graph");
    sub->add_flag("--timing", o.timing, "Add wall time to the report");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget-nodes", o.budget_nodes, "Search-node budget for exact solvers");
    sub->add_option("--budget-seconds", o.budget_seconds, "Time budget for exact solvers");
  };

  auto* transform = app.add_subcommand("transform", "Emit K_e(G) with its edge index");
  add_common(transform);

  auto* solve = app.add_subcommand("solve", "Compute alpha'(G)");
  add_common(solve);
  add_budget(solve);
  solve->add_option("--method", o.method, "oracle, cograph, baker, treewidth, matching, trivially-perfect")
      ->required();
  solve->add_option("--k", o.k, "Baker parameter (>= 3)");
  solve->add_option("--td", o.td_file, "Tree decomposition file for --method treewidth");

  auto* gen = app.add_subcommand("gen", "Generate a graph family");
  add_common(gen);
  gen->add_option("--family", o.family,
                  "cp, tp, multipartite, dh-counterexample, odd-wheel-free, cograph, chordal, random, "
                  "grid, cycle, wheel, octahedron, k4, triangulation, triangulation-4c")
      ->required();
  gen->add_option("--n", o.n, "Size parameter");
  gen->add_option("--m", o.m, "Second parameter (parts, columns, flips)");
  gen->add_option("--p", o.p, "Edge probability");
  gen->add_option("--seed", o.seed, "Seed (required for random families)");

  auto* reduce = app.add_subcommand("reduce", "NP-hardness reductions");
  reduce->require_subcommand(1);
  auto* sat = reduce->add_subcommand("sat", "3-SAT (DIMACS) to vertex cover in K_e");
  add_common(sat);
  auto* lemma1 = reduce->add_subcommand("lemma1", "Independent set to alpha'");
  add_common(lemma1);

  auto* verify = app.add_subcommand("verify", "Check an invariant");
  add_common(verify);
  add_budget(verify);
  verify->add_option("--suite", o.suite, "omega-identity, eq0-lowerbound, odd-wheel, gyarfas")->required();
  verify->add_option("--seed", o.seed, "Seed for random suites");
  verify->add_option("--count", o.count, "Number of random graphs");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << "run 'ecg --help' for usage\n";
    return 2;
  }

  std::string command;
  std::function<int(const Options&, std::ostream&)> handler;
  if (transform->parsed()) {
    command = "transform";
    handler = cmd_transform;
  } else if (solve->parsed()) {
    command = "solve";
    handler = cmd_solve;
  } else if (gen->parsed()) {
    command = "gen";
    handler = cmd_gen;
  } else if (sat->parsed()) {
    command = "reduce sat";
    handler = cmd_reduce_sat;
  } else if (lemma1->parsed()) {
    command = "reduce lemma1";
    handler = cmd_reduce_lemma1;
  } else {
    command = "verify";
    handler = cmd_verify;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (!o.timing) return handler(o, out);
    // Reports are rewritten to carry the elapsed time.
    std::ostringstream buffer;
    Options inner = o;
    inner.out.clear();
    const int code = handler(inner, buffer);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string text = buffer.str();
    try {
      Json j = Json::parse(text);
      j["wall_time_seconds"] = seconds;
      text = dump(j);
    } catch (const Json::parse_error&) {
      err << "wall time " << seconds << " s\n";
    }
    emit(o, out, text);
    return code;
  } catch (const Error& e) {
    out << dump(error_json(command, e));
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ecg::cli
