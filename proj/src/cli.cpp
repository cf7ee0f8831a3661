#include "qgc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "json_io.hpp"
#include "qgc/circuit.hpp"
#include "qgc/constructions.hpp"
#include "qgc/decoder.hpp"
#include "qgc/errors.hpp"
#include "qgc/parallel.hpp"
#include "qgc/qlo.hpp"

namespace qgc::cli {

namespace {

// Well-formed arguments with an unusable value (exit 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unreadable or unwritable file (exit 1).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw IoError("cannot write " + out_path);
  f << text;
  if (!f) throw IoError("write failed: " + out_path);
}

// A graph file, possibly carrying ZXCF decorations.
struct LoadedGraph {
  CodeGraph graph;
  std::optional<ZXDiagram> zx;
};

LoadedGraph load_graph(const std::string& path) {
  auto text = read_text(path);
  auto j = detail::parse_json(text);
  if (j.is_object() && j.contains("cliffords")) {
    auto d = zxcf_from_json(text);
    return {d.graph, d};
  }
  return {graph_from_json(text), std::nullopt};
}

std::string dot_color(Role r) {
  switch (r) {
    case Role::Input: return "blue";
    case Role::Pivot: return "orange";
    case Role::Output: return "black";
  }
  return "black";
}

std::string dot_body(const CodeGraph& g, const std::vector<LocalClifford>* cliffords) {
  std::ostringstream s;
  s << "graph qgc {\n  node [shape=circle, style=filled, fontcolor=white];\n";
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    s << "  n" << v << " [label=\"";
    if (g.role(v) == Role::Input) s << "in" << v;
    else s << "q" << g.qubit_of(v) + 1;
    s << "\", color=" << dot_color(g.role(v)) << ", fillcolor=" << dot_color(g.role(v)) << "];\n";
  }
  for (const auto& [a, b] : g.edges()) s << "  n" << a << " -- n" << b << ";\n";
  if (cliffords)
    for (std::size_t v = 0; v < g.node_count(); ++v) {
      auto c = (*cliffords)[v];
      if (c == LocalClifford::I) continue;
      s << "  f" << v << " [shape=point, color=gray, fillcolor=gray];\n";
      s << "  n" << v << " -- f" << v << " [label=\"" << clifford_name(c) << "\", style=dashed];\n";
    }
  s << "}\n";
  return s.str();
}

NoiseModel parse_noise(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("--noise expects depolarizing:P or fixed:W, got \"" + spec + "\"");
  std::string kind = spec.substr(0, colon), value = spec.substr(colon + 1);
  try {
    std::size_t used = 0;
    if (kind == "depolarizing") {
      double p = std::stod(value, &used);
      if (used == value.size()) return NoiseModel::depolarizing(p);
    } else if (kind == "fixed") {
      unsigned long w = std::stoul(value, &used);
      if (used == value.size() && value.find('-') == std::string::npos) return NoiseModel::fixed_weight(w);
    }
  } catch (const std::logic_error&) {
  }
  throw UsageError("--noise expects depolarizing:P or fixed:W, got \"" + spec + "\"");
}

// Encoder of the bare graph followed by each output's decoration.
Circuit decorated_encoder(const CodeGraph& g, const std::vector<LocalClifford>& cl) {
  Circuit c = encoding_circuit(g);
  std::vector<Gate> first, second;
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (g.role(v) == Role::Input) continue;
    std::size_t q = g.qubit_of(v);
    switch (cl[v]) {
      case LocalClifford::I: break;
      case LocalClifford::Z: first.push_back(Gate::z(q)); break;
      case LocalClifford::S: first.push_back(Gate::s(q)); break;
      case LocalClifford::H: first.push_back(Gate::h(q)); break;
      case LocalClifford::SZ:
        first.push_back(Gate::z(q));
        second.push_back(Gate::s(q));
        break;
      case LocalClifford::HZ:
        first.push_back(Gate::z(q));
        second.push_back(Gate::h(q));
        break;
    }
  }
  if (!first.empty()) c.add_layer(first);
  if (!second.empty()) c.add_layer(second);
  return c;
}

struct Options {
  std::string graph, tableau, out, noise = "depolarizing:0.01", family, decoder = "all";
  std::size_t max_weight = 0, n = 0, m = 7, cover = 2, repeats = 1, a = 4, b = 4;
  std::size_t delta = 10;
  std::optional<std::size_t> delta_i, delta_p, delta_o;
  std::vector<std::size_t> dims{3, 3};
  double rate = 0.1;
  std::uint64_t trials = 10000, seed = 1;
  bool graph_only = false;
  unsigned threads = 0;
};

int dispatch(const std::string& verb, const Options& o, std::ostream& out) {
  if (verb == "compile") {
    auto t = parse_tableau(read_text(o.tableau));
    if (auto rep = tableau_validate(t); !rep) throw ValidationError("invalid tableau: " + rep.message);
    auto d = compile_tableau(t);
    emit((o.graph_only ? graph_to_json(zxcf_to_graph(d)) : zxcf_to_json(d)) + "\n", o.out, out);
    return kOk;
  }
  if (verb == "count-check") {
    bool all_match = true;
    for (std::size_t k = 0; k <= o.n; ++k) {
      auto t = count_tableaus(o.n, k), z = count_zxcf(o.n, k);
      bool match = t == z;
      all_match = all_match && match;
      out << "n=" << o.n << " k=" << k << " tableaus=" << t << " zxcf=" << z << (match ? " match" : " MISMATCH") << "\n";
    }
    return all_match ? kOk : kValidationFailure;
  }
  if (verb == "construct") {
    std::string json;
    const auto& f = o.family;
    if (f == "shor9" || f == "steane7" || f == "five_qubit") {
      json = zxcf_to_json(compile_tableau(named_code(f)));
    } else {
      CodeGraph g;
      if (f == "dodecahedral") g = dodecahedral_code();
      else if (f == "hypercube") g = hypercube_code(o.m);
      else if (f == "icosahedron") g = covered_icosahedron(o.cover);
      else if (f == "torus") g = torus_layered_code(o.dims, o.repeats);
      else if (f == "triangular") g = triangular_lattice_code(o.a, o.b);
      else if (f == "random-local")
        g = random_local_code({o.n, o.rate, o.delta_i.value_or(o.delta), o.delta_p.value_or(o.delta),
                               o.delta_o.value_or(o.delta), o.seed});
      else throw UsageError("unknown family \"" + f + "\"");
      json = graph_to_json(g);
    }
    emit(json + "\n", o.out, out);
    return kOk;
  }

  auto loaded = load_graph(o.graph);
  const CodeGraph& g = loaded.graph;
  if (verb == "check-zxcf") {
    if (!loaded.zx) {
      out << "not a ZXCF file: no \"cliffords\" object\n";
      return kValidationFailure;
    }
    auto violations = zxcf_check_rules(*loaded.zx);
    if (violations.empty()) {
      out << "ok\n";
      return kOk;
    }
    for (const auto& v : violations) out << rule_name(v.rule) << ": " << v.detail << "\n";
    return kValidationFailure;
  }
  if (auto rep = validate_graph(g); !rep) throw ValidationError("invalid graph: " + rep.message);
  if (verb == "invert") {
    emit(emit_tableau(loaded.zx ? zxcf_to_tableau(*loaded.zx) : canonical_stabilizers(g)), o.out, out);
    return kOk;
  }
  if (verb == "stabilizers") {
    auto t = loaded.zx ? zxcf_to_tableau(*loaded.zx) : canonical_stabilizers(g);
    for (const auto& row : t.rows) out << row.str(true) << "\n";
    return kOk;
  }
  if (verb == "logicals") {
    auto ls = canonical_logicals(g);
    for (std::size_t j = 0; j < ls.size(); ++j) {
      auto x = ls[j].x, z = ls[j].z;
      if (loaded.zx)
        for (std::size_t v = 0; v < g.node_count(); ++v)
          if (g.role(v) != Role::Input) {
            conjugate_local(x, g.qubit_of(v), loaded.zx->clifford[v]);
            conjugate_local(z, g.qubit_of(v), loaded.zx->clifford[v]);
          }
      out << "X" << j + 1 << " " << x.str(true) << "\n";
      out << "Z" << j + 1 << " " << z.str(true) << "\n";
    }
    return kOk;
  }
  if (verb == "encode") {
    Circuit c = loaded.zx ? decorated_encoder(g, loaded.zx->clifford) : encoding_circuit(g);
    std::size_t bare = encoding_circuit(g).depth();
    std::ostringstream report;
    report << "# depth " << c.depth() << " graph-part " << bare << " bound " << 2 * g.max_degree() + 3 << "\n";
    emit(emit_circuit(c) + report.str(), o.out, out);
    if (!o.out.empty()) out << report.str();
    return kOk;
  }
  if (verb == "distance") {
    std::size_t w = o.max_weight == 0 ? g.n() : o.max_weight;
    auto r = distance_exact(g, w);
    if (r.distance) out << *r.distance << "\n";
    else out << "> " << w << "\n";
    return kOk;
  }
  if (verb == "sensitivity") {
    out << sensitivity_B(is_pivot_normalized(g) ? g : normalize_inputs(g)) << "\n";
    return kOk;
  }
  if (verb == "export-dot") {
    emit(loaded.zx ? export_dot(*loaded.zx) : export_dot(g), o.out, out);
    return kOk;
  }
  if (verb == "decode-sim") {
    auto noise = parse_noise(o.noise);
    DecoderOptions opts;
    if (o.decoder == "all") opts = DecoderOptions::all();
    else if (o.decoder != "plain") throw UsageError("--decoder expects all or plain");
    auto r = monte_carlo_rate(g, noise, o.trials, o.seed, opts);
    detail::Json rec;
    rec["graph"] = graph_hash(g);
    rec["n"] = g.n();
    rec["k"] = g.k();
    rec["noise"] = o.noise;
    rec["decoder"] = o.decoder;
    rec["trials"] = r.trials;
    rec["seed"] = o.seed;
    rec["failures"] = r.failures;
    rec["rate"] = r.rate;
    rec["ci_low"] = r.ci_low;
    rec["ci_high"] = r.ci_high;
    out << rec.dump() << "\n";
    return kOk;
  }
  throw UsageError("unknown verb " + verb);
}

}  // namespace

std::string export_dot(const CodeGraph& g) { return dot_body(g, nullptr); }

std::string export_dot(const ZXDiagram& d) { return dot_body(d.graph, &d.clifford); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph-based stabilizer code toolkit"};
  app.name("qgc");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--threads", o.threads, "worker threads for library loops (0: QGC_THREADS or all cores)");

  auto graph_opt = [&](CLI::App* sub, const char* what) {
    sub->add_option("--graph", o.graph, what)->required();
  };
  auto out_opt = [&](CLI::App* sub) { sub->add_option("--out", o.out, "write to this file instead of stdout"); };

  auto* compile = app.add_subcommand("compile", "tableau file -> ZXCF JSON");
  compile->add_option("--tableau", o.tableau, "tableau text file ('-' for stdin)")->required();
  compile->add_flag("--graph-only", o.graph_only, "emit the bare graph without decorations");
  out_opt(compile);

  auto* invert = app.add_subcommand("invert", "graph or ZXCF JSON -> tableau file");
  graph_opt(invert, "graph or ZXCF JSON");
  out_opt(invert);

  graph_opt(app.add_subcommand("stabilizers", "list canonical stabilizers"), "graph or ZXCF JSON");
  graph_opt(app.add_subcommand("logicals", "list canonical logical operators"), "graph or ZXCF JSON");

  auto* encode = app.add_subcommand("encode", "encoding circuit text with a depth report");
  graph_opt(encode, "graph or ZXCF JSON");
  out_opt(encode);

  auto* distance = app.add_subcommand("distance", "exact distance, or '> W' past --max-weight");
  graph_opt(distance, "graph or ZXCF JSON");
  distance->add_option("--max-weight", o.max_weight, "largest weight searched (default n)")->check(CLI::PositiveNumber);

  auto* sim = app.add_subcommand("decode-sim", "Monte Carlo logical error rate of the greedy decoder");
  graph_opt(sim, "graph or ZXCF JSON");
  sim->add_option("--noise", o.noise, "depolarizing:P or fixed:W")->capture_default_str();
  sim->add_option("--trials", o.trials, "number of trials")->capture_default_str();
  sim->add_option("--seed", o.seed, "base seed")->capture_default_str();
  sim->add_option("--decoder", o.decoder, "all (every optimization) or plain")->capture_default_str();

  auto* construct = app.add_subcommand("construct", "generate a code family as graph JSON");
  construct->add_option("family", o.family, "shor9 steane7 five_qubit dodecahedral hypercube icosahedron torus triangular random-local")
      ->required()
      ->check(CLI::IsMember({"shor9", "steane7", "five_qubit", "dodecahedral", "hypercube", "icosahedron", "torus",
                             "triangular", "random-local"}));
  construct->add_option("--m", o.m, "hypercube dimension 2^r - 1")->capture_default_str();
  construct->add_option("--cover", o.cover, "icosahedron cover, 2 or 5")->capture_default_str();
  construct->add_option("--dims", o.dims, "torus layer dimensions, multiples of 3")->delimiter(',');
  construct->add_option("--repeats", o.repeats, "torus layer triples")->capture_default_str();
  construct->add_option("--a", o.a, "triangular width")->capture_default_str();
  construct->add_option("--b", o.b, "triangular height")->capture_default_str();
  construct->add_option("--n", o.n, "random-local qubits");
  construct->add_option("--rate", o.rate, "random-local rate k/n")->capture_default_str();
  construct->add_option("--delta", o.delta, "random-local locality for all three windows")->capture_default_str();
  construct->add_option("--delta-i", o.delta_i, "input window");
  construct->add_option("--delta-p", o.delta_p, "pivot window");
  construct->add_option("--delta-o", o.delta_o, "output window");
  construct->add_option("--seed", o.seed, "random-local seed")->capture_default_str();
  out_opt(construct);

  auto* count = app.add_subcommand("count-check", "compare tableau and ZXCF counts for every k");
  count->add_option("--n", o.n, "number of qubits")->required()->check(CLI::Range(0, 64));

  auto* check = app.add_subcommand("check-zxcf", "report ZXCF rule violations");
  check->add_option("--zxcf,--graph", o.graph, "ZXCF JSON")->required();

  graph_opt(app.add_subcommand("sensitivity", "smallest B for which the graph is B-sensitive"), "graph or ZXCF JSON");

  auto* dot = app.add_subcommand("export-dot", "Graphviz DOT with role-coloured nodes");
  graph_opt(dot, "graph or ZXCF JSON");
  out_opt(dot);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  std::string verb = app.get_subcommands().front()->get_name();
  unsigned saved = thread_count();
  if (o.threads != 0) set_thread_count(o.threads);
  int code = kValidationFailure;
  try {
    code = dispatch(verb, o, out);
  } catch (const UsageError& e) {
    err << "qgc " << verb << ": " << e.what() << "\n";
    code = kUsageError;
  } catch (const std::exception& e) {
    err << "qgc " << verb << ": " << e.what() << "\n";
    code = kValidationFailure;
  }
  set_thread_count(saved);
  return code;
}

}  // namespace qgc::cli
