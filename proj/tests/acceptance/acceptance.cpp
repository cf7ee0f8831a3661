// Acceptance run: one PASS/FAIL line per criterion with its wall-clock budget.
// Exit status is 0 iff the failing set equals the set passed via --known-failure.

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "qgc/cli.hpp"
#include "qgc/constructions.hpp"
#include "qgc/decoder.hpp"
#include "qgc/qlo.hpp"
#include "qgc/zxcf.hpp"

using namespace qgc;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<void(Outcome&)> body;
};

struct NamedGraph {
  std::string name;
  CodeGraph g;
};

CodeGraph compiled(const std::string& name) { return zxcf_to_graph(compile_tableau(named_code(name))); }

std::vector<NamedGraph> corpus() {
  return {{"five_qubit", compiled("five_qubit")},
          {"steane7", compiled("steane7")},
          {"shor9", compiled("shor9")},
          {"dodecahedral", dodecahedral_code()},
          {"hypercube3", hypercube_code(3)},
          {"hypercube7", hypercube_code(7)},
          {"icosahedron2", covered_icosahedron(2)},
          {"icosahedron5", covered_icosahedron(5)},
          {"torus3x3", torus_layered_code({3, 3}, 1)},
          {"torus6x6x2", torus_layered_code({6, 6}, 2)},
          {"triangular4x4", triangular_lattice_code(4, 4)},
          {"random_local60", random_local_code({60, 0.1, 10, 10, 10, 1})}};
}

CodeGraph random_code(oracle::Rng& rng, std::size_t max_n) {
  std::size_t n = 2 + rng() % (max_n - 1), r = rng() % n;
  return zxcf_to_graph(compile_tableau(oracle::random_tableau(n, r, rng)));
}

std::vector<std::vector<bool>> adjacency(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n));
  for (auto [u, v] : edges) a[u][v] = a[v][u] = true;
  return a;
}

std::vector<std::vector<bool>> cube3() {
  std::vector<Edge> e;
  for (std::size_t u = 0; u < 8; ++u)
    for (std::size_t j = 0; j < 3; ++j)
      if (u < (u ^ (std::size_t{1} << j))) e.emplace_back(u, u ^ (std::size_t{1} << j));
  return adjacency(8, e);
}

// Root 0 with children 1..3, each with two leaves.
std::vector<std::vector<bool>> star_tree() {
  std::vector<Edge> e;
  for (std::size_t c = 1; c <= 3; ++c) {
    e.emplace_back(0, c);
    e.emplace_back(c, 2 + 2 * c);
    e.emplace_back(c, 3 + 2 * c);
  }
  return adjacency(10, e);
}

// Cycle 0..4 and centre 5.
std::vector<std::vector<bool>> pentagon_centre() {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, 5);
  }
  return adjacency(6, e);
}

Syndrome symplectic_syndrome(const StabilizerTableau& t, const PauliString& e) {
  Syndrome s(t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) s.set(i, !oracle::chars_commute(e, t.rows[i]));
  return s;
}

// U on logical wire j of k, identity elsewhere; u1 holds columns.
std::vector<std::vector<oracle::cd>> embed(const std::vector<std::vector<oracle::cd>>& u1, std::size_t k, std::size_t j) {
  std::size_t dim = std::size_t{1} << k;
  std::vector<std::vector<oracle::cd>> u(dim, std::vector<oracle::cd>(dim, 0.0));
  for (std::size_t col = 0; col < dim; ++col)
    for (std::size_t row = 0; row < dim; ++row)
      if ((row & ~(std::size_t{1} << j)) == (col & ~(std::size_t{1} << j))) u[col][row] = u1[(col >> j) & 1][(row >> j) & 1];
  return u;
}

std::string run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return std::to_string(code) + "\n" + out.str() + err.str();
}

// ---- criteria ----

void counting(Outcome& o) {
  std::size_t pairs = 0;
  for (std::size_t n = 0; n <= 10; ++n)
    for (std::size_t k = 0; k <= n; ++k, ++pairs)
      o.require(count_zxcf(n, k) == count_tableaus(n, k), "n=" + std::to_string(n) + " k=" + std::to_string(k));
  o.detail << pairs << " (n,k) pairs, count(10,5)=" << count_tableaus(10, 5);
}

void canonicity(Outcome& o) {
  oracle::Rng rng(20240601);
  std::size_t identical = 0, round_trips = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t n = 1 + rng() % 8, r = rng() % (n + 1);
    auto t = oracle::random_tableau(n, r, rng);
    auto d = compile_tableau(t);
    identical += compile_tableau(oracle::resample(t, rng)) == d;
    round_trips += zxcf_check_rules(d).empty() && same_group(zxcf_to_tableau(d), t);
  }
  o.require(identical == 1000, "canonical form differs");
  o.require(round_trips == 1000, "round trip");
  o.detail << identical << "/1000 identical, " << round_trips << "/1000 round trips";
}

void geometry(Outcome& o) {
  o.require(oracle::isomorphic(oracle::dense_adjacency(compiled("steane7")), cube3()), "steane7 ~ 3-cube");
  o.require(oracle::isomorphic(oracle::dense_adjacency(compiled("shor9")), star_tree()), "shor9 ~ star tree");
  o.require(oracle::isomorphic(oracle::dense_adjacency(compiled("five_qubit")), pentagon_centre()), "five ~ pentagon+centre");
  o.detail << "steane7, shor9, five_qubit isomorphism checked";
}

void distances(Outcome& o) {
  struct Case {
    std::string name;
    CodeGraph g;
    std::size_t expected;
    bool brute;
  };
  std::vector<Case> cases = {{"five_qubit", compiled("five_qubit"), 3, false},
                             {"steane7", compiled("steane7"), 3, true},
                             {"shor9", compiled("shor9"), 3, true},
                             {"dodecahedral", dodecahedral_code(), 3, false},
                             {"hypercube3", hypercube_code(3), 3, true}};
  for (const auto& c : cases) {
    auto r = distance_exact(c.g, c.g.n());
    std::size_t d = r.distance.value_or(0);
    o.detail << c.name << "=" << d;
    if (c.brute) {
      std::size_t b = oracle::brute_distance(canonical_stabilizers(c.g), c.g.n());
      o.detail << "(brute " << b << ")";
      o.require(b == d, c.name + " brute oracle disagrees");
    }
    o.detail << " ";
    o.require(d == c.expected, c.name + " expected " + std::to_string(c.expected) + ", found " + std::to_string(d) +
                                   " with witness " + r.witness.str());
    o.require(d <= distance_upper_bound_degree(c.g), c.name + " above degree bound");
  }
  // Flagged long-running job: exclusion through weight 4 on 54 qubits.
  auto ico = covered_icosahedron(5);
  auto r = distance_exact(ico, 5);
  o.detail << "icosahedron5[long job]=" << r.distance.value_or(0);
  o.require(r.distance == 5u, "icosahedron5 expected 5");
  o.require(r.distance.value_or(99) <= distance_upper_bound_degree(ico), "icosahedron5 above degree bound");
}

void encoding(Outcome& o) {
  std::size_t dodeca_depth = 0;
  for (const auto& [name, g] : corpus()) {
    auto c = encoding_circuit(g);
    o.require(c.depth() <= 2 * g.max_degree() + 3, name + " depth");
    o.require(same_group(simulate_stabilizer(c).stabilizers, canonical_stabilizers(g)), name + " stabilizer group");
    if (name == "dodecahedral") dodeca_depth = c.depth();
  }
  o.require(dodeca_depth <= 9, "dodecahedral depth > 9");
  o.detail << corpus().size() << " codes, dodecahedral depth " << dodeca_depth;
}

void logical_gates(Outcome& o) {
  using oracle::cd;
  const std::vector<std::vector<cd>> sqrt_x = {{cd(0.5, 0.5), cd(0.5, -0.5)}, {cd(0.5, -0.5), cd(0.5, 0.5)}};
  double worst = 0;
  std::size_t checks = 0;
  auto record = [&](double err, const std::string& what) {
    worst = std::max(worst, err);
    ++checks;
    o.require(err < 1e-10, what + " deviation");
  };
  for (const auto& [name, g] : corpus()) {
    if (g.n() > 12) continue;
    std::size_t delta = g.max_degree(), k = g.k();
    auto enc = encoding_circuit(g);
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t u = g.inputs()[j];
      auto [c, after] = logical_sqrt_x(g, u);
      o.require(c.depth() <= g.degree(u) + 1, name + " sqrt(X) depth");
      record(oracle::encoded_action_error(c, enc, enc, embed(sqrt_x, k, j)), name + " sqrt(X)");
    }
    Circuit s_logical(k);
    s_logical.add_layer({Gate::s(0)});
    auto cs = logical_diagonal(g, Gate::diag("S", {0}));
    o.require(cs.depth() <= 2 * delta + 5, name + " S depth");
    record(oracle::encoded_action_error(cs, enc, enc, oracle::logical_matrix(s_logical)), name + " S");
    if (k >= 2) {
      Circuit cz_logical(k);
      cz_logical.add_layer({Gate::cz(0, 1)});
      auto ccz = logical_diagonal(g, Gate::cz(0, 1));
      o.require(ccz.depth() <= 2 * delta + 5, name + " CZ depth");
      record(oracle::encoded_action_error(ccz, enc, enc, oracle::logical_matrix(cz_logical)), name + " CZ");
    }
    Circuit h_logical(k);
    h_logical.add_layer({Gate::h(0)});
    auto ch = logical_generic(g, h_logical);
    o.require(ch.depth() <= 4 * delta + 6 + 1, name + " H depth");
    record(oracle::encoded_action_error(ch, enc, enc, oracle::logical_matrix(h_logical)), name + " H");
  }
  o.detail << checks << " gate checks, max deviation " << std::scientific << std::setprecision(2) << worst;
}

void decoder_guarantee(Outcome& o) {
  auto g3 = hypercube_code(3), g7 = hypercube_code(7);
  std::size_t b3 = sensitivity_B(g3), b7 = sensitivity_B(g7);
  o.require(b3 == 2 && b7 == 2, "hypercubes are not 2-sensitive");
  GreedyDecoder dec(g7);
  std::size_t t = g7.min_degree() / 4, cases = 0, ok = 0;
  o.require(t == 1, "floor(delta/4) on m=7");
  for (std::size_t q = 0; q < g7.n(); ++q)
    for (char p : {'X', 'Y', 'Z'}) {
      auto e = PauliString::single(g7.n(), q, p);
      ++cases;
      ok += dec.success(e, dec.decode(dec.syndrome(e)));
    }
  o.require(cases == 336 && ok == cases, "weight-1 decoding on m=7");

  // m=3: exact distance. m=7: exclusion through weight 5, and a canonical logical of weight <= delta.
  std::size_t d3 = distance_exact(g3, g3.n()).distance.value_or(0);
  o.require(2 * (g3.min_degree() / (2 * b3)) + 1 <= d3 && d3 <= g3.min_degree(), "sandwich m=3");
  bool excluded = !distance_exact(g7, 5).distance.has_value();
  std::size_t witness = SIZE_MAX;
  for (const auto& l : canonical_logicals(g7)) witness = std::min({witness, l.x.weight(), l.z.weight()});
  o.require(excluded && 2 * (g7.min_degree() / (2 * b7)) + 1 <= 6, "sandwich m=7 lower");
  o.require(witness <= g7.min_degree(), "sandwich m=7 upper");
  o.detail << "B(3)=" << b3 << " B(7)=" << b7 << ", " << ok << "/" << cases << " weight-1 decoded, d(3)=" << d3
           << ", 6<=d(7)<=" << witness;
}

void syndrome_equivalence(Outcome& o) {
  oracle::Rng rng(777);
  std::vector<CodeGraph> graphs;
  for (auto& ng : corpus()) graphs.push_back(ng.g);
  while (graphs.size() < 100) graphs.push_back(random_code(rng, 12));
  std::size_t pairs = 0, equal = 0;
  for (const auto& g : graphs) {
    auto stabs = canonical_stabilizers(g);
    for (int t = 0; t < 100; ++t, ++pairs) {
      auto e = oracle::random_pauli(g.n(), rng, false);
      equal += extract_syndrome(g, e) == symplectic_syndrome(stabs, e);
    }
  }
  o.require(pairs == 10000 && equal == pairs, "syndrome mismatch");
  o.detail << equal << "/" << pairs << " pairs equal over " << graphs.size() << " graphs";
}

void qlo_agreement(Outcome& o) {
  oracle::Rng rng(4242);
  std::vector<CodeGraph> graphs;
  for (auto& ng : corpus())
    if (ng.g.n() <= kQloMaxNonInputs) graphs.push_back(ng.g);
  std::size_t named = graphs.size();
  while (graphs.size() < named + 60) {
    auto g = random_code(rng, 10);
    if (g.k() > 0) graphs.push_back(g);
  }
  std::size_t agree = 0;
  for (const auto& g : graphs) agree += distance_qlo(g) == distance_exact(g, g.n()).distance.value_or(0);
  o.require(agree == graphs.size(), "QLO and enumeration disagree");
  o.detail << agree << "/" << graphs.size() << " graphs agree (" << named << " corpus + random)";
}

void random_codes(Outcome& o) {
  const std::size_t n = 60, delta = 10;
  const double rate = 0.1, bound = 1 + delta + delta * rate + delta * delta * rate;
  std::size_t within = 0, dist3 = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto g = random_local_code({n, rate, delta, delta, delta, seed});
    bool ok = true;
    for (const auto& row : canonical_stabilizers(g).rows) ok = ok && row.weight() <= bound;
    within += ok;
    dist3 += !distance_exact(g, 2).distance.has_value();
  }
  o.require(within == 200, "weight bound");
  o.detail << within << "/200 within weight bound " << bound << ", distance>=3 fraction " << std::fixed
           << std::setprecision(3) << dist3 / 200.0;
}

void determinism(Outcome& o) {
  auto dir = std::filesystem::temp_directory_path() / "qgc_acceptance";
  std::filesystem::create_directories(dir);
  auto cube = (dir / "cube3.json").string(), dodeca = (dir / "dodeca.json").string(), ico = (dir / "ico2.json").string();
  std::ofstream(cube) << graph_to_json(hypercube_code(3));
  std::ofstream(dodeca) << graph_to_json(dodecahedral_code());
  std::ofstream(ico) << graph_to_json(covered_icosahedron(2));
  std::vector<std::vector<std::string>> commands = {
      {"decode-sim", "--graph", cube, "--noise", "depolarizing:0.05", "--trials", "20000", "--seed", "7"},
      {"decode-sim", "--graph", dodeca, "--noise", "fixed:2", "--trials", "5000", "--seed", "11"},
      {"decode-sim", "--graph", ico, "--noise", "depolarizing:0.02", "--trials", "5000", "--seed", "3", "--decoder", "plain"},
      {"construct", "random-local", "--n", "60", "--rate", "0.1", "--delta", "10", "--seed", "5"},
      {"distance", "--graph", ico}};
  std::size_t stable = 0;
  for (const auto& cmd : commands) {
    std::set<std::string> outputs;
    for (const char* t : {"1", "2", "3", "8"})
      for (int rep = 0; rep < 2; ++rep) {
        std::vector<std::string> args = {"--threads", t};
        args.insert(args.end(), cmd.begin(), cmd.end());
        outputs.insert(run_cli(args));
      }
    stable += outputs.size() == 1;
    o.require(outputs.size() == 1, cmd[0] + " output varies");
  }
  o.detail << stable << "/" << commands.size() << " seeded commands byte-identical over threads {1,2,3,8} x 2 runs";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> known, only;
  app.add_option("--known-failure", known, "criterion expected to fail (recorded in the decisions ledger)");
  app.add_option("--only", only, "run only these criteria");
  CLI11_PARSE(app, argc, argv);

  std::vector<Criterion> criteria = {
      {1, "counting identity", 1, counting},
      {2, "compiler canonicity", 60, canonicity},
      {3, "named-code geometry", 10, geometry},
      {4, "distances", 300, distances},
      {5, "encoding circuits", 10, encoding},
      {6, "logical gates", 120, logical_gates},
      {7, "decoder guarantee", 120, decoder_guarantee},
      {8, "syndrome oracle equivalence", 30, syndrome_equivalence},
      {9, "QLO backend agreement", 120, qlo_agreement},
      {10, "random-code properties", 120, random_codes},
      {11, "determinism", 120, determinism},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs <= c.budget_s, "over time budget");
    if (!o.pass) failed.insert(c.id);
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << std::setw(2) << c.id << " " << c.title << ": " << o.detail.str()
              << " (" << std::fixed << std::setprecision(2) << secs << " s, budget " << std::setprecision(0) << c.budget_s
              << " s)" << std::endl;
  }
  std::set<int> expected;
  for (int k : known)
    if (only.empty() || std::find(only.begin(), only.end(), k) != only.end()) expected.insert(k);
  bool as_expected = failed == expected;
  std::cout << "failing: " << failed.size() << ", expected failures: " << expected.size()
            << (as_expected ? " (matches)" : " (MISMATCH)") << std::endl;
  return as_expected ? 0 : 1;
}
