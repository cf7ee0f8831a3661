#include <doctest.h>

#include "oracles.hpp"
#include "qgc/circuit.hpp"
#include "qgc/zxcf.hpp"

using namespace qgc;

namespace {

// a=0 input, p=1 pivot, o1=2 output; edges a-p, a-o1.
CodeGraph toy_graph() {
  CodeGraph g(3);
  g.set_role(0, Role::Input);
  g.set_role(1, Role::Pivot);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.set_pivot_match({{0, 1}});
  return g;
}

CodeGraph compiled(std::vector<std::string> rows) {
  return zxcf_to_graph(compile_tableau(StabilizerTableau::from_strings(rows)));
}

CodeGraph five_qubit_graph() { return compiled({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}); }
CodeGraph steane_graph() { return compiled({"IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"}); }

// Two-input graph: inputs 0,1; pivots 2,3; outputs 4,5,6.
CodeGraph two_input_graph() {
  CodeGraph g(7);
  g.set_role(0, Role::Input);
  g.set_role(1, Role::Input);
  g.set_role(2, Role::Pivot);
  g.set_role(3, Role::Pivot);
  for (auto [a, b] : std::vector<Edge>{{0, 2}, {1, 3}, {0, 4}, {0, 5}, {1, 5}, {1, 6}, {2, 6}, {3, 4}, {4, 5}, {2, 3}})
    g.add_edge(a, b);
  g.set_pivot_match({{0, 2}, {1, 3}});
  return g;
}

std::vector<std::vector<oracle::cd>> sqrt_x_matrix() {
  using oracle::cd;
  cd a(0.5, 0.5), b(0.5, -0.5);
  return {{a, b}, {b, a}};  // columns of (1+i)/2 I + (1-i)/2 X
}

}  // namespace

TEST_CASE("gate text round trip and validation") {
  Circuit c(3);
  c.add_layer({Gate::prep_plus(0), Gate::h(1)});
  c.add_layer({Gate::cz(0, 1), Gate::s(2)});
  c.add_layer({Gate::diag("CCZ", {0, 1, 2}, 3)});
  c.input_wires = {1, 2};
  auto text = emit_circuit(c);
  CHECK(parse_circuit(text) == c);
  CHECK(emit_circuit(parse_circuit(text)) == text);
  CHECK(c.depth() == 1 + 1 + 3);

  Circuit bad(2);
  bad.add_layer({Gate::h(0), Gate::cz(0, 1)});
  CHECK_THROWS_AS(bad.validate(), ValidationError);
  CHECK_THROWS_AS(parse_circuit("WIRES 2\nFOO 1\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("H 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("WIRES 1\nDIAG XYZ 0 1\n"), UnsupportedError);
}

TEST_CASE("push_scheduled packs gates as early as possible") {
  Circuit c(3);
  c.push_scheduled(Gate::h(0));
  c.push_scheduled(Gate::h(1));
  c.push_scheduled(Gate::cz(0, 1));
  c.push_scheduled(Gate::h(2));
  CHECK(c.layers.size() == 2);
  CHECK(c.layers[0].size() == 3);
}

TEST_CASE("stabilizer simulation basics") {
  Circuit c(1);
  c.add_layer({Gate::prep_plus(0)});
  auto r = simulate_stabilizer(c);
  CHECK(r.stabilizers.rows == std::vector<PauliString>{PauliString::parse("X")});
  Circuit t(1);
  t.add_layer({Gate::diag("T", {0})});
  CHECK_THROWS_AS(simulate_stabilizer(t), UnsupportedError);
}

TEST_CASE("statevector simulation basics") {
  Circuit c(1);
  c.add_layer({Gate::prep_plus(0)});
  auto psi = simulate_statevector(c);
  CHECK(std::abs(psi[0] - 1 / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(psi[1] - 1 / std::sqrt(2.0)) < 1e-12);
  Circuit cz(2);
  cz.add_layer({Gate::prep_plus(0), Gate::prep_plus(1)});
  cz.add_layer({Gate::cz(0, 1)});
  auto v = simulate_statevector(cz);
  std::vector<oracle::cd> expect{0.5, 0.5, 0.5, -0.5};
  CHECK(oracle::max_abs_diff(v, expect) < 1e-12);
  CHECK_THROWS_AS(simulate_statevector(Circuit(15)), UnsupportedError);
}

TEST_CASE("stabilizer and statevector simulators agree on random Clifford circuits") {
  oracle::Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 1 + rng() % 5;
    Circuit c(n);
    std::vector<Gate> prep;
    for (std::size_t q = 0; q < n; ++q) prep.push_back(rng() % 2 ? Gate::prep_plus(q) : Gate::prep_zero(q));
    c.add_layer(prep);
    for (int s = 0; s < 20; ++s) {
      std::size_t a = rng() % n, b = rng() % n;
      switch (rng() % 5) {
        case 0: c.push_scheduled(Gate::h(a)); break;
        case 1: c.push_scheduled(Gate::s(a)); break;
        case 2: c.push_scheduled(Gate::z(a)); break;
        case 3: if (a != b) c.push_scheduled(Gate::cz(a, b)); break;
        case 4: c.push_scheduled(Gate::diag("SDG", {a})); break;
      }
    }
    auto psi = simulate_statevector(c);
    for (const auto& row : simulate_stabilizer(c).stabilizers.rows)
      CHECK(oracle::max_abs_diff(oracle::apply_pauli(psi, row), psi) < 1e-10);
  }
}

TEST_CASE("edge coloring") {
  auto tri = edge_coloring(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(tri.color_count == 3);
  CHECK(edge_coloring_proper(tri));
  CHECK(edge_coloring(4, {}).color_count == 0);
  std::vector<Edge> cube;
  for (std::size_t v = 0; v < 8; ++v)
    for (std::size_t b = 0; b < 3; ++b)
      if (v < (v ^ (std::size_t{1} << b))) cube.emplace_back(v, v ^ (std::size_t{1} << b));
  auto cc = edge_coloring(8, cube);
  CHECK(cc.color_count <= 4);
  CHECK(edge_coloring_proper(cc));
  // Random graphs: proper with at most max degree + 1 colors.
  oracle::Rng rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 2 + rng() % 30;
    std::vector<Edge> e;
    std::vector<std::size_t> deg(n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (rng() % 3 == 0) {
          e.emplace_back(a, b);
          ++deg[a];
          ++deg[b];
        }
    auto col = edge_coloring(n, e);
    CHECK(edge_coloring_proper(col));
    CHECK(col.color_count <= *std::max_element(deg.begin(), deg.end()) + 1);
  }
}

TEST_CASE("local complementation") {
  CodeGraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  auto tri = local_complementation(path, 1);
  CHECK(tri.edge_count() == 3);
  CHECK(local_complementation(tri, 1) == path);
  CodeGraph iso(2);
  CHECK(local_complementation(iso, 0) == iso);
  CHECK_THROWS_AS(local_complementation(iso, 5), DimensionError);
}

TEST_CASE("encoding circuit of the toy graph") {
  auto g = toy_graph();
  auto c = encoding_circuit(g);
  CHECK(c.depth() == 2);
  auto sim = simulate_stabilizer(c);
  CHECK(same_group(sim.stabilizers, canonical_stabilizers(g)));
  CHECK(sim.stabilizers.rows[0] == PauliString::parse("XX"));
}

TEST_CASE("encoding circuits reproduce canonical stabilizers and logicals") {
  for (const auto& g : {toy_graph(), five_qubit_graph(), steane_graph(), two_input_graph()}) {
    auto c = encoding_circuit(g);
    auto sim = simulate_stabilizer(c);
    CHECK(same_group(sim.stabilizers, canonical_stabilizers(g)));
    auto logicals = canonical_logicals(g);
    REQUIRE(sim.logicals.size() == logicals.size());
    for (std::size_t j = 0; j < logicals.size(); ++j) {
      CHECK(sim.logicals[j].x == logicals[j].x);
      CHECK(sim.logicals[j].z == logicals[j].z);
    }
    CHECK(c.depth() <= 2 * g.max_degree() + 3);
  }
  CodeGraph empty(4);
  auto c = encoding_circuit(empty);
  CHECK(c.depth() == 0);
  CHECK(c.gate_count() == 4);
}

TEST_CASE("statevector of the five-qubit encoder is stabilized") {
  auto g = five_qubit_graph();
  auto psi = simulate_statevector(encoding_circuit(g));
  for (const auto& row : canonical_stabilizers(g).rows) CHECK(oracle::max_abs_diff(oracle::apply_pauli(psi, row), psi) < 1e-10);
}

TEST_CASE("logical sqrt(X) by local complementation") {
  auto g = toy_graph();
  auto single = CodeGraph(2);
  single.set_role(0, Role::Input);
  single.set_role(1, Role::Pivot);
  single.add_edge(0, 1);
  single.set_pivot_match({{0, 1}});
  auto [c1, g1] = logical_sqrt_x(single, 0);
  CHECK(c1.depth() == 1);

  for (const auto& base : {toy_graph(), five_qubit_graph(), steane_graph(), two_input_graph()}) {
    for (auto u : base.inputs()) {
      auto [c, after] = logical_sqrt_x(base, u);
      CHECK(after == local_complementation(base, u));
      CHECK(c.depth() <= base.degree(u) + 1);
      // Logical sqrt(X) on logical wire j, identity elsewhere.
      std::size_t k = base.k(), j = 0;
      while (base.inputs()[j] != u) ++j;
      std::size_t dim = std::size_t{1} << k;
      auto sx = sqrt_x_matrix();
      std::vector<std::vector<oracle::cd>> u_mat(dim, std::vector<oracle::cd>(dim, 0.0));
      for (std::size_t col = 0; col < dim; ++col)
        for (std::size_t row = 0; row < dim; ++row)
          if ((row & ~(std::size_t{1} << j)) == (col & ~(std::size_t{1} << j)))
            u_mat[col][row] = sx[(col >> j) & 1][(row >> j) & 1];
      // The block maps the code of G to itself, acting as logical sqrt(X).
      CHECK(oracle::encoded_action_error(c, encoding_circuit(base), encoding_circuit(base), u_mat) < 1e-10);
      // S on N(u) after the encoder of LCV(G,u) equals the encoder of G after sqrt(X).
      Circuit s_layer(base.n());
      std::vector<Gate> s_gates;
      base.adj(u).for_each([&](std::size_t w) { s_gates.push_back(Gate::s(base.qubit_of(w))); });
      s_layer.add_layer(s_gates);
      CHECK(oracle::encoded_action_error(s_layer, encoding_circuit(after), encoding_circuit(base), u_mat) < 1e-10);
    }
  }
  CHECK_THROWS_AS(logical_sqrt_x(g, 2), ValidationError);
}

TEST_CASE("logical diagonal and generic gates") {
  auto g = toy_graph();
  Circuit s_logical(1);
  s_logical.add_layer({Gate::s(0)});
  auto cs = logical_diagonal(g, Gate::diag("S", {0}));
  auto enc = encoding_circuit(g);
  CHECK(oracle::encoded_action_error(cs, enc, enc, oracle::logical_matrix(s_logical)) < 1e-10);
  CHECK(cs.depth() <= 2 * g.max_degree() + 5);

  auto two = two_input_graph();
  Circuit cz_logical(2);
  cz_logical.add_layer({Gate::cz(0, 1)});
  auto ccz = logical_diagonal(two, Gate::cz(0, 1));
  auto enc2 = encoding_circuit(two);
  CHECK(oracle::encoded_action_error(ccz, enc2, enc2, oracle::logical_matrix(cz_logical)) < 1e-10);

  Circuit t_logical(2);
  t_logical.add_layer({Gate::diag("T", {1})});
  auto ct = logical_diagonal(two, Gate::diag("T", {1}));
  CHECK(oracle::encoded_action_error(ct, enc2, enc2, oracle::logical_matrix(t_logical)) < 1e-10);

  Circuit h_logical(1);
  h_logical.add_layer({Gate::h(0)});
  auto ch = logical_generic(g, h_logical);
  CHECK(oracle::encoded_action_error(ch, enc, enc, oracle::logical_matrix(h_logical)) < 1e-10);
  CHECK(ch.depth() <= 4 * g.max_degree() + 6 + 1);

  Circuit id(1);
  CHECK(oracle::encoded_action_error(logical_generic(g, id), enc, enc, oracle::logical_matrix(id)) < 1e-10);
  CHECK_THROWS_AS(logical_generic(g, Circuit(2)), DimensionError);
  CHECK_THROWS_AS(logical_diagonal(g, Gate::h(0)), ValidationError);
}
