#include <doctest.h>

#include <tuple>

#include "oracles.hpp"
#include "qgc/constructions.hpp"
#include "qgc/qlo.hpp"
#include "qgc/zxcf.hpp"

using namespace qgc;

namespace {

CodeGraph compiled_named(const std::string& name) { return zxcf_to_graph(compile_tableau(named_code(name))); }

std::vector<std::size_t> degree_sequence(const CodeGraph& g) {
  std::vector<std::size_t> d;
  for (std::size_t v = 0; v < g.node_count(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<std::vector<bool>> cube_adjacency(std::size_t m) {
  std::size_t n = std::size_t{1} << m;
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t j = 0; j < m; ++j) a[u][u ^ (std::size_t{1} << j)] = true;
  return a;
}

bool connected(const CodeGraph& g) {
  auto d = oracle::bfs(g, 0);
  return std::none_of(d.begin(), d.end(), [](std::size_t x) { return x == SIZE_MAX; });
}

std::size_t hamming(std::size_t a, std::size_t b) { return static_cast<std::size_t>(std::popcount(a ^ b)); }

}  // namespace

TEST_CASE("named codes") {
  auto shor = named_code("shor9");
  CHECK(shor.n == 9);
  CHECK(shor.rows.size() == 8);
  CHECK(shor.rows[6] == PauliString::parse("XXXXXXIII"));
  auto steane = named_code("steane7");
  CHECK(steane.rows.size() == 6);
  auto five = named_code("five_qubit");
  CHECK(five.rows.size() == 4);
  CHECK(five.rows[0] == PauliString::parse("XZZXI"));
  for (const auto& name : named_code_names()) CHECK(tableau_validate(named_code(name)).ok);
  CHECK_THROWS_AS(named_code("toric"), ValidationError);
}

TEST_CASE("compiled named codes have their geometric shapes") {
  auto steane = compiled_named("steane7");
  CHECK(oracle::isomorphic(oracle::dense_adjacency(steane), cube_adjacency(3)));
  CHECK(is_css(steane));

  // Root with three children, each with two leaves.
  auto shor = compiled_named("shor9");
  CHECK(shor.edge_count() == 9);
  CHECK(connected(shor));
  CHECK(degree_sequence(shor) == std::vector<std::size_t>{1, 1, 1, 1, 1, 1, 3, 3, 3, 3});

  // Five-cycle plus a centre joined to every cycle node.
  auto five = compiled_named("five_qubit");
  auto seq = degree_sequence(five);
  CHECK(seq == std::vector<std::size_t>{3, 3, 3, 3, 3, 5});
  std::size_t centre = 0;
  while (five.degree(centre) != 5) ++centre;
  CodeGraph rim = five;
  for (std::size_t v = 0; v < five.node_count(); ++v)
    if (v != centre && five.has_edge(v, centre)) rim.remove_edge(v, centre);
  std::size_t start = centre == 0 ? 1 : 0;
  auto d = oracle::bfs(rim, start);
  std::size_t reached = 0;
  for (std::size_t v = 0; v < five.node_count(); ++v)
    if (v != centre) {
      CHECK(rim.degree(v) == 2);
      reached += d[v] != SIZE_MAX;
    }
  CHECK(reached == 5);
}

TEST_CASE("dodecahedral code") {
  auto g = dodecahedral_code();
  CHECK(g.n() == 16);
  CHECK(g.k() == 4);
  CHECK(g.edge_count() == 30);
  for (std::size_t v = 0; v < 20; ++v) CHECK(g.degree(v) == 3);
  CHECK_FALSE(is_css(g));
  CHECK(distance_exact(g, 4).distance == 3);
  // Inputs are pairwise at distance >= 3.
  for (auto u : g.inputs()) {
    auto d = oracle::bfs(g, u);
    for (auto w : g.inputs())
      if (w != u) CHECK(d[w] >= 3);
  }
}

TEST_CASE("hypercube codes") {
  auto g3 = hypercube_code(3);
  CHECK(g3.n() == 6);
  CHECK(g3.k() == 2);
  CHECK(g3.inputs() == std::vector<std::size_t>{0, 7});
  CHECK(is_css(g3));
  // Enumeration and brute force both give 2, one below the family's claimed lower bound of 3.
  CHECK(distance_exact(g3, 6).distance == 2);
  CHECK(oracle::brute_distance(canonical_stabilizers(g3), 6) == 2);
  for (std::size_t m : {3u, 7u}) {
    auto g = hypercube_code(m);
    CHECK(g.n() == m * (std::size_t{1} << m) / (m + 1));
    CHECK(g.k() == (std::size_t{1} << m) / (m + 1));
    CHECK(is_pivot_normalized(g));
    auto piv = g.pivots();
    for (std::size_t a = 0; a < g.k(); ++a)
      for (std::size_t b = a + 1; b < g.k(); ++b) {
        CHECK(hamming(g.inputs()[a], g.inputs()[b]) >= 3);
        CHECK(hamming(piv[a], piv[b]) >= 3);
      }
  }
  CHECK(hypercube_code(7).n() == 112);
  CHECK_THROWS_AS(hypercube_code(4), ValidationError);
  CHECK_THROWS_AS(hypercube_code(1), ValidationError);
}

TEST_CASE("covered icosahedron") {
  // Base graph: the icosahedron (5-regular, 12 nodes, every edge in two triangles).
  CodeGraph base(12);
  for (auto [a, b] : icosahedron_edges()) base.add_edge(a, b);
  for (std::size_t v = 0; v < 12; ++v) CHECK(base.degree(v) == 5);
  auto g2 = covered_icosahedron(2);
  CHECK(g2.n() == 22);
  CHECK(g2.k() == 2);
  auto g5 = covered_icosahedron(5);
  CHECK(g5.n() == 54);
  CHECK(g5.k() == 6);
  for (const auto* g : {&g2, &g5})
    for (std::size_t v = 0; v < g->node_count(); ++v) CHECK(g->degree(v) == 5);
  CHECK(connected(g5));
  CHECK(distance_exact(g2, 5).distance == 5);
  CHECK_THROWS_AS(covered_icosahedron(3), ValidationError);
}

TEST_CASE("layered torus") {
  auto g = torus_layered_code({3, 3}, 1);
  CHECK(g.node_count() == 27);
  CHECK(g.k() == 6);
  CHECK(7 * g.k() == 2 * g.n());
  CHECK(validate_graph(g).ok);
  CHECK(is_pivot_normalized(g));
  CHECK_FALSE(is_css(torus_layered_code({6, 6}, 1)));
  CHECK(is_css(torus_layered_code({6, 6}, 2)));
  auto big = torus_layered_code({6, 3}, 3);
  CHECK(7 * big.k() == 2 * big.n());
  CHECK_THROWS_AS(torus_layered_code({4, 3}, 1), ValidationError);
  CHECK_THROWS_AS(torus_layered_code({3, 3}, 0), ValidationError);
}

TEST_CASE("triangular lattice") {
  for (auto [a, b] : std::vector<std::pair<std::size_t, std::size_t>>{{4, 4}, {7, 7}, {6, 9}}) {
    auto g = triangular_lattice_code(a, b);
    for (std::size_t v = 0; v < g.node_count(); ++v) CHECK(g.degree(v) == 6);
    CHECK(g.k() >= 1);
    for (auto u : g.inputs()) {
      auto d = oracle::bfs(g, u);
      for (auto w : g.inputs())
        if (w != u) CHECK(d[w] >= 3);
    }
    CHECK(distance_upper_bound_degree(g) <= 6);
  }
  auto small = triangular_lattice_code(4, 4);
  auto d = distance_exact(small, 6);
  REQUIRE(d.distance.has_value());
  CHECK(*d.distance <= 6);
  CHECK_THROWS_AS(triangular_lattice_code(3, 5), ValidationError);
}

TEST_CASE("random local codes") {
  RandomLocalParams p{60, 0.1, 10, 10, 10, 42};
  auto g = random_local_code(p);
  CHECK(g == random_local_code(p));
  CHECK(g.k() == 6);
  CHECK(g.n() == 60);
  p.seed = 43;
  CHECK_FALSE(g == random_local_code(p));

  RandomLocalParams empty{20, 0.25, 0, 0, 0, 1};
  auto iso = random_local_code(empty);
  CHECK(iso.edge_count() == iso.k());

  CHECK_THROWS_AS(random_local_code({10, 0.15, 2, 2, 2, 0}), ValidationError);
  CHECK_THROWS_AS(random_local_code({10, 0.6, 2, 2, 2, 0}), ValidationError);

  // Stabilizer weights stay within 1 + D + D R + D^2 R when the windows tile the ring.
  for (auto [n, rate, delta] : std::vector<std::tuple<std::size_t, double, std::size_t>>{{40, 0.1, 10}, {36, 1.0 / 6, 6}, {30, 0.2, 5}})
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      auto h = random_local_code({n, rate, delta, delta, delta, seed});
      REQUIRE(validate_graph(h).ok);
      double bound = 1 + delta + delta * rate + delta * delta * rate;
      for (const auto& row : canonical_stabilizers(h).rows) CHECK(static_cast<double>(row.weight()) <= bound + 1e-9);
    }
}

TEST_CASE("Gilbert-Varshamov tools") {
  CHECK(qgv_tools(2, 0, 1).pauli_count == 6);
  CHECK(qgv_tools(5, 1, 2).pauli_count == 105);
  // Brute count of Paulis of weight 1..2 on 5 qubits.
  std::size_t brute = 0;
  for (std::size_t code = 1; code < 1024; ++code) {
    std::size_t w = 0;
    for (std::size_t q = 0, c = code; q < 5; ++q, c /= 4) w += c % 4 != 0;
    brute += w <= 2;
  }
  CHECK(qgv_tools(5, 1, 2).pauli_count == brute);
  // Monotone in k.
  for (std::size_t n : {50u, 200u, 1000u})
    for (std::size_t d = 1; 2 * d <= n; d += n / 10) {
      bool seen_false = false;
      for (std::size_t k = 0; k <= n; ++k) {
        bool ok = qgv_tools(n, k, d).satisfied;
        if (seen_false) CHECK_FALSE(ok);
        seen_false = seen_false || !ok;
      }
    }
  CHECK(qgv_tools(4, 0, 2).entropy == doctest::Approx(1.0));
  CHECK_THROWS_AS(qgv_tools(4, 0, 3), ValidationError);
  CHECK_THROWS_AS(qgv_tools(4, 0, 0), ValidationError);
}
