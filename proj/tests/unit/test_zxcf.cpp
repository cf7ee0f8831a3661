#include <doctest.h>

#include "oracles.hpp"
#include "qgc/zxcf.hpp"

using namespace qgc;

namespace {

const StabilizerTableau kShor = StabilizerTableau::from_strings(
    {"ZZIIIIIII", "ZIZIIIIII", "IIIZZIIII", "IIIZIZIII", "IIIIIIZZI", "IIIIIIZIZ", "XXXXXXIII", "XXXIIIXXX"});
const StabilizerTableau kSteane =
    StabilizerTableau::from_strings({"IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"});
const StabilizerTableau kFive = StabilizerTableau::from_strings({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"});

bool round_trips(const StabilizerTableau& t) {
  auto d = compile_tableau(t);
  return zxcf_check_rules(d).empty() && same_group(zxcf_to_tableau(d), t);
}

}  // namespace

TEST_CASE("local Clifford names and conjugation") {
  for (auto c : {LocalClifford::I, LocalClifford::S, LocalClifford::Z, LocalClifford::SZ, LocalClifford::H, LocalClifford::HZ})
    CHECK(clifford_from_name(clifford_name(c)) == c);
  CHECK_FALSE(clifford_from_name("T").has_value());
  // SZ = S*Z: X -> -X -> -Y.
  auto p = PauliString::parse("X");
  conjugate_local(p, 0, LocalClifford::SZ);
  CHECK(p == PauliString::parse("-Y"));
  p = PauliString::parse("X");
  conjugate_local(p, 0, LocalClifford::HZ);
  CHECK(p == PauliString::parse("-Z"));
}

TEST_CASE("graph form of random stabilizer states reproduces the state") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t m = 1 + rng() % 7;
    auto st = oracle::random_tableau(m, m, rng);
    auto gs = to_graph_state(st);
    CHECK(same_group(gs.stabilizers(), st));
    // Hadamard nodes only touch higher indices.
    for (std::size_t v = 0; v < m; ++v)
      if (gs.clifford[v] == LocalClifford::H || gs.clifford[v] == LocalClifford::HZ)
        gs.adj[v].for_each([&](std::size_t w) { CHECK(w > v); });
  }
}

TEST_CASE("tableau_to_encoder reproduces the group") {
  CHECK(simulate_stabilizer(tableau_to_encoder(StabilizerTableau(3))).stabilizers.rows.empty());
  auto diag = tableau_to_encoder(StabilizerTableau::from_strings({"ZII", "IZI"}));
  CHECK(diag.gate_count() == 2);
  CHECK(diag.input_wires == std::vector<std::size_t>{2});
  for (const auto& t : {kShor, kSteane, kFive}) CHECK(same_group(simulate_stabilizer(tableau_to_encoder(t)).stabilizers, t));
  oracle::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 7, r = rng() % (n + 1);
    auto t = oracle::random_tableau(n, r, rng);
    CHECK(same_group(simulate_stabilizer(tableau_to_encoder(t)).stabilizers, t));
  }
}

TEST_CASE("identity encoder compiles to a single input-pivot edge") {
  Circuit c(1);
  auto d = encoder_to_zxcf(c, 1);
  CHECK(d.graph.k() == 1);
  CHECK(d.graph.n() == 1);
  CHECK(d.graph.edges() == std::vector<Edge>{{0, 1}});
  CHECK(d.clifford == std::vector<LocalClifford>{LocalClifford::I, LocalClifford::I});
}

TEST_CASE("named codes round-trip through the canonical form") {
  CHECK(round_trips(kShor));
  CHECK(round_trips(kSteane));
  CHECK(round_trips(kFive));
}

TEST_CASE("random tableaus round-trip and compile canonically") {
  oracle::Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + rng() % 8, r = rng() % (n + 1);
    auto t = oracle::random_tableau(n, r, rng);
    auto d = compile_tableau(t);
    REQUIRE(zxcf_check_rules(d).empty());
    CHECK(oracle::brute_same_group(zxcf_to_tableau(d), t));
    CHECK(compile_tableau(oracle::resample(t, rng)) == d);
  }
}

TEST_CASE("rule checker flags each rule") {
  auto d = compile_tableau(kFive);
  REQUIRE(zxcf_check_rules(d).empty());
  auto piv = d.graph.pivots()[0];
  auto bad = d;
  bad.clifford[piv] = LocalClifford::S;
  auto v = zxcf_check_rules(bad);
  REQUIRE(!v.empty());
  CHECK(v[0].rule == ZxRule::Clifford);

  // H-decorated output adjacent to an input.
  CodeGraph g(3);
  g.set_role(0, Role::Input);
  g.set_role(1, Role::Pivot);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.set_pivot_match({{0, 1}});
  ZXDiagram h{g, {LocalClifford::I, LocalClifford::I, LocalClifford::H}};
  auto hv = zxcf_check_rules(h);
  REQUIRE(hv.size() == 1);
  CHECK(hv[0].rule == ZxRule::Hadamard);

  // Non-reduced partial adjacency.
  CodeGraph r(5);
  r.set_role(0, Role::Input);
  r.set_role(1, Role::Input);
  r.set_role(2, Role::Pivot);
  r.set_role(3, Role::Pivot);
  r.add_edge(0, 2);
  r.add_edge(0, 3);
  r.add_edge(1, 3);
  r.set_pivot_match({{0, 2}, {1, 3}});
  ZXDiagram rd{r, std::vector<LocalClifford>(5, LocalClifford::I)};
  auto rv = zxcf_check_rules(rd);
  REQUIRE(!rv.empty());
  CHECK(rv[0].rule == ZxRule::Rref);
}

TEST_CASE("ZXCF JSON round trip") {
  auto d = compile_tableau(kShor);
  auto back = zxcf_from_json(zxcf_to_json(d));
  CHECK(back == d);
  CHECK(zxcf_to_json(back) == zxcf_to_json(d));
  CHECK_THROWS_AS(zxcf_from_json("{\"n\":1}"), ParseError);
}

TEST_CASE("counting identities") {
  CHECK(count_tableaus(1, 0) == 1);
  CHECK(count_tableaus(1, 1) == 6);
  CHECK(count_zxcf(0, 0) == 1);
  CHECK(count_zxcf(1, 1) == 6);
  CHECK_THROWS_AS(count_tableaus(1, 2), DimensionError);
  for (std::size_t n = 0; n <= 8; ++n)
    for (std::size_t k = 0; k <= n; ++k) CHECK(count_zxcf(n, k) == count_tableaus(n, k));
  for (std::size_t n = 0; n <= 5; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      for (std::size_t p = 0; p <= 2; ++p)
        for (std::size_t o = 0; o <= 2; ++o)
          CHECK(count_zxcf_recursive(n, k, p, o) == count_zxcf_closed(n, k, p, o));
}

TEST_CASE("count_tableaus(2,1) matches brute-force enumeration") {
  // Single-row tableaus on 2 qubits are the non-identity signed Paulis.
  std::size_t count = 0;
  for (int code = 1; code < 16; ++code)
    for (int s = 0; s < 2; ++s) ++count;
  CHECK(count_tableaus(2, 1) == count);
  // n=1,k=1: six signed single-qubit stabilizer states.
  CHECK(count_tableaus(1, 1) == 6);
}
