#include "qgc/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <random>
#include <set>

namespace qgc {

namespace {

void require_valid(const CodeGraph& g, const char* what) {
  auto rep = validate_graph(g);
  if (!rep) throw std::logic_error(std::string(what) + " produced an invalid graph: " + rep.message);
}

}  // namespace

StabilizerTableau named_code(const std::string& name) {
  if (name == "shor9")
    return StabilizerTableau::from_strings({"ZZIIIIIII", "ZIZIIIIII", "IIIZZIIII", "IIIZIZIII", "IIIIIIZZI",
                                            "IIIIIIZIZ", "XXXXXXIII", "XXXIIIXXX"});
  if (name == "steane7")
    return StabilizerTableau::from_strings({"IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"});
  if (name == "five_qubit") return StabilizerTableau::from_strings({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"});
  throw ValidationError("unknown named code '" + name + "'");
}

std::vector<std::string> named_code_names() { return {"shor9", "steane7", "five_qubit"}; }

void assign_pivots(CodeGraph& g) {
  std::vector<Edge> match;
  BitVec used(g.node_count());
  for (auto u : g.inputs()) {
    std::size_t chosen = g.node_count();
    g.adj(u).for_each([&](std::size_t v) {
      if (chosen != g.node_count() || g.role(v) == Role::Input || used.get(v)) return;
      if ((g.adj(v) & g.input_mask()).popcount() == 1) chosen = v;
    });
    if (chosen == g.node_count()) throw ValidationError("input " + std::to_string(u) + " has no private neighbour");
    used.set(chosen);
    match.push_back({u, chosen});
  }
  for (auto [u, p] : match) g.set_role(p, Role::Pivot);
  g.set_pivot_match(match);
}

CodeGraph dodecahedral_code() {
  CodeGraph g(20);
  auto I = [](std::size_t j) { return j - 1; };
  auto O = [](std::size_t l) { return 3 + l; };
  const std::vector<Edge> edges = {
      {I(1), O(15)}, {I(1), O(9)},  {I(1), O(1)},  {I(2), O(16)}, {I(2), O(10)}, {I(2), O(2)},
      {O(16), O(14)}, {O(16), O(8)}, {O(9), O(11)}, {O(9), O(3)},  {O(10), O(12)}, {O(10), O(4)},
      {O(4), O(3)},  {O(4), I(3)},  {O(3), O(2)},  {O(2), O(1)},  {O(1), O(8)},  {O(8), O(7)},
      {O(15), O(13)}, {O(15), O(7)}, {O(7), I(4)},  {O(14), O(12)}, {O(14), I(4)}, {O(13), O(11)},
      {O(13), O(6)}, {O(12), O(5)}, {O(11), I(3)}, {O(6), I(4)},  {O(6), O(5)},  {O(5), I(3)}};
  for (auto [a, b] : edges) g.add_edge(a, b);
  for (std::size_t j = 1; j <= 4; ++j) g.set_role(I(j), Role::Input);
  const std::vector<Edge> match = {{I(1), O(1)}, {I(2), O(2)}, {I(3), O(4)}, {I(4), O(6)}};
  for (auto [u, p] : match) g.set_role(p, Role::Pivot);
  g.set_pivot_match(match);
  require_valid(g, "dodecahedral_code");
  return g;
}

bool is_hamming_codeword(std::uint64_t word) {
  std::uint64_t syndrome = 0;
  for (std::uint64_t j = 1; word; ++j, word >>= 1)
    if (word & 1U) syndrome ^= j;
  return syndrome == 0;
}

CodeGraph hypercube_code(std::size_t m) {
  if (m < 3 || m > 15 || !std::has_single_bit(m + 1))
    throw ValidationError("hypercube dimension must be 2^r - 1 with 3 <= m <= 15");
  std::size_t N = std::size_t{1} << m;
  CodeGraph g(N);
  for (std::size_t v = 0; v < N; ++v)
    for (std::size_t j = 0; j < m; ++j)
      if (!(v >> j & 1U)) g.add_edge(v, v | (std::size_t{1} << j));
  std::vector<Edge> match;
  for (std::size_t v = 0; v < N; ++v)
    if (is_hamming_codeword(v)) {
      g.set_role(v, Role::Input);
      g.set_role(v ^ 1U, Role::Pivot);
      match.push_back({v, v ^ 1U});
    }
  g.set_pivot_match(match);
  require_valid(g, "hypercube_code");
  return g;
}

std::vector<Edge> icosahedron_edges() {
  return {{0, 1}, {0, 2},  {0, 6},  {0, 9},  {0, 10}, {1, 2},  {1, 11}, {1, 7},  {1, 10}, {2, 8},
          {2, 7}, {2, 9},  {3, 5},  {3, 4},  {3, 9},  {3, 6},  {3, 8},  {4, 5},  {4, 7},  {4, 11},
          {4, 8}, {5, 10}, {5, 11}, {5, 6},  {6, 9},  {6, 10}, {7, 8},  {7, 11}, {8, 9},  {10, 11}};
}

CodeGraph covered_icosahedron(std::size_t cover) {
  if (cover != 2 && cover != 5) throw ValidationError("covered icosahedron supports 2 or 5 sheets");
  // Faces {0,1,2} and {3,4,5} are punctured; an edge carries +1 (-1) when it crosses
  // the seam half-plane counterclockwise (clockwise) about the axis from {3,4,5} to {0,1,2}.
  struct Lift {
    std::size_t a, b;
    int wind;
  };
  const std::vector<Lift> lifts = {
      {0, 1, 0}, {0, 2, 0},  {0, 6, 0},  {0, 9, 0},  {0, 10, 0}, {1, 2, -1}, {1, 11, 0}, {1, 7, 0},
      {1, 10, 0}, {2, 8, 0}, {2, 7, 1},  {2, 9, 0},  {3, 5, 0},  {3, 4, 1},  {3, 9, 0},  {3, 6, 0},
      {3, 8, 0}, {4, 5, 0},  {4, 7, 0},  {4, 11, 0}, {4, 8, -1}, {5, 10, 0}, {5, 11, 0}, {5, 6, 0},
      {6, 9, 0}, {6, 10, 0}, {7, 8, -1}, {7, 11, 0}, {8, 9, 0},  {10, 11, 0}};
  CodeGraph g(12 * cover);
  auto node = [&](std::size_t v, long sheet) {
    long c = static_cast<long>(cover);
    return 12 * static_cast<std::size_t>(((sheet % c) + c) % c) + v;
  };
  for (std::size_t s = 0; s < cover; ++s)
    for (const auto& l : lifts) g.add_edge(node(l.a, static_cast<long>(s)), node(l.b, static_cast<long>(s) + l.wind));
  // Perimeter vertex 6 on sheet 0, then steps of 300 degrees about the axis.
  std::vector<std::size_t> inputs;
  if (cover == 2) inputs = {node(6, 0), node(6, 1)};
  else inputs = {node(6, 0), node(10, 1), node(11, 2), node(7, 3), node(8, 3), node(9, 4)};
  for (auto u : inputs) g.set_role(u, Role::Input);
  assign_pivots(g);
  require_valid(g, "covered_icosahedron");
  return g;
}

CodeGraph torus_layered_code(const std::vector<std::size_t>& layer_dims, std::size_t repeats) {
  if (layer_dims.empty()) throw ValidationError("torus needs at least one in-layer dimension");
  if (repeats == 0) throw ValidationError("torus needs at least one 3-layer block");
  std::size_t A = 1;
  for (auto d : layer_dims) {
    if (d == 0 || d % 3 != 0) throw ValidationError("torus dimensions must be positive multiples of 3");
    A *= d;
  }
  std::size_t layers = 3 * repeats;
  CodeGraph g(A * layers);
  std::vector<std::size_t> coord(layer_dims.size());
  auto decode = [&](std::size_t idx) {
    for (std::size_t j = 0; j < layer_dims.size(); ++j) {
      coord[j] = idx % layer_dims[j];
      idx /= layer_dims[j];
    }
  };
  auto encode = [&](const std::vector<std::size_t>& c) {
    std::size_t idx = 0;
    for (std::size_t j = layer_dims.size(); j-- > 0;) idx = idx * layer_dims[j] + c[j];
    return idx;
  };
  std::vector<std::size_t> index_of(A);
  for (std::size_t x = 0; x < A; ++x) {
    decode(x);
    std::size_t s = 0;
    for (auto c : coord) s += c;
    index_of[x] = s % 3;
    // In-layer neighbours along each dimension (+1 direction; the torus closes the rest).
    for (std::size_t j = 0; j < layer_dims.size(); ++j) {
      auto c = coord;
      c[j] = (c[j] + 1) % layer_dims[j];
      std::size_t y = encode(c);
      for (std::size_t l = 0; l < layers; ++l)
        if (x != y) g.add_edge(l * A + x, l * A + y);
    }
    for (std::size_t l = 0; l < layers; ++l) g.add_edge(l * A + x, ((l + 1) % layers) * A + x);
  }
  std::vector<Edge> match;
  for (std::size_t l = 0; l < layers; ++l)
    for (std::size_t x = 0; x < A; ++x) {
      std::size_t v = l * A + x, block = l - l % 3;
      if (l % 3 == 0 && index_of[x] == 0) match.push_back({v, (block + 1) * A + x});
      if (l % 3 == 2 && index_of[x] == 1) match.push_back({v, (block + 1) * A + x});
    }
  for (auto [u, p] : match) {
    g.set_role(u, Role::Input);
    g.set_role(p, Role::Pivot);
  }
  g.set_pivot_match(match);
  require_valid(g, "torus_layered_code");
  return g;
}

CodeGraph triangular_lattice_code(std::size_t a, std::size_t b) {
  if (a < 4 || b < 4) throw ValidationError("triangular lattice needs both dimensions >= 4");
  CodeGraph g(a * b);
  auto id = [&](std::size_t x, std::size_t y) { return (y % b) * a + (x % a); };
  for (std::size_t y = 0; y < b; ++y)
    for (std::size_t x = 0; x < a; ++x) {
      g.add_edge(id(x, y), id(x + 1, y));
      g.add_edge(id(x, y), id(x, y + 1));
      g.add_edge(id(x, y), id(x + 1, y + b - 1));
    }
  // Greedy packing: a node joins if no chosen input lies within distance 2.
  BitVec blocked(a * b);
  for (std::size_t v = 0; v < a * b; ++v) {
    if (blocked.get(v)) continue;
    g.set_role(v, Role::Input);
    BitVec ball = g.adj(v);
    ball.set(v);
    BitVec two = ball;
    ball.for_each([&](std::size_t w) { two |= g.adj(w); });
    blocked |= two;
  }
  assign_pivots(g);
  require_valid(g, "triangular_lattice_code");
  return g;
}

CodeGraph random_local_code(const RandomLocalParams& p) {
  if (p.n == 0) throw ValidationError("random local code needs n >= 1");
  double kd = p.rate * static_cast<double>(p.n);
  std::size_t k = static_cast<std::size_t>(std::llround(kd));
  if (p.rate <= 0.0 || std::abs(kd - static_cast<double>(k)) > 1e-9 || k == 0)
    throw ValidationError("rate * n must be a positive integer");
  if (2 * k > p.n) throw ValidationError("infeasible geometry: more inputs than non-pivot outputs");
  std::size_t n = p.n;
  CodeGraph g(n + k);
  std::vector<std::size_t> pivot_pos(k);
  BitVec is_pivot(n);
  for (std::size_t j = 0; j < k; ++j) {
    pivot_pos[j] = j * n / k;
    is_pivot.set(pivot_pos[j]);
  }
  std::set<Edge> candidates;
  auto add = [&](std::size_t a, std::size_t b) {
    if (a != b) candidates.insert({std::min(a, b), std::max(a, b)});
  };
  // Non-pivot outputs among the `width` ring positions starting floor(width/2) before pos.
  auto window = [&](std::size_t pos, std::size_t width) {
    std::vector<std::size_t> w;
    width = std::min(width, n);
    for (std::size_t t = 0; t < width; ++t) {
      std::size_t v = (pos + n - width / 2 + t) % n;
      if (!is_pivot.get(v)) w.push_back(v);
    }
    return w;
  };
  for (std::size_t j = 0; j < k; ++j) {
    for (auto o : window(pivot_pos[j], p.delta_i)) add(n + j, o);
    for (auto o : window(pivot_pos[j], p.delta_p)) add(pivot_pos[j], o);
  }
  std::size_t reach = std::min(p.delta_o / 2, n / 2);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t d = 1; d <= reach; ++d) {
      std::size_t w = (v + d) % n;
      if (!is_pivot.get(v) && !is_pivot.get(w)) add(v, w);
    }
  std::mt19937_64 rng(p.seed);
  for (auto [a, b] : candidates)
    if (rng() >> 63) g.add_edge(a, b);
  std::vector<Edge> match;
  for (std::size_t j = 0; j < k; ++j) {
    g.add_edge(n + j, pivot_pos[j]);
    g.set_role(n + j, Role::Input);
    g.set_role(pivot_pos[j], Role::Pivot);
    match.push_back({n + j, pivot_pos[j]});
  }
  g.set_pivot_match(match);
  require_valid(g, "random_local_code");
  return g;
}

GvReport qgv_tools(std::size_t n, std::size_t k, std::size_t d) {
  if (d < 1 || 2 * d > n) throw ValidationError("GV tools need 1 <= d <= n/2");
  if (k > n) throw DimensionError("k exceeds n");
  GvReport r;
  double x = static_cast<double>(d) / static_cast<double>(n);
  r.entropy = -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
  r.satisfied = static_cast<double>(n) * r.entropy + static_cast<double>(d) * std::log2(3.0) <
                static_cast<double>(n - k);
  BigInt binom = 1, pow3 = 1;
  for (std::size_t j = 1; j <= d; ++j) {
    binom = binom * (n - j + 1) / j;
    pow3 *= 3;
    r.pauli_count += pow3 * binom;
  }
  return r;
}

}  // namespace qgc
