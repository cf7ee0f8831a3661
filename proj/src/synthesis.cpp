#include <algorithm>
#include <cassert>

#include "qgc/circuit.hpp"

namespace qgc {

namespace {

constexpr int kFree = -1;

// Misra-Gries state: ec[u][v] is the color of edge uv, at[u][c] the neighbour reached
// from u along color c.
struct MisraGries {
  std::vector<std::vector<int>> ec;
  std::vector<std::vector<int>> at;

  MisraGries(std::size_t n, std::size_t colors) : ec(n, std::vector<int>(n, kFree)), at(n, std::vector<int>(colors, kFree)) {}

  bool is_free(std::size_t x, int c) const { return at[x][c] == kFree; }
  int free_color(std::size_t x) const {
    for (std::size_t c = 0; c < at[x].size(); ++c)
      if (at[x][c] == kFree) return static_cast<int>(c);
    return kFree;
  }
  void paint(std::size_t a, std::size_t b, int c) {
    if (int old = ec[a][b]; old != kFree) {
      at[a][old] = kFree;
      at[b][old] = kFree;
    }
    ec[a][b] = ec[b][a] = c;
    if (c != kFree) {
      at[a][c] = static_cast<int>(b);
      at[b][c] = static_cast<int>(a);
    }
  }

  void color_edge(std::size_t u, std::size_t v0, const std::vector<std::vector<std::size_t>>& nbrs) {
    // Maximal fan at u starting with the uncolored edge u v0.
    std::vector<std::size_t> fan{v0};
    std::vector<bool> in_fan(ec.size(), false);
    in_fan[v0] = true;
    for (bool grew = true; grew;) {
      grew = false;
      for (auto w : nbrs[u]) {
        int cw = ec[u][w];
        if (in_fan[w] || cw == kFree || !is_free(fan.back(), cw)) continue;
        fan.push_back(w);
        in_fan[w] = true;
        grew = true;
        break;
      }
    }
    int c = free_color(u);
    int d = free_color(fan.back());
    assert(c != kFree && d != kFree);
    // Invert the cd-path from u: it leaves u along d since c is free at u.
    if (c != d) {
      std::vector<std::pair<std::size_t, std::size_t>> path;
      std::size_t x = u;
      int want = d;
      while (at[x][want] != kFree) {
        auto y = static_cast<std::size_t>(at[x][want]);
        path.emplace_back(x, y);
        x = y;
        want = want == d ? c : d;
      }
      std::vector<int> old;
      for (const auto& [a, b] : path) old.push_back(ec[a][b]);
      for (const auto& [a, b] : path) paint(a, b, kFree);
      for (std::size_t i = 0; i < path.size(); ++i) paint(path[i].first, path[i].second, old[i] == c ? d : c);
    }
    // First fan vertex with d free whose prefix is still a fan.
    std::size_t w = fan.size();
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (i > 0) {
        int ci = ec[u][fan[i]];
        if (ci == kFree || !is_free(fan[i - 1], ci)) break;
      }
      if (is_free(fan[i], d)) {
        w = i;
        break;
      }
    }
    if (w == fan.size()) throw std::logic_error("edge coloring: fan rotation failed");
    for (std::size_t i = 0; i < w; ++i) {
      int next = ec[u][fan[i + 1]];
      paint(u, fan[i + 1], kFree);
      paint(u, fan[i], next);
    }
    paint(u, fan[w], d);
  }
};

// Colored CZ layers over the given physical edges, in color order.
std::vector<std::vector<Gate>> cz_block(const CodeGraph& g, const std::vector<Edge>& edges) {
  auto col = edge_coloring(g.node_count(), edges);
  std::vector<std::vector<Gate>> layers(col.color_count);
  for (std::size_t i = 0; i < col.edges.size(); ++i) {
    const auto& [a, b] = col.edges[i];
    layers[col.color[i]].push_back(Gate::cz(g.qubit_of(a), g.qubit_of(b)));
  }
  return layers;
}

void append_layers(Circuit& c, const std::vector<std::vector<Gate>>& layers) {
  for (const auto& l : layers) c.add_layer(l);
}

void append_reversed(Circuit& c, const std::vector<std::vector<Gate>>& layers) {
  for (auto it = layers.rbegin(); it != layers.rend(); ++it) c.add_layer(*it);
}

void require_encodable(const CodeGraph& g) {
  auto rep = validate_graph(g);
  if (!rep) throw ValidationError("invalid graph: " + rep.message);
  if (!is_pivot_normalized(g))
    throw ValidationError("encoding circuits need every pivot adjacent to its own input only; apply normalize_inputs");
}

std::vector<Edge> input_output_edges(const CodeGraph& g) {
  std::vector<Edge> e;
  for (auto u : g.inputs()) {
    auto p = g.pivot_of(u);
    nb::o(g, u).for_each([&](std::size_t v) { e.emplace_back(std::min(p, v), std::max(p, v)); });
  }
  return e;
}

std::vector<Edge> physical_edges(const CodeGraph& g) {
  std::vector<Edge> e;
  for (const auto& [a, b] : g.edges())
    if (g.role(a) != Role::Input && g.role(b) != Role::Input) e.emplace_back(a, b);
  return e;
}

std::vector<Gate> pivot_h_layer(const CodeGraph& g) {
  std::vector<Gate> l;
  for (auto p : g.pivots()) l.push_back(Gate::h(g.qubit_of(p)));
  return l;
}

std::vector<std::size_t> pivot_wires(const CodeGraph& g) {
  std::vector<std::size_t> w;
  for (auto p : g.pivots()) w.push_back(g.qubit_of(p));
  return w;
}

}  // namespace

EdgeColoring edge_coloring(std::size_t node_count, const std::vector<Edge>& edges) {
  EdgeColoring out;
  out.edges = edges;
  out.color.assign(edges.size(), 0);
  if (edges.empty()) return out;
  std::vector<std::vector<std::size_t>> nbrs(node_count);
  for (const auto& [a, b] : edges) {
    if (a == b || a >= node_count || b >= node_count) throw ValidationError("edge_coloring: bad edge");
    nbrs[a].push_back(b);
    nbrs[b].push_back(a);
  }
  std::size_t delta = 0;
  for (const auto& n : nbrs) delta = std::max(delta, n.size());
  MisraGries mg(node_count, delta + 1);
  for (const auto& [a, b] : edges) {
    if (mg.ec[a][b] != kFree) throw ValidationError("edge_coloring: duplicate edge");
    mg.color_edge(a, b, nbrs);
  }
  std::vector<int> used(delta + 1, -1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    int c = mg.ec[edges[i].first][edges[i].second];
    if (used[c] < 0) used[c] = 0;
    out.color[i] = static_cast<std::size_t>(c);
  }
  // Compact to the colors actually used, keeping their order.
  std::vector<std::size_t> remap(delta + 1, 0);
  for (std::size_t c = 0; c <= delta; ++c)
    if (used[c] == 0) remap[c] = out.color_count++;
  for (auto& c : out.color) c = remap[c];
  return out;
}

bool edge_coloring_proper(const EdgeColoring& c) {
  std::size_t N = 0;
  for (const auto& [a, b] : c.edges) N = std::max({N, a + 1, b + 1});
  std::vector<std::vector<bool>> seen(N, std::vector<bool>(c.color_count, false));
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    if (c.color[i] >= c.color_count) return false;
    for (auto v : {c.edges[i].first, c.edges[i].second}) {
      if (seen[v][c.color[i]]) return false;
      seen[v][c.color[i]] = true;
    }
  }
  return true;
}

Circuit encoding_circuit(const CodeGraph& g) {
  require_encodable(g);
  Circuit c(g.n());
  c.input_wires = pivot_wires(g);
  std::vector<Gate> prep;
  for (auto v : g.outputs()) prep.push_back(Gate::prep_plus(g.qubit_of(v)));
  c.add_layer(prep);
  append_layers(c, cz_block(g, input_output_edges(g)));
  if (g.k() > 0) c.add_layer(pivot_h_layer(g));
  append_layers(c, cz_block(g, physical_edges(g)));
  return c;
}

std::pair<Circuit, CodeGraph> logical_sqrt_x(const CodeGraph& g, std::size_t u) {
  if (u >= g.node_count() || g.role(u) != Role::Input)
    throw ValidationError("logical_sqrt_x: node " + std::to_string(u) + " is not an input");
  require_encodable(g);
  auto nbrs = g.adj(u).ones();
  std::vector<Edge> clique;
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) clique.emplace_back(nbrs[i], nbrs[j]);
  Circuit c(g.n());
  c.input_wires = pivot_wires(g);
  append_layers(c, cz_block(g, clique));
  std::vector<Gate> s;
  for (auto v : nbrs) s.push_back(Gate::s(g.qubit_of(v)));
  c.add_layer(s);
  return {std::move(c), local_complementation(g, u)};
}

Circuit logical_diagonal(const CodeGraph& g, const Gate& u) {
  require_encodable(g);
  if (!u.is_diagonal()) throw ValidationError("logical_diagonal: gate is not diagonal");
  Gate mapped = u;
  for (auto& w : mapped.wires) {
    if (w >= g.k()) throw DimensionError("logical_diagonal: logical wire out of range");
    w = g.qubit_of(g.pivots()[w]);
  }
  auto b2 = cz_block(g, physical_edges(g));
  Circuit c(g.n());
  c.input_wires = pivot_wires(g);
  append_reversed(c, b2);
  c.add_layer(pivot_h_layer(g));
  c.add_layer({mapped});
  c.add_layer(pivot_h_layer(g));
  append_layers(c, b2);
  return c;
}

Circuit logical_generic(const CodeGraph& g, const Circuit& u) {
  require_encodable(g);
  if (u.n_wires != g.k())
    throw DimensionError("logical_generic: circuit has " + std::to_string(u.n_wires) + " wires, code has " +
                         std::to_string(g.k()) + " logical qubits");
  auto piv = pivot_wires(g);
  auto b1 = cz_block(g, input_output_edges(g));
  auto b2 = cz_block(g, physical_edges(g));
  Circuit c(g.n());
  c.input_wires = piv;
  append_reversed(c, b2);
  if (g.k() > 0) c.add_layer(pivot_h_layer(g));
  append_reversed(c, b1);
  for (const auto& layer : u.layers) {
    std::vector<Gate> mapped;
    for (auto gate : layer) {
      if (gate.is_prep()) throw ValidationError("logical_generic: logical circuit may not prepare wires");
      for (auto& w : gate.wires) w = piv[w];
      mapped.push_back(std::move(gate));
    }
    c.add_layer(std::move(mapped));
  }
  append_layers(c, b1);
  if (g.k() > 0) c.add_layer(pivot_h_layer(g));
  append_layers(c, b2);
  return c;
}

}  // namespace qgc
