#include "qgc/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <deque>
#include <limits>

#include "json_io.hpp"

namespace qgc {

namespace {
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
}

const char* role_name(Role r) {
  switch (r) {
    case Role::Input: return "input";
    case Role::Pivot: return "pivot";
    case Role::Output: return "output";
  }
  return "?";
}

CodeGraph::CodeGraph(std::size_t nodes) : role_(nodes, Role::Output), adj_(nodes, BitVec(nodes)) { refresh(); }

void CodeGraph::set_role(std::size_t v, Role r) {
  role_.at(v) = r;
  refresh();
}

void CodeGraph::add_edge(std::size_t a, std::size_t b) {
  if (a >= node_count() || b >= node_count()) throw DimensionError("add_edge: unknown node");
  if (a == b) throw ValidationError("add_edge: self-edge at node " + std::to_string(a));
  adj_[a].set(b);
  adj_[b].set(a);
}

void CodeGraph::remove_edge(std::size_t a, std::size_t b) {
  adj_[a].reset(b);
  adj_[b].reset(a);
}

void CodeGraph::toggle_edge(std::size_t a, std::size_t b) {
  if (a == b) throw ValidationError("toggle_edge: self-edge at node " + std::to_string(a));
  adj_[a].flip(b);
  adj_[b].flip(a);
}

std::size_t CodeGraph::edge_count() const {
  std::size_t c = 0;
  for (const auto& r : adj_) c += r.popcount();
  return c / 2;
}

std::vector<Edge> CodeGraph::edges() const {
  std::vector<Edge> e;
  for (std::size_t a = 0; a < node_count(); ++a)
    for (std::size_t b = adj_[a].next(a + 1); b < node_count(); b = adj_[a].next(b + 1)) e.emplace_back(a, b);
  return e;
}

std::size_t CodeGraph::max_degree() const {
  std::size_t d = 0;
  for (std::size_t v = 0; v < node_count(); ++v) d = std::max(d, degree(v));
  return d;
}

std::size_t CodeGraph::min_degree() const {
  if (node_count() == 0) return 0;
  std::size_t d = kNone;
  for (std::size_t v = 0; v < node_count(); ++v) d = std::min(d, degree(v));
  return d;
}

void CodeGraph::set_pivot_match(std::vector<Edge> match) {
  std::sort(match.begin(), match.end());
  match_ = std::move(match);
}

std::size_t CodeGraph::pivot_of(std::size_t input) const {
  for (const auto& [u, p] : match_)
    if (u == input) return p;
  throw ValidationError("node " + std::to_string(input) + " has no matched pivot");
}

std::size_t CodeGraph::input_of(std::size_t pivot) const {
  for (const auto& [u, p] : match_)
    if (p == pivot) return u;
  throw ValidationError("node " + std::to_string(pivot) + " is not a matched pivot");
}

std::vector<std::size_t> CodeGraph::pivots() const {
  std::vector<std::size_t> r;
  for (auto u : inputs_) r.push_back(pivot_of(u));
  return r;
}

std::vector<std::size_t> CodeGraph::outputs() const {
  std::vector<std::size_t> r;
  for (auto v : numbering_)
    if (role_[v] == Role::Output) r.push_back(v);
  return r;
}

void CodeGraph::set_numbering(std::vector<std::size_t> order) {
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> expect;
  for (std::size_t v = 0; v < node_count(); ++v)
    if (role_[v] != Role::Input) expect.push_back(v);
  if (sorted != expect) throw ValidationError("numbering must list every non-input node exactly once");
  numbering_ = std::move(order);
  custom_numbering_ = true;
  refresh();
}

bool CodeGraph::has_default_numbering() const {
  return std::is_sorted(numbering_.begin(), numbering_.end());
}

void CodeGraph::refresh() {
  std::size_t N = node_count();
  inputs_.clear();
  in_mask_ = BitVec(N);
  piv_mask_ = BitVec(N);
  out_mask_ = BitVec(N);
  phys_mask_ = BitVec(N);
  for (std::size_t v = 0; v < N; ++v) {
    switch (role_[v]) {
      case Role::Input: inputs_.push_back(v); in_mask_.set(v); break;
      case Role::Pivot: piv_mask_.set(v); phys_mask_.set(v); break;
      case Role::Output: out_mask_.set(v); phys_mask_.set(v); break;
    }
  }
  bool keep = custom_numbering_ && numbering_.size() == N - inputs_.size();
  if (keep)
    for (auto v : numbering_)
      if (v >= N || role_[v] == Role::Input) keep = false;
  if (!keep) {
    numbering_.clear();
    for (std::size_t v = 0; v < N; ++v)
      if (role_[v] != Role::Input) numbering_.push_back(v);
    custom_numbering_ = false;
  }
  qubit_.assign(N, kNone);
  for (std::size_t q = 0; q < numbering_.size(); ++q) qubit_[numbering_[q]] = q;
}

namespace nb {

BitVec set_of(const CodeGraph& g, std::size_t v) {
  BitVec b(g.node_count());
  b.set(v);
  return b;
}

BitVec all(const CodeGraph& g, const BitVec& a) {
  BitVec r(g.node_count());
  a.for_each([&](std::size_t v) { r ^= g.adj(v); });
  return r;
}

BitVec inputs(const CodeGraph& g, const BitVec& a) { return all(g, a) & g.input_mask(); }
BitVec pivots(const CodeGraph& g, const BitVec& a) { return all(g, a) & g.pivot_mask(); }
BitVec outputs(const CodeGraph& g, const BitVec& a) { return all(g, a) & g.output_mask(); }
BitVec non_inputs(const CodeGraph& g, const BitVec& a) { return all(g, a) & g.physical_mask(); }

BitVec o(const CodeGraph& g, std::size_t v) { return g.adj(v) & g.output_mask(); }
BitVec oi(const CodeGraph& g, std::size_t v) { return outputs(g, g.adj(v) & g.input_mask()); }
BitVec oip(const CodeGraph& g, std::size_t v) {
  return outputs(g, inputs(g, g.adj(v) & g.pivot_mask()));
}
BitVec No(const CodeGraph& g, std::size_t v) { return g.adj(v) & g.physical_mask(); }

}  // namespace nb

BinaryMatrix partial_adjacency(const CodeGraph& g) {
  BinaryMatrix m(g.k(), g.n());
  for (std::size_t r = 0; r < g.k(); ++r)
    g.adj(g.inputs()[r]).for_each([&](std::size_t v) {
      if (g.role(v) != Role::Input) m.set(r, g.qubit_of(v));
    });
  return m;
}

namespace {

// k x k submatrix of M on the matched pivot columns, rows and columns in logical order.
BinaryMatrix matched_block(const CodeGraph& g) {
  auto piv = g.pivots();
  BinaryMatrix a(g.k(), g.k());
  for (std::size_t r = 0; r < g.k(); ++r)
    for (std::size_t c = 0; c < g.k(); ++c) a.set(r, c, g.has_edge(g.inputs()[r], piv[c]));
  return a;
}

BinaryMatrix matched_block_inverse(const CodeGraph& g) {
  auto inv = gf2_inverse(matched_block(g));
  if (!inv) throw ValidationError("pivot choice is infeasible: matched pivot columns are dependent");
  return *inv;
}

void require_valid(const CodeGraph& g) {
  auto rep = validate_graph(g);
  if (!rep) throw ValidationError("invalid graph: " + rep.message);
}

// Graph-state generator X_v Z_{N_o(v)} restricted to physical qubits.
PauliString physical_generator(const CodeGraph& g, std::size_t v) {
  PauliString p(g.n());
  p.x.set(g.qubit_of(v));
  (g.adj(v) & g.physical_mask()).for_each([&](std::size_t w) { p.z.set(g.qubit_of(w)); });
  return p;
}

}  // namespace

ValidationReport validate_graph(const CodeGraph& g) {
  std::size_t N = g.node_count();
  for (std::size_t v = 0; v < N; ++v) {
    if (g.has_edge(v, v)) return ValidationReport::fail("self-edge at node " + std::to_string(v));
    if (g.role(v) == Role::Input && (g.adj(v) & g.input_mask()).any())
      return ValidationReport::fail("input-input edge at node " + std::to_string(v));
  }
  std::size_t pivot_count = g.pivot_mask().popcount();
  if (pivot_count != g.k())
    return ValidationReport::fail("|inputs| = " + std::to_string(g.k()) + " but |pivots| = " + std::to_string(pivot_count));
  if (g.pivot_match().size() != g.k()) return ValidationReport::fail("pivot_match must pair every input");
  BitVec seen_in(N), seen_piv(N);
  for (const auto& [u, p] : g.pivot_match()) {
    if (u >= N || p >= N) return ValidationReport::fail("pivot_match references an unknown node");
    if (g.role(u) != Role::Input || g.role(p) != Role::Pivot)
      return ValidationReport::fail("pivot_match pair (" + std::to_string(u) + "," + std::to_string(p) + ") has wrong roles");
    if (seen_in.get(u) || seen_piv.get(p))
      return ValidationReport::fail("pivot_match is not a bijection at (" + std::to_string(u) + "," + std::to_string(p) + ")");
    seen_in.set(u);
    seen_piv.set(p);
    if (!g.has_edge(u, p))
      return ValidationReport::fail("matched pair (" + std::to_string(u) + "," + std::to_string(p) + ") is not an edge");
  }
  // Pivot feasibility: row-reduce M with the matched pivot columns visited first.
  if (g.k() > 0) {
    auto m = partial_adjacency(g);
    std::vector<std::size_t> order;
    for (auto p : g.pivots()) order.push_back(g.qubit_of(p));
    for (std::size_t c = 0; c < g.n(); ++c)
      if (g.role(g.numbering()[c]) != Role::Pivot) order.push_back(c);
    auto red = gf2_rref_ordered(m, order);
    for (std::size_t i = 0; i < g.k(); ++i)
      if (i >= red.pivots.size() || red.pivots[i] != order[i])
        return ValidationReport::fail("pivot " + std::to_string(g.pivots()[i]) +
                                      " is not a pivot column of the partial adjacency matrix");
  }
  return ValidationReport::pass();
}

bool is_pivot_normalized(const CodeGraph& g) {
  for (const auto& [u, p] : g.pivot_match()) {
    BitVec in = g.adj(p) & g.input_mask();
    if (in.popcount() != 1 || !in.get(u)) return false;
  }
  return true;
}

CodeGraph normalize_inputs(const CodeGraph& g) {
  require_valid(g);
  auto inv = matched_block_inverse(g);
  CodeGraph out = g;
  const auto& ins = g.inputs();
  for (std::size_t r = 0; r < g.k(); ++r) {
    BitVec row(g.node_count());
    inv.rows[r].for_each([&](std::size_t c) { row ^= g.adj(ins[c]) & g.physical_mask(); });
    for (std::size_t v = 0; v < g.node_count(); ++v)
      if (g.role(v) != Role::Input && row.get(v) != g.has_edge(ins[r], v)) out.toggle_edge(ins[r], v);
  }
  return out;
}

StabilizerTableau canonical_stabilizers(const CodeGraph& g) {
  require_valid(g);
  StabilizerTableau t(g.n());
  auto piv = g.pivots();
  bool normalized = is_pivot_normalized(g);
  BinaryMatrix inv;
  if (!normalized) inv = matched_block_inverse(g);
  for (auto v : g.outputs()) {
    PauliString s = physical_generator(g, v);
    // Pivots whose generators cancel the input Z's of g_v.
    BitVec in_par(g.k());
    for (std::size_t r = 0; r < g.k(); ++r)
      if (g.has_edge(g.inputs()[r], v)) in_par.set(r);
    BitVec c(g.k());
    if (normalized) c = in_par;
    else
      for (std::size_t r = 0; r < g.k(); ++r) c.set(r, dot(inv.rows[r], in_par));
    c.for_each([&](std::size_t j) { s = multiply_commuting(s, physical_generator(g, piv[j])); });
    t.rows.push_back(std::move(s));
  }
  return t;
}

std::vector<LogicalPair> canonical_logicals(const CodeGraph& g) {
  require_valid(g);
  auto piv = g.pivots();
  bool normalized = is_pivot_normalized(g);
  BinaryMatrix inv;
  if (!normalized) inv = matched_block_inverse(g);
  std::vector<LogicalPair> out;
  for (std::size_t j = 0; j < g.k(); ++j) {
    LogicalPair lp{PauliString(g.n()), PauliString(g.n())};
    (g.adj(g.inputs()[j]) & g.physical_mask()).for_each([&](std::size_t w) { lp.x.z.set(g.qubit_of(w)); });
    if (normalized) {
      lp.z = physical_generator(g, piv[j]);
    } else {
      for (std::size_t c = 0; c < g.k(); ++c)
        if (inv.get(c, j)) lp.z = multiply_commuting(lp.z, physical_generator(g, piv[c]));
    }
    out.push_back(std::move(lp));
  }
  return out;
}

std::size_t distance_upper_bound_degree(const CodeGraph& g) {
  require_valid(g);
  if (g.k() == 0) throw ValidationError("distance bound undefined: code has no logical qubits");
  std::size_t best = kNone;
  BitVec touched(g.node_count());
  for (auto u : g.inputs()) {
    best = std::min(best, g.degree(u));
    touched |= g.adj(u) & g.physical_mask();
  }
  touched.for_each([&](std::size_t v) { best = std::min(best, nb::No(g, v).popcount() + 1); });
  return best;
}

std::size_t distance_upper_bound_degree_printed(const CodeGraph& g) {
  require_valid(g);
  if (g.k() == 0) throw ValidationError("distance bound undefined: code has no logical qubits");
  std::size_t best = kNone;
  BitVec touched(g.node_count());
  for (auto u : g.inputs()) {
    best = std::min(best, g.degree(u));
    touched |= g.adj(u) & g.physical_mask();
  }
  touched.for_each([&](std::size_t v) { best = std::min(best, g.degree(v)); });
  return best;
}

std::size_t stab_weight_bound(const CodeGraph& g) {
  require_valid(g);
  std::size_t dO = 0, dOI = 0, dPO = 0;
  for (auto v : g.outputs()) {
    dO = std::max(dO, g.degree(v));
    dOI = std::max(dOI, (g.adj(v) & g.input_mask()).popcount());
  }
  for (auto p : g.pivots()) dPO = std::max(dPO, nb::No(g, p).popcount());
  return 1 + dO + dOI * dPO;
}

bool is_css(const CodeGraph& g) {
  std::size_t N = g.node_count();
  std::vector<int> color(N, -1);
  for (std::size_t s = 0; s < N; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<std::size_t> q{s};
    while (!q.empty()) {
      auto v = q.front();
      q.pop_front();
      bool bad = false;
      g.adj(v).for_each([&](std::size_t w) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push_back(w);
        } else if (color[w] == color[v]) {
          bad = true;
        }
      });
      if (bad) return false;
    }
  }
  return true;
}

CodeGraph local_complementation(const CodeGraph& g, std::size_t v) {
  if (v >= g.node_count()) throw DimensionError("local_complementation: unknown node " + std::to_string(v));
  CodeGraph out = g;
  auto nbrs = g.adj(v).ones();
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) out.toggle_edge(nbrs[i], nbrs[j]);
  return out;
}

std::string graph_to_json(const CodeGraph& g) { return detail::graph_json(g).dump(); }

CodeGraph graph_from_json(const std::string& text) {
  return detail::graph_from_json_value(detail::parse_json(text));
}

std::string graph_hash(const CodeGraph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : graph_to_json(g)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace qgc
