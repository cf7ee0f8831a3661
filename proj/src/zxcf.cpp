#include "qgc/zxcf.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

#include "json_io.hpp"

namespace qgc {

const char* clifford_name(LocalClifford c) {
  switch (c) {
    case LocalClifford::I: return "I";
    case LocalClifford::S: return "S";
    case LocalClifford::Z: return "Z";
    case LocalClifford::SZ: return "SZ";
    case LocalClifford::H: return "H";
    case LocalClifford::HZ: return "HZ";
  }
  return "?";
}

std::optional<LocalClifford> clifford_from_name(std::string_view s) {
  for (auto c : {LocalClifford::I, LocalClifford::S, LocalClifford::Z, LocalClifford::SZ, LocalClifford::H, LocalClifford::HZ})
    if (s == clifford_name(c)) return c;
  return std::nullopt;
}

void conjugate_local(PauliString& p, std::size_t q, LocalClifford c) {
  switch (c) {
    case LocalClifford::I: break;
    case LocalClifford::S: p.conj_s(q); break;
    case LocalClifford::Z: p.conj_z(q); break;
    case LocalClifford::SZ: p.conj_z(q); p.conj_s(q); break;
    case LocalClifford::H: p.conj_h(q); break;
    case LocalClifford::HZ: p.conj_z(q); p.conj_h(q); break;
  }
}

LocalClifford times_s(LocalClifford c) {
  switch (c) {
    case LocalClifford::I: return LocalClifford::S;
    case LocalClifford::S: return LocalClifford::Z;
    case LocalClifford::Z: return LocalClifford::SZ;
    case LocalClifford::SZ: return LocalClifford::I;
    default: throw std::logic_error("times_s: Hadamard-decorated node");
  }
}

LocalClifford times_z(LocalClifford c) {
  switch (c) {
    case LocalClifford::I: return LocalClifford::Z;
    case LocalClifford::Z: return LocalClifford::I;
    case LocalClifford::S: return LocalClifford::SZ;
    case LocalClifford::SZ: return LocalClifford::S;
    case LocalClifford::H: return LocalClifford::HZ;
    case LocalClifford::HZ: return LocalClifford::H;
  }
  return c;
}

StabilizerTableau DecoratedGraphState::stabilizers() const {
  std::size_t m = size();
  StabilizerTableau t(m);
  for (std::size_t i = 0; i < m; ++i) {
    PauliString p(m);
    p.x.set(i);
    p.z = adj[i];
    for (std::size_t q = 0; q < m; ++q) conjugate_local(p, q, clifford[q]);
    t.rows.push_back(std::move(p));
  }
  return t;
}

DecoratedGraphState to_graph_state(const StabilizerTableau& state) {
  const std::size_t m = state.n;
  if (state.rows.size() != m) throw DimensionError("to_graph_state: need exactly one row per qubit");
  auto rows = state.rows;
  auto eliminate = [&](std::size_t pivot_row, std::size_t from, bool on_x, std::size_t col) {
    for (std::size_t j = from; j < m; ++j) {
      if (j == pivot_row) continue;
      bool hit = on_x ? rows[j].x.get(col) : rows[j].z.get(col);
      if (hit) rows[j] = multiply_commuting(rows[j], rows[pivot_row]);
    }
  };
  // Echelon on the X part; the remaining rows span the pure-Z subgroup.
  std::size_t r = 0;
  for (std::size_t col = 0; col < m && r < m; ++col) {
    std::size_t i = r;
    while (i < m && !rows[i].x.get(col)) ++i;
    if (i == m) continue;
    std::swap(rows[i], rows[r]);
    eliminate(r, 0, true, col);
    ++r;
  }
  std::vector<bool> hadamard(m, false);
  std::size_t zr = r;
  for (std::size_t col = 0; col < m && zr < m; ++col) {
    std::size_t i = zr;
    while (i < m && !rows[i].z.get(col)) ++i;
    if (i == m) continue;
    std::swap(rows[i], rows[zr]);
    eliminate(zr, r, false, col);
    hadamard[col] = true;
    ++zr;
  }
  if (zr != m) throw ValidationError("to_graph_state: rows are dependent");
  for (std::size_t t = 0; t < m; ++t)
    if (hadamard[t])
      for (auto& row : rows) row.conj_h(t);
  // Gauss-Jordan until the X part is the identity.
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t i = col;
    while (i < m && !rows[i].x.get(col)) ++i;
    if (i == m) throw std::logic_error("to_graph_state: X part not invertible after Hadamard fixes");
    std::swap(rows[i], rows[col]);
    eliminate(col, 0, true, col);
  }
  DecoratedGraphState out;
  out.adj.assign(m, BitVec(m));
  out.clifford.assign(m, LocalClifford::I);
  for (std::size_t i = 0; i < m; ++i) {
    bool diag = rows[i].z.get(i);
    out.adj[i] = rows[i].z;
    out.adj[i].reset(i);
    LocalClifford c = diag ? (rows[i].negative ? LocalClifford::SZ : LocalClifford::S)
                           : (rows[i].negative ? LocalClifford::Z : LocalClifford::I);
    if (hadamard[i]) {
      if (diag) throw std::logic_error("to_graph_state: phase on a Hadamard-fixed node");
      c = c == LocalClifford::Z ? LocalClifford::HZ : LocalClifford::H;
    }
    out.clifford[i] = c;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (out.adj[i].get(j) != out.adj[j].get(i)) throw std::logic_error("to_graph_state: asymmetric adjacency");
  return out;
}

const char* rule_name(ZxRule r) {
  switch (r) {
    case ZxRule::Edge: return "edge";
    case ZxRule::Hadamard: return "hadamard";
    case ZxRule::Rref: return "rref";
    case ZxRule::Clifford: return "clifford";
  }
  return "?";
}

namespace {

std::string node_str(std::size_t v) { return "node " + std::to_string(v); }
std::string edge_str(std::size_t a, std::size_t b) {
  return "edge (" + std::to_string(a) + "," + std::to_string(b) + ")";
}

bool is_hadamard(LocalClifford c) { return c == LocalClifford::H || c == LocalClifford::HZ; }

}  // namespace

std::vector<RuleViolation> zxcf_check_rules(const ZXDiagram& d) {
  std::vector<RuleViolation> out;
  const auto& g = d.graph;
  const std::size_t N = g.node_count();
  if (d.clifford.size() != N) {
    out.push_back({ZxRule::Edge, "expected one free-edge decoration per node"});
    return out;
  }
  for (std::size_t v = 0; v < N; ++v)
    if (g.has_edge(v, v)) out.push_back({ZxRule::Edge, "self-edge at " + node_str(v)});

  for (std::size_t v = 0; v < N; ++v) {
    if (g.role(v) == Role::Input || !is_hadamard(d.clifford[v])) continue;
    g.adj(v).for_each([&](std::size_t w) {
      if (g.role(w) == Role::Input)
        out.push_back({ZxRule::Hadamard, node_str(v) + " carries a Hadamard and touches input " + std::to_string(w)});
      else if (g.qubit_of(w) < g.qubit_of(v))
        out.push_back({ZxRule::Hadamard, node_str(v) + " carries a Hadamard and touches lower output " + std::to_string(w)});
    });
  }

  // RREF: pivot columns of M are exactly the matched pivots, in row order.
  if (g.k() > 0) {
    auto m = partial_adjacency(g);
    auto red = gf2_rref(m);
    if (!(red.matrix == m)) out.push_back({ZxRule::Rref, "partial adjacency matrix is not in reduced row-echelon form"});
    std::vector<std::size_t> declared;
    for (auto p : g.pivots()) declared.push_back(g.qubit_of(p));
    bool roles_ok = g.pivot_match().size() == g.k() && g.pivot_mask().popcount() == g.k();
    if (red.matrix == m && (!roles_ok || red.pivots != declared))
      out.push_back({ZxRule::Rref, "matched pivots differ from the pivot columns of the partial adjacency matrix"});
  } else if (g.pivot_mask().any()) {
    out.push_back({ZxRule::Rref, "pivots declared without inputs"});
  }

  for (std::size_t v = 0; v < N; ++v) {
    bool fixed = g.role(v) != Role::Output;
    if (fixed && d.clifford[v] != LocalClifford::I)
      out.push_back({ZxRule::Clifford, node_str(v) + " has role " + role_name(g.role(v)) + " and decoration " +
                                           clifford_name(d.clifford[v])});
  }
  for (const auto& [a, b] : g.edges()) {
    if (g.role(a) == Role::Input && g.role(b) == Role::Input)
      out.push_back({ZxRule::Clifford, "input-input " + edge_str(a, b)});
    if (g.role(a) == Role::Pivot && g.role(b) == Role::Pivot)
      out.push_back({ZxRule::Clifford, "pivot-pivot " + edge_str(a, b)});
  }
  return out;
}

Circuit tableau_to_encoder(const StabilizerTableau& t) {
  if (auto rep = tableau_validate(t); !rep) throw ValidationError("invalid tableau: " + rep.message);
  const std::size_t n = t.n;
  auto rows = t.rows;
  // Gates of U with U S_i U^dagger = Z_{q_i}; "SDG" marks S^dagger.
  struct Op {
    GateKind kind;
    std::size_t a, b;
  };
  std::vector<Op> ops;
  auto apply = [&](GateKind kind, std::size_t a, std::size_t b = 0) {
    ops.push_back({kind, a, b});
    for (auto& r : rows) {
      switch (kind) {
        case GateKind::H: r.conj_h(a); break;
        case GateKind::S: r.conj_sdg(a); break;
        case GateKind::Z: r.conj_z(a); break;
        case GateKind::CZ: r.conj_cz(a, b); break;
        default: break;
      }
    }
  };
  std::vector<bool> removed(n, false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto support = (rows[i].x | rows[i].z).ones();
    if (support.empty()) throw ValidationError("tableau row " + std::to_string(i) + " is the identity");
    std::size_t q = support.front();
    for (auto s : support) {
      bool x = rows[i].x.get(s), z = rows[i].z.get(s);
      if (x && z) apply(GateKind::S, s);
      if (x) apply(GateKind::H, s);
    }
    if (support.size() > 1) {
      apply(GateKind::H, q);
      for (auto s : support)
        if (s != q) apply(GateKind::CZ, s, q);
      apply(GateKind::H, q);
    }
    if (rows[i].negative) {
      apply(GateKind::H, q);
      apply(GateKind::Z, q);
      apply(GateKind::H, q);
    }
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (rows[j].z.get(q)) rows[j] = multiply_commuting(rows[j], rows[i]);
    removed[q] = true;
  }
  Circuit c(n);
  for (std::size_t q = 0; q < n; ++q)
    if (removed[q]) c.push_scheduled(Gate::prep_zero(q));
    else c.input_wires.push_back(q);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    switch (it->kind) {
      case GateKind::H: c.push_scheduled(Gate::h(it->a)); break;
      case GateKind::S: c.push_scheduled(Gate::s(it->a)); break;  // inverse of S^dagger
      case GateKind::Z: c.push_scheduled(Gate::z(it->a)); break;
      case GateKind::CZ: c.push_scheduled(Gate::cz(it->a, it->b)); break;
      default: break;
    }
  }
  return c;
}

namespace {

void require_rules(const ZXDiagram& d, std::initializer_list<ZxRule> rules, const char* stage) {
  for (const auto& v : zxcf_check_rules(d))
    for (auto r : rules)
      if (v.rule == r) throw std::logic_error(std::string("encoder_to_zxcf: ") + stage + ": " + rule_name(r) + " rule: " + v.detail);
}

}  // namespace

ZXDiagram encoder_to_zxcf(const Circuit& c, std::size_t k) {
  auto sim = simulate_stabilizer(c);
  const std::size_t n = c.n_wires;
  if (sim.inputs.size() != k)
    throw DimensionError("encoder_to_zxcf: circuit has " + std::to_string(sim.inputs.size()) + " inputs, expected " +
                         std::to_string(k));
  const std::size_t m = k + n;
  auto lift = [&](const PauliString& p) {
    PauliString out(m);
    p.x.for_each([&](std::size_t q) { out.x.set(k + q); });
    p.z.for_each([&](std::size_t q) { out.z.set(k + q); });
    out.negative = p.negative;
    return out;
  };
  // Choi state: references 0..k-1, outputs k..k+n-1.
  StabilizerTableau choi(m);
  for (const auto& s : sim.stabilizers.rows) choi.rows.push_back(lift(s));
  for (std::size_t j = 0; j < k; ++j) {
    auto x = lift(sim.logicals[j].x);
    x.x.set(j);
    auto z = lift(sim.logicals[j].z);
    z.z.set(j);
    choi.rows.push_back(std::move(x));
    choi.rows.push_back(std::move(z));
  }
  auto state = to_graph_state(choi);

  // Input-side unitaries do not change the code: drop input decorations and input-input edges.
  ZXDiagram d{CodeGraph(m), state.clifford};
  for (std::size_t u = 0; u < k; ++u) d.graph.set_role(u, Role::Input);
  for (std::size_t a = 0; a < m; ++a)
    state.adj[a].for_each([&](std::size_t b) {
      if (a < b && !(a < k && b < k)) d.graph.add_edge(a, b);
    });
  for (std::size_t u = 0; u < k; ++u) d.clifford[u] = LocalClifford::I;

  // Row-reduce the input rows of the partial adjacency matrix.
  if (k > 0) {
    auto red = gf2_rref(partial_adjacency(d.graph));
    if (red.pivots.size() != k) throw ValidationError("encoder_to_zxcf: circuit is not an isometry");
    std::vector<Edge> match;
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t col = 0; col < n; ++col)
        if (d.graph.has_edge(r, k + col) != red.matrix.get(r, col)) d.graph.toggle_edge(r, k + col);
      d.graph.set_role(k + red.pivots[r], Role::Pivot);
      match.emplace_back(r, k + red.pivots[r]);
    }
    d.graph.set_pivot_match(match);
  }
  require_rules(d, {ZxRule::Edge, ZxRule::Hadamard, ZxRule::Rref}, "after row reduction");

  // Clear pivot phases by local complementation about the matched input.
  for (const auto& [u, p] : d.graph.pivot_match()) {
    for (int iter = 0; d.clifford[p] != LocalClifford::I; ++iter) {
      if (iter == 4) throw std::logic_error("encoder_to_zxcf: pivot phase did not clear");
      auto nbrs = d.graph.adj(u).ones();
      for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) d.graph.toggle_edge(nbrs[i], nbrs[j]);
      for (auto w : nbrs) d.clifford[w] = times_s(d.clifford[w]);
    }
  }
  require_rules(d, {ZxRule::Edge, ZxRule::Hadamard, ZxRule::Rref}, "after pivot phases");

  // Remove pivot-pivot edges: toggle N(u1) x N(u2) with multiplicity; a doubled
  // self-pair on a common neighbour becomes a Z decoration.
  auto piv = d.graph.pivots();
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = i + 1; j < piv.size(); ++j) {
      if (!d.graph.has_edge(piv[i], piv[j])) continue;
      auto n1 = d.graph.adj(d.graph.inputs()[i]).ones();
      auto n2 = d.graph.adj(d.graph.inputs()[j]).ones();
      for (auto a : n1)
        for (auto b : n2) {
          if (a == b) d.clifford[a] = times_z(d.clifford[a]);
          else d.graph.toggle_edge(a, b);
        }
    }
  require_rules(d, {ZxRule::Edge, ZxRule::Hadamard, ZxRule::Rref, ZxRule::Clifford}, "after pivot edges");
  return d;
}

ZXDiagram compile_tableau(const StabilizerTableau& t) {
  return encoder_to_zxcf(tableau_to_encoder(t), t.n - t.rows.size());
}

namespace {

void require_zxcf(const ZXDiagram& d) {
  auto v = zxcf_check_rules(d);
  if (!v.empty()) throw ValidationError(std::string("not a ZXCF: ") + rule_name(v.front().rule) + " rule: " + v.front().detail);
}

}  // namespace

CodeGraph zxcf_to_graph(const ZXDiagram& d) {
  require_zxcf(d);
  return d.graph;
}

StabilizerTableau zxcf_to_tableau(const ZXDiagram& d) {
  require_zxcf(d);
  auto t = canonical_stabilizers(d.graph);
  for (auto& row : t.rows)
    for (std::size_t v = 0; v < d.graph.node_count(); ++v)
      if (d.graph.role(v) != Role::Input) conjugate_local(row, d.graph.qubit_of(v), d.clifford[v]);
  return t;
}

std::string zxcf_to_json(const ZXDiagram& d) {
  auto j = detail::graph_json(d.graph);
  detail::Json cl = detail::Json::object();
  for (std::size_t v = 0; v < d.graph.node_count(); ++v) cl[std::to_string(v)] = clifford_name(d.clifford.at(v));
  j["cliffords"] = cl;
  j["numbering"] = d.graph.numbering();
  return j.dump();
}

ZXDiagram zxcf_from_json(const std::string& text) {
  auto j = detail::parse_json(text);
  ZXDiagram d{detail::graph_from_json_value(j), {}};
  if (!j.contains("cliffords") || !j["cliffords"].is_object()) throw ParseError("ZXCF JSON needs a \"cliffords\" object");
  d.clifford.assign(d.graph.node_count(), LocalClifford::I);
  std::vector<bool> seen(d.graph.node_count(), false);
  for (const auto& [key, val] : j["cliffords"].items()) {
    std::size_t v;
    try {
      v = std::stoul(key);
    } catch (const std::logic_error&) {
      throw ParseError("cliffords key \"" + key + "\" is not a node id");
    }
    if (v >= d.graph.node_count()) throw ValidationError("cliffords references unknown node " + key);
    if (!val.is_string()) throw ParseError("cliffords values must be strings");
    auto c = clifford_from_name(val.get<std::string>());
    if (!c) throw ParseError("unknown local Clifford \"" + val.get<std::string>() + "\"");
    d.clifford[v] = *c;
    seen[v] = true;
  }
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (!seen[v]) throw ParseError("cliffords missing node " + std::to_string(v));
  return d;
}

namespace {

BigInt pow2(std::size_t e) { return BigInt(1) << e; }

void require_counts(std::size_t n, std::size_t k) {
  if (k > n) throw DimensionError("counting: k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
}

BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  if (num % den != 0) throw std::logic_error(std::string(what) + ": inexact division");
  return num / den;
}

}  // namespace

BigInt count_tableaus(std::size_t n, std::size_t k) {
  require_counts(n, k);
  BigInt num = 1, den = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    num *= pow2(2 * n - i + 2) - pow2(i);
    den *= pow2(k) - pow2(i - 1);
  }
  return exact_div(num, den, "count_tableaus");
}

BigInt count_zxcf_recursive(std::size_t n, std::size_t k, std::size_t p, std::size_t o) {
  require_counts(n, k);
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, BigInt> memo;
  auto f = [&](auto&& self, std::size_t n_, std::size_t k_, std::size_t p_, std::size_t o_) -> BigInt {
    if (n_ == 0 && k_ == 0) return 1;
    auto key = std::make_tuple(n_, k_, p_, o_);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt total = 0;
    if (n_ != k_) total += pow2(o_) * self(self, n_ - 1, k_, p_ + 1, o_);
    if (k_ != 0) total += (pow2(2 * p_ + o_ + 2) + 2) * self(self, n_ - 1, k_ - 1, p_, o_ + 1);
    memo.emplace(key, total);
    return total;
  };
  return f(f, n, k, p, o);
}

BigInt count_zxcf_closed(std::size_t n, std::size_t k, std::size_t p, std::size_t o) {
  require_counts(n, k);
  BigInt num = pow2(o * (n - k)), den = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    num *= (pow2(n + 1) - pow2(i)) * (pow2(n - i + 1 + 2 * p + o) + 1);
    den *= pow2(k) - pow2(i - 1);
  }
  return exact_div(num, den, "count_zxcf_closed");
}

BigInt count_zxcf(std::size_t n, std::size_t k) {
  auto rec = count_zxcf_recursive(n, k, 0, 0);
  if (rec != count_zxcf_closed(n, k, 0, 0)) throw std::logic_error("count_zxcf: recursion and closed form disagree");
  return rec;
}

}  // namespace qgc
