#include "qgc/qlo.hpp"

#include <atomic>
#include <bit>
#include <deque>
#include <limits>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "qgc/parallel.hpp"

namespace qgc {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void require_valid(const CodeGraph& g) {
  auto rep = validate_graph(g);
  if (!rep) throw ValidationError("invalid graph: " + rep.message);
}

bool dark(Light l) { return l != Light::On; }

}  // namespace

// ---------------------------------------------------------------- game engine

QLOState qlo_initial_state(const QLOInstance& inst) {
  QLOState s;
  s.light = inst.initial;
  s.flipped = BitVec(inst.graph.node_count());
  return s;
}

QLOState qlo_apply(const QLOInstance& inst, const QLOState& s, const QLOMove& m) {
  const auto& g = inst.graph;
  if (m.node >= g.node_count()) throw DimensionError("qlo_apply: unknown node " + std::to_string(m.node));
  bool input = g.role(m.node) == Role::Input;
  QLOState out = s;
  if (m.kind == QLOMove::Destroy) {
    if (input) throw ValidationError("qlo_apply: input lights cannot be destroyed");
    out.light[m.node] = Light::Destroyed;
    ++out.move_count;
    return out;
  }
  if (input) {
    if (!inst.round1_allowed) throw ValidationError("qlo_apply: this instance has no round 1");
    if (s.move_count > 0) throw ValidationError("qlo_apply: round 1 is over");
  } else {
    if (inst.forbidden.get(m.node)) throw ValidationError("qlo_apply: switch " + std::to_string(m.node) + " is forbidden");
    if (inst.mandatory_once.get(m.node) && s.flipped.get(m.node))
      throw ValidationError("qlo_apply: switch " + std::to_string(m.node) + " may be flipped only once");
  }
  g.adj(m.node).for_each([&](std::size_t w) {
    if (out.light[w] == Light::On) out.light[w] = Light::Off;
    else if (out.light[w] == Light::Off) out.light[w] = Light::On;
  });
  out.flipped.flip(m.node);
  if (!input) {
    out.light[m.node] = Light::Destroyed;
    ++out.move_count;
  }
  return out;
}

bool qlo_goal_reached(const QLOInstance& inst, const QLOState& s) {
  const auto& g = inst.graph;
  bool mandatory_done = true;
  inst.mandatory_once.for_each([&](std::size_t v) { mandatory_done = mandatory_done && s.flipped.get(v); });
  if (!mandatory_done) return false;
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    bool in = g.role(v) == Role::Input;
    if (!in && !dark(s.light[v])) return false;
    if (in && inst.goal == QLOGoal::WeightReduction && !dark(s.light[v])) return false;
  }
  if (inst.goal == QLOGoal::Distance) {
    bool input_lit = false, input_flipped = false;
    for (auto u : g.inputs()) {
      input_lit = input_lit || s.light[u] == Light::On;
      input_flipped = input_flipped || s.flipped.get(u);
    }
    return input_lit || input_flipped;
  }
  return true;
}

namespace {

QLOInstance blank_instance(const CodeGraph& g, QLOGoal goal) {
  QLOInstance inst;
  inst.graph = g;
  inst.initial.assign(g.node_count(), Light::Off);
  inst.forbidden = BitVec(g.node_count());
  inst.mandatory_once = BitVec(g.node_count());
  inst.goal = goal;
  return inst;
}

}  // namespace

QLOInstance build_distance_instance(const CodeGraph& g) {
  require_valid(g);
  if (g.k() == 0) throw ValidationError("distance undefined: code has no logical qubits");
  auto inst = blank_instance(g, QLOGoal::Distance);
  inst.round1_allowed = true;
  return inst;
}

QLOInstance build_weight_instance(const CodeGraph& g, std::size_t v1) {
  require_valid(g);
  if (v1 >= g.node_count() || g.role(v1) != Role::Output)
    throw ValidationError("weight reduction needs a non-pivot output node");
  auto inst = blank_instance(g, QLOGoal::WeightReduction);
  inst.mandatory_once.set(v1);
  return inst;
}

QLOInstance build_decoding_instance(const CodeGraph& g, const BitVec& syndrome) {
  require_valid(g);
  auto outs = g.outputs();
  if (syndrome.size() != outs.size())
    throw DimensionError("syndrome has " + std::to_string(syndrome.size()) + " bits, code has " +
                         std::to_string(outs.size()) + " stabilizers");
  auto inst = blank_instance(g, QLOGoal::Decoding);
  inst.round1_allowed = true;
  syndrome.for_each([&](std::size_t i) { inst.initial[outs[i]] = Light::On; });
  return inst;
}

std::optional<QLOSolution> qlo_solve(const QLOInstance& inst) {
  const auto& g = inst.graph;
  std::vector<std::size_t> phys, ins;
  std::vector<std::size_t> local(g.node_count(), kNone);
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (g.role(v) == Role::Input) {
      local[v] = ins.size();
      ins.push_back(v);
    } else {
      local[v] = phys.size();
      phys.push_back(v);
    }
  }
  const std::size_t m = phys.size(), k = ins.size();
  if (m > kQloMaxNonInputs)
    throw UnsupportedError("QLO search is limited to " + std::to_string(kQloMaxNonInputs) + " non-input nodes");
  if (k > 30) throw UnsupportedError("QLO search: too many inputs");
  // Neighbour masks over physical and input local indices.
  std::vector<std::uint32_t> adj_phys(g.node_count(), 0);
  std::vector<std::uint64_t> adj_in(g.node_count(), 0);
  for (std::size_t v = 0; v < g.node_count(); ++v)
    g.adj(v).for_each([&](std::size_t w) {
      if (g.role(w) == Role::Input) adj_in[v] |= std::uint64_t{1} << local[w];
      else adj_phys[v] |= std::uint32_t{1} << local[w];
    });
  std::uint32_t forbidden = 0, mandatory = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (inst.forbidden.get(phys[i])) forbidden |= 1U << i;
    if (inst.mandatory_once.get(phys[i])) mandatory |= 1U << i;
  }
  // A state is (flips F, destroys D, input parities I); lights follow from it.
  auto key = [&](std::uint32_t f, std::uint32_t d, std::uint64_t ip) {
    return std::uint64_t{f} | (std::uint64_t{d} << 12) | (ip << 24);
  };
  auto goal = [&](std::uint32_t f, std::uint32_t d, std::uint64_t ip) {
    auto lit = [&](std::size_t v) {
      bool on = inst.initial[v] == Light::On;
      on ^= (std::popcount(adj_phys[v] & f) + std::popcount(adj_in[v] & ip)) & 1;
      return on;
    };
    for (std::size_t i = 0; i < m; ++i)
      if (!((f | d) >> i & 1U) && inst.initial[phys[i]] != Light::Destroyed && lit(phys[i])) return false;
    bool input_lit = false;
    for (std::size_t j = 0; j < k; ++j) input_lit = input_lit || lit(ins[j]);
    switch (inst.goal) {
      case QLOGoal::Distance: return input_lit || ip != 0;
      case QLOGoal::WeightReduction: return !input_lit;
      case QLOGoal::Decoding: return true;
    }
    return false;
  };
  struct Node {
    std::uint32_t f, d;
    std::uint64_t ip;
    std::size_t moves;
  };
  std::deque<Node> queue;
  std::unordered_set<std::uint64_t> seen;
  std::uint64_t ip_count = inst.round1_allowed ? (std::uint64_t{1} << k) : 1;
  for (std::uint64_t ip = 0; ip < ip_count; ++ip) {
    queue.push_back({mandatory, 0, ip, static_cast<std::size_t>(std::popcount(mandatory))});
    seen.insert(key(mandatory, 0, ip));
  }
  while (!queue.empty()) {
    Node cur = queue.front();
    queue.pop_front();
    if (goal(cur.f, cur.d, cur.ip)) {
      QLOSolution sol;
      sol.moves = cur.moves;
      sol.input_flips = BitVec(g.node_count());
      for (std::size_t j = 0; j < k; ++j)
        if (cur.ip >> j & 1U) sol.input_flips.set(ins[j]);
      for (std::size_t i = 0; i < m; ++i)
        if (cur.f >> i & 1U) sol.sequence.push_back({QLOMove::Flip, phys[i]});
      for (std::size_t i = 0; i < m; ++i)
        if (cur.d >> i & 1U) sol.sequence.push_back({QLOMove::Destroy, phys[i]});
      return sol;
    }
    std::uint32_t used = cur.f | cur.d;
    for (std::size_t i = 0; i < m; ++i) {
      std::uint32_t b = 1U << i;
      if (used & b) continue;  // dominated: a second move on a dark node
      if (!(forbidden & b) && !(mandatory & b)) {
        auto kf = key(cur.f | b, cur.d, cur.ip);
        if (seen.insert(kf).second) queue.push_back({cur.f | b, cur.d, cur.ip, cur.moves + 1});
      }
      auto kd = key(cur.f, cur.d | b, cur.ip);
      if (seen.insert(kd).second) queue.push_back({cur.f, cur.d | b, cur.ip, cur.moves + 1});
      if (seen.size() > kQloMaxStates) throw UnsupportedError("QLO search exceeded its state budget");
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- symplectic search

namespace {

// Anticommutation pattern of every single-qubit Pauli against a list of checks.
struct CheckTable {
  std::size_t n = 0, words = 0;
  std::vector<std::uint64_t> syn;  // ((q * 3 + p) * words)

  CheckTable(const std::vector<PauliString>& checks, std::size_t n_) : n(n_), words((checks.size() + 63) / 64) {
    if (words == 0) words = 1;
    syn.assign(n * 3 * words, 0);
    for (std::size_t c = 0; c < checks.size(); ++c)
      for (std::size_t q = 0; q < n; ++q) {
        bool cx = checks[c].x.get(q), cz = checks[c].z.get(q);
        // p: 0 = X, 1 = Y, 2 = Z
        bool anti[3] = {cz, cx != cz, cx};
        for (std::size_t p = 0; p < 3; ++p)
          if (anti[p]) syn[(q * 3 + p) * words + c / 64] |= std::uint64_t{1} << (c % 64);
      }
  }
  const std::uint64_t* at(std::size_t q, std::size_t p) const { return &syn[(q * 3 + p) * words]; }
};

std::vector<std::uint64_t> mask_bits(std::size_t words, std::size_t from, std::size_t to) {
  std::vector<std::uint64_t> m(words, 0);
  for (std::size_t b = from; b < to; ++b) m[b / 64] |= std::uint64_t{1} << (b % 64);
  return m;
}

struct SearchSpec {
  std::vector<std::uint64_t> target;
  std::vector<std::uint64_t> zero_mask;     // (syn ^ target) must vanish here
  std::vector<std::uint64_t> nonzero_mask;  // ... and be nonzero here, if any bit is set
  std::vector<bool> allowed;                // qubits
};

using Term = std::pair<std::size_t, std::size_t>;  // (qubit, pauli index)

class WeightSearch {
 public:
  WeightSearch(const CheckTable& t, const SearchSpec& s) : t_(t), s_(s), W_(t.words) {
    need_nonzero_ = false;
    for (auto w : s_.nonzero_mask) need_nonzero_ = need_nonzero_ || w != 0;
    for (std::size_t q = 0; q < t_.n; ++q)
      if (s_.allowed[q]) qubits_.push_back(q);
    for (std::size_t qi = 0; qi < qubits_.size(); ++qi)
      for (std::size_t p = 0; p < 3; ++p) index_[masked_hash(t_.at(qubits_[qi], p))].push_back({qi, p});
  }

  // First witness of exactly weight w, deterministic across thread counts.
  std::optional<std::vector<Term>> find(std::size_t w) const {
    if (w == 0) {
      std::vector<std::uint64_t> zero(W_, 0);
      if (accepts(zero.data())) return std::vector<Term>{};
      return std::nullopt;
    }
    if (w > qubits_.size()) return std::nullopt;
    std::size_t firsts = qubits_.size() - w + 1;
    std::vector<std::optional<std::vector<Term>>> found(firsts);
    std::atomic<std::size_t> best{kNone};
    parallel_for(firsts, [&](std::size_t a) {
      if (a > best.load()) return;
      std::vector<std::uint64_t> stack((w + 1) * W_, 0);
      std::vector<Term> chosen;
      if (dfs(a, w, 0, stack, chosen, best)) {
        found[a] = chosen;
        std::size_t cur = best.load();
        while (a < cur && !best.compare_exchange_weak(cur, a)) {
        }
      }
    });
    for (auto& f : found)
      if (f) return f;
    return std::nullopt;
  }

  PauliString to_pauli(const std::vector<Term>& terms) const {
    PauliString p(t_.n);
    for (auto [qi, pi] : terms) p.set(qubits_[qi], "XYZ"[pi]);
    return p;
  }

 private:
  std::uint64_t masked_hash(const std::uint64_t* v) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::size_t i = 0; i < W_; ++i) {
      h ^= (v[i] & s_.zero_mask[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
  bool accepts(const std::uint64_t* partial) const {
    bool nz = !need_nonzero_;
    for (std::size_t i = 0; i < W_; ++i) {
      std::uint64_t d = partial[i] ^ s_.target[i];
      if (d & s_.zero_mask[i]) return false;
      if (d & s_.nonzero_mask[i]) nz = true;
    }
    return nz;
  }

  // Choose the qubit at position `depth` (>= start); the last term is looked up.
  bool dfs(std::size_t start, std::size_t w, std::size_t depth, std::vector<std::uint64_t>& stack,
           std::vector<Term>& chosen, const std::atomic<std::size_t>& best) const {
    const std::uint64_t* cur = &stack[depth * W_];
    std::uint64_t* nxt = &stack[(depth + 1) * W_];
    if (depth + 1 == w) {
      // Need s(q,p) == cur ^ target on the zero mask.
      std::vector<std::uint64_t> want(W_);
      for (std::size_t i = 0; i < W_; ++i) want[i] = cur[i] ^ s_.target[i];
      auto it = index_.find(masked_hash(want.data()));
      if (it == index_.end()) return false;
      for (auto [qi, p] : it->second) {
        if (qi < start) continue;
        const std::uint64_t* s = t_.at(qubits_[qi], p);
        for (std::size_t i = 0; i < W_; ++i) nxt[i] = cur[i] ^ s[i];
        if (accepts(nxt)) {
          chosen.push_back({qi, p});
          return true;
        }
      }
      return false;
    }
    std::size_t last = depth == 0 ? start + 1 : qubits_.size() - (w - depth) + 1;
    for (std::size_t qi = start; qi < last; ++qi) {
      if (depth == 0 && qi != start) break;
      for (std::size_t p = 0; p < 3; ++p) {
        const std::uint64_t* s = t_.at(qubits_[qi], p);
        for (std::size_t i = 0; i < W_; ++i) nxt[i] = cur[i] ^ s[i];
        chosen.push_back({qi, p});
        if (dfs(qi + 1, w, depth + 1, stack, chosen, best)) return true;
        chosen.pop_back();
      }
      if (depth == 0 && best.load() < start) return false;
    }
    return false;
  }

  const CheckTable& t_;
  const SearchSpec& s_;
  std::size_t W_;
  bool need_nonzero_ = false;
  std::vector<std::size_t> qubits_;
  std::unordered_map<std::uint64_t, std::vector<Term>> index_;
};

PauliString with_group_sign(const StabilizerTableau& stabs, PauliString p) {
  if (group_contains(stabs, p) == Membership::InGroupUpToSign) p.negative = !p.negative;
  return p;
}

}  // namespace

DistanceResult distance_exact(const StabilizerTableau& stabilizers, const std::vector<PauliString>& logicals,
                              std::size_t max_weight) {
  if (logicals.empty()) throw ValidationError("distance undefined: code has no logical qubits");
  std::vector<PauliString> checks = stabilizers.rows;
  checks.insert(checks.end(), logicals.begin(), logicals.end());
  CheckTable table(checks, stabilizers.n);
  SearchSpec spec;
  spec.target.assign(table.words, 0);
  spec.zero_mask = mask_bits(table.words, 0, stabilizers.rows.size());
  spec.nonzero_mask = mask_bits(table.words, stabilizers.rows.size(), checks.size());
  spec.allowed.assign(stabilizers.n, true);
  WeightSearch search(table, spec);
  DistanceResult res{std::nullopt, PauliString(stabilizers.n)};
  for (std::size_t w = 1; w <= std::min(max_weight, stabilizers.n); ++w) {
    if (auto hit = search.find(w)) {
      res.distance = w;
      res.witness = search.to_pauli(*hit);
      return res;
    }
  }
  return res;
}

DistanceResult distance_exact(const CodeGraph& g, std::size_t max_weight) {
  require_valid(g);
  if (g.k() == 0) throw ValidationError("distance undefined: code has no logical qubits");
  std::vector<PauliString> logicals;
  for (const auto& lp : canonical_logicals(g)) {
    logicals.push_back(lp.x);
    logicals.push_back(lp.z);
  }
  return distance_exact(canonical_stabilizers(g), logicals, max_weight);
}

std::size_t distance_qlo(const CodeGraph& g) {
  auto sol = qlo_solve(build_distance_instance(g));
  if (!sol) throw std::logic_error("distance game has no winning strategy");
  return sol->moves;
}

WeightReduction weight_reduce(const CodeGraph& g, std::size_t v1, std::size_t exhaustive_limit) {
  require_valid(g);
  if (v1 >= g.node_count() || g.role(v1) != Role::Output)
    throw ValidationError("weight reduction needs a non-pivot output node");
  auto stabs = canonical_stabilizers(g);
  auto outs = g.outputs();
  std::size_t j = 0;
  while (outs[j] != v1) ++j;
  std::vector<PauliString> others;
  for (std::size_t i = 0; i < stabs.rows.size(); ++i)
    if (i != j) others.push_back(stabs.rows[i]);

  WeightReduction best{stabs.rows[j].weight(), stabs.rows[j]};
  if (others.size() <= std::min<std::size_t>(exhaustive_limit, 40)) {
    PauliString cur = stabs.rows[j];
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << others.size()); ++i) {
      cur = multiply_commuting(cur, others[static_cast<std::size_t>(std::countr_zero(i))]);
      if (cur.weight() < best.weight) best = {cur.weight(), cur};
    }
    return best;
  }
  // Large groups: weight-ordered search for an element with X or Y on v1's wire.
  std::vector<PauliString> checks = stabs.rows;
  for (const auto& lp : canonical_logicals(g)) {
    checks.push_back(lp.x);
    checks.push_back(lp.z);
  }
  CheckTable table(checks, g.n());
  std::size_t q1 = g.qubit_of(v1);
  for (std::size_t w = 1; w < best.weight; ++w)
    for (std::size_t p : {0, 1}) {
      SearchSpec spec;
      spec.target.assign(table.at(q1, p), table.at(q1, p) + table.words);
      spec.zero_mask = mask_bits(table.words, 0, checks.size());
      spec.nonzero_mask.assign(table.words, 0);
      spec.allowed.assign(g.n(), true);
      spec.allowed[q1] = false;
      WeightSearch search(table, spec);
      if (auto hit = search.find(w - 1)) {
        auto pauli = search.to_pauli(*hit);
        pauli.set(q1, p == 0 ? 'X' : 'Y');
        return {w, with_group_sign(stabs, pauli)};
      }
    }
  return best;
}

std::size_t weight_reduce_qlo(const CodeGraph& g, std::size_t v1) {
  auto sol = qlo_solve(build_weight_instance(g, v1));
  if (!sol) throw std::logic_error("weight-reduction game has no winning strategy");
  return sol->moves;
}

std::optional<PauliString> min_weight_with_syndrome(const CodeGraph& g, const BitVec& syndrome, std::size_t max_weight) {
  require_valid(g);
  auto stabs = canonical_stabilizers(g);
  if (syndrome.size() != stabs.rows.size()) throw DimensionError("syndrome length mismatch");
  CheckTable table(stabs.rows, g.n());
  SearchSpec spec;
  spec.target.assign(table.words, 0);
  syndrome.for_each([&](std::size_t i) { spec.target[i / 64] |= std::uint64_t{1} << (i % 64); });
  spec.zero_mask = mask_bits(table.words, 0, stabs.rows.size());
  spec.nonzero_mask.assign(table.words, 0);
  spec.allowed.assign(g.n(), true);
  WeightSearch search(table, spec);
  for (std::size_t w = 0; w <= std::min(max_weight, g.n()); ++w)
    if (auto hit = search.find(w)) return search.to_pauli(*hit);
  return std::nullopt;
}

}  // namespace qgc
