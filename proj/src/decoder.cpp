#include "qgc/decoder.hpp"

#include <cmath>
#include <random>

#include "qgc/parallel.hpp"

namespace qgc {

namespace {

// The lights paradigm reads neighbourhoods directly, which needs each pivot to
// touch only its own input. Normalizing keeps the code and the light order.
CodeGraph decoding_graph(const CodeGraph& g) {
  auto rep = validate_graph(g);
  if (!rep) throw ValidationError("invalid graph: " + rep.message);
  return is_pivot_normalized(g) ? g : normalize_inputs(g);
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

GreedyDecoder::GreedyDecoder(const CodeGraph& input) : GreedyDecoder(decoding_graph(input), 0) {}

GreedyDecoder::GreedyDecoder(const CodeGraph& g, int) : group_(canonical_stabilizers(g)) {
  n_ = g.n();
  std::size_t N = g.node_count();
  light_of_.assign(N, -1);
  qubit_.assign(N, 0);
  auto outs = g.outputs();
  lights_ = outs.size();
  for (std::size_t i = 0; i < outs.size(); ++i) light_of_[outs[i]] = static_cast<std::ptrdiff_t>(i);
  auto to_lights = [&](const BitVec& nodes) {
    Lights l;
    nodes.for_each([&](std::size_t v) { l.push_back(static_cast<std::uint32_t>(light_of_[v])); });
    return l;
  };
  o_.resize(N);
  oip_.resize(N);
  x_toggle_.resize(N);
  o_minus_oip_.resize(N);
  oi_.resize(N);
  for (std::size_t v = 0; v < N; ++v) {
    if (g.role(v) == Role::Input) continue;
    qubit_[v] = g.qubit_of(v);
    x_candidates_.push_back(v);
    if (g.role(v) == Role::Pivot) pivots_.push_back(v);
    BitVec o = nb::o(g, v), oip = nb::oip(g, v);
    o_[v] = to_lights(o);
    oip_[v] = to_lights(oip);
    x_toggle_[v] = to_lights(o ^ oip);
    BitVec rest = o;
    rest.andnot(oip);
    o_minus_oip_[v] = to_lights(rest);
    oi_[v] = to_lights(nb::oi(g, v));
  }
}

Syndrome GreedyDecoder::syndrome(const PauliString& e) const {
  if (e.size() != n_)
    throw DimensionError("error has " + std::to_string(e.size()) + " qubits, code has " + std::to_string(n_));
  Syndrome s(lights_);
  for (auto v : x_candidates_) {
    std::size_t q = qubit_[v];
    if (e.x.get(q))
      for (auto l : x_toggle_[v]) s.flip(l);
    if (e.z.get(q)) {
      if (light_of_[v] >= 0) s.flip(static_cast<std::size_t>(light_of_[v]));
      else
        for (auto l : oi_[v]) s.flip(l);
    }
  }
  return s;
}

PauliString GreedyDecoder::decode(const Syndrome& s, const DecoderOptions& opts) const {
  if (s.size() != lights_)
    throw DimensionError("syndrome has " + std::to_string(s.size()) + " bits, code has " + std::to_string(lights_));
  // on: the measured parity still to be explained; destroyed: that qubit already carries a Pauli.
  std::vector<std::uint8_t> on(lights_), destroyed(lights_, 0);
  for (std::size_t i = 0; i < lights_; ++i) on[i] = s.get(i);
  PauliString r(n_);

  auto gap_over = [&](const Lights& set) {
    long lit = 0, dark = 0;
    for (auto l : set) {
      if (destroyed[l]) continue;
      if (on[l]) ++lit;
      else ++dark;
    }
    if (opts.ignore_destroyed) return lit - dark;
    return 2 * lit - static_cast<long>(set.size());
  };
  auto lit_majority = [&](const Lights& set) {
    long lit = 0, dark = 0;
    for (auto l : set) {
      if (destroyed[l]) continue;
      if (on[l]) ++lit;
      else ++dark;
    }
    return lit > dark;
  };
  auto destroy = [&](std::size_t v) {
    if (light_of_[v] >= 0) destroyed[static_cast<std::size_t>(light_of_[v])] = 1;
  };

  // X recovery. (v0, n0) restart every round; lowest node index wins ties.
  std::vector<std::uint8_t> explored(light_of_.size(), 0);
  while (true) {
    std::size_t v0 = SIZE_MAX;
    long n0 = 0;
    for (auto v : x_candidates_) {
      long gap = gap_over(opts.parity_redundancy ? o_minus_oip_[v] : o_[v]);
      if (gap > n0) {
        v0 = v;
        n0 = gap;
      }
    }
    if (v0 == SIZE_MAX || explored[v0]) break;
    if (opts.gap_edge_case && n0 == 1 && !lit_majority(oip_[v0])) break;
    for (auto l : x_toggle_[v0]) on[l] ^= 1;
    destroy(v0);
    r.x.flip(qubit_[v0]);
    explored[v0] = 1;
  }

  // Z recovery on pivots.
  std::fill(explored.begin(), explored.end(), 0);
  while (true) {
    std::size_t v0 = SIZE_MAX;
    long n0 = 0;
    for (auto v : pivots_) {
      long gap = gap_over(oi_[v]);
      if (gap > n0) {
        v0 = v;
        n0 = gap;
      }
    }
    if (v0 == SIZE_MAX || explored[v0]) break;
    for (auto l : oi_[v0]) on[l] ^= 1;
    r.z.flip(qubit_[v0]);
    explored[v0] = 1;
  }

  // Z sweep on outputs. A destroyed light that still reads -1 is fixed by the same
  // Z, which costs nothing since its qubit already carries a Pauli.
  for (auto v : x_candidates_) {
    if (light_of_[v] < 0) continue;
    auto l = static_cast<std::size_t>(light_of_[v]);
    if (on[l]) {
      on[l] = 0;
      r.z.flip(qubit_[v]);
    }
  }
  return r;
}

bool GreedyDecoder::success(const PauliString& e, const PauliString& r) const {
  if (e.size() != n_ || r.size() != n_) throw DimensionError("decode_success: qubit count mismatch");
  PauliString residual(n_);
  residual.x = e.x ^ r.x;
  residual.z = e.z ^ r.z;
  return group_.contains(residual) != Membership::NotInGroup;
}

Syndrome extract_syndrome(const CodeGraph& g, const PauliString& e) { return GreedyDecoder(g).syndrome(e); }

PauliString greedy_decode(const CodeGraph& g, const Syndrome& s, const DecoderOptions& opts) {
  return GreedyDecoder(g).decode(s, opts);
}

bool decode_success(const CodeGraph& g, const PauliString& e, const PauliString& r) {
  return GreedyDecoder(g).success(e, r);
}

std::size_t sensitivity_B(const CodeGraph& g) {
  auto rep = validate_graph(g);
  if (!rep) throw ValidationError("invalid graph: " + rep.message);
  std::size_t N = g.node_count();
  std::vector<BitVec> o(N), oip(N), oi(N);
  for (std::size_t v = 0; v < N; ++v) {
    o[v] = nb::o(g, v);
    oip[v] = nb::oip(g, v);
    oi[v] = nb::oi(g, v);
  }
  std::size_t B = 1;
  auto bound = [&](std::size_t u, const BitVec& t) { B = std::max(B, and_count(o[u], t)); };
  for (std::size_t v = 0; v < N; ++v) {
    Role rv = g.role(v);
    if (rv == Role::Input) continue;
    BitVec x = o[v] ^ oip[v];
    BitVec y = x;
    if (rv == Role::Output) y.flip(v);
    else y ^= oi[v];
    for (std::size_t u = 0; u < N; ++u) {
      if (u == v || g.role(u) == Role::Input) continue;
      bound(u, x);  // X on v
      bound(u, y);  // Y on v
    }
    if (rv == Role::Pivot)
      for (auto u : g.inputs())
        if (u != g.input_of(v)) bound(u, oi[v]);  // Z on pivot v
  }
  return B;
}

PauliString sample_error(std::size_t n, const NoiseModel& noise, std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t state = seed ^ (trial * 0xd1342543de82ef95ULL);
  std::mt19937_64 rng(splitmix64(state));
  PauliString e(n);
  static constexpr char kPaulis[3] = {'X', 'Y', 'Z'};
  if (noise.kind == NoiseModel::Depolarizing) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> which(0, 2);
    for (std::size_t q = 0; q < n; ++q)
      if (unit(rng) < noise.p) e.set(q, kPaulis[which(rng)]);
    return e;
  }
  if (noise.weight > n) throw DimensionError("fixed-weight noise heavier than the code");
  std::vector<std::size_t> qubits(n);
  for (std::size_t q = 0; q < n; ++q) qubits[q] = q;
  std::uniform_int_distribution<int> which(0, 2);
  for (std::size_t i = 0; i < noise.weight; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(qubits[i], qubits[pick(rng)]);
    e.set(qubits[i], kPaulis[which(rng)]);
  }
  return e;
}

MonteCarloResult wilson_interval(std::uint64_t failures, std::uint64_t trials) {
  MonteCarloResult res;
  res.trials = trials;
  res.failures = failures;
  if (trials == 0) return res;
  constexpr double z = 1.959963984540054;
  double nt = static_cast<double>(trials);
  double ph = static_cast<double>(failures) / nt;
  double denom = 1.0 + z * z / nt;
  double centre = (ph + z * z / (2.0 * nt)) / denom;
  double half = z * std::sqrt(ph * (1.0 - ph) / nt + z * z / (4.0 * nt * nt)) / denom;
  res.rate = ph;
  res.ci_low = failures == 0 ? 0.0 : std::max(0.0, centre - half);
  res.ci_high = std::min(1.0, centre + half);
  return res;
}

MonteCarloResult monte_carlo_rate(const CodeGraph& g, const NoiseModel& noise, std::uint64_t trials,
                                  std::uint64_t seed, const DecoderOptions& opts) {
  if (trials == 0) throw ValidationError("monte_carlo_rate needs at least one trial");
  if (noise.kind == NoiseModel::Depolarizing && !(noise.p >= 0.0 && noise.p <= 1.0))
    throw ValidationError("depolarizing probability outside [0, 1]");
  GreedyDecoder dec(g);
  std::size_t n = g.n();
  if (noise.kind == NoiseModel::FixedWeight && noise.weight > n)
    throw DimensionError("fixed-weight noise heavier than the code");
  // Fixed-size chunks keep the per-trial work independent of the worker count.
  constexpr std::uint64_t kChunk = 256;
  std::uint64_t chunks = (trials + kChunk - 1) / kChunk;
  std::vector<std::uint64_t> fails(chunks, 0);
  parallel_for(chunks, [&](std::size_t c) {
    std::uint64_t lo = c * kChunk, hi = std::min(trials, lo + kChunk);
    for (std::uint64_t t = lo; t < hi; ++t) {
      auto e = sample_error(n, noise, seed, t);
      if (!dec.success(e, dec.decode(dec.syndrome(e), opts))) ++fails[c];
    }
  });
  std::uint64_t total = 0;
  for (auto f : fails) total += f;
  return wilson_interval(total, trials);
}

}  // namespace qgc
