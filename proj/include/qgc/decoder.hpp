#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qgc/graph.hpp"
#include "qgc/pauli.hpp"

namespace qgc {

// Bit i is the light of the i-th non-pivot output in qubit order (1 = on = measured -1).
using Syndrome = BitVec;

// Lights toggled by e: X on v toggles o(v) ^ oip(v), Z on a pivot v toggles oi(v),
// Z on a non-pivot output toggles its own light; Y does both.
Syndrome extract_syndrome(const CodeGraph& g, const PauliString& e);

struct DecoderOptions {
  bool ignore_destroyed = false;   // gap counts only lights that are not destroyed
  bool gap_edge_case = false;      // X loop: a gap of 1 needs a lit majority in oip(v)
  bool parity_redundancy = false;  // X loop: gap over o(v) \ oip(v)
  static DecoderOptions all() { return {true, true, true}; }
};

// Precomputed neighbourhoods for repeated decoding on one graph.
class GreedyDecoder {
 public:
  explicit GreedyDecoder(const CodeGraph& g);

  Syndrome syndrome(const PauliString& e) const;
  PauliString decode(const Syndrome& s, const DecoderOptions& opts = {}) const;
  // e * r lies in the stabilizer group, ignoring sign.
  bool success(const PauliString& e, const PauliString& r) const;

  std::size_t light_count() const { return lights_; }

 private:
  GreedyDecoder(const CodeGraph& normalized, int);

  using Lights = std::vector<std::uint32_t>;
  std::size_t n_ = 0, lights_ = 0;
  std::vector<std::size_t> x_candidates_;  // O u P in node order
  std::vector<std::size_t> pivots_;        // in node order
  std::vector<std::size_t> qubit_;         // node -> qubit
  std::vector<std::ptrdiff_t> light_of_;   // node -> light index or -1
  std::vector<Lights> o_, oip_, x_toggle_, o_minus_oip_, oi_;
  GroupMembership group_;
};

PauliString greedy_decode(const CodeGraph& g, const Syndrome& s, const DecoderOptions& opts = {});
bool decode_success(const CodeGraph& g, const PauliString& e, const PauliString& r);

// Smallest B for which the four sensitivity conditions hold, floored at 1.
std::size_t sensitivity_B(const CodeGraph& g);

struct NoiseModel {
  enum Kind { Depolarizing, FixedWeight } kind = Depolarizing;
  double p = 0.0;       // depolarizing: X, Y, Z each with p/3 per qubit
  std::size_t weight = 0;  // fixed weight: uniform support, uniform non-identity Paulis
  static NoiseModel depolarizing(double p) { return {Depolarizing, p, 0}; }
  static NoiseModel fixed_weight(std::size_t w) { return {FixedWeight, 0.0, w}; }
};

// Error for one trial; the generator is seeded from (seed, trial) only.
PauliString sample_error(std::size_t n, const NoiseModel& noise, std::uint64_t seed, std::uint64_t trial);

struct MonteCarloResult {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double rate = 0.0;
  double ci_low = 0.0;  // Wilson 95% interval
  double ci_high = 0.0;
};

MonteCarloResult wilson_interval(std::uint64_t failures, std::uint64_t trials);

// Logical error rate of the greedy decoder; identical for any thread count.
MonteCarloResult monte_carlo_rate(const CodeGraph& g, const NoiseModel& noise, std::uint64_t trials,
                                  std::uint64_t seed, const DecoderOptions& opts = DecoderOptions::all());

}  // namespace qgc
