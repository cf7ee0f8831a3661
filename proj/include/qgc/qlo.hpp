#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qgc/graph.hpp"
#include "qgc/pauli.hpp"

namespace qgc {

// ---- game engine ----

enum class Light : std::uint8_t { Off, On, Destroyed };

struct QLOMove {
  enum Kind : std::uint8_t { Flip, Destroy } kind;
  std::size_t node;
  friend bool operator==(const QLOMove&, const QLOMove&) = default;
};

enum class QLOGoal {
  Distance,         // non-input lights dark; an input light on or an input switch flipped
  WeightReduction,  // every light dark, mandatory switches flipped exactly once
  Decoding,         // non-input lights dark
};

struct QLOInstance {
  CodeGraph graph;
  std::vector<Light> initial;  // per node
  bool round1_allowed = false;
  BitVec forbidden;       // round-2 switches that may not be flipped
  BitVec mandatory_once;  // switches that must be flipped exactly once
  QLOGoal goal = QLOGoal::Decoding;
};

struct QLOState {
  std::vector<Light> light;
  BitVec flipped;  // switch parity per node
  std::size_t move_count = 0;
};

QLOState qlo_initial_state(const QLOInstance& inst);
// Flipping a non-input switch destroys its light and toggles the intact neighbour lights;
// an input switch (round 1) only toggles its neighbours and is not counted.
QLOState qlo_apply(const QLOInstance& inst, const QLOState& s, const QLOMove& m);
bool qlo_goal_reached(const QLOInstance& inst, const QLOState& s);

QLOInstance build_distance_instance(const CodeGraph& g);
QLOInstance build_weight_instance(const CodeGraph& g, std::size_t v1);
// syndrome bit i belongs to the i-th non-pivot output in qubit order.
QLOInstance build_decoding_instance(const CodeGraph& g, const BitVec& syndrome);

struct QLOSolution {
  std::size_t moves = 0;
  BitVec input_flips;          // round 1, node-indexed
  std::vector<QLOMove> sequence;  // round 2, in a canonical order (flips, then destroys)
};

constexpr std::size_t kQloMaxNonInputs = 12;
constexpr std::size_t kQloMaxStates = std::size_t{1} << 24;

// Breadth-first search for a winning strategy with the fewest round-2 moves.
// Throws UnsupportedError beyond kQloMaxNonInputs non-input nodes or kQloMaxStates states.
std::optional<QLOSolution> qlo_solve(const QLOInstance& inst);

// ---- exact solvers ----

struct DistanceResult {
  std::optional<std::size_t> distance;  // nullopt: exceeds max_weight
  PauliString witness;                  // a minimum-weight nontrivial logical
};

// Weight-bounded symplectic enumeration over the canonical code of g.
DistanceResult distance_exact(const CodeGraph& g, std::size_t max_weight);
// Same search for an arbitrary code given by stabilizers and logical operators.
DistanceResult distance_exact(const StabilizerTableau& stabilizers, const std::vector<PauliString>& logicals,
                              std::size_t max_weight);
// Exhaustive QLO game value; small graphs only.
std::size_t distance_qlo(const CodeGraph& g);

struct WeightReduction {
  std::size_t weight = 0;
  PauliString replacement;  // group element with X or Y on the wire of v1
};
// Groups with at most exhaustive_limit other generators are scanned in Gray-code order;
// larger ones use the weight-ordered search.
WeightReduction weight_reduce(const CodeGraph& g, std::size_t v1, std::size_t exhaustive_limit = 22);
std::size_t weight_reduce_qlo(const CodeGraph& g, std::size_t v1);

// Minimum-weight Pauli with the given canonical syndrome, modulo the stabilizer group
// (exhaustive over weights up to max_weight). Returns nullopt if none is found.
std::optional<PauliString> min_weight_with_syndrome(const CodeGraph& g, const BitVec& syndrome, std::size_t max_weight);

}  // namespace qgc
