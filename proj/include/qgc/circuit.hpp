#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qgc/graph.hpp"
#include "qgc/pauli.hpp"

namespace qgc {

enum class GateKind { PrepPlus, PrepZero, H, S, Z, CZ, Diag };

struct Gate {
  GateKind kind;
  std::vector<std::size_t> wires;
  std::string label;               // Diag only
  std::size_t declared_depth = 1;  // Diag only

  static Gate prep_plus(std::size_t q) { return {GateKind::PrepPlus, {q}, {}, 1}; }
  static Gate prep_zero(std::size_t q) { return {GateKind::PrepZero, {q}, {}, 1}; }
  static Gate h(std::size_t q) { return {GateKind::H, {q}, {}, 1}; }
  static Gate s(std::size_t q) { return {GateKind::S, {q}, {}, 1}; }
  static Gate z(std::size_t q) { return {GateKind::Z, {q}, {}, 1}; }
  static Gate cz(std::size_t a, std::size_t b) { return {GateKind::CZ, {a, b}, {}, 1}; }
  static Gate diag(std::string label, std::vector<std::size_t> wires, std::size_t depth = 1) {
    return {GateKind::Diag, std::move(wires), std::move(label), depth};
  }

  bool is_prep() const { return kind == GateKind::PrepPlus || kind == GateKind::PrepZero; }
  bool is_diagonal() const;
  bool is_clifford() const;
  std::size_t cost() const { return is_prep() ? 0 : (kind == GateKind::Diag ? declared_depth : 1); }
  friend bool operator==(const Gate&, const Gate&) = default;
};

// Diagonal blocks understood by both simulators (Clifford ones) or the statevector only.
// Labels: I, Z, S, SDG, CZ (Clifford); T, TDG, CS, CCZ (statevector only).
bool diag_label_known(std::string_view label, std::size_t arity);
bool diag_label_clifford(std::string_view label);

// Layered circuit. Preparation gates assume a fresh |0> wire and must precede any other
// gate on that wire. Logical input j enters on input_wires[j]; when input_wires is empty
// the un-prepared wires in increasing order are the inputs.
struct Circuit {
  std::size_t n_wires = 0;
  std::vector<std::vector<Gate>> layers;
  std::vector<std::size_t> input_wires;

  Circuit() = default;
  explicit Circuit(std::size_t n) : n_wires(n) {}

  void add_layer(std::vector<Gate> layer);
  // Appends gates in order, packing each into the earliest legal layer after the
  // last layer already touching its wires.
  void push_scheduled(const Gate& g);
  void append(const Circuit& other);  // layer-wise concatenation
  std::size_t depth() const;
  std::size_t gate_count() const;
  std::vector<std::size_t> resolved_inputs() const;
  void validate() const;  // disjoint supports, wire bounds, prep placement
  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.n_wires == b.n_wires && a.layers == b.layers && a.input_wires == b.input_wires;
  }

 private:
  std::vector<std::size_t> frontier_;  // push_scheduled bookkeeping
};

// Text form: "WIRES n", optional "INPUTS a,b", then one layer per line with ';'-separated
// gates: "H 3", "S 3", "Z 3", "CZ 3 7", "PREP+ 2", "PREP0 2", "DIAG label 0,1 depth".
std::string emit_circuit(const Circuit& c);
Circuit parse_circuit(std::string_view text);

struct StabilizerSimResult {
  StabilizerTableau stabilizers;     // one row per prepared wire, in wire order
  std::vector<std::size_t> inputs;   // input wire of each logical qubit
  std::vector<LogicalPair> logicals; // images of X_j, Z_j on the input wires
};
StabilizerSimResult simulate_stabilizer(const Circuit& c);

using StateVector = std::vector<std::complex<double>>;
constexpr std::size_t kStatevectorCapacity = 14;

// Runs the circuit from |0...0> with the given amplitudes loaded on the input wires
// (logical basis index bit j = input j). Default: all inputs |0>.
StateVector simulate_statevector(const Circuit& c);
StateVector simulate_statevector(const Circuit& c, const StateVector& logical_state);
// Applies non-prep gates of c to an arbitrary n-wire state in place.
void apply_unitary_part(const Circuit& c, StateVector& psi);

struct EdgeColoring {
  std::vector<Edge> edges;
  std::vector<std::size_t> color;  // parallel to edges
  std::size_t color_count = 0;
};
EdgeColoring edge_coloring(std::size_t node_count, const std::vector<Edge>& edges);
bool edge_coloring_proper(const EdgeColoring& c);

Circuit encoding_circuit(const CodeGraph& g);
// CZ block realizing the graph move at input u followed by S on N(u); returns the
// circuit and the graph after local complementation.
std::pair<Circuit, CodeGraph> logical_sqrt_x(const CodeGraph& g, std::size_t u);
// U is a diagonal gate on logical wires 0..k-1.
Circuit logical_diagonal(const CodeGraph& g, const Gate& u);
Circuit logical_generic(const CodeGraph& g, const Circuit& u);

}  // namespace qgc
