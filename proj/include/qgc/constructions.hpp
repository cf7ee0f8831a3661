#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qgc/graph.hpp"
#include "qgc/pauli.hpp"

namespace qgc {

using BigInt = boost::multiprecision::cpp_int;

// "shor9", "steane7" or "five_qubit", rows in their textbook order.
StabilizerTableau named_code(const std::string& name);
std::vector<std::string> named_code_names();

// Matches each input, in increasing id, to its lowest-id non-input neighbour that is
// not yet a pivot and touches no other input. Throws ValidationError if one has none.
void assign_pivots(CodeGraph& g);

// [[16,4]] code on the dodecahedron. Nodes 0..3 are the inputs I1..I4; node 3+l is
// the output labelled l (1..16), so qubit order follows the labels.
CodeGraph dodecahedral_code();

// Boolean m-cube, m = 2^r - 1 (3 <= m <= 15). Node id = bitstring with coordinate j
// at bit j-1. Inputs are the Hamming codewords, pivot of u is u ^ 1.
CodeGraph hypercube_code(std::size_t m);
bool is_hamming_codeword(std::uint64_t word);

// Cyclic cover (2 or 5 sheets) of the icosahedron punctured through two opposite
// faces. Node id = 12 * sheet + vertex.
CodeGraph covered_icosahedron(std::size_t cover);
std::vector<Edge> icosahedron_edges();

// Torus with the given in-layer dimensions (each a positive multiple of 3) and
// 3 * repeats layers. Node id = layer * (product of dims) + in-layer index,
// first dimension fastest.
CodeGraph torus_layered_code(const std::vector<std::size_t>& layer_dims, std::size_t repeats);

// Degree-6 triangular torus of size a x b (both >= 4), node id = y * a + x. Inputs are
// chosen greedily in id order at pairwise distance >= 3.
CodeGraph triangular_lattice_code(std::size_t a, std::size_t b);

struct RandomLocalParams {
  std::size_t n = 0;  // physical qubits
  double rate = 0.0;  // k = rate * n, must be integral
  std::size_t delta_i = 0, delta_p = 0, delta_o = 0;
  std::uint64_t seed = 0;
};

// Physical nodes 0..n-1 sit on a ring; inputs are nodes n..n+k-1, input j matched to the
// pivot at position floor(j n / k). Input j (its pivot) may connect to the non-pivot
// outputs among delta_i (delta_p) consecutive positions around the pivot; outputs may
// connect to outputs at ring distance <= delta_o / 2. Each candidate pair is kept with
// probability 1/2, coins drawn in lexicographic pair order.
CodeGraph random_local_code(const RandomLocalParams& params);

struct GvReport {
  double entropy = 0.0;      // binary entropy of d/n
  bool satisfied = false;    // n H(d/n) + d log2(3) < n - k
  BigInt pauli_count;        // sum_{j=1..d} 3^j C(n, j)
};
GvReport qgv_tools(std::size_t n, std::size_t k, std::size_t d);

}  // namespace qgc
