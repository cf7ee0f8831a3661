#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgc/circuit.hpp"
#include "qgc/graph.hpp"
#include "qgc/pauli.hpp"

namespace qgc {

// Free-edge decoration of a node. Compound names act right to left: SZ = S*Z, HZ = H*Z.
enum class LocalClifford { I, S, Z, SZ, H, HZ };

const char* clifford_name(LocalClifford c);
std::optional<LocalClifford> clifford_from_name(std::string_view s);
// P -> C P C^dagger on qubit q.
void conjugate_local(PauliString& p, std::size_t q, LocalClifford c);
// c * S, defined on the phase subgroup {I, S, Z, SZ}.
LocalClifford times_s(LocalClifford c);
// c * Z, defined on every decoration.
LocalClifford times_z(LocalClifford c);

// Stabilizer state written as C |G>: a graph state with one decoration per node.
struct DecoratedGraphState {
  std::vector<BitVec> adj;
  std::vector<LocalClifford> clifford;

  std::size_t size() const { return adj.size(); }
  StabilizerTableau stabilizers() const;
};

// Graph form of a full-rank stabilizer state (n rows on n qubits). Hadamard decorations
// land on the pivot columns of the reduced pure-Z subgroup, so an H node only
// neighbours higher-indexed nodes.
DecoratedGraphState to_graph_state(const StabilizerTableau& state);

// Canonical diagram. Nodes 0..k-1 are inputs and k..k+n-1 are outputs 1..n in order.
struct ZXDiagram {
  CodeGraph graph;
  std::vector<LocalClifford> clifford;  // per node

  friend bool operator==(const ZXDiagram&, const ZXDiagram&) = default;
};

enum class ZxRule { Edge, Hadamard, Rref, Clifford };
const char* rule_name(ZxRule r);

struct RuleViolation {
  ZxRule rule;
  std::string detail;
};

std::vector<RuleViolation> zxcf_check_rules(const ZXDiagram& d);

Circuit tableau_to_encoder(const StabilizerTableau& t);
ZXDiagram encoder_to_zxcf(const Circuit& c, std::size_t k);
// Convenience composition of the two above.
ZXDiagram compile_tableau(const StabilizerTableau& t);

CodeGraph zxcf_to_graph(const ZXDiagram& d);
StabilizerTableau zxcf_to_tableau(const ZXDiagram& d);

// Graph JSON plus "cliffords" (every node) and "numbering" (output ids in order).
std::string zxcf_to_json(const ZXDiagram& d);
ZXDiagram zxcf_from_json(const std::string& text);

using BigInt = boost::multiprecision::cpp_int;

// Both counts take n qubits and k stabilizer rows.
BigInt count_tableaus(std::size_t n, std::size_t k);
BigInt count_zxcf(std::size_t n, std::size_t k);
// Recursion f(n, k, p, o) and its closed form, exposed for cross-checks.
BigInt count_zxcf_recursive(std::size_t n, std::size_t k, std::size_t p, std::size_t o);
BigInt count_zxcf_closed(std::size_t n, std::size_t k, std::size_t p, std::size_t o);

}  // namespace qgc
