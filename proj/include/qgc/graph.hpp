#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qgc/bitvec.hpp"
#include "qgc/pauli.hpp"

namespace qgc {

enum class Role { Input, Pivot, Output };

const char* role_name(Role r);

using Edge = std::pair<std::size_t, std::size_t>;

// Semi-bipartite code graph. Nodes are 0..N-1. Physical qubit q is node numbering()[q];
// the default numbering lists the non-input nodes in increasing id.
// Logical qubit j is the j-th input in increasing id.
class CodeGraph {
 public:
  CodeGraph() = default;
  explicit CodeGraph(std::size_t node_count);

  std::size_t node_count() const { return adj_.size(); }
  std::size_t n() const { return node_count() - k(); }
  std::size_t k() const { return inputs_.size(); }

  Role role(std::size_t v) const { return role_[v]; }
  void set_role(std::size_t v, Role r);

  void add_edge(std::size_t a, std::size_t b);
  void remove_edge(std::size_t a, std::size_t b);
  void toggle_edge(std::size_t a, std::size_t b);
  bool has_edge(std::size_t a, std::size_t b) const { return adj_[a].get(b); }
  const BitVec& adj(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].popcount(); }
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;  // (a<b), lexicographic
  std::size_t max_degree() const;
  std::size_t min_degree() const;

  // Pairs (input, pivot); stored sorted by input.
  void set_pivot_match(std::vector<Edge> match);
  const std::vector<Edge>& pivot_match() const { return match_; }
  std::size_t pivot_of(std::size_t input) const;
  std::size_t input_of(std::size_t pivot) const;

  const std::vector<std::size_t>& inputs() const { return inputs_; }
  std::vector<std::size_t> pivots() const;   // matched pivots in logical order
  std::vector<std::size_t> outputs() const;  // non-pivot outputs in qubit order
  const std::vector<std::size_t>& numbering() const { return numbering_; }
  void set_numbering(std::vector<std::size_t> order);
  bool has_default_numbering() const;
  std::size_t qubit_of(std::size_t node) const { return qubit_[node]; }

  const BitVec& input_mask() const { return in_mask_; }
  const BitVec& pivot_mask() const { return piv_mask_; }
  const BitVec& output_mask() const { return out_mask_; }
  const BitVec& physical_mask() const { return phys_mask_; }

  friend bool operator==(const CodeGraph& a, const CodeGraph& b) {
    return a.role_ == b.role_ && a.adj_ == b.adj_ && a.match_ == b.match_ && a.numbering_ == b.numbering_;
  }

 private:
  void refresh();

  std::vector<Role> role_;
  std::vector<BitVec> adj_;
  std::vector<Edge> match_;
  std::vector<std::size_t> inputs_;
  std::vector<std::size_t> numbering_;
  std::vector<std::size_t> qubit_;  // node -> qubit, SIZE_MAX for inputs
  BitVec in_mask_, piv_mask_, out_mask_, phys_mask_;
  bool custom_numbering_ = false;
};

// Neighbourhood functions with symmetric-difference semantics on sets.
// All results are node-indexed bit-vectors.
namespace nb {
BitVec set_of(const CodeGraph& g, std::size_t v);
BitVec all(const CodeGraph& g, const BitVec& a);      // Delta of N(v)
BitVec inputs(const CodeGraph& g, const BitVec& a);   // i(.)
BitVec pivots(const CodeGraph& g, const BitVec& a);   // p(.)
BitVec outputs(const CodeGraph& g, const BitVec& a);  // o(.)
BitVec non_inputs(const CodeGraph& g, const BitVec& a);  // N_o(.)
BitVec o(const CodeGraph& g, std::size_t v);
BitVec oi(const CodeGraph& g, std::size_t v);   // o(i(v))
BitVec oip(const CodeGraph& g, std::size_t v);  // o(i(p(v)))
BitVec No(const CodeGraph& g, std::size_t v);
}  // namespace nb

ValidationReport validate_graph(const CodeGraph& g);
// Every pivot is adjacent to exactly one input (its match).
bool is_pivot_normalized(const CodeGraph& g);
// Row-reduces input neighbourhoods so the matched-pivot submatrix is the identity.
// The code is unchanged; requires pivot feasibility.
CodeGraph normalize_inputs(const CodeGraph& g);

// k x n partial adjacency matrix, columns in qubit order.
BinaryMatrix partial_adjacency(const CodeGraph& g);

StabilizerTableau canonical_stabilizers(const CodeGraph& g);
struct LogicalPair {
  PauliString x;
  PauliString z;
};
std::vector<LogicalPair> canonical_logicals(const CodeGraph& g);

std::size_t distance_upper_bound_degree(const CodeGraph& g);
std::size_t distance_upper_bound_degree_printed(const CodeGraph& g);
std::size_t stab_weight_bound(const CodeGraph& g);
bool is_css(const CodeGraph& g);

CodeGraph local_complementation(const CodeGraph& g, std::size_t v);

// JSON (see README for the schema). Throws ParseError / ValidationError.
std::string graph_to_json(const CodeGraph& g);
CodeGraph graph_from_json(const std::string& text);

// 64-bit FNV-1a digest of the JSON serialization, as 16 hex digits.
std::string graph_hash(const CodeGraph& g);

}  // namespace qgc
