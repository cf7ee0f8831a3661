#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgc/bitvec.hpp"
#include "qgc/errors.hpp"

namespace qgc {

// Signed Hermitian Pauli string. Qubit q carries I (x=0,z=0), X (1,0), Z (0,1) or Y (1,1).
// Only real signs are representable; the i-phase of a product is tracked transiently.
struct PauliString {
  BitVec x;
  BitVec z;
  bool negative = false;

  PauliString() = default;
  explicit PauliString(std::size_t n) : x(n), z(n) {}

  static PauliString identity(std::size_t n) { return PauliString(n); }
  static PauliString single(std::size_t n, std::size_t q, char p);
  // Parses "+XZI", "-XZI", "XZI"; U+2212 is accepted as a minus sign.
  static PauliString parse(std::string_view s);

  std::size_t size() const { return x.size(); }
  std::size_t weight() const { return (x | z).popcount(); }
  bool is_identity() const { return x.none() && z.none(); }
  char at(std::size_t q) const;
  void set(std::size_t q, char p);
  int sign() const { return negative ? -1 : 1; }

  // "+"/"-" prefix only when with_sign; otherwise a leading '-' for negative strings.
  std::string str(bool with_sign = false) const;

  // In-place Clifford conjugation P -> U P U^dagger.
  void conj_h(std::size_t q);
  void conj_s(std::size_t q);
  void conj_sdg(std::size_t q);
  void conj_x(std::size_t q);
  void conj_z(std::size_t q);
  void conj_cz(std::size_t a, std::size_t b);
  void conj_cx(std::size_t c, std::size_t t);

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.negative == b.negative && a.x == b.x && a.z == b.z;
  }
  // Equality ignoring sign.
  bool same_support_type(const PauliString& o) const { return x == o.x && z == o.z; }
};

// 0 iff p and q commute.
bool symplectic_product(const PauliString& p, const PauliString& q);

// Full product with the power of i it carries: p*q = i^phase * result.
struct PhasedPauli {
  PauliString pauli;
  int phase = 0;  // in Z4; sign already folded in for even values
};
PhasedPauli multiply_z4(const PauliString& p, const PauliString& q);

// Group product. For anticommuting inputs the residual factor i^(+-1) is dropped,
// keeping (-1)^floor(phase/2): X*Z = -iY is reported as -Y.
PauliString multiply(const PauliString& p, const PauliString& q);

// Product of commuting Paulis; throws ValidationError on a residual i-phase.
PauliString multiply_commuting(const PauliString& p, const PauliString& q);

// Dense GF(2) matrix stored as bit-vector rows.
struct BinaryMatrix {
  std::size_t cols = 0;
  std::vector<BitVec> rows;

  BinaryMatrix() = default;
  BinaryMatrix(std::size_t r, std::size_t c) : cols(c), rows(r, BitVec(c)) {}
  static BinaryMatrix from_rows(const std::vector<std::vector<int>>& m);
  std::size_t row_count() const { return rows.size(); }
  bool get(std::size_t r, std::size_t c) const { return rows[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows[r].set(c, v); }
  friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) {
    return a.cols == b.cols && a.rows == b.rows;
  }
};

struct RowOp {
  enum Kind { Swap, Add } kind;
  std::size_t src;  // Add: rows[dst] ^= rows[src]
  std::size_t dst;
  friend bool operator==(const RowOp&, const RowOp&) = default;
};

struct RrefResult {
  BinaryMatrix matrix;
  std::vector<std::size_t> pivots;
  std::vector<RowOp> log;
};

RrefResult gf2_rref(const BinaryMatrix& m);
// RREF visiting columns in the given order (a permutation of a subset of columns);
// pivots are reported in visiting order.
RrefResult gf2_rref_ordered(const BinaryMatrix& m, const std::vector<std::size_t>& column_order);
void apply_row_ops(BinaryMatrix& m, const std::vector<RowOp>& log);
std::size_t gf2_rank(const BinaryMatrix& m);
// Inverse of a square matrix, or nullopt if singular.
std::optional<BinaryMatrix> gf2_inverse(const BinaryMatrix& m);

struct StabilizerTableau {
  std::size_t n = 0;
  std::vector<PauliString> rows;

  StabilizerTableau() = default;
  explicit StabilizerTableau(std::size_t n_) : n(n_) {}
  StabilizerTableau(std::size_t n_, std::vector<PauliString> r);
  static StabilizerTableau from_strings(const std::vector<std::string>& rows);
  std::size_t row_count() const { return rows.size(); }
  std::size_t logical_count() const { return n - rows.size(); }
  friend bool operator==(const StabilizerTableau& a, const StabilizerTableau& b) {
    return a.n == b.n && a.rows == b.rows;
  }
};

struct ValidationReport {
  bool ok = true;
  std::string message;
  explicit operator bool() const { return ok; }
  static ValidationReport pass() { return {}; }
  static ValidationReport fail(std::string m) { return {false, std::move(m)}; }
};

ValidationReport tableau_validate(const StabilizerTableau& t);

enum class Membership { InGroup, InGroupUpToSign, NotInGroup };

// Precomputed elimination of a tableau for repeated membership queries.
class GroupMembership {
 public:
  explicit GroupMembership(const StabilizerTableau& t);
  Membership contains(const PauliString& p) const;
  // Rows whose product equals p up to sign, or nullopt.
  std::optional<BitVec> decompose(const PauliString& p) const;

 private:
  StabilizerTableau t_;
  std::vector<BitVec> basis_;   // eliminated symplectic vectors, length 2n
  std::vector<BitVec> combo_;   // which original rows form each basis vector
  std::vector<std::size_t> pivot_;
};

Membership group_contains(const StabilizerTableau& t, const PauliString& p);

// True iff the two tableaus generate the same signed group.
bool same_group(const StabilizerTableau& a, const StabilizerTableau& b);

// Symplectic vector (x | z) of length 2n.
BitVec symplectic_vector(const PauliString& p);

// Text format: one row per line, optional sign, '#' comments. An empty tableau keeps
// its qubit count through the pragma comment "# qubits: N".
StabilizerTableau parse_tableau(std::string_view text);
std::string emit_tableau(const StabilizerTableau& t);

}  // namespace qgc
