#include "qgc/pauli.hpp"

#include <sstream>
#include <utility>

namespace qgc {

namespace {

void require_same(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw DimensionError(std::string(what) + ": qubit count mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
}

}  // namespace

PauliString PauliString::single(std::size_t n, std::size_t q, char p) {
  PauliString r(n);
  r.set(q, p);
  return r;
}

char PauliString::at(std::size_t q) const {
  bool xb = x.get(q), zb = z.get(q);
  return xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
}

void PauliString::set(std::size_t q, char p) {
  switch (p) {
    case 'I': x.reset(q); z.reset(q); break;
    case 'X': x.set(q); z.reset(q); break;
    case 'Y': x.set(q); z.set(q); break;
    case 'Z': x.reset(q); z.set(q); break;
    default: throw ParseError(std::string("invalid Pauli letter '") + p + "'");
  }
}

PauliString PauliString::parse(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  } else if (s.size() >= 3 && static_cast<unsigned char>(s[0]) == 0xE2 &&
             static_cast<unsigned char>(s[1]) == 0x88 && static_cast<unsigned char>(s[2]) == 0x92) {
    neg = true;
    s.remove_prefix(3);
  }
  PauliString p(s.size());
  for (std::size_t q = 0; q < s.size(); ++q) p.set(q, s[q]);
  p.negative = neg;
  return p;
}

std::string PauliString::str(bool with_sign) const {
  std::string s;
  if (with_sign) s += negative ? '-' : '+';
  else if (negative) s += '-';
  for (std::size_t q = 0; q < size(); ++q) s += at(q);
  return s;
}

void PauliString::conj_h(std::size_t q) {
  bool xb = x.get(q), zb = z.get(q);
  negative ^= xb && zb;
  x.set(q, zb);
  z.set(q, xb);
}

void PauliString::conj_s(std::size_t q) {
  bool xb = x.get(q), zb = z.get(q);
  negative ^= xb && zb;
  z.set(q, zb ^ xb);
}

void PauliString::conj_sdg(std::size_t q) {
  bool xb = x.get(q), zb = z.get(q);
  negative ^= xb && !zb;
  z.set(q, zb ^ xb);
}

void PauliString::conj_x(std::size_t q) { negative ^= z.get(q); }
void PauliString::conj_z(std::size_t q) { negative ^= x.get(q); }

void PauliString::conj_cz(std::size_t a, std::size_t b) {
  bool xa = x.get(a), xb = x.get(b), za = z.get(a), zb = z.get(b);
  negative ^= xa && xb && (za != zb);
  z.set(a, za ^ xb);
  z.set(b, zb ^ xa);
}

void PauliString::conj_cx(std::size_t c, std::size_t t) {
  bool xc = x.get(c), xt = x.get(t), zc = z.get(c), zt = z.get(t);
  negative ^= xc && zt && (xt == zc);
  x.set(t, xt ^ xc);
  z.set(c, zc ^ zt);
}

bool symplectic_product(const PauliString& p, const PauliString& q) {
  require_same(p.size(), q.size(), "symplectic_product");
  return dot(p.x, q.z) ^ dot(p.z, q.x);
}

PhasedPauli multiply_z4(const PauliString& p, const PauliString& q) {
  require_same(p.size(), q.size(), "multiply");
  std::size_t n = p.size();
  PhasedPauli out{PauliString(n), 0};
  long plus = 0, minus = 0;
  for (std::size_t i = 0; i < p.x.word_count(); ++i) {
    std::uint64_t x1 = p.x.word(i), z1 = p.z.word(i), x2 = q.x.word(i), z2 = q.z.word(i);
    std::uint64_t X1 = x1 & ~z1, Y1 = x1 & z1, Z1 = ~x1 & z1;
    std::uint64_t X2 = x2 & ~z2, Y2 = x2 & z2, Z2 = ~x2 & z2;
    plus += std::popcount((X1 & Y2) | (Y1 & Z2) | (Z1 & X2));
    minus += std::popcount((X1 & Z2) | (Y1 & X2) | (Z1 & Y2));
    out.pauli.x.data()[i] = x1 ^ x2;
    out.pauli.z.data()[i] = z1 ^ z2;
  }
  long ph = plus - minus + 2 * (static_cast<long>(p.negative) + static_cast<long>(q.negative));
  ph %= 4;
  if (ph < 0) ph += 4;
  out.phase = static_cast<int>(ph);
  out.pauli.negative = out.phase >= 2;
  return out;
}

PauliString multiply(const PauliString& p, const PauliString& q) { return multiply_z4(p, q).pauli; }

PauliString multiply_commuting(const PauliString& p, const PauliString& q) {
  auto r = multiply_z4(p, q);
  if (r.phase & 1) throw ValidationError("product of anticommuting Paulis has an imaginary phase");
  return std::move(r.pauli);
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& m) {
  std::size_t c = m.empty() ? 0 : m[0].size();
  BinaryMatrix b(m.size(), c);
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (m[r].size() != c) throw DimensionError("BinaryMatrix: ragged rows");
    for (std::size_t j = 0; j < c; ++j) b.set(r, j, m[r][j] & 1);
  }
  return b;
}

RrefResult gf2_rref_ordered(const BinaryMatrix& m, const std::vector<std::size_t>& order) {
  RrefResult res{m, {}, {}};
  auto& rows = res.matrix.rows;
  std::size_t r = 0;
  for (std::size_t c : order) {
    if (r == rows.size()) break;
    std::size_t piv = r;
    while (piv < rows.size() && !rows[piv].get(c)) ++piv;
    if (piv == rows.size()) continue;
    if (piv != r) {
      std::swap(rows[piv], rows[r]);
      res.log.push_back({RowOp::Swap, piv, r});
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i].get(c)) {
        rows[i] ^= rows[r];
        res.log.push_back({RowOp::Add, r, i});
      }
    }
    res.pivots.push_back(c);
    ++r;
  }
  return res;
}

RrefResult gf2_rref(const BinaryMatrix& m) {
  std::vector<std::size_t> order(m.cols);
  for (std::size_t c = 0; c < m.cols; ++c) order[c] = c;
  return gf2_rref_ordered(m, order);
}

void apply_row_ops(BinaryMatrix& m, const std::vector<RowOp>& log) {
  for (const auto& op : log) {
    if (op.kind == RowOp::Swap) std::swap(m.rows[op.src], m.rows[op.dst]);
    else m.rows[op.dst] ^= m.rows[op.src];
  }
}

std::size_t gf2_rank(const BinaryMatrix& m) { return gf2_rref(m).pivots.size(); }

std::optional<BinaryMatrix> gf2_inverse(const BinaryMatrix& m) {
  std::size_t k = m.row_count();
  if (m.cols != k) throw DimensionError("gf2_inverse: matrix is not square");
  auto red = gf2_rref(m);
  if (red.pivots.size() != k) return std::nullopt;
  BinaryMatrix inv(k, k);
  for (std::size_t i = 0; i < k; ++i) inv.set(i, i);
  apply_row_ops(inv, red.log);
  return inv;
}

StabilizerTableau::StabilizerTableau(std::size_t n_, std::vector<PauliString> r) : n(n_), rows(std::move(r)) {
  for (const auto& p : rows) require_same(p.size(), n, "StabilizerTableau");
}

StabilizerTableau StabilizerTableau::from_strings(const std::vector<std::string>& rs) {
  std::vector<PauliString> rows;
  for (const auto& s : rs) rows.push_back(PauliString::parse(s));
  std::size_t n = rows.empty() ? 0 : rows[0].size();
  return StabilizerTableau(n, std::move(rows));
}

BitVec symplectic_vector(const PauliString& p) {
  std::size_t n = p.size();
  BitVec v(2 * n);
  p.x.for_each([&](std::size_t i) { v.set(i); });
  p.z.for_each([&](std::size_t i) { v.set(n + i); });
  return v;
}

ValidationReport tableau_validate(const StabilizerTableau& t) {
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.rows[i].size() != t.n)
      return ValidationReport::fail("row " + std::to_string(i) + " has the wrong qubit count");
  if (t.rows.size() > t.n) return ValidationReport::fail("more rows than qubits");
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (std::size_t j = i + 1; j < t.rows.size(); ++j)
      if (symplectic_product(t.rows[i], t.rows[j]))
        return ValidationReport::fail("rows " + std::to_string(i) + " and " + std::to_string(j) + " anticommute");
  // Incremental elimination finds the first row dependent on earlier ones.
  std::vector<BitVec> basis;
  std::vector<std::size_t> piv;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    BitVec v = symplectic_vector(t.rows[i]);
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (v.get(piv[b])) v ^= basis[b];
    if (v.none()) return ValidationReport::fail("row " + std::to_string(i) + " is dependent on earlier rows");
    piv.push_back(v.first());
    basis.push_back(std::move(v));
  }
  return ValidationReport::pass();
}

GroupMembership::GroupMembership(const StabilizerTableau& t) : t_(t) {
  std::size_t r = t.rows.size();
  for (std::size_t i = 0; i < r; ++i) {
    BitVec v = symplectic_vector(t.rows[i]);
    BitVec c(r);
    c.set(i);
    for (std::size_t b = 0; b < basis_.size(); ++b)
      if (v.get(pivot_[b])) {
        v ^= basis_[b];
        c ^= combo_[b];
      }
    if (v.none()) continue;  // dependent row adds nothing
    std::size_t p = v.first();
    // keep earlier basis vectors reduced at the new pivot
    for (std::size_t b = 0; b < basis_.size(); ++b)
      if (basis_[b].get(p)) {
        basis_[b] ^= v;
        combo_[b] ^= c;
      }
    basis_.push_back(std::move(v));
    combo_.push_back(std::move(c));
    pivot_.push_back(p);
  }
}

std::optional<BitVec> GroupMembership::decompose(const PauliString& p) const {
  require_same(p.size(), t_.n, "group_contains");
  BitVec v = symplectic_vector(p);
  BitVec c(t_.rows.size());
  for (std::size_t b = 0; b < basis_.size(); ++b)
    if (v.get(pivot_[b])) {
      v ^= basis_[b];
      c ^= combo_[b];
    }
  if (v.any()) return std::nullopt;
  return c;
}

Membership GroupMembership::contains(const PauliString& p) const {
  auto c = decompose(p);
  if (!c) return Membership::NotInGroup;
  PauliString prod = PauliString::identity(t_.n);
  c->for_each([&](std::size_t i) { prod = multiply_commuting(prod, t_.rows[i]); });
  return prod.negative == p.negative ? Membership::InGroup : Membership::InGroupUpToSign;
}

Membership group_contains(const StabilizerTableau& t, const PauliString& p) {
  return GroupMembership(t).contains(p);
}

bool same_group(const StabilizerTableau& a, const StabilizerTableau& b) {
  if (a.n != b.n) return false;
  GroupMembership ga(a), gb(b);
  for (const auto& r : b.rows)
    if (ga.contains(r) != Membership::InGroup) return false;
  for (const auto& r : a.rows)
    if (gb.contains(r) != Membership::InGroup) return false;
  return true;
}

StabilizerTableau parse_tableau(std::string_view text) {
  std::vector<PauliString> rows;
  std::optional<std::size_t> declared;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto h = line.find('#'); h != std::string_view::npos) {
      std::string_view comment = line.substr(h + 1);
      constexpr std::string_view tag = " qubits: ";
      if (h == 0 && comment.substr(0, tag.size()) == tag)
        declared = std::stoul(std::string(comment.substr(tag.size())));
      line = line.substr(0, h);
    }
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty()) continue;
    try {
      rows.push_back(PauliString::parse(line));
    } catch (const ParseError& e) {
      throw ParseError("tableau line " + std::to_string(line_no) + ": " + e.what());
    }
    if (rows.back().size() != rows.front().size())
      throw ParseError("tableau line " + std::to_string(line_no) + ": inconsistent qubit count");
  }
  std::size_t n = rows.empty() ? declared.value_or(0) : rows.front().size();
  if (declared && *declared != n) throw ParseError("tableau: declared qubit count disagrees with rows");
  return StabilizerTableau(n, std::move(rows));
}

std::string emit_tableau(const StabilizerTableau& t) {
  std::ostringstream os;
  if (t.rows.empty()) os << "# qubits: " << t.n << "\n";
  for (const auto& r : t.rows) os << r.str() << "\n";
  return os.str();
}

}  // namespace qgc
