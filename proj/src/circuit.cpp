#include "qgc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qgc {

bool diag_label_known(std::string_view label, std::size_t arity) {
  if (label == "I") return arity >= 1;
  if (label == "Z" || label == "S" || label == "SDG" || label == "T" || label == "TDG") return arity == 1;
  if (label == "CZ" || label == "CS") return arity == 2;
  if (label == "CCZ") return arity == 3;
  return false;
}

bool diag_label_clifford(std::string_view label) {
  return label == "I" || label == "Z" || label == "S" || label == "SDG" || label == "CZ";
}

bool Gate::is_diagonal() const {
  return kind == GateKind::S || kind == GateKind::Z || kind == GateKind::CZ || kind == GateKind::Diag;
}

bool Gate::is_clifford() const { return kind != GateKind::Diag || diag_label_clifford(label); }

void Circuit::add_layer(std::vector<Gate> layer) {
  if (layer.empty()) return;
  if (frontier_.size() == n_wires)
    for (const auto& g : layer)
      for (auto w : g.wires) frontier_[w] = layers.size() + 1;
  layers.push_back(std::move(layer));
}

void Circuit::push_scheduled(const Gate& g) {
  if (frontier_.size() != n_wires) {
    frontier_.assign(n_wires, 0);
    for (std::size_t l = 0; l < layers.size(); ++l)
      for (const auto& x : layers[l])
        for (auto w : x.wires) frontier_[w] = l + 1;
  }
  std::size_t at = 0;
  for (auto w : g.wires) {
    if (w >= n_wires) throw DimensionError("gate wire out of range");
    at = std::max(at, frontier_[w]);
  }
  if (at == layers.size()) layers.emplace_back();
  layers[at].push_back(g);
  for (auto w : g.wires) frontier_[w] = at + 1;
}

void Circuit::append(const Circuit& other) {
  if (other.n_wires != n_wires) throw DimensionError("append: wire count mismatch");
  for (const auto& l : other.layers) layers.push_back(l);
  frontier_.clear();
}

std::size_t Circuit::depth() const {
  std::size_t d = 0;
  for (const auto& l : layers) {
    std::size_t c = 0;
    for (const auto& g : l) c = std::max(c, g.cost());
    d += c;
  }
  return d;
}

std::size_t Circuit::gate_count() const {
  std::size_t c = 0;
  for (const auto& l : layers) c += l.size();
  return c;
}

std::vector<std::size_t> Circuit::resolved_inputs() const {
  if (!input_wires.empty()) return input_wires;
  std::vector<bool> prepped(n_wires, false);
  for (const auto& l : layers)
    for (const auto& g : l)
      if (g.is_prep()) prepped[g.wires[0]] = true;
  std::vector<std::size_t> r;
  for (std::size_t w = 0; w < n_wires; ++w)
    if (!prepped[w]) r.push_back(w);
  return r;
}

void Circuit::validate() const {
  std::vector<bool> touched(n_wires, false), prepped(n_wires, false);
  for (std::size_t li = 0; li < layers.size(); ++li) {
    std::vector<bool> used(n_wires, false);
    for (const auto& g : layers[li]) {
      std::size_t arity = g.kind == GateKind::CZ ? 2 : (g.kind == GateKind::Diag ? g.wires.size() : 1);
      if (g.wires.size() != arity || g.wires.empty())
        throw ValidationError("layer " + std::to_string(li) + ": wrong wire count for gate");
      if (g.kind == GateKind::Diag && !diag_label_known(g.label, g.wires.size()))
        throw UnsupportedError("unknown diagonal block \"" + g.label + "\"");
      for (auto w : g.wires) {
        if (w >= n_wires) throw DimensionError("layer " + std::to_string(li) + ": wire out of range");
        if (used[w]) throw ValidationError("layer " + std::to_string(li) + ": overlapping gates on wire " + std::to_string(w));
        used[w] = true;
      }
      if (g.is_prep()) {
        auto w = g.wires[0];
        if (touched[w]) throw ValidationError("preparation on wire " + std::to_string(w) + " after other gates");
        prepped[w] = true;
      }
      for (auto w : g.wires) touched[w] = true;
    }
  }
  for (auto w : input_wires) {
    if (w >= n_wires) throw DimensionError("input wire out of range");
    if (prepped[w]) throw ValidationError("input wire " + std::to_string(w) + " is also prepared");
  }
  if (!input_wires.empty()) {
    std::size_t free_wires = 0;
    for (std::size_t w = 0; w < n_wires; ++w) free_wires += !prepped[w];
    if (free_wires != input_wires.size()) throw ValidationError("every wire must be an input or prepared");
  }
}

namespace {

std::string gate_text(const Gate& g) {
  auto w = [&](std::size_t i) { return std::to_string(g.wires[i]); };
  switch (g.kind) {
    case GateKind::PrepPlus: return "PREP+ " + w(0);
    case GateKind::PrepZero: return "PREP0 " + w(0);
    case GateKind::H: return "H " + w(0);
    case GateKind::S: return "S " + w(0);
    case GateKind::Z: return "Z " + w(0);
    case GateKind::CZ: return "CZ " + w(0) + " " + w(1);
    case GateKind::Diag: {
      std::string s = "DIAG " + g.label + " ";
      for (std::size_t i = 0; i < g.wires.size(); ++i) s += (i ? "," : "") + w(i);
      return s + " " + std::to_string(g.declared_depth);
    }
  }
  return {};
}

std::vector<std::size_t> parse_wire_list(const std::string& s) {
  std::vector<std::size_t> r;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw ParseError("empty wire index");
    r.push_back(std::stoul(item));
  }
  return r;
}

Gate parse_gate(const std::string& text) {
  std::istringstream is(text);
  std::string op;
  is >> op;
  auto one = [&]() {
    std::size_t q;
    if (!(is >> q)) throw ParseError("missing wire in \"" + text + "\"");
    return q;
  };
  Gate g{GateKind::H, {}, {}, 1};
  if (op == "PREP+") g = Gate::prep_plus(one());
  else if (op == "PREP0") g = Gate::prep_zero(one());
  else if (op == "H") g = Gate::h(one());
  else if (op == "S") g = Gate::s(one());
  else if (op == "Z") g = Gate::z(one());
  else if (op == "CZ") {
    auto a = one();
    g = Gate::cz(a, one());
  } else if (op == "DIAG") {
    std::string label, wires;
    if (!(is >> label >> wires)) throw ParseError("malformed DIAG gate \"" + text + "\"");
    std::size_t depth = 1;
    if (!(is >> depth)) depth = 1;
    g = Gate::diag(label, parse_wire_list(wires), depth);
  } else {
    throw ParseError("unknown gate \"" + op + "\"");
  }
  std::string rest;
  if (is >> rest) throw ParseError("trailing text in gate \"" + text + "\"");
  return g;
}

}  // namespace

std::string emit_circuit(const Circuit& c) {
  std::ostringstream os;
  os << "WIRES " << c.n_wires << "\n";
  if (!c.input_wires.empty()) {
    os << "INPUTS ";
    for (std::size_t i = 0; i < c.input_wires.size(); ++i) os << (i ? "," : "") << c.input_wires[i];
    os << "\n";
  }
  for (const auto& l : c.layers) {
    for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "; " : "") << gate_text(l[i]);
    os << "\n";
  }
  return os.str();
}

Circuit parse_circuit(std::string_view text) {
  Circuit c;
  bool have_header = false;
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    if (line.empty()) continue;
    try {
      if (!have_header) {
        if (line.rfind("WIRES ", 0) != 0) throw ParseError("circuit must start with \"WIRES n\"");
        c.n_wires = std::stoul(line.substr(6));
        have_header = true;
        continue;
      }
      if (line.rfind("INPUTS", 0) == 0) {
        std::string rest = line.substr(6);
        rest.erase(0, rest.find_first_not_of(' '));
        c.input_wires = rest.empty() ? std::vector<std::size_t>{} : parse_wire_list(rest);
        continue;
      }
      std::vector<Gate> layer;
      std::stringstream ls(line);
      std::string item;
      while (std::getline(ls, item, ';')) {
        item.erase(0, item.find_first_not_of(' '));
        if (item.empty()) continue;
        layer.push_back(parse_gate(item));
      }
      c.layers.push_back(std::move(layer));
    } catch (const ParseError& e) {
      throw ParseError("circuit line " + std::to_string(line_no) + ": " + e.what());
    } catch (const std::logic_error&) {
      throw ParseError("circuit line " + std::to_string(line_no) + ": bad number");
    }
  }
  if (!have_header) throw ParseError("circuit must start with \"WIRES n\"");
  c.validate();
  return c;
}

namespace {

void conj_gate(PauliString& p, const Gate& g) {
  switch (g.kind) {
    case GateKind::H: p.conj_h(g.wires[0]); break;
    case GateKind::S: p.conj_s(g.wires[0]); break;
    case GateKind::Z: p.conj_z(g.wires[0]); break;
    case GateKind::CZ: p.conj_cz(g.wires[0], g.wires[1]); break;
    case GateKind::Diag:
      if (g.label == "I") break;
      if (g.label == "Z") p.conj_z(g.wires[0]);
      else if (g.label == "S") p.conj_s(g.wires[0]);
      else if (g.label == "SDG") p.conj_sdg(g.wires[0]);
      else if (g.label == "CZ") p.conj_cz(g.wires[0], g.wires[1]);
      else throw UnsupportedError("non-Clifford block \"" + g.label + "\" in stabilizer simulation");
      break;
    default: break;
  }
}

}  // namespace

StabilizerSimResult simulate_stabilizer(const Circuit& c) {
  c.validate();
  std::size_t n = c.n_wires;
  std::vector<int> prep(n, -1);  // 0: |0>, 1: |+>
  for (const auto& l : c.layers)
    for (const auto& g : l) {
      if (g.is_prep()) prep[g.wires[0]] = g.kind == GateKind::PrepPlus ? 1 : 0;
      else if (!g.is_clifford()) throw UnsupportedError("non-Clifford block \"" + g.label + "\" in stabilizer simulation");
    }
  StabilizerSimResult res;
  res.inputs = c.resolved_inputs();
  res.stabilizers = StabilizerTableau(n);
  for (std::size_t w = 0; w < n; ++w)
    if (prep[w] >= 0) res.stabilizers.rows.push_back(PauliString::single(n, w, prep[w] ? 'X' : 'Z'));
  for (auto w : res.inputs)
    res.logicals.push_back({PauliString::single(n, w, 'X'), PauliString::single(n, w, 'Z')});
  for (const auto& l : c.layers)
    for (const auto& g : l) {
      if (g.is_prep()) continue;
      for (auto& r : res.stabilizers.rows) conj_gate(r, g);
      for (auto& lp : res.logicals) {
        conj_gate(lp.x, g);
        conj_gate(lp.z, g);
      }
    }
  return res;
}

namespace {

using cd = std::complex<double>;

void apply_gate(const Gate& g, StateVector& psi) {
  const std::size_t dim = psi.size();
  auto bit = [](std::size_t i, std::size_t w) { return (i >> w) & 1U; };
  switch (g.kind) {
    case GateKind::PrepZero: break;
    case GateKind::PrepPlus:
    case GateKind::H: {
      const double r = 1.0 / std::numbers::sqrt2;
      std::size_t m = std::size_t{1} << g.wires[0];
      for (std::size_t i = 0; i < dim; ++i)
        if (!(i & m)) {
          cd a = psi[i], b = psi[i | m];
          psi[i] = r * (a + b);
          psi[i | m] = r * (a - b);
        }
      break;
    }
    case GateKind::S:
      for (std::size_t i = 0; i < dim; ++i)
        if (bit(i, g.wires[0])) psi[i] *= cd(0, 1);
      break;
    case GateKind::Z:
      for (std::size_t i = 0; i < dim; ++i)
        if (bit(i, g.wires[0])) psi[i] = -psi[i];
      break;
    case GateKind::CZ:
      for (std::size_t i = 0; i < dim; ++i)
        if (bit(i, g.wires[0]) && bit(i, g.wires[1])) psi[i] = -psi[i];
      break;
    case GateKind::Diag: {
      const auto& L = g.label;
      for (std::size_t i = 0; i < dim; ++i) {
        std::size_t all = 1;
        for (auto w : g.wires) all &= bit(i, w);
        cd f = 1;
        if (L == "I") f = 1;
        else if (L == "Z" || L == "CZ" || L == "CCZ") f = all ? -1.0 : 1.0;
        else if (L == "S" || L == "CS") f = all ? cd(0, 1) : cd(1, 0);
        else if (L == "SDG") f = all ? cd(0, -1) : cd(1, 0);
        else if (L == "T") f = all ? std::polar(1.0, std::numbers::pi / 4) : cd(1, 0);
        else if (L == "TDG") f = all ? std::polar(1.0, -std::numbers::pi / 4) : cd(1, 0);
        else throw UnsupportedError("unknown diagonal block \"" + L + "\"");
        psi[i] *= f;
      }
      break;
    }
  }
}

}  // namespace

void apply_unitary_part(const Circuit& c, StateVector& psi) {
  if (psi.size() != (std::size_t{1} << c.n_wires)) throw DimensionError("statevector size mismatch");
  for (const auto& l : c.layers)
    for (const auto& g : l)
      if (!g.is_prep()) apply_gate(g, psi);
}

StateVector simulate_statevector(const Circuit& c, const StateVector& logical_state) {
  c.validate();
  if (c.n_wires > kStatevectorCapacity)
    throw UnsupportedError("statevector capacity exceeded: " + std::to_string(c.n_wires) + " wires > " +
                           std::to_string(kStatevectorCapacity));
  auto ins = c.resolved_inputs();
  if (logical_state.size() != (std::size_t{1} << ins.size())) throw DimensionError("logical state size mismatch");
  StateVector psi(std::size_t{1} << c.n_wires, 0.0);
  for (std::size_t L = 0; L < logical_state.size(); ++L) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < ins.size(); ++j)
      if ((L >> j) & 1U) idx |= std::size_t{1} << ins[j];
    psi[idx] = logical_state[L];
  }
  for (const auto& l : c.layers)
    for (const auto& g : l) apply_gate(g, psi);
  return psi;
}

StateVector simulate_statevector(const Circuit& c) {
  StateVector basis(std::size_t{1} << c.resolved_inputs().size(), 0.0);
  basis[0] = 1.0;
  return simulate_statevector(c, basis);
}

}  // namespace qgc
