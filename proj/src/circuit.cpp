#include "qclc/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace qclc {

bool is_init(OpKind k) { return k == OpKind::InitZ || k == OpKind::InitX; }
bool is_meas(OpKind k) { return k == OpKind::MeasZ || k == OpKind::MeasX; }
bool is_pauli(OpKind k) {
  return k == OpKind::PauliX || k == OpKind::PauliY || k == OpKind::PauliZ;
}
bool is_gate(OpKind k) { return !is_init(k) && !is_meas(k); }

const char* mnemonic(OpKind k) {
  switch (k) {
    case OpKind::InitZ: return "rz";
    case OpKind::InitX: return "rx";
    case OpKind::MeasZ: return "mz";
    case OpKind::MeasX: return "mx";
    case OpKind::CNOT: return "cnot";
    case OpKind::H: return "h";
    case OpKind::S: return "s";
    case OpKind::I: return "i";
    case OpKind::PauliX: return "x";
    case OpKind::PauliY: return "y";
    case OpKind::PauliZ: return "z";
  }
  return "?";
}

const Operation* Circuit::op_at(int t, int q) const {
  if (t < 1 || t > depth()) return nullptr;
  for (const auto& op : layers[t - 1])
    if (op.touches(q)) return &op;
  return nullptr;
}

std::vector<Violation> validate(const Circuit& c) {
  std::vector<Violation> out;
  auto bad = [&](const Operation& op, int t, int q, std::string msg) {
    out.push_back({op.line, t, q, std::move(msg)});
  };
  if (c.n < 0) out.push_back({0, 0, 0, "negative qubit count"});
  enum State { Fresh, Live, Dead };
  std::vector<State> state(std::max(c.n, 0) + 1, Fresh);
  for (int t = 1; t <= c.depth(); ++t) {
    std::vector<int> seen(std::max(c.n, 0) + 1, 0);
    for (const auto& op : c.layers[t - 1]) {
      std::vector<int> qs{op.q};
      if (op.kind == OpKind::CNOT) {
        qs.push_back(op.target);
        if (op.q == op.target) bad(op, t, op.q, "cnot control equals target");
      }
      bool in_range = true;
      for (int q : qs)
        if (q < 1 || q > c.n) {
          bad(op, t, q, "qubit " + std::to_string(q) + " out of range 1.." + std::to_string(c.n));
          in_range = false;
        }
      if (!in_range) continue;
      for (int q : qs) {
        if (seen[q]++) bad(op, t, q, "qubit " + std::to_string(q) + " used twice in layer " + std::to_string(t));
      }
      for (int q : qs) {
        State& s = state[q];
        const std::string where = " on qubit " + std::to_string(q);
        if (is_init(op.kind)) {
          if (s == Live) bad(op, t, q, std::string(mnemonic(op.kind)) + where + " while the qubit is still in use (measure it first)");
          s = Live;
        } else if (is_meas(op.kind)) {
          if (s == Dead) bad(op, t, q, std::string(mnemonic(op.kind)) + where + " after a measurement without re-initialisation");
          s = Dead;
        } else if (op.kind == OpKind::I || is_pauli(op.kind)) {
          // allowed anywhere
        } else {
          if (s == Dead) bad(op, t, q, std::string(mnemonic(op.kind)) + where + " after a measurement without re-initialisation");
          s = Live;
        }
      }
    }
  }
  return out;
}

void require_valid(const Circuit& c) {
  auto v = validate(c);
  if (v.empty()) return;
  const auto& f = v.front();
  if (f.line > 0) throw ParseError(f.line, f.message);
  throw DomainError("layer " + std::to_string(f.layer) + ": " + f.message);
}

namespace {

std::string lower(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

int parse_index(const std::string& tok, int line) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (...) {
    throw ParseError(line, "expected a qubit index, got '" + tok + "'");
  }
  if (pos != tok.size()) throw ParseError(line, "expected a qubit index, got '" + tok + "'");
  return v;
}

void sort_layer(std::vector<Operation>& layer) {
  std::stable_sort(layer.begin(), layer.end(),
                   [](const Operation& a, const Operation& b) { return a.q < b.q; });
}

}  // namespace

Circuit parse_circuit(std::istream& in) {
  static const std::map<std::string, OpKind> ops = {
      {"rz", OpKind::InitZ}, {"rx", OpKind::InitX}, {"mz", OpKind::MeasZ}, {"mx", OpKind::MeasX},
      {"cnot", OpKind::CNOT}, {"h", OpKind::H},      {"s", OpKind::S},      {"i", OpKind::I},
      {"x", OpKind::PauliX},  {"y", OpKind::PauliY}, {"z", OpKind::PauliZ}};
  Circuit c;
  bool have_header = false;
  std::vector<Operation> cur;
  bool cur_open = false;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string s; ls >> s;) tok.push_back(s);
    if (tok.empty()) continue;
    const std::string head = lower(tok[0]);
    if (!have_header) {
      if (head != "qubits" || tok.size() != 2) throw ParseError(line, "expected 'qubits <n>' header");
      c.n = parse_index(tok[1], line);
      if (c.n < 0) throw ParseError(line, "negative qubit count");
      have_header = true;
      continue;
    }
    if (head == "qubits") throw ParseError(line, "duplicate 'qubits' header");
    if (head == "tick") {
      if (tok.size() != 1) throw ParseError(line, "'tick' takes no arguments");
      sort_layer(cur);
      c.layers.push_back(std::move(cur));
      cur.clear();
      cur_open = false;
      continue;
    }
    auto it = ops.find(head);
    if (it == ops.end()) throw ParseError(line, "unknown mnemonic '" + tok[0] + "'");
    Operation op;
    op.kind = it->second;
    op.line = line;
    const std::size_t want = op.kind == OpKind::CNOT ? 3 : 2;
    if (tok.size() != want)
      throw ParseError(line, "'" + head + "' expects " + std::to_string(want - 1) + " qubit index(es)");
    op.q = parse_index(tok[1], line);
    if (op.kind == OpKind::CNOT) op.target = parse_index(tok[2], line);
    cur.push_back(op);
    cur_open = true;
  }
  if (!have_header) throw ParseError(line, "missing 'qubits <n>' header");
  if (cur_open) {
    sort_layer(cur);
    c.layers.push_back(std::move(cur));
  }
  require_valid(c);
  return c;
}

Circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  return parse_circuit(in);
}

Circuit load_circuit(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw DomainError("cannot open circuit file '" + path + "'");
  return parse_circuit(f);
}

std::string serialize(const Circuit& c) {
  std::ostringstream o;
  o << "qubits " << c.n << '\n';
  for (int t = 1; t <= c.depth(); ++t) {
    auto layer = c.layers[t - 1];
    sort_layer(layer);
    for (const auto& op : layer) {
      o << mnemonic(op.kind) << ' ' << op.q;
      if (op.kind == OpKind::CNOT) o << ' ' << op.target;
      o << '\n';
    }
    // the last layer needs a terminator only when it has no operations
    if (t < c.depth() || layer.empty()) o << "tick\n";
  }
  return o.str();
}

std::vector<std::vector<char>> active_layers(const Circuit& c) {
  const int T = c.depth();
  std::vector<std::vector<char>> act(c.n + 1, std::vector<char>(T + 1, 0));
  for (int q = 1; q <= c.n; ++q) {
    bool live = true;
    for (int t = 1; t <= T; ++t) {
      const Operation* op = c.op_at(t, q);
      if (op && !(op->kind == OpKind::I || is_pauli(op->kind))) {
        live = !is_init(op->kind);
        break;
      }
    }
    for (int t = 1; t <= T; ++t) {
      const Operation* op = c.op_at(t, q);
      const OpKind k = op ? op->kind : OpKind::I;
      if (is_init(k)) {
        act[q][t] = 1;
        live = true;
      } else if (is_meas(k)) {
        act[q][t] = 1;
        live = false;
      } else if (k == OpKind::I || is_pauli(k)) {
        act[q][t] = live;
      } else {
        act[q][t] = 1;
      }
    }
  }
  return act;
}

ExtendedCircuit extend(const Circuit& c) {
  require_valid(c);
  ExtendedCircuit ex;
  ex.n = c.n;
  const int T = c.depth();
  const auto act = active_layers(c);

  // classify initialisations and measurements
  for (int q = 1; q <= c.n; ++q) {
    std::vector<OpSite> events;
    for (int t = 1; t <= T; ++t)
      if (const Operation* op = c.op_at(t, q); op && (is_init(op->kind) || is_meas(op->kind)))
        events.push_back({q, t, op->kind});
    for (std::size_t i = 0; i < events.size(); ++i) {
      const OpSite& e = events[i];
      if (is_meas(e.kind)) {
        if (i + 1 < events.size() && is_init(events[i + 1].kind)) {
          MeasInitPair p;
          p.qubit = q;
          p.meas = e;
          p.init = events[i + 1];
          ex.pairs.push_back(p);
          ++i;
        } else {
          ex.single_meas.push_back(e);
        }
      } else {
        ex.single_inits.push_back(e);
      }
    }
  }
  std::sort(ex.pairs.begin(), ex.pairs.end(), [](const MeasInitPair& a, const MeasInitPair& b) {
    return std::tie(a.meas.layer, a.qubit) < std::tie(b.meas.layer, b.qubit);
  });
  ex.n_p = static_cast<int>(ex.pairs.size());
  for (int l = 0; l < ex.n_p; ++l) ex.pairs[l].ancilla = c.n + l + 1;

  Circuit& e = ex.circuit;
  e.n = c.n + ex.n_p;
  std::vector<Operation> first;
  for (const auto& s : ex.single_inits) first.push_back({s.kind, s.qubit, 0, 0});
  for (const auto& p : ex.pairs) first.push_back({p.init.kind, p.ancilla, 0, 0});
  sort_layer(first);
  e.layers.push_back(first);

  for (int t = 1; t <= T; ++t) {
    std::vector<Operation> gates;
    std::vector<std::pair<int, int>> swaps;
    for (const auto& op : c.layers[t - 1]) {
      if (is_init(op.kind)) continue;
      if (is_meas(op.kind)) {
        for (const auto& p : ex.pairs)
          if (p.meas.layer == t && p.qubit == op.q) swaps.push_back({op.q, p.ancilla});
        continue;
      }
      if (op.kind == OpKind::I) continue;
      if (is_pauli(op.kind) && !act[op.q][t]) continue;  // acts on a discarded state
      gates.push_back({op.kind, op.q, op.target, 0});
    }
    ex.layer_map.push_back(e.depth() + 1);
    if (swaps.empty()) {
      sort_layer(gates);
      e.layers.push_back(gates);
      continue;
    }
    std::vector<Operation> l1 = gates, l2, l3;
    for (auto [q, a] : swaps) {
      l1.push_back({OpKind::CNOT, q, a, 0});
      l2.push_back({OpKind::CNOT, a, q, 0});
      l3.push_back({OpKind::CNOT, q, a, 0});
    }
    sort_layer(l1);
    sort_layer(l2);
    sort_layer(l3);
    e.layers.push_back(l1);
    e.layers.push_back(l2);
    e.layers.push_back(l3);
  }

  std::vector<Operation> last;
  for (const auto& s : ex.single_meas) last.push_back({s.kind, s.qubit, 0, 0});
  for (const auto& p : ex.pairs) last.push_back({p.meas.kind, p.ancilla, 0, 0});
  sort_layer(last);
  e.layers.push_back(last);
  return ex;
}

}  // namespace qclc
