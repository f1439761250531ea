#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qclc/gf2.hpp"

namespace qclc {

enum class OpKind { InitZ, InitX, MeasZ, MeasX, CNOT, H, S, I, PauliX, PauliY, PauliZ };

bool is_init(OpKind k);
bool is_meas(OpKind k);
bool is_pauli(OpKind k);
bool is_gate(OpKind k);   // CNOT, H, S, I, Paulis
const char* mnemonic(OpKind k);

struct Operation {
  OpKind kind = OpKind::I;
  int q = 0;        // 1-based; control for CNOT
  int target = 0;   // CNOT target, 0 otherwise
  int line = 0;     // source line, 0 when built programmatically

  bool touches(int qubit) const { return q == qubit || (kind == OpKind::CNOT && target == qubit); }
  bool operator==(const Operation& o) const {
    return kind == o.kind && q == o.q && target == o.target;
  }
};

struct Circuit {
  int n = 0;
  std::vector<std::vector<Operation>> layers;  // layer t is layers[t-1]

  int depth() const { return static_cast<int>(layers.size()); }
  // Operation acting on qubit q in layer t (1-based), or nullptr.
  const Operation* op_at(int t, int q) const;
  bool operator==(const Circuit& o) const { return n == o.n && layers == o.layers; }
};

class ParseError : public DomainError {
public:
  ParseError(int line, const std::string& msg)
      : DomainError("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

struct Violation {
  int line = 0;    // 0 when unknown
  int layer = 0;
  int qubit = 0;
  std::string message;
};

std::vector<Violation> validate(const Circuit& c);
// Throws ParseError (first violation) when the circuit is invalid.
void require_valid(const Circuit& c);

// Layers are terminated by `tick`; trailing operations form a final layer.
Circuit parse_circuit(std::istream& in);
Circuit parse_circuit(const std::string& text);
Circuit load_circuit(const std::string& path);
std::string serialize(const Circuit& c);

// active[q][t] (q, t 1-based): qubit q carries a gadget in layer t.  A qubit is
// live from the start unless its first non-identity, non-Pauli operation is an
// initialisation, and dead between a measurement and the next initialisation.
std::vector<std::vector<char>> active_layers(const Circuit& c);

struct OpSite {
  int qubit = 0;
  int layer = 0;
  OpKind kind = OpKind::I;
};

struct MeasInitPair {
  int qubit = 0;
  OpSite meas;
  OpSite init;
  int ancilla = 0;   // n + l
};

struct ExtendedCircuit {
  Circuit circuit;   // swaps lowered to CNOT triples
  int n = 0;         // original qubit count
  int n_p = 0;
  std::vector<MeasInitPair> pairs;
  std::vector<OpSite> single_inits;   // initialisations that start a qubit
  std::vector<OpSite> single_meas;    // measurements never followed by an initialisation
  // first extended layer holding original layer t, index t-1
  std::vector<int> layer_map;
};

ExtendedCircuit extend(const Circuit& c);

}  // namespace qclc
