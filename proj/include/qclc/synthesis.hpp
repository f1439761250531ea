#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qclc/circuit.hpp"
#include "qclc/pauli.hpp"
#include "qclc/splitting.hpp"
#include "qclc/tanner.hpp"

namespace qclc {

// A vertex of the symmetric subgraph: a check or a non-long-terminal bit.
struct Node {
  bool check = false;
  int id = 0;
  bool operator==(const Node& o) const { return check == o.check && id == o.id; }
  bool operator<(const Node& o) const { return check != o.check ? !check : id < o.id; }
};

enum class Role { X, Z };

struct Path {
  int qubit = 0;   // 1-based
  Role role = Role::X;
  std::vector<Node> nodes;
};

// Paths in qubit order, X path then Z path; τ ≥ 1 per bit / check (0 for
// long terminals).
struct PathPartition {
  std::vector<Path> paths;
  std::vector<int> tau_bit;
  std::vector<int> tau_check;
  int qubits() const { return static_cast<int>(paths.size() / 2); }
};

// One path per vertex, τ = 1; the bit of each pair takes the X role and
// qubits follow the dual bits' order.
PathPartition trivial_partition(const TannerGraph& g, const SymmetryWitness& w);

// Merges pairs of paths along edges of the graph while a τ labelling with
// conditions i–iii still exists.  The result is validated.
PathPartition greedy_partition(const TannerGraph& g, const SymmetryWitness& w);

struct PartitionReport {
  bool ok = true;
  // 0 ok, -1 malformed, 1–3 the partition conditions, 4 τ not strictly
  // monotone along a path, 5 dual vertices with different τ
  int condition = 0;
  std::string message;
};
PartitionReport validate_partition(const TannerGraph& g, const SymmetryWitness& w, const PathPartition& p);

struct ScheduledGate {
  enum Kind { S, HSH, CNOT, CZ, XCX } kind = S;
  int a = 0, b = 0;   // qubits; for CNOT a is the control
  int tau = 0;
};
const char* gate_name(ScheduledGate::Kind k);

struct Schedule {
  std::vector<int> dt;          // layers per window, index τ-1
  std::vector<int> first_layer; // first gate layer of window τ (1-based circuit layer)
  std::vector<ScheduledGate> gates;
  std::vector<OpSite> inits, meas;
  std::vector<int> open_inputs, open_outputs;   // qubits
};

struct SynthesisResult {
  Circuit circuit;
  Schedule schedule;
  SymmetrizeResult symmetric;   // symmetric Tanner graph of `circuit`
  CodeMaps maps;                // from g to symmetric.graph
  BitMatrix psi_inv;            // old × new
};

// Throws DomainError for an invalid partition and std::logic_error if the
// circuit's symmetric graph does not reproduce the code of g.
SynthesisResult synthesize(const TannerGraph& g, const SymmetryWitness& w, const PathPartition& p);

// σ_in / σ_out that a codeword c of g must have in the synthesised circuit:
// on each open qubit, the values of c on the boundary vertices of its paths.
std::pair<PauliOperator, PauliOperator> expected_boundary(const TannerGraph& g, const SymmetryWitness& w,
                                                          const PathPartition& p, const BitVector& c);

struct RoundtripReport {
  bool ok = true;
  std::vector<std::string> failures;
  std::size_t gates = 0, edge_classes = 0;
  BoundReport bound;
  std::string str() const;
};
// B and L default to io_code_matrices(g, w) when both are empty.
RoundtripReport roundtrip_check(const TannerGraph& g, const SymmetryWitness& w, const PathPartition& p,
                                std::size_t max_weight, const BitMatrix& B = {}, const BitMatrix& L = {},
                                unsigned jobs = 1);

// `path <q> <X|Z> : <vertex labels>` and `tau <vertex> <value>` lines
PathPartition read_partition(std::istream& in, const TannerGraph& g, const SymmetryWitness& w);
void write_partition(std::ostream& out, const TannerGraph& g, const PathPartition& p);

}  // namespace qclc
