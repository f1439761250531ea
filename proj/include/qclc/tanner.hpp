#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qclc/circuit.hpp"
#include "qclc/gf2.hpp"

namespace qclc {

enum class BitKind { X, Z, SplitX, SplitZ, Generic };

struct BitLabel {
  BitKind kind = BitKind::Generic;
  int q = 0;
  int t = 0;
  bool meas = false;   // v ∈ V_M
  bool init = false;   // v ∈ V_I
  bool operator==(const BitLabel& o) const {
    return kind == o.kind && q == o.q && t == o.t && meas == o.meas && init == o.init;
  }
};

struct CheckLabel {
  int layer = 0;       // 0 when not tied to a circuit layer
  bool split = false;  // added by bit splitting
  bool operator==(const CheckLabel& o) const { return layer == o.layer && split == o.split; }
};

// Bipartite graph; column order of matrix() is the order of `bits`.
class TannerGraph {
public:
  int n = 0;       // qubits of the source circuit, 0 for generic graphs
  int depth = 0;
  std::vector<BitLabel> bits;
  std::vector<CheckLabel> checks;
  std::vector<std::vector<int>> check_bits;   // sorted bit indices per check
  std::vector<BitLabel> removed;              // isolated bits dropped during construction

  std::size_t num_bits() const { return bits.size(); }
  std::size_t num_checks() const { return checks.size(); }
  int add_bit(const BitLabel& b);
  int add_check(const CheckLabel& c, std::vector<int> members);

  BitMatrix matrix() const;
  std::vector<std::vector<int>> bit_checks() const;
  std::size_t max_degree() const;

  int find_bit(BitKind kind, int q, int t) const;   // -1 when absent
  int find_bit(const std::string& name) const;
  int find_check(const std::string& name) const;
  std::string bit_name(int b) const;     // x[q,t], z[q,t], s<k>, b<k>
  std::string check_name(int c) const;   // c<k>

  static TannerGraph from_matrix(const BitMatrix& a);

  bool operator==(const TannerGraph& o) const {
    return n == o.n && depth == o.depth && bits == o.bits && checks == o.checks &&
           check_bits == o.check_bits;
  }
};

TannerGraph build_plain(const Circuit& c);

// Long terminals are the bits not dual to any check.  D has one column per
// check: D[dual_bit[a], a] = 1.
struct SymmetryWitness {
  BitMatrix D;
  std::vector<int> dual_bit;        // per check
  std::vector<int> long_terminals;  // sorted
};

SymmetryWitness witness_from_duals(const TannerGraph& g, const std::vector<int>& dual_bit);
// dual check of each bit, -1 for long terminals
std::vector<int> dual_checks(const TannerGraph& g, const SymmetryWitness& w);

struct SymmetryReport {
  bool ok = true;
  int condition = 0;   // 0 ok; 1..3 the failed condition; -1 malformed witness
  std::string message;
  std::vector<std::string> vertices;
};
SymmetryReport verify_symmetry(const TannerGraph& g, const SymmetryWitness& w);

// Linear maps between codeword / error spaces, stored new × old so that
// φ(c) = Φ·cᵀ.
struct CodeMaps {
  BitMatrix phi;
  BitMatrix phi_err;
};

struct SplitResult {
  TannerGraph graph;
  CodeMaps maps;
};
// Disconnects v from the checks in n2, adds bit v′ on them and a check a on {v, v′}.
SplitResult bit_split(const TannerGraph& g, int v, const std::vector<int>& n1,
                      const std::vector<int>& n2);

struct SymmetrizeResult {
  TannerGraph graph;
  SymmetryWitness witness;
  CodeMaps maps;   // from build_plain(c) to graph
  int splits = 0;
};
SymmetrizeResult symmetrize(const Circuit& c);

std::string export_dot(const TannerGraph& g);

// Sidecar label file: "# qubits <n> depth <T>" then "col kind q t flags".
void write_labels(std::ostream& out, const TannerGraph& g);
// Rebuilds a graph from a check matrix and its label sidecar.
TannerGraph read_graph(const BitMatrix& a, std::istream& labels);

// <prefix>.A, <prefix>.labels and, with a witness, <prefix>.D
void save_graph(const std::string& prefix, const TannerGraph& g, const SymmetryWitness* w = nullptr);
TannerGraph load_graph(const std::string& prefix);
// Reads <prefix>.D when present.
std::optional<SymmetryWitness> load_witness(const std::string& prefix, const TannerGraph& g);
SymmetryWitness witness_from_D(const TannerGraph& g, const BitMatrix& d);

}  // namespace qclc
