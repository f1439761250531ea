#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qclc/gf2.hpp"
#include "qclc/pauli.hpp"
#include "qclc/tanner.hpp"

namespace qclc {

// P_t as a 2n × |V_B| selection matrix over the x/z bits of layer t; removed
// and auxiliary bits contribute nothing.
BitMatrix layer_projection(const TannerGraph& g, int t);
BitVector project(const TannerGraph& g, const BitVector& c, int t);   // P_t cᵀ
PauliOperator sigma_at_layer(const TannerGraph& g, const BitVector& c, int t);
PauliOperator sigma_in(const TannerGraph& g, const BitVector& c);
PauliOperator sigma_out(const TannerGraph& g, const BitVector& c);

enum class CodewordClass { Checker, Detector, Emitter, PseudoPropagator, GenuinePropagator };
const char* class_name(CodewordClass k);

// Bases (rref) of the codeword subspaces.
struct CodeSpaces {
  BitMatrix kernel;   // C = ker A
  BitMatrix c;        // checkers: ker A ∩ ker P_0 ∩ ker P_T
  BitMatrix cd;       // ker A ∩ ker P_T
  BitMatrix ce;       // ker A ∩ ker P_0
  BitMatrix cde;      // Span(C_cd ∪ C_ce)
};
CodeSpaces code_spaces(const TannerGraph& g);

CodewordClass classify(const TannerGraph& g, const CodeSpaces& s, const BitVector& c);
CodewordClass classify(const TannerGraph& g, const BitVector& c);

// Bits v ∈ V_M with c_v = 1.
std::vector<int> relevant_measurements(const TannerGraph& g, const BitVector& c);

struct EcStructure {
  BitMatrix A, B, L;
  BitMatrix D;                     // empty when no symmetry witness is attached
  std::vector<int> V_M, V_I;
  std::vector<PauliOperator> S_in, S_out, L_in, L_out;
};

// B spans the codewords whose σ_in, σ_out lie in S_in, S_out up to sign; L
// completes B to the codewords whose σ_in, σ_out commute with S_in, S_out.
EcStructure build_ec_structure(const TannerGraph& g, const std::vector<PauliOperator>& s_in,
                               const std::vector<PauliOperator>& s_out);
// Independent generators of Span{σ_in(b)} and Span{σ_out(b)}, phases +1.
std::pair<std::vector<PauliOperator>, std::vector<PauliOperator>> derive_codes_from_B(const TannerGraph& g,
                                                                                      const BitMatrix& B);
// Throws DomainError naming the first violated condition.
void check_ec_validity(const TannerGraph& g, const EcStructure& ec);

bool errors_equivalent(const BitMatrix& A, const BitVector& e1, const BitVector& e2);

// A genuine propagator c′ whose σ_in and σ_out anticommute with those of c.
BitVector find_anticommuting_partner(const TannerGraph& g, const BitVector& c);

}  // namespace qclc
