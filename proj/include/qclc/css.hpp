#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qclc/codewords.hpp"
#include "qclc/gf2.hpp"
#include "qclc/tanner.hpp"

namespace qclc {

struct CssCode {
  std::size_t n = 0, k = 0, r_x = 0, r_z = 0;
  BitMatrix gx, gz, jx, jz;   // empty checks are stored as 0 × n
};

// J_X spans ker G_Z modulo rowsp G_X (first independent kernel rows in
// reduced form), J_Z likewise, then J_Z is rotated so that J_X·J_Zᵀ = 𝟙.
// `n` is only needed when both matrices are empty.
CssCode derive_logicals(const BitMatrix& gx, const BitMatrix& gz, std::size_t n = 0);
// Throws DomainError naming the first broken invariant.
void check_code(const CssCode& c);

// Tanner graph of a CSS-type logical-qubit circuit, split into its X and Z
// halves.  Each bit of a half is a Pauli site (logical qubit, time); the
// sites decide the labels of the physical graph's boundary bits.
struct LogicalLayer {
  std::string name;
  BitMatrix a_x, a_z, d_x, d_z, g_x, g_z;
  std::vector<std::pair<int, int>> x_sites, z_sites;
  int qubits = 1;
  int depth = 1;
  std::size_t mb_x() const { return a_x.cols(); }
  std::size_t mb_z() const { return a_z.cols(); }
  std::size_t mc_x() const { return a_x.rows(); }
  std::size_t mc_z() const { return a_z.rows(); }
};
void check_layer(const LogicalLayer& l);

LogicalLayer repeated_measurement_layer(int m);
LogicalLayer logical_cnot_layer();
// `rep:<m>` or `cnot`
LogicalLayer parse_layer(const std::string& spec);

struct CssCircuitCode {
  EcStructure ec;           // A, B, L, D, V_M and the boundary groups from B
  TannerGraph graph;        // labelled graph of A
  SymmetryWitness witness;  // from D
  std::size_t x_cols = 0;   // the X half occupies columns [0, x_cols)
  // column of Pauli site `block` (a bit of the layer), physical qubit j
  std::size_t site_column(bool z_half, std::size_t block, std::size_t j) const;
  std::size_t n = 0, r_x = 0, r_z = 0, mb_x = 0, mb_z = 0;
};

// Closed-form physical matrices, blockwise in the mini-block order: in each
// half, mb·n site columns (block-major) then mc·r measurement columns.
// Throws DomainError if an identity that must hold for them fails.
CssCircuitCode assemble_physical(const CssCode& code, const LogicalLayer& layer);

}  // namespace qclc
