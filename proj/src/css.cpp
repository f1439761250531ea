#include "qclc/css.hpp"

#include <algorithm>
#include <set>

#include "qclc/distance.hpp"

namespace qclc {

namespace {

BitMatrix sized(const BitMatrix& m, std::size_t n) { return m.rows() ? m : BitMatrix(0, n); }

BitMatrix block_diag(const BitMatrix& a, const BitMatrix& b) {
  return vstack(hstack(a, BitMatrix(a.rows(), b.cols())), hstack(BitMatrix(b.rows(), a.cols()), b));
}

BitMatrix mat(std::initializer_list<const char*> rows) {
  std::vector<std::string> r(rows.begin(), rows.end());
  return BitMatrix::from_strings(r);
}

}  // namespace

CssCode derive_logicals(const BitMatrix& gx_in, const BitMatrix& gz_in, std::size_t n) {
  n = std::max({n, gx_in.cols(), gz_in.cols()});
  if ((gx_in.rows() && gx_in.cols() != n) || (gz_in.rows() && gz_in.cols() != n))
    throw DomainError("derive_logicals: G_X and G_Z have different lengths");
  if (!n) throw DomainError("derive_logicals: no qubits");
  CssCode c;
  c.n = n;
  c.gx = sized(gx_in, n);
  c.gz = sized(gz_in, n);
  if ((c.gx * c.gz.transpose()).nnz()) throw DomainError("derive_logicals: G_X·G_Zᵀ ≠ 0");
  c.r_x = c.gx.rows();
  c.r_z = c.gz.rows();
  c.jx = sized(css_logicals(c.gx, c.gz), n);
  const BitMatrix jz0 = sized(css_logicals(c.gz, c.gx), n);
  c.k = c.jx.rows();
  if (jz0.rows() != c.k) throw std::logic_error("derive_logicals: logical X and Z counts differ");
  if (c.k) {
    // J_X·(M⁻ᵀ J_Z0)ᵀ = M·M⁻¹
    const BitMatrix m = c.jx * jz0.transpose();
    c.jz = left_inverse(m).transpose() * jz0;
  } else {
    c.jz = BitMatrix(0, n);
  }
  check_code(c);
  return c;
}

void check_code(const CssCode& c) {
  auto fail = [](const std::string& s) { throw DomainError("CSS code: " + s); };
  if (c.gx.cols() != c.n || c.gz.cols() != c.n || c.jx.cols() != c.n || c.jz.cols() != c.n)
    fail("matrix widths differ from n");
  if ((c.gx * c.gz.transpose()).nnz()) fail("G_X·G_Zᵀ ≠ 0");
  if ((c.gx * c.jz.transpose()).nnz()) fail("G_X·J_Zᵀ ≠ 0");
  if ((c.gz * c.jx.transpose()).nnz()) fail("G_Z·J_Xᵀ ≠ 0");
  if (c.k != c.n - rank(c.gx) - rank(c.gz)) fail("k ≠ n − rank G_X − rank G_Z");
  if (c.jx.rows() != c.k || c.jz.rows() != c.k) fail("J matrices do not have k rows");
  if (c.k && !(c.jx * c.jz.transpose() == BitMatrix::identity(c.k))) fail("J_X·J_Zᵀ ≠ 𝟙");
}

void check_layer(const LogicalLayer& l) {
  auto fail = [&](const std::string& s) { throw DomainError("logical layer " + l.name + ": " + s); };
  if (l.d_x.rows() != l.mb_x() || l.d_x.cols() != l.mc_z()) fail("d_X must be m_X^B × m_Z^C");
  if (l.d_z.rows() != l.mb_z() || l.d_z.cols() != l.mc_x()) fail("d_Z must be m_Z^B × m_X^C");
  if (l.g_x.cols() != l.mb_x() || l.g_z.cols() != l.mb_z()) fail("g widths differ from the bit counts");
  if (l.x_sites.size() != l.mb_x() || l.z_sites.size() != l.mb_z()) fail("one Pauli site per bit required");
  if (!(l.a_x * l.d_x == (l.a_z * l.d_z).transpose())) fail("a_X·d_X ≠ (a_Z·d_Z)ᵀ");
  if ((l.a_x * l.g_x.transpose()).nnz() || (l.a_z * l.g_z.transpose()).nnz()) fail("a·gᵀ ≠ 0");
  if (rank(l.g_x) != l.mb_x() - rank(l.a_x) || rank(l.g_z) != l.mb_z() - rank(l.a_z))
    fail("g does not generate the whole kernel of a");
  std::set<std::pair<int, int>> seen;
  for (const auto* s : {&l.x_sites, &l.z_sites}) {
    seen.clear();
    for (auto [q, t] : *s) {
      if (q < 0 || q >= l.qubits || t < 0 || t > l.depth) fail("Pauli site out of range");
      if (!seen.insert({q, t}).second) fail("two bits share a Pauli site");
    }
  }
}

LogicalLayer repeated_measurement_layer(int m) {
  if (m < 1) throw DomainError("repeated measurement needs m ≥ 1 cycles");
  LogicalLayer l;
  l.name = "rep:" + std::to_string(m);
  const std::size_t mm = m;
  l.a_x = BitMatrix(mm, mm + 1);
  for (std::size_t c = 0; c < mm; ++c) {
    l.a_x.set(c, c);
    l.a_x.set(c, c + 1);
  }
  l.a_z = l.a_x;
  l.d_x = vstack(BitMatrix::identity(mm), BitMatrix(1, mm));
  l.d_z = vstack(BitMatrix(1, mm), BitMatrix::identity(mm));
  l.g_x = BitMatrix(1, mm + 1);
  for (std::size_t b = 0; b <= mm; ++b) l.g_x.set(0, b);
  l.g_z = l.g_x;
  for (int b = 0; b <= m; ++b) {
    l.x_sites.emplace_back(0, b);
    l.z_sites.emplace_back(0, b);
  }
  l.qubits = 1;
  l.depth = m;
  check_layer(l);
  return l;
}

LogicalLayer logical_cnot_layer() {
  LogicalLayer l;
  l.name = "cnot";
  l.a_x = mat({"1010", "1101"});
  l.a_z = mat({"1110", "0101"});
  l.d_x = mat({"10", "00", "00", "01"});
  // columns swapped against the printed d_Z, which fails a_X·d_X = (a_Z·d_Z)ᵀ
  l.d_z = mat({"00", "01", "10", "00"});
  l.g_x = mat({"1011", "0101"});
  l.g_z = mat({"1010", "0111"});
  // bits: qubit 1 in, qubit 2 in, qubit 1 out, qubit 2 out
  l.x_sites = l.z_sites = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  l.qubits = 2;
  l.depth = 1;
  check_layer(l);
  return l;
}

LogicalLayer parse_layer(const std::string& spec) {
  if (spec == "cnot") return logical_cnot_layer();
  if (spec.rfind("rep:", 0) == 0) {
    std::size_t pos = 0;
    int m = 0;
    try {
      m = std::stoi(spec.substr(4), &pos);
    } catch (...) {
      pos = 0;
    }
    if (pos && pos + 4 == spec.size()) return repeated_measurement_layer(m);
  }
  throw DomainError("unknown logical layer '" + spec + "' (expected rep:<m> or cnot)");
}

std::size_t CssCircuitCode::site_column(bool z_half, std::size_t block, std::size_t j) const {
  return (z_half ? x_cols : 0) + block * n + j;
}

CssCircuitCode assemble_physical(const CssCode& code, const LogicalLayer& l) {
  check_code(code);
  check_layer(l);
  const std::size_t n = code.n, rx = code.r_x, rz = code.r_z;
  const BitMatrix In = BitMatrix::identity(n);
  // A_X = (a_X⊗𝟙_n  𝟙⊗G_Xᵀ ; d_Xᵀ⊗G_Z  0), A_Z likewise
  auto half = [&](const BitMatrix& a, const BitMatrix& d, const BitMatrix& g_same, const BitMatrix& g_other,
                  std::size_t r_same) {
    const BitMatrix top = hstack(kron(a, In), kron(BitMatrix::identity(a.rows()), g_same.transpose()));
    const BitMatrix low = kron(d.transpose(), g_other);
    return vstack(top, hstack(low, BitMatrix(low.rows(), a.rows() * r_same)));
  };
  const BitMatrix ax = half(l.a_x, l.d_x, code.gx, code.gz, rx);
  const BitMatrix az = half(l.a_z, l.d_z, code.gz, code.gx, rz);
  CssCircuitCode out;
  out.n = n;
  out.r_x = rx;
  out.r_z = rz;
  out.mb_x = l.mb_x();
  out.mb_z = l.mb_z();
  out.x_cols = ax.cols();
  EcStructure& ec = out.ec;
  ec.A = vstack(hstack(BitMatrix(az.rows(), ax.cols()), az), hstack(ax, BitMatrix(ax.rows(), az.cols())));

  // D_α = (d_α⊗𝟙_n 0 ; 0 𝟙)
  auto dhalf = [&](const BitMatrix& d, std::size_t meas) {
    return block_diag(kron(d, In), BitMatrix::identity(meas));
  };
  const BitMatrix dx = dhalf(l.d_x, l.mc_x() * rx), dz = dhalf(l.d_z, l.mc_z() * rz);
  if (!(ax * dx == (az * dz).transpose())) throw DomainError("assemble_physical: A_X·D_X ≠ (A_Z·D_Z)ᵀ");
  ec.D = block_diag(dx, dz);

  // B_α = (𝟙⊗G_α  a_αᵀ⊗𝟙_r),  L_α = (g_α⊗J_α  0)
  auto bhalf = [&](const BitMatrix& a, const BitMatrix& g, std::size_t r) {
    return hstack(kron(BitMatrix::identity(a.cols()), g), kron(a.transpose(), BitMatrix::identity(r)));
  };
  auto lhalf = [&](const BitMatrix& a, const BitMatrix& g, const BitMatrix& j, std::size_t r) {
    const BitMatrix left = kron(g, j);
    return hstack(left, BitMatrix(left.rows(), a.rows() * r));
  };
  ec.B = block_diag(bhalf(l.a_x, code.gx, rx), bhalf(l.a_z, code.gz, rz));
  ec.L = block_diag(lhalf(l.a_x, l.g_x, code.jx, rx), lhalf(l.a_z, l.g_z, code.jz, rz));
  if (ec.B.rows() && (ec.A * ec.B.transpose()).nnz()) throw DomainError("assemble_physical: A·Bᵀ ≠ 0");
  if (ec.L.rows() && (ec.A * ec.L.transpose()).nnz()) throw DomainError("assemble_physical: A·Lᵀ ≠ 0");

  // labelled graph: Pauli-site bits carry (kind, physical qubit, time)
  TannerGraph& g = out.graph;
  g = TannerGraph::from_matrix(ec.A);
  g.n = l.qubits * static_cast<int>(n);
  g.depth = l.depth;
  auto label_half = [&](std::size_t offset, BitKind kind, const std::vector<std::pair<int, int>>& sites,
                        std::size_t meas) {
    for (std::size_t b = 0; b < sites.size(); ++b)
      for (std::size_t j = 0; j < n; ++j)
        g.bits[offset + b * n + j] = {kind, sites[b].first * static_cast<int>(n) + static_cast<int>(j) + 1,
                                      sites[b].second, false, false};
    for (std::size_t i = 0; i < meas; ++i) g.bits[offset + sites.size() * n + i].meas = true;
  };
  label_half(0, BitKind::X, l.x_sites, l.mc_x() * rx);
  label_half(out.x_cols, BitKind::Z, l.z_sites, l.mc_z() * rz);

  std::vector<int> dual(ec.A.rows(), -1);
  for (std::size_t b = 0; b < ec.D.rows(); ++b)
    for (auto a : ec.D.row(b).support()) {
      if (dual[a] >= 0) throw DomainError("assemble_physical: D pairs a check with two bits");
      dual[a] = static_cast<int>(b);
    }
  if (std::count(dual.begin(), dual.end(), -1)) throw DomainError("assemble_physical: D leaves a check unpaired");
  out.witness = witness_from_duals(g, dual);
  const auto sym = verify_symmetry(g, out.witness);
  if (!sym.ok) throw DomainError("assemble_physical: the layer's graph is not symmetric: " + sym.message);

  for (std::size_t b = 0; b < g.num_bits(); ++b)
    if (g.bits[b].meas) ec.V_M.push_back(static_cast<int>(b));
  std::tie(ec.S_in, ec.S_out) = derive_codes_from_B(g, ec.B);
  for (const auto& r : ec.L.row_list()) {
    ec.L_in.push_back(sigma_in(g, r));
    ec.L_out.push_back(sigma_out(g, r));
  }
  check_ec_validity(g, ec);
  return out;
}

}  // namespace qclc
