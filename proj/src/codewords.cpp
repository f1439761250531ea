#include "qclc/codewords.hpp"

#include <stdexcept>

namespace qclc {

BitMatrix layer_projection(const TannerGraph& g, int t) {
  const std::size_t n = g.n;
  BitMatrix p(2 * n, g.num_bits());
  for (std::size_t b = 0; b < g.num_bits(); ++b) {
    const auto& l = g.bits[b];
    if (l.t != t) continue;
    if (l.kind == BitKind::X) p.set(l.q - 1, b);
    else if (l.kind == BitKind::Z) p.set(n + l.q - 1, b);
  }
  return p;
}

BitVector project(const TannerGraph& g, const BitVector& c, int t) {
  if (c.size() != g.num_bits()) throw DomainError("codeword length does not match the graph");
  const std::size_t n = g.n;
  BitVector out(2 * n);
  for (std::size_t b = 0; b < g.num_bits(); ++b) {
    const auto& l = g.bits[b];
    if (l.t != t || !c.get(b)) continue;
    if (l.kind == BitKind::X) out.set(l.q - 1);
    else if (l.kind == BitKind::Z) out.set(n + l.q - 1);
  }
  return out;
}

PauliOperator sigma_at_layer(const TannerGraph& g, const BitVector& c, int t) {
  return PauliOperator::sigma(project(g, c, t));
}
PauliOperator sigma_in(const TannerGraph& g, const BitVector& c) { return sigma_at_layer(g, c, 0); }
PauliOperator sigma_out(const TannerGraph& g, const BitVector& c) { return sigma_at_layer(g, c, g.depth); }

const char* class_name(CodewordClass k) {
  switch (k) {
    case CodewordClass::Checker: return "checker";
    case CodewordClass::Detector: return "detector";
    case CodewordClass::Emitter: return "emitter";
    case CodewordClass::PseudoPropagator: return "pseudo-propagator";
    case CodewordClass::GenuinePropagator: return "genuine-propagator";
  }
  return "?";
}

CodeSpaces code_spaces(const TannerGraph& g) {
  const BitMatrix a = g.matrix();
  const BitMatrix p0 = layer_projection(g, 0), pt = layer_projection(g, g.depth);
  CodeSpaces s;
  s.kernel = kernel_basis(a);
  s.c = stack_kernel({a, p0, pt});
  s.cd = stack_kernel({a, pt});
  s.ce = stack_kernel({a, p0});
  s.cde = span_union(s.cd, s.ce);
  return s;
}

CodewordClass classify(const TannerGraph& g, const CodeSpaces& s, const BitVector& c) {
  if (g.matrix().mul(c).any()) throw DomainError("classify: vector is not a codeword");
  const bool in = project(g, c, 0).any(), out = project(g, c, g.depth).any();
  if (!in && !out) return CodewordClass::Checker;
  if (!out) return CodewordClass::Detector;
  if (!in) return CodewordClass::Emitter;
  return row_space_member(s.cde, c) ? CodewordClass::PseudoPropagator : CodewordClass::GenuinePropagator;
}

CodewordClass classify(const TannerGraph& g, const BitVector& c) { return classify(g, code_spaces(g), c); }

std::vector<int> relevant_measurements(const TannerGraph& g, const BitVector& c) {
  if (g.matrix().mul(c).any()) throw DomainError("relevant_measurements: vector is not a codeword");
  std::vector<int> out;
  for (std::size_t b = 0; b < g.num_bits(); ++b)
    if (g.bits[b].meas && c.get(b)) out.push_back(static_cast<int>(b));
  return out;
}

namespace {

BitMatrix generator_matrix(const std::vector<PauliOperator>& s, std::size_t n, const char* what) {
  BitMatrix m(0, 2 * n);
  for (const auto& p : s) {
    if (p.size() != n) throw DomainError(std::string(what) + ": generator " + p.str() + " has the wrong size");
    m.append_row(p.bits());
  }
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!s[i].commutes(s[j]))
        throw DomainError(std::string(what) + ": generators " + s[i].str() + " and " + s[j].str() + " do not commute");
  return m;
}

// (x | z) → (z | x) on every row
BitMatrix swap_halves(const BitMatrix& m) {
  const std::size_t n = m.cols() / 2;
  BitMatrix r(0, m.cols());
  for (const auto& row : m.row_list()) r.append_row(row.slice(n, n).concat(row.slice(0, n)));
  return r;
}

std::vector<PauliOperator> sigmas(const BitMatrix& rows_2n) {
  std::vector<PauliOperator> out;
  for (const auto& r : rows_2n.row_list()) out.push_back(PauliOperator::sigma(r));
  return out;
}

}  // namespace

EcStructure build_ec_structure(const TannerGraph& g, const std::vector<PauliOperator>& s_in,
                               const std::vector<PauliOperator>& s_out) {
  const std::size_t n = g.n;
  const BitMatrix gin = generator_matrix(s_in, n, "S_in");
  const BitMatrix gout = generator_matrix(s_out, n, "S_out");
  EcStructure ec;
  ec.A = g.matrix();
  ec.S_in = s_in;
  ec.S_out = s_out;
  const BitMatrix k = kernel_basis(ec.A);
  const BitMatrix p0k = layer_projection(g, 0) * k.transpose();        // 2n × dim C
  const BitMatrix ptk = layer_projection(g, g.depth) * k.transpose();

  // σ_in ∈ ±S_in ⇔ P_0 c ∈ rowsp(G_in) ⇔ ker(G_in)·P_0 cᵀ = 0
  const BitMatrix cond_b = vstack(kernel_basis(gin) * p0k, kernel_basis(gout) * ptk);
  ec.B = row_basis(kernel_basis(cond_b) * k);
  ec.B = BitMatrix::from_rows(ec.B.row_list(), ec.A.cols());

  // σ_in, σ_out in the normalisers
  const BitMatrix cond_l = vstack(swap_halves(gin) * p0k, swap_halves(gout) * ptk);
  const BitMatrix logical = kernel_basis(cond_l) * k;
  ec.L = row_basis(complement_basis(ec.B, logical));
  ec.L = BitMatrix::from_rows(ec.L.row_list(), ec.A.cols());

  for (std::size_t b = 0; b < g.num_bits(); ++b) {
    if (g.bits[b].meas) ec.V_M.push_back(static_cast<int>(b));
    if (g.bits[b].init) ec.V_I.push_back(static_cast<int>(b));
  }
  for (const auto& r : ec.L.row_list()) {
    ec.L_in.push_back(sigma_in(g, r));
    ec.L_out.push_back(sigma_out(g, r));
  }
  check_ec_validity(g, ec);
  return ec;
}

std::pair<std::vector<PauliOperator>, std::vector<PauliOperator>> derive_codes_from_B(const TannerGraph& g,
                                                                                      const BitMatrix& B) {
  if (B.rows() && B.cols() != g.num_bits()) throw DomainError("B does not match the graph");
  if (B.rows() && (g.matrix() * B.transpose()).nnz()) throw DomainError("rows of B are not codewords");
  const std::size_t n = g.n;
  BitMatrix in(0, 2 * n), out(0, 2 * n);
  for (const auto& r : B.row_list()) {
    in.append_row(project(g, r, 0));
    out.append_row(project(g, r, g.depth));
  }
  return {sigmas(row_basis(in)), sigmas(row_basis(out))};
}

void check_ec_validity(const TannerGraph& g, const EcStructure& ec) {
  if (ec.B.rows() && (ec.A * ec.B.transpose()).nnz()) throw DomainError("A·Bᵀ ≠ 0");
  if (ec.L.rows() && (ec.A * ec.L.transpose()).nnz()) throw DomainError("A·Lᵀ ≠ 0");
  if (rank(vstack(ec.B, ec.L)) != rank(ec.B) + rank(ec.L))
    throw DomainError("row spaces of B and L are not independent");
  std::vector<PauliOperator> in, out;
  for (const auto& r : ec.B.row_list()) {
    in.push_back(sigma_in(g, r));
    out.push_back(sigma_out(g, r));
  }
  for (std::size_t i = 0; i < in.size(); ++i)
    for (std::size_t j = i + 1; j < in.size(); ++j) {
      if (!in[i].commutes(in[j])) throw DomainError("σ_in of two rows of B anticommute");
      if (!out[i].commutes(out[j])) throw DomainError("σ_out of two rows of B anticommute");
    }
}

bool errors_equivalent(const BitMatrix& A, const BitVector& e1, const BitVector& e2) {
  if (e1.size() != A.cols() || e2.size() != A.cols()) throw DomainError("error length does not match A");
  return row_space_member(A, e1 ^ e2);
}

BitVector find_anticommuting_partner(const TannerGraph& g, const BitVector& c) {
  const CodeSpaces s = code_spaces(g);
  if (classify(g, s, c) != CodewordClass::GenuinePropagator)
    throw DomainError("find_anticommuting_partner: codeword is not a genuine propagator");
  const BitVector in = project(g, c, 0), out = project(g, c, g.depth);
  BitMatrix m(2, s.kernel.rows());
  for (std::size_t j = 0; j < s.kernel.rows(); ++j) {
    const BitVector& kj = s.kernel.row(j);
    m.set(0, j, symplectic_product(in, project(g, kj, 0)));
    m.set(1, j, symplectic_product(out, project(g, kj, g.depth)));
  }
  BitVector rhs(2), alpha;
  rhs.set(0);
  rhs.set(1);
  if (!solve(m, rhs, alpha)) throw std::logic_error("no anticommuting partner for a genuine propagator");
  BitVector partner(g.num_bits());
  for (auto j : alpha.support()) partner ^= s.kernel.row(j);
  if (!symplectic_product(in, project(g, partner, 0)) || !symplectic_product(out, project(g, partner, g.depth)) ||
      classify(g, s, partner) != CodewordClass::GenuinePropagator)
    throw std::logic_error("anticommuting partner failed verification");
  return partner;
}

}  // namespace qclc
