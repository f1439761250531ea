// Acceptance run: one line per criterion, with the time limit it must meet.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qclc/codewords.hpp"
#include "qclc/css.hpp"
#include "qclc/distance.hpp"
#include "qclc/sim.hpp"
#include "qclc/splitting.hpp"
#include "qclc/synthesis.hpp"
#include "support/codeword_search.hpp"
#include "support/random_circuit.hpp"
#include "support/random_symmetric.hpp"

using namespace qclc;
using testsupport::codeword_with;
using testsupport::pauli_bits;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Collector {
public:
  std::ostringstream detail;
  bool ok = true;
  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) detail << "first failure: " << what << "; ";
    ok = false;
    ++failures;
  }
  int failures = 0;
  Outcome done() { return {ok, detail.str()}; }
};

// ---------------------------------------------------------------- 1
Outcome cnot_propagation() {
  Collector c;
  const auto g = build_plain(load_circuit(QCLC_DATA "/cnot.qc"));
  const auto v = BitVector::from_string("10001100");
  c.require(!g.matrix().mul(v).any(), "(1,0,0,0,1,1,0,0) is not in ker A");
  c.require(row_space_member(kernel_basis(g.matrix()), v), "kernel basis does not span the vector");
  const auto in = sigma_in(g, v), out = sigma_out(g, v);
  c.require(in.str() == "+XI" && out.str() == "+XX", "σ_in/σ_out = " + in.str() + "/" + out.str());
  c.detail << "σ_in " << in.str() << ", σ_out " << out.str();
  return c.done();
}

// ---------------------------------------------------------------- 2
Outcome zz_classification() {
  Collector c;
  const auto g = build_plain(load_circuit(QCLC_DATA "/zz.qc"));
  c.require(g.n == 3 && g.depth == 8, "circuit is not n = 3, T = 8");
  const int mu1 = g.find_bit(BitKind::Z, 3, 3), mu2 = g.find_bit(BitKind::Z, 3, 7);
  c.require(mu1 >= 0 && mu2 >= 0 && g.bits[mu1].meas && g.bits[mu2].meas, "measurement bits μ1, μ2 missing");
  const auto s = code_spaces(g);
  auto is = [&](const std::optional<BitVector>& v, CodewordClass k) { return v && classify(g, s, *v) == k; };

  const auto xx = codeword_with(g, pauli_bits("XXI"), pauli_bits("XXI"));
  const auto z1 = codeword_with(g, pauli_bits("ZII"), pauli_bits("ZII"));
  const auto zz = codeword_with(g, pauli_bits("ZZI"), pauli_bits("ZZI"));
  c.require(is(xx, CodewordClass::GenuinePropagator), "X1X2 → X1X2 is not a genuine propagator");
  c.require(is(z1, CodewordClass::GenuinePropagator), "Z1 → Z1 is not a genuine propagator");
  c.require(is(zz, CodewordClass::PseudoPropagator), "Z1Z2 → Z1Z2 is not a pseudo propagator");
  const auto d1 = codeword_with(g, pauli_bits("ZZI"), pauli_bits("III"), [&](int b) { return g.bits[b].t > 3; });
  const auto d2 = codeword_with(g, pauli_bits("ZZI"), pauli_bits("III"), [&](int b) { return b == mu1; });
  c.require(is(d1, CodewordClass::Detector) && is(d2, CodewordClass::Detector), "two detectors not found");
  if (!d1 || !d2 || !zz) return c.done();
  c.require(relevant_measurements(g, *d1) == std::vector<int>{mu1} &&
                relevant_measurements(g, *d2) == std::vector<int>{mu2},
            "detectors do not read μ1 and μ2 separately");
  c.require(is(*zz ^ *d1, CodewordClass::Emitter) && is(*zz ^ *d2, CodewordClass::Emitter), "two emitters not found");
  const BitVector chk = *d1 ^ *d2;
  c.require(classify(g, s, chk) == CodewordClass::Checker, "d1 + d2 is not a checker");
  c.require(relevant_measurements(g, chk) == std::vector<int>{mu1, mu2}, "checker measurements are not {μ1, μ2}");
  c.require(s.c.rows() == 1 && row_space_member(s.c, chk), "checker space is not spanned by d1 + d2");
  c.detail << "dim C = " << s.kernel.rows() << ", checker reads {" << g.bit_name(mu1) << ", " << g.bit_name(mu2) << "}";
  return c.done();
}

// ---------------------------------------------------------------- 3, 4
Outcome equation_fuzz(int random_errors) {
  Collector c;
  std::mt19937_64 rng(random_errors ? 4004 : 3003);
  std::size_t codewords = 0, runs = 0;
  for (int i = 0; i < 500; ++i) {
    const Circuit circ = testsupport::random_circuit(rng);
    c.require(circ.n <= 5 && circ.depth() <= 10, "circuit outside n ≤ 5, T ≤ 10");
    const auto s = verify_circuit(circ, rng(), 8, random_errors, 4);
    codewords += s.codewords;
    runs += s.runs;
    for (const auto& f : s.failures) c.require(false, f.report());
  }
  c.detail << "500 circuits, " << codewords << " codewords, " << runs << " runs, " << c.failures << " failures";
  return c.done();
}

// ---------------------------------------------------------------- 5
Outcome bit_splitting() {
  Collector c;
  std::mt19937_64 rng(5005);
  int splits = 0, circuits = 0;
  std::map<std::string, int> hist;
  while (circuits < 200) {
    const Circuit circ = testsupport::random_circuit(rng);
    TannerGraph g = build_plain(circ);
    const BitMatrix k = kernel_basis(g.matrix());
    if (!k.rows() || !g.num_checks()) continue;
    ++circuits;
    // one code with about half the kernel logical, one with a single logical row
    std::vector<std::pair<BitMatrix, BitMatrix>> codes = {
        testsupport::random_code_matrices(rng, k, std::max<std::size_t>(1, k.rows() / 2)),
        testsupport::random_code_matrices(rng, k, 1)};
    std::vector<std::string> d;
    for (const auto& [B, L] : codes) {
      d.push_back(circuit_distance(B, L, 5).value_str());
      ++hist[d.back()];
    }
    for (int step = 0; step < 3; ++step) {
      const int v = static_cast<int>(rng() % g.num_bits());
      const auto nb = g.bit_checks()[v];
      std::vector<int> n1, n2;
      for (int a : nb) (rng() & 1 ? n1 : n2).push_back(a);
      const auto r = bit_split(g, v, n1, n2);
      ++splits;
      c.require(kernel_basis(r.graph.matrix()).rows() == k.rows(), "dim ker changed");
      for (std::size_t i = 0; i < codes.size(); ++i) {
        auto& [B, L] = codes[i];
        BitMatrix B2(0, r.graph.num_bits()), L2(0, r.graph.num_bits());
        for (const auto& row : B.row_list()) B2.append_row(r.maps.phi.mul(row));
        for (const auto& row : L.row_list()) L2.append_row(r.maps.phi.mul(row));
        c.require((r.graph.matrix() * B2.transpose()).is_zero() && (r.graph.matrix() * L2.transpose()).is_zero(),
                  "φ does not map codewords to codewords");
        const std::string d2 = circuit_distance(B2, L2, 5).value_str();
        c.require(d2 == d[i], "distance " + d[i] + " became " + d2);
        B = B2;
        L = L2;
      }
      g = r.graph;
    }
  }
  c.detail << circuits << " circuits, " << splits << " splits; d before splitting:";
  for (const auto& [v, k] : hist) c.detail << " " << v << "×" << k;
  return c.done();
}

// ---------------------------------------------------------------- 6
Outcome symmetric_splitting() {
  Collector c;
  std::mt19937_64 rng(6006);
  testsupport::SymmetricShape shape;
  shape.min_pairs = 15;
  shape.max_pairs = 30;
  shape.edge_prob = 0.15;
  shape.long_prob = 0.3;
  int conclusive = 0, reduced = 0;
  std::map<std::string, int> hist;
  for (int i = 0; i < 50; ++i) {
    const auto s = testsupport::random_symmetric(rng, shape);
    c.require(s.g.num_bits() <= 40 && s.g.max_degree() <= 6, "graph outside ≤ 40 bits, g_max ≤ 6");
    const auto r = symmetric_split(s.g, s.w, testsupport::random_plan(rng, s.g, s.w, i % 2 == 0));
    c.require(verify_symmetry(r.graph, r.witness).ok, "split graph is not symmetric");
    const BitMatrix k = kernel_basis(s.g.matrix());
    c.require(kernel_basis(r.graph.matrix()).rows() == k.rows(), "dim ker changed");
    BitMatrix img(0, r.graph.num_bits());
    for (const auto& row : k.row_list()) img.append_row(map_codeword(r.maps, row));
    c.require(rank(img) == k.rows() && !(r.graph.matrix() * img.transpose()).nnz(), "ψ is not an isomorphism");
    c.require(r.psi_inv * img.transpose() == k.transpose(), "ψ⁻¹ψ ≠ 1");
    const auto [B, L] = testsupport::random_code_matrices(rng, k);
    const auto rep = check_distance_bound(s.g, r.graph, B, L, r.maps, 6);
    c.require(rep.ok(), rep.str());
    conclusive += rep.conclusive;
    ++hist[rep.d.value_str()];
    reduced += rep.d.found && rep.d_split.found && rep.d_split.value < rep.d.value;
  }
  c.detail << "50 graphs, " << conclusive << " decided within weight 6, " << reduced << " with d′ < d; d:";
  for (const auto& [v, k] : hist) c.detail << " " << v << "×" << k;
  return c.done();
}

// ---------------------------------------------------------------- 7
Outcome synthesis_roundtrip() {
  Collector c;
  std::mt19937_64 rng(7007);
  testsupport::SymmetricShape shape;
  shape.max_pairs = 10;
  shape.long_prob = 0.3;
  int conclusive = 0, gates = 0;
  for (int i = 0; i < 20; ++i) {
    const auto s = testsupport::random_symmetric(rng, shape);
    const BitMatrix k = kernel_basis(s.g.matrix());
    const auto [B, L] = testsupport::random_code_matrices(rng, k);
    const auto rep = roundtrip_check(s.g, s.w, trivial_partition(s.g, s.w), 6, B, L);
    c.require(rep.ok, rep.str());
    conclusive += rep.bound.conclusive;
    gates += static_cast<int>(rep.gates);
  }
  c.detail << "20 graphs, " << gates << " gates, " << conclusive << " distance bounds decided within weight 6";
  return c.done();
}

// ---------------------------------------------------------------- 8
Outcome css_closed_forms() {
  Collector c;
  const CssCode code = derive_logicals(load_matrix(QCLC_DATA "/steane.gx"), load_matrix(QCLC_DATA "/steane.gz"));
  const auto layer = repeated_measurement_layer(2);
  const auto p = assemble_physical(code, layer);
  const auto& ec = p.ec;
  c.require(ec.A.cols() == 54, "error space is not 54 columns");
  c.require((ec.A * ec.B.transpose()).is_zero(), "A·Bᵀ ≠ 0");
  c.require((ec.A * ec.L.transpose()).is_zero(), "A·Lᵀ ≠ 0");
  // A = (0 A_Z ; A_X 0), D = diag(D_X, D_Z)
  const std::size_t az_rows = layer.mc_z() * code.n + layer.mc_x() * code.r_x;
  std::vector<std::size_t> zrows, xrows, xcols, zcols;
  for (std::size_t r = 0; r < ec.A.rows(); ++r) (r < az_rows ? zrows : xrows).push_back(r);
  for (std::size_t j = 0; j < ec.A.cols(); ++j) (j < p.x_cols ? xcols : zcols).push_back(j);
  const BitMatrix ax = ec.A.select_rows(xrows).select_columns(xcols);
  const BitMatrix az = ec.A.select_rows(zrows).select_columns(zcols);
  const BitMatrix dx = ec.D.select_rows(xcols).select_columns(zrows);
  const BitMatrix dz = ec.D.select_rows(zcols).select_columns(xrows);
  c.require(ax * dx == (az * dz).transpose(), "A_X·D_X ≠ (A_Z·D_Z)ᵀ");

  const auto css = css_distance(code.gx, code.gz, 4);
  c.require(css.d.found && css.d.value == 3, "d_CSS = " + css.d.value_str());
  const auto d = circuit_distance(ec.B, ec.L, 3);
  c.require(d.found && d.value == 3, "circuit distance " + d.value_str());
  if (d.found) {
    c.require(!ec.B.mul(d.witness).any() && ec.L.mul(d.witness).any(), "witness fails B·eᵀ = 0, L·eᵀ ≠ 0");
    // the first witness of the enumeration lies in a single site mini-block
    std::set<std::size_t> blocks;
    for (auto j : d.witness.support()) {
      const bool z = j >= p.x_cols;
      const std::size_t off = j - (z ? p.x_cols : 0);
      blocks.insert(off < (z ? p.mb_z : p.mb_x) * code.n ? (z ? 1000 : 0) + off / code.n : 99999);
    }
    c.require(blocks.size() == 1 && *blocks.begin() != 99999, "witness spans " + std::to_string(blocks.size()) +
                                                                  " mini-blocks");
    c.detail << "d = 3 = d_CSS, witness " << d.witness.str() << " (" << d.enumerated << " vectors enumerated)";
  }
  return c.done();
}

// ---------------------------------------------------------------- 9
Outcome two_one_one() {
  Collector c;
  const CssCode code = derive_logicals(load_matrix(QCLC_DATA "/zz.gx"), load_matrix(QCLC_DATA "/zz.gz"));
  const auto css = css_distance(code.gx, code.gz, 3);
  c.require(css.d.found && css.d.value == 1, "d_CSS = " + css.d.value_str());

  const auto p = assemble_physical(code, repeated_measurement_layer(2));
  const auto d = circuit_distance(p.ec.B, p.ec.L, 3);
  c.require(d.found && d.value == 1 && d.witness.weight() == 1 && !p.ec.B.mul(d.witness).any() &&
                p.ec.L.mul(d.witness).any(),
            "closed-form circuit distance " + d.value_str());

  // the same from the circuit itself, with S_in = S_out = ⟨Z1Z2⟩
  const auto g = build_plain(load_circuit(QCLC_DATA "/zz.qc"));
  const std::vector<PauliOperator> stab = {PauliOperator::from_string("ZZI")};
  const auto ec = build_ec_structure(g, stab, stab);
  const auto dc = circuit_distance(ec.B, ec.L, 3);
  c.require(dc.found && dc.value == 1 && dc.witness.weight() == 1 && !ec.B.mul(dc.witness).any() &&
                ec.L.mul(dc.witness).any(),
            "circuit distance of the ZZ circuit " + dc.value_str());
  if (dc.found) c.detail << "d_CSS = 1, d = 1 with witness on " << g.bit_name(static_cast<int>(dc.witness.support()[0]));
  return c.done();
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all = {
      {1, "CNOT propagation", 1, cnot_propagation},
      {2, "[[2,1,1]] codeword classes", 1, zz_classification},
      {3, "codeword-equation fuzz", 120, [] { return equation_fuzz(0); }},
      {4, "generalised equation fuzz", 300, [] { return equation_fuzz(4); }},
      {5, "bit splitting", 300, bit_splitting},
      {6, "symmetric splitting", 600, symmetric_splitting},
      {7, "synthesis round trip", 600, synthesis_roundtrip},
      {8, "CSS closed forms", 60, css_closed_forms},
      {9, "[[2,1,1]] distances", 1, two_one_one},
  };
  int failed = 0;
  for (const auto& cr : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = s < cr.limit_s;
    const bool pass = o.ok && in_time;
    failed += !pass;
    std::printf("[%s] %d %s: %.2f s (limit %.0f s)%s; %s\n", pass ? "PASS" : "FAIL", cr.id, cr.name, s, cr.limit_s,
                in_time ? "" : " TIME LIMIT EXCEEDED", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed;
}
