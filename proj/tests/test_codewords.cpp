#include <random>

#include "doctest.h"
#include "qclc/codewords.hpp"
#include "support/codeword_search.hpp"
#include "support/random_circuit.hpp"

using namespace qclc;
using testsupport::codeword_with;
using testsupport::pauli_bits;

namespace {

struct ZZ {
  Circuit c = load_circuit(QCLC_DATA "/zz.qc");
  TannerGraph g = build_plain(c);
  int mu1 = g.find_bit(BitKind::Z, 3, 3);
  int mu2 = g.find_bit(BitKind::Z, 3, 7);
};

}  // namespace

TEST_CASE("CNOT codeword: X1 to X1X2") {
  const auto g = build_plain(load_circuit(QCLC_DATA "/cnot.qc"));
  const auto c = BitVector::from_string("10001100");
  CHECK(!g.matrix().mul(c).any());
  CHECK(sigma_in(g, c).str() == "+XI");
  CHECK(sigma_out(g, c).str() == "+XX");
  CHECK(layer_projection(g, 1).mul(c) == project(g, c, 1));
  CHECK(classify(g, c) == CodewordClass::GenuinePropagator);
}

TEST_CASE("repeated ZZ measurement: codeword classes") {
  ZZ z;
  REQUIRE(z.mu1 >= 0);
  REQUIRE(z.mu2 >= 0);
  CHECK(z.g.bits[z.mu1].meas);
  CHECK(z.g.bits[z.mu2].meas);
  const auto s = code_spaces(z.g);

  const auto xx = codeword_with(z.g, pauli_bits("XXI"), pauli_bits("XXI"));
  REQUIRE(xx);
  CHECK(classify(z.g, s, *xx) == CodewordClass::GenuinePropagator);
  const auto z1 = codeword_with(z.g, pauli_bits("ZII"), pauli_bits("ZII"));
  REQUIRE(z1);
  CHECK(classify(z.g, s, *z1) == CodewordClass::GenuinePropagator);
  const auto zz = codeword_with(z.g, pauli_bits("ZZI"), pauli_bits("ZZI"));
  REQUIRE(zz);
  CHECK(classify(z.g, s, *zz) == CodewordClass::PseudoPropagator);

  // first detector vanishes after t = 3; second avoids the first measurement
  const auto d1 = codeword_with(z.g, pauli_bits("ZZI"), pauli_bits("III"), [&](int b) { return z.g.bits[b].t > 3; });
  const auto d2 = codeword_with(z.g, pauli_bits("ZZI"), pauli_bits("III"), [&](int b) { return b == z.mu1; });
  REQUIRE(d1);
  REQUIRE(d2);
  CHECK(classify(z.g, s, *d1) == CodewordClass::Detector);
  CHECK(classify(z.g, s, *d2) == CodewordClass::Detector);
  CHECK(relevant_measurements(z.g, *d1) == std::vector<int>{z.mu1});
  CHECK(relevant_measurements(z.g, *d2) == std::vector<int>{z.mu2});

  const BitVector e1 = *zz ^ *d1, e2 = *zz ^ *d2;
  CHECK(classify(z.g, s, e1) == CodewordClass::Emitter);
  CHECK(classify(z.g, s, e2) == CodewordClass::Emitter);
  CHECK(sigma_out(z.g, e1).str() == "+ZZI");

  const BitVector chk = *d1 ^ *d2;
  CHECK(classify(z.g, s, chk) == CodewordClass::Checker);
  CHECK(relevant_measurements(z.g, chk) == std::vector<int>{z.mu1, z.mu2});
}

TEST_CASE("class algebra on random circuits") {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 150; ++i) {
    const auto g = build_plain(testsupport::random_circuit(rng));
    const auto s = code_spaces(g);
    std::vector<BitVector> checkers = s.c.row_list(), det, emi;
    for (const auto& r : s.cd.row_list())
      if (project(g, r, 0).any()) det.push_back(r);
    for (const auto& r : s.ce.row_list())
      if (project(g, r, g.depth).any()) emi.push_back(r);
    for (const auto& a : checkers) {
      CHECK(classify(g, s, a) == CodewordClass::Checker);
      for (const auto& b : checkers) CHECK(classify(g, s, a ^ b) == CodewordClass::Checker);
      for (const auto& d : det) CHECK(classify(g, s, a ^ d) == CodewordClass::Detector);
    }
    for (const auto& d : det)
      for (const auto& e : emi) {
        const auto k = classify(g, s, d ^ e);
        CHECK((k == CodewordClass::PseudoPropagator));
      }
    // every kernel vector has a class consistent with its projections
    for (const auto& r : s.kernel.row_list()) {
      const auto k = classify(g, s, r);
      const bool in = project(g, r, 0).any(), out = project(g, r, g.depth).any();
      CHECK((k == CodewordClass::Checker) == (!in && !out));
      CHECK((k == CodewordClass::Detector) == (in && !out));
      CHECK((k == CodewordClass::Emitter) == (!in && out));
    }
  }
}

TEST_CASE("classify rejects non-codewords") {
  const auto g = build_plain(load_circuit(QCLC_DATA "/cnot.qc"));
  CHECK_THROWS_AS(classify(g, BitVector::from_string("10000000")), DomainError);
  CHECK_THROWS_AS(classify(g, BitVector::from_string("1")), DomainError);
}

TEST_CASE("EC structure of the repeated ZZ measurement") {
  ZZ z;
  const std::vector<PauliOperator> stab = {PauliOperator::from_string("ZZI")};
  const auto ec = build_ec_structure(z.g, stab, stab);
  CHECK((ec.A * ec.B.transpose()).is_zero());
  CHECK((ec.A * ec.L.transpose()).is_zero());
  CHECK(ec.L.rows() == 2);
  CHECK(ec.V_M == std::vector<int>{z.mu1, z.mu2});

  const auto zz = *codeword_with(z.g, pauli_bits("ZZI"), pauli_bits("ZZI"));
  const auto d1 = *codeword_with(z.g, pauli_bits("ZZI"), pauli_bits("III"), [&](int b) { return z.g.bits[b].t > 3; });
  const auto d2 = *codeword_with(z.g, pauli_bits("ZZI"), pauli_bits("III"), [&](int b) { return b == z.mu1; });
  for (const auto& v : {d1, d2, zz ^ d1, zz ^ d2, d1 ^ d2}) CHECK(row_space_member(ec.B, v));

  // the logical rows carry X1X2 and Z1, modulo the stabiliser
  BitMatrix in(0, 6), want = BitMatrix::from_rows({pauli_bits("XXI"), pauli_bits("ZII"), pauli_bits("ZZI")}, 6);
  for (const auto& p : ec.L_in) in.append_row(p.bits());
  in.append_row(pauli_bits("ZZI"));
  CHECK(same_row_space(in, want));
  const auto xx = *codeword_with(z.g, pauli_bits("XXI"), pauli_bits("XXI"));
  CHECK_FALSE(row_space_member(ec.B, xx));
  CHECK(row_space_member(vstack(ec.B, ec.L), xx));

  CHECK_THROWS_AS(build_ec_structure(z.g, {PauliOperator::from_string("XII"), PauliOperator::from_string("ZII")}, stab),
                  DomainError);
  CHECK_THROWS_AS(build_ec_structure(z.g, {PauliOperator::from_string("XI")}, stab), DomainError);
}

TEST_CASE("codes recovered from B") {
  ZZ z;
  const auto d1 = *codeword_with(z.g, pauli_bits("ZZI"), pauli_bits("III"), [&](int b) { return z.g.bits[b].t > 3; });
  const auto d2 = *codeword_with(z.g, pauli_bits("ZZI"), pauli_bits("III"), [&](int b) { return b == z.mu1; });
  const auto [sin, sout] = derive_codes_from_B(z.g, BitMatrix::from_rows({d1, d2}, z.g.num_bits()));
  REQUIRE(sin.size() == 1);
  CHECK(sin[0].str() == "+ZZI");
  CHECK(sout.empty());
  const auto [e_in, e_out] = derive_codes_from_B(z.g, BitMatrix(0, z.g.num_bits()));
  CHECK(e_in.empty());
  CHECK(e_out.empty());
  CHECK_THROWS_AS(derive_codes_from_B(z.g, BitMatrix::from_rows({BitVector::unit(z.g.num_bits(), 0)}, z.g.num_bits())),
                  DomainError);
}

TEST_CASE("B built from derived codes contains B") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 60; ++i) {
    const auto g = build_plain(testsupport::random_circuit(rng));
    const auto k = kernel_basis(g.matrix());
    if (!k.rows()) continue;
    // a random commuting subspace: detectors and checkers only
    const auto s = code_spaces(g);
    const auto [sin, sout] = derive_codes_from_B(g, s.cd);
    const auto ec = build_ec_structure(g, sin, sout);
    for (const auto& r : s.cd.row_list()) CHECK(row_space_member(ec.B, r));
    check_ec_validity(g, ec);
  }
}

TEST_CASE("error equivalence") {
  const auto r = symmetrize(parse_circuit("qubits 1\ns 1\ntick\nh 1\n"));
  REQUIRE(r.splits == 1);
  const auto a = r.graph.matrix();
  const std::size_t nb = r.graph.num_bits();
  const int u = static_cast<int>(nb) - 1;
  const int v = r.graph.check_bits.back()[0] == u ? r.graph.check_bits.back()[1] : r.graph.check_bits.back()[0];
  CHECK(errors_equivalent(a, BitVector::unit(nb, v), BitVector::unit(nb, u)));
  // a vector outside the row space
  for (std::size_t b = 0; b < nb; ++b) {
    const auto e = BitVector::unit(nb, b);
    if (!row_space_member(a, e)) {
      CHECK_FALSE(errors_equivalent(a, e, BitVector(nb)));
      break;
    }
  }
}

TEST_CASE("anticommuting partners") {
  ZZ z;
  const auto xx = *codeword_with(z.g, pauli_bits("XXI"), pauli_bits("XXI"));
  const auto p = find_anticommuting_partner(z.g, xx);
  const auto in = sigma_in(z.g, p).bits();
  const auto span_z = BitMatrix::from_rows({pauli_bits("ZII"), pauli_bits("ZZI")}, 6);
  CHECK(row_space_member(span_z, in));
  CHECK_FALSE(row_space_member(BitMatrix::from_rows({pauli_bits("ZZI")}, 6), in));

  const auto zz = *codeword_with(z.g, pauli_bits("ZZI"), pauli_bits("ZZI"));
  CHECK_THROWS_AS(find_anticommuting_partner(z.g, zz), DomainError);

  std::mt19937_64 rng(13);
  testsupport::CircuitShape shape;
  shape.max_n = 4;
  int found = 0;
  for (int i = 0; i < 80; ++i) {
    const auto g = build_plain(testsupport::random_circuit(rng, shape));
    const auto s = code_spaces(g);
    for (const auto& r : s.kernel.row_list()) {
      if (classify(g, s, r) != CodewordClass::GenuinePropagator) continue;
      const auto q = find_anticommuting_partner(g, r);
      CHECK(symplectic_product(project(g, r, 0), project(g, q, 0)));
      CHECK(symplectic_product(project(g, r, g.depth), project(g, q, g.depth)));
      ++found;
    }
  }
  CHECK(found > 20);
}
