#include <random>

#include "doctest.h"
#include "oracle/dense_pauli.hpp"
#include "qclc/sim.hpp"
#include "support/codeword_search.hpp"
#include "support/random_circuit.hpp"

using namespace qclc;
using testsupport::codeword_with;
using testsupport::pauli_bits;

TEST_CASE("measurement of Z on |0> is deterministic +1") {
  std::mt19937_64 rng(1);
  Tableau t(1);
  const auto rec = run(parse_circuit("qubits 1\nmz 1\n"), t, rng);
  REQUIRE(rec.size() == 1);
  CHECK(rec[0].value == 0);
  CHECK_FALSE(rec[0].random);
}

TEST_CASE("forced outcomes") {
  std::mt19937_64 rng(2);
  Tableau t(1);
  RunOptions opt;
  opt.forced = {1};
  const auto rec = run(parse_circuit("qubits 1\nh 1\ntick\nmz 1\n"), t, rng, opt);
  CHECK(rec[0].random);
  CHECK(rec[0].value == 1);
  CHECK(t.expectation(PauliOperator::from_string("Z")) == -1);
  Tableau t2(1);
  CHECK_THROWS(run(parse_circuit("qubits 1\nmz 1\n"), t2, rng, opt));
}

TEST_CASE("repeated ZZ measurement gives equal outcomes on a ZZ-stabilised input") {
  const Circuit c = load_circuit(QCLC_DATA "/zz.qc");
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    Tableau t = Tableau::random_state(3, rng);
    t.project_plus(PauliOperator::from_string("ZZI"), rng);
    const auto rec = run(c, t, rng);
    REQUIRE(rec.size() == 2);
    CHECK(rec[0].value == rec[1].value);
    CHECK(rec[0].value == 0);
  }
}

TEST_CASE("nu on single-gate codewords") {
  const Circuit s = parse_circuit("qubits 1\ns 1\n");
  const auto g = build_plain(s);
  // bit order x[1,0] z[1,0] x[1,1] z[1,1]
  CHECK(nu(s, g, BitVector::from_string("1011")) == 1);    // X → Y
  CHECK(nu(s, g, BitVector::from_string("1110")) == -1);   // Y → X
  CHECK_THROWS_AS(nu(s, g, BitVector::from_string("1000")), DomainError);

  std::mt19937_64 rng(4);
  testsupport::CircuitShape shape;
  shape.paulis = false;
  shape.x_basis = false;
  for (int i = 0; i < 50; ++i) {
    Circuit c;
    c.n = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < 4; ++t) {
      std::vector<Operation> layer;
      for (int q = 1; q + 1 <= c.n; q += 2)
        if (rng() & 1) layer.push_back({OpKind::CNOT, q, q + 1, 0});
      c.layers.push_back(layer);
    }
    const auto gc = build_plain(c);
    const auto k = kernel_basis(gc.matrix());
    for (const auto& r : k.row_list()) CHECK(nu(c, gc, r) == 1);
  }
}

TEST_CASE("nu agrees with conjugation on gate-only circuits") {
  std::mt19937_64 rng(5);
  testsupport::CircuitShape shape;
  shape.max_depth = 8;
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    Circuit c = testsupport::random_circuit(rng, shape);
    // keep only unitary operations
    for (auto& layer : c.layers)
      std::erase_if(layer, [](const Operation& op) { return is_init(op.kind) || is_meas(op.kind); });
    const auto g = build_plain(c);
    const auto k = kernel_basis(g.matrix());
    for (const auto& r : k.row_list()) {
      const auto in = sigma_in(g, r), out = sigma_out(g, r);
      const auto conj = conjugate_pauli(c, in);
      REQUIRE(conj.same_up_to_sign(out));
      CHECK(conj.sign() == nu(c, g, r));
      if (c.n <= 3) CHECK(oracle::conjugation_sign(c, in, out) == nu(c, g, r));
      ++checked;
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("repeated ZZ checker") {
  const Circuit c = load_circuit(QCLC_DATA "/zz.qc");
  const auto g = build_plain(c);
  const int mu1 = g.find_bit(BitKind::Z, 3, 3);
  const auto d1 = *codeword_with(g, pauli_bits("ZZI"), pauli_bits("III"), [&](int b) { return g.bits[b].t > 3; });
  const auto d2 = *codeword_with(g, pauli_bits("ZZI"), pauli_bits("III"), [&](int b) { return b == mu1; });
  const BitVector chk = d1 ^ d2;
  const BitVector zero(g.num_bits());
  const auto v = verify_codeword_equation(c, g, chk, zero, 7, 32);
  CHECK(v.ok);
  CHECK(v.cls == CodewordClass::Checker);

  // a single X error on data qubit 1 between the two cycles flips the product
  std::mt19937_64 rng(8);
  BitVector e(g.num_bits());
  int flipped = -1;
  for (int t = 4; t <= 5 && flipped < 0; ++t) {
    const int b = g.find_bit(BitKind::Z, 1, t);
    if (b >= 0 && chk.get(b)) flipped = b;
  }
  REQUIRE(flipped >= 0);
  e.set(flipped);
  CHECK(chk.dot(e));
  const int nu_c = nu(c, g, chk);
  for (int k = 0; k < 20; ++k) {
    Tableau t = Tableau::random_state(3, rng);
    RunOptions opt;
    opt.errors = error_paulis(g, e);
    const auto mu = run(c, t, rng, opt);
    CHECK(nu_c * mu_relevant(g, chk, mu) == -1);
  }
  const auto ve = verify_codeword_equation(c, g, chk, e, 9, 16);
  CHECK(ve.ok);
}

TEST_CASE("errors in the row space of A act like no error") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 40; ++i) {
    const Circuit c = testsupport::random_circuit(rng);
    const auto g = build_plain(c);
    const auto a = g.matrix();
    if (!a.rows()) continue;
    BitVector e(g.num_bits());
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (rng() & 1) e ^= a.row(r);
    const auto k = kernel_basis(a);
    for (const auto& r : k.row_list()) {
      CHECK(!r.dot(e));
      CHECK(verify_codeword_equation(c, g, r, e, rng(), 4).ok);
    }
  }
}

TEST_CASE("codeword equations on random circuits") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 80; ++i) {
    const Circuit c = testsupport::random_circuit(rng);
    const auto s = verify_circuit(c, rng(), 8, 4, 4);
    if (!s.failures.empty()) FAIL_CHECK(s.failures.front().report());
  }
}

TEST_CASE("verify_circuit is reproducible") {
  const Circuit c = load_circuit(QCLC_DATA "/zz.qc");
  const auto a = verify_circuit(c, 42, 8, 3);
  const auto b = verify_circuit(c, 42, 8, 3);
  CHECK(a.codewords == b.codewords);
  CHECK(a.runs == b.runs);
  CHECK(a.failures.empty());
}

TEST_CASE("counterexample report names the class and signs") {
  Counterexample ce;
  ce.circuit = "qubits 1\n";
  ce.c = BitVector::from_string("1");
  ce.e = BitVector::from_string("0");
  ce.expected = 1;
  ce.actual = -1;
  const auto r = ce.report();
  CHECK(r.find("checker") != std::string::npos);
  CHECK(r.find("expected sign: +1") != std::string::npos);
  CHECK(r.find("actual sign: -1") != std::string::npos);
}
