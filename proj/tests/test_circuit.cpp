#include <random>

#include "doctest.h"
#include "qclc/circuit.hpp"
#include "support/random_circuit.hpp"

using namespace qclc;

namespace {

const char* kZZ =
    "qubits 3\n"
    "rz 3\ntick\ncnot 1 3\ntick\ncnot 2 3\ntick\nmz 3\ntick\n"
    "rz 3\ntick\ncnot 1 3\ntick\ncnot 2 3\ntick\nmz 3\n";

}  // namespace

TEST_CASE("repeated ZZ measurement parses to n=3, T=8") {
  const Circuit c = parse_circuit(kZZ);
  CHECK(c.n == 3);
  CHECK(c.depth() == 8);
  REQUIRE(c.op_at(2, 1) != nullptr);
  CHECK(c.op_at(2, 1)->kind == OpKind::CNOT);
  CHECK(c.op_at(2, 3) == c.op_at(2, 1));
  CHECK(c.op_at(1, 1) == nullptr);
}

TEST_CASE("header only gives an empty circuit") {
  const Circuit c = parse_circuit("qubits 1\n");
  CHECK(c.n == 1);
  CHECK(c.depth() == 0);
  CHECK(serialize(Circuit{}) == "qubits 0\n");
}

TEST_CASE("single H serialises to two lines") {
  Circuit c;
  c.n = 1;
  c.layers = {{{OpKind::H, 1, 0, 0}}};
  CHECK(serialize(c) == "qubits 1\nh 1\n");
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_circuit(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("qubits 1\nfoo 1\n") == 2);
  CHECK(line_of("qubits 1\nh 2\n") == 2);
  CHECK(line_of("qubits 2\nh 1\n# c\nh 1\n") == 4);      // duplicate in one layer
  CHECK(line_of("qubits 1\nmz 1\ntick\nh 1\n") == 4);    // gate after measurement
  CHECK(line_of("qubits 2\ncnot 1 1\n") == 2);
  CHECK(line_of("h 1\n") == 1);
  CHECK(line_of("qubits 1\nmz 1\ntick\nrz 1\ntick\nh 1\n") == -1);
  CHECK(line_of("qubits 1\nrz 1\ntick\nrz 1\n") == 2 + 2);  // init on a live qubit
}

TEST_CASE("validate reports programmatic violations") {
  Circuit c;
  c.n = 2;
  c.layers = {{{OpKind::H, 1, 0, 0}, {OpKind::S, 1, 0, 0}}, {{OpKind::MeasZ, 2, 0, 0}}, {{OpKind::S, 2, 0, 0}}};
  const auto v = validate(c);
  REQUIRE(v.size() == 2);
  CHECK(v[0].layer == 1);
  CHECK(v[1].layer == 3);
  CHECK(v[1].qubit == 2);
  Circuit ok;
  ok.n = 1;
  ok.layers = {{{OpKind::MeasZ, 1, 0, 0}}, {{OpKind::PauliX, 1, 0, 0}}, {{OpKind::InitX, 1, 0, 0}}};
  CHECK(validate(ok).empty());
}

TEST_CASE("serialise/parse round trip on random circuits") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    const Circuit c = testsupport::random_circuit(rng);
    REQUIRE(validate(c).empty());
    const std::string s = serialize(c);
    const Circuit back = parse_circuit(s);
    CHECK(back == c);
    CHECK(serialize(back) == s);
  }
}

TEST_CASE("empty final layers survive the round trip") {
  Circuit c;
  c.n = 1;
  c.layers = {{{OpKind::H, 1, 0, 0}}, {}, {}};
  CHECK(parse_circuit(serialize(c)) == c);
}

TEST_CASE("active layers follow live segments") {
  const Circuit c = parse_circuit("qubits 2\nx 1\ntick\nrz 1\nh 2\ntick\nmz 2\ntick\n\ntick\n");
  const auto a = active_layers(c);
  CHECK(a[1][1] == 0);   // Pauli before the first initialisation
  CHECK(a[1][2] == 1);
  CHECK(a[1][3] == 1);
  CHECK(a[2][1] == 1);
  CHECK(a[2][2] == 1);
  CHECK(a[2][3] == 1);   // the measurement itself
  CHECK(a[2][4] == 0);
}

TEST_CASE("extend: no reuse keeps n and rearranges only") {
  const Circuit c = parse_circuit("qubits 2\nrz 1\ntick\ncnot 1 2\ntick\nmz 2\n");
  const auto ex = extend(c);
  CHECK(ex.n_p == 0);
  CHECK(ex.circuit.n == 2);
  CHECK(ex.single_inits.size() == 1);
  CHECK(ex.single_meas.size() == 1);
  REQUIRE(ex.circuit.depth() == 5);
  CHECK(ex.circuit.layers[0] == std::vector<Operation>{{OpKind::InitZ, 1, 0, 0}});
  CHECK(ex.circuit.layers[1].empty());
  CHECK(ex.circuit.layers[2] == std::vector<Operation>{{OpKind::CNOT, 1, 2, 0}});
  CHECK(ex.circuit.layers[3].empty());
  CHECK(ex.circuit.layers[4] == std::vector<Operation>{{OpKind::MeasZ, 2, 0, 0}});
  CHECK(ex.layer_map == std::vector<int>{2, 3, 4});
}

TEST_CASE("extend: pure Clifford circuit keeps its middle layers") {
  const Circuit c = parse_circuit("qubits 2\nh 1\ntick\ncnot 1 2\ntick\ns 2\n");
  const auto ex = extend(c);
  CHECK(ex.n_p == 0);
  REQUIRE(ex.circuit.depth() == 5);
  for (int t = 1; t <= 3; ++t) CHECK(ex.circuit.layers[t] == c.layers[t - 1]);
  CHECK(ex.circuit.layers[0].empty());
  CHECK(ex.circuit.layers[4].empty());
}

TEST_CASE("extend: repeated ZZ measurement") {
  const auto ex = extend(parse_circuit(kZZ));
  // the measurement at layer 4 and the initialisation at layer 5 form the only
  // reuse pair; the first initialisation and the last measurement are single
  CHECK(ex.n_p == 1);
  CHECK(ex.circuit.n == 4);
  REQUIRE(ex.pairs.size() == 1);
  CHECK(ex.pairs[0].qubit == 3);
  CHECK(ex.pairs[0].meas.layer == 4);
  CHECK(ex.pairs[0].init.layer == 5);
  CHECK(ex.pairs[0].ancilla == 4);
}

TEST_CASE("extend invariants on random circuits") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Circuit c = testsupport::random_circuit(rng);
    const auto ex = extend(c);
    REQUIRE(validate(ex.circuit).empty());
    CHECK(ex.circuit.n == c.n + ex.n_p);
    CHECK(static_cast<int>(ex.pairs.size()) == ex.n_p);
    const int T = ex.circuit.depth();
    REQUIRE(T >= 2);
    for (const auto& op : ex.circuit.layers[0]) CHECK(is_init(op.kind));
    for (const auto& op : ex.circuit.layers[T - 1]) CHECK(is_meas(op.kind));
    int inits = 0, meas = 0;
    for (const auto& layer : c.layers)
      for (const auto& op : layer) {
        inits += is_init(op.kind);
        meas += is_meas(op.kind);
      }
    CHECK(static_cast<int>(ex.circuit.layers[0].size()) == inits);
    CHECK(static_cast<int>(ex.circuit.layers[T - 1].size()) == meas);
    for (int t = 2; t < T; ++t)
      for (const auto& op : ex.circuit.layers[t - 1]) CHECK((is_gate(op.kind) && op.kind != OpKind::I));
    CHECK(static_cast<int>(ex.layer_map.size()) == c.depth());
  }
}
