#include <random>
#include <sstream>

#include "doctest.h"
#include "qclc/codewords.hpp"
#include "qclc/synthesis.hpp"
#include "support/random_symmetric.hpp"

using namespace qclc;

namespace {

// A pair (v, a) with a long terminal on a and a self-loop v–a, plus a second
// pair joined to it: S = [[1,1],[1,0]].
testsupport::SymmetricGraph two_pairs() {
  BitMatrix A(2, 3);
  A.set(0, 0);
  A.set(0, 1);
  A.set(1, 0);
  A.set(0, 2);
  testsupport::SymmetricGraph s;
  s.g = TannerGraph::from_matrix(A);
  s.w = witness_from_duals(s.g, {0, 1});
  return s;
}

std::size_t count_ops(const Circuit& c, OpKind k) {
  std::size_t n = 0;
  for (const auto& l : c.layers)
    for (const auto& op : l) n += op.kind == k;
  return n;
}

}  // namespace

TEST_CASE("trivial partition") {
  const auto s = two_pairs();
  const auto p = trivial_partition(s.g, s.w);
  REQUIRE(p.qubits() == 2);
  CHECK(validate_partition(s.g, s.w, p).ok);
  CHECK(p.paths[0].role == Role::X);
  CHECK(p.paths[0].nodes == std::vector<Node>{{false, 0}});
  CHECK(p.paths[1].nodes == std::vector<Node>{{true, 0}});
  CHECK(p.tau_bit == std::vector<int>{1, 1, 0});

  const auto r = synthesize(s.g, s.w, p);
  CHECK(r.circuit.n == 2);
  CHECK(r.schedule.gates.size() == 2);   // S on qubit 1, CZ(1,2)
  CHECK(count_ops(r.circuit, OpKind::S) == 1);
  CHECK(count_ops(r.circuit, OpKind::CNOT) == 1);
  CHECK(r.schedule.open_inputs == std::vector<int>{1});
  CHECK(r.schedule.open_outputs.empty());
  CHECK(count_ops(r.circuit, OpKind::InitX) == 1);
  CHECK(count_ops(r.circuit, OpKind::MeasX) == 2);

  const auto rep = roundtrip_check(s.g, s.w, p, 6);
  CHECK_MESSAGE(rep.ok, rep.str());
}

TEST_CASE("graph without long terminals synthesises a closed circuit") {
  BitMatrix A(1, 1);
  A.set(0, 0);
  const auto g = TannerGraph::from_matrix(A);
  const auto w = witness_from_duals(g, {0});
  const auto r = synthesize(g, w, trivial_partition(g, w));
  // init X, S, measure X
  CHECK(r.circuit.depth() == 3);
  CHECK(r.circuit.layers[1][0].kind == OpKind::S);
  CHECK(roundtrip_check(g, w, trivial_partition(g, w), 4).ok);
}

TEST_CASE("validation names the violated condition") {
  const auto s = two_pairs();
  auto p = trivial_partition(s.g, s.w);

  auto bad = p;
  bad.tau_bit[1] = bad.tau_check[1] = 2;   // the edge v0–a1 now joins τ 1 and 2
  auto rep = validate_partition(s.g, s.w, bad);
  CHECK(rep.condition == 3);

  bad = p;
  bad.tau_check[1] = 2;
  CHECK(validate_partition(s.g, s.w, bad).condition == 5);

  bad = p;
  std::swap(bad.paths[1].nodes, bad.paths[3].nodes);
  CHECK(validate_partition(s.g, s.w, bad).condition == 1);

  bad = p;
  bad.paths[0].nodes.push_back({true, 1});
  CHECK(validate_partition(s.g, s.w, bad).condition == -1);

  bad = p;
  bad.paths[0].nodes.push_back({false, 2});
  CHECK(validate_partition(s.g, s.w, bad).condition == -1);
  CHECK_THROWS_AS(synthesize(s.g, s.w, bad), DomainError);
}

TEST_CASE("a hand-built path partition") {
  // S is the path graph 0–1–2 plus a long terminal on check 0; one qubit
  // takes the whole chain v0–a1–v2 and its dual a0–v1–a2.
  BitMatrix A(3, 4);
  A.set(0, 1);
  A.set(1, 0);
  A.set(1, 2);
  A.set(2, 1);
  A.set(0, 3);
  testsupport::SymmetricGraph s;
  s.g = TannerGraph::from_matrix(A);
  s.w = witness_from_duals(s.g, {0, 1, 2});
  PathPartition p;
  p.paths.push_back({1, Role::X, {{false, 0}, {true, 1}, {false, 2}}});
  p.paths.push_back({1, Role::Z, {{true, 0}, {false, 1}, {true, 2}}});
  p.tau_bit = {1, 2, 3, 0};
  p.tau_check = {1, 2, 3};
  const auto rep = validate_partition(s.g, s.w, p);
  REQUIRE_MESSAGE(rep.ok, rep.message);
  const auto r = synthesize(s.g, s.w, p);
  CHECK(r.circuit.n == 1);
  CHECK(r.schedule.gates.empty());
  CHECK(r.schedule.open_inputs == std::vector<int>{1});
  // three windows of one identity layer each and a final X measurement
  CHECK(r.schedule.dt == std::vector<int>{1, 1, 1});
  CHECK(r.circuit.depth() == 4);
  const auto rt = roundtrip_check(s.g, s.w, p, 6);
  CHECK_MESSAGE(rt.ok, rt.str());
}

TEST_CASE("round trip on random symmetric graphs, trivial partition") {
  std::mt19937_64 rng(5);
  testsupport::SymmetricShape shape;
  shape.max_pairs = 8;
  for (int it = 0; it < 20; ++it) {
    const auto s = testsupport::random_symmetric(rng, shape);
    const auto p = trivial_partition(s.g, s.w);
    const auto rep = roundtrip_check(s.g, s.w, p, 8);
    CHECK_MESSAGE(rep.ok, rep.str());
    CHECK(rep.gates == rep.edge_classes);
  }
}

TEST_CASE("round trip with random code matrices") {
  std::mt19937_64 rng(6);
  testsupport::SymmetricShape shape;
  shape.max_pairs = 9;
  shape.long_prob = 0.2;
  int decided = 0;
  for (int it = 0; it < 20; ++it) {
    const auto s = testsupport::random_symmetric(rng, shape);
    const BitMatrix k = kernel_basis(s.g.matrix());
    if (!k.rows()) continue;
    const auto [B, L] = testsupport::random_code_matrices(rng, k);
    for (const auto& p : {trivial_partition(s.g, s.w), greedy_partition(s.g, s.w)}) {
      const auto rep = roundtrip_check(s.g, s.w, p, 8, B, L);
      CHECK_MESSAGE(rep.ok, rep.str());
      decided += rep.bound.conclusive;
    }
  }
  CHECK(decided >= 20);
}

TEST_CASE("greedy partition merges paths") {
  std::mt19937_64 rng(7);
  testsupport::SymmetricShape shape;
  shape.max_pairs = 10;
  shape.edge_prob = 0.25;
  int merged = 0;
  for (int it = 0; it < 20; ++it) {
    const auto s = testsupport::random_symmetric(rng, shape);
    const auto p = greedy_partition(s.g, s.w);
    const auto rep = validate_partition(s.g, s.w, p);
    REQUIRE_MESSAGE(rep.ok, rep.message);
    merged += p.qubits() < static_cast<int>(s.g.num_checks());
    const auto rt = roundtrip_check(s.g, s.w, p, 6);
    CHECK_MESSAGE(rt.ok, rt.str());
  }
  CHECK(merged >= 10);
}

TEST_CASE("circuits round trip through their own symmetric graphs") {
  for (const char* name : {"/zz.qc", "/cnot.qc"}) {
    const Circuit c = load_circuit(std::string(QCLC_DATA) + name);
    const auto sym = symmetrize(c);
    for (const auto& p : {trivial_partition(sym.graph, sym.witness), greedy_partition(sym.graph, sym.witness)}) {
      const auto rep = roundtrip_check(sym.graph, sym.witness, p, 6);
      CHECK_MESSAGE(rep.ok, name << ": " << rep.str());
    }
  }
}

TEST_CASE("synthesised circuits are valid and keep the code dimension") {
  std::mt19937_64 rng(8);
  for (int it = 0; it < 15; ++it) {
    const auto s = testsupport::random_symmetric(rng);
    const auto r = synthesize(s.g, s.w, greedy_partition(s.g, s.w));
    CHECK(validate(r.circuit).empty());
    CHECK(kernel_basis(r.symmetric.graph.matrix()).rows() == kernel_basis(s.g.matrix()).rows());
    CHECK(static_cast<int>(r.schedule.dt.size()) >= 1);
    for (int d : r.schedule.dt) CHECK(d >= 1);
  }
}

TEST_CASE("partition files round trip") {
  std::mt19937_64 rng(9);
  const auto s = testsupport::random_symmetric(rng);
  const auto p = greedy_partition(s.g, s.w);
  std::stringstream io;
  write_partition(io, s.g, p);
  const auto q = read_partition(io, s.g, s.w);
  REQUIRE(q.paths.size() == p.paths.size());
  for (std::size_t i = 0; i < p.paths.size(); ++i) {
    CHECK(q.paths[i].qubit == p.paths[i].qubit);
    CHECK(q.paths[i].nodes == p.paths[i].nodes);
  }
  CHECK(q.tau_bit == p.tau_bit);
  CHECK(q.tau_check == p.tau_check);

  std::istringstream bad1("path 1 Y : c0\n");
  CHECK_THROWS_AS(read_partition(bad1, s.g, s.w), DomainError);
  std::istringstream bad2("path 1 X : nosuchvertex\n");
  CHECK_THROWS_AS(read_partition(bad2, s.g, s.w), DomainError);
  std::istringstream bad3("path 1 X : c0\n");
  CHECK_THROWS_AS(read_partition(bad3, s.g, s.w), DomainError);
}
