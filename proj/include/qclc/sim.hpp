#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qclc/circuit.hpp"
#include "qclc/codewords.hpp"
#include "qclc/pauli.hpp"
#include "qclc/tanner.hpp"

namespace qclc {

struct MeasurementRecord {
  int qubit = 0;
  int layer = 0;
  OpKind kind = OpKind::MeasZ;
  int value = 0;        // 0 ↦ +1, 1 ↦ −1
  bool random = false;
};

struct RunOptions {
  // Paulis applied after layer t (index t, 0 = before layer 1); empty = none
  std::vector<PauliOperator> errors;
  // forced values for random measurements, in execution order
  std::vector<int> forced;
};

std::vector<MeasurementRecord> run(const Circuit& c, Tableau& state, std::mt19937_64& rng,
                                   const RunOptions& opt = {});

// Spacetime error e over the bits of g as Paulis per layer boundary: an x-bit
// at (q, t) becomes Z_q after layer t, a z-bit X_q.
std::vector<PauliOperator> error_paulis(const TannerGraph& g, const BitVector& e);

// Sign ν(c) of the codeword equation, from the extended circuit.  g is the
// plain or symmetric Tanner graph of c_circuit.
int nu(const Circuit& c_circuit, const TannerGraph& g, const BitVector& c);

// μ_R(c, μ): product of the outcomes of the relevant measurements, as ±1.
int mu_relevant(const TannerGraph& g, const BitVector& c, const std::vector<MeasurementRecord>& mu);

struct Counterexample {
  std::string circuit;
  BitVector c, e;
  CodewordClass cls = CodewordClass::Checker;
  std::vector<MeasurementRecord> outcomes;
  int expected = 1;   // sign predicted by the codeword equation
  int actual = 1;     // sign observed (0 when the operator is not stabilised)
  std::string report() const;
};

struct Verdict {
  bool ok = true;
  CodewordClass cls = CodewordClass::Checker;
  int nu = 1;
  int runs = 0;
  std::optional<Counterexample> failure;
};

// Runs c_circuit from `states` random stabiliser states (seeded) and checks
// the codeword equation of c with error e in every run.
Verdict verify_codeword_equation(const Circuit& c_circuit, const TannerGraph& g, const BitVector& c,
                                 const BitVector& e, std::uint64_t seed, int states = 8);

struct VerifySummary {
  std::size_t codewords = 0;
  std::size_t runs = 0;
  std::vector<Counterexample> failures;
};
// Every kernel-basis codeword of the plain graph, error-free, plus
// `random_errors` random spacetime errors of weight ≤ max_error_weight each.
VerifySummary verify_circuit(const Circuit& c, std::uint64_t seed, int states = 8, int random_errors = 0,
                             int max_error_weight = 4);

}  // namespace qclc
