#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qclc/circuit.hpp"
#include "qclc/gf2.hpp"

namespace qclc {

// i^phase · σ(x, z), where σ(x, z) = i^{x·z} X^x Z^z (so σ(1,1) = Y).
class PauliOperator {
public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t n) : x(n), z(n) {}
  PauliOperator(BitVector xs, BitVector zs, int phase = 0);

  // σ(b) for b = (x | z) of length 2n
  static PauliOperator sigma(const BitVector& b);
  // e.g. "XZI", "-YY", "+iZ"
  static PauliOperator from_string(const std::string& s);

  std::size_t size() const { return x.size(); }
  int phase() const { return phase_; }
  void set_phase(int p) { phase_ = ((p % 4) + 4) % 4; }
  bool hermitian() const { return phase_ % 2 == 0; }
  int sign() const;   // ±1, hermitian operators only
  BitVector bits() const { return x.concat(z); }
  bool is_identity() const { return !x.any() && !z.any(); }
  std::size_t weight() const;

  PauliOperator operator*(const PauliOperator& o) const;
  bool commutes(const PauliOperator& o) const;
  bool same_up_to_sign(const PauliOperator& o) const { return x == o.x && z == o.z; }
  bool operator==(const PauliOperator& o) const { return phase_ == o.phase_ && x == o.x && z == o.z; }
  std::string str() const;

  BitVector x, z;

private:
  int phase_ = 0;
};

// exponent of i in σ(a)σ(b) = i^{g} σ(a ⊕ b) for one qubit
int pauli_g(bool x1, bool z1, bool x2, bool z2);

// Conjugates p by the gates of c (U p U†).  Throws on initialisation or
// measurement.
PauliOperator conjugate_pauli(const Circuit& c, const PauliOperator& p);
void conjugate_gate(const Operation& op, PauliOperator& p);

// Aaronson–Gottesman tableau: rows 0..n-1 destabilisers, n..2n-1 stabilisers.
class Tableau {
public:
  explicit Tableau(std::size_t n);   // |0…0⟩

  static Tableau random_state(std::size_t n, std::mt19937_64& rng);

  std::size_t size() const { return n_; }
  // gate methods take 0-based qubit indices; apply() takes circuit operations
  void h(int q);
  void s(int q);
  void cnot(int a, int b);
  void x(int q);
  void y(int q);
  void z(int q);
  void apply(const Operation& op, std::mt19937_64& rng);
  void apply_pauli(const PauliOperator& p);

  struct Outcome {
    int value = 0;       // 0 ↦ +1, 1 ↦ −1
    bool random = false;
  };
  // Measures a hermitian Pauli.  A forced value is used for random outcomes
  // and must agree with deterministic ones.
  Outcome measure(const PauliOperator& p, std::mt19937_64& rng, std::optional<int> forced = std::nullopt);
  // +1 / −1 when ±p is in the stabiliser group, 0 otherwise
  int expectation(const PauliOperator& p) const;
  // Projects onto the +1 eigenspace of p (applying an anticommuting Pauli
  // when the state is a −1 eigenstate).
  void project_plus(const PauliOperator& p, std::mt19937_64& rng);

  PauliOperator stabiliser(std::size_t i) const { return row(n_ + i); }
  PauliOperator destabiliser(std::size_t i) const { return row(i); }
  // generators independent, stabilisers commute, destabiliser i anticommutes
  // exactly with stabiliser i
  bool invariants_hold() const;

private:
  PauliOperator row(std::size_t i) const;
  void rowmul(std::size_t h, std::size_t i);   // row h ← row h · row i
  bool anticommutes(std::size_t i, const PauliOperator& p) const;

  std::size_t n_;
  std::vector<BitVector> xs_, zs_;
  std::vector<std::uint8_t> r_;
};

}  // namespace qclc
