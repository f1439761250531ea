#include "qclc/pauli.hpp"

namespace qclc {

int pauli_g(bool x1, bool z1, bool x2, bool z2) {
  if (!x1 && !z1) return 0;
  if (x1 && z1) return static_cast<int>(z2) - static_cast<int>(x2);
  if (x1) return static_cast<int>(z2) * (2 * static_cast<int>(x2) - 1);
  return static_cast<int>(x2) * (1 - 2 * static_cast<int>(z2));
}

PauliOperator::PauliOperator(BitVector xs, BitVector zs, int phase) : x(std::move(xs)), z(std::move(zs)) {
  if (x.size() != z.size()) throw DomainError("Pauli x and z strings differ in length");
  set_phase(phase);
}

PauliOperator PauliOperator::sigma(const BitVector& b) {
  if (b.size() % 2) throw DomainError("σ(b) needs an even-length vector");
  const std::size_t n = b.size() / 2;
  return PauliOperator(b.slice(0, n), b.slice(n, n), 0);
}

PauliOperator PauliOperator::from_string(const std::string& s) {
  std::size_t i = 0;
  int phase = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') phase = 2;
    ++i;
  }
  if (i < s.size() && s[i] == 'i') {
    phase += 1;
    ++i;
  }
  const std::size_t n = s.size() - i;
  PauliOperator p(n);
  for (std::size_t q = 0; q < n; ++q) {
    switch (s[i + q]) {
      case 'I': break;
      case 'X': p.x.set(q); break;
      case 'Z': p.z.set(q); break;
      case 'Y': p.x.set(q); p.z.set(q); break;
      default: throw DomainError("bad Pauli string '" + s + "'");
    }
  }
  p.set_phase(phase);
  return p;
}

int PauliOperator::sign() const {
  if (!hermitian()) throw DomainError("sign of a non-hermitian Pauli operator");
  return phase_ == 0 ? 1 : -1;
}

std::size_t PauliOperator::weight() const {
  BitVector u = x;
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z.get(i)) u.set(i);
  return u.weight();
}

PauliOperator PauliOperator::operator*(const PauliOperator& o) const {
  if (size() != o.size()) throw DomainError("Pauli product of different sizes");
  int ph = phase_ + o.phase_;
  for (std::size_t j = 0; j < size(); ++j) ph += pauli_g(x.get(j), z.get(j), o.x.get(j), o.z.get(j));
  PauliOperator r(x ^ o.x, z ^ o.z, 0);
  r.set_phase(ph);
  return r;
}

bool PauliOperator::commutes(const PauliOperator& o) const {
  return !(x.dot(o.z) ^ z.dot(o.x));
}

std::string PauliOperator::str() const {
  static const char* pre[] = {"+", "+i", "-", "-i"};
  std::string s = pre[phase_];
  for (std::size_t q = 0; q < size(); ++q) s += x.get(q) ? (z.get(q) ? 'Y' : 'X') : (z.get(q) ? 'Z' : 'I');
  return s;
}

void conjugate_gate(const Operation& op, PauliOperator& p) {
  if (!p.hermitian()) throw DomainError("conjugation expects a hermitian Pauli operator");
  bool flip = false;
  const std::size_t a = op.q - 1;
  switch (op.kind) {
    case OpKind::H: {
      const bool xa = p.x.get(a), za = p.z.get(a);
      flip = xa && za;
      p.x.set(a, za);
      p.z.set(a, xa);
      break;
    }
    case OpKind::S:
      flip = p.x.get(a) && p.z.get(a);
      if (p.x.get(a)) p.z.flip(a);
      break;
    case OpKind::CNOT: {
      const std::size_t b = op.target - 1;
      flip = p.x.get(a) && p.z.get(b) && !(p.x.get(b) ^ p.z.get(a));
      if (p.x.get(a)) p.x.flip(b);
      if (p.z.get(b)) p.z.flip(a);
      break;
    }
    case OpKind::PauliX: flip = p.z.get(a); break;
    case OpKind::PauliZ: flip = p.x.get(a); break;
    case OpKind::PauliY: flip = p.x.get(a) ^ p.z.get(a); break;
    case OpKind::I: break;
    default:
      throw DomainError(std::string("cannot conjugate through '") + mnemonic(op.kind) + "'");
  }
  if (flip) p.set_phase(p.phase() + 2);
}

PauliOperator conjugate_pauli(const Circuit& c, const PauliOperator& p) {
  if (p.size() != static_cast<std::size_t>(c.n)) throw DomainError("Pauli size does not match circuit");
  PauliOperator r = p;
  for (const auto& layer : c.layers)
    for (const auto& op : layer) conjugate_gate(op, r);
  return r;
}

// ---------------------------------------------------------------- tableau --

Tableau::Tableau(std::size_t n) : n_(n), xs_(2 * n, BitVector(n)), zs_(2 * n, BitVector(n)), r_(2 * n, 0) {
  for (std::size_t i = 0; i < n; ++i) {
    xs_[i].set(i);
    zs_[n + i].set(i);
  }
}

Tableau Tableau::random_state(std::size_t n, std::mt19937_64& rng) {
  Tableau t(n);
  if (n == 0) return t;
  const std::size_t steps = 4 * n * n + 8;
  for (std::size_t k = 0; k < steps; ++k) {
    const int q = static_cast<int>(rng() % n);
    switch (rng() % 3) {
      case 0: t.h(q); break;
      case 1: t.s(q); break;
      default:
        if (n > 1) {
          int b = static_cast<int>(rng() % (n - 1));
          if (b >= q) ++b;
          t.cnot(q, b);
        }
    }
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (rng() & 1) t.x(static_cast<int>(q));
    if (rng() & 1) t.z(static_cast<int>(q));
  }
  return t;
}

void Tableau::h(int q) {
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    const bool x = xs_[i].get(q), z = zs_[i].get(q);
    r_[i] ^= x && z;
    xs_[i].set(q, z);
    zs_[i].set(q, x);
  }
}

void Tableau::s(int q) {
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    r_[i] ^= xs_[i].get(q) && zs_[i].get(q);
    if (xs_[i].get(q)) zs_[i].flip(q);
  }
}

void Tableau::cnot(int a, int b) {
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    const bool xa = xs_[i].get(a), zb = zs_[i].get(b);
    r_[i] ^= xa && zb && !(xs_[i].get(b) ^ zs_[i].get(a));
    if (xa) xs_[i].flip(b);
    if (zb) zs_[i].flip(a);
  }
}

void Tableau::x(int q) {
  for (std::size_t i = 0; i < 2 * n_; ++i) r_[i] ^= zs_[i].get(q);
}
void Tableau::z(int q) {
  for (std::size_t i = 0; i < 2 * n_; ++i) r_[i] ^= xs_[i].get(q);
}
void Tableau::y(int q) {
  for (std::size_t i = 0; i < 2 * n_; ++i) r_[i] ^= xs_[i].get(q) ^ zs_[i].get(q);
}

void Tableau::apply(const Operation& op, std::mt19937_64& rng) {
  const int q = op.q - 1;
  switch (op.kind) {
    case OpKind::H: h(q); break;
    case OpKind::S: s(q); break;
    case OpKind::CNOT: cnot(q, op.target - 1); break;
    case OpKind::PauliX: x(q); break;
    case OpKind::PauliY: y(q); break;
    case OpKind::PauliZ: z(q); break;
    case OpKind::I: break;
    case OpKind::InitZ: {
      PauliOperator p(n_);
      p.z.set(q);
      if (measure(p, rng).value) x(q);
      break;
    }
    case OpKind::InitX: {
      PauliOperator p(n_);
      p.x.set(q);
      if (measure(p, rng).value) z(q);
      break;
    }
    default: throw DomainError("Tableau::apply: measurements are handled by the caller");
  }
}

void Tableau::apply_pauli(const PauliOperator& p) {
  for (std::size_t i = 0; i < 2 * n_; ++i)
    if (anticommutes(i, p)) r_[i] ^= 1;
}

PauliOperator Tableau::row(std::size_t i) const { return PauliOperator(xs_[i], zs_[i], r_[i] ? 2 : 0); }

bool Tableau::anticommutes(std::size_t i, const PauliOperator& p) const {
  return xs_[i].dot(p.z) ^ zs_[i].dot(p.x);
}

void Tableau::rowmul(std::size_t h, std::size_t i) {
  int ph = 2 * r_[h] + 2 * r_[i];
  for (std::size_t j = 0; j < n_; ++j) ph += pauli_g(xs_[i].get(j), zs_[i].get(j), xs_[h].get(j), zs_[h].get(j));
  ph = ((ph % 4) + 4) % 4;
  r_[h] = ph >= 2;
  xs_[h] ^= xs_[i];
  zs_[h] ^= zs_[i];
}

Tableau::Outcome Tableau::measure(const PauliOperator& p, std::mt19937_64& rng, std::optional<int> forced) {
  if (p.size() != n_ || !p.hermitian()) throw DomainError("measure: expected a hermitian Pauli on the register");
  std::size_t s = 2 * n_;
  for (std::size_t i = n_; i < 2 * n_; ++i)
    if (anticommutes(i, p)) { s = i; break; }
  if (s < 2 * n_) {
    for (std::size_t i = 0; i < 2 * n_; ++i)
      if (i != s && anticommutes(i, p)) rowmul(i, s);
    xs_[s - n_] = xs_[s];
    zs_[s - n_] = zs_[s];
    r_[s - n_] = r_[s];
    const int v = forced ? (*forced & 1) : static_cast<int>(rng() & 1);
    xs_[s] = p.x;
    zs_[s] = p.z;
    r_[s] = static_cast<std::uint8_t>((p.phase() / 2) ^ v);
    return {v, true};
  }
  const int e = expectation(p);
  const int v = e == 1 ? 0 : 1;
  if (forced && (*forced & 1) != v) throw DomainError("forced outcome contradicts a deterministic measurement");
  return {v, false};
}

int Tableau::expectation(const PauliOperator& p) const {
  for (std::size_t i = n_; i < 2 * n_; ++i)
    if (anticommutes(i, p)) return 0;
  PauliOperator acc(n_);
  for (std::size_t i = 0; i < n_; ++i)
    if (anticommutes(i, p)) acc = acc * row(n_ + i);
  if (!acc.same_up_to_sign(p)) throw DomainError("tableau corrupted: stabiliser product mismatch");
  const int diff = ((acc.phase() - p.phase()) % 4 + 4) % 4;
  if (diff % 2) throw DomainError("tableau corrupted: imaginary phase");
  return diff == 0 ? 1 : -1;
}

void Tableau::project_plus(const PauliOperator& p, std::mt19937_64& rng) {
  const int e = expectation(p);
  if (e == 0) {
    measure(p, rng, 0);
  } else if (e == -1) {
    PauliOperator flip(n_);
    for (std::size_t q = 0; q < n_; ++q) {
      if (p.x.get(q)) { flip.z.set(q); break; }
      if (p.z.get(q)) { flip.x.set(q); break; }
    }
    apply_pauli(flip);
  }
}

bool Tableau::invariants_hold() const {
  BitMatrix m(2 * n_, 2 * n_);
  for (std::size_t i = 0; i < 2 * n_; ++i) m.row(i) = xs_[i].concat(zs_[i]);
  if (rank(m) != 2 * n_) return false;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const PauliOperator si = row(n_ + i), sj = row(n_ + j), di = row(i), dj = row(j);
      if (!si.commutes(sj) || !di.commutes(dj)) return false;
      if (di.commutes(sj) != (i != j)) return false;
    }
  return true;
}

}  // namespace qclc
