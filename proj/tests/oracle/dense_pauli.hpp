#pragma once

// Dense complex-matrix reference for Pauli conjugation on a few qubits.
// Qubit 1 is the most significant tensor factor.

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qclc/circuit.hpp"
#include "qclc/pauli.hpp"

namespace oracle {

using cx = std::complex<double>;

struct Mat {
  std::size_t d = 0;
  std::vector<cx> a;
  explicit Mat(std::size_t dim = 0) : d(dim), a(dim * dim) {}
  cx& operator()(std::size_t r, std::size_t c) { return a[r * d + c]; }
  cx operator()(std::size_t r, std::size_t c) const { return a[r * d + c]; }
  static Mat eye(std::size_t dim) {
    Mat m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
  }
};

inline Mat mul(const Mat& x, const Mat& y) {
  Mat r(x.d);
  for (std::size_t i = 0; i < x.d; ++i)
    for (std::size_t k = 0; k < x.d; ++k)
      if (x(i, k) != cx(0))
        for (std::size_t j = 0; j < x.d; ++j) r(i, j) += x(i, k) * y(k, j);
  return r;
}

inline Mat dagger(const Mat& x) {
  Mat r(x.d);
  for (std::size_t i = 0; i < x.d; ++i)
    for (std::size_t j = 0; j < x.d; ++j) r(i, j) = std::conj(x(j, i));
  return r;
}

inline Mat kron(const Mat& x, const Mat& y) {
  Mat r(x.d * y.d);
  for (std::size_t i = 0; i < x.d; ++i)
    for (std::size_t j = 0; j < x.d; ++j)
      for (std::size_t k = 0; k < y.d; ++k)
        for (std::size_t l = 0; l < y.d; ++l) r(i * y.d + k, j * y.d + l) = x(i, j) * y(k, l);
  return r;
}

inline Mat single(int which) {   // 0 I, 1 X, 2 Z, 3 H, 4 S
  Mat m(2);
  const double s = 1.0 / std::sqrt(2.0);
  switch (which) {
    case 0: m(0, 0) = 1; m(1, 1) = 1; break;
    case 1: m(0, 1) = 1; m(1, 0) = 1; break;
    case 2: m(0, 0) = 1; m(1, 1) = -1; break;
    case 3: m(0, 0) = s; m(0, 1) = s; m(1, 0) = s; m(1, 1) = -s; break;
    case 4: m(0, 0) = 1; m(1, 1) = cx(0, 1); break;
  }
  return m;
}

inline Mat on_qubit(const Mat& g, int q, int n) {
  Mat r = Mat::eye(1);
  for (int k = 1; k <= n; ++k) r = kron(r, k == q ? g : single(0));
  return r;
}

inline Mat cnot(int c, int t, int n) {
  const std::size_t d = std::size_t{1} << n;
  Mat m(d);
  for (std::size_t b = 0; b < d; ++b) {
    const bool cb = (b >> (n - c)) & 1;
    const std::size_t out = cb ? b ^ (std::size_t{1} << (n - t)) : b;
    m(out, b) = 1;
  }
  return m;
}

// i^phase · i^{x·z} X^x Z^z
inline Mat pauli(const qclc::PauliOperator& p) {
  const int n = static_cast<int>(p.size());
  Mat m = Mat::eye(std::size_t{1} << n);
  int ph = p.phase();
  for (int q = 1; q <= n; ++q) {
    const bool x = p.x.get(q - 1), z = p.z.get(q - 1);
    if (x) m = mul(m, on_qubit(single(1), q, n));
    if (z) m = mul(m, on_qubit(single(2), q, n));
    if (x && z) ph += 1;
  }
  const cx f[] = {1, cx(0, 1), -1, cx(0, -1)};
  for (auto& v : m.a) v *= f[ph % 4];
  return m;
}

inline Mat unitary(const qclc::Circuit& c) {
  Mat u = Mat::eye(std::size_t{1} << c.n);
  for (const auto& layer : c.layers)
    for (const auto& op : layer) {
      Mat g;
      switch (op.kind) {
        case qclc::OpKind::H: g = on_qubit(single(3), op.q, c.n); break;
        case qclc::OpKind::S: g = on_qubit(single(4), op.q, c.n); break;
        case qclc::OpKind::PauliX: g = on_qubit(single(1), op.q, c.n); break;
        case qclc::OpKind::PauliZ: g = on_qubit(single(2), op.q, c.n); break;
        case qclc::OpKind::PauliY:
          g = mul(on_qubit(single(1), op.q, c.n), on_qubit(single(2), op.q, c.n));
          for (auto& v : g.a) v *= cx(0, 1);
          break;
        case qclc::OpKind::I: continue;
        case qclc::OpKind::CNOT: g = cnot(op.q, op.target, c.n); break;
        default: throw std::invalid_argument("oracle: gates only");
      }
      u = mul(g, u);
    }
  return u;
}

// Sign s with U P U† = s · σ(x′, z′) where (x′, z′) comes from `expected`.
// Returns 0 when U P U† is not ± the expected Pauli.
inline int conjugation_sign(const qclc::Circuit& c, const qclc::PauliOperator& p,
                            const qclc::PauliOperator& expected_bits) {
  const Mat u = unitary(c);
  const Mat lhs = mul(mul(u, pauli(p)), dagger(u));
  qclc::PauliOperator e = expected_bits;
  e.set_phase(0);
  const Mat rhs = pauli(e);
  int sign = 0;
  for (int s : {1, -1}) {
    bool eq = true;
    for (std::size_t i = 0; i < lhs.a.size() && eq; ++i) eq = std::abs(lhs.a[i] - double(s) * rhs.a[i]) < 1e-9;
    if (eq) sign = s;
  }
  return sign;
}

}  // namespace oracle
