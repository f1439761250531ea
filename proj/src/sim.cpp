#include "qclc/sim.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qclc {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Value of the x/z bit (q, t) in c; 0 when the bit is not in V_B.
class BitLookup {
public:
  BitLookup(const TannerGraph& g, const BitVector& c) : c_(c) {
    for (std::size_t b = 0; b < g.num_bits(); ++b) {
      const auto& l = g.bits[b];
      if (l.kind == BitKind::X || l.kind == BitKind::Z) idx_[{l.kind == BitKind::Z, l.q, l.t}] = b;
    }
  }
  bool x(int q, int t) const { return get(false, q, t); }
  bool z(int q, int t) const { return get(true, q, t); }

private:
  bool get(bool z, int q, int t) const {
    auto it = idx_.find({z, q, t});
    return it != idx_.end() && c_.get(it->second);
  }
  const BitVector& c_;
  std::map<std::tuple<bool, int, int>, std::size_t> idx_;
};

void set_basis(PauliOperator& p, int q, OpKind k, bool v) {
  if (!v) return;
  if (k == OpKind::InitX || k == OpKind::MeasX) p.x.set(q - 1);
  else p.z.set(q - 1);
}

}  // namespace

std::vector<MeasurementRecord> run(const Circuit& c, Tableau& state, std::mt19937_64& rng, const RunOptions& opt) {
  if (state.size() != static_cast<std::size_t>(c.n)) throw DomainError("run: tableau size does not match circuit");
  const int T = c.depth();
  if (!opt.errors.empty() && opt.errors.size() != static_cast<std::size_t>(T + 1))
    throw DomainError("run: error list must have one entry per layer boundary");
  std::vector<MeasurementRecord> rec;
  std::size_t forced = 0;
  if (!opt.errors.empty()) state.apply_pauli(opt.errors[0]);
  for (int t = 1; t <= T; ++t) {
    for (const auto& op : c.layers[t - 1]) {
      if (!is_meas(op.kind)) {
        state.apply(op, rng);
        continue;
      }
      PauliOperator p(c.n);
      set_basis(p, op.q, op.kind, true);
      std::optional<int> f;
      if (forced < opt.forced.size()) f = opt.forced[forced++];
      const auto o = state.measure(p, rng, f);
      rec.push_back({op.q, t, op.kind, o.value, o.random});
    }
    if (!opt.errors.empty()) state.apply_pauli(opt.errors[t]);
  }
  return rec;
}

std::vector<PauliOperator> error_paulis(const TannerGraph& g, const BitVector& e) {
  if (e.size() != g.num_bits()) throw DomainError("error length does not match the graph");
  std::vector<PauliOperator> out(g.depth + 1, PauliOperator(g.n));
  for (auto b : e.support()) {
    const auto& l = g.bits[b];
    if (l.kind == BitKind::X || l.kind == BitKind::SplitX) out[l.t].z.flip(l.q - 1);
    else if (l.kind == BitKind::Z || l.kind == BitKind::SplitZ) out[l.t].x.flip(l.q - 1);
    else throw DomainError("error on a bit without a (qubit, layer) label");
  }
  return out;
}

int nu(const Circuit& circ, const TannerGraph& g, const BitVector& c) {
  if (c.size() != g.num_bits() || g.matrix().mul(c).any()) throw DomainError("nu: vector is not a codeword");
  const ExtendedCircuit ex = extend(circ);
  const BitLookup v(g, c);
  const int n = circ.n, T = circ.depth(), N = ex.circuit.n;

  PauliOperator in(N), want(N);
  std::vector<char> starts_dead(n + 1, 0), ends_dead(n + 1, 0);
  for (const auto& s : ex.single_inits) {
    starts_dead[s.qubit] = 1;
    set_basis(in, s.qubit, s.kind, s.kind == OpKind::InitX ? v.x(s.qubit, s.layer) : v.z(s.qubit, s.layer));
  }
  for (const auto& s : ex.single_meas) {
    ends_dead[s.qubit] = 1;
    const int t = s.layer - 1;
    set_basis(want, s.qubit, s.kind, s.kind == OpKind::MeasX ? v.x(s.qubit, t) : v.z(s.qubit, t));
  }
  for (int q = 1; q <= n; ++q) {
    if (!starts_dead[q]) {
      in.x.set(q - 1, v.x(q, 0));
      in.z.set(q - 1, v.z(q, 0));
    }
    if (!ends_dead[q]) {
      want.x.set(q - 1, v.x(q, T));
      want.z.set(q - 1, v.z(q, T));
    }
  }
  for (const auto& p : ex.pairs) {
    const int s = p.init.layer, t = p.meas.layer - 1;
    set_basis(in, p.ancilla, p.init.kind, p.init.kind == OpKind::InitX ? v.x(p.qubit, s) : v.z(p.qubit, s));
    set_basis(want, p.ancilla, p.meas.kind, p.meas.kind == OpKind::MeasX ? v.x(p.qubit, t) : v.z(p.qubit, t));
  }

  PauliOperator out = in;
  const int last = ex.circuit.depth();
  for (int t = 2; t < last; ++t)
    for (const auto& op : ex.circuit.layers[t - 1]) conjugate_gate(op, out);
  if (!out.same_up_to_sign(want))
    throw std::logic_error("nu: conjugated input " + out.str() + " differs from the codeword output " + want.str());
  return out.sign();
}

int mu_relevant(const TannerGraph& g, const BitVector& c, const std::vector<MeasurementRecord>& mu) {
  int s = 1;
  for (std::size_t b = 0; b < g.num_bits(); ++b) {
    const auto& l = g.bits[b];
    if (!l.meas || !c.get(b)) continue;
    bool found = false;
    for (const auto& m : mu)
      if (m.qubit == l.q && m.layer == l.t + 1) {
        if (m.value) s = -s;
        found = true;
        break;
      }
    if (!found) throw DomainError("no outcome recorded for measurement bit " + g.bit_name(static_cast<int>(b)));
  }
  return s;
}

std::string Counterexample::report() const {
  std::ostringstream o;
  o << "class: " << class_name(cls) << '\n'
    << "codeword: " << c.str() << '\n'
    << "error: " << e.str() << '\n'
    << "outcomes:";
  for (const auto& m : outcomes)
    o << ' ' << mnemonic(m.kind) << ' ' << m.qubit << '@' << m.layer << '=' << (m.value ? "-1" : "+1")
      << (m.random ? "*" : "");
  o << '\n'
    << "expected sign: " << (expected > 0 ? "+1" : "-1") << '\n'
    << "actual sign: " << (actual > 0 ? "+1" : actual < 0 ? "-1" : "0 (not stabilised)") << '\n'
    << "circuit:\n"
    << circuit;
  return o.str();
}

Verdict verify_codeword_equation(const Circuit& circ, const TannerGraph& g, const BitVector& c, const BitVector& e,
                                 std::uint64_t seed, int states) {
  Verdict v;
  v.cls = classify(g, c);
  v.nu = nu(circ, g, c);
  const PauliOperator s_in = sigma_in(g, c), s_out = sigma_out(g, c);
  const int flip = c.dot(e) ? -1 : 1;
  RunOptions opt;
  if (e.any()) opt.errors = error_paulis(g, e);
  std::mt19937_64 rng(seed);
  for (int k = 0; k < states; ++k) {
    Tableau st = Tableau::random_state(circ.n, rng);
    if (!s_in.is_identity()) st.project_plus(s_in, rng);
    const auto mu = run(circ, st, rng, opt);
    const int sign = flip * v.nu * mu_relevant(g, c, mu);
    int expected, actual;
    if (s_out.is_identity()) {
      expected = 1;
      actual = sign;
    } else {
      expected = sign;
      actual = st.expectation(s_out);
    }
    ++v.runs;
    if (expected != actual) {
      v.ok = false;
      Counterexample ce;
      ce.circuit = serialize(circ);
      ce.c = c;
      ce.e = e;
      ce.cls = v.cls;
      ce.outcomes = mu;
      ce.expected = expected;
      ce.actual = actual;
      v.failure = std::move(ce);
      return v;
    }
  }
  return v;
}

VerifySummary verify_circuit(const Circuit& c, std::uint64_t seed, int states, int random_errors,
                             int max_error_weight) {
  VerifySummary s;
  const TannerGraph g = build_plain(c);
  const BitMatrix k = kernel_basis(g.matrix());
  std::mt19937_64 rng(splitmix(seed));
  const BitVector zero(g.num_bits());
  for (std::size_t i = 0; i < k.rows(); ++i) {
    ++s.codewords;
    auto check = [&](const BitVector& e) {
      const Verdict v = verify_codeword_equation(c, g, k.row(i), e, splitmix(rng()), states);
      s.runs += v.runs;
      if (!v.ok) s.failures.push_back(*v.failure);
    };
    check(zero);
    for (int j = 0; j < random_errors && g.num_bits() > 0; ++j) {
      BitVector e(g.num_bits());
      const int w = 1 + static_cast<int>(rng() % max_error_weight);
      for (int m = 0; m < w; ++m) e.set(rng() % g.num_bits());
      check(e);
    }
  }
  return s;
}

}  // namespace qclc
