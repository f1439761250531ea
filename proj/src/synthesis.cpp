#include "qclc/synthesis.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "qclc/codewords.hpp"

namespace qclc {

namespace {

struct Ctx {
  const TannerGraph& g;
  const SymmetryWitness& w;
  std::vector<int> dual_check;   // per bit, -1 for long terminals
  std::vector<int> long_of;      // per check, -1 when none
  std::vector<char> is_long;
  std::vector<std::pair<int, int>> edges;   // (bit, check) of the symmetric subgraph

  Ctx(const TannerGraph& g_, const SymmetryWitness& w_) : g(g_), w(w_) {
    const auto rep = verify_symmetry(g, w);
    if (!rep.ok) throw DomainError("graph is not symmetric under the witness: " + rep.message);
    dual_check = dual_checks(g, w);
    long_of.assign(g.num_checks(), -1);
    is_long.assign(g.num_bits(), 0);
    const auto bc = g.bit_checks();
    for (int b : w.long_terminals) {
      is_long[b] = 1;
      long_of[bc[b][0]] = b;
    }
    for (std::size_t a = 0; a < g.num_checks(); ++a)
      for (int b : g.check_bits[a])
        if (!is_long[b]) edges.emplace_back(b, static_cast<int>(a));
    std::sort(edges.begin(), edges.end());
  }
  Node dual(Node n) const { return n.check ? Node{false, w.dual_bit[n.id]} : Node{true, dual_check[n.id]}; }
  std::size_t key(Node n) const { return n.check ? g.num_bits() + n.id : n.id; }
  std::size_t keys() const { return g.num_bits() + g.num_checks(); }
  bool adjacent(Node a, Node b) const {
    if (a.check == b.check) return false;
    if (a.check) std::swap(a, b);
    const auto& m = g.check_bits[b.id];
    return std::binary_search(m.begin(), m.end(), a.id);
  }
  std::string name(Node n) const { return n.check ? g.check_name(n.id) : g.bit_name(n.id); }
};

std::vector<Node> dual_seq(const Ctx& cx, const std::vector<Node>& s) {
  std::vector<Node> out;
  for (auto n : s) out.push_back(cx.dual(n));
  return out;
}

struct UnionFind {
  std::vector<std::size_t> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { p[find(a)] = find(b); }
};

// τ labels for qubit sequences (X paths; Z paths are their duals), increasing
// along each sequence; nullopt when conditions ii/iii cannot hold.
std::optional<std::vector<int>> assign_tau(const Ctx& cx, const std::vector<std::vector<Node>>& seqs) {
  const std::size_t K = cx.keys();
  std::set<std::pair<std::size_t, std::size_t>> path_edges;
  std::vector<char> is_end(K, 0);
  for (const auto& s : seqs)
    for (const auto& side : {s, dual_seq(cx, s)}) {
      is_end[cx.key(side.front())] = is_end[cx.key(side.back())] = 1;
      for (std::size_t i = 0; i + 1 < side.size(); ++i) {
        auto a = cx.key(side[i]), b = cx.key(side[i + 1]);
        path_edges.insert({std::min(a, b), std::max(a, b)});
      }
    }
  for (std::size_t a = 0; a < cx.g.num_checks(); ++a)
    if (cx.long_of[a] >= 0 && !is_end[cx.key({true, static_cast<int>(a)})]) return std::nullopt;
  UnionFind uf(K);
  for (std::size_t a = 0; a < cx.g.num_checks(); ++a) uf.join(cx.key({true, static_cast<int>(a)}), cx.key({false, cx.w.dual_bit[a]}));
  for (auto [b, a] : cx.edges) {
    const auto kb = cx.key({false, b}), ka = cx.key({true, a});
    if (!path_edges.count({std::min(kb, ka), std::max(kb, ka)})) uf.join(kb, ka);
  }
  std::map<std::size_t, std::set<std::size_t>> succ;
  std::map<std::size_t, int> indeg;
  for (std::size_t k = 0; k < K; ++k) indeg[uf.find(k)];
  for (const auto& s : seqs)
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      const auto a = uf.find(cx.key(s[i])), b = uf.find(cx.key(s[i + 1]));
      if (a == b) return std::nullopt;
      if (succ[a].insert(b).second) ++indeg[b];
    }
  std::map<std::size_t, int> level;
  std::vector<std::size_t> ready;
  for (auto& [c, d] : indeg)
    if (d == 0) {
      ready.push_back(c);
      level[c] = 1;
    }
  std::size_t done = 0;
  while (!ready.empty()) {
    const auto c = ready.back();
    ready.pop_back();
    ++done;
    for (auto nx : succ[c]) {
      level[nx] = std::max(level[nx], level[c] + 1);
      if (--indeg[nx] == 0) ready.push_back(nx);
    }
  }
  if (done != indeg.size()) return std::nullopt;
  std::vector<int> tau(K, 0);
  for (std::size_t k = 0; k < K; ++k) tau[k] = level[uf.find(k)];
  return tau;
}

PathPartition make_partition(const Ctx& cx, std::vector<std::vector<Node>> seqs, const std::vector<int>& tau) {
  std::sort(seqs.begin(), seqs.end(), [&](const auto& a, const auto& b) {
    auto lo = [&](const std::vector<Node>& s) {
      Node m = s[0];
      for (auto n : s) m = std::min({m, n, cx.dual(n)});
      return m;
    };
    return lo(a) < lo(b);
  });
  PathPartition p;
  p.tau_bit.assign(cx.g.num_bits(), 0);
  p.tau_check.assign(cx.g.num_checks(), 0);
  for (std::size_t q = 0; q < seqs.size(); ++q) {
    p.paths.push_back({static_cast<int>(q + 1), Role::X, seqs[q]});
    p.paths.push_back({static_cast<int>(q + 1), Role::Z, dual_seq(cx, seqs[q])});
  }
  for (std::size_t b = 0; b < cx.g.num_bits(); ++b)
    if (!cx.is_long[b]) p.tau_bit[b] = tau[cx.key({false, static_cast<int>(b)})];
  for (std::size_t a = 0; a < cx.g.num_checks(); ++a) p.tau_check[a] = tau[cx.key({true, static_cast<int>(a)})];
  return p;
}

int tau_of(const PathPartition& p, Node n) { return n.check ? p.tau_check[n.id] : p.tau_bit[n.id]; }

struct Placement {
  int qubit = 0;
  Role role = Role::X;
  int pos = 0;
};

// Per-qubit view of a validated partition, paths oriented by increasing τ.
struct QubitView {
  std::vector<Node> x, z;
  int tau_min = 0, tau_max = 0;
  Node c_min, c_max;           // the checks among the τ_min / τ_max ends
  Role bit_min_role = Role::X, bit_max_role = Role::X;
  bool open_in = false, open_out = false;
};

struct View {
  std::vector<QubitView> q;              // index qubit-1
  std::map<Node, Placement> where;
  int tau_top = 0;
};

View make_view(const Ctx& cx, const PathPartition& p) {
  View v;
  v.q.resize(p.qubits());
  for (const auto& path : p.paths) {
    auto& qv = v.q[path.qubit - 1];
    (path.role == Role::X ? qv.x : qv.z) = path.nodes;
  }
  for (std::size_t i = 0; i < v.q.size(); ++i) {
    auto& qv = v.q[i];
    if (qv.x.size() > 1 && tau_of(p, qv.x.front()) > tau_of(p, qv.x.back())) {
      std::reverse(qv.x.begin(), qv.x.end());
      std::reverse(qv.z.begin(), qv.z.end());
    }
    for (std::size_t k = 0; k < qv.x.size(); ++k) {
      v.where[qv.x[k]] = {static_cast<int>(i + 1), Role::X, static_cast<int>(k)};
      v.where[qv.z[k]] = {static_cast<int>(i + 1), Role::Z, static_cast<int>(k)};
    }
    qv.tau_min = tau_of(p, qv.x.front());
    qv.tau_max = tau_of(p, qv.x.back());
    v.tau_top = std::max(v.tau_top, qv.tau_max);
    qv.c_min = qv.x.front().check ? qv.x.front() : qv.z.front();
    qv.bit_min_role = qv.x.front().check ? Role::Z : Role::X;
    qv.c_max = qv.x.back().check ? qv.x.back() : qv.z.back();
    qv.bit_max_role = qv.x.back().check ? Role::Z : Role::X;
    const int lmin = cx.long_of[qv.c_min.id], lmax = cx.long_of[qv.c_max.id];
    if (qv.c_min == qv.c_max) {
      // one check is both ends: the long terminal is an output only when its
      // label says so, otherwise an input
      if (lmin >= 0) {
        const auto& l = cx.g.bits[lmin];
        const bool output = (l.kind == BitKind::X || l.kind == BitKind::Z) && cx.g.depth > 0 && l.t == cx.g.depth;
        (output ? qv.open_out : qv.open_in) = true;
      }
    } else {
      qv.open_in = lmin >= 0;
      qv.open_out = lmax >= 0;
    }
  }
  return v;
}

struct GateKey {
  ScheduledGate g;
  bool operator<(const GateKey& o) const {
    return std::tie(g.tau, g.kind, g.a, g.b) < std::tie(o.g.tau, o.g.kind, o.g.a, o.g.b);
  }
};

std::vector<ScheduledGate> gates_of(const Ctx& cx, const PathPartition& p, const View& v) {
  std::set<GateKey> out;
  std::set<std::pair<int, int>> path_edges;
  for (const auto& path : p.paths)
    for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i) {
      Node a = path.nodes[i], b = path.nodes[i + 1];
      if (a.check) std::swap(a, b);
      path_edges.insert({a.id, b.id});
    }
  for (auto [b, a] : cx.edges) {
    if (path_edges.count({b, a})) continue;
    const auto& pu = v.where.at({false, b});
    const auto& pa = v.where.at({true, a});
    ScheduledGate s;
    s.tau = tau_of(p, {false, b});
    const bool ux = pu.role == Role::X, ax = pa.role == Role::X;
    if (pu.qubit == pa.qubit) {
      s.kind = ux ? ScheduledGate::S : ScheduledGate::HSH;
      s.a = s.b = pu.qubit;
    } else if (ux && ax) {
      s = {ScheduledGate::CNOT, pu.qubit, pa.qubit, s.tau};
    } else if (!ux && !ax) {
      s = {ScheduledGate::CNOT, pa.qubit, pu.qubit, s.tau};
    } else {
      s = {ux ? ScheduledGate::CZ : ScheduledGate::XCX, std::min(pu.qubit, pa.qubit), std::max(pu.qubit, pa.qubit),
           s.tau};
    }
    out.insert({s});   // the dual edge yields the same gate
  }
  std::vector<ScheduledGate> r;
  for (const auto& k : out) r.push_back(k.g);
  return r;
}

std::size_t count_edge_classes(const Ctx& cx, const PathPartition& p) {
  std::set<std::pair<int, int>> path_edges, seen;
  for (const auto& path : p.paths)
    for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i) {
      Node a = path.nodes[i], b = path.nodes[i + 1];
      if (a.check) std::swap(a, b);
      path_edges.insert({a.id, b.id});
    }
  std::size_t n = 0;
  for (auto [b, a] : cx.edges) {
    if (path_edges.count({b, a}) || seen.count({b, a})) continue;
    ++n;
    seen.insert({b, a});
    seen.insert({cx.w.dual_bit[a], cx.dual_check[b]});
  }
  return n;
}

void add_layer(Circuit& c, std::vector<Operation> ops) {
  if (!ops.empty()) c.layers.push_back(std::move(ops));
}

Operation op1(OpKind k, int q) { return Operation{k, q, 0, 0}; }

}  // namespace

const char* gate_name(ScheduledGate::Kind k) {
  switch (k) {
    case ScheduledGate::S: return "S";
    case ScheduledGate::HSH: return "HSH";
    case ScheduledGate::CNOT: return "CNOT";
    case ScheduledGate::CZ: return "CZ";
    case ScheduledGate::XCX: return "XCX";
  }
  return "?";
}

PathPartition trivial_partition(const TannerGraph& g, const SymmetryWitness& w) {
  const Ctx cx(g, w);
  std::vector<std::vector<Node>> seqs;
  for (std::size_t a = 0; a < g.num_checks(); ++a) seqs.push_back({Node{false, w.dual_bit[a]}});
  std::vector<int> tau(cx.keys(), 1);
  for (int b : w.long_terminals) tau[b] = 0;
  return make_partition(cx, seqs, tau);
}

PathPartition greedy_partition(const TannerGraph& g, const SymmetryWitness& w) {
  const Ctx cx(g, w);
  std::vector<std::vector<Node>> seqs;
  for (std::size_t a = 0; a < g.num_checks(); ++a) seqs.push_back({Node{false, w.dual_bit[a]}});
  auto tau = assign_tau(cx, seqs);
  if (!tau) throw std::logic_error("greedy_partition: the trivial partition has no τ labelling");
  bool progress = true;
  while (progress) {
    progress = false;
    std::map<Node, std::pair<int, bool>> where;   // qubit, on the dual side
    for (std::size_t q = 0; q < seqs.size(); ++q)
      for (auto n : seqs[q]) {
        where[n] = {static_cast<int>(q), false};
        where[cx.dual(n)] = {static_cast<int>(q), true};
      }
    for (auto [b, a] : cx.edges) {
      const Node u{false, b}, c{true, a};
      const auto [qa, da] = where.at(u);
      const auto [qb, db] = where.at(c);
      if (qa == qb) continue;
      auto side = [&](int q, bool d) { return d ? dual_seq(cx, seqs[q]) : seqs[q]; };
      auto s1 = side(qa, da), s2 = side(qb, db);
      if (s1.back() == u) {
      } else if (s1.front() == u) {
        std::reverse(s1.begin(), s1.end());
      } else {
        continue;
      }
      if (s2.front() == c) {
      } else if (s2.back() == c) {
        std::reverse(s2.begin(), s2.end());
      } else {
        continue;
      }
      std::vector<Node> merged = s1;
      merged.insert(merged.end(), s2.begin(), s2.end());
      for (int flip = 0; flip < 2 && !progress; ++flip) {
        auto trial = seqs;
        trial[qa] = merged;
        if (flip) std::reverse(trial[qa].begin(), trial[qa].end());
        trial.erase(trial.begin() + qb);
        if (auto t = assign_tau(cx, trial)) {
          seqs = std::move(trial);
          tau = t;
          progress = true;
        }
      }
      if (progress) break;
    }
  }
  auto p = make_partition(cx, seqs, *tau);
  const auto rep = validate_partition(g, w, p);
  if (!rep.ok) throw std::logic_error("greedy_partition produced an invalid partition: " + rep.message);
  return p;
}

PartitionReport validate_partition(const TannerGraph& g, const SymmetryWitness& w, const PathPartition& p) {
  PartitionReport rep;
  auto fail = [&](int cond, std::string msg) {
    rep.ok = false;
    rep.condition = cond;
    rep.message = std::move(msg);
    return rep;
  };
  const Ctx cx(g, w);
  if (p.tau_bit.size() != g.num_bits() || p.tau_check.size() != g.num_checks())
    return fail(-1, "τ labels do not match the graph");
  const int Q = p.qubits();
  if (p.paths.size() % 2) return fail(-1, "odd number of paths");
  std::vector<int> xs(Q + 1, -1), zs(Q + 1, -1);
  for (std::size_t i = 0; i < p.paths.size(); ++i) {
    const auto& path = p.paths[i];
    if (path.qubit < 1 || path.qubit > Q) return fail(-1, "qubit " + std::to_string(path.qubit) + " out of range");
    auto& slot = path.role == Role::X ? xs[path.qubit] : zs[path.qubit];
    if (slot >= 0) return fail(-1, "qubit " + std::to_string(path.qubit) + " has two paths of one role");
    slot = static_cast<int>(i);
    if (path.nodes.empty()) return fail(-1, "empty path");
  }
  std::vector<int> count(cx.keys(), 0);
  for (const auto& path : p.paths) {
    for (std::size_t k = 0; k < path.nodes.size(); ++k) {
      const Node n = path.nodes[k];
      if (n.id < 0 || n.id >= static_cast<int>(n.check ? g.num_checks() : g.num_bits()))
        return fail(-1, "vertex out of range");
      if (!n.check && cx.is_long[n.id]) return fail(-1, "long terminal " + cx.name(n) + " on a path");
      ++count[cx.key(n)];
      if (tau_of(p, n) < 1) return fail(-1, "vertex " + cx.name(n) + " has no time label");
      if (k && !cx.adjacent(path.nodes[k - 1], n))
        return fail(-1, cx.name(path.nodes[k - 1]) + " and " + cx.name(n) + " are consecutive but not adjacent");
    }
  }
  for (std::size_t k = 0; k < cx.keys(); ++k) {
    const Node n = k < g.num_bits() ? Node{false, static_cast<int>(k)} : Node{true, static_cast<int>(k - g.num_bits())};
    if (!n.check && cx.is_long[n.id]) continue;
    if (count[k] != 1) return fail(-1, cx.name(n) + " lies on " + std::to_string(count[k]) + " paths");
  }
  // (i) dual paths
  for (int q = 1; q <= Q; ++q) {
    const auto& x = p.paths[xs[q]].nodes;
    auto dz = dual_seq(cx, p.paths[zs[q]].nodes);
    if (dz != x) {
      std::reverse(dz.begin(), dz.end());
      if (dz != x) return fail(1, "paths X_" + std::to_string(q) + " and Z_" + std::to_string(q) + " are not dual");
    }
  }
  // τ along paths and between duals
  for (const auto& path : p.paths) {
    const auto& s = path.nodes;
    if (s.size() < 2) continue;
    const bool up = tau_of(p, s[1]) > tau_of(p, s[0]);
    for (std::size_t k = 0; k + 1 < s.size(); ++k) {
      const int a = tau_of(p, s[k]), b = tau_of(p, s[k + 1]);
      if (up ? b <= a : b >= a) return fail(4, "τ is not strictly monotone at " + cx.name(s[k + 1]));
    }
  }
  for (std::size_t a = 0; a < g.num_checks(); ++a)
    if (p.tau_check[a] != p.tau_bit[w.dual_bit[a]])
      return fail(5, cx.name({true, static_cast<int>(a)}) + " and its dual have different τ");
  // (ii) long terminals at path ends
  for (const auto& path : p.paths)
    for (std::size_t k = 1; k + 1 < path.nodes.size(); ++k)
      if (path.nodes[k].check && cx.long_of[path.nodes[k].id] >= 0)
        return fail(2, "long terminal " + g.bit_name(cx.long_of[path.nodes[k].id]) + " meets the inside of a path");
  // (iii) inter-path edges join equal τ
  std::set<std::pair<int, int>> path_edges;
  for (const auto& path : p.paths)
    for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i) {
      Node a = path.nodes[i], b = path.nodes[i + 1];
      if (a.check) std::swap(a, b);
      path_edges.insert({a.id, b.id});
    }
  for (auto [b, a] : cx.edges)
    if (!path_edges.count({b, a}) && p.tau_bit[b] != p.tau_check[a])
      return fail(3, "inter-path edge " + g.bit_name(b) + "–" + g.check_name(a) + " joins τ=" +
                         std::to_string(p.tau_bit[b]) + " and τ=" + std::to_string(p.tau_check[a]));
  return rep;
}

SynthesisResult synthesize(const TannerGraph& g, const SymmetryWitness& w, const PathPartition& p) {
  const auto rep = validate_partition(g, w, p);
  if (!rep.ok) throw DomainError("synthesize: invalid partition (condition " + std::to_string(rep.condition) + "): " + rep.message);
  const Ctx cx(g, w);
  const View v = make_view(cx, p);
  SynthesisResult res;
  Circuit& c = res.circuit;
  Schedule& sch = res.schedule;
  c.n = p.qubits();
  sch.gates = gates_of(cx, p, v);
  for (int q = 1; q <= c.n; ++q) {
    if (v.q[q - 1].open_in) sch.open_inputs.push_back(q);
    if (v.q[q - 1].open_out) sch.open_outputs.push_back(q);
  }

  for (int tau = 1; tau <= v.tau_top; ++tau) {
    std::vector<Operation> inits;
    for (int q = 1; q <= c.n; ++q) {
      const auto& qv = v.q[q - 1];
      if (qv.tau_min == tau && !qv.open_in) {
        const OpKind k = qv.bit_min_role == Role::Z ? OpKind::InitZ : OpKind::InitX;
        inits.push_back(op1(k, q));
      }
    }
    if (!inits.empty()) {
      add_layer(c, inits);
      for (const auto& op : inits) sch.inits.push_back({op.q, c.depth(), op.kind});
    }

    const int start = c.depth() + 1;
    std::vector<ScheduledGate> two;
    std::vector<Operation> h1, s1;
    for (const auto& gt : sch.gates) {
      if (gt.tau != tau) continue;
      if (gt.kind == ScheduledGate::S || gt.kind == ScheduledGate::HSH) {
        if (gt.kind == ScheduledGate::HSH) h1.push_back(op1(OpKind::H, gt.a));
        s1.push_back(op1(OpKind::S, gt.a));
      } else {
        two.push_back(gt);
      }
    }
    add_layer(c, h1);
    add_layer(c, s1);
    add_layer(c, h1);
    // greedy rounds: each qubit at most once per round
    std::vector<std::vector<ScheduledGate>> rounds;
    for (const auto& gt : two) {
      bool placed = false;
      for (auto& r : rounds) {
        const bool clash = std::any_of(r.begin(), r.end(), [&](const ScheduledGate& o) {
          return o.a == gt.a || o.a == gt.b || o.b == gt.a || o.b == gt.b;
        });
        if (!clash) {
          r.push_back(gt);
          placed = true;
          break;
        }
      }
      if (!placed) rounds.push_back({gt});
    }
    for (const auto& r : rounds) {
      std::vector<Operation> hs, cx_ops;
      for (const auto& gt : r) {
        if (gt.kind == ScheduledGate::CZ) hs.push_back(op1(OpKind::H, gt.b));
        if (gt.kind == ScheduledGate::XCX) hs.push_back(op1(OpKind::H, gt.a));
        cx_ops.push_back(Operation{OpKind::CNOT, gt.a, gt.b, 0});
      }
      add_layer(c, hs);
      add_layer(c, cx_ops);
      add_layer(c, hs);
    }
    if (c.depth() < start) c.layers.emplace_back();   // an identity layer keeps the window
    sch.first_layer.push_back(start);
    sch.dt.push_back(c.depth() - start + 1);

    std::vector<Operation> ms;
    for (int q = 1; q <= c.n; ++q) {
      const auto& qv = v.q[q - 1];
      if (qv.tau_max == tau && !qv.open_out) ms.push_back(op1(qv.bit_max_role == Role::Z ? OpKind::MeasZ : OpKind::MeasX, q));
    }
    if (!ms.empty()) {
      add_layer(c, ms);
      for (const auto& op : ms) sch.meas.push_back({op.q, c.depth(), op.kind});
    }
  }
  require_valid(c);
  res.symmetric = symmetrize(c);
  const TannerGraph& h = res.symmetric.graph;

  // ψ_err sends each old bit to one bit of its microscopic path; ψ is the
  // unique codeword of the circuit graph that agrees with c there
  const std::size_t nb = g.num_bits(), NB = h.num_bits();
  BitMatrix sel(nb, NB);
  auto pick = [&](int old, BitKind kind, int q, int t) {
    const int b = h.find_bit(kind, q, t);
    if (b < 0)
      throw std::logic_error("synthesize: circuit graph has no bit " + std::string(kind == BitKind::X ? "x" : "z") + "[" +
                             std::to_string(q) + "," + std::to_string(t) + "] for " + g.bit_name(old));
    sel.set(old, b);
  };
  for (std::size_t a = 0; a < g.num_checks(); ++a) {
    const int bit = w.dual_bit[a];
    const auto& pl = v.where.at({false, bit});
    const int tau = p.tau_bit[bit];
    const int last = sch.first_layer[tau - 1] + sch.dt[tau - 1] - 1;
    pick(bit, pl.role == Role::X ? BitKind::X : BitKind::Z, pl.qubit, last);
    const int lt = cx.long_of[a];
    if (lt < 0) continue;
    const auto& pc = v.where.at({true, static_cast<int>(a)});
    const auto& qv = v.q[pc.qubit - 1];
    const BitKind kind = pc.role == Role::X ? BitKind::X : BitKind::Z;
    const bool at_input = qv.open_in && qv.c_min == Node{true, static_cast<int>(a)};
    pick(lt, kind, pc.qubit, at_input ? 0 : c.depth());
  }
  const BitMatrix kc = kernel_basis(h.matrix());
  const BitMatrix m = sel * kc.transpose();   // old × dim ker A′
  const std::size_t k_old = kernel_basis(g.matrix()).rows();
  if (kc.rows() != k_old || rank(m) != kc.rows() || (g.matrix() * m).nnz())
    throw std::logic_error("synthesize: the circuit's code is not isomorphic to the graph's (dim " +
                           std::to_string(k_old) + " vs " + std::to_string(kc.rows()) + ")");
  res.maps.phi = kc.rows() ? kc.transpose() * left_inverse(m) : BitMatrix(NB, nb);
  res.maps.phi_err = sel.transpose();
  res.psi_inv = sel;
  return res;
}

std::pair<PauliOperator, PauliOperator> expected_boundary(const TannerGraph& g, const SymmetryWitness& w,
                                                          const PathPartition& p, const BitVector& c) {
  const Ctx cx(g, w);
  const View v = make_view(cx, p);
  const std::size_t n = v.q.size();
  BitVector in(2 * n), out(2 * n);
  auto value = [&](Node x) { return x.check ? c.get(cx.long_of[x.id]) : c.get(x.id); };
  for (std::size_t i = 0; i < n; ++i) {
    const auto& qv = v.q[i];
    if (qv.open_in) {
      in.set(i, value(qv.x.front()));
      in.set(n + i, value(qv.z.front()));
    }
    if (qv.open_out) {
      out.set(i, value(qv.x.back()));
      out.set(n + i, value(qv.z.back()));
    }
  }
  return {PauliOperator::sigma(in), PauliOperator::sigma(out)};
}

std::string RoundtripReport::str() const {
  std::ostringstream o;
  o << (ok ? "ok" : "FAILED") << ": " << gates << " gates for " << edge_classes << " edge classes; " << bound.str();
  for (const auto& f : failures) o << "\n  " << f;
  return o.str();
}

RoundtripReport roundtrip_check(const TannerGraph& g, const SymmetryWitness& w, const PathPartition& p,
                                std::size_t max_weight, const BitMatrix& B_in, const BitMatrix& L_in, unsigned jobs) {
  RoundtripReport rep;
  auto fail = [&](std::string s) {
    rep.ok = false;
    rep.failures.push_back(std::move(s));
  };
  SynthesisResult s;
  try {
    s = synthesize(g, w, p);
  } catch (const std::logic_error& e) {
    fail(e.what());
    return rep;
  }
  const TannerGraph& h = s.symmetric.graph;
  if (!validate(s.circuit).empty()) fail("synthesised circuit is invalid");
  const auto sym = verify_symmetry(h, s.symmetric.witness);
  if (!sym.ok) fail("circuit graph is not symmetric: " + sym.message);
  rep.gates = s.schedule.gates.size();
  rep.edge_classes = count_edge_classes(Ctx(g, w), p);
  if (rep.gates != rep.edge_classes) fail("gate count differs from the number of inter-path edge classes");

  const BitMatrix k = kernel_basis(g.matrix());
  const BitMatrix ah = h.matrix();
  for (const auto& c : k.row_list()) {
    const BitVector c2 = map_codeword(s.maps, c);
    if (ah.mul(c2).any()) {
      fail("ψ(c) is not a codeword");
      continue;
    }
    if (s.psi_inv.mul(c2) != c) fail("ψ⁻¹ψ(c) ≠ c");
    const auto [ein, eout] = expected_boundary(g, w, p, c);
    if (!(sigma_in(h, c2) == ein) || !(sigma_out(h, c2) == eout))
      fail("boundary Paulis of " + c.str() + ": " + sigma_in(h, c2).str() + " → " + sigma_out(h, c2).str() +
           ", expected " + ein.str() + " → " + eout.str());
  }
  BitMatrix B = B_in, L = L_in;
  if (!B.rows() && !L.rows()) std::tie(B, L) = io_code_matrices(g, w);
  rep.bound = check_distance_bound(g, h, B, L, s.maps, max_weight, jobs);
  if (!rep.bound.ok()) fail("distance bound: " + rep.bound.str());
  return rep;
}

PathPartition read_partition(std::istream& in, const TannerGraph& g, const SymmetryWitness& w) {
  const Ctx cx(g, w);
  PathPartition p;
  p.tau_bit.assign(g.num_bits(), 0);
  p.tau_check.assign(g.num_checks(), 0);
  std::string line;
  int no = 0, max_q = 0;
  auto bad = [&](const std::string& why) { return DomainError("partition line " + std::to_string(no) + ": " + why); };
  auto node = [&](const std::string& name) {
    if (int c = g.find_check(name); c >= 0) return Node{true, c};
    if (int b = g.find_bit(name); b >= 0) return Node{false, b};
    throw bad("unknown vertex '" + name + "'");
  };
  std::vector<Path> paths;
  while (std::getline(in, line)) {
    ++no;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "path") {
      Path path;
      std::string role, colon;
      if (!(ls >> path.qubit >> role >> colon) || colon != ":" || (role != "X" && role != "Z"))
        throw bad("expected 'path <q> <X|Z> : <vertices>'");
      if (path.qubit < 1) throw bad("qubit numbers start at 1");
      path.role = role == "X" ? Role::X : Role::Z;
      std::string name;
      while (ls >> name) path.nodes.push_back(node(name));
      if (path.nodes.empty()) throw bad("empty path");
      max_q = std::max(max_q, path.qubit);
      paths.push_back(std::move(path));
    } else if (kw == "tau") {
      std::string name, extra;
      int t = 0;
      if (!(ls >> name >> t) || (ls >> extra)) throw bad("expected 'tau <vertex> <value>'");
      const Node n = node(name);
      (n.check ? p.tau_check[n.id] : p.tau_bit[n.id]) = t;
    } else {
      throw bad("unknown keyword '" + kw + "'");
    }
  }
  if (static_cast<int>(paths.size()) != 2 * max_q) throw DomainError("partition: every qubit needs an X and a Z path");
  std::stable_sort(paths.begin(), paths.end(), [](const Path& a, const Path& b) {
    return std::make_pair(a.qubit, a.role == Role::Z) < std::make_pair(b.qubit, b.role == Role::Z);
  });
  p.paths = std::move(paths);
  return p;
}

void write_partition(std::ostream& out, const TannerGraph& g, const PathPartition& p) {
  auto name = [&](Node n) { return n.check ? g.check_name(n.id) : g.bit_name(n.id); };
  for (const auto& path : p.paths) {
    out << "path " << path.qubit << ' ' << (path.role == Role::X ? 'X' : 'Z') << " :";
    for (auto n : path.nodes) out << ' ' << name(n);
    out << '\n';
  }
  for (const auto& path : p.paths)
    for (auto n : path.nodes) out << "tau " << name(n) << ' ' << tau_of(p, n) << '\n';
}

}  // namespace qclc
