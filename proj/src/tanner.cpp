#include "qclc/tanner.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "gadgets.hpp"

namespace qclc {

using detail::GadgetKind;
using detail::gadget_template;
using detail::short_is_z;

// ---------------------------------------------------------------- graph ---

int TannerGraph::add_bit(const BitLabel& b) {
  bits.push_back(b);
  return static_cast<int>(bits.size()) - 1;
}

int TannerGraph::add_check(const CheckLabel& c, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  checks.push_back(c);
  check_bits.push_back(std::move(members));
  return static_cast<int>(checks.size()) - 1;
}

BitMatrix TannerGraph::matrix() const {
  BitMatrix a(checks.size(), bits.size());
  for (std::size_t r = 0; r < check_bits.size(); ++r)
    for (int b : check_bits[r]) a.set(r, b);
  return a;
}

std::vector<std::vector<int>> TannerGraph::bit_checks() const {
  std::vector<std::vector<int>> out(bits.size());
  for (std::size_t r = 0; r < check_bits.size(); ++r)
    for (int b : check_bits[r]) out[b].push_back(static_cast<int>(r));
  return out;
}

std::size_t TannerGraph::max_degree() const {
  std::size_t d = 0;
  for (const auto& c : check_bits) d = std::max(d, c.size());
  for (const auto& b : bit_checks()) d = std::max(d, b.size());
  return d;
}

int TannerGraph::find_bit(BitKind kind, int q, int t) const {
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i].kind == kind && bits[i].q == q && bits[i].t == t) return static_cast<int>(i);
  return -1;
}

std::string TannerGraph::bit_name(int b) const {
  const BitLabel& l = bits[b];
  switch (l.kind) {
    case BitKind::X: return "x[" + std::to_string(l.q) + "," + std::to_string(l.t) + "]";
    case BitKind::Z: return "z[" + std::to_string(l.q) + "," + std::to_string(l.t) + "]";
    case BitKind::SplitX:
    case BitKind::SplitZ: {
      int k = 0;
      for (int i = 0; i <= b; ++i)
        k += bits[i].kind == BitKind::SplitX || bits[i].kind == BitKind::SplitZ;
      return "s" + std::to_string(k);
    }
    case BitKind::Generic: {
      int k = 0;
      for (int i = 0; i <= b; ++i) k += bits[i].kind == BitKind::Generic;
      return "b" + std::to_string(k);
    }
  }
  return "?";
}

std::string TannerGraph::check_name(int c) const { return "c" + std::to_string(c + 1); }

int TannerGraph::find_bit(const std::string& name) const {
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bit_name(static_cast<int>(i)) == name) return static_cast<int>(i);
  return -1;
}

int TannerGraph::find_check(const std::string& name) const {
  if (name.size() < 2 || name[0] != 'c') return -1;
  try {
    std::size_t pos = 0;
    const int k = std::stoi(name.substr(1), &pos);
    if (pos + 1 != name.size() || k < 1 || k > static_cast<int>(checks.size())) return -1;
    return k - 1;
  } catch (...) {
    return -1;
  }
}

TannerGraph TannerGraph::from_matrix(const BitMatrix& a) {
  TannerGraph g;
  for (std::size_t j = 0; j < a.cols(); ++j) g.add_bit({});
  for (std::size_t r = 0; r < a.rows(); ++r) g.add_check({}, [&] {
    std::vector<int> m;
    for (auto j : a.row(r).support()) m.push_back(static_cast<int>(j));
    return m;
  }());
  return g;
}

// ------------------------------------------------------------- assembly ---

namespace {

struct Gadget {
  GadgetKind kind;
  int q[2] = {0, 0};
  int layer = 0;
  int first_row = 0;   // global check index of template row 0
};

struct Split {
  int short_fid, long_fid;
  int g1, g2;
  std::vector<int> n1, n2;   // global check indices
};

// The circuit laid out on all 2n(T+1) bits before isolated-bit removal.
struct Assembly {
  int n = 0, T = 0;
  std::vector<Gadget> gadgets;
  std::vector<std::vector<int>> at;          // at[q][t]: gadget index or -1
  std::vector<std::vector<int>> rows;        // global checks over full bit ids
  std::vector<int> row_layer;

  int fid(int q, int t, bool z) const { return t * 2 * n + (z ? n : 0) + (q - 1); }
  int term_fid(const Gadget& g, const detail::TermRef& r) const {
    return fid(g.q[r.lq], r.out ? g.layer : g.layer - 1, r.z);
  }
  int local(const Gadget& g, int q) const { return g.q[0] == q ? 0 : 1; }
};

GadgetKind kind_of(OpKind k) {
  switch (k) {
    case OpKind::CNOT: return GadgetKind::CNOT;
    case OpKind::H: return GadgetKind::H;
    case OpKind::S: return GadgetKind::S;
    case OpKind::InitZ: return GadgetKind::InitZ;
    case OpKind::InitX: return GadgetKind::InitX;
    case OpKind::MeasZ: return GadgetKind::MeasZ;
    case OpKind::MeasX: return GadgetKind::MeasX;
    default: return GadgetKind::Ix;
  }
}

bool is_identity_op(const Operation* op) {
  return !op || op->kind == OpKind::I || is_pauli(op->kind);
}

Assembly assemble(const Circuit& c) {
  require_valid(c);
  Assembly as;
  as.n = c.n;
  as.T = c.depth();
  const int n = c.n, T = c.depth();
  const auto act = active_layers(c);

  // Orientation of identity gadgets: transparent with respect to merging.
  std::vector<std::vector<int>> ident(n + 1, std::vector<int>(T + 2, -1));  // 0 = Ix, 1 = Iz
  auto in_short = [&](int q, int t) {
    const Operation* op = c.op_at(t, q);
    const GadgetKind k = kind_of(op->kind);
    const int lq = (k == GadgetKind::CNOT && op->target == q) ? 1 : 0;
    return short_is_z(k, lq, false);
  };
  auto out_short = [&](int q, int t) {
    const Operation* op = c.op_at(t, q);
    const GadgetKind k = kind_of(op->kind);
    const int lq = (k == GadgetKind::CNOT && op->target == q) ? 1 : 0;
    return short_is_z(k, lq, true);
  };
  for (int q = 1; q <= n; ++q) {
    int prev = -1;   // out short kind of the previous gadget, -1 none
    for (int t = 1; t <= T; ++t) {
      const Operation* op = c.op_at(t, q);
      if (!act[q][t]) { prev = -1; continue; }
      if (!is_identity_op(op)) {
        prev = is_meas(op->kind) ? -1 : out_short(q, t);
        continue;
      }
      int in;
      if (prev >= 0) {
        in = !prev;
      } else {
        in = 0;
        for (int u = t + 1; u <= T && act[q][u]; ++u)
          if (!is_identity_op(c.op_at(u, q))) { in = in_short(q, u); break; }
      }
      ident[q][t] = in;
      prev = !in;
    }
  }

  as.at.assign(n + 1, std::vector<int>(T + 2, -1));
  for (int t = 1; t <= T; ++t) {
    for (int q = 1; q <= n; ++q) {
      if (as.at[q][t] >= 0) continue;
      const Operation* op = c.op_at(t, q);
      Gadget g;
      g.layer = t;
      g.q[0] = q;
      if (is_identity_op(op)) {
        if (!act[q][t]) continue;
        g.kind = ident[q][t] ? GadgetKind::Iz : GadgetKind::Ix;
      } else {
        g.kind = kind_of(op->kind);
        if (g.kind == GadgetKind::CNOT) {
          g.q[0] = op->q;
          g.q[1] = op->target;
        }
      }
      g.first_row = static_cast<int>(as.rows.size());
      for (const auto& row : gadget_template(g.kind).rows) {
        std::vector<int> m;
        for (const auto& r : row) m.push_back(as.term_fid(g, r));
        as.rows.push_back(m);
        as.row_layer.push_back(t);
      }
      const int idx = static_cast<int>(as.gadgets.size());
      as.gadgets.push_back(g);
      as.at[g.q[0]][t] = idx;
      if (g.kind == GadgetKind::CNOT) as.at[g.q[1]][t] = idx;
    }
  }
  return as;
}

struct Plain {
  TannerGraph g;
  std::vector<int> index;   // full bit id -> graph column, -1 when removed
};

Plain plain_graph(const Assembly& as) {
  const int n = as.n, T = as.T;
  const int total = 2 * n * (T + 1);
  std::vector<char> used(total, 0);
  for (const auto& r : as.rows)
    for (int f : r) used[f] = 1;

  std::vector<BitLabel> labels(total);
  for (int t = 0; t <= T; ++t)
    for (int q = 1; q <= n; ++q) {
      labels[as.fid(q, t, false)] = {BitKind::X, q, t, false, false};
      labels[as.fid(q, t, true)] = {BitKind::Z, q, t, false, false};
    }
  for (const auto& g : as.gadgets) {
    switch (g.kind) {
      case GadgetKind::MeasZ: labels[as.fid(g.q[0], g.layer - 1, true)].meas = true; break;
      case GadgetKind::MeasX: labels[as.fid(g.q[0], g.layer - 1, false)].meas = true; break;
      case GadgetKind::InitZ: labels[as.fid(g.q[0], g.layer, true)].init = true; break;
      case GadgetKind::InitX: labels[as.fid(g.q[0], g.layer, false)].init = true; break;
      default: break;
    }
  }

  Plain p;
  p.g.n = n;
  p.g.depth = T;
  p.index.assign(total, -1);
  for (int f = 0; f < total; ++f) {
    if (used[f]) p.index[f] = p.g.add_bit(labels[f]);
    else p.g.removed.push_back(labels[f]);
  }
  for (std::size_t r = 0; r < as.rows.size(); ++r) {
    std::vector<int> m;
    for (int f : as.rows[r]) m.push_back(p.index[f]);
    p.g.add_check({as.row_layer[r], false}, m);
  }
  return p;
}

}  // namespace

TannerGraph build_plain(const Circuit& c) { return plain_graph(assemble(c)).g; }

// ------------------------------------------------------------- witness ---

SymmetryWitness witness_from_duals(const TannerGraph& g, const std::vector<int>& dual_bit) {
  if (dual_bit.size() != g.num_checks())
    throw DomainError("dual pairing must list one bit per check");
  SymmetryWitness w;
  w.dual_bit = dual_bit;
  w.D = BitMatrix(g.num_bits(), g.num_checks());
  std::vector<char> taken(g.num_bits(), 0);
  for (std::size_t a = 0; a < dual_bit.size(); ++a) {
    const int b = dual_bit[a];
    if (b < 0 || b >= static_cast<int>(g.num_bits()))
      throw DomainError("dual of " + g.check_name(static_cast<int>(a)) + " is not a bit");
    if (taken[b]) throw DomainError("bit " + g.bit_name(b) + " is dual to two checks");
    taken[b] = 1;
    w.D.set(b, a);
  }
  for (std::size_t b = 0; b < g.num_bits(); ++b)
    if (!taken[b]) w.long_terminals.push_back(static_cast<int>(b));
  return w;
}

SymmetryWitness witness_from_D(const TannerGraph& g, const BitMatrix& d) {
  if (d.rows() != g.num_bits() || d.cols() != g.num_checks())
    throw DomainError("deleting matrix must be |V_B| x |V_C|");
  std::vector<int> dual(g.num_checks(), -1);
  for (std::size_t a = 0; a < d.cols(); ++a) {
    const BitVector col = d.column(a);
    if (col.weight() != 1) throw DomainError("deleting matrix column " + std::to_string(a + 1) + " must have exactly one 1");
    dual[a] = static_cast<int>(col.support()[0]);
  }
  return witness_from_duals(g, dual);
}

std::vector<int> dual_checks(const TannerGraph& g, const SymmetryWitness& w) {
  std::vector<int> out(g.num_bits(), -1);
  for (std::size_t a = 0; a < w.dual_bit.size(); ++a) out[w.dual_bit[a]] = static_cast<int>(a);
  return out;
}

SymmetryReport verify_symmetry(const TannerGraph& g, const SymmetryWitness& w) {
  SymmetryReport rep;
  auto fail = [&](int cond, std::string msg, std::vector<std::string> vs) {
    rep.ok = false;
    rep.condition = cond;
    rep.message = std::move(msg);
    rep.vertices = std::move(vs);
    return rep;
  };
  if (w.D.rows() != g.num_bits() || w.D.cols() != g.num_checks() || w.dual_bit.size() != g.num_checks())
    return fail(-1, "witness dimensions do not match the graph", {});
  std::vector<char> taken(g.num_bits(), 0);
  for (std::size_t a = 0; a < g.num_checks(); ++a) {
    const BitVector col = w.D.column(a);
    const int b = w.dual_bit[a];
    if (col.weight() != 1 || b < 0 || !col.get(b))
      return fail(-1, "deleting matrix column is not the unit vector of the dual bit", {g.check_name(static_cast<int>(a))});
    if (taken[b]) return fail(-1, "bit paired with two checks", {g.bit_name(b)});
    taken[b] = 1;
  }
  for (int b : w.long_terminals)
    if (b < 0 || b >= static_cast<int>(g.num_bits()) || taken[b])
      return fail(-1, "long terminal has a dual check", {b >= 0 && b < static_cast<int>(g.num_bits()) ? g.bit_name(b) : "?"});
  if (w.long_terminals.size() + g.num_checks() != g.num_bits())
    return fail(-1, "every non-long-terminal bit needs a dual check", {});

  // (i) A·D symmetric
  const BitMatrix ad = g.matrix() * w.D;
  for (std::size_t a = 0; a < ad.rows(); ++a)
    for (std::size_t b = a + 1; b < ad.cols(); ++b)
      if (ad.get(a, b) != ad.get(b, a))
        return fail(1, "A·D is not symmetric", {g.check_name(static_cast<int>(a)), g.check_name(static_cast<int>(b))});
  // (ii) degree-one long terminals, (iii) on distinct checks
  const auto bc = g.bit_checks();
  std::map<int, int> owner;
  for (int b : w.long_terminals) {
    if (bc[b].size() != 1)
      return fail(2, "long terminal does not have degree one", {g.bit_name(b)});
    auto [it, fresh] = owner.emplace(bc[b][0], b);
    if (!fresh)
      return fail(3, "two long terminals share a check",
                  {g.bit_name(it->second), g.bit_name(b), g.check_name(bc[b][0])});
  }
  return rep;
}

// ------------------------------------------------------------ splitting ---

SplitResult bit_split(const TannerGraph& g, int v, const std::vector<int>& n1, const std::vector<int>& n2) {
  if (v < 0 || v >= static_cast<int>(g.num_bits())) throw DomainError("bit_split: no such bit");
  const auto bc = g.bit_checks();
  std::set<int> nb(bc[v].begin(), bc[v].end());
  std::set<int> s1(n1.begin(), n1.end()), s2(n2.begin(), n2.end());
  for (int a : s1)
    if (s2.count(a)) throw DomainError("bit_split: partition subsets overlap at " + g.check_name(a));
  std::set<int> all = s1;
  all.insert(s2.begin(), s2.end());
  if (all != nb) throw DomainError("bit_split: partition does not equal the neighbourhood of " + g.bit_name(v));

  SplitResult r;
  r.graph = g;
  BitLabel l = g.bits[v];
  l.kind = l.kind == BitKind::X ? BitKind::SplitX : l.kind == BitKind::Z ? BitKind::SplitZ : l.kind;
  l.meas = l.init = false;
  const int u = r.graph.add_bit(l);
  for (int a : s2) {
    auto& m = r.graph.check_bits[a];
    std::replace(m.begin(), m.end(), v, u);
    std::sort(m.begin(), m.end());
  }
  r.graph.add_check({g.bits[v].t, true}, {v, u});

  const std::size_t old = g.num_bits();
  r.maps.phi = BitMatrix(old + 1, old);
  r.maps.phi_err = BitMatrix(old + 1, old);
  for (std::size_t i = 0; i < old; ++i) {
    r.maps.phi.set(i, i);
    r.maps.phi_err.set(i, i);
  }
  r.maps.phi.set(old, v);
  return r;
}

SymmetrizeResult symmetrize(const Circuit& c) {
  const Assembly as = assemble(c);
  const Plain p = plain_graph(as);
  const int n = as.n, T = as.T;

  // locate asymmetric merges
  std::vector<Split> splits;
  std::map<int, std::size_t> split_of;   // short full id -> split
  for (int t = 0; t <= T; ++t)
    for (int q = 1; q <= n; ++q) {
      const int g1 = t >= 1 ? as.at[q][t] : -1;
      const int g2 = t + 1 <= T ? as.at[q][t + 1] : -1;
      if (g1 < 0 || g2 < 0) continue;
      const Gadget& a = as.gadgets[g1];
      const Gadget& b = as.gadgets[g2];
      bool has1 = false, has2 = false;
      const bool s1 = short_is_z(a.kind, as.local(a, q), true, &has1);
      const bool s2 = short_is_z(b.kind, as.local(b, q), false, &has2);
      if (!has1 || !has2 || s1 != s2) continue;   // measurement→initialisation is no merge
      Split s;
      s.short_fid = as.fid(q, t, s1);
      s.long_fid = as.fid(q, t, !s1);
      s.g1 = g1;
      s.g2 = g2;
      auto rows_with = [&](const Gadget& g, std::vector<int>& out) {
        const int nr = static_cast<int>(gadget_template(g.kind).rows.size());
        for (int i = 0; i < nr; ++i) {
          const auto& m = as.rows[g.first_row + i];
          if (std::find(m.begin(), m.end(), s.short_fid) != m.end()) out.push_back(g.first_row + i);
        }
      };
      rows_with(a, s.n1);
      rows_with(b, s.n2);
      if (s.n1.empty() && s.n2.empty())
        throw DomainError("qubit " + std::to_string(q) + ": initialisation in layer " + std::to_string(t) +
                          " is measured directly in layer " + std::to_string(t + 1) +
                          "; the merged graph has no bit-check symmetric form");
      split_of[s.short_fid] = splits.size();
      splits.push_back(std::move(s));
    }

  SymmetrizeResult res;
  res.graph = p.g;
  res.maps.phi = BitMatrix::identity(p.g.num_bits());
  res.maps.phi_err = BitMatrix::identity(p.g.num_bits());
  std::vector<int> new_bit(splits.size()), split_check(splits.size());
  for (std::size_t k = 0; k < splits.size(); ++k) {
    const Split& s = splits[k];
    SplitResult r = bit_split(res.graph, p.index[s.short_fid], s.n1, s.n2);
    res.maps.phi = r.maps.phi * res.maps.phi;
    res.maps.phi_err = r.maps.phi_err * res.maps.phi_err;
    res.graph = std::move(r.graph);
    new_bit[k] = static_cast<int>(res.graph.num_bits()) - 1;
    split_check[k] = static_cast<int>(res.graph.num_checks()) - 1;
  }
  res.splits = static_cast<int>(splits.size());

  std::vector<int> dual(res.graph.num_checks(), -1);
  for (std::size_t gi = 0; gi < as.gadgets.size(); ++gi) {
    const Gadget& g = as.gadgets[gi];
    const auto& tpl = gadget_template(g.kind);
    for (const auto& term : tpl.terms) {
      if (term.is_long) continue;
      const int row = g.first_row + term.row;
      const int f = as.term_fid(g, term.ref);
      if (auto it = split_of.find(f); it != split_of.end()) {
        const Split& s = splits[it->second];
        dual[row] = s.g1 == static_cast<int>(gi) ? p.index[f] : new_bit[it->second];
      } else if (p.index[f] >= 0) {
        dual[row] = p.index[f];
      } else {
        // the short terminal vanished at the circuit boundary; its long
        // partner takes over the pairing
        for (const auto& lt : tpl.terms)
          if (lt.is_long && lt.row == term.row) dual[row] = p.index[as.term_fid(g, lt.ref)];
      }
    }
  }
  for (std::size_t k = 0; k < splits.size(); ++k) dual[split_check[k]] = p.index[splits[k].long_fid];
  res.witness = witness_from_duals(res.graph, dual);
  return res;
}

// ------------------------------------------------------------------ I/O ---

std::string export_dot(const TannerGraph& g) {
  std::ostringstream o;
  o << "graph tanner {\n";
  if (g.num_bits() + g.num_checks() > 0) {
    o << "  rankdir=LR;\n";
    for (std::size_t b = 0; b < g.num_bits(); ++b) {
      const auto& l = g.bits[b];
      o << "  \"" << g.bit_name(static_cast<int>(b)) << "\" [shape=ellipse";
      if (l.kind == BitKind::X || l.kind == BitKind::SplitX) o << ", color=red";
      if (l.kind == BitKind::Z || l.kind == BitKind::SplitZ) o << ", color=blue";
      if (l.meas) o << ", xlabel=\"M\"";
      if (l.init) o << ", xlabel=\"I\"";
      o << "];\n";
    }
    for (std::size_t a = 0; a < g.num_checks(); ++a)
      o << "  \"" << g.check_name(static_cast<int>(a)) << "\" [shape=box"
        << (g.checks[a].split ? ", style=dashed" : "") << "];\n";
    for (std::size_t a = 0; a < g.num_checks(); ++a)
      for (int b : g.check_bits[a])
        o << "  \"" << g.check_name(static_cast<int>(a)) << "\" -- \"" << g.bit_name(b) << "\";\n";
    if (g.n > 0) {
      std::map<int, std::vector<std::string>> bit_rank, check_rank;
      for (std::size_t b = 0; b < g.num_bits(); ++b)
        bit_rank[g.bits[b].t].push_back(g.bit_name(static_cast<int>(b)));
      for (std::size_t a = 0; a < g.num_checks(); ++a)
        check_rank[g.checks[a].layer].push_back(g.check_name(static_cast<int>(a)));
      auto emit = [&](const std::map<int, std::vector<std::string>>& ranks) {
        for (const auto& [t, names] : ranks) {
          o << "  { rank=same;";
          for (const auto& s : names) o << " \"" << s << "\";";
          o << " }\n";
        }
      };
      emit(bit_rank);
      emit(check_rank);
    }
  }
  o << "}\n";
  return o.str();
}

namespace {

const char* kind_token(BitKind k) {
  switch (k) {
    case BitKind::X: return "x";
    case BitKind::Z: return "z";
    case BitKind::SplitX: return "sx";
    case BitKind::SplitZ: return "sz";
    case BitKind::Generic: return "b";
  }
  return "b";
}

}  // namespace

void write_labels(std::ostream& out, const TannerGraph& g) {
  out << "# qubits " << g.n << " depth " << g.depth << '\n';
  for (std::size_t b = 0; b < g.num_bits(); ++b) {
    const auto& l = g.bits[b];
    out << b << ' ' << kind_token(l.kind) << ' ' << l.q << ' ' << l.t << ' '
        << (l.meas ? "M" : l.init ? "I" : "-") << '\n';
  }
}

TannerGraph read_graph(const BitMatrix& a, std::istream& labels) {
  TannerGraph g = TannerGraph::from_matrix(a);
  std::string line;
  std::vector<char> seen(a.cols(), 0);
  int lineno = 0;
  while (std::getline(labels, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream h(line.substr(1));
      std::string k1, k2;
      int n = 0, T = 0;
      if (h >> k1 >> n >> k2 >> T && k1 == "qubits" && k2 == "depth") {
        g.n = n;
        g.depth = T;
      }
      continue;
    }
    std::istringstream ls(line);
    std::size_t col;
    std::string kind, flags;
    BitLabel l;
    if (!(ls >> col >> kind >> l.q >> l.t >> flags))
      throw DomainError("labels line " + std::to_string(lineno) + ": expected 'col kind q t flags'");
    if (col >= a.cols()) throw DomainError("labels line " + std::to_string(lineno) + ": column out of range");
    if (kind == "x") l.kind = BitKind::X;
    else if (kind == "z") l.kind = BitKind::Z;
    else if (kind == "sx") l.kind = BitKind::SplitX;
    else if (kind == "sz") l.kind = BitKind::SplitZ;
    else if (kind == "b") l.kind = BitKind::Generic;
    else throw DomainError("labels line " + std::to_string(lineno) + ": unknown kind '" + kind + "'");
    if (flags == "M") l.meas = true;
    else if (flags == "I") l.init = true;
    else if (flags != "-") throw DomainError("labels line " + std::to_string(lineno) + ": unknown flags '" + flags + "'");
    g.bits[col] = l;
    seen[col] = 1;
  }
  for (std::size_t j = 0; j < seen.size(); ++j)
    if (!seen[j]) throw DomainError("labels: column " + std::to_string(j) + " has no label");
  return g;
}

void save_graph(const std::string& prefix, const TannerGraph& g, const SymmetryWitness* w) {
  save_matrix(prefix + ".A", g.matrix());
  std::ofstream l(prefix + ".labels");
  if (!l) throw DomainError("cannot write '" + prefix + ".labels'");
  write_labels(l, g);
  if (w) save_matrix(prefix + ".D", w->D);
}

TannerGraph load_graph(const std::string& prefix) {
  const BitMatrix a = load_matrix(prefix + ".A");
  std::ifstream l(prefix + ".labels");
  if (!l) return TannerGraph::from_matrix(a);
  return read_graph(a, l);
}

std::optional<SymmetryWitness> load_witness(const std::string& prefix, const TannerGraph& g) {
  if (!std::filesystem::exists(prefix + ".D")) return std::nullopt;
  return witness_from_D(g, load_matrix(prefix + ".D"));
}

}  // namespace qclc
