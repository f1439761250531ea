#include "qclc/splitting.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace qclc {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

// Long terminal attached to each check, -1 when none.
std::vector<int> long_of_check(const TannerGraph& g, const SymmetryWitness& w) {
  std::vector<int> out(g.num_checks(), -1);
  const auto bc = g.bit_checks();
  for (int b : w.long_terminals) out[bc[b].at(0)] = b;
  return out;
}

PairPlan trivial_pair(int a, const std::vector<int>& nv) { return PairPlan{a, {nv}, {}, 1}; }

// Full plan: one entry per check, in check order.
std::vector<PairPlan> complete(const TannerGraph& g, const SymmetryWitness& w, const SplitPlan& plan) {
  const auto bc = g.bit_checks();
  std::vector<PairPlan> out(g.num_checks());
  std::vector<char> given(g.num_checks(), 0);
  for (const auto& p : plan.pairs) {
    if (p.check < 0 || p.check >= static_cast<int>(g.num_checks()))
      throw DomainError("split plan: no check with index " + std::to_string(p.check));
    if (given[p.check]) throw DomainError("split plan: pair of " + g.check_name(p.check) + " listed twice");
    given[p.check] = 1;
    out[p.check] = p;
  }
  for (std::size_t a = 0; a < g.num_checks(); ++a)
    if (!given[a]) out[a] = trivial_pair(static_cast<int>(a), bc[w.dual_bit[a]]);
  return out;
}

void check_pair(const TannerGraph& g, const SymmetryWitness& w, const std::vector<std::vector<int>>& bc,
                const PairPlan& p) {
  const int v = w.dual_bit[p.check];
  const std::string who = "split plan for (" + g.bit_name(v) + ", " + g.check_name(p.check) + "): ";
  const std::set<int> nv(bc[v].begin(), bc[v].end());
  const std::size_t r = p.subsets.size();
  if (r == 0) throw DomainError(who + "no subsets");
  std::set<int> seen;
  for (const auto& s : p.subsets) {
    if (s.empty() && !nv.empty()) throw DomainError(who + "empty subset");
    for (int b : s) {
      if (!nv.count(b)) throw DomainError(who + "check " + std::to_string(b) + " is not a neighbour of the bit");
      if (!seen.insert(b).second) throw DomainError(who + "subsets overlap at " + g.check_name(b));
    }
  }
  if (seen != nv) throw DomainError(who + "subsets do not cover the neighbourhood");
  if (p.long_subset < 1 || p.long_subset > static_cast<int>(r)) throw DomainError(who + "long subset out of range");
  if (p.tree.size() + 1 != r) throw DomainError(who + "template needs " + std::to_string(r - 1) + " edges");
  std::vector<int> parent(r);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [i, j] : p.tree) {
    if (i < 1 || j < 1 || i > static_cast<int>(r) || j > static_cast<int>(r) || i == j)
      throw DomainError(who + "template edge " + std::to_string(i) + "-" + std::to_string(j) + " is invalid");
    const int a = find(i - 1), b = find(j - 1);
    if (a == b) throw DomainError(who + "template has a cycle");
    parent[a] = b;
  }
}

}  // namespace

void validate_plan(const TannerGraph& g, const SymmetryWitness& w, const SplitPlan& plan) {
  const auto rep = verify_symmetry(g, w);
  if (!rep.ok) throw DomainError("symmetric_split: input is not symmetric: " + rep.message);
  const auto bc = g.bit_checks();
  for (const auto& p : complete(g, w, plan)) check_pair(g, w, bc, p);
}

SymmetricSplitResult symmetric_split(const TannerGraph& g, const SymmetryWitness& w, const SplitPlan& plan) {
  validate_plan(g, w, plan);
  const auto plans = complete(g, w, plan);
  const auto bc = g.bit_checks();
  const auto lng = long_of_check(g, w);
  const std::size_t nb = g.num_bits(), nc = g.num_checks();

  SymmetricSplitResult r;
  TannerGraph& h = r.graph;
  h.n = g.n;
  h.depth = g.depth;
  h.removed = g.removed;
  h.bits = g.bits;
  h.checks = g.checks;
  r.bit_tree.resize(nc);
  r.check_tree.resize(nc);
  // subset index of check b within the plan of check a
  std::vector<std::map<int, int>> sub(nc);
  for (std::size_t a = 0; a < nc; ++a) {
    const auto& p = plans[a];
    for (std::size_t i = 0; i < p.subsets.size(); ++i)
      for (int b : p.subsets[i]) sub[a][b] = static_cast<int>(i);
    r.bit_tree[a].push_back(w.dual_bit[a]);
    r.check_tree[a].push_back(static_cast<int>(a));
    for (std::size_t i = 1; i < p.subsets.size(); ++i) {
      r.bit_tree[a].push_back(static_cast<int>(h.bits.size()));
      h.bits.push_back(BitLabel{});
      r.check_tree[a].push_back(static_cast<int>(h.checks.size()));
      h.checks.push_back(CheckLabel{g.checks[a].layer, true});
    }
  }
  std::vector<int> dual(h.checks.size(), -1);
  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t i = 0; i < r.bit_tree[a].size(); ++i) dual[r.check_tree[a][i]] = r.bit_tree[a][i];

  std::vector<std::vector<int>> members(h.checks.size());
  // inter-tree edges: N̂_{v,i} — N̂_{b,j} for b ∈ N_{v,i} and a ∈ N_{v_b,j}
  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t i = 0; i < plans[a].subsets.size(); ++i)
      for (int b : plans[a].subsets[i]) {
        auto it = sub[b].find(static_cast<int>(a));
        if (it == sub[b].end())
          throw DomainError("symmetric_split: " + g.check_name(static_cast<int>(a)) + " is missing from N(" +
                            g.bit_name(w.dual_bit[b]) + ")");
        members[r.check_tree[b][it->second]].push_back(r.bit_tree[a][i]);
      }
  for (std::size_t a = 0; a < nc; ++a)
    if (lng[a] >= 0) members[r.check_tree[a][plans[a].long_subset - 1]].push_back(lng[a]);

  // template edges: a check in the bit tree, a bit in the check tree
  struct TreeEdge {
    int pair, i, j, bit, check;
  };
  std::vector<TreeEdge> edges;
  for (std::size_t a = 0; a < nc; ++a)
    for (auto [i, j] : plans[a].tree) {
      TreeEdge e{static_cast<int>(a), i - 1, j - 1, static_cast<int>(h.bits.size()),
                 static_cast<int>(h.checks.size())};
      h.bits.push_back(BitLabel{});
      h.checks.push_back(CheckLabel{g.checks[a].layer, true});
      members.push_back({r.bit_tree[a][e.i], r.bit_tree[a][e.j]});
      members[r.check_tree[a][e.i]].push_back(e.bit);
      members[r.check_tree[a][e.j]].push_back(e.bit);
      dual.push_back(e.bit);
      edges.push_back(e);
    }
  for (auto& m : members) {
    std::sort(m.begin(), m.end());
    if (std::adjacent_find(m.begin(), m.end()) != m.end())
      throw std::logic_error("symmetric_split: repeated edge");
  }
  h.check_bits = std::move(members);
  r.witness = witness_from_duals(h, dual);

  // ψ: bit-tree bits copy c_v, long terminals are kept, and a check-tree bit
  // on template edge (parent, child) carries the leaves below the child
  const std::size_t NB = h.bits.size();
  r.maps.phi = BitMatrix(NB, nb);
  r.maps.phi_err = BitMatrix(NB, nb);
  r.psi_inv = BitMatrix(nb, NB);
  for (int b : w.long_terminals) {
    r.maps.phi.set(b, b);
    r.maps.phi_err.set(b, b);
    r.psi_inv.set(b, b);
  }
  for (std::size_t a = 0; a < nc; ++a) {
    const int v = w.dual_bit[a];
    for (int nbit : r.bit_tree[a]) r.maps.phi.set(nbit, v);
    r.maps.phi_err.set(v, v);
    r.psi_inv.set(v, v);
  }
  std::size_t k = 0;
  for (std::size_t a = 0; a < nc; ++a) {
    const auto& p = plans[a];
    const std::size_t rv = p.subsets.size();
    if (rv == 1) continue;
    std::vector<std::vector<int>> adj(rv);
    for (auto [i, j] : p.tree) {
      adj[i - 1].push_back(j - 1);
      adj[j - 1].push_back(i - 1);
    }
    std::vector<int> par(rv, -1), order{0};
    par[0] = 0;
    for (std::size_t q = 0; q < order.size(); ++q)
      for (int y : adj[order[q]])
        if (par[y] < 0) {
          par[y] = order[q];
          order.push_back(y);
        }
    // leaves below each template vertex, accumulated bottom-up
    std::vector<BitVector> below(rv, BitVector(nb));
    for (std::size_t i = 0; i < rv; ++i) {
      for (int b : p.subsets[i]) below[i].flip(w.dual_bit[b]);
      if (lng[a] >= 0 && static_cast<int>(i) == p.long_subset - 1) below[i].flip(lng[a]);
    }
    for (std::size_t q = order.size(); q-- > 1;) below[par[order[q]]] ^= below[order[q]];
    for (; k < edges.size() && edges[k].pair == static_cast<int>(a); ++k) {
      const auto& e = edges[k];
      const int child = par[e.j] == e.i ? e.j : e.i;
      r.maps.phi.row(e.bit) = below[child];
    }
  }
  return r;
}

BitVector map_codeword(const CodeMaps& m, const BitVector& c) {
  if (c.size() != m.phi.cols()) throw DomainError("map_codeword: vector length does not match the map");
  return m.phi.mul(c);
}

BitVector map_error(const CodeMaps& m, const BitVector& e) {
  if (e.size() != m.phi_err.cols()) throw DomainError("map_error: vector length does not match the map");
  return m.phi_err.mul(e);
}

PairPlan path_pair_plan(int check, std::vector<std::vector<int>> subsets) {
  PairPlan p{check, std::move(subsets), {}, 1};
  for (std::size_t i = 1; i < p.subsets.size(); ++i)
    p.tree.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
  return p;
}

SplitPlan degree_reducing_plan(const TannerGraph& g, const SymmetryWitness& w) {
  const auto bc = g.bit_checks();
  const auto lng = long_of_check(g, w);
  SplitPlan plan;
  for (std::size_t a = 0; a < g.num_checks(); ++a) {
    const auto& nv = bc[w.dual_bit[a]];
    const std::size_t items = nv.size() + (lng[a] >= 0 ? 1 : 0);
    if (items <= 3) continue;
    // the long terminal (if any) takes one of the two places of subset 1
    const std::size_t r = items - 2;
    std::vector<std::vector<int>> subsets(r);
    for (std::size_t i = 0, j = 0; i < r; ++i) {
      std::size_t take = (i == 0 || i + 1 == r) ? 2 : 1;
      if (i == 0 && lng[a] >= 0) --take;
      for (std::size_t t = 0; t < take; ++t) subsets[i].push_back(nv[j++]);
    }
    plan.pairs.push_back(path_pair_plan(static_cast<int>(a), std::move(subsets)));
  }
  return plan;
}

SplitPlan read_plan(std::istream& in, const TannerGraph& g, const SymmetryWitness& w) {
  SplitPlan plan;
  std::string line;
  int no = 0;
  auto bad = [&](const std::string& why) {
    return DomainError("plan line " + std::to_string(no) + ": " + why);
  };
  auto check_id = [&](const std::string& name) {
    const int c = g.find_check(name);
    if (c < 0) throw bad("unknown check '" + name + "'");
    return c;
  };
  while (std::getline(in, line)) {
    ++no;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw bad("missing ':'");
    std::istringstream head(line.substr(0, colon));
    std::string kw, bit, chk, extra;
    if (!(head >> kw >> bit >> chk) || kw != "pair" || (head >> extra)) throw bad("expected 'pair <bit> <check>'");
    const int v = g.find_bit(bit);
    if (v < 0) throw bad("unknown bit '" + bit + "'");
    PairPlan p;
    p.check = check_id(chk);
    if (w.dual_bit.size() != g.num_checks() || w.dual_bit[p.check] != v)
      throw bad(bit + " and " + chk + " are not a dual pair");
    bool have_tree = false;
    for (const auto& part : split(line.substr(colon + 1), ';')) {
      std::string body = part;
      if (body.rfind("subsets", 0) == 0) {
        if (!p.subsets.empty()) throw bad("'subsets' given twice");
        body = trim(body.substr(7));
      } else if (body.rfind("tree", 0) == 0) {
        if (have_tree) throw bad("'tree' given twice");
        have_tree = true;
        const std::string t = trim(body.substr(4));
        if (t.empty() || t == "-") continue;
        for (const auto& e : split(t, ',')) {
          const auto dash = e.find('-');
          if (dash == std::string::npos) throw bad("tree edge '" + e + "' is not i-j");
          try {
            p.tree.emplace_back(std::stoi(e.substr(0, dash)), std::stoi(e.substr(dash + 1)));
          } catch (const std::exception&) {
            throw bad("tree edge '" + e + "' is not i-j");
          }
        }
        continue;
      } else if (body.rfind("long", 0) == 0) {
        try {
          p.long_subset = std::stoi(trim(body.substr(4)));
        } catch (const std::exception&) {
          throw bad("bad long clause");
        }
        continue;
      } else if (p.subsets.empty()) {
        throw bad("expected 'subsets'");
      }
      std::vector<int> s;
      if (!body.empty() && body != "-")
        for (const auto& c : split(body, ',')) s.push_back(check_id(c));
      p.subsets.push_back(std::move(s));
    }
    if (p.subsets.empty()) throw bad("no subsets");
    plan.pairs.push_back(std::move(p));
  }
  return plan;
}

void write_plan(std::ostream& out, const TannerGraph& g, const SymmetryWitness& w, const SplitPlan& plan) {
  for (const auto& p : plan.pairs) {
    out << "pair " << g.bit_name(w.dual_bit.at(p.check)) << ' ' << g.check_name(p.check) << " : subsets ";
    for (std::size_t i = 0; i < p.subsets.size(); ++i) {
      if (i) out << ';';
      if (p.subsets[i].empty()) out << '-';
      for (std::size_t j = 0; j < p.subsets[i].size(); ++j) out << (j ? "," : "") << g.check_name(p.subsets[i][j]);
    }
    out << " ; tree ";
    if (p.tree.empty()) out << '-';
    for (std::size_t i = 0; i < p.tree.size(); ++i) out << (i ? "," : "") << p.tree[i].first << '-' << p.tree[i].second;
    if (p.long_subset != 1) out << " ; long " << p.long_subset;
    out << '\n';
  }
}

std::pair<BitMatrix, BitMatrix> io_code_matrices(const TannerGraph& g, const SymmetryWitness& w) {
  const BitMatrix a = g.matrix();
  const std::size_t n = g.num_bits();
  BitMatrix sel(0, n);
  for (int b : w.long_terminals) sel.append_row(BitVector::unit(n, b));
  const BitMatrix kern = kernel_basis(a);
  BitMatrix B = sel.rows() ? stack_kernel({a, sel}) : kern;
  BitMatrix L = complement_basis(B, kern);
  return {BitMatrix::from_rows(B.row_list(), n), BitMatrix::from_rows(L.row_list(), n)};
}

std::string BoundReport::str() const {
  std::ostringstream o;
  o << "d = " << d.value_str() << ", d' = " << d_split.value_str() << ", g_max = " << g_max << ", factor = " << factor
    << (ok() ? (conclusive ? ": bound holds" : ": bound not contradicted (inconclusive)") : ": BOUND VIOLATED");
  return o.str();
}

BoundReport check_distance_bound(const TannerGraph& g, const TannerGraph& g_split, const BitMatrix& B,
                                 const BitMatrix& L, const CodeMaps& maps, std::size_t max_weight, unsigned jobs) {
  if (maps.phi.rows() != g_split.num_bits() || maps.phi.cols() != g.num_bits())
    throw DomainError("check_distance_bound: maps do not match the graphs");
  auto push = [&](const BitMatrix& m) {
    BitMatrix out(0, g_split.num_bits());
    for (const auto& r : m.row_list()) out.append_row(maps.phi.mul(r));
    return out;
  };
  const BitMatrix B2 = push(B), L2 = push(L);
  BoundReport rep;
  rep.g_max = g.max_degree();
  rep.factor = std::max<std::size_t>(1, rep.g_max / 2);
  rep.d = reduced_circuit_distance(B, L, max_weight, jobs);
  const std::size_t cap = rep.d.found ? rep.d.value : max_weight;
  rep.d_split = reduced_circuit_distance(B2, L2, cap, jobs);
  const bool inf = !rep.d.found && !rep.d.lower_bound, inf2 = !rep.d_split.found && !rep.d_split.lower_bound;
  if (inf) {
    // no logical error before; ψ keeps L′ = 0 exactly when L = 0
    rep.upper_ok = rep.lower_ok = inf2;
    return rep;
  }
  if (rep.d.found) {
    rep.upper_ok = rep.d_split.found;   // searched up to d
    rep.lower_ok = rep.d_split.found ? rep.d_split.value * rep.factor >= rep.d.value : true;
    return rep;
  }
  // d > max_weight: d′ ≤ d holds whatever d′ is, d′·factor ≥ d is undecided
  rep.conclusive = false;
  return rep;
}

}  // namespace qclc
