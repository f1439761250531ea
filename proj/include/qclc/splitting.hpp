#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qclc/distance.hpp"
#include "qclc/tanner.hpp"

namespace qclc {

// How one dual pair (v, a) is replaced.  `check` is a; v = dual_bit[a].
// subsets[i] lists checks of N(v); the partition of N(a) follows by duality
// (dual_bit[b] joins subset i when b does).  Template vertices are 1..r.
struct PairPlan {
  int check = -1;
  std::vector<std::vector<int>> subsets;
  std::vector<std::pair<int, int>> tree;
  int long_subset = 1;   // template vertex that keeps a's long terminal
};

// Pairs not listed keep r = 1.
struct SplitPlan {
  std::vector<PairPlan> pairs;
};

struct SymmetricSplitResult {
  TannerGraph graph;
  SymmetryWitness witness;
  CodeMaps maps;       // ψ and ψ_err, new × old
  BitMatrix psi_inv;   // old × new, reads c back off N̂_{v,1} and the long terminals
  // per old check a: new bits N̂_{v,i} and new checks N̂_{a,i}, i = 1..r
  std::vector<std::vector<int>> bit_tree;
  std::vector<std::vector<int>> check_tree;
};

// Throws DomainError on a malformed plan or a witness that does not verify.
void validate_plan(const TannerGraph& g, const SymmetryWitness& w, const SplitPlan& plan);

// Old bits and checks keep their indices (v ↦ N̂_{v,1}, a ↦ N̂_{a,1}); new
// vertices are appended, so the trivial plan returns g itself.
SymmetricSplitResult symmetric_split(const TannerGraph& g, const SymmetryWitness& w, const SplitPlan& plan);

BitVector map_codeword(const CodeMaps& m, const BitVector& c);
BitVector map_error(const CodeMaps& m, const BitVector& e);

// Path template over the given subsets: 1-2, 2-3, …
PairPlan path_pair_plan(int check, std::vector<std::vector<int>> subsets);
// Splits every vertex of degree > 3 into a path whose end vertices take two
// neighbours and inner vertices one, so no split vertex exceeds degree 3.
SplitPlan degree_reducing_plan(const TannerGraph& g, const SymmetryWitness& w);

// `pair <bit> <check> : subsets c1,c2;c3 ; tree 1-2,2-3 [; long <k>]`
SplitPlan read_plan(std::istream& in, const TannerGraph& g, const SymmetryWitness& w);
void write_plan(std::ostream& out, const TannerGraph& g, const SymmetryWitness& w, const SplitPlan& plan);

// B spans the codewords that vanish on the long terminals, L a complement in
// ker A: logical errors are those that flip an input/output correlation.
std::pair<BitMatrix, BitMatrix> io_code_matrices(const TannerGraph& g, const SymmetryWitness& w);

struct BoundReport {
  DistanceResult d;         // d(A, B, L)
  DistanceResult d_split;   // d(A′, ψB, ψL)
  std::size_t g_max = 0;
  std::size_t factor = 1;   // max(1, ⌊g_max/2⌋)
  bool upper_ok = true;     // d′ ≤ d
  bool lower_ok = true;     // d′·factor ≥ d
  bool conclusive = true;   // false when a cap hid one of the values
  bool ok() const { return upper_ok && lower_ok; }
  std::string str() const;
};

// d′ is searched only up to d, the largest value the bound allows.
BoundReport check_distance_bound(const TannerGraph& g, const TannerGraph& g_split, const BitMatrix& B,
                                 const BitMatrix& L, const CodeMaps& maps, std::size_t max_weight,
                                 unsigned jobs = 1);

}  // namespace qclc
