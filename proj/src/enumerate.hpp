#pragma once

// Weight-ordered combination search over precomputed column syndromes.
// Shared by the gf2 min-weight kernel and the distance search.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qclc/gf2.hpp"

namespace qclc::detail {

struct SyndromeTable {
  std::size_t n = 0;      // columns
  std::size_t words = 0;  // words per syndrome
  std::vector<std::uint64_t> data;

  const std::uint64_t* col(std::size_t j) const { return data.data() + j * words; }
};

// Column j of the table is the j-th column of the vertically stacked matrices.
SyndromeTable make_table(const std::vector<const BitMatrix*>& parts, std::size_t n);

// C(n, k) saturated to 2^64 - 1.
std::uint64_t binom_sat(std::size_t n, std::size_t k);
// 0-based lexicographic rank of a sorted combination of [0, n).
std::uint64_t combo_rank(std::size_t n, const std::vector<std::size_t>& combo);

// Searches weight-w combinations whose first index is `first`, in
// lexicographic order; `accept(syndrome, combo)` decides a hit.  Returns true
// and fills `out` with the first hit.
template <class Accept>
bool search_with_first(const SyndromeTable& t, std::size_t w, std::size_t first,
                       Accept&& accept, std::vector<std::size_t>& out) {
  const std::size_t W = t.words;
  if (w == 0 || first + w > t.n) return false;
  std::vector<std::uint64_t> acc((w + 1) * W, 0);
  std::vector<std::size_t> idx(w);
  idx[0] = first;
  for (std::size_t k = 0; k < W; ++k) acc[W + k] = t.col(first)[k];
  if (w == 1) {
    if (accept(acc.data() + W, idx)) { out = idx; return true; }
    return false;
  }
  std::size_t d = 1;
  idx[1] = first + 1;
  while (true) {
    // place idx[d] and fold into acc[d+1]
    if (idx[d] + (w - d) > t.n) {
      if (d == 1) return false;
      --d;
      ++idx[d];
      continue;
    }
    const std::uint64_t* prev = acc.data() + d * W;
    std::uint64_t* cur = acc.data() + (d + 1) * W;
    const std::uint64_t* c = t.col(idx[d]);
    for (std::size_t k = 0; k < W; ++k) cur[k] = prev[k] ^ c[k];
    if (d + 1 == w) {
      if (accept(cur, idx)) { out = idx; return true; }
      ++idx[d];
    } else {
      ++d;
      idx[d] = idx[d - 1] + 1;
    }
  }
}

inline bool all_zero(const std::uint64_t* s, std::size_t lo, std::size_t hi) {
  for (std::size_t k = lo; k < hi; ++k)
    if (s[k]) return false;
  return true;
}

}  // namespace qclc::detail
