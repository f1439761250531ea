#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "qclc/gf2.hpp"

namespace qclc {

struct DistanceResult {
  bool found = false;        // exact value with a witness
  bool lower_bound = false;  // cap reached: value = max_weight + 1 is a lower bound
  std::size_t value = 0;
  BitVector witness;
  std::size_t max_weight = 0;
  std::uint64_t enumerated = 0;

  // "3", ">= 7" or "inf" (no logical error exists)
  std::string value_str() const;
};

// Minimum |e| with B eᵀ = 0 and L eᵀ ≠ 0, by enumeration in order of weight and
// then lexicographically.  `jobs` > 1 splits each weight class over threads;
// the result does not depend on it.
DistanceResult circuit_distance(const BitMatrix& B, const BitMatrix& L, std::size_t max_weight = 6,
                                unsigned jobs = 1);

// Same search after merging identical columns of (B; L) and dropping zero
// columns; neither changes the minimum.  The witness uses the first column of
// each class.  Worth it for split graphs, where whole trees share a column.
DistanceResult reduced_circuit_distance(const BitMatrix& B, const BitMatrix& L, std::size_t max_weight = 6,
                                        unsigned jobs = 1);

struct CssDistance {
  DistanceResult d_x;   // min weight in ker G_X outside rowsp(G_Z)
  DistanceResult d_z;   // min weight in ker G_Z outside rowsp(G_X)
  DistanceResult d;     // the smaller of the two
};
CssDistance css_distance(const BitMatrix& gx, const BitMatrix& gz, std::size_t max_weight = 6, unsigned jobs = 1);

// Logical rows for the X side: a basis of ker G_Z modulo rowsp(G_X).
BitMatrix css_logicals(const BitMatrix& g_same, const BitMatrix& g_other);

// ⌈d/2⌉: lower bound on the number of single-qubit errors behind a logical error.
std::size_t half_distance_bound(std::size_t d);

}  // namespace qclc
