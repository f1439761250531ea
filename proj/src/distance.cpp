#include "qclc/distance.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>
#include <tuple>
#include <thread>
#include <vector>

#include "enumerate.hpp"

namespace qclc {

std::string DistanceResult::value_str() const {
  if (found) return std::to_string(value);
  if (lower_bound) return ">= " + std::to_string(value);
  return "inf";
}

namespace {

bool nonzero_rows(const BitMatrix& m) {
  for (const auto& r : m.row_list())
    if (r.any()) return true;
  return false;
}

}  // namespace

DistanceResult circuit_distance(const BitMatrix& B, const BitMatrix& L, std::size_t max_weight, unsigned jobs) {
  const std::size_t n = std::max(B.cols(), L.cols());
  if ((B.rows() && B.cols() != n) || (L.rows() && L.cols() != n) || (B.cols() && L.cols() && B.cols() != L.cols()))
    throw DomainError("circuit_distance: B has " + std::to_string(B.cols()) + " columns, L has " +
                      std::to_string(L.cols()));
  DistanceResult res;
  res.max_weight = max_weight;
  if (!nonzero_rows(L)) return res;   // no logical errors at all

  const BitMatrix b = B.rows() ? B : BitMatrix(0, n);
  const BitMatrix l = L;
  const auto table = detail::make_table({&b, &l}, n);
  const std::size_t bw = (b.rows() + 63) / 64;
  const std::size_t words = table.words;
  auto accept_syndrome = [&](const std::uint64_t* s) {
    return detail::all_zero(s, 0, bw) && !detail::all_zero(s, bw, words);
  };

  jobs = std::max(1u, jobs);
  const std::size_t cap = std::min(max_weight, n);
  for (std::size_t w = 1; w <= cap; ++w) {
    const std::size_t firsts = n - w + 1;
    std::vector<std::uint64_t> seen(firsts, 0);
    std::vector<std::vector<std::size_t>> hits(firsts);
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t f = next.fetch_add(1);
        if (f >= firsts || f > best.load()) return;
        std::uint64_t count = 0;
        bool aborted = false;
        auto accept = [&](const std::uint64_t* s, const std::vector<std::size_t>&) {
          // a smaller first index already won; this branch cannot matter
          if ((++count & 0xfff) == 0 && best.load() < f) aborted = true;
          return aborted || accept_syndrome(s);
        };
        std::vector<std::size_t> hit;
        if (detail::search_with_first(table, w, f, accept, hit) && !aborted) {
          hits[f] = hit;
          std::size_t cur = best.load();
          while (f < cur && !best.compare_exchange_weak(cur, f)) {
          }
        }
        seen[f] = count;
      }
    };
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    const std::size_t f = best.load();
    const std::size_t last = std::min(f, firsts - 1);
    for (std::size_t i = 0; i <= last; ++i) res.enumerated += seen[i];
    if (f < firsts) {
      res.found = true;
      res.value = w;
      res.witness = BitVector(n);
      for (auto i : hits[f]) res.witness.set(i);
      if ((b.rows() && b.mul(res.witness).any()) || !l.mul(res.witness).any() || res.witness.weight() != w)
        throw std::logic_error("circuit_distance: witness failed re-verification");
      return res;
    }
  }
  if (max_weight < n) {
    res.lower_bound = true;
    res.value = max_weight + 1;
  }
  // otherwise every vector was examined and no logical error exists
  return res;
}

DistanceResult reduced_circuit_distance(const BitMatrix& B, const BitMatrix& L, std::size_t max_weight,
                                        unsigned jobs) {
  const std::size_t n = std::max(B.cols(), L.cols());
  if ((B.rows() && B.cols() != n) || (L.rows() && L.cols() != n))
    throw DomainError("reduced_circuit_distance: B and L have different lengths");
  const BitMatrix b = B.rows() ? B : BitMatrix(0, n);
  const BitMatrix l = L.rows() ? L : BitMatrix(0, n);
  const BitMatrix bt = b.transpose(), lt = l.transpose();
  std::map<std::pair<BitVector, BitVector>, std::size_t> first;
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < n; ++j) {
    auto key = std::make_pair(b.rows() ? bt.row(j) : BitVector(), l.rows() ? lt.row(j) : BitVector());
    if (!key.first.any() && !key.second.any()) continue;
    if (first.emplace(std::move(key), j).second) keep.push_back(j);
  }
  DistanceResult r = circuit_distance(b.select_columns(keep), l.select_columns(keep), max_weight, jobs);
  r.max_weight = max_weight;
  if (r.found) {
    BitVector w(n);
    for (auto i : r.witness.support()) w.set(keep[i]);
    r.witness = w;
    if (b.mul(w).any() || !l.mul(w).any()) throw std::logic_error("reduced_circuit_distance: lifted witness is wrong");
  } else if (r.lower_bound && max_weight >= keep.size()) {
    r.lower_bound = false;   // the reduced space was exhausted
    r.value = 0;
  }
  return r;
}

BitMatrix css_logicals(const BitMatrix& g_same, const BitMatrix& g_other) {
  const std::size_t n = std::max(g_same.cols(), g_other.cols());
  const BitMatrix other = g_other.rows() ? g_other : BitMatrix(0, n);
  const BitMatrix same = g_same.rows() ? g_same : BitMatrix(0, n);
  return complement_basis(same, kernel_basis(other));
}

CssDistance css_distance(const BitMatrix& gx, const BitMatrix& gz, std::size_t max_weight, unsigned jobs) {
  const std::size_t n = std::max(gx.cols(), gz.cols());
  if ((gx.cols() && gx.cols() != n) || (gz.cols() && gz.cols() != n))
    throw DomainError("css_distance: G_X and G_Z have different lengths");
  const BitMatrix x = gx.rows() ? gx : BitMatrix(0, n);
  const BitMatrix z = gz.rows() ? gz : BitMatrix(0, n);
  if (x.rows() && z.rows() && !(x * z.transpose()).is_zero()) throw DomainError("css_distance: G_X G_Zᵀ ≠ 0");
  CssDistance r;
  // v ∈ ker G_X lies in rowsp(G_Z) iff it is orthogonal to ker G_Z, i.e. to
  // the logicals ker G_Z / rowsp(G_X)
  r.d_x = circuit_distance(x, css_logicals(x, z), max_weight, jobs);
  r.d_z = circuit_distance(z, css_logicals(z, x), max_weight, jobs);
  auto rank_of = [](const DistanceResult& d) {
    return std::make_tuple(!d.found && !d.lower_bound, d.value, !d.found);
  };
  r.d = rank_of(r.d_x) <= rank_of(r.d_z) ? r.d_x : r.d_z;
  return r;
}

std::size_t half_distance_bound(std::size_t d) { return (d + 1) / 2; }

}  // namespace qclc
