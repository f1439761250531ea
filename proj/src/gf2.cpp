#include "qclc/gf2.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "enumerate.hpp"

namespace qclc {

namespace {

void require_same_cols(const BitMatrix& a, const BitMatrix& b, const char* what) {
  if (a.cols() != b.cols())
    throw DomainError(std::string(what) + ": column counts differ (" + std::to_string(a.cols()) +
                      " vs " + std::to_string(b.cols()) + ")");
}

}  // namespace

// ---------------------------------------------------------------- BitVector

BitVector BitVector::from_string(std::string_view bits) {
  std::size_t n = 0;
  for (char ch : bits) {
    if (ch == '0' || ch == '1') ++n;
    else if (ch != ' ' && ch != ',' && ch != '\t')
      throw DomainError(std::string("bad bit character '") + ch + "'");
  }
  BitVector v(n);
  std::size_t i = 0;
  for (char ch : bits) {
    if (ch == '1') v.set(i);
    if (ch == '0' || ch == '1') ++i;
  }
  return v;
}

BitVector BitVector::unit(std::size_t n, std::size_t i) {
  BitVector v(n);
  v.set(i);
  return v;
}

BitVector& BitVector::operator^=(const BitVector& o) {
  if (o.n_ != n_) throw DomainError("bit vector length mismatch");
  for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& o) {
  if (o.n_ != n_) throw DomainError("bit vector length mismatch");
  for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
  return *this;
}

bool BitVector::dot(const BitVector& o) const {
  if (o.n_ != n_) throw DomainError("bit vector length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
  return std::popcount(acc) & 1;
}

std::size_t BitVector::weight() const {
  std::size_t s = 0;
  for (auto x : w_) s += std::popcount(x);
  return s;
}

bool BitVector::any() const {
  return std::any_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x != 0; });
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> s;
  for (std::size_t k = 0; k < w_.size(); ++k) {
    std::uint64_t x = w_[k];
    while (x) {
      s.push_back(k * 64 + std::countr_zero(x));
      x &= x - 1;
    }
  }
  return s;
}

BitVector BitVector::slice(std::size_t start, std::size_t len) const {
  BitVector r(len);
  for (std::size_t i = 0; i < len; ++i)
    if (get(start + i)) r.set(i);
  return r;
}

BitVector BitVector::concat(const BitVector& o) const {
  BitVector r(n_ + o.n_);
  for (auto i : support()) r.set(i);
  for (auto i : o.support()) r.set(n_ + i);
  return r;
}

std::string BitVector::str() const {
  std::string s(n_, '0');
  for (auto i : support()) s[i] = '1';
  return s;
}

bool BitVector::operator<(const BitVector& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  for (std::size_t k = 0; k < w_.size(); ++k) {
    if (w_[k] == o.w_[k]) continue;
    const std::uint64_t diff = w_[k] ^ o.w_[k];
    const std::uint64_t low = diff & (~diff + 1);
    // the first differing bit decides; a 1 there sorts later
    return (o.w_[k] & low) != 0;
  }
  return false;
}

// ---------------------------------------------------------------- BitMatrix

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows, std::size_t cols) {
  BitMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows, std::size_t cols) {
  if (!rows.empty()) cols = BitVector::from_string(rows.front()).size();
  BitMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(BitVector::from_string(r));
  return m;
}

void BitMatrix::append_row(const BitVector& v) {
  if (v.size() != cols_)
    throw DomainError("row length " + std::to_string(v.size()) + " does not match " +
                      std::to_string(cols_) + " columns");
  rows_.push_back(v);
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(rows());
  for (std::size_t r = 0; r < rows(); ++r)
    if (get(r, c)) v.set(r);
  return v;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (auto c : rows_[r].support()) t.set(c, r);
  return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
  if (cols_ != o.rows())
    throw DomainError("matrix product shape mismatch: " + std::to_string(rows()) + "x" +
                      std::to_string(cols_) + " by " + std::to_string(o.rows()) + "x" +
                      std::to_string(o.cols()));
  BitMatrix p(rows(), o.cols());
  for (std::size_t r = 0; r < rows(); ++r)
    for (auto k : rows_[r].support()) p.rows_[r] ^= o.rows_[k];
  return p;
}

BitVector BitMatrix::mul(const BitVector& v) const {
  if (v.size() != cols_) throw DomainError("matrix-vector shape mismatch");
  BitVector r(rows());
  for (std::size_t i = 0; i < rows(); ++i)
    if (rows_[i].dot(v)) r.set(i);
  return r;
}

bool BitMatrix::is_zero() const {
  return std::none_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.any(); });
}

std::size_t BitMatrix::nnz() const {
  std::size_t s = 0;
  for (const auto& r : rows_) s += r.weight();
  return s;
}

BitMatrix BitMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  BitMatrix m(rows(), cols.size());
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (get(r, cols[j])) m.set(r, j);
  return m;
}

BitMatrix BitMatrix::select_rows(const std::vector<std::size_t>& rs) const {
  BitMatrix m(0, cols_);
  for (auto r : rs) m.append_row(rows_.at(r));
  return m;
}

BitMatrix vstack(const BitMatrix& a, const BitMatrix& b) {
  require_same_cols(a, b, "vstack");
  BitMatrix m = a;
  for (const auto& r : b.row_list()) m.append_row(r);
  return m;
}

BitMatrix hstack(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() != b.rows()) throw DomainError("hstack: row counts differ");
  BitMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) m.row(r) = a.row(r).concat(b.row(r));
  return m;
}

BitMatrix kron(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (auto j : a.row(i).support())
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (auto l : b.row(k).support()) m.set(i * b.rows() + k, j * b.cols() + l);
  return m;
}

// ---------------------------------------------------------------- elimination

Rref rref(const BitMatrix& in) {
  std::vector<BitVector> rows = in.row_list();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < in.cols() && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return {BitMatrix::from_rows(rows, in.cols()), pivots};
}

std::size_t rank(const BitMatrix& m) { return rref(m).pivots.size(); }

BitMatrix row_basis(const BitMatrix& m) { return rref(m).m; }

BitMatrix kernel_basis(const BitMatrix& m) {
  const Rref R = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : R.pivots) is_pivot[p] = true;
  BitMatrix k(0, n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitVector v(n);
    v.set(f);
    for (std::size_t i = 0; i < R.pivots.size(); ++i)
      if (R.m.get(i, f)) v.set(R.pivots[i]);
    k.append_row(v);
  }
  return rref(k).m;
}

bool row_space_member(const BitMatrix& m, const BitVector& v) {
  if (v.size() != m.cols()) throw DomainError("row_space_member: length mismatch");
  const Rref R = rref(m);
  BitVector w = v;
  for (std::size_t i = 0; i < R.pivots.size(); ++i)
    if (w.get(R.pivots[i])) w ^= R.m.row(i);
  return !w.any();
}

BitMatrix stack_kernel(const std::vector<BitMatrix>& ms) {
  if (ms.empty()) throw DomainError("stack_kernel: no matrices");
  BitMatrix s(0, ms.front().cols());
  for (const auto& m : ms) s = vstack(s, m);
  return kernel_basis(s);
}

BitMatrix span_union(const BitMatrix& a, const BitMatrix& b) {
  return rref(vstack(a, b)).m;
}

bool same_row_space(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) return false;
  return rref(a).m == rref(b).m;
}

BitMatrix complement_basis(const BitMatrix& sub, const BitMatrix& space) {
  require_same_cols(sub, space, "complement_basis");
  // incremental echelon form of everything accepted so far
  std::vector<BitVector> ech;
  std::vector<std::size_t> piv;
  auto reduce = [&](BitVector v) {
    for (std::size_t i = 0; i < ech.size(); ++i)
      if (v.get(piv[i])) v ^= ech[i];
    return v;
  };
  auto insert = [&](const BitVector& red) {
    const auto s = red.support();
    const std::size_t p = s.front();
    for (auto& e : ech)
      if (e.get(p)) e ^= red;
    ech.push_back(red);
    piv.push_back(p);
  };
  for (const auto& r : sub.row_list()) {
    BitVector red = reduce(r);
    if (red.any()) insert(red);
  }
  BitMatrix out(0, space.cols());
  for (const auto& r : space.row_list()) {
    BitVector red = reduce(r);
    if (!red.any()) continue;
    insert(red);
    out.append_row(r);
  }
  return out;
}

bool solve(const BitMatrix& a, const BitVector& b, BitVector& x) {
  if (b.size() != a.rows()) throw DomainError("solve: right-hand side length mismatch");
  // eliminate on the augmented matrix [A | b]
  BitMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    aug.row(r) = a.row(r).concat(BitVector(1));
    if (b.get(r)) aug.set(r, a.cols());
  }
  const Rref R = rref(aug);
  x = BitVector(a.cols());
  for (std::size_t i = 0; i < R.pivots.size(); ++i) {
    if (R.pivots[i] == a.cols()) return false;
    if (R.m.get(i, a.cols())) x.set(R.pivots[i]);
  }
  return true;
}

BitMatrix left_inverse(const BitMatrix& m) {
  // rows of P solve  Pᵢ · M = eᵢ, i.e. Mᵀ Pᵢᵀ = eᵢ
  const BitMatrix mt = m.transpose();
  BitMatrix p(0, m.rows());
  for (std::size_t i = 0; i < m.cols(); ++i) {
    BitVector x;
    if (!solve(mt, BitVector::unit(m.cols(), i), x))
      throw DomainError("left_inverse: matrix does not have full column rank");
    p.append_row(x);
  }
  return p;
}

bool symplectic_product(const BitVector& b1, const BitVector& b2) {
  if (b1.size() % 2 != 0 || b1.size() != b2.size())
    throw DomainError("symplectic_product: vectors must share an even length");
  const std::size_t n = b1.size() / 2;
  bool s = false;
  for (std::size_t i = 0; i < n; ++i) {
    s ^= b1.get(i) && b2.get(n + i);
    s ^= b1.get(n + i) && b2.get(i);
  }
  return s;
}

// ---------------------------------------------------------------- min weight

namespace detail {

SyndromeTable make_table(const std::vector<const BitMatrix*>& parts, std::size_t n) {
  SyndromeTable t;
  t.n = n;
  for (auto* p : parts) t.words += (p->rows() + 63) / 64;
  if (t.words == 0) t.words = 1;
  t.data.assign(n * t.words, 0);
  std::size_t off = 0;
  for (auto* p : parts) {
    if (p->cols() != n) throw DomainError("syndrome table: column count mismatch");
    for (std::size_t r = 0; r < p->rows(); ++r)
      for (auto c : p->row(r).support())
        t.data[c * t.words + off + r / 64] |= std::uint64_t{1} << (r % 64);
    off += (p->rows() + 63) / 64;
  }
  return t;
}

std::uint64_t binom_sat(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  const unsigned __int128 cap = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t combo_rank(std::size_t n, const std::vector<std::size_t>& combo) {
  const std::size_t w = combo.size();
  unsigned __int128 r = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < w; ++k) {
    for (std::size_t j = start; j < combo[k]; ++j) r += binom_sat(n - 1 - j, w - 1 - k);
    start = combo[k] + 1;
  }
  const unsigned __int128 cap = std::numeric_limits<std::uint64_t>::max();
  return r > cap ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(r);
}

}  // namespace detail

MinWeightResult min_weight_in(const BitMatrix& space_basis,
                              const std::function<bool(const BitVector&)>& exclude,
                              std::size_t max_weight) {
  const std::size_t n = space_basis.cols();
  if (max_weight > n) max_weight = n;
  const BitMatrix h = kernel_basis(space_basis);  // v ∈ rowsp  ⇔  h vᵀ = 0
  const auto table = detail::make_table({&h}, n);
  MinWeightResult res;
  for (std::size_t w = 1; w <= max_weight; ++w) {
    std::vector<std::size_t> hit;
    std::uint64_t seen = 0;
    auto accept = [&](const std::uint64_t* s, const std::vector<std::size_t>& idx) {
      ++seen;
      if (!detail::all_zero(s, 0, table.words)) return false;
      if (!exclude) return true;
      BitVector v(n);
      for (auto i : idx) v.set(i);
      return !exclude(v);
    };
    for (std::size_t first = 0; first + w <= n; ++first) {
      if (detail::search_with_first(table, w, first, accept, hit)) {
        res.found = true;
        res.weight = w;
        res.vec = BitVector(n);
        for (auto i : hit) res.vec.set(i);
        res.enumerated += seen;
        return res;
      }
    }
    res.enumerated += seen;
  }
  res.lower_bound = true;
  res.weight = max_weight + 1;
  return res;
}

// ---------------------------------------------------------------- I/O

BitMatrix read_matrix_text(std::istream& in) {
  std::size_t r = 0, c = 0;
  if (!(in >> r >> c)) throw DomainError("matrix text: expected '<rows> <cols>' header");
  BitMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      int x = -1;
      if (!(in >> x) || (x != 0 && x != 1))
        throw DomainError("matrix text: bad entry at row " + std::to_string(i + 1) + ", column " +
                          std::to_string(j + 1));
      if (x) m.set(i, j);
    }
  return m;
}

void write_matrix_text(std::ostream& out, const BitMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << (m.get(i, j) ? '1' : '0');
    out << '\n';
  }
}

BitMatrix read_alist(std::istream& in) {
  std::size_t n = 0, mr = 0, maxc = 0, maxr = 0;
  if (!(in >> n >> mr >> maxc >> maxr)) throw DomainError("alist: bad header");
  std::vector<std::size_t> cw(n), rw(mr);
  for (auto& x : cw)
    if (!(in >> x)) throw DomainError("alist: bad column weights");
  for (auto& x : rw)
    if (!(in >> x)) throw DomainError("alist: bad row weights");
  BitMatrix m(mr, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t got = 0;
    for (std::size_t k = 0; k < maxc; ++k) {
      long long idx = 0;
      if (!(in >> idx)) {
        if (got == cw[j]) { in.clear(); break; }
        throw DomainError("alist: truncated column lists");
      }
      if (idx == 0) continue;
      if (idx < 0 || static_cast<std::size_t>(idx) > mr) throw DomainError("alist: row index out of range");
      m.set(static_cast<std::size_t>(idx - 1), j);
      ++got;
    }
  }
  // the row lists are redundant; read them when present and cross-check
  for (std::size_t i = 0; i < mr; ++i)
    for (std::size_t k = 0; k < maxr; ++k) {
      long long idx = 0;
      if (!(in >> idx)) return m;
      if (idx == 0) continue;
      if (idx < 0 || static_cast<std::size_t>(idx) > n || !m.get(i, static_cast<std::size_t>(idx - 1)))
        throw DomainError("alist: row and column lists disagree");
    }
  return m;
}

void write_alist(std::ostream& out, const BitMatrix& m) {
  const BitMatrix t = m.transpose();
  std::size_t maxc = 0, maxr = 0;
  for (std::size_t j = 0; j < t.rows(); ++j) maxc = std::max(maxc, t.row(j).weight());
  for (std::size_t i = 0; i < m.rows(); ++i) maxr = std::max(maxr, m.row(i).weight());
  out << m.cols() << ' ' << m.rows() << '\n' << maxc << ' ' << maxr << '\n';
  for (std::size_t j = 0; j < t.rows(); ++j) out << (j ? " " : "") << t.row(j).weight();
  out << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) out << (i ? " " : "") << m.row(i).weight();
  out << '\n';
  auto lists = [&](const BitMatrix& x, std::size_t width) {
    for (std::size_t r = 0; r < x.rows(); ++r) {
      auto s = x.row(r).support();
      for (std::size_t k = 0; k < width; ++k) out << (k ? " " : "") << (k < s.size() ? s[k] + 1 : 0);
      out << '\n';
    }
  };
  lists(t, maxc);
  lists(m, maxr);
}

static bool ends_with(const std::string& s, const std::string& suf) {
  return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

BitMatrix load_matrix(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw DomainError("cannot open matrix file '" + path + "'");
  return ends_with(path, ".alist") ? read_alist(f) : read_matrix_text(f);
}

void save_matrix(const std::string& path, const BitMatrix& m) {
  std::ofstream f(path);
  if (!f) throw DomainError("cannot write matrix file '" + path + "'");
  if (ends_with(path, ".alist")) write_alist(f, m); else write_matrix_text(f, m);
}

std::string matrix_to_string(const BitMatrix& m) {
  std::ostringstream o;
  write_matrix_text(o, m);
  return o.str();
}

BitMatrix matrix_from_string(const std::string& s) {
  std::istringstream i(s);
  return read_matrix_text(i);
}

}  // namespace qclc
