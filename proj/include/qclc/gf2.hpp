#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qclc {

// Raised for bad inputs (malformed files, dimension mismatches, violated
// preconditions).  The CLI maps it to exit code 1.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class BitVector {
public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  static BitVector from_string(std::string_view bits);
  static BitVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  bool operator[](std::size_t i) const { return get(i); }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& o);
  BitVector operator^(const BitVector& o) const { BitVector r = *this; r ^= o; return r; }
  BitVector& operator&=(const BitVector& o);
  BitVector operator&(const BitVector& o) const { BitVector r = *this; r &= o; return r; }

  bool dot(const BitVector& o) const;  // parity of the elementwise product
  std::size_t weight() const;
  bool any() const;
  std::vector<std::size_t> support() const;
  BitVector slice(std::size_t start, std::size_t len) const;
  BitVector concat(const BitVector& o) const;
  std::string str() const;

  const std::vector<std::uint64_t>& words() const { return w_; }
  std::vector<std::uint64_t>& words() { return w_; }

  bool operator==(const BitVector& o) const { return n_ == o.n_ && w_ == o.w_; }
  // Lexicographic on the bit sequence, bit 0 first.
  bool operator<(const BitVector& o) const;

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

class BitMatrix {
public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(const std::vector<BitVector>& rows, std::size_t cols);
  static BitMatrix from_strings(const std::vector<std::string>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
  const BitVector& row(std::size_t r) const { return rows_[r]; }
  BitVector& row(std::size_t r) { return rows_[r]; }
  const std::vector<BitVector>& row_list() const { return rows_; }
  void append_row(const BitVector& v);
  BitVector column(std::size_t c) const;

  BitMatrix transpose() const;
  BitMatrix operator*(const BitMatrix& o) const;   // ordinary product
  BitVector mul(const BitVector& v) const;         // M vᵀ
  bool is_zero() const;
  std::size_t nnz() const;

  BitMatrix select_columns(const std::vector<std::size_t>& cols) const;
  BitMatrix select_rows(const std::vector<std::size_t>& rows) const;

  bool operator==(const BitMatrix& o) const { return cols_ == o.cols_ && rows_ == o.rows_; }

private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

BitMatrix vstack(const BitMatrix& a, const BitMatrix& b);
BitMatrix hstack(const BitMatrix& a, const BitMatrix& b);
BitMatrix kron(const BitMatrix& a, const BitMatrix& b);

struct Rref {
  BitMatrix m;                       // nonzero rows only
  std::vector<std::size_t> pivots;   // pivot column of each row
};
Rref rref(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);
BitMatrix row_basis(const BitMatrix& m);  // rref rows
BitMatrix kernel_basis(const BitMatrix& m);
bool row_space_member(const BitMatrix& m, const BitVector& v);
BitMatrix stack_kernel(const std::vector<BitMatrix>& ms);
BitMatrix span_union(const BitMatrix& a, const BitMatrix& b);
bool same_row_space(const BitMatrix& a, const BitMatrix& b);
// Rows of `space` (in order) that extend rowsp(sub) to rowsp(sub)+rowsp(space).
BitMatrix complement_basis(const BitMatrix& sub, const BitMatrix& space);
// Some x with A xᵀ = b; false when the system is inconsistent.
bool solve(const BitMatrix& a, const BitVector& b, BitVector& x);
// For full-column-rank M, a matrix P with P·M = 𝟙.
BitMatrix left_inverse(const BitMatrix& m);

// b2 · X · b1ᵀ with X = [[0,𝟙],[𝟙,0]] on the (x|z) layout.
bool symplectic_product(const BitVector& b1, const BitVector& b2);

struct MinWeightResult {
  bool found = false;          // a vector was located
  bool lower_bound = false;    // cap hit: weight holds max_weight + 1
  std::size_t weight = 0;
  BitVector vec;
  std::uint64_t enumerated = 0;
};
// Minimum-weight nonzero v ∈ rowsp(space_basis) with !exclude(v), enumerating
// the ambient space by weight (lexicographic inside a weight class).
MinWeightResult min_weight_in(const BitMatrix& space_basis,
                              const std::function<bool(const BitVector&)>& exclude,
                              std::size_t max_weight);

// Text format: "<rows> <cols>" then rows of 0/1 tokens.
BitMatrix read_matrix_text(std::istream& in);
void write_matrix_text(std::ostream& out, const BitMatrix& m);
// MacKay alist sparse format.
BitMatrix read_alist(std::istream& in);
void write_alist(std::ostream& out, const BitMatrix& m);
BitMatrix load_matrix(const std::string& path);   // alist if the path ends in .alist
void save_matrix(const std::string& path, const BitMatrix& m);
std::string matrix_to_string(const BitMatrix& m);
BitMatrix matrix_from_string(const std::string& s);

}  // namespace qclc
