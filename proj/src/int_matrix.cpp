#include "quiverlin/int_matrix.hpp"

#include <numeric>
#include <utility>

namespace quiverlin {

namespace checked {
int64_t add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw IntegerOverflow("int64 addition overflow");
  return r;
}
int64_t sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw IntegerOverflow("int64 subtraction overflow");
  return r;
}
int64_t mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw IntegerOverflow("int64 multiplication overflow");
  return r;
}
}  // namespace checked

int64_t gcd_of(std::span<const int64_t> v) {
  int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<int64_t> IntMatrix::operator*(std::span<const int64_t> v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  std::vector<int64_t> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    int64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      if (auto a = (*this)(r, c)) acc = checked::add(acc, checked::mul(a, v[c]));
    out[r] = acc;
  }
  return out;
}

std::vector<int64_t> IntMatrix::left_multiply(std::span<const int64_t> row_vec) const {
  if (row_vec.size() != rows_) throw std::invalid_argument("dimension mismatch in vector-matrix product");
  std::vector<int64_t> out(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (row_vec[r] == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c)
      if (auto a = (*this)(r, c)) out[c] = checked::add(out[c], checked::mul(row_vec[r], a));
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      auto a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c)
        out(r, c) = checked::add(out(r, c), checked::mul(a, other(k, c)));
    }
  return out;
}

namespace {

// Forward fraction-free elimination over the first elim_cols columns. Every
// division is exact (Sylvester's identity). Returns the rank; `sign` tracks
// row swaps.
std::size_t bareiss(IntMatrix& m, std::size_t elim_cols, int& sign, int64_t& last_pivot) {
  std::size_t rank = 0;
  last_pivot = 1;
  sign = 1;
  for (std::size_t col = 0; col < elim_cols && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != rank) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(rank, c));
      sign = -sign;
    }
    const int64_t p = m(rank, col);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r <= rank) continue;
      const int64_t f = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (c == col) continue;
        int64_t v = checked::sub(checked::mul(p, m(r, c)), checked::mul(f, m(rank, c)));
        m(r, c) = v / last_pivot;
      }
      m(r, col) = 0;
    }
    last_pivot = p;
    ++rank;
  }
  return rank;
}

}  // namespace

int64_t IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  if (rows_ == 0) return 1;
  IntMatrix w = *this;
  int sign = 1;
  int64_t last = 1;
  std::size_t r = bareiss(w, cols_, sign, last);
  if (r < rows_) return 0;
  return sign * w(rows_ - 1, cols_ - 1);
}

std::size_t IntMatrix::rank() const {
  IntMatrix w = *this;
  int sign = 1;
  int64_t last = 1;
  return bareiss(w, cols_, sign, last);
}

ScaledInverse IntMatrix::scaled_inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = rows_;
  const int64_t det = determinant();
  if (det == 0) throw std::domain_error("matrix is singular");
  // Forward Bareiss on [A | I], then back substitution for det * A^{-1},
  // which is integral, so every division below is exact.
  IntMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
    aug(r, n + r) = 1;
  }
  int sign = 1;
  int64_t last = 1;
  bareiss(aug, n, sign, last);
  IntMatrix adj(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<int64_t> x(n, 0);
    for (std::size_t ri = n; ri-- > 0;) {
      // aug(ri,ri) * x_ri = det * rhs_ri - sum_{c>ri} aug(ri,c) x_c, where x = det * A^{-1} e_col
      int64_t acc = checked::mul(det, aug(ri, n + col));
      for (std::size_t c = ri + 1; c < n; ++c) acc = checked::sub(acc, checked::mul(aug(ri, c), x[c]));
      if (acc % aug(ri, ri) != 0) throw std::logic_error("non-integral adjugate entry");
      x[ri] = acc / aug(ri, ri);
    }
    for (std::size_t r = 0; r < n; ++r) adj(r, col) = x[r];
  }
  return {det, std::move(adj)};
}

IntMatrix IntMatrix::unimodular_inverse() const {
  auto [det, adj] = scaled_inverse();
  if (det != 1 && det != -1)
    throw std::domain_error("matrix is not unimodular (det = " + std::to_string(det) + ")");
  if (det == -1)
    for (std::size_t r = 0; r < adj.rows(); ++r)
      for (std::size_t c = 0; c < adj.cols(); ++c) adj(r, c) = -adj(r, c);
  return adj;
}

}  // namespace quiverlin
