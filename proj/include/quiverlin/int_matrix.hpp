#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace quiverlin {

/// Thrown when an exact integer computation would leave int64 range.
class IntegerOverflow : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

/// Dense row-major int64 matrix with exact (fraction-free) elimination.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const int64_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<int64_t> operator*(std::span<const int64_t> v) const;
  IntMatrix operator*(const IntMatrix& other) const;
  /// Row vector times matrix.
  std::vector<int64_t> left_multiply(std::span<const int64_t> row_vec) const;

  bool operator==(const IntMatrix&) const = default;

  int64_t determinant() const;
  std::size_t rank() const;

  /// det(A) and adj(A). Throws std::domain_error if singular.
  struct ScaledInverse scaled_inverse() const;

  /// Exact inverse; throws std::domain_error unless |det| == 1.
  IntMatrix unimodular_inverse() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<int64_t> data_;
};

struct ScaledInverse {
  int64_t det;
  IntMatrix adjugate;  // A * adjugate == det * I
};

namespace checked {
int64_t add(int64_t a, int64_t b);
int64_t sub(int64_t a, int64_t b);
int64_t mul(int64_t a, int64_t b);
}  // namespace checked

int64_t gcd_of(std::span<const int64_t> v);

}  // namespace quiverlin
