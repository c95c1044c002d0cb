#include <doctest.h>

#include <random>

#include "quiverlin/int_matrix.hpp"

using namespace quiverlin;

namespace {

IntMatrix from_rows(std::vector<std::vector<int64_t>> rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

}  // namespace

TEST_CASE("checked arithmetic") {
  CHECK(checked::add(2, 3) == 5);
  CHECK(checked::mul(-4, 6) == -24);
  CHECK_THROWS_AS(checked::add(INT64_MAX, 1), IntegerOverflow);
  CHECK_THROWS_AS(checked::sub(INT64_MIN, 1), IntegerOverflow);
  CHECK_THROWS_AS(checked::mul(INT64_MAX / 2, 3), IntegerOverflow);
  CHECK(gcd_of(std::vector<int64_t>{6, -9, 15}) == 3);
  CHECK(gcd_of(std::vector<int64_t>{0, 0}) == 0);
}

TEST_CASE("products") {
  auto a = from_rows({{1, 2}, {3, 4}});
  auto b = from_rows({{0, 1}, {1, 0}});
  CHECK(a * b == from_rows({{2, 1}, {4, 3}}));
  CHECK(a * std::vector<int64_t>{1, 1} == std::vector<int64_t>{3, 7});
  CHECK(a.left_multiply(std::vector<int64_t>{1, 1}) == std::vector<int64_t>{4, 6});
  CHECK(IntMatrix::identity(2) * a == a);
}

TEST_CASE("determinant and rank") {
  CHECK(from_rows({{1, 2}, {3, 4}}).determinant() == -2);
  CHECK(from_rows({{0, 1}, {1, 0}}).determinant() == -1);
  CHECK(from_rows({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}).determinant() == 30);
  CHECK(from_rows({{1, 2}, {2, 4}}).determinant() == 0);
  CHECK(from_rows({{1, 2}, {2, 4}}).rank() == 1);
  CHECK(from_rows({{1, 2, 3}, {0, 0, 0}, {2, 4, 7}}).rank() == 2);
  CHECK(IntMatrix(2, 3).rank() == 0);
}

TEST_CASE("inverses") {
  auto a = from_rows({{2, 1}, {1, 1}});
  CHECK(a.unimodular_inverse() == from_rows({{1, -1}, {-1, 2}}));
  auto s = from_rows({{1, 2}, {3, 4}}).scaled_inverse();
  CHECK(s.det == -2);
  CHECK(from_rows({{1, 2}, {3, 4}}) * s.adjugate == from_rows({{-2, 0}, {0, -2}}));
  CHECK_THROWS_AS(from_rows({{1, 2}, {3, 4}}).unimodular_inverse(), std::domain_error);
  CHECK_THROWS(from_rows({{1, 2}, {2, 4}}).scaled_inverse());
}

TEST_CASE("random unimodular matrices invert exactly") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(0, 5), coef(-2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = IntMatrix::identity(6);
    for (int step = 0; step < 12; ++step) {
      std::size_t r = static_cast<std::size_t>(pick(rng)), s = static_cast<std::size_t>(pick(rng));
      if (r == s) continue;
      int64_t k = coef(rng);
      for (std::size_t c = 0; c < 6; ++c) m(r, c) += k * m(s, c);
    }
    CHECK(std::abs(m.determinant()) == 1);
    auto inv = m.unimodular_inverse();
    CHECK(m * inv == IntMatrix::identity(6));
    CHECK(inv * m == IntMatrix::identity(6));
  }
}
