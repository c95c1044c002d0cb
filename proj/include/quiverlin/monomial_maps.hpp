#pragma once

// The additive map D from PBW exponents (triangle coordinates) to monomial
// exponents along word_for_quiver(q), and its integer inverse E.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "quiverlin/int_matrix.hpp"
#include "quiverlin/typea.hpp"

namespace quiverlin {

struct IntLinearMap {
  int n = 0;
  IntMatrix coeffs;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
};

/// "a_1", ..., "a_N".
std::vector<std::string> string_labels(int n);
/// "c_i_j" in triangle order.
std::vector<std::string> triangle_labels(int n);

/// Rows a_p (word positions of word_for_quiver(q)), columns c_i_j.
IntLinearMap d_map(const Quiver& q);

/// Rows c_i_j, columns a_p. Throws std::logic_error if D is not unimodular.
IntLinearMap e_map(const Quiver& q);

/// Exact product; throws std::invalid_argument on a dimension mismatch.
std::vector<int64_t> apply(const IntLinearMap& map, std::span<const int64_t> v);

/// Row rendered as a signed sum of column labels, e.g. "a_2 - a_1".
std::string row_expression(const IntLinearMap& map, std::size_t row);

}  // namespace quiverlin
