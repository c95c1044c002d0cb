#pragma once

// Polyhedral cones given by homogeneous integer inequalities r . x >= 0 over
// nonnegative integer points: the Lusztig cone of a reduced word, and the
// degeneration and PBW-Lusztig cones of a quiver in triangle coordinates.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "quiverlin/monomial_maps.hpp"
#include "quiverlin/typea.hpp"

namespace quiverlin {

struct ConeRow {
  std::vector<int64_t> coeffs;
  std::string label;
};

struct ConeSpec {
  std::size_t dim = 0;
  std::vector<std::string> coord_labels;
  std::vector<ConeRow> rows;
};

/// Divide rows by their gcd, drop zero rows, sort by coefficients and
/// deduplicate (the first label of a duplicate group survives).
ConeSpec normalize(ConeSpec cone);

/// Normalized coefficient rows, for comparing systems symbolically.
std::vector<std::vector<int64_t>> row_set(const ConeSpec& cone);

/// "lhs >= rhs" with coefficient-weighted labels.
std::string row_to_string(std::span<const int64_t> coeffs, std::span<const std::string> labels);

/// Parses "a_2 + a_4 >= a_1 + a_5" (also "2*x" terms and a bare "0" side)
/// against the given labels. Throws std::invalid_argument.
std::vector<int64_t> parse_inequality(const std::string& text, std::span<const std::string> labels);

/// One row per pair of consecutive equal letters s < s', in order of s.
ConeSpec lusztig_cone(const ReducedWord& word);

/// Tail-sum rows of left components and entrywise rows of right components.
ConeSpec c_pbw_cone(const Quiver& q);

/// Rows of the PBW-Lusztig cone of q.
ConeSpec l_pbw_cone(const Quiver& q);

/// The four families of boundary inequalities that every point of
/// l_pbw_cone(q) satisfies: first entries across all slice pairs, last
/// entries across fully contained slice pairs.
ConeSpec boundary_rows(const Quiver& q);

struct Membership {
  bool inside = true;
  std::string violated;  // label of the first violated row, or "x >= 0"
};

/// Checks x >= 0 and every row. Throws std::invalid_argument on a dimension mismatch.
Membership membership(const ConeSpec& cone, std::span<const int64_t> x);
bool contains(const ConeSpec& cone, std::span<const int64_t> x);

/// Calls visit(x) for every point of the cone with coordinates in
/// [0, bound], in lexicographic order. Returning false from visit stops the
/// walk. Partial assignments are pruned as soon as some row cannot recover.
using PointVisitor = std::function<bool(std::span<const int64_t>)>;
void enumerate_points(const ConeSpec& cone, int64_t bound, const PointVisitor& visit);

/// The same walk restricted to points whose leading coordinates equal prefix.
void enumerate_points_with_prefix(const ConeSpec& cone, int64_t bound, std::span<const int64_t> prefix,
                                  const PointVisitor& visit);

std::vector<std::vector<int64_t>> collect_points(const ConeSpec& cone, int64_t bound);

/// The cone {map(x) : x in cone}, described in the map's output coordinates.
/// With include_nonnegativity, the rows x_i >= 0 are transported as well.
/// Throws std::domain_error if the map is singular.
ConeSpec cone_image_under(const IntLinearMap& map, const ConeSpec& cone,
                          bool include_nonnegativity = false);

}  // namespace quiverlin
