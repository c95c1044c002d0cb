#pragma once

// The Auslander-Reiten quiver of the linearly oriented quiver Q_k (arrows
// i <- i+1), its slices with respect to a second quiver, and the component
// structure of that quiver.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "quiverlin/typea.hpp"

namespace quiverlin {

/// Vertex (z, a) of the translation quiver; it carries [z, z+a-1].
struct ArVertex {
  int z = 1;
  int a = 1;
  Interval interval;
};

struct ArQuiver {
  int n = 0;
  std::vector<ArVertex> vertices;
  /// Arrows as index pairs into `vertices`.
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
};

/// Vertices in row-major order (a = 1 first, z increasing).
ArQuiver build_ar_quiver(int n);

/// Partition of the positive roots into the slices induced by a quiver.
class SlicePartition {
public:
  explicit SlicePartition(const Quiver& q);

  const Quiver& quiver() const { return quiver_; }
  int rank() const { return quiver_.rank(); }
  int num_slices() const { return num_slices_; }

  /// Slice number (>= 1) of an interval.
  int slice_of(Interval iv) const { return slice_of_[triangle_index(iv)]; }

  /// Column of the slice-z vertex in row a; may fall outside A(Q_k).
  int column(int z, int a) const;

  /// T_z for z = 1..num_slices(), each ordered by row.
  std::vector<std::vector<Interval>> parts() const;

  /// Letters of the slice in the order used by the word (decreasing).
  std::vector<int> letters(int z) const;

private:
  Quiver quiver_;
  std::vector<int> slice_of_;
  // cumulative count of L edges among the first a-1 edges
  std::vector<int> shift_;
  int num_slices_ = 0;
};

SlicePartition slices_for(const Quiver& q);

/// Maximal run of equal-direction edges; it spans rows first_edge..last_edge+1.
struct Component {
  Direction direction = Direction::Left;
  int first_edge = 1;
  int last_edge = 1;

  int first_row() const { return first_edge; }
  int last_row() const { return last_edge + 1; }
  bool operator==(const Component&) const = default;
};

/// Components from left to right.
std::vector<Component> components_of(const Quiver& q);

struct SliceRestriction {
  std::vector<Interval> items;  // T_z(X), ordered by row
  bool full = false;            // S_z(X) lies entirely in A(Q_k)
};

SliceRestriction slice_restriction(const SlicePartition& p, const Component& x, int z);

/// dim Hom(X_m, X_n) for interval modules over Q_k.
int hom_dim(Interval m, Interval n);
/// dim Ext^1(X_m, X_n) over Q_k.
int ext_dim(Interval m, Interval n);
/// Euler form <dim m, dim n> of Q_k.
int euler_form(Interval m, Interval n);

bool is_directed_partition(std::span<const std::vector<Interval>> parts);
bool is_directed_partition(const SlicePartition& p);

}  // namespace quiverlin
