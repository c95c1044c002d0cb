#include "quiverlin/ar_slices.hpp"

#include <algorithm>
#include <map>

#include "quiverlin/int_matrix.hpp"

namespace quiverlin {

namespace {

bool in_ar_quiver(int n, int z, int a) { return a >= 1 && a <= n && z >= 1 && z <= n + 1 - a; }

Interval interval_of(int z, int a) { return {z, z + a - 1}; }

}  // namespace

ArQuiver build_ar_quiver(int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  ArQuiver out;
  out.n = n;
  std::map<std::pair<int, int>, std::size_t> index;
  for (int a = 1; a <= n; ++a)
    for (int z = 1; z <= n + 1 - a; ++z) {
      index[{z, a}] = out.vertices.size();
      out.vertices.push_back({z, a, interval_of(z, a)});
    }
  for (const auto& v : out.vertices) {
    auto from = index.at({v.z, v.a});
    if (in_ar_quiver(n, v.z, v.a + 1)) out.arrows.emplace_back(from, index.at({v.z, v.a + 1}));
    if (v.a > 1 && in_ar_quiver(n, v.z + 1, v.a - 1))
      out.arrows.emplace_back(from, index.at({v.z + 1, v.a - 1}));
  }
  return out;
}

SlicePartition::SlicePartition(const Quiver& q) : quiver_(q) {
  const int n = q.rank();
  shift_.assign(static_cast<std::size_t>(n + 1), 0);
  for (int a = 2; a <= n; ++a)
    shift_[static_cast<std::size_t>(a)] =
        shift_[static_cast<std::size_t>(a - 1)] + (q.edge(a - 1) == Direction::Left ? 1 : 0);

  slice_of_.assign(static_cast<std::size_t>(num_roots(n)), 0);
  // a slice z meets row a at column z - shift(a); z beyond n + shift(n) is empty
  const int last = n + shift_[static_cast<std::size_t>(n)];
  for (int z = 1; z <= last; ++z)
    for (int a = 1; a <= n; ++a) {
      int col = column(z, a);
      if (in_ar_quiver(n, col, a)) {
        slice_of_[triangle_index(interval_of(col, a))] = z;
        num_slices_ = std::max(num_slices_, z);
      }
    }
}

int SlicePartition::column(int z, int a) const { return z - shift_.at(static_cast<std::size_t>(a)); }

std::vector<std::vector<Interval>> SlicePartition::parts() const {
  std::vector<std::vector<Interval>> out(static_cast<std::size_t>(num_slices_));
  const int n = rank();
  for (int z = 1; z <= num_slices_; ++z)
    for (int a = 1; a <= n; ++a) {
      int col = column(z, a);
      if (in_ar_quiver(n, col, a)) out[static_cast<std::size_t>(z - 1)].push_back(interval_of(col, a));
    }
  return out;
}

std::vector<int> SlicePartition::letters(int z) const {
  std::vector<bool> seen(static_cast<std::size_t>(rank() + 1), false);
  const int n = rank();
  for (int a = 1; a <= n; ++a) {
    int col = column(z, a);
    if (!in_ar_quiver(n, col, a)) continue;
    for (int v = col; v <= col + a - 1; ++v) seen[static_cast<std::size_t>(v)] = true;
  }
  std::vector<int> out;
  for (int v = n; v >= 1; --v)
    if (seen[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

SlicePartition slices_for(const Quiver& q) { return SlicePartition(q); }

std::vector<Component> components_of(const Quiver& q) {
  std::vector<Component> out;
  const int edges = q.rank() - 1;
  int start = 1;
  for (int m = 2; m <= edges + 1; ++m) {
    if (m <= edges && q.edge(m) == q.edge(start)) continue;
    out.push_back({q.edge(start), start, m - 1});
    start = m;
  }
  return out;
}

SliceRestriction slice_restriction(const SlicePartition& p, const Component& x, int z) {
  SliceRestriction out;
  if (z < 1 || z > p.num_slices()) return out;
  out.full = true;
  for (int a = x.first_row(); a <= x.last_row(); ++a) {
    int col = p.column(z, a);
    if (in_ar_quiver(p.rank(), col, a))
      out.items.push_back(interval_of(col, a));
    else
      out.full = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Interval modules over Q_k: every vertex space is k or 0 and every arrow
// v+1 -> v between two nonzero spaces acts as the identity.

int euler_form(Interval m, Interval n) {
  int form = 0;
  for (int v = std::max(m.i, n.i); v <= std::min(m.j, n.j); ++v) ++form;
  // arrows v+1 -> v
  for (int v = n.i; v <= n.j; ++v)
    if (m.contains(v + 1)) --form;
  return form;
}

int hom_dim(Interval m, Interval n) {
  const int lo = std::max(m.i, n.i), hi = std::min(m.j, n.j);
  if (lo > hi) return 0;
  const auto unknowns = static_cast<std::size_t>(hi - lo + 1);
  auto var = [lo](int v) { return static_cast<std::size_t>(v - lo); };
  auto shared = [lo, hi](int v) { return lo <= v && v <= hi; };

  std::vector<std::vector<int64_t>> eqs;
  const int top = std::max(m.j, n.j);
  for (int t = std::min(m.i, n.i); t < top; ++t) {
    const int s = t + 1;
    // intertwiner condition on the component M_s -> N_t
    if (!m.contains(s) || !n.contains(t)) continue;
    std::vector<int64_t> row(unknowns, 0);
    if (n.contains(s) && shared(s)) row[var(s)] += 1;
    if (m.contains(t) && shared(t)) row[var(t)] -= 1;
    eqs.push_back(std::move(row));
  }
  if (eqs.empty()) return static_cast<int>(unknowns);
  IntMatrix a(eqs.size(), unknowns);
  for (std::size_t r = 0; r < eqs.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) a(r, c) = eqs[r][c];
  return static_cast<int>(unknowns - a.rank());
}

int ext_dim(Interval m, Interval n) { return hom_dim(m, n) - euler_form(m, n); }

bool is_directed_partition(std::span<const std::vector<Interval>> parts) {
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (auto a : parts[k])
      for (auto b : parts[k])
        if (ext_dim(a, b) != 0) return false;
    for (std::size_t l = k + 1; l < parts.size(); ++l)
      for (auto a : parts[k])
        for (auto b : parts[l])
          if (ext_dim(a, b) != 0 || hom_dim(b, a) != 0) return false;
  }
  return true;
}

bool is_directed_partition(const SlicePartition& p) {
  auto parts = p.parts();
  return is_directed_partition(parts);
}

}  // namespace quiverlin
