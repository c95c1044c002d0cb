#include "quiverlin/cones.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "quiverlin/ar_slices.hpp"

namespace quiverlin {

ConeSpec normalize(ConeSpec cone) {
  std::vector<ConeRow> rows;
  rows.reserve(cone.rows.size());
  for (auto& r : cone.rows) {
    int64_t g = gcd_of(r.coeffs);
    if (g == 0) continue;
    for (auto& v : r.coeffs) v /= g;
    rows.push_back(std::move(r));
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ConeRow& a, const ConeRow& b) { return a.coeffs < b.coeffs; });
  rows.erase(std::unique(rows.begin(), rows.end(),
                         [](const ConeRow& a, const ConeRow& b) { return a.coeffs == b.coeffs; }),
             rows.end());
  cone.rows = std::move(rows);
  return cone;
}

std::vector<std::vector<int64_t>> row_set(const ConeSpec& cone) {
  std::vector<std::vector<int64_t>> out;
  for (auto& r : normalize(cone).rows) out.push_back(r.coeffs);
  return out;
}

std::string row_to_string(std::span<const int64_t> coeffs, std::span<const std::string> labels) {
  std::string lhs, rhs;
  auto term = [](std::string& side, int64_t k, const std::string& label) {
    if (!side.empty()) side += " + ";
    if (k != 1) side += std::to_string(k) + "*";
    side += label;
  };
  for (std::size_t c = 0; c < coeffs.size(); ++c) {
    if (coeffs[c] > 0) term(lhs, coeffs[c], labels[c]);
    if (coeffs[c] < 0) term(rhs, -coeffs[c], labels[c]);
  }
  return (lhs.empty() ? "0" : lhs) + " >= " + (rhs.empty() ? "0" : rhs);
}

namespace {

std::string trim(std::string s) {
  auto ws = [](unsigned char ch) { return std::isspace(ch) != 0; };
  while (!s.empty() && ws(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t b = 0;
  while (b < s.size() && ws(static_cast<unsigned char>(s[b]))) ++b;
  return s.substr(b);
}

void parse_side(const std::string& side, int64_t sign, std::span<const std::string> labels,
                std::vector<int64_t>& out) {
  std::string body = trim(side);
  if (body == "0") return;
  std::size_t start = 0;
  while (start <= body.size()) {
    auto plus = body.find('+', start);
    std::string tok = trim(body.substr(start, plus == std::string::npos ? std::string::npos : plus - start));
    int64_t k = 1;
    if (auto star = tok.find('*'); star != std::string::npos) {
      k = std::stoll(tok.substr(0, star));
      tok = trim(tok.substr(star + 1));
    }
    auto it = std::find(labels.begin(), labels.end(), tok);
    if (it == labels.end()) throw std::invalid_argument("unknown coordinate '" + tok + "'");
    out[static_cast<std::size_t>(it - labels.begin())] += sign * k;
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
}

}  // namespace

std::vector<int64_t> parse_inequality(const std::string& text, std::span<const std::string> labels) {
  auto ge = text.find(">=");
  if (ge == std::string::npos) throw std::invalid_argument("inequality needs '>=': " + text);
  std::vector<int64_t> out(labels.size(), 0);
  parse_side(text.substr(0, ge), 1, labels, out);
  parse_side(text.substr(ge + 2), -1, labels, out);
  return out;
}

ConeSpec lusztig_cone(const ReducedWord& word) {
  ConeSpec cone{word.size(), string_labels(word.rank()), {}};
  for (std::size_t s = 0; s < word.size(); ++s) {
    for (std::size_t t = s + 1; t < word.size(); ++t) {
      if (word[t] != word[s]) continue;
      std::vector<int64_t> row(word.size(), 0);
      row[s] = -1;
      row[t] = -1;
      for (std::size_t p = s + 1; p < t; ++p)
        if (std::abs(word[p] - word[s]) == 1) row[p] += 1;
      cone.rows.push_back({std::move(row), "pair " + std::to_string(s + 1) + "," + std::to_string(t + 1)});
      break;
    }
  }
  return cone;
}

namespace {

// Consecutive slice pairs (T_z(X), T_{z+1}(X)) with both sides nonempty.
struct SlicePair {
  std::size_t component;
  int z;
  SliceRestriction x, y;
  bool full() const { return x.full && y.full; }
};

std::vector<SlicePair> slice_pairs(const Quiver& q, const std::vector<Component>& comps) {
  const auto slices = slices_for(q);
  std::vector<SlicePair> out;
  for (std::size_t ci = 0; ci < comps.size(); ++ci)
    for (int z = 1; z < slices.num_slices(); ++z) {
      auto x = slice_restriction(slices, comps[ci], z);
      auto y = slice_restriction(slices, comps[ci], z + 1);
      if (x.items.empty() || y.items.empty()) continue;
      out.push_back({ci, z, std::move(x), std::move(y)});
    }
  return out;
}

class RowBuilder {
public:
  explicit RowBuilder(int n) : row_(static_cast<std::size_t>(num_roots(n)), 0) {}
  RowBuilder& plus(Interval iv) {
    row_[triangle_index(iv)] += 1;
    return *this;
  }
  RowBuilder& minus(Interval iv) {
    row_[triangle_index(iv)] -= 1;
    return *this;
  }
  std::vector<int64_t> take() { return std::move(row_); }

private:
  std::vector<int64_t> row_;
};

std::string tag(const char* family, const SlicePair& p) {
  return std::string(family) + " X" + std::to_string(p.component + 1) + " z=" + std::to_string(p.z);
}

ConeSpec triangle_cone(int n) {
  return {static_cast<std::size_t>(num_roots(n)), triangle_labels(n), {}};
}

}  // namespace

ConeSpec c_pbw_cone(const Quiver& q) {
  const int n = q.rank();
  const auto comps = components_of(q);
  auto cone = triangle_cone(n);
  for (const auto& p : slice_pairs(q, comps)) {
    const auto& x = p.x.items;
    const auto& y = p.y.items;
    if (comps[p.component].direction == Direction::Left) {
      if (!p.full()) continue;
      if (x.size() != y.size()) throw std::logic_error("full slice pair of unequal size");
      for (std::size_t a = 0; a < x.size(); ++a) {
        RowBuilder r(n);
        for (std::size_t t = a; t < x.size(); ++t) r.plus(x[t]).minus(y[t]);
        cone.rows.push_back({r.take(), tag("C1", p) + " a=" + std::to_string(a + 1)});
      }
    } else {
      const auto last = std::min(y.size(), x.size() - 1);
      for (std::size_t r = 0; r < last; ++r)
        cone.rows.push_back({RowBuilder(n).plus(x[r]).minus(y[r]).take(),
                             tag("C2", p) + " r=" + std::to_string(r + 1)});
    }
  }
  return cone;
}

ConeSpec l_pbw_cone(const Quiver& q) {
  const int n = q.rank();
  const auto comps = components_of(q);
  auto cone = triangle_cone(n);
  for (const auto& p : slice_pairs(q, comps)) {
    const auto& x = p.x.items;
    const auto& y = p.y.items;
    const std::size_t k = x.size(), l = y.size();
    const bool leftmost = p.component == 0;
    if (comps[p.component].direction == Direction::Left) {
      if (p.full()) {
        RowBuilder r(n);
        for (std::size_t t = 0; t < k; ++t) r.plus(x[t]).minus(y[t]);
        cone.rows.push_back({r.take(), tag("L1", p)});
      }
      for (std::size_t r = 2; r <= std::min(k, l - 1); ++r)
        cone.rows.push_back({RowBuilder(n).plus(y[r - 1]).minus(x[r - 1]).take(),
                             tag("L2", p) + " r=" + std::to_string(r)});
      if (leftmost) cone.rows.push_back({RowBuilder(n).plus(y[0]).minus(x[0]).take(), tag("L5", p)});
    } else {
      if (p.full()) {
        RowBuilder r(n);
        for (std::size_t t = 0; t < l; ++t) r.plus(y[t]).minus(x[t]);
        cone.rows.push_back({r.take(), tag("L3", p)});
      }
      for (std::size_t r = 2; r <= std::min(l, k - 1); ++r)
        cone.rows.push_back({RowBuilder(n).plus(x[r - 1]).minus(y[r - 1]).take(),
                             tag("L4", p) + " r=" + std::to_string(r)});
      if (leftmost) cone.rows.push_back({RowBuilder(n).plus(x[0]).minus(y[0]).take(), tag("L6", p)});
    }
  }
  return cone;
}

ConeSpec boundary_rows(const Quiver& q) {
  const int n = q.rank();
  const auto comps = components_of(q);
  auto cone = triangle_cone(n);
  for (const auto& p : slice_pairs(q, comps)) {
    const auto& x = p.x.items;
    const auto& y = p.y.items;
    if (comps[p.component].direction == Direction::Left) {
      cone.rows.push_back({RowBuilder(n).plus(y[0]).minus(x[0]).take(), tag("I", p)});
      if (p.full()) cone.rows.push_back({RowBuilder(n).plus(x.back()).minus(y.back()).take(), tag("II", p)});
    } else {
      cone.rows.push_back({RowBuilder(n).plus(x[0]).minus(y[0]).take(), tag("III", p)});
      if (p.full()) cone.rows.push_back({RowBuilder(n).plus(y.back()).minus(x.back()).take(), tag("IV", p)});
    }
  }
  return cone;
}

Membership membership(const ConeSpec& cone, std::span<const int64_t> x) {
  if (x.size() != cone.dim)
    throw std::invalid_argument("point of dimension " + std::to_string(x.size()) + " for a cone of dimension " +
                                std::to_string(cone.dim));
  for (std::size_t c = 0; c < x.size(); ++c)
    if (x[c] < 0)
      return {false, (c < cone.coord_labels.size() ? cone.coord_labels[c] : "x_" + std::to_string(c + 1)) +
                         " >= 0"};
  for (const auto& r : cone.rows) {
    int64_t acc = 0;
    for (std::size_t c = 0; c < x.size(); ++c) acc = checked::add(acc, checked::mul(r.coeffs[c], x[c]));
    if (acc < 0) return {false, r.label};
  }
  return {};
}

bool contains(const ConeSpec& cone, std::span<const int64_t> x) { return membership(cone, x).inside; }

namespace {

class Walker {
public:
  Walker(const ConeSpec& cone, int64_t bound, const PointVisitor& visit)
      : cone_(cone), bound_(bound), visit_(visit), dim_(cone.dim), point_(cone.dim, 0),
        partial_(cone.rows.size(), 0), touching_(cone.dim) {
    // headroom_[k][r]: the most row r can still gain from coordinates k..dim-1
    headroom_.assign(dim_ + 1, std::vector<int64_t>(cone.rows.size(), 0));
    for (std::size_t k = dim_; k-- > 0;)
      for (std::size_t r = 0; r < cone.rows.size(); ++r) {
        int64_t c = cone.rows[r].coeffs[k];
        headroom_[k][r] = headroom_[k + 1][r] + (c > 0 ? checked::mul(c, bound) : 0);
      }
    for (std::size_t r = 0; r < cone.rows.size(); ++r)
      for (std::size_t k = 0; k < dim_; ++k)
        if (cone.rows[r].coeffs[k] != 0) touching_[k].push_back(r);
  }

  // Assigns coordinate k = v; returns -1 if a row with negative coefficient
  // fails (larger v fails too), +1 if a row fails otherwise, 0 if viable.
  int assign(std::size_t k, int64_t v) {
    int status = 0;
    for (auto r : touching_[k]) {
      partial_[r] += cone_.rows[r].coeffs[k] * v;
      if (partial_[r] + headroom_[k + 1][r] < 0) status = cone_.rows[r].coeffs[k] < 0 ? -1 : std::max(status, 1);
    }
    point_[k] = v;
    return status;
  }
  void unassign(std::size_t k) {
    for (auto r : touching_[k]) partial_[r] -= cone_.rows[r].coeffs[k] * point_[k];
    point_[k] = 0;
  }

  // returns false once the visitor asks to stop
  bool walk(std::size_t k) {
    if (k == dim_) return visit_(point_);
    for (int64_t v = 0; v <= bound_; ++v) {
      int status = assign(k, v);
      bool keep_going = true;
      if (status == 0) keep_going = walk(k + 1);
      unassign(k);
      if (!keep_going) return false;
      if (status < 0) break;
    }
    return true;
  }

  bool walk_from(std::span<const int64_t> prefix) {
    if (prefix.size() > dim_) throw std::invalid_argument("prefix longer than the cone dimension");
    bool viable = true;
    for (std::size_t k = 0; k < prefix.size(); ++k) {
      if (prefix[k] < 0 || prefix[k] > bound_) viable = false;
      if (assign(k, prefix[k]) != 0) viable = false;
    }
    return viable ? walk(prefix.size()) : true;
  }

private:
  const ConeSpec& cone_;
  int64_t bound_;
  const PointVisitor& visit_;
  std::size_t dim_;
  std::vector<int64_t> point_;
  std::vector<int64_t> partial_;
  std::vector<std::vector<std::size_t>> touching_;
  std::vector<std::vector<int64_t>> headroom_;
};

}  // namespace

void enumerate_points(const ConeSpec& cone, int64_t bound, const PointVisitor& visit) {
  enumerate_points_with_prefix(cone, bound, {}, visit);
}

void enumerate_points_with_prefix(const ConeSpec& cone, int64_t bound, std::span<const int64_t> prefix,
                                  const PointVisitor& visit) {
  if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
  for (const auto& r : cone.rows)
    if (r.coeffs.size() != cone.dim) throw std::invalid_argument("row of the wrong dimension: " + r.label);
  Walker(cone, bound, visit).walk_from(prefix);
}

std::vector<std::vector<int64_t>> collect_points(const ConeSpec& cone, int64_t bound) {
  std::vector<std::vector<int64_t>> out;
  enumerate_points(cone, bound, [&out](std::span<const int64_t> x) {
    out.emplace_back(x.begin(), x.end());
    return true;
  });
  return out;
}

ConeSpec cone_image_under(const IntLinearMap& map, const ConeSpec& cone, bool include_nonnegativity) {
  if (map.coeffs.cols() != cone.dim || map.coeffs.rows() != map.coeffs.cols())
    throw std::invalid_argument("map and cone dimensions do not match");
  // x = map^{-1} y, and map^{-1} = adjugate / det; scaling by |det| keeps each row's sense
  auto [det, adj] = map.coeffs.scaled_inverse();
  const int64_t sign = det > 0 ? 1 : -1;
  ConeSpec out{cone.dim, map.row_labels, {}};
  auto transport = [&](std::vector<int64_t> row, std::string label) {
    auto image = adj.left_multiply(row);
    for (auto& v : image) v *= sign;
    out.rows.push_back(ConeRow{std::move(image), std::move(label)});
  };
  for (const auto& r : cone.rows) transport(r.coeffs, r.label);
  if (include_nonnegativity)
    for (std::size_t c = 0; c < cone.dim; ++c) {
      std::vector<int64_t> unit(cone.dim, 0);
      unit[c] = 1;
      transport(std::move(unit),
                (c < cone.coord_labels.size() ? cone.coord_labels[c] : "x_" + std::to_string(c + 1)) + " >= 0");
    }
  return normalize(std::move(out));
}

}  // namespace quiverlin
