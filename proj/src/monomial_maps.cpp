#include "quiverlin/monomial_maps.hpp"

#include <stdexcept>

#include "quiverlin/ar_slices.hpp"

namespace quiverlin {

std::vector<std::string> string_labels(int n) {
  std::vector<std::string> out;
  for (int p = 1; p <= num_roots(n); ++p) out.push_back("a_" + std::to_string(p));
  return out;
}

std::vector<std::string> triangle_labels(int n) {
  std::vector<std::string> out;
  for (auto iv : all_intervals(n)) out.push_back(interval_label(iv));
  return out;
}

IntLinearMap d_map(const Quiver& q) {
  const int n = q.rank();
  const auto dim = static_cast<std::size_t>(num_roots(n));
  const auto word = word_for_quiver(q);
  const auto slices = slices_for(q);
  const auto parts = slices.parts();

  IntLinearMap out{n, IntMatrix(dim, dim), string_labels(n), triangle_labels(n)};
  std::size_t pos = 0;
  for (int z = 1; z <= slices.num_slices(); ++z) {
    for (int letter : slices.letters(z)) {
      if (pos >= dim || word[pos] != letter)
        throw std::logic_error("slice letters do not reproduce word_for_quiver");
      for (auto iv : parts[static_cast<std::size_t>(z - 1)])
        if (iv.contains(letter)) out.coeffs(pos, triangle_index(iv)) = 1;
      ++pos;
    }
  }
  if (pos != dim) throw std::logic_error("slice letters do not reproduce word_for_quiver");
  return out;
}

IntLinearMap e_map(const Quiver& q) {
  auto d = d_map(q);
  IntMatrix inverse;
  try {
    inverse = d.coeffs.unimodular_inverse();
  } catch (const std::domain_error& e) {
    throw std::logic_error(std::string("D is not unimodular: ") + e.what());
  }
  return {d.n, std::move(inverse), d.col_labels, d.row_labels};
}

std::vector<int64_t> apply(const IntLinearMap& map, std::span<const int64_t> v) {
  if (v.size() != map.coeffs.cols())
    throw std::invalid_argument("vector of length " + std::to_string(v.size()) + " for a map with " +
                                std::to_string(map.coeffs.cols()) + " columns");
  return map.coeffs * v;
}

std::string row_expression(const IntLinearMap& map, std::size_t row) {
  std::string pos, neg;
  auto append = [](std::string& s, const std::string& label, int64_t k) {
    if (!s.empty()) s += " + ";
    if (k != 1) s += std::to_string(k) + "*";
    s += label;
  };
  for (std::size_t c = 0; c < map.coeffs.cols(); ++c) {
    auto k = map.coeffs(row, c);
    if (k > 0) append(pos, map.col_labels[c], k);
    if (k < 0) append(neg, map.col_labels[c], -k);
  }
  if (pos.empty() && neg.empty()) return "0";
  if (neg.empty()) return pos;
  if (pos.empty()) return "-(" + neg + ")";
  return pos + " - " + (neg.find('+') == std::string::npos ? neg : "(" + neg + ")");
}

}  // namespace quiverlin
