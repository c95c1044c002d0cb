#include "quiverlin/json_io.hpp"

#include <stdexcept>

namespace quiverlin {

Json word_to_json(const ReducedWord& word) {
  Json j = Json::array();
  for (int l : word.letters()) j.push_back(l);
  return j;
}

ReducedWord word_from_json(int n, const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("word must be a JSON array of integers");
  return ReducedWord(n, j.get<std::vector<int>>());
}

Json slices_to_json(const SlicePartition& p) {
  Json j = Json::object();
  for (auto iv : all_intervals(p.rank()))
    j[std::to_string(iv.i) + "," + std::to_string(iv.j)] = p.slice_of(iv);
  return j;
}

Json map_to_json(const IntLinearMap& map) {
  Json j = Json::object();
  for (std::size_t r = 0; r < map.coeffs.rows(); ++r) {
    Json row = Json::object();
    for (std::size_t c = 0; c < map.coeffs.cols(); ++c)
      if (auto k = map.coeffs(r, c)) row[map.col_labels[c]] = k;
    j[map.row_labels[r]] = std::move(row);
  }
  return j;
}

Json triangle_to_json(const Triangle& t) {
  Json j = Json::object();
  for (auto iv : all_intervals(t.rank())) j[interval_label(iv)] = t.at(iv);
  return j;
}

Triangle triangle_from_json(int n, const Json& j) {
  if (j.is_array()) return Triangle(n, j.get<std::vector<int64_t>>());
  if (!j.is_object()) throw std::invalid_argument("triangle must be a JSON object or array");
  Triangle t(n);
  for (const auto& [key, value] : j.items()) {
    bool found = false;
    for (auto iv : all_intervals(n))
      if (interval_label(iv) == key) {
        if (!value.is_number_integer() || value.get<int64_t>() < 0)
          throw std::invalid_argument("entry " + key + " must be a nonnegative integer");
        t.at(iv) = value.get<int64_t>();
        found = true;
      }
    if (!found) throw std::invalid_argument("unknown triangle entry '" + key + "'");
  }
  return t;
}

Json string_to_json(const ReducedWord& word, std::span<const int64_t> a) {
  return Json{{"word", word_to_json(word)}, {"a", std::vector<int64_t>(a.begin(), a.end())}};
}

Json cone_to_json(const ConeSpec& cone) {
  Json rows = Json::array();
  for (const auto& r : cone.rows) {
    Json coeffs = Json::object();
    for (std::size_t c = 0; c < r.coeffs.size(); ++c)
      if (r.coeffs[c] != 0) coeffs[cone.coord_labels.at(c)] = r.coeffs[c];
    rows.push_back({{"coeffs", std::move(coeffs)}, {"label", r.label}});
  }
  return {{"dim", cone.dim}, {"coords", cone.coord_labels}, {"rows", std::move(rows)}};
}

ConeSpec cone_from_json(const Json& j) {
  ConeSpec cone;
  cone.dim = j.at("dim").get<std::size_t>();
  cone.coord_labels = j.at("coords").get<std::vector<std::string>>();
  if (cone.coord_labels.size() != cone.dim) throw std::invalid_argument("coords do not match dim");
  for (const auto& r : j.at("rows")) {
    ConeRow row{std::vector<int64_t>(cone.dim, 0), r.value("label", "")};
    for (const auto& [key, value] : r.at("coeffs").items()) {
      auto it = std::find(cone.coord_labels.begin(), cone.coord_labels.end(), key);
      if (it == cone.coord_labels.end()) throw std::invalid_argument("unknown coordinate '" + key + "'");
      row.coeffs[static_cast<std::size_t>(it - cone.coord_labels.begin())] = value.get<int64_t>();
    }
    cone.rows.push_back(std::move(row));
  }
  return cone;
}

}  // namespace quiverlin
