#include <doctest.h>

#include <map>

#include "quiverlin/monomial_maps.hpp"

using namespace quiverlin;

TEST_CASE("labels") {
  CHECK(string_labels(2) == std::vector<std::string>{"a_1", "a_2", "a_3"});
  CHECK(triangle_labels(2) == std::vector<std::string>{"c_1_1", "c_1_2", "c_2_2"});
}

TEST_CASE("E golden for RLRL") {
  const auto e = e_map(Quiver("RLRL"));
  std::map<std::string, std::string> expected{
      {"c_1_1", "a_2 - a_1"}, {"c_2_2", "a_5 - a_4"},  {"c_3_3", "a_9 - a_8"},   {"c_4_4", "a_13 - a_12"},
      {"c_5_5", "a_15"},      {"c_1_2", "a_1"},        {"c_2_3", "a_4 - a_6"},   {"c_3_4", "a_8 - a_10"},
      {"c_4_5", "a_12 - a_14"}, {"c_1_3", "a_6 - a_3"}, {"c_2_4", "a_10 - a_7"}, {"c_3_5", "a_14"},
      {"c_1_4", "a_3"},       {"c_2_5", "a_7 - a_11"}, {"c_1_5", "a_11"}};
  REQUIRE(e.coeffs.rows() == 15);
  for (std::size_t r = 0; r < 15; ++r) CHECK(row_expression(e, r) == expected.at(e.row_labels[r]));
}

TEST_CASE("D golden for RLRL") {
  const auto d = d_map(Quiver("RLRL"));
  const std::vector<std::string> expected{"c_1_2",
                                          "c_1_1 + c_1_2",
                                          "c_1_4",
                                          "c_1_3 + c_2_3 + c_1_4",
                                          "c_2_2 + c_1_3 + c_2_3 + c_1_4",
                                          "c_1_3 + c_1_4",
                                          "c_1_5 + c_2_5",
                                          "c_2_4 + c_3_4 + c_1_5 + c_2_5",
                                          "c_3_3 + c_2_4 + c_3_4 + c_1_5 + c_2_5",
                                          "c_2_4 + c_1_5 + c_2_5",
                                          "c_1_5",
                                          "c_3_5 + c_4_5",
                                          "c_4_4 + c_3_5 + c_4_5",
                                          "c_3_5",
                                          "c_5_5"};
  for (std::size_t r = 0; r < 15; ++r) CHECK(row_expression(d, r) == expected[r]);
}

TEST_CASE("D and E are inverse for every quiver") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& q : Quiver::all(n)) {
      const auto d = d_map(q);
      const auto e = e_map(q);
      const auto id = IntMatrix::identity(static_cast<std::size_t>(num_roots(n)));
      CHECK(d.coeffs * e.coeffs == id);
      CHECK(e.coeffs * d.coeffs == id);
      CHECK(std::abs(d.coeffs.determinant()) == 1);
      // D has 0/1 entries
      for (std::size_t r = 0; r < d.coeffs.rows(); ++r)
        for (auto v : d.coeffs.row(r)) CHECK((v == 0 || v == 1));
    }
}

TEST_CASE("apply") {
  const auto d = d_map(Quiver("L"));
  CHECK(quiverlin::apply(d, std::vector<int64_t>{1, 2, 3}).size() == 3);
  CHECK_THROWS_AS(quiverlin::apply(d, std::vector<int64_t>{1, 2}), std::invalid_argument);
  const auto e = e_map(Quiver("L"));
  const std::vector<int64_t> c{4, 0, 7};
  CHECK(quiverlin::apply(e, quiverlin::apply(d, c)) == c);
}
