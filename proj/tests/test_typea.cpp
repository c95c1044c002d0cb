#include <doctest.h>

#include <algorithm>
#include <deque>
#include <set>

#include "quiverlin/typea.hpp"

using namespace quiverlin;

namespace {

// Oracle: breadth-first search over commutation moves.
bool bfs_equivalent(std::vector<int> from, const std::vector<int>& to) {
  std::set<std::vector<int>> seen{from};
  std::deque<std::vector<int>> queue{from};
  while (!queue.empty()) {
    auto w = queue.front();
    queue.pop_front();
    if (w == to) return true;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (std::abs(w[p] - w[p + 1]) < 2) continue;
      auto v = w;
      std::swap(v[p], v[p + 1]);
      if (seen.insert(v).second) queue.push_back(v);
    }
  }
  return false;
}

std::vector<int> to_vec(const ReducedWord& w) { return {w.letters().begin(), w.letters().end()}; }

}  // namespace

TEST_CASE("triangle order and labels") {
  CHECK(num_roots(5) == 15);
  CHECK(triangle_index({1, 1}) == 0);
  CHECK(triangle_index({1, 2}) == 1);
  CHECK(triangle_index({2, 2}) == 2);
  CHECK(triangle_index({1, 3}) == 3);
  CHECK(triangle_index({3, 3}) == 5);
  for (std::size_t k = 0; k < 21; ++k) CHECK(triangle_index(interval_at(k)) == k);
  CHECK(interval_label({2, 4}) == "c_2_4");
  CHECK(all_intervals(3).size() == 6);
}

TEST_CASE("quiver parsing") {
  Quiver q("RLRL");
  CHECK(q.rank() == 5);
  CHECK(q.str() == "RLRL");
  CHECK(q.edge(1) == Direction::Right);
  CHECK(q.edge(2) == Direction::Left);
  CHECK_THROWS_AS(Quiver("RXL"), std::invalid_argument);
  CHECK(Quiver::all(4).size() == 8);
  CHECK(Quiver::all_left(3).str() == "LL");
  CHECK(Quiver::all_right(3).str() == "RR");
}

TEST_CASE("reduced words") {
  CHECK(to_vec(word_k(3)) == std::vector<int>{1, 2, 1, 3, 2, 1});
  CHECK(is_reduced_w0(2, std::vector<int>{1, 2, 1}));
  CHECK(is_reduced_w0(2, std::vector<int>{2, 1, 2}));
  CHECK_FALSE(is_reduced_w0(2, std::vector<int>{1, 1, 2}));
  CHECK_FALSE(is_reduced_w0(2, std::vector<int>{1, 2}));

  try {
    ReducedWord(2, {1, 1, 2});
    FAIL("expected InvalidWord");
  } catch (const InvalidWord& e) {
    CHECK(e.prefix_index() == 1);
  }
  CHECK_THROWS_AS(ReducedWord(2, {1, 2}), InvalidWord);
  CHECK_THROWS_AS(ReducedWord(2, {1, 3, 1}), InvalidWord);
}

TEST_CASE("roots order of word_k") {
  auto roots = roots_order(word_k(2));
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == Interval{1, 1});
  CHECK(roots[1] == Interval{1, 2});
  CHECK(roots[2] == Interval{2, 2});
  // every word of w0 enumerates every positive root once
  for (const auto& q : Quiver::all(5)) {
    auto r = roots_order(word_for_quiver(q));
    std::sort(r.begin(), r.end(), [](Interval a, Interval b) { return triangle_index(a) < triangle_index(b); });
    CHECK(r == all_intervals(5));
  }
}

TEST_CASE("word_for_quiver golden") {
  CHECK(to_vec(word_for_quiver(Quiver("RLRL"))) ==
        std::vector<int>{2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 5, 4, 3, 5});
  CHECK(commutation_equivalent(word_for_quiver(Quiver::all_left(5)), word_k(5)));
}

TEST_CASE("word_for_quiver is compatible and reduced for every quiver") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& q : Quiver::all(n)) {
      const auto w = word_for_quiver(q);
      CHECK(is_reduced_w0(n, w.letters()));
      CHECK(is_compatible(w, q));
      for (const auto& other : Quiver::all(n))
        if (!(other == q)) CHECK_FALSE(is_compatible(w, other));
    }
  }
}

TEST_CASE("commutation equivalence agrees with BFS") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<ReducedWord> words;
    for (const auto& q : Quiver::all(n))
      for (auto& w : commutation_class(word_for_quiver(q))) words.push_back(w);
    // a braid move away from word_k lands outside its commutation class
    auto braided = to_vec(word_k(n));
    braided[0] = 2, braided[1] = 1, braided[2] = 2;
    words.push_back(ReducedWord(n, braided));
    for (const auto& a : words)
      for (const auto& b : words) {
        if (a.rank() != b.rank()) continue;
        CHECK(commutation_equivalent(a, b) == bfs_equivalent(to_vec(a), to_vec(b)));
      }
  }
  CHECK_FALSE(commutation_equivalent(ReducedWord(2, {1, 2, 1}), ReducedWord(2, {2, 1, 2})));
}

TEST_CASE("commutation class members are compatible with the same quiver") {
  for (const auto& q : Quiver::all(4)) {
    auto cls = commutation_class(word_for_quiver(q));
    CHECK(std::is_sorted(cls.begin(), cls.end(),
                         [](const ReducedWord& a, const ReducedWord& b) { return std::ranges::lexicographical_compare(a.letters(), b.letters()); }));
    for (const auto& w : cls) {
      CHECK(is_compatible(w, q));
      CHECK(commutation_normal_form(w.letters()) == commutation_normal_form(word_for_quiver(q).letters()));
    }
  }
}
