#include "quiverlin/typea.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>

namespace quiverlin {

Interval interval_at(std::size_t index) {
  // j is the largest with (j-1)j/2 <= index
  int j = static_cast<int>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(index))) / 2.0);
  while (static_cast<std::size_t>((j - 1) * j / 2) > index) --j;
  while (static_cast<std::size_t>(j * (j + 1) / 2) <= index) ++j;
  int i = static_cast<int>(index - static_cast<std::size_t>((j - 1) * j / 2)) + 1;
  return {i, j};
}

std::vector<Interval> all_intervals(int n) {
  std::vector<Interval> out;
  out.reserve(static_cast<std::size_t>(num_roots(n)));
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= j; ++i) out.push_back({i, j});
  return out;
}

std::string interval_label(Interval iv) {
  return "c_" + std::to_string(iv.i) + "_" + std::to_string(iv.j);
}

// ---------------------------------------------------------------------------

Quiver::Quiver(std::string_view orientation) {
  if (orientation.empty())
    throw std::invalid_argument("quiver orientation must have at least one edge");
  for (char ch : orientation) {
    if (ch == 'L')
      edges_.push_back(Direction::Left);
    else if (ch == 'R')
      edges_.push_back(Direction::Right);
    else
      throw std::invalid_argument(std::string("quiver orientation must be over {L,R}, got '") +
                                  ch + "'");
  }
}

Quiver Quiver::all_left(int n) { return Quiver(std::string(static_cast<std::size_t>(n - 1), 'L')); }
Quiver Quiver::all_right(int n) { return Quiver(std::string(static_cast<std::size_t>(n - 1), 'R')); }

std::vector<Quiver> Quiver::all(int n) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
  std::vector<Quiver> out;
  const unsigned count = 1u << (n - 1);
  for (unsigned mask = 0; mask < count; ++mask) {
    std::string s;
    for (int m = n - 2; m >= 0; --m) s.push_back((mask >> m) & 1u ? 'R' : 'L');
    out.emplace_back(s);
  }
  return out;
}

std::string Quiver::str() const {
  std::string s;
  for (auto d : edges_) s.push_back(static_cast<char>(d));
  return s;
}

// ---------------------------------------------------------------------------

namespace {

// Index of the first letter that fails to lengthen the permutation, or the
// word length if every step is length-increasing.
std::size_t first_non_reduced(int n, std::span<const int> letters) {
  std::vector<int> perm(static_cast<std::size_t>(n + 1));
  std::iota(perm.begin(), perm.end(), 1);
  for (std::size_t p = 0; p < letters.size(); ++p) {
    int s = letters[p];
    if (s < 1 || s > n) return p;
    auto a = static_cast<std::size_t>(s - 1);
    // w * s_i is longer than w iff w(i) < w(i+1)
    if (perm[a] > perm[a + 1]) return p;
    std::swap(perm[a], perm[a + 1]);
  }
  return letters.size();
}

}  // namespace

bool is_reduced_w0(int n, std::span<const int> letters) {
  if (n < 1) return false;
  if (letters.size() != static_cast<std::size_t>(num_roots(n))) return false;
  return first_non_reduced(n, letters) == letters.size();
}

ReducedWord::ReducedWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
  if (n_ < 1) throw InvalidWord("rank must be positive", 0);
  std::size_t bad = first_non_reduced(n_, letters_);
  if (bad < letters_.size()) {
    int s = letters_[bad];
    if (s < 1 || s > n_)
      throw InvalidWord("letter " + std::to_string(s) + " at position " + std::to_string(bad + 1) +
                            " is outside [1," + std::to_string(n_) + "]",
                        bad);
    throw InvalidWord("prefix of length " + std::to_string(bad + 1) + " is not reduced", bad);
  }
  auto expected = static_cast<std::size_t>(num_roots(n_));
  if (letters_.size() != expected)
    throw InvalidWord("reduced word has length " + std::to_string(letters_.size()) +
                          ", w0 needs " + std::to_string(expected),
                      letters_.size());
}

ReducedWord word_k(int n) {
  std::vector<int> w;
  for (int m = 1; m <= n; ++m)
    for (int l = m; l >= 1; --l) w.push_back(l);
  return ReducedWord(n, std::move(w));
}

std::vector<Interval> roots_order(const ReducedWord& word) {
  const int n = word.rank();
  std::vector<Interval> out;
  out.reserve(word.size());
  // coordinates over simple roots, padded so v[0] and v[n+1] stay zero
  std::vector<int> v(static_cast<std::size_t>(n + 2));
  for (std::size_t p = 0; p < word.size(); ++p) {
    std::fill(v.begin(), v.end(), 0);
    v[static_cast<std::size_t>(word[p])] = 1;
    for (std::size_t q = p; q-- > 0;) {
      auto s = static_cast<std::size_t>(word[q]);
      // s_i(v) = v - <v, alpha_i^vee> alpha_i with the A_n Cartan matrix
      int pairing = 2 * v[s] - v[s - 1] - v[s + 1];
      v[s] -= pairing;
    }
    int lo = 0, hi = 0;
    for (int k = 1; k <= n; ++k) {
      auto c = v[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      if (c != 1) throw std::logic_error("root coordinate outside {0,1}");
      if (lo == 0) lo = k;
      if (hi != 0 && hi != k - 1) throw std::logic_error("root support is not an interval");
      hi = k;
    }
    if (lo == 0) throw std::logic_error("reflected root vanished");
    out.push_back({lo, hi});
  }
  return out;
}

bool is_compatible(const ReducedWord& word, const Quiver& q) {
  const int n = q.rank();
  if (word.rank() != n) return false;
  std::vector<Direction> edges;
  for (int m = 1; m < n; ++m) edges.push_back(q.edge(m));
  for (int v : word.letters()) {
    // left edge v-1 must point at v (R), right edge v must point at v (L)
    if (v > 1 && edges[static_cast<std::size_t>(v - 2)] != Direction::Right) return false;
    if (v < n && edges[static_cast<std::size_t>(v - 1)] != Direction::Left) return false;
    if (v > 1) edges[static_cast<std::size_t>(v - 2)] = Direction::Left;
    if (v < n) edges[static_cast<std::size_t>(v - 1)] = Direction::Right;
  }
  return true;
}

ReducedWord word_for_quiver(const Quiver& q) {
  const int n = q.rank();
  std::vector<int> lefts, rights;
  for (int m = 1; m < n; ++m) (q.edge(m) == Direction::Left ? lefts : rights).push_back(m);
  std::vector<int> w;
  auto down = [&w](int from, int to) {
    for (int l = from; l >= to; --l) w.push_back(l);
  };
  for (int l : lefts) down(l, 1);
  down(n, 1);
  for (auto it = rights.rbegin(); it != rights.rend(); ++it) down(n, n + 1 - *it);
  return ReducedWord(n, std::move(w));
}

std::vector<int> commutation_normal_form(std::span<const int> word) {
  std::vector<int> rest(word.begin(), word.end());
  std::vector<int> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    // candidates: letters commuting with everything before them
    std::size_t best = rest.size();
    for (std::size_t p = 0; p < rest.size(); ++p) {
      bool free = true;
      for (std::size_t r = 0; r < p && free; ++r) free = std::abs(rest[r] - rest[p]) > 1;
      if (free && (best == rest.size() || rest[p] < rest[best])) best = p;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

std::vector<ReducedWord> commutation_class(const ReducedWord& word) {
  using Word = std::vector<int>;
  std::set<Word> seen{Word(word.letters().begin(), word.letters().end())};
  std::deque<Word> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      if (std::abs(cur[p] - cur[p + 1]) <= 1) continue;
      Word next = cur;
      std::swap(next[p], next[p + 1]);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<ReducedWord> out;
  for (const auto& w : seen) out.emplace_back(word.rank(), w);
  return out;
}

bool commutation_equivalent(const ReducedWord& w1, const ReducedWord& w2) {
  if (w1.rank() != w2.rank()) return false;
  return commutation_normal_form(w1.letters()) == commutation_normal_form(w2.letters());
}

}  // namespace quiverlin
