#pragma once

// Type A_n combinatorics: quivers, reduced words for the longest element and
// the positive-root ordering a reduced word induces.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace quiverlin {

/// Positive root alpha_i + ... + alpha_j of A_n, 1 <= i <= j <= n.
struct Interval {
  int i = 1;
  int j = 1;

  int length() const { return j - i + 1; }
  bool contains(int vertex) const { return i <= vertex && vertex <= j; }
  auto operator<=>(const Interval&) const = default;
};

/// Number of positive roots of A_n.
constexpr int num_roots(int n) { return n * (n + 1) / 2; }

/// Position of [i,j] in the root order induced by k = (1,2,1,3,2,1,...).
/// This is the single coordinate order shared by every triangle-indexed
/// vector in the library.
constexpr std::size_t triangle_index(Interval iv) {
  return static_cast<std::size_t>((iv.j - 1) * iv.j / 2 + (iv.i - 1));
}

/// Inverse of triangle_index.
Interval interval_at(std::size_t index);

/// All intervals of A_n in triangle order.
std::vector<Interval> all_intervals(int n);

/// "c_i_j" label used in JSON and renderings.
std::string interval_label(Interval iv);

enum class Direction : char { Left = 'L', Right = 'R' };

/// Orientation of the A_n Dynkin diagram. Edge m joins vertices m and m+1;
/// R means m -> m+1, L means m <- m+1.
class Quiver {
public:
  /// Throws std::invalid_argument unless the word is over {L,R} and nonempty.
  explicit Quiver(std::string_view orientation);

  static Quiver all_left(int n);
  static Quiver all_right(int n);
  /// All 2^(n-1) quivers of rank n, in lexicographic order of their L/R word.
  static std::vector<Quiver> all(int n);

  int rank() const { return static_cast<int>(edges_.size()) + 1; }
  Direction edge(int m) const { return edges_.at(static_cast<std::size_t>(m - 1)); }
  std::string str() const;

  bool operator==(const Quiver&) const = default;

private:
  std::vector<Direction> edges_;
};

/// Thrown when a letter sequence is not a reduced word for w0.
class InvalidWord : public std::invalid_argument {
public:
  InvalidWord(const std::string& what, std::size_t prefix_index)
      : std::invalid_argument(what), prefix_index_(prefix_index) {}
  /// Length of the longest valid prefix; the failing letter sits at this
  /// 0-based position (or the word is complete but too short/long).
  std::size_t prefix_index() const { return prefix_index_; }

private:
  std::size_t prefix_index_;
};

/// A reduced expression for w0 in the Weyl group of A_n. Letters are 1-based.
class ReducedWord {
public:
  /// Validates; throws InvalidWord with the failing prefix index.
  ReducedWord(int n, std::vector<int> letters);

  int rank() const { return n_; }
  std::size_t size() const { return letters_.size(); }
  int operator[](std::size_t p) const { return letters_[p]; }
  std::span<const int> letters() const { return letters_; }

  bool operator==(const ReducedWord&) const = default;

private:
  int n_;
  std::vector<int> letters_;
};

/// k = (1, 2,1, 3,2,1, ..., n,...,1).
ReducedWord word_k(int n);

/// True iff the letters form a reduced word for w0 of A_n.
bool is_reduced_w0(int n, std::span<const int> letters);

/// (alpha^1, ..., alpha^N) with alpha^p = s_{i_1}...s_{i_{p-1}}(alpha_{i_p}).
std::vector<Interval> roots_order(const ReducedWord& word);

/// Each letter is a sink of the successively reflected quiver.
bool is_compatible(const ReducedWord& word, const Quiver& q);

/// The explicit compatible word (l_1 \ 1)...(l_a \ 1)(n \ 1)(n \ n+1-r_b)...(n \ n+1-r_1).
ReducedWord word_for_quiver(const Quiver& q);

/// Lexicographically smallest word in the commutation class of `word`.
std::vector<int> commutation_normal_form(std::span<const int> word);

/// All words reachable from `word` by commutations, sorted (breadth-first).
std::vector<ReducedWord> commutation_class(const ReducedWord& word);

/// w2 is reachable from w1 by swapping adjacent letters at distance > 1.
bool commutation_equivalent(const ReducedWord& w1, const ReducedWord& w2);

}  // namespace quiverlin
