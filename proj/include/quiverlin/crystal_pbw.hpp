#pragma once

// Kashiwara operators acting on PBW exponent triangles for the word k, string
// extraction along arbitrary reduced words, and the reparametrization between
// string and PBW coordinates.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "quiverlin/typea.hpp"

namespace quiverlin {

/// PBW exponents c_ij, stored in triangle order.
class Triangle {
public:
  explicit Triangle(int n);
  /// Throws std::invalid_argument on a size mismatch or a negative entry.
  Triangle(int n, std::vector<int64_t> values);

  int rank() const { return n_; }
  std::size_t size() const { return c_.size(); }
  int64_t at(Interval iv) const { return c_[triangle_index(iv)]; }
  int64_t& at(Interval iv) { return c_[triangle_index(iv)]; }
  int64_t operator()(int i, int j) const { return at({i, j}); }
  std::span<const int64_t> values() const { return c_; }
  bool is_zero() const;

  /// Coefficients of sum c_ij (alpha_i + ... + alpha_j) on alpha_1..alpha_n.
  std::vector<int64_t> weight() const;

  bool operator==(const Triangle&) const = default;

private:
  int n_;
  std::vector<int64_t> c_;
};

/// Lowering operator F~_j.
Triangle f_tilde(int j, const Triangle& t);
/// Raising operator E~_j; nullopt when it acts as zero.
std::optional<Triangle> e_tilde(int j, const Triangle& t);

/// In-place forms used by the sweeps. raise_in_place returns false (leaving
/// t untouched) when E~_j acts as zero.
void lower_in_place(int j, Triangle& t);
bool raise_in_place(int j, Triangle& t);

/// F~_{i_1}^{a_1} ... F~_{i_N}^{a_N} applied to the zero triangle, rightmost first.
Triangle apply_monomial(const ReducedWord& word, std::span<const int64_t> a);

/// Greedy string parametrization along `word`. Throws std::logic_error if
/// the extraction leaves a nonzero residue.
std::vector<int64_t> string_of(const ReducedWord& word, const Triangle& t);

/// Each E~_{i_u} kills the state built from factors u+1..N.
bool satisfies_string_condition(const ReducedWord& word, std::span<const int64_t> a);

/// string_of(word, apply_monomial(word, a)) == a.
bool in_string_cone(const ReducedWord& word, std::span<const int64_t> a);

/// Raised by s_map outside the string cone.
class NotAString : public std::invalid_argument {
public:
  NotAString(const std::string& what, std::vector<int64_t> round_trip)
      : std::invalid_argument(what), round_trip_(std::move(round_trip)) {}
  const std::vector<int64_t>& round_trip() const { return round_trip_; }

private:
  std::vector<int64_t> round_trip_;
};

/// String coordinates along word_for_quiver(q) to PBW coordinates.
Triangle s_map(const Quiver& q, std::span<const int64_t> a);
/// PBW coordinates to string coordinates along word_for_quiver(q).
std::vector<int64_t> s_inverse(const Quiver& q, const Triangle& t);

struct WordMove {
  enum class Kind { Commute, Braid };
  Kind kind = Kind::Commute;
  std::size_t position = 0;  // first of the 2 (or 3) letters touched

  bool operator==(const WordMove&) const = default;
};

/// Applies a move to the letters; throws std::invalid_argument if it does not fit.
std::vector<int> apply_move(std::span<const int> letters, const WordMove& move);

/// Shortest move sequence from w1 to w2 (breadth-first).
std::vector<WordMove> find_move_path(const ReducedWord& w1, const ReducedWord& w2);

/// Lusztig coordinates for w1, keyed by root, transported along `moves`.
Triangle pbw_transition_along(const ReducedWord& w1, std::span<const WordMove> moves,
                              const Triangle& t);

/// Lusztig coordinates for w1 to those for w2, both keyed by root.
Triangle pbw_transition(const ReducedWord& w1, const ReducedWord& w2, const Triangle& t);

}  // namespace quiverlin
