#include "quiverlin/crystal_pbw.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

namespace quiverlin {

Triangle::Triangle(int n) : n_(n), c_(static_cast<std::size_t>(num_roots(n)), 0) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
}

Triangle::Triangle(int n, std::vector<int64_t> values) : n_(n), c_(std::move(values)) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (c_.size() != static_cast<std::size_t>(num_roots(n)))
    throw std::invalid_argument("triangle of rank " + std::to_string(n) + " needs " +
                                std::to_string(num_roots(n)) + " entries, got " +
                                std::to_string(c_.size()));
  for (auto v : c_)
    if (v < 0) throw std::invalid_argument("triangle entries must be nonnegative");
}

bool Triangle::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int64_t v) { return v == 0; });
}

std::vector<int64_t> Triangle::weight() const {
  std::vector<int64_t> w(static_cast<std::size_t>(n_), 0);
  for (std::size_t p = 0; p < c_.size(); ++p) {
    auto iv = interval_at(p);
    for (int v = iv.i; v <= iv.j; ++v) w[static_cast<std::size_t>(v - 1)] += c_[p];
  }
  return w;
}

namespace {

void check_letter(int j, const Triangle& t) {
  if (j < 1 || j > t.rank())
    throw std::invalid_argument("operator index " + std::to_string(j) + " outside [1," +
                                std::to_string(t.rank()) + "]");
}

// Argmax of f_ij = sum_{k<=i} c_kj - sum_{k<i} c_{k,j-1} over i in [1,j].
int argmax_f(int j, const Triangle& t, bool maximal) {
  int64_t f = 0, best = 0;
  int arg = 0;
  for (int i = 1; i <= j; ++i) {
    f += t(i, j);
    if (i > 1) f -= t(i - 1, j - 1);
    if (arg == 0 || f > best || (maximal && f == best)) {
      best = f;
      arg = i;
    }
  }
  return arg;
}

}  // namespace

void lower_in_place(int j, Triangle& t) {
  check_letter(j, t);
  const int i0 = argmax_f(j, t, true);
  t.at({i0, j}) += 1;
  if (i0 < j) {
    auto& below = t.at({i0, j - 1});
    if (below < 1) throw std::logic_error("F~ would decrement a zero entry");
    below -= 1;
  }
}

bool raise_in_place(int j, Triangle& t) {
  check_letter(j, t);
  const int i0 = argmax_f(j, t, false);
  auto& entry = t.at({i0, j});
  if (entry == 0) return false;
  entry -= 1;
  if (i0 < j) t.at({i0, j - 1}) += 1;
  return true;
}

Triangle f_tilde(int j, const Triangle& t) {
  Triangle out = t;
  lower_in_place(j, out);
  return out;
}

std::optional<Triangle> e_tilde(int j, const Triangle& t) {
  Triangle out = t;
  if (!raise_in_place(j, out)) return std::nullopt;
  return out;
}

namespace {

void check_length(const ReducedWord& word, std::span<const int64_t> a) {
  if (a.size() != word.size())
    throw std::invalid_argument("string vector of length " + std::to_string(a.size()) +
                                " for a word of length " + std::to_string(word.size()));
  for (auto v : a)
    if (v < 0) throw std::invalid_argument("string vector entries must be nonnegative");
}

}  // namespace

Triangle apply_monomial(const ReducedWord& word, std::span<const int64_t> a) {
  check_length(word, a);
  Triangle t(word.rank());
  for (std::size_t p = word.size(); p-- > 0;)
    for (int64_t s = 0; s < a[p]; ++s) lower_in_place(word[p], t);
  return t;
}

std::vector<int64_t> string_of(const ReducedWord& word, const Triangle& t) {
  if (t.rank() != word.rank()) throw std::invalid_argument("word and triangle ranks differ");
  Triangle rest = t;
  std::vector<int64_t> a(word.size(), 0);
  for (std::size_t p = 0; p < word.size(); ++p)
    while (raise_in_place(word[p], rest)) ++a[p];
  if (!rest.is_zero()) throw std::logic_error("string extraction left a nonzero residue");
  return a;
}

bool satisfies_string_condition(const ReducedWord& word, std::span<const int64_t> a) {
  check_length(word, a);
  Triangle t(word.rank());
  for (std::size_t u = word.size(); u-- > 0;) {
    Triangle probe = t;
    if (raise_in_place(word[u], probe)) return false;
    for (int64_t s = 0; s < a[u]; ++s) lower_in_place(word[u], t);
  }
  return true;
}

bool in_string_cone(const ReducedWord& word, std::span<const int64_t> a) {
  auto t = apply_monomial(word, a);
  auto back = string_of(word, t);
  return std::equal(back.begin(), back.end(), a.begin(), a.end());
}

Triangle s_map(const Quiver& q, std::span<const int64_t> a) {
  const auto word = word_for_quiver(q);
  auto t = apply_monomial(word, a);
  auto back = string_of(word, t);
  if (!std::equal(back.begin(), back.end(), a.begin(), a.end())) {
    std::string msg = "not in the string cone: round trip gives (";
    for (std::size_t p = 0; p < back.size(); ++p) msg += (p ? "," : "") + std::to_string(back[p]);
    throw NotAString(msg + ")", std::move(back));
  }
  return t;
}

std::vector<int64_t> s_inverse(const Quiver& q, const Triangle& t) {
  return string_of(word_for_quiver(q), t);
}

// ---------------------------------------------------------------------------

std::vector<int> apply_move(std::span<const int> letters, const WordMove& move) {
  std::vector<int> out(letters.begin(), letters.end());
  const auto p = move.position;
  if (move.kind == WordMove::Kind::Commute) {
    if (p + 1 >= out.size() || std::abs(out[p] - out[p + 1]) <= 1)
      throw std::invalid_argument("no commutation at position " + std::to_string(p));
    std::swap(out[p], out[p + 1]);
  } else {
    if (p + 2 >= out.size() || out[p] != out[p + 2] || std::abs(out[p] - out[p + 1]) != 1)
      throw std::invalid_argument("no braid move at position " + std::to_string(p));
    int i = out[p], j = out[p + 1];
    out[p] = j;
    out[p + 1] = i;
    out[p + 2] = j;
  }
  return out;
}

std::vector<WordMove> find_move_path(const ReducedWord& w1, const ReducedWord& w2) {
  if (w1.rank() != w2.rank()) throw std::invalid_argument("words of different rank");
  using Word = std::vector<int>;
  const Word start(w1.letters().begin(), w1.letters().end());
  const Word goal(w2.letters().begin(), w2.letters().end());
  std::map<Word, std::pair<Word, WordMove>> parent;
  std::deque<Word> queue{start};
  parent.emplace(start, std::pair<Word, WordMove>{start, {}});
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    if (cur == goal) break;
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      std::vector<WordMove> moves;
      if (std::abs(cur[p] - cur[p + 1]) > 1) moves.push_back({WordMove::Kind::Commute, p});
      if (p + 2 < cur.size() && cur[p] == cur[p + 2] && std::abs(cur[p] - cur[p + 1]) == 1)
        moves.push_back({WordMove::Kind::Braid, p});
      for (auto m : moves) {
        Word next = apply_move(cur, m);
        if (parent.emplace(next, std::pair<Word, WordMove>{cur, m}).second) queue.push_back(std::move(next));
      }
    }
  }
  if (!parent.contains(goal)) throw std::logic_error("no move path between reduced words");
  std::vector<WordMove> path;
  for (Word cur = goal; cur != start;) {
    const auto& [prev, move] = parent.at(cur);
    path.push_back(move);
    cur = prev;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

Triangle pbw_transition_along(const ReducedWord& w1, std::span<const WordMove> moves,
                              const Triangle& t) {
  if (t.rank() != w1.rank()) throw std::invalid_argument("word and triangle ranks differ");
  std::vector<int> letters(w1.letters().begin(), w1.letters().end());
  std::vector<int64_t> x;
  for (auto iv : roots_order(w1)) x.push_back(t.at(iv));
  for (const auto& m : moves) {
    letters = apply_move(letters, m);
    const auto p = m.position;
    if (m.kind == WordMove::Kind::Commute) {
      std::swap(x[p], x[p + 1]);
    } else {
      const int64_t a = x[p], b = x[p + 1], c = x[p + 2], low = std::min(a, c);
      x[p] = b + c - low;
      x[p + 1] = low;
      x[p + 2] = a + b - low;
    }
  }
  const ReducedWord w2(w1.rank(), letters);
  Triangle out(w1.rank());
  const auto roots = roots_order(w2);
  for (std::size_t p = 0; p < roots.size(); ++p) out.at(roots[p]) = x[p];
  return out;
}

Triangle pbw_transition(const ReducedWord& w1, const ReducedWord& w2, const Triangle& t) {
  const auto path = find_move_path(w1, w2);
  return pbw_transition_along(w1, path, t);
}

}  // namespace quiverlin
