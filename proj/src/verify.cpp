#include "quiverlin/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

namespace quiverlin {

namespace {

using Vec = std::vector<int64_t>;

Vec to_vec(std::span<const int64_t> x) { return Vec(x.begin(), x.end()); }

bool operator_less(const Counterexample& a, const Counterexample& b) {
  return std::tie(a.input, a.check, a.detail) < std::tie(b.input, b.check, b.detail);
}

// Failures of one shard of a sweep; shards are enumerated in lexicographic
// order, so keeping each shard's first few keeps the global first few.
struct Tally {
  std::size_t cap;
  uint64_t points = 0;
  uint64_t failures = 0;
  std::vector<Counterexample> recorded;

  explicit Tally(std::size_t max_recorded) : cap(max_recorded) {}
  void fail(Counterexample c) {
    ++failures;
    if (recorded.size() < cap) recorded.push_back(std::move(c));
  }
};

void merge_into(VerificationReport& report, std::vector<Tally>& tallies, std::size_t cap) {
  for (auto& t : tallies) {
    report.points_checked += t.points;
    report.failure_count += t.failures;
    for (auto& c : t.recorded) report.failures.push_back(std::move(c));
  }
  std::sort(report.failures.begin(), report.failures.end(), operator_less);
  if (report.failures.size() > cap) report.failures.resize(cap);
}

using PointCheck = std::function<void(std::span<const int64_t>, Tally&)>;

// Enumerates the cone, sharded by the values of the leading coordinates.
void sweep(const ConeSpec& cone, int64_t bound, unsigned threads, std::size_t cap, const PointCheck& check,
           VerificationReport& report) {
  const std::size_t depth = std::min<std::size_t>(2, cone.dim);
  std::size_t shards = 1;
  for (std::size_t d = 0; d < depth; ++d) shards *= static_cast<std::size_t>(bound + 1);
  std::vector<Tally> tallies(shards, Tally(cap));

  auto run_shard = [&](std::size_t s) {
    Vec prefix(depth, 0);
    for (std::size_t d = depth, rest = s; d-- > 0; rest /= static_cast<std::size_t>(bound + 1))
      prefix[d] = static_cast<int64_t>(rest % static_cast<std::size_t>(bound + 1));
    auto& tally = tallies[s];
    enumerate_points_with_prefix(cone, bound, prefix, [&](std::span<const int64_t> x) {
      ++tally.points;
      check(x, tally);
      return true;
    });
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(shards)));
  if (workers == 1) {
    for (std::size_t s = 0; s < shards; ++s) run_shard(s);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t s; (s = next.fetch_add(1)) < shards;) run_shard(s);
      });
    for (auto& t : pool) t.join();
  }
  merge_into(report, tallies, cap);
}

class Stopwatch {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

VerificationReport start_report(const char* theorem, const Quiver& q, int64_t bound) {
  VerificationReport r;
  r.theorem = theorem;
  r.quiver = q.str();
  r.n = q.rank();
  r.bound = bound;
  return r;
}

// Checks shared between the sweeps and replay.

struct CoincideCheck {
  ReducedWord word;
  IntLinearMap d;
  int n;

  explicit CoincideCheck(const Quiver& q) : word(word_for_quiver(q)), d(d_map(q)), n(q.rank()) {}

  void operator()(std::span<const int64_t> c, Tally& tally) const {
    const Vec a = quiverlin::apply(d, c);
    const Vec s = string_of(word, Triangle(n, to_vec(c)));
    if (s != a) tally.fail({"s_inverse=D", to_vec(c), a, s, ""});
    if (!satisfies_string_condition(word, a)) tally.fail({"string_condition", to_vec(c), a, {}, ""});
    const Vec back = string_of(word, apply_monomial(word, a));
    if (back != a) tally.fail({"in_string_cone", to_vec(c), a, back, ""});
  }
};

struct ImageCheck {
  ReducedWord word;
  IntLinearMap e;
  ConeSpec l_pbw;
  int n;

  explicit ImageCheck(const Quiver& q)
      : word(word_for_quiver(q)), e(e_map(q)), l_pbw(l_pbw_cone(q)), n(q.rank()) {}

  void operator()(std::span<const int64_t> a, Tally& tally) const {
    const Triangle t = apply_monomial(word, a);
    const Vec back = string_of(word, t);
    if (!std::equal(back.begin(), back.end(), a.begin(), a.end()))
      tally.fail({"string_cone", to_vec(a), to_vec(a), back, ""});
    const Vec expected = quiverlin::apply(e, a);
    const Vec actual = to_vec(t.values());
    if (actual != expected) tally.fail({"s_map=E", to_vec(a), expected, actual, ""});
    if (auto m = membership(l_pbw, actual); !m.inside) tally.fail({"lands_in_pbw_cone", to_vec(a), {}, actual, m.violated});
  }
};

struct SurjectivityCheck {
  ReducedWord word;
  ConeSpec lst;
  int n;

  explicit SurjectivityCheck(const Quiver& q) : word(word_for_quiver(q)), lst(lusztig_cone(word)), n(q.rank()) {}

  void operator()(std::span<const int64_t> c, Tally& tally) const {
    const Vec a = string_of(word, Triangle(n, to_vec(c)));
    if (auto m = membership(lst, a); !m.inside) tally.fail({"surjectivity", to_vec(c), {}, a, m.violated});
    const Vec again = to_vec(apply_monomial(word, a).values());
    if (!std::equal(again.begin(), again.end(), c.begin(), c.end()))
      tally.fail({"surjectivity_round_trip", to_vec(c), to_vec(c), again, ""});
  }
};

// Pairs (p, p') of word positions whose roots satisfy root(p) > root(p').
std::vector<std::pair<std::size_t, std::size_t>> dominance_pairs(const ReducedWord& word) {
  const auto roots = roots_order(word);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 0; p < roots.size(); ++p)
    for (std::size_t r = 0; r < roots.size(); ++r)
      if (p != r && roots[p].i <= roots[r].i && roots[r].j <= roots[p].j) out.emplace_back(p, r);
  return out;
}

std::string rows_detail(const std::vector<std::vector<int64_t>>& rows, const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& r : rows) out += (out.empty() ? "" : "; ") + row_to_string(r, labels);
  return out;
}

}  // namespace

VerificationReport verify_coincide_on(const Quiver& q, const ConeSpec& pbw_cone, const SweepOptions& opts) {
  Stopwatch clock;
  auto report = start_report("coincide", q, opts.bound);
  const CoincideCheck check(q);
  sweep(pbw_cone, opts.bound, opts.threads, opts.max_recorded, check, report);
  report.elapsed_seconds = clock.seconds();
  return report;
}

VerificationReport verify_coincide(const Quiver& q, const SweepOptions& opts) {
  return verify_coincide_on(q, c_pbw_cone(q), opts);
}

VerificationReport verify_inclusion(const Quiver& q, const SweepOptions& opts) {
  Stopwatch clock;
  auto report = start_report("inclusion", q, opts.bound);
  const auto c_pbw = c_pbw_cone(q);
  const auto boundary = boundary_rows(q);
  sweep(l_pbw_cone(q), opts.bound, opts.threads, opts.max_recorded,
        [&](std::span<const int64_t> c, Tally& tally) {
          if (auto m = membership(c_pbw, c); !m.inside) tally.fail({"inclusion", to_vec(c), {}, {}, m.violated});
          if (auto m = membership(boundary, c); !m.inside) tally.fail({"boundary", to_vec(c), {}, {}, m.violated});
        },
        report);
  report.elapsed_seconds = clock.seconds();
  return report;
}

VerificationReport verify_cone_correspondence_against(const Quiver& q, const ConeSpec& pbw_cone,
                                                      const SweepOptions& opts) {
  Stopwatch clock;
  auto report = start_report("correspondence", q, opts.bound);
  const auto word = word_for_quiver(q);
  const auto d = d_map(q);
  const auto e = e_map(q);
  const auto lst = lusztig_cone(word);
  const auto image = cone_image_under(e, lst);

  // symbolic comparison of the normalized defining rows
  const auto image_rows = row_set(image);
  const auto pbw_rows = row_set(pbw_cone);
  std::vector<std::vector<int64_t>> missing, extra;
  std::set_difference(image_rows.begin(), image_rows.end(), pbw_rows.begin(), pbw_rows.end(),
                      std::back_inserter(missing));
  std::set_difference(pbw_rows.begin(), pbw_rows.end(), image_rows.begin(), image_rows.end(),
                      std::back_inserter(extra));
  if (!missing.empty() || !extra.empty()) {
    ++report.failure_count;
    report.failures.push_back({"symbolic", {}, {}, {}, "E(L_st) rows absent from the PBW cone: [" +
                                                       rows_detail(missing, image.coord_labels) +
                                                       "], PBW rows absent from E(L_st): [" +
                                                       rows_detail(extra, image.coord_labels) + "]"});
  }

  // PBW cone -> Lusztig cone, and back
  sweep(pbw_cone, opts.bound, opts.threads, opts.max_recorded,
        [&](std::span<const int64_t> c, Tally& tally) {
          const Vec a = quiverlin::apply(d, c);
          if (auto m = membership(lst, a); !m.inside) tally.fail({"pbw_to_string", to_vec(c), {}, a, m.violated});
        },
        report);
  sweep(image, opts.bound, opts.threads, opts.max_recorded,
        [&](std::span<const int64_t> c, Tally& tally) {
          if (auto m = membership(pbw_cone, c); !m.inside) tally.fail({"string_to_pbw", to_vec(c), {}, {}, m.violated});
        },
        report);

  // on the Lusztig cone itself: E(a) >= 0 and a is monotone in the root order
  const auto dominance = dominance_pairs(word);
  sweep(lst, opts.bound, opts.threads, opts.max_recorded,
        [&](std::span<const int64_t> a, Tally& tally) {
          const Vec c = quiverlin::apply(e, a);
          if (std::any_of(c.begin(), c.end(), [](int64_t v) { return v < 0; }))
            tally.fail({"nonnegativity", to_vec(a), {}, c, ""});
          for (auto [hi, lo] : dominance)
            if (a[hi] < a[lo]) {
              tally.fail({"monotonicity", to_vec(a), {}, {}, "a_" + std::to_string(hi + 1) + " < a_" + std::to_string(lo + 1)});
              break;
            }
        },
        report);

  if (q.str() == "RLRL") {
    for (const auto& row : rlrl_correspondence_table())
      if (!row.matches) {
        ++report.failure_count;
        report.failures.push_back({"table", {}, {}, {}, row.string_side + " maps to " + row.computed_pbw_side +
                                                            ", reference " + row.reference_pbw_side});
      }
  }
  std::sort(report.failures.begin(), report.failures.end(), operator_less);
  if (report.failures.size() > opts.max_recorded) report.failures.resize(opts.max_recorded);
  report.elapsed_seconds = clock.seconds();
  return report;
}

VerificationReport verify_cone_correspondence(const Quiver& q, const SweepOptions& opts) {
  return verify_cone_correspondence_against(q, l_pbw_cone(q), opts);
}

VerificationReport verify_image(const Quiver& q, const SweepOptions& opts) {
  Stopwatch clock;
  auto report = start_report("image", q, opts.bound);
  const ImageCheck image(q);
  const SurjectivityCheck onto(q);
  sweep(lusztig_cone(word_for_quiver(q)), opts.bound, opts.threads, opts.max_recorded, image, report);
  sweep(l_pbw_cone(q), opts.bound, opts.threads, opts.max_recorded, onto, report);
  report.elapsed_seconds = clock.seconds();
  return report;
}

// ---------------------------------------------------------------------------

namespace {

std::string word_detail(const ReducedWord& w) {
  std::string s = "word=";
  for (std::size_t p = 0; p < w.size(); ++p) s += (p ? "," : "") + std::to_string(w[p]);
  return s;
}

Vec unit_weight(int n, int j, int64_t sign) {
  Vec w(static_cast<std::size_t>(n), 0);
  w[static_cast<std::size_t>(j - 1)] = sign;
  return w;
}

Vec add(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

void check_operators(const Triangle& t, Tally& tally) {
  const int n = t.rank();
  const Vec values = to_vec(t.values());
  for (int j = 1; j <= n; ++j) {
    const std::string detail = "j=" + std::to_string(j);
    const Triangle lowered = f_tilde(j, t);
    const auto back = e_tilde(j, lowered);
    if (!back || *back != t)
      tally.fail({"e_after_f", values, values, back ? to_vec(back->values()) : Vec{}, detail});
    if (lowered.weight() != add(t.weight(), unit_weight(n, j, 1)))
      tally.fail({"weight_f", values, add(t.weight(), unit_weight(n, j, 1)), lowered.weight(), detail});
    if (const auto raised = e_tilde(j, t)) {
      const Triangle again = f_tilde(j, *raised);
      if (again != t) tally.fail({"f_after_e", values, values, to_vec(again.values()), detail});
      if (raised->weight() != add(t.weight(), unit_weight(n, j, -1)))
        tally.fail({"weight_e", values, add(t.weight(), unit_weight(n, j, -1)), raised->weight(), detail});
    }
  }
}

void check_round_trip(const Triangle& t, const ReducedWord& w, Tally& tally) {
  const Triangle back = apply_monomial(w, string_of(w, t));
  if (back != t) tally.fail({"round_trip", to_vec(t.values()), to_vec(t.values()), to_vec(back.values()), word_detail(w)});
}

// Calls visit on every triangle of rank n with entry sum <= max_sum.
template <class Visit>
void for_each_small_triangle(int n, int64_t max_sum, Visit visit) {
  Vec c(static_cast<std::size_t>(num_roots(n)), 0);
  auto rec = [&](auto&& self, std::size_t k, int64_t left) -> void {
    if (k == c.size()) {
      visit(Triangle(n, c));
      return;
    }
    for (int64_t v = 0; v <= left; ++v) {
      c[k] = v;
      self(self, k + 1, left - v);
    }
    c[k] = 0;
  };
  rec(rec, 0, max_sum);
}

}  // namespace

VerificationReport verify_crystal(int n, const CrystalSuiteOptions& opts) {
  Stopwatch clock;
  VerificationReport report;
  report.theorem = "crystal";
  report.n = n;
  report.bound = opts.max_entry_sum;
  Tally tally(opts.max_recorded);

  std::vector<ReducedWord> quiver_words;
  for (const auto& q : Quiver::all(n)) quiver_words.push_back(word_for_quiver(q));

  if (opts.max_entry_sum >= 0) {
    // every quiver-compatible word: the commutation class of each word_for_quiver
    std::vector<ReducedWord> words;
    for (const auto& w : quiver_words)
      for (auto& v : commutation_class(w)) words.push_back(std::move(v));
    for_each_small_triangle(n, opts.max_entry_sum, [&](const Triangle& t) {
      ++tally.points;
      check_operators(t, tally);
      for (const auto& w : words) check_round_trip(t, w, tally);
    });
  }

  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int64_t> entry(0, opts.random_entry_max);
  for (uint64_t s = 0; s < opts.random_samples; ++s) {
    Vec c(static_cast<std::size_t>(num_roots(n)));
    for (auto& v : c) v = entry(rng);
    const Triangle t(n, std::move(c));
    ++tally.points;
    check_operators(t, tally);
    for (const auto& w : quiver_words) check_round_trip(t, w, tally);
  }

  std::vector<Tally> tallies{std::move(tally)};
  merge_into(report, tallies, opts.max_recorded);
  report.elapsed_seconds = clock.seconds();
  return report;
}

VerificationReport verify_linear_maps(const Quiver& q) {
  Stopwatch clock;
  auto report = start_report("linear_maps", q, 0);
  Tally tally(20);
  const auto d = d_map(q);
  const auto e = e_map(q);
  const std::size_t dim = d.coeffs.rows();
  ++tally.points;

  if (d.coeffs * e.coeffs != IntMatrix::identity(dim)) tally.fail({"D*E=I", {}, {}, {}, ""});
  if (e.coeffs * d.coeffs != IntMatrix::identity(dim)) tally.fail({"E*D=I", {}, {}, {}, ""});
  if (auto det = d.coeffs.determinant(); det != 1 && det != -1) tally.fail({"det", {}, {1}, {det}, ""});
  for (std::size_t r = 0; r < dim; ++r) {
    auto row = d.coeffs.row(r);
    if (std::any_of(row.begin(), row.end(), [](int64_t v) { return v != 0 && v != 1; }))
      tally.fail({"D_row_0_1", to_vec(row), {}, {}, d.row_labels[r]});
    auto erow = e.coeffs.row(r);
    const auto plus = std::count(erow.begin(), erow.end(), 1);
    const auto minus = std::count(erow.begin(), erow.end(), -1);
    const auto zero = std::count(erow.begin(), erow.end(), 0);
    const bool shape = plus == 1 && minus <= 1 && static_cast<std::size_t>(plus + minus + zero) == dim;
    if (!shape) tally.fail({"E_row_difference", to_vec(erow), {}, {}, e.row_labels[r]});
  }
  std::vector<Tally> tallies{std::move(tally)};
  merge_into(report, tallies, 20);
  report.elapsed_seconds = clock.seconds();
  return report;
}

VerificationReport verify_directed(const Quiver& q) {
  Stopwatch clock;
  auto report = start_report("directed", q, 0);
  report.points_checked = 1;
  if (!is_directed_partition(slices_for(q))) {
    report.failure_count = 1;
    report.failures.push_back({"directed", {}, {}, {}, "slice partition is not directed"});
  }
  report.elapsed_seconds = clock.seconds();
  return report;
}

// ---------------------------------------------------------------------------

namespace {

ReducedWord parse_word_detail(int n, const std::string& detail) {
  std::vector<int> letters;
  std::stringstream ss(detail.substr(detail.find('=') + 1));
  for (std::string tok; std::getline(ss, tok, ',');) letters.push_back(std::stoi(tok));
  return ReducedWord(n, letters);
}

}  // namespace

bool replay(const VerificationReport& report, const Counterexample& f) {
  const auto& x = f.input;
  Tally tally(64);
  if (report.theorem == "crystal") {
    const Triangle t(report.n, x);
    if (f.check == "round_trip") {
      check_round_trip(t, parse_word_detail(report.n, f.detail), tally);
    } else {
      check_operators(t, tally);
    }
    return std::any_of(tally.recorded.begin(), tally.recorded.end(),
                       [&](const Counterexample& c) { return c.check == f.check && c.detail == f.detail; });
  }

  const Quiver q(report.quiver);
  if (report.theorem == "coincide") {
    CoincideCheck{q}(x, tally);
  } else if (report.theorem == "inclusion") {
    if (f.check == "inclusion") return !contains(c_pbw_cone(q), x);
    if (f.check == "boundary") return !contains(boundary_rows(q), x);
    return false;
  } else if (report.theorem == "image") {
    if (f.check == "surjectivity" || f.check == "surjectivity_round_trip")
      SurjectivityCheck{q}(x, tally);
    else
      ImageCheck{q}(x, tally);
  } else if (report.theorem == "correspondence") {
    const auto word = word_for_quiver(q);
    if (f.check == "pbw_to_string") return !contains(lusztig_cone(word), quiverlin::apply(d_map(q), x));
    if (f.check == "string_to_pbw") return !contains(l_pbw_cone(q), x);
    if (f.check == "nonnegativity") {
      const Vec c = quiverlin::apply(e_map(q), x);
      return std::any_of(c.begin(), c.end(), [](int64_t v) { return v < 0; });
    }
    if (f.check == "monotonicity") {
      for (auto [hi, lo] : dominance_pairs(word))
        if (x[hi] < x[lo]) return true;
      return false;
    }
    if (f.check == "symbolic") return verify_cone_correspondence(q, {0, 1, 1}).failure_count > 0;
    return false;
  } else {
    return false;
  }
  return std::any_of(tally.recorded.begin(), tally.recorded.end(), [&](const Counterexample& c) {
    return c.check == f.check && c.actual == f.actual;
  });
}

// ---------------------------------------------------------------------------

std::vector<std::pair<std::string, std::string>> rlrl_reference_table() {
  return {
      {"a_2 + a_4 >= a_1 + a_5", "c_1_1 >= c_2_2"},
      {"a_5 >= a_2 + a_6", "c_2_2 + c_2_3 >= c_1_1 + c_1_2"},
      {"a_4 + a_7 >= a_3 + a_8", "c_2_3 + c_1_3 >= c_3_4 + c_2_4"},
      {"a_5 + a_8 >= a_4 + a_9", "c_2_2 >= c_3_3"},
      {"a_6 + a_9 >= a_5 + a_10", "c_3_3 + c_3_4 >= c_2_2 + c_2_3"},
      {"a_10 >= a_6 + a_11", "c_2_4 + c_2_5 >= c_1_3 + c_1_4"},
      {"a_8 >= a_7 + a_12", "c_3_4 + c_2_4 >= c_4_5 + c_3_5"},
      {"a_9 + a_12 >= a_8 + a_13", "c_3_3 >= c_4_4"},
      {"a_10 + a_13 >= a_9 + a_14", "c_4_4 + c_4_5 >= c_3_3 + c_3_4"},
      {"a_13 >= a_12 + a_15", "c_4_4 >= c_5_5"},
  };
}

std::vector<TableRow> rlrl_correspondence_table() {
  const Quiver q("RLRL");
  const auto word = word_for_quiver(q);
  const auto lst = lusztig_cone(word);
  const auto d = d_map(q);
  const auto reference = rlrl_reference_table();
  std::vector<TableRow> out;
  for (std::size_t r = 0; r < lst.rows.size(); ++r) {
    // a row r of L_st in a = D c reads (r D) c >= 0
    const Vec image = d.coeffs.left_multiply(lst.rows[r].coeffs);
    TableRow row;
    row.string_side = row_to_string(lst.rows[r].coeffs, lst.coord_labels);
    row.computed_pbw_side = row_to_string(image, d.col_labels);
    if (r < reference.size()) {
      row.reference_pbw_side = reference[r].second;
      row.matches = parse_inequality(reference[r].first, lst.coord_labels) == lst.rows[r].coeffs &&
                    parse_inequality(reference[r].second, d.col_labels) == image;
    }
    out.push_back(std::move(row));
  }
  for (std::size_t r = lst.rows.size(); r < reference.size(); ++r)
    out.push_back({reference[r].first, "", reference[r].second, false});
  return out;
}

Json report_to_json(const VerificationReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"check", f.check},
                        {"input", f.input},
                        {"expected", f.expected},
                        {"actual", f.actual},
                        {"detail", f.detail}});
  Json j{{"theorem", report.theorem}};
  if (!report.quiver.empty()) j["quiver"] = report.quiver;
  j["n"] = report.n;
  j["bound"] = report.bound;
  j["points_checked"] = report.points_checked;
  j["failure_count"] = report.failure_count;
  j["failures"] = std::move(failures);
  j["elapsed_seconds"] = report.elapsed_seconds;
  j["verdict"] = report.passed() ? "pass" : "fail";
  return j;
}

}  // namespace quiverlin
