#include "quiverlin/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "quiverlin/json_io.hpp"
#include "quiverlin/render.hpp"
#include "quiverlin/verify.hpp"

namespace quiverlin {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<int> n;
  std::string quiver;
  std::optional<int64_t> bound;
  bool json = false;
  uint64_t seed = 1;
  unsigned threads = 1;
  std::string word;
  std::string triangle;
  std::string a;
  std::string format = "text";
  std::optional<uint64_t> samples;
};

std::vector<int64_t> parse_list(const std::string& text, const char* what) {
  std::string body = text;
  if (!body.empty() && body.front() == '[') {
    try {
      return Json::parse(body).get<std::vector<int64_t>>();
    } catch (const std::exception&) {
      throw UsageError(std::string("cannot parse ") + what + ": " + text);
    }
  }
  std::vector<int64_t> out;
  std::stringstream ss(body);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError(std::string("cannot parse ") + what + ": " + text);
    }
  }
  return out;
}

std::optional<Quiver> given_quiver(const Options& o) {
  if (o.quiver.empty()) return std::nullopt;
  try {
    Quiver q(o.quiver);
    if (o.n && *o.n != q.rank())
      throw UsageError("--n " + std::to_string(*o.n) + " does not match quiver of rank " + std::to_string(q.rank()));
    return q;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int rank_of(const Options& o) {
  if (auto q = given_quiver(o)) return q->rank();
  if (!o.n) throw UsageError("give --quiver or --n");
  if (*o.n < 2 || *o.n > 12) throw UsageError("--n must lie in [2, 12]");
  return *o.n;
}

// The quiver named by --quiver, or Q_k of rank --n.
Quiver single_quiver(const Options& o) {
  if (auto q = given_quiver(o)) return *q;
  return Quiver::all_left(rank_of(o));
}

std::vector<Quiver> quivers_to_check(const Options& o) {
  if (auto q = given_quiver(o)) return {*q};
  return Quiver::all(rank_of(o));
}

ReducedWord chosen_word(const Options& o) {
  const int n = rank_of(o);
  if (o.word.empty()) return word_for_quiver(single_quiver(o));
  auto letters = parse_list(o.word, "--word");
  try {
    return ReducedWord(n, std::vector<int>(letters.begin(), letters.end()));
  } catch (const InvalidWord& e) {
    throw UsageError(std::string("--word: ") + e.what());
  }
}

Triangle chosen_triangle(const Options& o, bool required) {
  const int n = rank_of(o);
  if (o.triangle.empty()) {
    if (required) throw UsageError("--triangle is required");
    return Triangle(n);
  }
  try {
    if (o.triangle.front() == '{') return triangle_from_json(n, Json::parse(o.triangle));
    return Triangle(n, parse_list(o.triangle, "--triangle"));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string("--triangle: ") + e.what());
  }
}

std::vector<int64_t> chosen_string(const Options& o, std::size_t length) {
  if (o.a.empty()) throw UsageError("--a is required");
  auto a = parse_list(o.a, "--a");
  if (a.size() != length)
    throw UsageError("--a has " + std::to_string(a.size()) + " entries, the word has " + std::to_string(length));
  for (auto v : a)
    if (v < 0) throw UsageError("--a entries must be nonnegative");
  return a;
}

RenderFormat chosen_format(const Options& o) {
  auto f = parse_format(o.format);
  if (!f) throw UsageError("unknown format '" + o.format + "' (expected text or svg)");
  return *f;
}

std::string join(std::span<const int64_t> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

// ---------------------------------------------------------------------------

int cmd_word(const Options& o, std::ostream& out) {
  const auto w = chosen_word(o);
  const auto roots = roots_order(w);
  if (o.json) {
    Json r = Json::array();
    for (auto iv : roots) r.push_back(std::to_string(iv.i) + "," + std::to_string(iv.j));
    Json j{{"n", w.rank()}, {"word", word_to_json(w)}, {"roots", std::move(r)}};
    if (o.word.empty()) j["quiver"] = single_quiver(o).str();
    out << j.dump(2) << "\n";
    return kExitPass;
  }
  std::string letters;
  for (int l : w.letters()) letters += (letters.empty() ? "" : " ") + std::to_string(l);
  out << letters << "\n";
  for (std::size_t p = 0; p < roots.size(); ++p)
    out << "  " << p + 1 << ": s_" << w[p] << "  [" << roots[p].i << "," << roots[p].j << "]\n";
  return kExitPass;
}

int cmd_slices(const Options& o, std::ostream& out) {
  const auto p = slices_for(single_quiver(o));
  if (o.json) {
    out << slices_to_json(p).dump(2) << "\n";
    return kExitPass;
  }
  out << render_slices(p, RenderFormat::Text);
  return kExitPass;
}

int cmd_map(const Options& o, std::ostream& out, bool inverse) {
  const auto q = single_quiver(o);
  const auto m = inverse ? e_map(q) : d_map(q);
  if (o.json) {
    out << map_to_json(m).dump(2) << "\n";
    return kExitPass;
  }
  for (std::size_t r = 0; r < m.coeffs.rows(); ++r) out << m.row_labels[r] << " = " << row_expression(m, r) << "\n";
  return kExitPass;
}

int cmd_string(const Options& o, std::ostream& out) {
  const auto w = chosen_word(o);
  const auto t = chosen_triangle(o, true);
  const auto a = string_of(w, t);
  if (o.json)
    out << string_to_json(w, a).dump(2) << "\n";
  else
    out << join(a) << "\n";
  return kExitPass;
}

int cmd_monomial(const Options& o, std::ostream& out) {
  const auto w = chosen_word(o);
  const auto a = chosen_string(o, w.size());
  const auto t = apply_monomial(w, a);
  const bool in_cone = in_string_cone(w, a);
  const bool condition = satisfies_string_condition(w, a);
  if (o.json) {
    out << Json{{"triangle", triangle_to_json(t)}, {"in_string_cone", in_cone}, {"string_condition", condition}}.dump(2)
        << "\n";
    return kExitPass;
  }
  out << render_triangle(t, RenderFormat::Text);
  out << "in string cone: " << (in_cone ? "yes" : "no") << "\n";
  out << "string condition: " << (condition ? "yes" : "no") << "\n";
  return kExitPass;
}

ConeSpec named_cone(const std::string& kind, const Options& o) {
  if (kind == "lusztig") return lusztig_cone(chosen_word(o));
  if (kind == "cpbw") return c_pbw_cone(single_quiver(o));
  if (kind == "lpbw") return l_pbw_cone(single_quiver(o));
  throw UsageError("unknown cone '" + kind + "' (expected lusztig, cpbw or lpbw)");
}

int cmd_cone(const std::string& kind, const Options& o, std::ostream& out) {
  const auto cone = named_cone(kind, o);
  if (o.json)
    out << cone_to_json(cone).dump(2) << "\n";
  else
    out << render_cone(cone, RenderFormat::Text);
  return kExitPass;
}

int cmd_verify(const std::string& which, const Options& o, std::ostream& out) {
  static const std::vector<std::string> sweeps{"coincide", "inclusion", "correspondence", "image"};
  const bool all = which == "all";
  if (!all && which != "crystal" && std::find(sweeps.begin(), sweeps.end(), which) == sweeps.end())
    throw UsageError("unknown check '" + which + "'");
  if (o.bound && *o.bound < 0) throw UsageError("--bound must be nonnegative");

  std::vector<VerificationReport> reports;
  auto opts_for = [&](int64_t fallback) {
    SweepOptions s;
    s.bound = o.bound.value_or(fallback);
    s.threads = std::max(1u, o.threads);
    return s;
  };
  if (which != "crystal") {
    for (const auto& q : quivers_to_check(o)) {
      if (all || which == "coincide") reports.push_back(verify_coincide(q, opts_for(2)));
      if (all || which == "inclusion") reports.push_back(verify_inclusion(q, opts_for(3)));
      if (all || which == "correspondence") reports.push_back(verify_cone_correspondence(q, opts_for(3)));
      if (all || which == "image") reports.push_back(verify_image(q, opts_for(2)));
      if (all) {
        reports.push_back(verify_linear_maps(q));
        reports.push_back(verify_directed(q));
      }
    }
  }
  if (which == "crystal") {
    const int n = rank_of(o);
    CrystalSuiteOptions c;
    c.seed = o.seed;
    c.max_entry_sum = o.bound.value_or(n <= 4 ? 4 : -1);
    c.random_samples = o.samples.value_or(n <= 4 ? 0 : 10000);
    reports.push_back(verify_crystal(n, c));
  }

  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed();
  if (o.json || !passed) {
    Json j = Json::array();
    for (const auto& r : reports)
      if (o.json || !r.passed()) j.push_back(report_to_json(r));
    out << j.dump(2) << "\n";
  }
  if (!o.json) {
    for (const auto& r : reports) {
      std::ostringstream line;
      line << (r.passed() ? "PASS " : "FAIL ") << r.theorem;
      if (!r.quiver.empty()) line << " " << r.quiver;
      line << " n=" << r.n << " bound=" << r.bound << " points=" << r.points_checked
           << " failures=" << r.failure_count;
      (passed ? out : std::cerr) << line.str() << "\n";
    }
  }
  return passed ? kExitPass : kExitFailure;
}

int cmd_render(const std::string& artifact, const std::string& cone_kind, const Options& o, std::ostream& out) {
  const auto format = chosen_format(o);
  if (artifact == "triangle") {
    out << render_triangle(chosen_triangle(o, false), format);
  } else if (artifact == "slices") {
    out << render_slices(slices_for(single_quiver(o)), format);
  } else if (artifact == "components") {
    out << render_components(slices_for(single_quiver(o)), format);
  } else if (artifact == "cone") {
    out << render_cone(named_cone(cone_kind, o), format);
  } else {
    throw UsageError("unknown artifact '" + artifact + "' (expected triangle, slices, components or cone)");
  }
  return kExitPass;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact combinatorics of canonical-basis parametrizations in type A"};
  app.require_subcommand(1);
  Options o;
  auto* n_opt = app.add_option("--n", o.n, "Rank n (all quivers of this rank for verify)");
  app.add_option("--quiver", o.quiver, "Quiver orientation over {L,R}, e.g. RLRL");
  app.add_option("--bound", o.bound, "Per-coordinate enumeration bound");
  app.add_flag("--json", o.json, "Emit JSON");
  app.add_option("--seed", o.seed, "Seed for randomized suites");
  app.add_option("--threads", o.threads, "Worker threads for sweeps");
  app.add_option("--word", o.word, "Reduced word, e.g. 1,2,1");
  app.add_option("--triangle", o.triangle, "Triangle as JSON or comma list in triangle order");
  app.add_option("--a", o.a, "String vector as comma list");
  app.add_option("--format", o.format, "Render format: text or svg");
  app.add_option("--samples", o.samples, "Random samples for the crystal suite");
  (void)n_opt;

  auto* word = app.add_subcommand("word", "Print word_for_quiver and its root order");
  auto* slices = app.add_subcommand("slices", "Slice numbers of every interval");
  auto* dmap = app.add_subcommand("dmap", "The map D");
  auto* emap = app.add_subcommand("emap", "The map E = D^-1");
  auto* string = app.add_subcommand("string", "String coordinates of a triangle");
  auto* monomial = app.add_subcommand("monomial", "Apply a monomial in Kashiwara operators to 1");
  auto* cone = app.add_subcommand("cone", "Inequalities of a cone");
  std::string cone_kind;
  cone->add_option("kind", cone_kind, "lusztig | cpbw | lpbw")->required();
  auto* verify = app.add_subcommand("verify", "Run a verification sweep");
  std::string which;
  verify->add_option("check", which, "coincide | inclusion | correspondence | image | crystal | all")->required();
  auto* render = app.add_subcommand("render", "Draw a triangle, slices, component panels or a cone");
  std::string artifact, render_cone_kind = "lpbw";
  render->add_option("artifact", artifact, "triangle | slices | components | cone")->required();
  render->add_option("--cone", render_cone_kind, "Cone to draw: lusztig | cpbw | lpbw");

  // options may follow the subcommand
  for (auto* sub : {word, slices, dmap, emap, string, monomial, cone, verify, render}) sub->fallthrough();

  std::vector<std::string> argv_storage{"quiverlin"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (word->parsed()) return cmd_word(o, out);
    if (slices->parsed()) return cmd_slices(o, out);
    if (dmap->parsed()) return cmd_map(o, out, false);
    if (emap->parsed()) return cmd_map(o, out, true);
    if (string->parsed()) return cmd_string(o, out);
    if (monomial->parsed()) return cmd_monomial(o, out);
    if (cone->parsed()) return cmd_cone(cone_kind, o, out);
    if (verify->parsed()) return cmd_verify(which, o, out);
    if (render->parsed()) return cmd_render(artifact, render_cone_kind, o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace quiverlin
