#include <doctest.h>

#include "quiverlin/json_io.hpp"
#include "quiverlin/verify.hpp"

using namespace quiverlin;

TEST_CASE("small sweeps pass") {
  SweepOptions opts;
  opts.bound = 2;
  for (const auto& q : Quiver::all(3)) {
    CHECK(verify_coincide(q, opts).passed());
    CHECK(verify_inclusion(q, opts).passed());
    CHECK(verify_cone_correspondence(q, opts).passed());
    CHECK(verify_image(q, opts).passed());
    CHECK(verify_linear_maps(q).passed());
    CHECK(verify_directed(q).passed());
  }
}

TEST_CASE("reports count points and carry metadata") {
  SweepOptions opts;
  opts.bound = 1;
  auto r = verify_coincide(Quiver("RL"), opts);
  CHECK(r.theorem == "coincide");
  CHECK(r.quiver == "RL");
  CHECK(r.n == 3);
  CHECK(r.bound == 1);
  CHECK(r.points_checked > 0);
  auto j = report_to_json(r);
  CHECK(j["theorem"] == "coincide");
  CHECK(j["failures"].empty());
}

TEST_CASE("threaded sweeps agree with single-threaded ones") {
  SweepOptions one, four;
  one.bound = four.bound = 2;
  four.threads = 4;
  for (const auto& q : Quiver::all(4)) {
    auto a = verify_inclusion(q, one);
    auto b = verify_inclusion(q, four);
    CHECK(a.points_checked == b.points_checked);
    CHECK(a.failure_count == b.failure_count);
  }
}

namespace {

// C2 read with r = 1..l-1 drops the r = l row whenever l < k.
ConeSpec c2_literal_cone(const Quiver& q) {
  auto cone = c_pbw_cone(q);
  const auto slices = slices_for(q);
  for (const auto& comp : components_of(q)) {
    if (comp.direction != Direction::Right) continue;
    for (int z = 1; z < slices.num_slices(); ++z) {
      auto x = slice_restriction(slices, comp, z).items;
      auto y = slice_restriction(slices, comp, z + 1).items;
      if (x.empty() || y.empty() || y.size() >= x.size()) continue;
      std::vector<int64_t> row(cone.dim, 0);
      row[triangle_index(x[y.size() - 1])] += 1;
      row[triangle_index(y[y.size() - 1])] -= 1;
      std::erase_if(cone.rows, [&](const ConeRow& r) { return r.coeffs == row; });
    }
  }
  return cone;
}

}  // namespace

TEST_CASE("a wrong cone yields replayable counterexamples") {
  std::size_t exercised = 0;
  SweepOptions opts;
  opts.bound = 1;
  for (int n = 3; n <= 5; ++n)
    for (const auto& q : Quiver::all(n)) {
      const auto cone = c2_literal_cone(q);
      if (cone.rows.size() == c_pbw_cone(q).rows.size() || exercised == 3) continue;
      ++exercised;
      auto bad = verify_coincide_on(q, cone, opts);
      INFO(q.str());
      REQUIRE_FALSE(bad.passed());
      CHECK(bad.failures.size() <= opts.max_recorded);
      for (const auto& f : bad.failures) {
        CHECK(replay(bad, f));
        CHECK_FALSE(contains(c_pbw_cone(q), f.input));
      }
    }
  CHECK(exercised > 0);
}

TEST_CASE("a perturbed cone is caught by the correspondence check") {
  const Quiver q("RLR");
  auto cone = l_pbw_cone(q);
  cone.rows.pop_back();
  SweepOptions opts;
  opts.bound = 2;
  auto r = verify_cone_correspondence_against(q, cone, opts);
  CHECK_FALSE(r.passed());
  bool symbolic = false;
  for (const auto& f : r.failures) symbolic = symbolic || f.check == "symbolic";
  CHECK(symbolic);
}

TEST_CASE("crystal suite") {
  CrystalSuiteOptions opts;
  opts.max_entry_sum = 3;
  opts.random_samples = 200;
  opts.seed = 11;
  auto r = verify_crystal(3, opts);
  CHECK(r.passed());
  CHECK(r.points_checked > 200);
}

TEST_CASE("RLRL correspondence table") {
  auto table = rlrl_correspondence_table();
  CHECK(table.size() == rlrl_reference_table().size());
  CHECK(table.size() == 10);
  for (const auto& row : table) {
    INFO(row.string_side);
    INFO(row.computed_pbw_side);
    CHECK(row.matches);
  }
}
