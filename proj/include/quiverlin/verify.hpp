#pragma once

// Bounded-lattice and symbolic checks of the relations between the cones, the
// linear maps D/E and the crystal reparametrization.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "quiverlin/json_io.hpp"

namespace quiverlin {

struct Counterexample {
  std::string check;            // name of the failed comparison
  std::vector<int64_t> input;   // the lattice point, in the sweep's coordinates
  std::vector<int64_t> expected;
  std::vector<int64_t> actual;
  std::string detail;

  bool operator==(const Counterexample&) const = default;
};

struct VerificationReport {
  std::string theorem;  // coincide | inclusion | correspondence | image | crystal
  std::string quiver;   // empty for rank-only suites
  int n = 0;
  int64_t bound = 0;
  uint64_t points_checked = 0;
  uint64_t failure_count = 0;
  std::vector<Counterexample> failures;  // sorted, capped at max_recorded
  double elapsed_seconds = 0.0;

  bool passed() const { return failure_count == 0; }
};

struct SweepOptions {
  int64_t bound = 2;
  unsigned threads = 1;
  std::size_t max_recorded = 20;
};

/// Every c in C_PBW(q) within bound has s_inverse(q, c) == D(c), and D(c)
/// satisfies the string condition and lies in the string cone.
VerificationReport verify_coincide(const Quiver& q, const SweepOptions& opts);

/// Every c in L_PBW(q) within bound lies in C_PBW(q) and satisfies boundary_rows(q).
VerificationReport verify_inclusion(const Quiver& q, const SweepOptions& opts);

/// Symbolic E(L_st) == L_PBW, both lattice directions within bound, E(a) >= 0
/// on L_st, and root-order monotonicity of a on L_st.
VerificationReport verify_cone_correspondence(const Quiver& q, const SweepOptions& opts);

/// The same sweep with a caller-supplied PBW cone in place of l_pbw_cone(q).
VerificationReport verify_cone_correspondence_against(const Quiver& q, const ConeSpec& pbw_cone,
                                                      const SweepOptions& opts);

/// Every a in L_st(i(q)) within bound has s_map(q, a) == E(a) in L_PBW(q);
/// every c in L_PBW(q) within bound is s_map of a point of L_st.
VerificationReport verify_image(const Quiver& q, const SweepOptions& opts);

/// verify_coincide with a caller-supplied PBW cone, e.g. to probe variants.
VerificationReport verify_coincide_on(const Quiver& q, const ConeSpec& pbw_cone, const SweepOptions& opts);

struct CrystalSuiteOptions {
  int64_t max_entry_sum = 4;     // exhaustive part
  uint64_t random_samples = 0;   // seeded random part
  int64_t random_entry_max = 3;
  uint64_t seed = 1;
  std::size_t max_recorded = 20;
};

/// Operator inverse pair, weight bookkeeping and monomial/string round trip
/// along every quiver-compatible word of rank n.
VerificationReport verify_crystal(int n, const CrystalSuiteOptions& opts);

/// Inverse pair, rank-one bounds and D/E shape for one quiver.
VerificationReport verify_linear_maps(const Quiver& q);

/// Whether the slice partition of q is directed.
VerificationReport verify_directed(const Quiver& q);

/// Reruns the named comparison on a recorded counterexample; true iff the
/// mismatch reappears.
bool replay(const VerificationReport& report, const Counterexample& failure);

/// Pairs (Lusztig-cone row, PBW row) for RLRL, as published.
std::vector<std::pair<std::string, std::string>> rlrl_reference_table();

struct TableRow {
  std::string string_side;
  std::string computed_pbw_side;
  std::string reference_pbw_side;
  bool matches = false;
};

/// Transports each Lusztig-cone row of RLRL through E and compares it with
/// the reference table, row by row.
std::vector<TableRow> rlrl_correspondence_table();

Json report_to_json(const VerificationReport& report);

}  // namespace quiverlin
