#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Cross-check harness: every formula path against its brute-force oracle or
// its independent second route. Shared by `biclique verify` and the
// acceptance test binary.
namespace biclique::crosscheck {

struct Budget {
  /// Random specs compared against deletion-contraction (j <= 4, k <= 8).
  int random_chromatic = 500;
  /// Random complement subgraphs for the complement matching transform (j <= 4, k <= 8).
  int random_transform = 500;
  /// Random strict specs for the complementary-partner reflection.
  int random_partner = 500;
  /// Exhaustive chromatic check covers j <= 3 and j + k <= this.
  int exhaustive_order = 7;
  /// Entries of the 6-tuples range over [0, this] for the two-route factor check.
  int params_max = 3;
  /// Family parameters r, s, t, u range over [0, this].
  int family_max = 4;
  /// Orientation check covers every canonical biclique with j + k <= this.
  int orientation_order = 7;
  /// alpha+n grid: a1, a0 in [-grid_radius, grid_radius].
  int grid_radius = 10;
  /// Cubics taken from the grid for the floating-point root check.
  int numeric_samples = 50;
  std::uint64_t seed = 20240601;

  static Budget quick();
  static Budget standard() { return {}; }
};

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::uint64_t cases = 0;
  std::string detail;
  double seconds = 0;
};

CheckResult check_oracle_equivalence(const Budget& budget);
CheckResult check_factor_routes(const Budget& budget);
CheckResult check_complement_transform(const Budget& budget);
CheckResult check_complementary_partner(const Budget& budget);
CheckResult check_families(const Budget& budget);
CheckResult check_acyclic_instance();
CheckResult check_orientations(const Budget& budget);
CheckResult check_alphan_grid(const Budget& budget);
CheckResult check_alphan_named();
CheckResult check_numeric_roots(const Budget& budget);

/// All checks above, in order.
std::vector<CheckResult> run_all(const Budget& budget);

}  // namespace biclique::crosscheck
