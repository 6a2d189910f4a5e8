#pragma once

#include <string>
#include <vector>

#include "glres/differentials.hpp"

namespace glres {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // first failure location; empty on pass
  std::string detail;   // short human summary
};

struct Report {
  std::vector<CheckResult> entries;

  bool passed() const;
  std::string text() const;
  std::string json() const;
};

inline const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names{"complex", "betti",    "euler",   "exactness",
                                              "ann",     "skeleton", "duality", "wlp"};
  return names;
}

CheckResult check_complex(const Resolution& res);
CheckResult check_betti_and_degrees(const Resolution& res);
CheckResult check_euler_hilbert(const Resolution& res);
// Default bound 2n+d when dmax < 0.
CheckResult check_exactness_up_to(const Resolution& res, int dmax = -1);
CheckResult check_ann_match(const Resolution& res);
CheckResult check_skeleton(const Resolution& res);
CheckResult check_duality(const Resolution& res);
// Multiplication by x_var from A_{n-1} to A_n is onto. For var != 1 the
// coordinates are relabeled so x_var becomes x1 and the whole construction
// is rebuilt and rechecked in the new coordinates.
CheckResult check_wlp(const Resolution& res, int var = 1);

Report run_checks(const Resolution& res, const std::vector<std::string>& names, int dmax = -1);

// Reference data for d = 4, n = 2: bases e, f, g and delta-free skeleton
// matrices [b1], [b2], [b3], [b4].
struct GoldenSkeleton {
  std::vector<OrderedBasis> bases;  // B_0 .. B_4
  std::vector<PolyMatrix> maps;     // maps[1..4]
};
const GoldenSkeleton& golden_d4n2();

// Dimension certificate for a complex of graded free modules over
// k[x_low..x_d]: degreewise exactness up to dmax with prescribed H_0.
struct ExactnessTable {
  bool ok = true;
  std::string witness;
  // rank[e][r] = certified rank of [b_r]_e.
  std::vector<std::vector<std::size_t>> rank;
};
ExactnessTable certify_exactness(int d, int low, const std::vector<PolyMatrix>& maps,
                                 const std::vector<int>& twist, const std::vector<std::size_t>& h0,
                                 int dmax);

}  // namespace glres
