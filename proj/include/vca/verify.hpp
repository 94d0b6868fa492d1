#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vca/core.hpp"

namespace vca {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::uint64_t checks = 0;
  /// First failure, or a note on why the suite did not apply.
  std::string detail;
};

/// Runs the invariant suites on one instance:
///   oracle        minimal_covers == minimal_covers_oracle for k = 0..horizon
///   antichain     minimal cover sets are antichains, complete over the box
///   order         monotonicity, superadditivity and filtration for |b| ≤ max_degree
///   certificates  every certificate from algebra_generators re-verifies
///   counting      (single facet) direct vs decomposition counts, k ≤ horizon, d ≤ max_degree
///   split         (single facet with a positive part) high-degree splits re-verify and
///                 no new generator appears past the generation bound within horizon
/// Suites that do not apply pass vacuously with a note.
std::vector<SuiteResult> run_verification(const WeightedMulticomplex& w, std::uint64_t horizon,
                                          std::uint64_t max_degree);

}  // namespace vca
