#pragma once

#include <string>
#include <vector>

#include "possind/distribution.hpp"

namespace possind {

/// Three binary variables, π = 0.6 when x1 = 0, and 0.7, 0.8, 0.9, 1 on
/// (1,0,0), (1,0,1), (1,1,0), (1,1,1). Under min the A-side independence
/// equality holds for ({X1},{X2},{X3}) while the B-side one fails.
Distribution one_sided_min_distribution();

/// X1 ∈ {0,2}, X2, X3 ∈ {-1,1}; π = 1 at (0,1,-1) and (2,-1,1), 0 elsewhere.
/// No-interactivity holds for ({X1},{X2},{X3}) and ({X1},{X3},{X2}) but not
/// for ({X1},{X2,X3},∅), so it fails intersection.
Distribution intersection_failure_distribution();

struct RegressionCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Replays the reference worked examples: closed-form conditionals for the
/// three conjunction families, the one-sided min equality and the
/// no-interactivity intersection failure.
std::vector<RegressionCheck> run_worked_examples();

}  // namespace possind
