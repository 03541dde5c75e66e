#pragma once

#include <optional>
#include <vector>

#include "alcove/rat.hpp"

namespace alcove {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

int rank(RatMat m);

// Solves A x = b.  Returns the solution iff it exists and is unique.
std::optional<RatVec> solve_unique(const RatMat& a, const RatVec& b);

enum class LpStatus { Optimal, Unbounded };

struct LpResult {
  LpStatus status;
  Rat value;  // valid when Optimal
};

// max c.y subject to A y <= b with y free and b >= 0 (so y = 0 is feasible).
// Exact rational simplex with Bland's rule.
LpResult lp_max(const RatMat& a, const RatVec& b, const RatVec& c);

}  // namespace alcove
