#ifndef GLSM_SIMPLEX_HPP
#define GLSM_SIMPLEX_HPP

#include "glsm/rational.hpp"

#include <vector>

namespace glsm {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat value;       // meaningful for Optimal
    RatVector x;     // meaningful for Optimal
};

/// Exact two-phase simplex with Bland's rule:
///   minimize c.x  subject to  A x = b,  x >= 0.
/// A is given row-wise; all arithmetic is rational, so the answer is exact.
LpResult lp_minimize(const std::vector<RatVector>& a, const RatVector& b, const RatVector& c);

/// maximize c.x under the same constraints.
LpResult lp_maximize(const std::vector<RatVector>& a, const RatVector& b, const RatVector& c);

}  // namespace glsm

#endif
