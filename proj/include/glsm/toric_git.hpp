#ifndef GLSM_TORIC_GIT_HPP
#define GLSM_TORIC_GIT_HPP

#include "glsm/exact_linalg.hpp"

#include <optional>
#include <set>
#include <vector>

namespace glsm {

/// Set of coordinate indices allowed to be nonzero (a point's support).
using Support = std::set<std::size_t>;

struct Level {
    RatVector tau;
};

/// tau = -theta: calibrated so the geometric phase of a hypersurface
/// (theta of negative weight) lands on the tau > 0 side.
Level level_of_theta(const RatVector& theta);

/// A support is semistable iff tau lies in the rational cone spanned by its
/// columns of Q.
bool support_semistable(const IntMatrix& q, const Level& tau, const Support& s);

/// Inclusion-minimal semistable supports. By Caratheodory these have at most
/// m elements, so the search is over small subsets only.
std::vector<Support> semistable_supports(const IntMatrix& q, const Level& tau);

/// Inclusion-maximal supports whose coordinate subspace is unstable; the
/// unstable locus is exactly the union of these subspaces.
std::vector<Support> unstable_subspaces(const IntMatrix& q, const Level& tau);

struct StrongRegularity {
    bool regular = false;
    bool semistable_nonempty = false;
    /// When not regular for cone reasons: a rank-deficient column subset
    /// whose cone contains tau.
    std::optional<Support> violating_cone;
};

StrongRegularity is_strongly_regular(const IntMatrix& q, const Level& tau);

struct PhaseChamber {
    RatVector representative;          // strictly interior level
    std::vector<RatVector> walls;      // bounding rays (rational directions)
    std::vector<Support> minimal_supports;
    bool strongly_regular = false;
};

/// Exact chamber enumeration for m in {1,2}; throws std::domain_error for
/// larger m (use classify_levels there) or for degenerate weight matrices.
std::vector<PhaseChamber> chambers(const IntMatrix& q);

/// Degraded mode for m >= 3: classifies user-provided candidate levels by
/// their minimal-semistable-support family.
std::vector<PhaseChamber> classify_levels(const IntMatrix& q, const std::vector<RatVector>& levels);

/// True iff no nonzero G-invariant monomial is supported inside S, i.e. the
/// affine quotient of the corresponding subspace closure is a point.
bool affine_support_trivial(const IntMatrix& q, const Support& s);

}  // namespace glsm

#endif
