#ifndef GLSM_GAMMA_RCHARGE_HPP
#define GLSM_GAMMA_RCHARGE_HPP

#include "glsm/exact_linalg.hpp"
#include "glsm/toric_git.hpp"

#include <optional>
#include <stdexcept>

namespace glsm {

class CompatibilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RCharge {
    IntVector c;  // one weight per coordinate; gcd must be 1
    Int d;        // positive; the R-degree of the superpotential
};

/// Lattice data for the group generated by the gauge torus and the R-charge
/// circle. Elements are parametrized by (t_1..t_m, lambda); the finite kernel
/// of that parametrization is the intersection subgroup.
struct GammaData {
    IntMatrix gauge;          // m x n
    RCharge rweights;
    IntMatrix extended;       // (m+1) x n: gauge rows then the R-weight row
    PhaseVector j;            // exponential grading element, length n
    Rat q;                    // sum of c_i / d
    RatVector zeta_character; // (0,..,0,d) on the parameter torus
    /// Phase kernel of the parametrization; isomorphic to the intersection
    /// subgroup, so its size equals d.
    std::vector<PhaseVector> kernel_phases;

    std::size_t n() const { return gauge.cols(); }
    std::size_t m() const { return gauge.rows(); }
    const Int& d() const { return rweights.d; }

    /// Action of the k-th power of J on coordinates.
    PhaseVector j_power(const Int& k) const;
};

/// Builds the extended lattice data and verifies compatibility: the
/// intersection of the gauge torus with the R-charge circle must be exactly
/// the cyclic group generated by J, of order d.
GammaData build_gamma(const IntMatrix& q, const RCharge& r);

/// (n - m) - 2q.
Rat central_charge(const GammaData& gamma);

struct Lift {
    RatVector theta;
    Rat r_level;  // R-charge weight of the lift; 0 for the trivial lift
};

inline Lift trivial_lift(const RatVector& theta) { return {theta, Rat(0)}; }

/// True iff the lift cuts out the same semistable locus as theta does: every
/// minimal theta-semistable support must stay semistable for the extended
/// weight data (the reverse inclusion always holds).
bool is_good_lift(const GammaData& gamma, const RatVector& theta, const Lift& lift);

/// The set of good r_level values is an exact interval: for each minimal
/// semistable support the admissible r_levels form an interval computed by a
/// pair of rational LPs, and goodness is their intersection.
struct GoodLiftInterval {
    bool any_good = false;
    bool lo_unbounded = false;  // interval extends to -infinity
    bool hi_unbounded = false;
    Rat lo, hi;                 // meaningful when bounded on that side
    std::optional<Support> lo_witness;  // support pinning the lower endpoint
    std::optional<Support> hi_witness;

    bool unique_good() const {
        return any_good && !lo_unbounded && !hi_unbounded && lo == hi;
    }
};

GoodLiftInterval good_lift_interval(const GammaData& gamma, const RatVector& theta);

/// Outcome of replacing the R-weights by c + combo.Q (Q-linear combination of
/// gauge rows), renormalized to primitive integer data.
struct ShiftResult {
    GammaData gamma;
    bool rescaled = false;      // d had to change to clear denominators
    bool same_group = false;    // extended lattices span the same torus
    bool same_j = false;        // the cyclic subgroups <J> coincide
    bool cy_rows = false;       // every gauge row sums to zero
    bool q_equal = false;
    bool chat_equal = false;
};

ShiftResult rcharge_shift(const GammaData& gamma, const RatVector& combo);

}  // namespace glsm

#endif
