#ifndef GLSM_GLSM_ANALYZER_HPP
#define GLSM_GLSM_ANALYZER_HPP

#include "glsm/epsilon.hpp"
#include "glsm/gamma_rcharge.hpp"
#include "glsm/poly.hpp"
#include "glsm/toric_git.hpp"

#include <optional>
#include <string>
#include <vector>

namespace glsm {

/// The full input bundle of one model.
struct ModelInput {
    std::vector<std::string> variables;
    IntMatrix gauge;
    RCharge rcharge;
    Polynomial superpotential;
    RatVector theta;
    Epsilon epsilon = Epsilon::ZeroPlus;
    std::optional<Lift> lift;  // trivial when absent

    Lift effective_lift() const { return lift ? *lift : trivial_lift(theta); }
};

struct ValidationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_pass = false;
    std::optional<GammaData> gamma;  // present when compatibility held
};

/// Runs every model invariant; never fails fast, the report is always full.
ValidationReport validate_model(const ModelInput& m);

enum class Compactness { Compact, Noncompact, Unknown };

struct CriticalComponent {
    enum class Kind { CoordinateSubspace, HypersurfaceInSubspace, RawSystem };
    Kind kind;
    Support support;                    // coordinates allowed nonzero (ambient for hypersurfaces)
    std::vector<Polynomial> equations;  // cutting equations inside the subspace
    bool survives_semistability = false;
    Compactness quotient_compact = Compactness::Unknown;
};

class StructureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Decomposes the critical locus when W has the fibered form sum_j p_j F_j(x)
/// (detected syntactically); otherwise returns the raw partial-derivative
/// system as a single undecomposed entry.
std::vector<CriticalComponent> critical_components(const ModelInput& m,
                                                   bool transversality_asserted);

struct NondegeneracyResult {
    std::vector<CriticalComponent> components;  // with verdicts filled in
    Compactness overall = Compactness::Unknown;
};

NondegeneracyResult nondegeneracy_check(const ModelInput& m,
                                        std::vector<CriticalComponent> components);

struct Sector {
    PhaseVector action;       // diagonal action on coordinates, length n
    Support fixed_support;    // coordinates the element acts trivially on
    Rat age;
    Rat degree_shift;         // -2*age + 2q
};

/// Twisted-sector index set: stabilizer elements realized on minimal
/// semistable supports whose fixed locus stays semistable.
std::vector<Sector> sectors(const ModelInput& m, const GammaData& gamma);

Rat age_of(const PhaseVector& gamma);

Rat virtual_dimension(const GammaData& gamma, const Int& genus, std::size_t marks,
                      const RatVector& beta, const std::vector<Sector>& insertions);

struct FixedLocus {
    Support support;
    std::vector<Polynomial> equations;
};

/// Components of the critical locus fixed by an auxiliary diagonal
/// circle action (up to the gauge group).
std::vector<FixedLocus> fixed_loci(const ModelInput& m, const IntVector& extra_action);

}  // namespace glsm

#endif
