#ifndef GLSM_QMAP_DEGREES_HPP
#define GLSM_QMAP_DEGREES_HPP

#include "glsm/epsilon.hpp"
#include "glsm/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace glsm {

/// Dual graph of a prestable pointed curve. Vertices carry genus and marking
/// labels; edges are unordered vertex pairs, self-loops allowed.
struct DualGraph {
    struct Vertex {
        Int genus = 0;
        std::vector<std::string> markings;
    };
    std::vector<Vertex> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    bool connected() const;
    /// Arithmetic genus: sum of vertex genera plus the first Betti number.
    Int total_genus() const;
    std::size_t total_marks() const;
    /// Special points at v: markings plus edge incidences (self-loops twice).
    std::size_t special_points(std::size_t v) const;
};

/// Per-vertex numerical data of a quasimap: line-bundle degree degA (valued
/// in (1/b)Z), base-point divisor degree baseD (supported away from special
/// points), and the degree of the pulled-back stability line bundle.
struct QmapNumericalData {
    Int b = 1;  // root order of the construction A^b = wlog(-D)
    RatVector deg_a;
    std::vector<Int> base_d;
    RatVector lift_deg;
};

/// wlog_v = 2 g_v - 2 + (marks + edge ends at v).
std::vector<Rat> omega_log_degrees(const DualGraph& g);

struct StabilityVerdict {
    bool stable = false;
    /// One human-readable reason per violated condition, naming the vertex.
    std::vector<std::string> failures;
};

/// Throws std::invalid_argument when the data violates the degree relation
/// b*degA_v = wlog_v - baseD_v or has mismatched lengths.
StabilityVerdict check_stability(const DualGraph& g, const QmapNumericalData& data,
                                 Epsilon epsilon);

/// All stable data with baseD_v in [0, maxD], degA_v fixed by the degree
/// relation and lift_deg_v = baseD_v / b; vertex-major lexicographic order.
std::vector<QmapNumericalData> enumerate_lg_configs(const DualGraph& g, const Int& b,
                                                    Epsilon epsilon, const Int& max_d);

/// For epsilon = infinity stable data: whether the underlying graph is stable
/// in the Deligne-Mumford sense (g=0 needs >= 3 special, g=1 needs >= 1).
bool classify_infty_lg(const DualGraph& g, const QmapNumericalData& data);

}  // namespace glsm

#endif
