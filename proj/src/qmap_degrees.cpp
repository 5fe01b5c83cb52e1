#include "glsm/qmap_degrees.hpp"

#include <algorithm>
#include <stdexcept>

namespace glsm {

bool DualGraph::connected() const {
    if (vertices.empty()) return false;
    std::vector<bool> seen(vertices.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (const auto& e : edges) {
            std::size_t w = vertices.size();
            if (e.first == v) w = e.second;
            else if (e.second == v) w = e.first;
            if (w < vertices.size() && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

Int DualGraph::total_genus() const {
    Int g = 0;
    for (const auto& v : vertices) g += v.genus;
    // First Betti number of a connected graph: E - V + 1.
    return g + Int(edges.size()) - Int(vertices.size()) + 1;
}

std::size_t DualGraph::total_marks() const {
    std::size_t k = 0;
    for (const auto& v : vertices) k += v.markings.size();
    return k;
}

std::size_t DualGraph::special_points(std::size_t v) const {
    std::size_t n = vertices[v].markings.size();
    for (const auto& e : edges) {
        if (e.first == v) ++n;
        if (e.second == v) ++n;
    }
    return n;
}

std::vector<Rat> omega_log_degrees(const DualGraph& g) {
    std::vector<Rat> out;
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        out.push_back(Rat(2 * g.vertices[v].genus - 2 + Int(g.special_points(v))));
    return out;
}

StabilityVerdict check_stability(const DualGraph& g, const QmapNumericalData& data,
                                 Epsilon epsilon) {
    const std::size_t nv = g.vertices.size();
    if (data.deg_a.size() != nv || data.base_d.size() != nv || data.lift_deg.size() != nv)
        throw std::invalid_argument("numerical data length does not match the vertex count");
    if (data.b <= 0) throw std::invalid_argument("root order b must be positive");
    auto wlog = omega_log_degrees(g);
    for (std::size_t v = 0; v < nv; ++v) {
        if (data.base_d[v] < 0)
            throw std::invalid_argument("base-point degree must be nonnegative");
        if (Rat(data.b) * data.deg_a[v] != wlog[v] - Rat(data.base_d[v]))
            throw std::invalid_argument("degree relation b*degA = wlog - baseD violated at vertex " +
                                        std::to_string(v));
    }

    StabilityVerdict verdict;
    if (epsilon == Epsilon::ZeroPlus) {
        for (std::size_t v = 0; v < nv; ++v) {
            if (g.vertices[v].genus == 0 && g.special_points(v) < 2)
                verdict.failures.push_back("vertex " + std::to_string(v) +
                                           ": rational component with fewer than 2 special points");
            if (wlog[v] == 0 && !(data.lift_deg[v] > 0))
                verdict.failures.push_back("vertex " + std::to_string(v) +
                                           ": wlog = 0 but the lift bundle has no positive degree");
        }
    } else {
        Int total_d = 0;
        for (const auto& d : data.base_d) total_d += d;
        if (total_d != 0) verdict.failures.push_back("base points present (total degree " +
                                                     total_d.str() + ")");
        for (std::size_t v = 0; v < nv; ++v) {
            if (data.lift_deg[v] < 0)
                verdict.failures.push_back("vertex " + std::to_string(v) +
                                           ": lift bundle has negative degree");
            else if (data.lift_deg[v] == 0 && !(wlog[v] > 0))
                verdict.failures.push_back("vertex " + std::to_string(v) +
                                           ": lift degree 0 where wlog is not ample");
        }
    }
    verdict.stable = verdict.failures.empty();
    return verdict;
}

std::vector<QmapNumericalData> enumerate_lg_configs(const DualGraph& g, const Int& b,
                                                    Epsilon epsilon, const Int& max_d) {
    if (b <= 0) throw std::invalid_argument("root order b must be positive");
    if (max_d < 0) throw std::invalid_argument("maxD must be nonnegative");
    const std::size_t nv = g.vertices.size();
    auto wlog = omega_log_degrees(g);

    std::vector<QmapNumericalData> out;
    std::vector<Int> assignment(nv, Int(0));
    // Odometer over baseD assignments; vertex 0 is the most significant digit.
    while (true) {
        QmapNumericalData data;
        data.b = b;
        data.base_d = assignment;
        data.deg_a.resize(nv);
        data.lift_deg.resize(nv);
        for (std::size_t v = 0; v < nv; ++v) {
            data.deg_a[v] = (wlog[v] - Rat(assignment[v])) / Rat(b);
            data.lift_deg[v] = Rat(assignment[v], b);
        }
        if (check_stability(g, data, epsilon).stable) out.push_back(std::move(data));

        std::size_t v = nv;
        while (v-- > 0) {
            if (assignment[v] < max_d) {
                ++assignment[v];
                break;
            }
            assignment[v] = 0;
            if (v == 0) return out;
        }
        if (nv == 0) return out;
    }
}

bool classify_infty_lg(const DualGraph& g, const QmapNumericalData& data) {
    if (!check_stability(g, data, Epsilon::Infinity).stable)
        throw std::invalid_argument("data is not epsilon = infinity stable");
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        std::size_t n = g.special_points(v);
        if (g.vertices[v].genus == 0 && n < 3) return false;
        if (g.vertices[v].genus == 1 && n < 1) return false;
    }
    return true;
}

}  // namespace glsm
