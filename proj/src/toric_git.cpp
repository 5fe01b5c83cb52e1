#include "glsm/toric_git.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace glsm {

namespace {

bool is_zero(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

std::vector<RatVector> columns_of(const IntMatrix& q, const Support& s) {
    std::vector<RatVector> cols;
    for (std::size_t j : s) cols.push_back(to_rat(q.col(j)));
    return cols;
}

void subsets_up_to(std::size_t n, std::size_t k,
                   const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        visit(cur);
        if (cur.size() == k) return;
        for (std::size_t j = start; j < n; ++j) {
            cur.push_back(j);
            rec(j + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

// All inclusion-minimal hitting sets of a family of nonempty sets.
std::vector<Support> minimal_hitting_sets(const std::vector<Support>& family,
                                          std::size_t universe) {
    std::vector<Support> found;
    Support cur;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        while (idx < family.size()) {
            bool hit = false;
            for (std::size_t e : family[idx])
                if (cur.count(e)) { hit = true; break; }
            if (!hit) break;
            ++idx;
        }
        if (idx == family.size()) {
            for (const auto& f : found)
                if (std::includes(cur.begin(), cur.end(), f.begin(), f.end())) return;
            found.push_back(cur);
            return;
        }
        for (std::size_t e : family[idx]) {
            cur.insert(e);
            rec(idx + 1);
            cur.erase(e);
        }
    };
    rec(0);
    // Branching can emit a superset before the subset is found; filter again.
    std::vector<Support> minimal;
    for (const auto& h : found) {
        bool keep = true;
        for (const auto& other : found)
            if (other != h &&
                std::includes(h.begin(), h.end(), other.begin(), other.end())) {
                keep = false;
                break;
            }
        if (keep) minimal.push_back(h);
    }
    std::sort(minimal.begin(), minimal.end());
    minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
    (void)universe;
    return minimal;
}

bool cross_positive(const IntVector& a, const IntVector& b) {
    return a[0] * b[1] - a[1] * b[0] > 0;
}

IntVector primitive(const IntVector& v) {
    Int g = 0;
    for (const auto& x : v) g = int_gcd(g, x);
    IntVector p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i] / g;
    return p;
}

}  // namespace

Level level_of_theta(const RatVector& theta) {
    RatVector tau(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) tau[i] = -theta[i];
    return {tau};
}

bool support_semistable(const IntMatrix& q, const Level& tau, const Support& s) {
    if (tau.tau.size() != q.rows()) throw std::invalid_argument("level length mismatch");
    if (is_zero(tau.tau)) return true;
    return cone_member(columns_of(q, s), tau.tau);
}

std::vector<Support> semistable_supports(const IntMatrix& q, const Level& tau) {
    if (tau.tau.size() != q.rows()) throw std::invalid_argument("level length mismatch");
    std::vector<Support> minimal;
    subsets_up_to(q.cols(), q.rows(), [&](const std::vector<std::size_t>& idx) {
        Support s(idx.begin(), idx.end());
        for (const auto& m : minimal)
            if (std::includes(s.begin(), s.end(), m.begin(), m.end())) return;
        if (support_semistable(q, tau, s)) minimal.push_back(s);
    });
    // DFS order can record a superset before its subset; filter once more.
    std::vector<Support> out;
    for (const auto& s : minimal) {
        bool keep = true;
        for (const auto& t : minimal)
            if (t != s && std::includes(s.begin(), s.end(), t.begin(), t.end())) {
                keep = false;
                break;
            }
        if (keep) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Support> unstable_subspaces(const IntMatrix& q, const Level& tau) {
    std::vector<Support> minimal = semistable_supports(q, tau);
    Support full;
    for (std::size_t j = 0; j < q.cols(); ++j) full.insert(j);
    if (minimal.empty()) return {full};                       // everything unstable
    if (!minimal.empty() && minimal.front().empty()) return {};  // everything semistable
    // A support is unstable iff it misses every minimal semistable support,
    // so the maximal unstable supports are complements of minimal hitting sets.
    std::vector<Support> result;
    for (const auto& h : minimal_hitting_sets(minimal, q.cols())) {
        Support comp;
        std::set_difference(full.begin(), full.end(), h.begin(), h.end(),
                            std::inserter(comp, comp.begin()));
        result.push_back(comp);
    }
    std::sort(result.begin(), result.end());
    return result;
}

StrongRegularity is_strongly_regular(const IntMatrix& q, const Level& tau) {
    StrongRegularity res;
    res.semistable_nonempty = !semistable_supports(q, tau).empty();
    if (!res.semistable_nonempty) return res;
    // Any rank-deficient cone containing tau reduces (Caratheodory) to one
    // spanned by at most m-1 columns, so small subsets suffice.
    bool violated = false;
    Support witness;
    subsets_up_to(q.cols(), q.rows() >= 1 ? q.rows() - 1 : 0,
                  [&](const std::vector<std::size_t>& idx) {
                      if (violated) return;
                      Support s(idx.begin(), idx.end());
                      std::vector<RatVector> cols = columns_of(q, s);
                      if (cone_member(cols, tau.tau)) {
                          violated = true;
                          witness = s;
                      }
                  });
    if (violated) {
        res.violating_cone = witness;
        return res;
    }
    res.regular = true;
    return res;
}

std::vector<PhaseChamber> chambers(const IntMatrix& q) {
    const std::size_t m = q.rows();
    if (m == 0 || q.cols() == 0) throw std::domain_error("chambers: empty weight matrix");
    if (rank_of(q) < m)
        throw std::domain_error("chambers: degenerate weight matrix (rank below m)");
    if (m > 2)
        throw std::domain_error("chambers: exact enumeration limited to m <= 2; "
                                "use classify_levels with candidate levels");

    auto make_chamber = [&](RatVector rep, std::vector<RatVector> walls) {
        PhaseChamber c;
        c.representative = std::move(rep);
        c.walls = std::move(walls);
        Level lvl{c.representative};
        c.minimal_supports = semistable_supports(q, lvl);
        c.strongly_regular = is_strongly_regular(q, lvl).regular;
        return c;
    };

    std::vector<PhaseChamber> out;
    if (m == 1) {
        bool pos = false, neg = false;
        for (std::size_t j = 0; j < q.cols(); ++j) {
            if (q.at(0, j) > 0) pos = true;
            if (q.at(0, j) < 0) neg = true;
        }
        if (pos) out.push_back(make_chamber({Rat(1)}, {{Rat(0)}}));
        if (neg) out.push_back(make_chamber({Rat(-1)}, {{Rat(0)}}));
        return out;
    }

    // m == 2: fan of the distinct column rays, sorted counterclockwise.
    std::vector<IntVector> rays;
    for (std::size_t j = 0; j < q.cols(); ++j) {
        IntVector c = q.col(j);
        if (c[0] == 0 && c[1] == 0) continue;
        IntVector p = primitive(c);
        if (std::find(rays.begin(), rays.end(), p) == rays.end()) rays.push_back(p);
    }
    auto half = [](const IntVector& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
    std::sort(rays.begin(), rays.end(), [&](const IntVector& a, const IntVector& b) {
        if (half(a) != half(b)) return half(a) < half(b);
        return cross_positive(a, b);
    });
    const std::size_t nr = rays.size();
    for (std::size_t i = 0; i < nr; ++i) {
        const IntVector& r1 = rays[i];
        const IntVector& r2 = rays[(i + 1) % nr];
        if (!cross_positive(r1, r2)) continue;  // gap of pi or more: outside the cone
        RatVector rep = {Rat(r1[0] + r2[0]), Rat(r1[1] + r2[1])};
        out.push_back(make_chamber(rep, {to_rat(r1), to_rat(r2)}));
    }
    return out;
}

std::vector<PhaseChamber> classify_levels(const IntMatrix& q, const std::vector<RatVector>& levels) {
    std::vector<PhaseChamber> out;
    for (const auto& lvl : levels) {
        Level l{lvl};
        auto fam = semistable_supports(q, l);
        auto it = std::find_if(out.begin(), out.end(), [&](const PhaseChamber& c) {
            return c.minimal_supports == fam;
        });
        if (it != out.end()) continue;
        PhaseChamber c;
        c.representative = lvl;
        c.minimal_supports = fam;
        c.strongly_regular = is_strongly_regular(q, l).regular;
        out.push_back(c);
    }
    return out;
}

bool affine_support_trivial(const IntMatrix& q, const Support& s) {
    return !nonneg_kernel_exists(q, s);
}

}  // namespace glsm
