#include "glsm/simplex.hpp"

#include <cassert>
#include <stdexcept>

namespace glsm {

namespace {

// Dense tableau in canonical form: basis columns are unit vectors.
struct Tableau {
    std::size_t m, n;                    // constraint rows, total variables
    std::vector<RatVector> t;            // m rows of length n+1 (last = rhs)
    RatVector red;                       // reduced costs, length n
    Rat obj;                             // current objective value
    std::vector<std::size_t> basis;      // basic variable per row

    void pivot(std::size_t pr, std::size_t pc) {
        Rat piv = t[pr][pc];
        for (auto& e : t[pr]) e /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == pr || t[i][pc] == 0) continue;
            Rat f = t[i][pc];
            for (std::size_t j = 0; j <= n; ++j) t[i][j] -= f * t[pr][j];
        }
        if (red[pc] != 0) {
            Rat f = red[pc];
            for (std::size_t j = 0; j < n; ++j) red[j] -= f * t[pr][j];
            obj += f * t[pr][n];
        }
        basis[pr] = pc;
    }

    // Bland's rule; `allowed` restricts entering variables.
    // Returns false when optimal, throws on unboundedness.
    bool step(std::size_t allowed) {
        std::size_t enter = n;
        for (std::size_t j = 0; j < allowed; ++j) {
            if (red[j] < 0) { enter = j; break; }
        }
        if (enter == n) return false;
        std::size_t leave = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][n] / t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) throw LpStatus::Unbounded;
        pivot(leave, enter);
        return true;
    }
};

}  // namespace

LpResult lp_minimize(const std::vector<RatVector>& a, const RatVector& b, const RatVector& c) {
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("lp: ragged constraint matrix");
    if (b.size() != m) throw std::invalid_argument("lp: rhs length mismatch");

    Tableau tb;
    tb.m = m;
    tb.n = n + m;  // originals then one artificial per row
    tb.t.assign(m, RatVector(tb.n + 1, Rat(0)));
    tb.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        Rat sign = (b[i] < 0) ? Rat(-1) : Rat(1);
        for (std::size_t j = 0; j < n; ++j) tb.t[i][j] = sign * a[i][j];
        tb.t[i][n + i] = 1;
        tb.t[i][tb.n] = sign * b[i];
        tb.basis[i] = n + i;
    }

    // Phase 1: minimize the sum of artificials.
    tb.red.assign(tb.n, Rat(0));
    tb.obj = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) tb.red[j] -= tb.t[i][j];
        tb.obj += tb.t[i][tb.n];
    }
    try {
        while (tb.step(n)) {}
    } catch (LpStatus) {
        // Phase 1 objective is bounded below by 0; unbounded cannot happen.
        throw std::logic_error("lp: phase 1 reported unbounded");
    }
    if (tb.obj != 0) return {LpStatus::Infeasible, Rat(0), {}};

    // Drive artificials out of the basis; rows that cannot pivot are redundant.
    for (std::size_t i = 0; i < tb.m;) {
        if (tb.basis[i] < n) { ++i; continue; }
        std::size_t j = 0;
        while (j < n && tb.t[i][j] == 0) ++j;
        if (j < n) {
            tb.pivot(i, j);
            ++i;
        } else {
            tb.t.erase(tb.t.begin() + static_cast<long>(i));
            tb.basis.erase(tb.basis.begin() + static_cast<long>(i));
            --tb.m;
        }
    }

    // Phase 2 with the real objective.
    tb.red.assign(tb.n, Rat(0));
    for (std::size_t j = 0; j < n; ++j) tb.red[j] = c[j];
    tb.obj = 0;
    for (std::size_t i = 0; i < tb.m; ++i) {
        std::size_t bj = tb.basis[i];
        assert(bj < n);
        if (c[bj] == 0) continue;
        for (std::size_t j = 0; j < tb.n; ++j) tb.red[j] -= c[bj] * tb.t[i][j];
        tb.obj += c[bj] * tb.t[i][tb.n];
    }
    try {
        while (tb.step(n)) {}
    } catch (LpStatus) {
        return {LpStatus::Unbounded, Rat(0), {}};
    }

    LpResult res;
    res.status = LpStatus::Optimal;
    res.value = tb.obj;
    res.x.assign(n, Rat(0));
    for (std::size_t i = 0; i < tb.m; ++i)
        if (tb.basis[i] < n) res.x[tb.basis[i]] = tb.t[i][tb.n];
    return res;
}

LpResult lp_maximize(const std::vector<RatVector>& a, const RatVector& b, const RatVector& c) {
    RatVector neg(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) neg[j] = -c[j];
    LpResult r = lp_minimize(a, b, neg);
    if (r.status == LpStatus::Optimal) r.value = -r.value;
    return r;
}

}  // namespace glsm
