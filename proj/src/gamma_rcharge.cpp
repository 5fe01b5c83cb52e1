#include "glsm/gamma_rcharge.hpp"

#include "glsm/simplex.hpp"

#include <algorithm>

namespace glsm {

PhaseVector GammaData::j_power(const Int& k) const {
    RatVector e(n());
    for (std::size_t i = 0; i < n(); ++i) e[i] = Rat(k * rweights.c[i], rweights.d);
    return PhaseVector(std::move(e));
}

GammaData build_gamma(const IntMatrix& q, const RCharge& r) {
    const std::size_t n = q.cols();
    if (r.c.size() != n) throw std::invalid_argument("R-weight vector length mismatch");
    if (r.d <= 0) throw CompatibilityError("R-degree d must be positive");
    Int g = 0;
    for (const auto& ci : r.c) g = int_gcd(g, ci);
    if (g != 1) throw CompatibilityError("R-weights must have gcd 1");

    GammaData gd;
    gd.gauge = q;
    gd.rweights = r;
    gd.extended = q;
    gd.extended.append_row(r.c);

    // Order of the intersection subgroup in the lambda parameter: lambda is
    // in the gauge torus iff lambda^(c.v) = 1 for every integer kernel
    // vector v of Q.
    Int order = 0;
    for (const auto& v : kernel_basis(q)) {
        Int cv = 0;
        for (std::size_t i = 0; i < n; ++i) cv += r.c[i] * v[i];
        order = int_gcd(order, cv);
    }
    if (order == 0)
        throw CompatibilityError("R-charge circle lies inside the gauge torus; "
                                 "intersection is infinite");
    if (order < 0) order = -order;
    if (order != r.d)
        throw CompatibilityError("intersection subgroup has order " + order.str() +
                                 ", not d = " + r.d.str());

    RatVector je(n);
    for (std::size_t i = 0; i < n; ++i) je[i] = Rat(r.c[i], r.d);
    gd.j = PhaseVector(std::move(je));
    if (gd.j.order() != r.d)
        throw CompatibilityError("J does not have exact order d");

    gd.q = 0;
    for (const auto& ci : r.c) gd.q += Rat(ci, r.d);

    gd.zeta_character.assign(q.rows() + 1, Rat(0));
    gd.zeta_character.back() = Rat(r.d);

    gd.kernel_phases = finite_group_elements(gd.extended);
    if (Int(gd.kernel_phases.size()) != r.d)
        throw CompatibilityError("parametrization kernel size differs from d");
    for (const auto& k : gd.kernel_phases) {
        // zeta must kill the kernel: d * lambda-component integral.
        if (!is_integer(Rat(r.d) * k[q.rows()]))
            throw CompatibilityError("zeta is not well defined on Gamma");
    }
    return gd;
}

Rat central_charge(const GammaData& gamma) {
    return Rat(Int(gamma.n()) - Int(gamma.m())) - 2 * gamma.q;
}

namespace {

// Admissible r_levels for one support: {rho : (tau, -rho) in Cone(extended
// columns over S)} via min/max of the R-weight row on {Q_S a = tau, a >= 0}.
struct RhoInterval {
    bool feasible = false;
    bool lo_unbounded = false, hi_unbounded = false;
    Rat lo, hi;
};

RhoInterval rho_interval(const GammaData& gamma, const RatVector& tau, const Support& s) {
    std::vector<std::size_t> idx(s.begin(), s.end());
    const std::size_t m = gamma.m();
    std::vector<RatVector> a(m, RatVector(idx.size(), Rat(0)));
    for (std::size_t k = 0; k < idx.size(); ++k)
        for (std::size_t i = 0; i < m; ++i) a[i][k] = Rat(gamma.gauge.at(i, idx[k]));
    RatVector c(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) c[k] = Rat(gamma.rweights.c[idx[k]]);

    RhoInterval r;
    LpResult mn = lp_minimize(a, tau, c);
    if (mn.status == LpStatus::Infeasible) return r;
    r.feasible = true;
    // -rho ranges over [min c.a, max c.a], so rho over [-max, -min].
    LpResult mx = lp_maximize(a, tau, c);
    if (mx.status == LpStatus::Unbounded) r.lo_unbounded = true;
    else r.lo = -mx.value;
    if (mn.status == LpStatus::Unbounded) r.hi_unbounded = true;
    else r.hi = -mn.value;
    return r;
}

}  // namespace

bool is_good_lift(const GammaData& gamma, const RatVector& theta, const Lift& lift) {
    if (lift.theta != theta) throw std::invalid_argument("lift does not restrict to theta");
    Level tau = level_of_theta(theta);
    RatVector tau_ext = tau.tau;
    tau_ext.push_back(-lift.r_level);
    Level ext_level{tau_ext};
    for (const auto& s : semistable_supports(gamma.gauge, tau)) {
        if (!support_semistable(gamma.extended, ext_level, s)) return false;
    }
    return true;
}

GoodLiftInterval good_lift_interval(const GammaData& gamma, const RatVector& theta) {
    Level tau = level_of_theta(theta);
    auto minimal = semistable_supports(gamma.gauge, tau);

    GoodLiftInterval out;
    if (minimal.empty()) return out;
    out.any_good = true;
    out.lo_unbounded = out.hi_unbounded = true;
    for (const auto& s : minimal) {
        RhoInterval r = rho_interval(gamma, tau.tau, s);
        if (!r.feasible) {  // cannot happen for a semistable support
            out.any_good = false;
            return out;
        }
        if (!r.lo_unbounded && (out.lo_unbounded || r.lo > out.lo)) {
            out.lo_unbounded = false;
            out.lo = r.lo;
            out.lo_witness = s;
        }
        if (!r.hi_unbounded && (out.hi_unbounded || r.hi < out.hi)) {
            out.hi_unbounded = false;
            out.hi = r.hi;
            out.hi_witness = s;
        }
    }
    if (!out.lo_unbounded && !out.hi_unbounded && out.lo > out.hi) out.any_good = false;
    return out;
}

ShiftResult rcharge_shift(const GammaData& gamma, const RatVector& combo) {
    const std::size_t m = gamma.m(), n = gamma.n();
    if (combo.size() != m) throw std::invalid_argument("combo length mismatch");

    RatVector w(n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = Rat(gamma.rweights.c[i]);
        for (std::size_t k = 0; k < m; ++k) w[i] += combo[k] * Rat(gamma.gauge.at(k, i));
    }
    Int s = common_denominator(w);
    IntVector cs(n);
    Int g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        cs[i] = numerator(w[i] * Rat(s));
        g = int_gcd(g, cs[i]);
    }
    Int ds = gamma.rweights.d * s;
    if (g == 0) throw CompatibilityError("shifted R-weights vanish identically");
    if (ds % g != 0)
        throw CompatibilityError("shifted R-weights cannot be normalized to integer data");
    for (auto& ci : cs) ci /= g;
    ds /= g;

    ShiftResult res;
    res.gamma = build_gamma(gamma.gauge, RCharge{cs, ds});
    res.rescaled = (ds != gamma.rweights.d);

    // Lemma checks: same Gamma as a subtorus (equal rational row spans of the
    // extended matrices), J, q and central charge.
    std::vector<RatVector> rows1, rows2, all;
    for (std::size_t i = 0; i <= m; ++i) {
        rows1.push_back(to_rat(gamma.extended.row(i)));
        rows2.push_back(to_rat(res.gamma.extended.row(i)));
    }
    all = rows1;
    all.insert(all.end(), rows2.begin(), rows2.end());
    std::size_t r1 = rat_rank(rows1);
    res.same_group = (r1 == rat_rank(rows2)) && (r1 == rat_rank(all));

    // "Same J" in the sense of the intersection subgroup: the cyclic groups
    // generated by the two J elements coincide as sets of diagonal actions.
    auto j_subgroup = [](const GammaData& g) {
        std::vector<PhaseVector> els;
        for (Int k = 0; k < g.rweights.d; ++k) els.push_back(g.j_power(k));
        std::sort(els.begin(), els.end());
        return els;
    };
    res.same_j = (j_subgroup(res.gamma) == j_subgroup(gamma));
    res.cy_rows = true;
    for (std::size_t i = 0; i < m; ++i) {
        Int sum = 0;
        for (std::size_t jj = 0; jj < n; ++jj) sum += gamma.gauge.at(i, jj);
        if (sum != 0) res.cy_rows = false;
    }
    res.q_equal = (res.gamma.q == gamma.q);
    res.chat_equal = (central_charge(res.gamma) == central_charge(gamma));
    return res;
}

}  // namespace glsm
