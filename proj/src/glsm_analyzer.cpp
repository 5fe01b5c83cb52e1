#include "glsm/glsm_analyzer.hpp"

#include <algorithm>
#include <functional>

namespace glsm {

namespace {

std::string support_names(const ModelInput& m, const Support& s) {
    std::string out = "{";
    bool first = true;
    for (std::size_t j : s) {
        if (!first) out += ",";
        out += m.variables[j];
        first = false;
    }
    return out + "}";
}

}  // namespace

ValidationReport validate_model(const ModelInput& m) {
    ValidationReport rep;
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        rep.checks.push_back({name, pass, detail});
    };

    const std::size_t n = m.variables.size();
    bool dims_ok = m.gauge.cols() == n && m.rcharge.c.size() == n &&
                   m.theta.size() == m.gauge.rows() &&
                   m.superpotential.nvars() == n;
    add("dimensions", dims_ok, dims_ok ? "" : "variable/matrix sizes inconsistent");
    if (!dims_ok) {
        rep.all_pass = false;
        return rep;
    }

    Int g = 0;
    for (const auto& ci : m.rcharge.c) g = int_gcd(g, ci);
    add("rcharge_gcd", g == 1, g == 1 ? "" : "gcd of R-weights is " + g.str());

    try {
        rep.gamma = build_gamma(m.gauge, m.rcharge);
        add("gamma_compatibility", true,
            "G and the R-charge circle meet in the cyclic group of order " +
                m.rcharge.d.str());
    } catch (const CompatibilityError& e) {
        add("gamma_compatibility", false, e.what());
    }

    if (m.superpotential.is_zero()) {
        add("superpotential_nonzero", false, "superpotential is the zero polynomial");
    } else {
        add("superpotential_nonzero", true, "");
    }

    bool g_invariant = !m.superpotential.is_zero();
    for (std::size_t i = 0; i < m.gauge.rows() && g_invariant; ++i) {
        auto wd = m.superpotential.weighted_degree(to_rat(m.gauge.row(i)));
        if (wd.kind != Polynomial::WeightedDegree::Quasihomogeneous || wd.degree != 0)
            g_invariant = false;
    }
    add("gauge_invariance", g_invariant,
        g_invariant ? "" : "W is not invariant under every gauge factor");

    auto wr = m.superpotential.weighted_degree(to_rat(m.rcharge.c));
    bool r_quasi = wr.kind == Polynomial::WeightedDegree::Quasihomogeneous &&
                   wr.degree == Rat(m.rcharge.d);
    add("r_quasihomogeneous", r_quasi,
        r_quasi ? "" : "W is not R-quasihomogeneous of degree d");

    Level tau = level_of_theta(m.theta);
    StrongRegularity sr = is_strongly_regular(m.gauge, tau);
    std::string detail;
    if (!sr.semistable_nonempty) detail = "no semistable points";
    else if (sr.violating_cone)
        detail = "level lies in the rank-deficient cone of " + support_names(m, *sr.violating_cone);
    add("strongly_regular", sr.regular, detail);

    if (m.epsilon == Epsilon::Infinity) {
        if (rep.gamma && sr.regular) {
            bool good = is_good_lift(*rep.gamma, m.theta, m.effective_lift());
            add("good_lift", good, good ? "" : "the chosen lift shrinks the semistable locus");
        } else {
            add("good_lift", false, "not checkable: earlier checks failed");
        }
    }

    rep.all_pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                               [](const ValidationCheck& c) { return c.pass; });
    return rep;
}

namespace {

// Variables usable as p-fields: appearing in W only with exponent 1.
std::vector<std::size_t> linear_candidates(const Polynomial& w) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < w.nvars(); ++v) {
        bool occurs = false, linear = true;
        for (const auto& [e, c] : w.terms()) {
            if (e[v] == 0) continue;
            occurs = true;
            if (e[v] > 1) { linear = false; break; }
        }
        if (occurs && linear) out.push_back(v);
    }
    return out;
}

// A p-set is valid when every monomial of W contains exactly one of its
// members. Among valid sets we pick the largest; ties go to the set using
// later variables (p-fields conventionally come last).
std::optional<std::vector<std::size_t>> choose_p_set(const Polynomial& w) {
    auto cand = linear_candidates(w);
    if (cand.empty() || cand.size() > 16) return std::nullopt;
    std::optional<std::vector<std::size_t>> best;
    for (std::size_t mask = 1; mask < (std::size_t{1} << cand.size()); ++mask) {
        std::vector<std::size_t> p;
        for (std::size_t i = 0; i < cand.size(); ++i)
            if (mask & (std::size_t{1} << i)) p.push_back(cand[i]);
        bool valid = true;
        for (const auto& [e, c] : w.terms()) {
            int hits = 0;
            for (std::size_t v : p) hits += (e[v] > 0);
            if (hits != 1) { valid = false; break; }
        }
        if (!valid) continue;
        if (!best || p.size() > best->size() ||
            (p.size() == best->size() &&
             std::lexicographical_compare(best->rbegin(), best->rend(), p.rbegin(), p.rend())))
            best = p;
    }
    return best;
}

}  // namespace

std::vector<CriticalComponent> critical_components(const ModelInput& m,
                                                   bool transversality_asserted) {
    const std::size_t n = m.variables.size();
    const Polynomial& w = m.superpotential;
    Level tau = level_of_theta(m.theta);

    auto raw = [&]() {
        CriticalComponent c;
        c.kind = CriticalComponent::Kind::RawSystem;
        for (std::size_t v = 0; v < n; ++v) {
            Polynomial d = w.partial(v);
            if (!d.is_zero()) c.equations.push_back(d);
        }
        for (std::size_t v = 0; v < n; ++v) c.support.insert(v);
        c.survives_semistability = true;
        return std::vector<CriticalComponent>{c};
    };

    if (w.is_zero()) return raw();
    auto pset = choose_p_set(w);
    if (!pset || !transversality_asserted) return raw();

    Support pvars(pset->begin(), pset->end());
    Support xvars;  // variables W actually constrains
    for (std::size_t v = 0; v < n; ++v)
        if (w.mentions(v) && !pvars.count(v)) xvars.insert(v);

    std::vector<CriticalComponent> out;

    CriticalComponent zero_section;  // all x-variables vanish, p free
    zero_section.kind = CriticalComponent::Kind::CoordinateSubspace;
    for (std::size_t v = 0; v < n; ++v)
        if (!xvars.count(v)) zero_section.support.insert(v);
    zero_section.survives_semistability =
        support_semistable(m.gauge, tau, zero_section.support);
    out.push_back(std::move(zero_section));

    CriticalComponent hyper;  // p = 0 and F_j = 0 inside the x-subspace
    hyper.kind = CriticalComponent::Kind::HypersurfaceInSubspace;
    for (std::size_t v = 0; v < n; ++v)
        if (!pvars.count(v)) hyper.support.insert(v);
    for (std::size_t v : *pset) hyper.equations.push_back(w.partial(v));
    hyper.survives_semistability = support_semistable(m.gauge, tau, hyper.support);
    out.push_back(std::move(hyper));
    return out;
}

NondegeneracyResult nondegeneracy_check(const ModelInput& m,
                                        std::vector<CriticalComponent> components) {
    NondegeneracyResult res;
    bool all_compact = true, any_unknown = false;
    for (auto& c : components) {
        if (c.kind == CriticalComponent::Kind::RawSystem) {
            c.quotient_compact = Compactness::Unknown;
            any_unknown = true;
            continue;
        }
        if (!c.survives_semistability) {
            // Empty in the quotient; vacuously harmless.
            c.quotient_compact = Compactness::Compact;
            continue;
        }
        bool trivial = affine_support_trivial(m.gauge, c.support);
        c.quotient_compact = trivial ? Compactness::Compact : Compactness::Noncompact;
        if (!trivial) all_compact = false;
    }
    res.components = std::move(components);
    res.overall = any_unknown ? Compactness::Unknown
                 : all_compact ? Compactness::Compact
                               : Compactness::Noncompact;
    return res;
}

Rat age_of(const PhaseVector& gamma) { return gamma.age(); }

std::vector<Sector> sectors(const ModelInput& m, const GammaData& gamma) {
    Level tau = level_of_theta(m.theta);
    auto minimal = semistable_supports(m.gauge, tau);
    const std::size_t n = m.variables.size();

    std::vector<Sector> out;
    auto seen = [&](const PhaseVector& a) {
        return std::any_of(out.begin(), out.end(),
                           [&](const Sector& s) { return s.action == a; });
    };
    for (const auto& s : minimal) {
        std::vector<std::size_t> idx(s.begin(), s.end());
        for (const auto& t : finite_group_elements(m.gauge.select_columns(idx))) {
            RatVector act(n);
            for (std::size_t j = 0; j < n; ++j)
                act[j] = dot(t.entries(), m.gauge.col(j));
            PhaseVector action(std::move(act));
            if (seen(action)) continue;
            Sector sec;
            sec.fixed_support.clear();
            for (std::size_t j = 0; j < n; ++j)
                if (action[j] == 0) sec.fixed_support.insert(j);
            if (!support_semistable(m.gauge, tau, sec.fixed_support)) continue;
            sec.age = action.age();
            sec.degree_shift = -2 * sec.age + 2 * gamma.q;
            sec.action = std::move(action);
            out.push_back(std::move(sec));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Sector& a, const Sector& b) { return a.action < b.action; });
    return out;
}

Rat virtual_dimension(const GammaData& gamma, const Int& genus, std::size_t marks,
                      const RatVector& beta, const std::vector<Sector>& insertions) {
    if (insertions.size() != marks)
        throw std::invalid_argument("insertion count must equal the number of marks");
    if (beta.size() != gamma.m() + 1)
        throw std::invalid_argument("beta must pair against the extended character lattice");

    // Anticanonical character: sum of the coordinate weight characters.
    RatVector anticanonical(gamma.m() + 1, Rat(0));
    for (std::size_t j = 0; j < gamma.n(); ++j)
        for (std::size_t i = 0; i <= gamma.m(); ++i)
            anticanonical[i] += Rat(gamma.extended.at(i, j));

    Rat dim = dot(beta, anticanonical);
    dim += (central_charge(gamma) - 3) * (Rat(1) - Rat(genus));
    dim += Rat(Int(marks));
    for (const auto& ins : insertions) dim -= (ins.age - gamma.q);
    return dim;
}

std::vector<FixedLocus> fixed_loci(const ModelInput& m, const IntVector& extra_action) {
    if (extra_action.size() != m.variables.size())
        throw std::invalid_argument("extra action length mismatch");
    Level tau = level_of_theta(m.theta);
    auto components = critical_components(m, /*transversality_asserted=*/true);

    std::vector<FixedLocus> out;
    auto equations_key = [](const std::vector<Polynomial>& eqs) {
        std::string k;
        for (const auto& e : eqs) k += e.to_string() + ";";
        return k;
    };
    auto add_unique = [&](FixedLocus l) {
        for (const auto& o : out)
            if (o.support == l.support && equations_key(o.equations) == equations_key(l.equations))
                return;
        out.push_back(std::move(l));
    };

    for (const auto& comp : components) {
        if (comp.kind == CriticalComponent::Kind::RawSystem)
            throw StructureError("fixed_loci requires a structured superpotential");
        if (!comp.survives_semistability) continue;
        std::vector<std::size_t> ambient(comp.support.begin(), comp.support.end());

        // Valid S: the extra weights restricted to S lie in the row span of
        // the gauge weights restricted to S, and S stays semistable.
        auto valid = [&](const Support& s) {
            if (!support_semistable(m.gauge, tau, s)) return false;
            std::vector<RatVector> rows;
            std::vector<std::size_t> idx(s.begin(), s.end());
            for (std::size_t i = 0; i < m.gauge.rows(); ++i) {
                RatVector r(idx.size());
                for (std::size_t k = 0; k < idx.size(); ++k) r[k] = Rat(m.gauge.at(i, idx[k]));
                rows.push_back(std::move(r));
            }
            RatVector w(idx.size());
            for (std::size_t k = 0; k < idx.size(); ++k) w[k] = Rat(extra_action[idx[k]]);
            return in_span(rows, w);
        };

        // Maximal valid subsets of the ambient support.
        std::vector<Support> maximal;
        const std::size_t na = ambient.size();
        for (std::size_t size = na + 1; size-- > 0;) {
            std::vector<std::size_t> pick;
            std::function<void(std::size_t)> rec = [&](std::size_t start) {
                if (pick.size() == size) {
                    Support s(pick.begin(), pick.end());
                    for (const auto& bigger : maximal)
                        if (std::includes(bigger.begin(), bigger.end(), s.begin(), s.end()))
                            return;
                    if (valid(s)) maximal.push_back(s);
                    return;
                }
                for (std::size_t i = start; i + (size - pick.size()) <= na; ++i) {
                    pick.push_back(ambient[i]);
                    rec(i + 1);
                    pick.pop_back();
                }
            };
            rec(0);
        }

        for (const auto& s : maximal) {
            std::vector<std::size_t> zeroed;
            for (std::size_t v = 0; v < m.variables.size(); ++v)
                if (!s.count(v)) zeroed.push_back(v);
            FixedLocus l;
            l.support = s;
            bool empty_locus = false;
            for (const auto& eq : comp.equations) {
                Polynomial r = eq.restrict_zero(zeroed);
                if (r.is_zero()) continue;  // identically satisfied on the subspace
                if (r.term_count() == 1 && r.terms().begin()->first ==
                                               Polynomial::Exponents(m.variables.size(), 0)) {
                    empty_locus = true;  // nonzero constant: no solutions
                    break;
                }
                l.equations.push_back(std::move(r));
            }
            if (!empty_locus) add_unique(std::move(l));
        }
    }
    return out;
}

}  // namespace glsm
