#include "glsm/cli_report.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace glsm {

namespace {

using ojson = nlohmann::ordered_json;

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

Int int_from_string(const std::string& s, std::size_t line) {
    try {
        Rat r = rat_from_string(s);
        if (!is_integer(r)) throw std::invalid_argument("not an integer");
        return numerator(r);
    } catch (const std::invalid_argument&) {
        throw ParseError(line, "expected an integer, got \"" + s + "\"");
    }
}

Rat rat_checked(const std::string& s, std::size_t line) {
    try {
        return rat_from_string(s);
    } catch (const std::invalid_argument&) {
        throw ParseError(line, "expected a rational \"a\" or \"a/b\", got \"" + s + "\"");
    }
}

struct RawEntry {
    std::string value;
    std::size_t line;
};

}  // namespace

ModelFile parse_model_file(const std::string& text) {
    std::map<std::string, std::vector<RawEntry>> model_keys, graph_keys;
    std::string section;
    std::size_t section_line_model = 0, section_line_graph = 0;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError(lineno, "unterminated section header");
            section = line.substr(1, line.size() - 2);
            if (section == "model") section_line_model = lineno;
            else if (section == "graph") section_line_graph = lineno;
            else throw ParseError(lineno, "unknown section [" + section + "]");
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(lineno, "expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (section == "model") model_keys[key].push_back({value, lineno});
        else if (section == "graph") graph_keys[key].push_back({value, lineno});
        else throw ParseError(lineno, "key outside any section");
    }

    auto single = [](std::map<std::string, std::vector<RawEntry>>& keys, const std::string& k,
                     std::size_t section_line) -> RawEntry& {
        auto it = keys.find(k);
        if (it == keys.end()) throw ParseError(section_line, "missing required key \"" + k + "\"");
        if (it->second.size() > 1)
            throw ParseError(it->second[1].line, "duplicate key \"" + k + "\"");
        return it->second.front();
    };
    auto optional_single = [](std::map<std::string, std::vector<RawEntry>>& keys,
                              const std::string& k) -> RawEntry* {
        auto it = keys.find(k);
        if (it == keys.end()) return nullptr;
        if (it->second.size() > 1)
            throw ParseError(it->second[1].line, "duplicate key \"" + k + "\"");
        return &it->second.front();
    };

    ModelFile file;
    if (!model_keys.empty()) {
        ModelInput m;
        m.variables = split_ws(single(model_keys, "variables", section_line_model).value);
        if (m.variables.empty())
            throw ParseError(section_line_model, "variables list is empty");
        const std::size_t n = m.variables.size();

        auto rows_it = model_keys.find("gauge_weights");
        if (rows_it == model_keys.end())
            throw ParseError(section_line_model, "missing required key \"gauge_weights\"");
        m.gauge = IntMatrix(rows_it->second.size(), n);
        for (std::size_t i = 0; i < rows_it->second.size(); ++i) {
            auto toks = split_ws(rows_it->second[i].value);
            if (toks.size() != n)
                throw ParseError(rows_it->second[i].line,
                                 "gauge row has " + std::to_string(toks.size()) +
                                     " entries, expected " + std::to_string(n));
            for (std::size_t j = 0; j < n; ++j)
                m.gauge.at(i, j) = int_from_string(toks[j], rows_it->second[i].line);
        }

        RawEntry& rw = single(model_keys, "r_weights", section_line_model);
        auto rtoks = split_ws(rw.value);
        if (rtoks.size() != n)
            throw ParseError(rw.line, "r_weights has " + std::to_string(rtoks.size()) +
                                          " entries, expected " + std::to_string(n));
        for (const auto& t : rtoks) m.rcharge.c.push_back(int_from_string(t, rw.line));
        RawEntry& rd = single(model_keys, "r_degree", section_line_model);
        m.rcharge.d = int_from_string(rd.value, rd.line);

        RawEntry& wp = single(model_keys, "superpotential", section_line_model);
        try {
            m.superpotential = Polynomial::parse(wp.value, m.variables);
        } catch (const std::invalid_argument& e) {
            throw ParseError(wp.line, std::string("superpotential: ") + e.what());
        }

        RawEntry& th = single(model_keys, "theta", section_line_model);
        auto ttoks = split_ws(th.value);
        if (ttoks.size() != m.gauge.rows())
            throw ParseError(th.line, "theta has " + std::to_string(ttoks.size()) +
                                          " entries, expected " + std::to_string(m.gauge.rows()));
        for (const auto& t : ttoks) m.theta.push_back(rat_checked(t, th.line));

        if (RawEntry* ep = optional_single(model_keys, "epsilon")) {
            try {
                m.epsilon = epsilon_from_string(ep->value);
            } catch (const std::invalid_argument& e) {
                throw ParseError(ep->line, e.what());
            }
        }
        if (RawEntry* lr = optional_single(model_keys, "lift_r_level"))
            m.lift = Lift{m.theta, rat_checked(lr->value, lr->line)};
        if (RawEntry* ea = optional_single(model_keys, "extra_action")) {
            auto toks = split_ws(ea->value);
            if (toks.size() != n)
                throw ParseError(ea->line, "extra_action has " + std::to_string(toks.size()) +
                                               " entries, expected " + std::to_string(n));
            IntVector action;
            for (const auto& t : toks) action.push_back(int_from_string(t, ea->line));
            file.extra_action = std::move(action);
        }

        for (const auto& [k, v] : model_keys) {
            static const std::vector<std::string> known = {
                "variables", "gauge_weights", "r_weights", "r_degree",
                "superpotential", "theta", "epsilon", "lift_r_level", "extra_action"};
            if (std::find(known.begin(), known.end(), k) == known.end())
                throw ParseError(v.front().line, "unknown key \"" + k + "\" in [model]");
        }
        file.model = std::move(m);
    }

    if (!graph_keys.empty()) {
        GraphSpec gs;
        auto vit = graph_keys.find("vertex");
        if (vit == graph_keys.end())
            throw ParseError(section_line_graph, "missing required key \"vertex\"");
        for (const auto& entry : vit->second) {
            DualGraph::Vertex v;
            bool got_genus = false;
            for (const auto& tok : split_ws(entry.value)) {
                std::size_t eq = tok.find('=');
                if (eq == std::string::npos)
                    throw ParseError(entry.line, "vertex token \"" + tok + "\" is not key=value");
                std::string k = tok.substr(0, eq), val = tok.substr(eq + 1);
                if (k == "genus") {
                    v.genus = int_from_string(val, entry.line);
                    if (v.genus < 0) throw ParseError(entry.line, "genus must be nonnegative");
                    got_genus = true;
                } else if (k == "marks") {
                    std::istringstream ms(val);
                    std::string mark;
                    while (std::getline(ms, mark, ','))
                        if (!mark.empty()) v.markings.push_back(mark);
                } else {
                    throw ParseError(entry.line, "unknown vertex attribute \"" + k + "\"");
                }
            }
            if (!got_genus) throw ParseError(entry.line, "vertex needs genus=<g>");
            gs.graph.vertices.push_back(std::move(v));
        }
        if (auto eit = graph_keys.find("edge"); eit != graph_keys.end()) {
            for (const auto& entry : eit->second) {
                auto toks = split_ws(entry.value);
                if (toks.size() != 2)
                    throw ParseError(entry.line, "edge needs exactly two vertex indices");
                Int a = int_from_string(toks[0], entry.line);
                Int b = int_from_string(toks[1], entry.line);
                if (a < 0 || b < 0 || a >= Int(gs.graph.vertices.size()) ||
                    b >= Int(gs.graph.vertices.size()))
                    throw ParseError(entry.line, "edge endpoint out of range");
                gs.graph.edges.emplace_back(static_cast<std::size_t>(a),
                                            static_cast<std::size_t>(b));
            }
        }
        if (!gs.graph.connected())
            throw ParseError(section_line_graph, "dual graph must be connected");
        if (RawEntry* b = optional_single(graph_keys, "b")) {
            gs.b = int_from_string(b->value, b->line);
            if (*gs.b <= 0) throw ParseError(b->line, "b must be positive");
        }
        if (RawEntry* bd = optional_single(graph_keys, "base_degrees")) {
            auto toks = split_ws(bd->value);
            if (toks.size() != gs.graph.vertices.size())
                throw ParseError(bd->line, "base_degrees length must match vertex count");
            for (const auto& t : toks) gs.base_degrees.push_back(int_from_string(t, bd->line));
        }
        if (RawEntry* ld = optional_single(graph_keys, "lift_degrees")) {
            auto toks = split_ws(ld->value);
            if (toks.size() != gs.graph.vertices.size())
                throw ParseError(ld->line, "lift_degrees length must match vertex count");
            RatVector lifts;
            for (const auto& t : toks) lifts.push_back(rat_checked(t, ld->line));
            gs.lift_degrees = std::move(lifts);
        }
        for (const auto& [k, v] : graph_keys) {
            static const std::vector<std::string> known = {"vertex", "edge", "b",
                                                           "base_degrees", "lift_degrees"};
            if (std::find(known.begin(), known.end(), k) == known.end())
                throw ParseError(v.front().line, "unknown key \"" + k + "\" in [graph]");
        }
        file.graph = std::move(gs);
    }

    if (!file.model && !file.graph) throw ParseError(1, "file declares no [model] or [graph]");
    return file;
}

ModelFile load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model_file(buf.str());
}

std::string write_model_file(const ModelFile& f) {
    std::ostringstream out;
    auto join_rats = [](const RatVector& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += " ";
            s += rat_to_string(v[i]);
        }
        return s;
    };
    auto join_ints = [](const IntVector& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += " ";
            s += v[i].str();
        }
        return s;
    };
    if (f.model) {
        const ModelInput& m = *f.model;
        out << "[model]\n";
        out << "variables =";
        for (const auto& v : m.variables) out << " " << v;
        out << "\n";
        for (std::size_t i = 0; i < m.gauge.rows(); ++i)
            out << "gauge_weights = " << join_ints(m.gauge.row(i)) << "\n";
        out << "r_weights = " << join_ints(m.rcharge.c) << "\n";
        out << "r_degree = " << m.rcharge.d.str() << "\n";
        out << "superpotential = " << m.superpotential.to_string() << "\n";
        out << "theta = " << join_rats(m.theta) << "\n";
        out << "epsilon = " << epsilon_to_string(m.epsilon) << "\n";
        if (m.lift) out << "lift_r_level = " << rat_to_string(m.lift->r_level) << "\n";
        if (f.extra_action) out << "extra_action = " << join_ints(*f.extra_action) << "\n";
    }
    if (f.graph) {
        const GraphSpec& gs = *f.graph;
        out << "[graph]\n";
        for (const auto& v : gs.graph.vertices) {
            out << "vertex = genus=" << v.genus.str();
            if (!v.markings.empty()) {
                out << " marks=";
                for (std::size_t i = 0; i < v.markings.size(); ++i) {
                    if (i) out << ",";
                    out << v.markings[i];
                }
            }
            out << "\n";
        }
        for (const auto& e : gs.graph.edges) out << "edge = " << e.first << " " << e.second << "\n";
        if (gs.b) out << "b = " << gs.b->str() << "\n";
        if (!gs.base_degrees.empty())
            out << "base_degrees = " << join_ints(gs.base_degrees) << "\n";
        if (gs.lift_degrees) out << "lift_degrees = " << join_rats(*gs.lift_degrees) << "\n";
    }
    return out.str();
}

namespace {

ojson js_ratvec(const RatVector& v) {
    ojson a = ojson::array();
    for (const auto& x : v) a.push_back(rat_to_string(x));
    return a;
}

ojson js_names(const ModelInput& m, const Support& s) {
    ojson a = ojson::array();
    for (std::size_t j : s) a.push_back(m.variables[j]);
    return a;
}

ojson js_complement_names(const ModelInput& m, const Support& s) {
    ojson a = ojson::array();
    for (std::size_t j = 0; j < m.variables.size(); ++j)
        if (!s.count(j)) a.push_back(m.variables[j]);
    return a;
}

ojson js_validation(const ValidationReport& rep) {
    ojson checks = ojson::array();
    for (const auto& c : rep.checks) {
        ojson e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(e);
    }
    ojson v;
    v["checks"] = checks;
    v["all_pass"] = rep.all_pass;
    return v;
}

std::string kind_name(CriticalComponent::Kind k) {
    switch (k) {
        case CriticalComponent::Kind::CoordinateSubspace: return "coordinate_subspace";
        case CriticalComponent::Kind::HypersurfaceInSubspace: return "hypersurface_in_subspace";
        default: return "raw_system";
    }
}

std::string compactness_name(Compactness c) {
    switch (c) {
        case Compactness::Compact: return "compact";
        case Compactness::Noncompact: return "noncompact";
        default: return "unknown";
    }
}

ojson js_sector(const ModelInput& m, const Sector& s) {
    ojson e;
    e["action"] = js_ratvec(s.action.entries());
    e["fixed_coordinates"] = js_names(m, s.fixed_support);
    e["age"] = rat_to_string(s.age);
    e["degree_shift"] = rat_to_string(s.degree_shift);
    return e;
}

// Resolves an insertion token ("1", "id", "J", "J^k", or an integer k) to the
// sector of the k-th power of the grading element.
Sector insertion_sector(const GammaData& gamma, const std::string& token) {
    Int k;
    if (token == "1" || token == "id") k = 0;
    else if (token == "J") k = 1;
    else if (token.rfind("J^", 0) == 0) k = Int(token.substr(2));
    else {
        try {
            k = Int(token);
        } catch (...) {
            throw std::invalid_argument("cannot parse insertion \"" + token +
                                        "\"; use 1, J, or J^k");
        }
    }
    Sector s;
    s.action = gamma.j_power(k);
    for (std::size_t j = 0; j < gamma.n(); ++j)
        if (s.action[j] == 0) s.fixed_support.insert(j);
    s.age = s.action.age();
    s.degree_shift = -2 * s.age + 2 * gamma.q;
    return s;
}

ModelInput apply_overrides(ModelInput m, const Options& o) {
    if (o.theta_override) {
        if (o.theta_override->size() != m.gauge.rows())
            throw std::invalid_argument("theta override length must equal the gauge rank");
        m.theta = *o.theta_override;
        m.lift.reset();
    }
    if (o.epsilon) m.epsilon = *o.epsilon;
    if (o.lift_r_level) m.lift = Lift{m.theta, *o.lift_r_level};
    return m;
}

const ModelInput& require_model(const ModelFile& f) {
    if (!f.model) throw std::invalid_argument("this command needs a [model] section");
    return *f.model;
}

const GraphSpec& require_graph(const ModelFile& f) {
    if (!f.graph) throw std::invalid_argument("this command needs a [graph] section");
    return *f.graph;
}

void cmd_validate(Report& rep, const ModelInput& m) {
    ValidationReport v = validate_model(m);
    rep.payload["validation"] = js_validation(v);
    rep.exit_code = v.all_pass ? 0 : 1;
}

void cmd_phases(Report& rep, const ModelInput& m) {
    auto chs = chambers(m.gauge);
    ojson arr = ojson::array();
    for (const auto& c : chs) {
        ojson e;
        e["tau_representative"] = js_ratvec(c.representative);
        RatVector theta(c.representative.size());
        for (std::size_t i = 0; i < theta.size(); ++i) theta[i] = -c.representative[i];
        e["theta_representative"] = js_ratvec(theta);
        ojson walls = ojson::array();
        for (const auto& w : c.walls) walls.push_back(js_ratvec(w));
        e["walls"] = walls;
        ojson mins = ojson::array();
        for (const auto& s : c.minimal_supports) mins.push_back(js_names(m, s));
        e["minimal_semistable_supports"] = mins;
        e["strongly_regular"] = c.strongly_regular;
        ojson unst = ojson::array();
        Level lvl{c.representative};
        for (const auto& s : unstable_subspaces(m.gauge, lvl)) {
            ojson u;
            u["vanishing"] = js_complement_names(m, s);
            u["free"] = js_names(m, s);
            unst.push_back(u);
        }
        e["maximal_unstable_loci"] = unst;
        arr.push_back(e);
    }
    rep.payload["chamber_count"] = chs.size();
    rep.payload["chambers"] = arr;
}

void cmd_analyze(Report& rep, const ModelInput& m) {
    ValidationReport v = validate_model(m);
    rep.payload["validation"] = js_validation(v);
    if (!v.all_pass || !v.gamma) {
        rep.exit_code = 1;
        return;
    }
    const GammaData& gamma = *v.gamma;
    rep.payload["q"] = rat_to_string(gamma.q);
    rep.payload["central_charge"] = rat_to_string(central_charge(gamma));
    rep.payload["j_action"] = js_ratvec(gamma.j.entries());

    auto comps = critical_components(m, /*transversality_asserted=*/true);
    NondegeneracyResult nd = nondegeneracy_check(m, std::move(comps));
    ojson carr = ojson::array();
    for (const auto& c : nd.components) {
        ojson e;
        e["kind"] = kind_name(c.kind);
        e["free_coordinates"] = js_names(m, c.support);
        e["vanishing_coordinates"] = js_complement_names(m, c.support);
        ojson eqs = ojson::array();
        for (const auto& q : c.equations) eqs.push_back(q.to_string());
        e["equations"] = eqs;
        e["survives_semistability"] = c.survives_semistability;
        e["quotient_compact"] = compactness_name(c.quotient_compact);
        carr.push_back(e);
    }
    rep.payload["critical_components"] = carr;
    rep.payload["nondegeneracy"] = compactness_name(nd.overall);

    ojson sarr = ojson::array();
    for (const auto& s : sectors(m, gamma)) sarr.push_back(js_sector(m, s));
    rep.payload["sectors"] = sarr;
}

void cmd_lifts(Report& rep, const ModelInput& m) {
    GammaData gamma = build_gamma(m.gauge, m.rcharge);
    GoodLiftInterval iv = good_lift_interval(gamma, m.theta);
    ojson e;
    e["any_good"] = iv.any_good;
    if (iv.any_good) {
        e["r_level_min"] = iv.lo_unbounded ? "-infinity" : rat_to_string(iv.lo);
        e["r_level_max"] = iv.hi_unbounded ? "+infinity" : rat_to_string(iv.hi);
        if (iv.lo_witness) e["lower_certificate_support"] = js_names(m, *iv.lo_witness);
        if (iv.hi_witness) e["upper_certificate_support"] = js_names(m, *iv.hi_witness);
        e["unique_good"] = iv.unique_good();
    }
    rep.payload["good_interval"] = e;

    Lift lift = m.effective_lift();
    ojson chosen;
    chosen["r_level"] = rat_to_string(lift.r_level);
    chosen["good"] = is_good_lift(gamma, m.theta, lift);
    rep.payload["chosen_lift"] = chosen;
}

void cmd_sectors(Report& rep, const ModelInput& m) {
    Level tau = level_of_theta(m.theta);
    if (!is_strongly_regular(m.gauge, tau).regular)
        throw std::invalid_argument("sectors need a strongly regular theta");
    GammaData gamma = build_gamma(m.gauge, m.rcharge);
    ojson arr = ojson::array();
    for (const auto& s : sectors(m, gamma)) arr.push_back(js_sector(m, s));
    rep.payload["sector_count"] = arr.size();
    rep.payload["sectors"] = arr;
}

void cmd_vdim(Report& rep, const ModelInput& m, const Options& o) {
    GammaData gamma = build_gamma(m.gauge, m.rcharge);
    RatVector beta(gamma.m() + 1, Rat(0));
    if (o.beta) {
        if (o.beta->size() == 1 && (*o.beta)[0] == 0) {
            // a single 0 means the zero functional regardless of rank
        } else if (o.beta->size() != gamma.m() + 1) {
            throw std::invalid_argument("beta needs " + std::to_string(gamma.m() + 1) +
                                        " entries (gauge rank + 1)");
        } else {
            beta = *o.beta;
        }
    }
    std::vector<Sector> ins;
    for (const auto& tok : o.insertions) ins.push_back(insertion_sector(gamma, tok));
    Rat dim = virtual_dimension(gamma, o.genus, o.marks, beta, ins);
    rep.payload["genus"] = o.genus.str();
    rep.payload["marks"] = o.marks;
    rep.payload["beta"] = js_ratvec(beta);
    ojson iarr = ojson::array();
    for (const auto& s : ins) iarr.push_back(js_ratvec(s.action.entries()));
    rep.payload["insertions"] = iarr;
    rep.payload["virtual_dimension"] = rat_to_string(dim);
}

Epsilon resolve_epsilon(const ModelFile& f, const Options& o) {
    if (o.epsilon) return *o.epsilon;
    if (f.model) return f.model->epsilon;
    throw std::invalid_argument("no epsilon: pass --epsilon or declare it in [model]");
}

QmapNumericalData graph_data(const GraphSpec& gs) {
    QmapNumericalData data;
    data.b = gs.b.value_or(Int(1));
    const std::size_t nv = gs.graph.vertices.size();
    data.base_d = gs.base_degrees.empty() ? std::vector<Int>(nv, Int(0)) : gs.base_degrees;
    auto wlog = omega_log_degrees(gs.graph);
    data.deg_a.resize(nv);
    data.lift_deg.resize(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        data.deg_a[v] = (wlog[v] - Rat(data.base_d[v])) / Rat(data.b);
        data.lift_deg[v] = gs.lift_degrees ? (*gs.lift_degrees)[v] : Rat(data.base_d[v], data.b);
    }
    return data;
}

ojson js_graph(const DualGraph& g) {
    ojson e;
    ojson verts = ojson::array();
    for (const auto& v : g.vertices) {
        ojson ve;
        ve["genus"] = v.genus.str();
        ve["marks"] = v.markings;
        verts.push_back(ve);
    }
    e["vertices"] = verts;
    ojson edges = ojson::array();
    for (const auto& ed : g.edges) edges.push_back({ed.first, ed.second});
    e["edges"] = edges;
    e["total_genus"] = g.total_genus().str();
    e["marks"] = g.total_marks();
    return e;
}

ojson js_qmap_data(const QmapNumericalData& d) {
    ojson e;
    e["b"] = d.b.str();
    ojson bd = ojson::array();
    for (const auto& x : d.base_d) bd.push_back(x.str());
    e["base_degrees"] = bd;
    e["bundle_degrees"] = js_ratvec(d.deg_a);
    e["lift_degrees"] = js_ratvec(d.lift_deg);
    return e;
}

void cmd_qmap_check(Report& rep, const ModelFile& f, const Options& o) {
    const GraphSpec& gs = require_graph(f);
    Epsilon eps = resolve_epsilon(f, o);
    QmapNumericalData data = graph_data(gs);
    rep.payload["graph"] = js_graph(gs.graph);
    rep.payload["epsilon"] = epsilon_to_string(eps);
    rep.payload["data"] = js_qmap_data(data);
    rep.payload["omega_log_degrees"] = js_ratvec(omega_log_degrees(gs.graph));
    StabilityVerdict v = check_stability(gs.graph, data, eps);
    rep.payload["stable"] = v.stable;
    rep.payload["failures"] = v.failures;
    if (eps == Epsilon::Infinity && v.stable)
        rep.payload["dm_stable"] = classify_infty_lg(gs.graph, data);
}

void cmd_qmap_enumerate(Report& rep, const ModelFile& f, const Options& o) {
    const GraphSpec& gs = require_graph(f);
    Epsilon eps = resolve_epsilon(f, o);
    Int b = gs.b.value_or(Int(1));
    Int max_d = o.max_degree.value_or(Int(0));
    auto configs = enumerate_lg_configs(gs.graph, b, eps, max_d);
    rep.payload["graph"] = js_graph(gs.graph);
    rep.payload["epsilon"] = epsilon_to_string(eps);
    rep.payload["max_degree"] = max_d.str();
    rep.payload["config_count"] = configs.size();
    ojson arr = ojson::array();
    for (const auto& c : configs) arr.push_back(js_qmap_data(c));
    rep.payload["configurations"] = arr;
}

void cmd_fixed_loci(Report& rep, const ModelFile& f, const Options& o) {
    const ModelInput& base = require_model(f);
    ModelInput m = apply_overrides(base, o);
    IntVector action;
    if (o.action) action = *o.action;
    else if (f.extra_action) action = *f.extra_action;
    else throw std::invalid_argument("no auxiliary action: pass --action or declare extra_action");
    if (action.size() != m.variables.size())
        throw std::invalid_argument("auxiliary action needs one weight per variable");

    ojson av = ojson::array();
    for (const auto& x : action) av.push_back(x.str());
    rep.payload["action"] = av;
    ojson arr = ojson::array();
    for (const auto& l : fixed_loci(m, action)) {
        ojson e;
        e["vanishing"] = js_complement_names(m, l.support);
        e["free"] = js_names(m, l.support);
        ojson eqs = ojson::array();
        for (const auto& q : l.equations) eqs.push_back(q.to_string());
        e["equations"] = eqs;
        arr.push_back(e);
    }
    rep.payload["locus_count"] = arr.size();
    rep.payload["fixed_loci"] = arr;
}

}  // namespace

Report run(const std::string& command, const std::string& model_path, const Options& options) {
    Report rep;
    rep.command = command;
    rep.input_path = model_path;
    ModelFile file = load_model_file(model_path);

    try {
        if (command == "validate") {
            cmd_validate(rep, apply_overrides(require_model(file), options));
        } else if (command == "phases") {
            cmd_phases(rep, apply_overrides(require_model(file), options));
        } else if (command == "analyze") {
            cmd_analyze(rep, apply_overrides(require_model(file), options));
        } else if (command == "lifts") {
            cmd_lifts(rep, apply_overrides(require_model(file), options));
        } else if (command == "sectors") {
            cmd_sectors(rep, apply_overrides(require_model(file), options));
        } else if (command == "vdim") {
            cmd_vdim(rep, apply_overrides(require_model(file), options), options);
        } else if (command == "qmap-check") {
            cmd_qmap_check(rep, file, options);
        } else if (command == "qmap-enumerate") {
            cmd_qmap_enumerate(rep, file, options);
        } else if (command == "fixed-loci") {
            cmd_fixed_loci(rep, file, options);
        } else {
            throw std::invalid_argument("unknown command \"" + command + "\"");
        }
    } catch (const CompatibilityError& e) {
        rep.payload["error"] = e.what();
        rep.exit_code = 1;
    } catch (const StructureError& e) {
        rep.payload["error"] = e.what();
        rep.exit_code = 1;
    } catch (const std::domain_error& e) {
        rep.payload["error"] = e.what();
        rep.exit_code = 1;
    } catch (const std::invalid_argument& e) {
        rep.payload["error"] = e.what();
        rep.exit_code = 1;
    }
    return rep;
}

namespace {

bool is_scalar(const ojson& v) {
    return v.is_string() || v.is_boolean() || v.is_number() || v.is_null();
}

std::string scalar_text(const ojson& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

bool all_scalar(const ojson& arr) {
    return std::all_of(arr.begin(), arr.end(), [](const ojson& e) { return is_scalar(e); });
}

std::string inline_array(const ojson& arr) {
    std::string out = "[";
    bool first = true;
    for (const auto& e : arr) {
        if (!first) out += ", ";
        out += scalar_text(e);
        first = false;
    }
    return out + "]";
}

void render_text(const ojson& v, std::string indent, std::ostringstream& out) {
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (is_scalar(it.value())) {
                out << indent << it.key() << ": " << scalar_text(it.value()) << "\n";
            } else if (it.value().is_array() && all_scalar(it.value())) {
                out << indent << it.key() << ": " << inline_array(it.value()) << "\n";
            } else {
                out << indent << it.key() << ":\n";
                render_text(it.value(), indent + "  ", out);
            }
        }
    } else if (v.is_array()) {
        if (v.empty()) {
            out << indent << "(none)\n";
            return;
        }
        for (const auto& e : v) {
            if (is_scalar(e)) {
                out << indent << "- " << scalar_text(e) << "\n";
            } else if (e.is_array() && all_scalar(e)) {
                out << indent << "- " << inline_array(e) << "\n";
            } else {
                out << indent << "-\n";
                render_text(e, indent + "  ", out);
            }
        }
    } else {
        out << indent << scalar_text(v) << "\n";
    }
}

}  // namespace

std::string emit(const Report& report, const std::string& format) {
    if (format == "json") {
        ojson j;
        j["schema"] = "glsm-lab-report/1";
        j["command"] = report.command;
        j["input"] = report.input_path;
        j["result"] = report.payload;
        j["warnings"] = report.warnings;
        return j.dump(2) + "\n";
    }
    if (format != "text") throw std::invalid_argument("format must be text or json");
    std::ostringstream out;
    out << "command: " << report.command << "\n";
    out << "input: " << report.input_path << "\n";
    render_text(report.payload, "", out);
    if (!report.warnings.empty()) {
        out << "warnings:\n";
        for (const auto& w : report.warnings) out << "  - " << w << "\n";
    }
    return out.str();
}

}  // namespace glsm
