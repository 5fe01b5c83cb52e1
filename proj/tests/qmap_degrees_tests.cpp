#include "glsm/qmap_degrees.hpp"

#include "graph_enum.hpp"

#include <doctest.h>

using namespace glsm;

namespace {

DualGraph single_vertex(long long genus, std::size_t marks) {
    DualGraph g;
    g.vertices.push_back({Int(genus), {}});
    for (std::size_t t = 0; t < marks; ++t)
        g.vertices[0].markings.push_back("m" + std::to_string(t + 1));
    return g;
}

QmapNumericalData data_from_base(const DualGraph& g, const Int& b, std::vector<Int> base_d) {
    QmapNumericalData d;
    d.b = b;
    d.base_d = std::move(base_d);
    auto wlog = omega_log_degrees(g);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        d.deg_a.push_back((wlog[v] - Rat(d.base_d[v])) / Rat(b));
        d.lift_deg.push_back(Rat(d.base_d[v], b));
    }
    return d;
}

}  // namespace

TEST_CASE("log-canonical degrees") {
    CHECK(omega_log_degrees(single_vertex(2, 0)) == std::vector<Rat>{Rat(2)});
    CHECK(omega_log_degrees(single_vertex(0, 3)) == std::vector<Rat>{Rat(1)});

    DualGraph bridge;
    bridge.vertices = {{0, {"m1", "m2"}}, {0, {"m3"}}};
    bridge.edges = {{0, 1}};
    CHECK(omega_log_degrees(bridge) == std::vector<Rat>{Rat(1), Rat(0)});

    DualGraph loop = single_vertex(0, 1);
    loop.edges = {{0, 0}};  // self-loop counts twice
    CHECK(omega_log_degrees(loop) == std::vector<Rat>{Rat(1)});
    CHECK(loop.total_genus() == 1);
}

TEST_CASE("stability of a smooth genus-two fifth root") {
    DualGraph g = single_vertex(2, 0);
    auto clean = data_from_base(g, 5, {0});
    CHECK(clean.deg_a == RatVector{Rat(2, 5)});
    CHECK(check_stability(g, clean, Epsilon::Infinity).stable);
    CHECK(check_stability(g, clean, Epsilon::ZeroPlus).stable);

    auto dirty = data_from_base(g, 5, {10});
    CHECK(check_stability(g, dirty, Epsilon::ZeroPlus).stable);
    auto verdict = check_stability(g, dirty, Epsilon::Infinity);
    CHECK_FALSE(verdict.stable);
    REQUIRE(verdict.failures.size() == 1);
    CHECK(verdict.failures[0].find("base points") != std::string::npos);
}

TEST_CASE("a flat elliptic vertex needs base points at epsilon 0+") {
    DualGraph g = single_vertex(1, 0);  // wlog = 0
    auto no_base = data_from_base(g, 5, {0});
    CHECK_FALSE(check_stability(g, no_base, Epsilon::ZeroPlus).stable);
    CHECK_FALSE(check_stability(g, no_base, Epsilon::Infinity).stable);
    auto with_base = data_from_base(g, 5, {5});
    CHECK(with_base.deg_a == RatVector{Rat(-1)});
    CHECK(check_stability(g, with_base, Epsilon::ZeroPlus).stable);
}

TEST_CASE("check_stability rejects inconsistent numerical data") {
    DualGraph g = single_vertex(2, 0);
    auto d = data_from_base(g, 5, {0});
    d.deg_a[0] = Rat(1);  // violates b*degA = wlog - baseD
    CHECK_THROWS_AS(check_stability(g, d, Epsilon::Infinity), std::invalid_argument);
    auto short_d = data_from_base(g, 5, {0});
    short_d.base_d.clear();
    CHECK_THROWS_AS(check_stability(g, short_d, Epsilon::Infinity), std::invalid_argument);
    auto neg = data_from_base(g, 5, {0});
    neg.base_d[0] = -1;
    CHECK_THROWS_AS(check_stability(g, neg, Epsilon::Infinity), std::invalid_argument);
}

TEST_CASE("enumeration over a single vertex") {
    DualGraph g2 = single_vertex(2, 0);
    auto inf = enumerate_lg_configs(g2, 5, Epsilon::Infinity, 7);
    REQUIRE(inf.size() == 1);
    CHECK(inf[0].base_d == std::vector<Int>{0});
    CHECK(inf[0].deg_a == RatVector{Rat(2, 5)});

    auto zp = enumerate_lg_configs(g2, 5, Epsilon::ZeroPlus, 2);
    CHECK(zp.size() == 3);  // D = 0, 1, 2 all stable since wlog > 0

    DualGraph g1m = single_vertex(1, 1);
    auto one = enumerate_lg_configs(g1m, 5, Epsilon::Infinity, 4);
    REQUIRE(one.size() == 1);
    CHECK(one[0].base_d == std::vector<Int>{0});
}

TEST_CASE("an unmarked rational bridge admits no stable configuration") {
    DualGraph bridge;
    bridge.vertices = {{0, {}}, {0, {}}};
    bridge.edges = {{0, 1}};
    CHECK(enumerate_lg_configs(bridge, 1, Epsilon::ZeroPlus, 0).empty());
    CHECK(enumerate_lg_configs(bridge, 1, Epsilon::Infinity, 3).empty());
}

TEST_CASE("classification of infinity-stable data") {
    DualGraph g = single_vertex(1, 1);
    auto d = data_from_base(g, 1, {0});
    CHECK(classify_infty_lg(g, d));

    DualGraph flat = single_vertex(1, 0);
    auto bad = data_from_base(flat, 1, {0});
    CHECK_THROWS_AS(classify_infty_lg(flat, bad), std::invalid_argument);
}

TEST_CASE("infinity-stable configurations carry no base points and are DM-stable") {
    auto graphs = glsm_test::enumerate_small_graphs();
    for (const auto& g : graphs) {
        for (Int b : {Int(1), Int(5)}) {
            for (const auto& cfg : enumerate_lg_configs(g, b, Epsilon::Infinity, 2)) {
                for (const auto& d : cfg.base_d) CHECK(d == 0);
                CHECK(classify_infty_lg(g, cfg));
            }
        }
    }
}

TEST_CASE("total degree is conserved across the enumeration") {
    auto graphs = glsm_test::enumerate_small_graphs();
    for (const auto& g : graphs) {
        Rat expected = Rat(2) * Rat(g.total_genus()) - 2 + Rat(Int(g.total_marks()));
        for (Epsilon eps : {Epsilon::ZeroPlus, Epsilon::Infinity}) {
            for (const auto& cfg : enumerate_lg_configs(g, 2, eps, 2)) {
                Rat total = 0;
                for (std::size_t v = 0; v < g.vertices.size(); ++v)
                    total += Rat(cfg.b) * cfg.deg_a[v] + Rat(cfg.base_d[v]);
                CHECK(total == expected);
            }
        }
    }
}

TEST_CASE("every enumerated configuration passes its own stability check") {
    auto graphs = glsm_test::enumerate_small_graphs(2, 2);
    for (const auto& g : graphs) {
        for (Epsilon eps : {Epsilon::ZeroPlus, Epsilon::Infinity}) {
            for (const auto& cfg : enumerate_lg_configs(g, 3, eps, 3)) {
                CHECK(check_stability(g, cfg, eps).stable);
            }
        }
    }
}
