#include "glsm/toric_git.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace glsm;

namespace {

const IntMatrix quintic{{1, 1, 1, 1, 1, -5}};
const IntMatrix gen_graph{{1, 1, 1, 1, 1, -5, 3, 0}, {0, 0, 0, 0, 0, 0, 1, 1}};

Level lv(std::initializer_list<long long> xs) {
    RatVector v;
    for (long long x : xs) v.push_back(Rat(x));
    return Level{v};
}

}  // namespace

TEST_CASE("level_of_theta negates the weight") {
    CHECK(level_of_theta({Rat(-1)}).tau == RatVector{Rat(1)});
    CHECK(level_of_theta({Rat(1)}).tau == RatVector{Rat(-1)});
    CHECK(level_of_theta({Rat(0)}).tau == RatVector{Rat(0)});
}

TEST_CASE("quintic minimal semistable supports in both phases") {
    auto geom = semistable_supports(quintic, lv({1}));
    REQUIRE(geom.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(geom[i] == Support{i});

    auto lg = semistable_supports(quintic, lv({-1}));
    REQUIRE(lg.size() == 1);
    CHECK(lg[0] == Support{5});

    auto wall = semistable_supports(quintic, lv({0}));
    REQUIRE(wall.size() == 1);
    CHECK(wall[0].empty());
}

TEST_CASE("maximal unstable supports") {
    auto geom = unstable_subspaces(quintic, lv({1}));
    REQUIRE(geom.size() == 1);
    CHECK(geom[0] == Support{5});  // locus {x=0}

    // Middle chamber of the generalized graph space (d=3), tau=(1,1).
    auto mid = unstable_subspaces(gen_graph, lv({1, 1}));
    std::vector<Support> expect = {
        {0, 1, 2, 3, 4, 5},  // locus {z0=z1=0}
        {0, 1, 2, 3, 4, 6},  // locus {p=z1=0}
        {5, 7},              // locus {x=z0=0}
    };
    std::sort(expect.begin(), expect.end());
    CHECK(mid == expect);

    CHECK(unstable_subspaces(quintic, lv({0})).empty());
}

TEST_CASE("strong regularity with certificates") {
    CHECK(is_strongly_regular(quintic, lv({1})).regular);

    auto wall = is_strongly_regular(quintic, lv({0}));
    CHECK_FALSE(wall.regular);
    CHECK(wall.semistable_nonempty);

    // tau on the ray of the z0 column (3,1): rank-1 cone contains tau.
    auto ray = is_strongly_regular(gen_graph, lv({3, 1}));
    CHECK_FALSE(ray.regular);
    REQUIRE(ray.violating_cone.has_value());
    CHECK(ray.violating_cone == Support{6});
}

TEST_CASE("chamber enumeration") {
    auto q2 = chambers(quintic);
    CHECK(q2.size() == 2);
    auto g3 = chambers(gen_graph);
    CHECK(g3.size() == 3);
    for (const auto& c : g3) CHECK(c.strongly_regular);
    auto one = chambers(IntMatrix{{1, 1}});
    REQUIRE(one.size() == 1);
    CHECK(one[0].representative[0] > 0);
}

TEST_CASE("chambers rejects unsupported input") {
    CHECK_THROWS_AS(chambers(IntMatrix{{0, 0}}), std::domain_error);
    CHECK_THROWS_AS(chambers(IntMatrix{{1, 2}, {2, 4}}), std::domain_error);
    CHECK_THROWS_AS(chambers(IntMatrix(3, 4)), std::domain_error);
}

TEST_CASE("classify_levels groups sample levels by support family") {
    auto cls = classify_levels(quintic, {{Rat(1)}, {Rat(2)}, {Rat(-3)}});
    CHECK(cls.size() == 2);
}

TEST_CASE("affine_support_trivial on the quintic") {
    CHECK(affine_support_trivial(quintic, {0, 1, 2, 3, 4}));
    CHECK(affine_support_trivial(quintic, {5}));
    CHECK_FALSE(affine_support_trivial(quintic, {0, 5}));  // x1^5 p invariant
}

TEST_CASE("semistability is upward closed and fully classified") {
    std::mt19937 rng(37);
    std::uniform_int_distribution<int> entry(-5, 5), tdist(-3, 3);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t m = 1 + trial % 2, n = 2 + trial % 5;
        IntMatrix q(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) q.at(i, j) = entry(rng);
        RatVector tau(m);
        for (auto& t : tau) t = Rat(tdist(rng));
        Level lvl{tau};
        auto minimal = semistable_supports(q, lvl);
        auto maximal_unstable = unstable_subspaces(q, lvl);
        for (std::size_t mask = 0; mask < (1u << n); ++mask) {
            Support s;
            for (std::size_t j = 0; j < n; ++j)
                if (mask & (1u << j)) s.insert(j);
            bool ss = support_semistable(q, lvl, s);
            bool contains_min = std::any_of(minimal.begin(), minimal.end(), [&](const Support& t) {
                return std::includes(s.begin(), s.end(), t.begin(), t.end());
            });
            bool inside_max = std::any_of(
                maximal_unstable.begin(), maximal_unstable.end(), [&](const Support& t) {
                    return std::includes(t.begin(), t.end(), s.begin(), s.end());
                });
            CHECK(ss == contains_min);
            CHECK(ss == !inside_max);
            if (ss && !s.empty()) {
                Support bigger = s;
                bigger.insert((*s.begin() + 1) % n);
                CHECK(support_semistable(q, lvl, bigger));
            }
        }
    }
}

TEST_CASE("chamber representatives reproduce their support family on samples") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> pos(1, 60);
    for (const IntMatrix& q : {quintic, gen_graph, IntMatrix{{2, -3, 1, 1}}}) {
        for (const auto& chamber : chambers(q)) {
            for (int sample = 0; sample < 100; ++sample) {
                RatVector tau(q.rows(), Rat(0));
                if (q.rows() == 1) {
                    tau[0] = chamber.representative[0] * Rat(pos(rng), pos(rng));
                } else {
                    // Positive combination of the two bounding rays stays inside.
                    for (std::size_t w = 0; w < 2; ++w) {
                        Rat coeff(pos(rng), pos(rng));
                        for (std::size_t i = 0; i < 2; ++i)
                            tau[i] += coeff * chamber.walls[w][i];
                    }
                }
                CHECK(semistable_supports(q, Level{tau}) == chamber.minimal_supports);
            }
        }
    }
}

TEST_CASE("strong regularity forces full-rank minimal supports") {
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> entry(-5, 5), tdist(-3, 3);
    for (int trial = 0; trial < 80; ++trial) {
        std::size_t m = 1 + trial % 2, n = 2 + trial % 4;
        IntMatrix q(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) q.at(i, j) = entry(rng);
        RatVector tau(m);
        for (auto& t : tau) t = Rat(tdist(rng));
        Level lvl{tau};
        if (!is_strongly_regular(q, lvl).regular) continue;
        for (const auto& s : semistable_supports(q, lvl)) {
            std::vector<std::size_t> idx(s.begin(), s.end());
            CHECK(rank_of(q.select_columns(idx)) == m);
        }
    }
}

TEST_CASE("cone criterion agrees with the independent monomial oracle") {
    std::mt19937 rng(47);
    std::uniform_int_distribution<int> entry(-5, 5), tdist(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t m = 1 + trial % 2, n = 1 + trial % 6;
        IntMatrix q(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) q.at(i, j) = entry(rng);
        IntVector tau_i(m);
        RatVector tau_r(m);
        for (std::size_t i = 0; i < m; ++i) {
            tau_i[i] = tdist(rng);
            tau_r[i] = Rat(tau_i[i]);
        }
        Level lvl{tau_r};
        for (std::size_t mask = 0; mask < (1u << n); ++mask) {
            Support s;
            for (std::size_t j = 0; j < n; ++j)
                if (mask & (1u << j)) s.insert(j);
            CHECK(support_semistable(q, lvl, s) == glsm_test::oracle_semistable(q, tau_i, s));
        }
    }
}
