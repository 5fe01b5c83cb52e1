#include "glsm/cli_report.hpp"

#include <doctest.h>

#ifndef GLSM_FIXTURE_DIR
#error "GLSM_FIXTURE_DIR must be defined by the build"
#endif

using namespace glsm;

namespace {

std::string fixture(const std::string& name) {
    return std::string(GLSM_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("parses the quintic model file") {
    ModelFile f = load_model_file(fixture("quintic_geometric.model"));
    REQUIRE(f.model.has_value());
    CHECK(f.model->variables ==
          std::vector<std::string>{"x0", "x1", "x2", "x3", "x4", "p"});
    CHECK(f.model->gauge == IntMatrix{{1, 1, 1, 1, 1, -5}});
    CHECK(f.model->rcharge.c == IntVector{0, 0, 0, 0, 0, 1});
    CHECK(f.model->rcharge.d == 1);
    CHECK(f.model->theta == RatVector{Rat(-1)});
    CHECK(f.model->epsilon == Epsilon::Infinity);
    CHECK_FALSE(f.graph.has_value());
}

TEST_CASE("parses a graph-only file") {
    ModelFile f = load_model_file(fixture("genus2_spin.graph"));
    CHECK_FALSE(f.model.has_value());
    REQUIRE(f.graph.has_value());
    REQUIRE(f.graph->graph.vertices.size() == 1);
    CHECK(f.graph->graph.vertices[0].genus == 2);
    CHECK(f.graph->b == Int(5));
}

TEST_CASE("parse errors carry the offending line number") {
    const std::string base =
        "[model]\n"
        "variables = x y\n"
        "gauge_weights = 1 -1\n"
        "r_weights = 0 1\n"
        "r_degree = 1\n"
        "superpotential = x*y\n"
        "theta = -1\n";
    try {
        parse_model_file(base + "bogus_key = 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 8);
    }
    try {
        parse_model_file(base + "theta = 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 8);  // the duplicate occurrence is blamed
    }
    CHECK_THROWS_AS(parse_model_file("[nonsense]\n"), ParseError);
    // Disconnected graphs are rejected at parse time.
    CHECK_THROWS_AS(parse_model_file("[graph]\nvertex = genus=0\nvertex = genus=1\n"),
                    ParseError);
}

TEST_CASE("serialization round-trips") {
    for (const char* name : {"quintic_geometric.model", "quintic_lg.model",
                             "gen_graph_space_d3.model", "genus2_spin.graph"}) {
        ModelFile f = load_model_file(fixture(name));
        std::string text = write_model_file(f);
        ModelFile g = parse_model_file(text);
        CHECK(write_model_file(g) == text);
        if (f.model) {
            REQUIRE(g.model.has_value());
            CHECK(g.model->gauge == f.model->gauge);
            CHECK(g.model->rcharge.c == f.model->rcharge.c);
            CHECK(g.model->superpotential == f.model->superpotential);
            CHECK(g.model->theta == f.model->theta);
        }
        if (f.graph) {
            REQUIRE(g.graph.has_value());
            CHECK(g.graph->graph.edges == f.graph->graph.edges);
            CHECK(g.graph->b == f.graph->b);
        }
    }
}

TEST_CASE("validate succeeds on the shipped quintic") {
    Report r = run("validate", fixture("quintic_geometric.model"), {});
    CHECK(r.exit_code == 0);
    CHECK(r.payload["validation"]["all_pass"] == true);
}

TEST_CASE("validate fails cleanly on a wall level") {
    Options opt;
    opt.theta_override = RatVector{Rat(0)};
    Report r = run("validate", fixture("quintic_geometric.model"), opt);
    CHECK(r.exit_code == 1);
    CHECK(r.payload["validation"]["all_pass"] == false);
}

TEST_CASE("phases reports the two quintic chambers") {
    Report r = run("phases", fixture("quintic_geometric.model"), {});
    CHECK(r.exit_code == 0);
    CHECK(r.payload["chamber_count"] == 2);
}

TEST_CASE("vdim renders rationals as exact strings") {
    Options opt;
    opt.genus = 0;
    opt.marks = 3;
    opt.beta = RatVector{Rat(0), Rat(0)};
    opt.insertions = {"J", "J", "J"};
    Report r = run("vdim", fixture("quintic_lg.model"), opt);
    CHECK(r.exit_code == 0);
    CHECK(r.payload["virtual_dimension"] == "3");
}

TEST_CASE("qmap-check reports stability of the spin fixture") {
    Options opt;
    opt.epsilon = Epsilon::Infinity;
    Report r = run("qmap-check", fixture("genus2_spin.graph"), opt);
    CHECK(r.exit_code == 0);
    CHECK(r.payload["stable"] == true);
    CHECK(r.payload["dm_stable"] == true);
}

TEST_CASE("emitted output is deterministic") {
    Report a = run("analyze", fixture("quintic_lg.model"), {});
    Report b = run("analyze", fixture("quintic_lg.model"), {});
    for (const char* format : {"json", "text"}) {
        CHECK(emit(a, format) == emit(b, format));
    }
    std::string json = emit(a, "json");
    CHECK(json.find("warnings\": []") != std::string::npos);
    // Exact rationals only: no floating-point rendering anywhere.
    CHECK(json.find("e-") == std::string::npos);
    for (const char* frag : {"0.2", "0.4", "0.6"}) {
        CHECK(json.find(frag) == std::string::npos);
    }
}

TEST_CASE("unknown commands are rejected") {
    Report r = run("frobnicate", fixture("quintic_geometric.model"), {});
    CHECK(r.exit_code == 1);
    std::string msg = r.payload["error"].get<std::string>();
    CHECK(msg.find("unknown command") != std::string::npos);
}
