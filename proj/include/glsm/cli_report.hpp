#ifndef GLSM_CLI_REPORT_HPP
#define GLSM_CLI_REPORT_HPP

#include "glsm/glsm_analyzer.hpp"
#include "glsm/qmap_degrees.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace glsm {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Optional quasimap inputs from a [graph] section.
struct GraphSpec {
    DualGraph graph;
    std::optional<Int> b;
    std::vector<Int> base_degrees;            // may be empty
    std::optional<RatVector> lift_degrees;    // defaults to baseD/b
};

struct ModelFile {
    std::optional<ModelInput> model;
    std::optional<IntVector> extra_action;  // auxiliary circle weights, if declared
    std::optional<GraphSpec> graph;
};

ModelFile parse_model_file(const std::string& text);
ModelFile load_model_file(const std::string& path);

/// Canonical serialization; parse(write_model_file(f)) is equivalent to f.
std::string write_model_file(const ModelFile& f);

struct Options {
    std::string format = "text";  // text | json
    std::optional<RatVector> theta_override;
    std::optional<Epsilon> epsilon;
    std::optional<Rat> lift_r_level;
    std::optional<Int> max_degree;
    Int genus = 0;
    std::size_t marks = 0;
    std::optional<RatVector> beta;
    std::vector<std::string> insertions;  // tokens like "1", "J", "J^2"
    std::optional<IntVector> action;
};

struct Report {
    std::string command;
    std::string input_path;
    nlohmann::ordered_json payload;
    std::vector<std::string> warnings;
    int exit_code = 0;  // 0 ok, 1 model invalid
};

/// Dispatches one CLI command. Throws ParseError for unreadable input;
/// semantic failures are reported in the payload with exit_code 1.
Report run(const std::string& command, const std::string& model_path, const Options& options);

/// Deterministic rendering; format is "text" or "json".
std::string emit(const Report& report, const std::string& format);

}  // namespace glsm

#endif
