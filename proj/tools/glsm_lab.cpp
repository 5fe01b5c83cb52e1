#include "glsm/cli_report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',' || c == ' ' || c == '\t') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

glsm::RatVector rat_list(const std::string& s, const std::string& what) {
    glsm::RatVector out;
    for (const auto& tok : split_list(s)) {
        try {
            out.push_back(glsm::rat_from_string(tok));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument(what + ": bad rational \"" + tok + "\"");
        }
    }
    return out;
}

std::string resolve_path(const std::string& path) {
    namespace fs = std::filesystem;
    if (fs::exists(path)) return path;
    if (const char* dir = std::getenv("GLSM_LAB_FIXTURES")) {
        fs::path candidate = fs::path(dir) / path;
        if (fs::exists(candidate)) return candidate.string();
    }
    return path;  // let the loader report the failure
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analyzer for abelian gauged linear sigma models"};
    app.require_subcommand(0, 0);

    std::string command, model_path;
    std::string format = "text", theta_s, epsilon_s, beta_s, insertions_s, action_s;
    std::string lift_s, genus_s = "0", max_degree_s;
    std::size_t marks = 0;

    app.add_option("command", command,
                   "validate | phases | analyze | lifts | sectors | vdim | "
                   "qmap-check | qmap-enumerate | fixed-loci")
        ->required();
    app.add_option("model", model_path, "model file (searched in $GLSM_LAB_FIXTURES too)")
        ->required();
    app.add_option("--format", format, "text | json")->capture_default_str();
    app.add_option("--theta-override", theta_s, "replace theta (comma-separated rationals)");
    app.add_option("--epsilon", epsilon_s, "0+ | infinity");
    app.add_option("--lift", lift_s, "R-level of the lift (rational)");
    app.add_option("--max-degree", max_degree_s, "base-point degree bound for qmap-enumerate");
    app.add_option("--genus", genus_s, "genus for vdim")->capture_default_str();
    app.add_option("--marks", marks, "number of marked points for vdim");
    app.add_option("--beta", beta_s, "curve class pairing vector (comma-separated rationals)");
    app.add_option("--insertions", insertions_s, "sector insertions for vdim, e.g. J,J,J");
    app.add_option("--action", action_s, "auxiliary circle weights for fixed-loci");

    CLI11_PARSE(app, argc, argv);

    try {
        glsm::Options opts;
        opts.format = format;
        if (!theta_s.empty()) opts.theta_override = rat_list(theta_s, "--theta-override");
        if (!epsilon_s.empty()) opts.epsilon = glsm::epsilon_from_string(epsilon_s);
        if (!lift_s.empty()) opts.lift_r_level = glsm::rat_from_string(lift_s);
        if (!max_degree_s.empty()) opts.max_degree = glsm::Int(max_degree_s);
        opts.genus = glsm::Int(genus_s);
        opts.marks = marks;
        if (!beta_s.empty()) opts.beta = rat_list(beta_s, "--beta");
        if (!insertions_s.empty()) opts.insertions = split_list(insertions_s);
        if (!action_s.empty()) {
            glsm::IntVector action;
            for (const auto& r : rat_list(action_s, "--action")) {
                if (!glsm::is_integer(r)) throw std::invalid_argument("--action must be integers");
                action.push_back(numerator(r));
            }
            opts.action = std::move(action);
        }

        glsm::Report report = glsm::run(command, resolve_path(model_path), opts);
        std::cout << glsm::emit(report, opts.format);
        return report.exit_code;
    } catch (const glsm::ParseError& e) {
        std::cerr << "error: " << model_path << ": " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
