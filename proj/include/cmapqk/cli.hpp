#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmapqk/exact.hpp"
#include "cmapqk/liealg.hpp"

namespace cmapqk::cli {

// (lambda, a, b) for c = c_compatible((a,b), lambda).c
struct ExactC {
    Rational lambda;
    std::int64_t a = 2;
    std::int64_t b = 3;
};
ExactC parse_exact_c(const std::string& s);  // "lambda:a:b", lambda may be "p/q"

struct RunConfig {
    std::string command;
    int n = 2;
    double c = 0.0;
    std::optional<ExactC> c_exact;
    std::uint64_t seed = 42;
    int points = 20;
    std::optional<double> step;  // per-command default when unset
    std::int64_t bound = 3;
    std::string out;             // empty: stdout
    std::string format = "json";
    std::int64_t a = 2;
    std::int64_t b = 3;
    double vd = 1.0;
    std::vector<double> rho_grid{1.0, 2.0, 4.0};
    bool inject_control = false;  // verify-killing: append the d/drho negative control

    double effective_c() const;
    void validate() const;  // throws std::invalid_argument
};

const std::vector<std::string>& command_names();

// Overwrites fields present in the JSON object; unknown keys are an error.
void apply_json(RunConfig& cfg, const nlohmann::json& j);

struct CommandResult {
    int status = 0;          // 0 iff every check passed
    std::string body;        // report text, newline terminated
    std::vector<std::string> warnings;
};

CommandResult cmd_verify_killing(const RunConfig& cfg);
CommandResult cmd_structure(const RunConfig& cfg);
CommandResult cmd_center(const RunConfig& cfg);
CommandResult cmd_curvature(const RunConfig& cfg);
CommandResult cmd_lattice(const RunConfig& cfg);
CommandResult cmd_volume_table(const RunConfig& cfg);

CommandResult run(const RunConfig& cfg);  // dispatch on cfg.command after validation

// {"two_pi_R": "p/q", "two_pi_Z": m, "four_pi_c": "p/q"}
nlohmann::json center_json(const CenterVector& v);

std::string format_double(double x);  // "%.17g"

}  // namespace cmapqk::cli
