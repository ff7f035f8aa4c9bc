#pragma once

#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reldiff/models.hpp"
#include "reldiff/solver.hpp"

namespace reldiff {

/// Config-file error carrying the 1-based line number (0 when the error is
/// not tied to a specific line).
class ConfigError : public std::runtime_error {
public:
    ConfigError(int line, const std::string& what);
    int line = 0;
};

/// One experiment: problem choice, grid, scheme, and output schedule.
/// Parsed from sectioned key=value text; see parse_config.
struct RunConfig {
    // [problem]
    std::string problem_id = "heat";
    std::map<std::string, double> problem_params;  // k, D, c, p_exp, q_exp, m_exp, c_abs
    std::string init;  // "" = problem default; "ring_bump" for the 2D absorption runs
    std::string bc;    // "" = problem default; "neumann" | "periodic" | "dirichlet:<v>"

    // [grid]
    int m0 = 100;
    int m1 = 0;  // 0 = same as m0 (2D only)

    // [scheme]
    std::string reconstruction = "weno5";
    std::string tableau = "ars222";
    double cfl = 0.25;
    double phi = 0.0;     // > 0 overrides the default relaxation speed
    double max_dt = 0.0;  // > 0 caps the time step

    // [output]
    double T = 1.0;
    std::vector<double> times;  // output times; empty = {0, T}
    std::string dir = "out";
    int series_stride = 10;  // record scalar series every this many steps
    double front_level = 0.5;
    double contact_level = 0.01;  // near the support edge for merging fronts
    double extinction_threshold_rel = 1e-6;
    bool stop_at_extinction = false;
    std::vector<int> grids;  // converge subcommand: cell counts, ascending
};

/// Parse sectioned key=value text. Sections: [problem] [grid] [scheme]
/// [output]. '#' and ';' start comments. Unknown keys and malformed lines
/// raise ConfigError with the line number.
RunConfig parse_config(std::istream& in);
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

/// Apply one "section.key=value" override on top of a parsed config.
void apply_override(RunConfig& cfg, const std::string& assignment);

/// Cross-field checks: T > 0, output times inside [0, T], positive grid,
/// parseable scheme names. Throws ConfigError.
void validate_config(const RunConfig& cfg);

/// Instantiate the problem named by the config, applying init/bc overrides.
ProblemSpec build_problem(const RunConfig& cfg);

/// Instantiate the discretization choices.
RunParams build_run_params(const RunConfig& cfg);

/// Known problem ids with their accepted parameters (for list-problems).
std::vector<std::pair<std::string, std::string>> problem_catalog();

}  // namespace reldiff
