#include "reldiff/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "reldiff/imex.hpp"

namespace reldiff {

ConfigError::ConfigError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                  : what),
      line(line) {}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& v, int line) {
    std::size_t pos = 0;
    double x;
    try {
        x = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError(line, "expected a number, got '" + v + "'");
    }
    if (pos != v.size())
        throw ConfigError(line, "trailing characters in number '" + v + "'");
    return x;
}

int parse_int(const std::string& v, int line) {
    std::size_t pos = 0;
    long x;
    try {
        x = std::stol(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError(line, "expected an integer, got '" + v + "'");
    }
    if (pos != v.size())
        throw ConfigError(line, "trailing characters in integer '" + v + "'");
    return static_cast<int>(x);
}

bool parse_bool(const std::string& v, int line) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError(line, "expected a boolean, got '" + v + "'");
}

template <typename T, typename F>
std::vector<T> parse_list(const std::string& v, int line, F parse_one) {
    std::vector<T> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw ConfigError(line, "empty list element");
        out.push_back(parse_one(item, line));
    }
    if (out.empty()) throw ConfigError(line, "empty list");
    return out;
}

const std::vector<std::string> kProblemParamKeys = {
    "k", "D", "c", "p_exp", "q_exp", "m_exp", "c_abs",
    "ring_radius", "ring_width", "amplitude",
    "bump_amplitude", "bump_x", "bump_y", "bump_width"};

void set_key(RunConfig& cfg, const std::string& section, const std::string& key,
             const std::string& value, int line) {
    if (section == "problem") {
        if (key == "id") {
            cfg.problem_id = value;
            return;
        }
        if (key == "init") {
            cfg.init = value;
            return;
        }
        if (key == "bc") {
            cfg.bc = value;
            return;
        }
        if (std::find(kProblemParamKeys.begin(), kProblemParamKeys.end(), key) !=
            kProblemParamKeys.end()) {
            cfg.problem_params[key] = parse_double(value, line);
            return;
        }
        throw ConfigError(line, "unknown [problem] key '" + key + "'");
    }
    if (section == "grid") {
        if (key == "m") {
            cfg.m0 = parse_int(value, line);
            return;
        }
        if (key == "mx") {
            cfg.m0 = parse_int(value, line);
            return;
        }
        if (key == "my") {
            cfg.m1 = parse_int(value, line);
            return;
        }
        throw ConfigError(line, "unknown [grid] key '" + key + "'");
    }
    if (section == "scheme") {
        if (key == "reconstruction") {
            cfg.reconstruction = value;
            return;
        }
        if (key == "tableau") {
            cfg.tableau = value;
            return;
        }
        if (key == "cfl") {
            cfg.cfl = parse_double(value, line);
            return;
        }
        if (key == "phi") {
            cfg.phi = parse_double(value, line);
            return;
        }
        if (key == "max_dt") {
            cfg.max_dt = parse_double(value, line);
            return;
        }
        throw ConfigError(line, "unknown [scheme] key '" + key + "'");
    }
    if (section == "output") {
        if (key == "T") {
            cfg.T = parse_double(value, line);
            return;
        }
        if (key == "times") {
            cfg.times = parse_list<double>(value, line, parse_double);
            return;
        }
        if (key == "dir") {
            cfg.dir = value;
            return;
        }
        if (key == "series_stride") {
            cfg.series_stride = parse_int(value, line);
            return;
        }
        if (key == "front_level") {
            cfg.front_level = parse_double(value, line);
            return;
        }
        if (key == "contact_level") {
            cfg.contact_level = parse_double(value, line);
            return;
        }
        if (key == "extinction_threshold_rel") {
            cfg.extinction_threshold_rel = parse_double(value, line);
            return;
        }
        if (key == "stop_at_extinction") {
            cfg.stop_at_extinction = parse_bool(value, line);
            return;
        }
        if (key == "grids") {
            cfg.grids = parse_list<int>(value, line, parse_int);
            return;
        }
        throw ConfigError(line, "unknown [output] key '" + key + "'");
    }
    throw ConfigError(line, "unknown section '" + section + "'");
}

}  // namespace

RunConfig parse_config(std::istream& in) {
    RunConfig cfg;
    std::string section;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto cpos = raw.find_first_of("#;");
        std::string s = trim(cpos == std::string::npos ? raw : raw.substr(0, cpos));
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw ConfigError(line, "unterminated section header");
            section = trim(s.substr(1, s.size() - 2));
            if (section.empty()) throw ConfigError(line, "empty section name");
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError(line, "expected key=value, got '" + s + "'");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty()) throw ConfigError(line, "empty key");
        if (section.empty())
            throw ConfigError(line, "key '" + key + "' outside any section");
        set_key(cfg, section, key, value, line);
    }
    return cfg;
}

RunConfig parse_config_text(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(0, "cannot open config file '" + path + "'");
    return parse_config(in);
}

void apply_override(RunConfig& cfg, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw ConfigError(0, "override must be section.key=value, got '" +
                                 assignment + "'");
    const std::string path = trim(assignment.substr(0, eq));
    const std::string value = trim(assignment.substr(eq + 1));
    const auto dot = path.find('.');
    if (dot == std::string::npos)
        throw ConfigError(0, "override key must be section.key, got '" + path + "'");
    set_key(cfg, path.substr(0, dot), path.substr(dot + 1), value, 0);
}

void validate_config(const RunConfig& cfg) {
    if (!(cfg.T > 0)) throw ConfigError(0, "output T must be positive");
    for (double t : cfg.times)
        if (t < 0 || t > cfg.T)
            throw ConfigError(0, "output time " + std::to_string(t) +
                                     " outside [0, T]");
    for (std::size_t i = 1; i < cfg.times.size(); ++i)
        if (!(cfg.times[i] > cfg.times[i - 1]))
            throw ConfigError(0, "output times must be strictly increasing");
    if (cfg.m0 < 1 || (cfg.m1 != 0 && cfg.m1 < 1))
        throw ConfigError(0, "grid cell counts must be positive");
    if (!(cfg.cfl > 0)) throw ConfigError(0, "cfl must be positive");
    if (cfg.series_stride < 1)
        throw ConfigError(0, "series_stride must be >= 1");
    try {
        ReconstructionScheme::parse(cfg.reconstruction);
    } catch (const std::exception& e) {
        throw ConfigError(0, e.what());
    }
    try {
        tableau(cfg.tableau);
    } catch (const std::exception& e) {
        throw ConfigError(0, e.what());
    }
    // ensure the problem can actually be built
    try {
        build_problem(cfg);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(0, e.what());
    }
}

ProblemSpec build_problem(const RunConfig& cfg) {
    auto param = [&](const std::string& key, double dflt) {
        auto it = cfg.problem_params.find(key);
        return it != cfg.problem_params.end() ? it->second : dflt;
    };
    ProblemSpec prob;
    if (cfg.problem_id == "fisher") {
        prob = fisher_problem(param("k", 1.0), param("D", 1.0), param("c", 2.0));
    } else if (cfg.problem_id == "porous_fisher") {
        prob = porous_fisher_problem(param("p_exp", 1.0), param("q_exp", 1.0),
                                     param("m_exp", 1.0));
    } else if (cfg.problem_id == "pme_absorption") {
        prob = pme_absorption_problem(param("m_exp", 2.0), param("p_exp", 0.5),
                                      param("c_abs", 5.0));
    } else if (cfg.problem_id == "heat") {
        prob = heat_problem(param("amplitude", 1.0));
    } else {
        throw ConfigError(0, "unknown problem id '" + cfg.problem_id + "'");
    }

    if (!cfg.init.empty()) {
        if (cfg.init == "ring_bump") {
            if (prob.dim != 2)
                throw ConfigError(0, "init ring_bump requires a 2D problem");
            RingBumpParams rp;
            rp.ring_radius = param("ring_radius", rp.ring_radius);
            rp.ring_width = param("ring_width", rp.ring_width);
            rp.amplitude = param("amplitude", rp.amplitude);
            rp.bump_amplitude = param("bump_amplitude", rp.bump_amplitude);
            rp.bump_x = param("bump_x", rp.bump_x);
            rp.bump_y = param("bump_y", rp.bump_y);
            rp.bump_width = param("bump_width", rp.bump_width);
            prob.init = ring_with_bump_initial_data(rp);
        } else {
            throw ConfigError(0, "unknown init '" + cfg.init + "'");
        }
    }

    if (!cfg.bc.empty()) {
        if (cfg.bc == "neumann") {
            prob.bc = BoundaryCondition::all_neumann();
        } else if (cfg.bc == "periodic") {
            prob.bc = BoundaryCondition::all_periodic();
        } else if (cfg.bc.rfind("dirichlet:", 0) == 0) {
            prob.bc = BoundaryCondition::all_dirichlet(
                parse_double(cfg.bc.substr(10), 0));
        } else {
            throw ConfigError(0, "unknown bc '" + cfg.bc + "'");
        }
    }
    return prob;
}

RunParams build_run_params(const RunConfig& cfg) {
    RunParams p;
    p.recon = ReconstructionScheme::parse(cfg.reconstruction);
    p.tab = tableau(cfg.tableau);
    p.grad = gradient_for_tableau_order(p.tab.order);
    p.nu_cfl = cfg.cfl;
    p.phi_override = cfg.phi;
    p.max_dt = cfg.max_dt;
    return p;
}

std::vector<std::pair<std::string, std::string>> problem_catalog() {
    return {
        {"fisher", "1D Fisher-Kolmogoroff, params: k, D, c (wave datum)"},
        {"porous_fisher",
         "1D generalized Fisher with degenerate diffusion, params: p_exp, q_exp, m_exp"},
        {"pme_absorption",
         "2D porous medium with strong absorption, params: m_exp, p_exp, c_abs; "
         "init: cross (default) or ring_bump"},
        {"heat", "1D periodic heat test with exact solution"},
    };
}

}  // namespace reldiff
