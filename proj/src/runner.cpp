#include "reldiff/runner.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "reldiff/validation.hpp"

namespace reldiff {

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

bool square_centered(const Grid& g) {
    return g.dim == 2 && g.cells[0] == g.cells[1] && g.h[0] == g.h[1] &&
           g.lo[0] == -g.hi[0] && g.lo[1] == -g.hi[1] && g.lo[0] == g.lo[1];
}

SeriesSample sample_state(const RelaxedState& st, const RunConfig& cfg) {
    SeriesSample s;
    const Grid& g = st.u.grid();
    s.t = st.t;
    s.mass = st.u.mass();
    s.max_u = st.u.max_interior();
    s.min_u = st.u.min_interior();
    s.max_grad = max_gradient(st.u, g.min_h()).value;
    if (square_centered(g)) s.sym_dev = symmetry_deviation(st.u);
    if (g.dim == 1 && s.min_u < cfg.front_level && s.max_u > cfg.front_level)
        s.fronts = front_positions(st.u, cfg.front_level);
    return s;
}

void write_series(const std::string& path, const std::vector<SeriesSample>& series,
                  int dim) {
    std::ofstream out(path);
    out << "t mass max_u min_u max_grad "
        << (dim == 1 ? "n_fronts front_first front_last" : "sym_dev") << "\n";
    for (const auto& s : series) {
        out << fmt(s.t) << ' ' << fmt(s.mass) << ' ' << fmt(s.max_u) << ' '
            << fmt(s.min_u) << ' ' << fmt(s.max_grad);
        if (dim == 1) {
            out << ' ' << s.fronts.size();
            if (s.fronts.empty())
                out << " nan nan";
            else
                out << ' ' << fmt(s.fronts.front()) << ' ' << fmt(s.fronts.back());
        } else {
            out << ' ' << fmt(s.sym_dev);
        }
        out << "\n";
    }
}

}  // namespace

void write_snapshot(const std::string& path, const Field& u) {
    const Grid& g = u.grid();
    std::ofstream out(path);
    out << (g.dim == 1 ? "x u" : "x y u") << "\n";
    const int ny = g.dim == 2 ? g.cells[1] : 1;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < g.cells[0]; ++i) {
            out << fmt(g.center(0, i));
            if (g.dim == 2) out << ' ' << fmt(g.center(1, j));
            out << ' ' << fmt(u(i, j)) << "\n";
        }
}

std::optional<std::function<double(double, double, double)>> exact_reference(
    const ProblemSpec& prob) {
    if (prob.name == "heat") {
        const double D = prob.D;
        const auto it = prob.params.find("amplitude");
        const double A = it != prob.params.end() ? it->second : 1.0;
        return [D, A](double x, double, double t) {
            return A * std::exp(-M_PI * M_PI * D * t) * std::sin(M_PI * x);
        };
    }
    return std::nullopt;
}

RunResult run(const RunConfig& cfg, bool write_files) {
    validate_config(cfg);
    const ProblemSpec prob = build_problem(cfg);
    const RunParams params = build_run_params(cfg);
    const Grid grid = grid_for(prob, cfg.m0, cfg.m1, params);
    RelaxedStepper stepper(prob, grid, params);
    RelaxedState state = make_initial_state(prob, grid);

    std::vector<double> times = cfg.times;
    if (times.empty()) times = {0.0, cfg.T};

    RunResult res;
    res.mass_initial = state.u.mass();
    res.min_u_overall = state.u.min_interior();
    const double u0max = state.u.max_interior();
    const double ext_threshold = cfg.extinction_threshold_rel * u0max;

    // Contact is detected at contact_level (near the support edge), which can
    // differ from the series' front_level used for wave tracking.
    auto contact_count = [&]() -> std::size_t {
        if (grid.dim != 1) return 0;
        return front_positions(state.u, cfg.contact_level).size();
    };
    const std::size_t initial_contacts = contact_count();
    res.series.push_back(sample_state(state, cfg));
    std::size_t next_out = 0;
    auto emit_snapshots_due = [&]() {
        while (next_out < times.size() && state.t >= times[next_out] - 1e-12) {
            res.snapshots.emplace_back(times[next_out], state.u);
            ++next_out;
        }
    };
    emit_snapshots_due();

    const double eps_t = 1e-12 * std::fmax(1.0, cfg.T);
    long since_sample = 0;
    while (state.t < cfg.T - eps_t) {
        double dt = stepper.select_dt(state);
        double target = cfg.T;
        if (next_out < times.size()) target = std::fmin(target, times[next_out]);
        if (state.t + dt > target) dt = target - state.t;
        stepper.step(state, dt);
        ++res.steps;
        ++since_sample;
        res.min_u_overall = std::fmin(res.min_u_overall, state.u.min_interior());

        const bool at_output =
            next_out < times.size() && state.t >= times[next_out] - eps_t;
        const bool at_end = state.t >= cfg.T - eps_t;
        if (since_sample >= cfg.series_stride || at_output || at_end) {
            since_sample = 0;
            SeriesSample s = sample_state(state, cfg);
            res.series.push_back(s);
            if (!res.contact_time && initial_contacts >= 2 &&
                contact_count() < initial_contacts)
                res.contact_time = s.t;
            if (!res.t_ext && s.max_u < ext_threshold) {
                res.t_ext = s.t;
                if (cfg.stop_at_extinction) break;
            }
        }
        emit_snapshots_due();
    }
    if (res.t_ext && cfg.stop_at_extinction) {
        // record the terminal state even when stopping before the schedule
        res.snapshots.emplace_back(state.t, state.u);
    }
    res.mass_final = state.u.mass();
    res.scheme = stepper.last_params();
    if (res.t_ext) {
        std::ostringstream os;
        os << "extinct at t=" << *res.t_ext;
        res.status = os.str();
    }

    if (write_files) {
        namespace fs = std::filesystem;
        fs::create_directories(cfg.dir);
        for (std::size_t k = 0; k < res.snapshots.size(); ++k) {
            char name[32];
            std::snprintf(name, sizeof name, "u_%03zu.dat", k);
            write_snapshot((fs::path(cfg.dir) / name).string(), res.snapshots[k].second);
        }
        write_series((fs::path(cfg.dir) / "series.dat").string(), res.series,
                     grid.dim);
        std::ofstream sum((fs::path(cfg.dir) / "summary.txt").string());
        sum << "problem " << prob.name << "\n";
        sum << "grid " << grid.cells[0];
        if (grid.dim == 2) sum << " " << grid.cells[1];
        sum << "\n";
        sum << "scheme " << params.recon.name() << " " << params.tab.id << "\n";
        sum << "steps " << res.steps << "\n";
        sum << "phi " << fmt(res.scheme.phi) << "\n";
        sum << "dt_last " << fmt(res.scheme.dt) << "\n";
        sum << "mass_initial " << fmt(res.mass_initial) << "\n";
        sum << "mass_final " << fmt(res.mass_final) << "\n";
        const double drift =
            res.mass_initial != 0.0
                ? std::fabs(res.mass_final - res.mass_initial) /
                      std::fabs(res.mass_initial)
                : std::fabs(res.mass_final - res.mass_initial);
        sum << "mass_drift_rel " << fmt(drift) << "\n";
        sum << "min_u " << fmt(res.min_u_overall) << "\n";
        if (res.contact_time) sum << "contact_time " << fmt(*res.contact_time) << "\n";
        if (res.t_ext) sum << "t_ext " << fmt(*res.t_ext) << "\n";
        sum << "status " << res.status << "\n";
    }
    return res;
}

ConvergenceResult convergence_study(const RunConfig& cfg,
                                    const std::vector<int>& grids,
                                    bool write_files) {
    if (grids.size() < 3)
        throw ConfigError(0, "convergence study needs at least 3 grids");
    for (std::size_t i = 1; i < grids.size(); ++i)
        if (grids[i] <= grids[i - 1])
            throw ConfigError(0, "grid list must be strictly increasing");
    validate_config(cfg);
    const ProblemSpec prob0 = build_problem(cfg);
    auto ref = exact_reference(prob0);
    if (!ref)
        throw ConfigError(0, "problem '" + prob0.name +
                                 "' has no exact reference for a convergence study");

    ConvergenceResult out;
    for (int m : grids) {
        RunConfig sub = cfg;
        sub.m0 = m;
        sub.m1 = cfg.m1 > 0 ? m : 0;
        sub.times = {cfg.T};
        RunResult r = run(sub, false);
        const Field& u = r.snapshots.back().second;
        const double T = cfg.T;
        auto exact2 = [&ref, T](double x, double y) { return (*ref)(x, y, T); };
        ErrorReport e = error_norms(u, exact2);
        out.rows.push_back({m, u.grid().min_h(), e.l1, e.l2, e.linf});
    }
    out.exact = true;
    for (const auto& row : out.rows)
        if (row.l1 != 0.0 || row.l2 != 0.0 || row.linf != 0.0) out.exact = false;
    std::vector<double> hs, e1, e2, ei;
    for (const auto& row : out.rows) {
        hs.push_back(row.h);
        e1.push_back(row.l1);
        e2.push_back(row.l2);
        ei.push_back(row.linf);
    }
    if (!out.exact) {
        out.rate_l1 = convergence_rate(e1, hs);
        out.rate_l2 = convergence_rate(e2, hs);
        out.rate_linf = convergence_rate(ei, hs);
    }

    if (write_files) {
        namespace fs = std::filesystem;
        fs::create_directories(cfg.dir);
        std::ofstream tab((fs::path(cfg.dir) / "rates.dat").string());
        tab << "m h l1 l2 linf r_l1 r_l2 r_linf\n";
        for (std::size_t i = 0; i < out.rows.size(); ++i) {
            const auto& row = out.rows[i];
            tab << row.m << ' ' << fmt(row.h) << ' ' << fmt(row.l1) << ' '
                << fmt(row.l2) << ' ' << fmt(row.linf);
            if (out.exact) {
                tab << " exact exact exact";
            } else if (i == 0) {
                tab << " - - -";
            } else {
                tab << ' ' << fmt(out.rate_l1[i - 1]) << ' ' << fmt(out.rate_l2[i - 1])
                    << ' ' << fmt(out.rate_linf[i - 1]);
            }
            tab << "\n";
        }
    }
    return out;
}

}  // namespace reldiff
