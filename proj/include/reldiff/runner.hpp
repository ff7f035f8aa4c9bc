#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "reldiff/config.hpp"
#include "reldiff/solver.hpp"

namespace reldiff {

/// One scalar-diagnostics record along a run.
struct SeriesSample {
    double t = 0.0;
    double mass = 0.0;
    double max_u = 0.0;
    double min_u = 0.0;
    double max_grad = 0.0;
    double sym_dev = 0.0;          // 2D square grids only, else 0
    std::vector<double> fronts;    // 1D level crossings, left to right
};

struct RunResult {
    std::string status = "ok";  // "ok" or "extinct at t=..."
    std::optional<double> t_ext;
    std::optional<double> contact_time;
    double mass_initial = 0.0;
    double mass_final = 0.0;
    double min_u_overall = 0.0;
    long steps = 0;
    SchemeParams scheme;  // parameters of the last step taken
    std::vector<SeriesSample> series;
    std::vector<std::pair<double, Field>> snapshots;  // at the output times
};

/// Execute one configured run. Writes one grid file per output time,
/// series.dat, and summary.txt under cfg.dir when write_files is set.
/// Terminates early once extinct when cfg.stop_at_extinction.
RunResult run(const RunConfig& cfg, bool write_files = true);

struct ConvergenceRow {
    int m = 0;
    double h = 0.0;
    double l1 = 0.0, l2 = 0.0, linf = 0.0;
};

struct ConvergenceResult {
    std::vector<ConvergenceRow> rows;
    std::vector<double> rate_l1, rate_l2, rate_linf;  // pairwise observed orders
    bool exact = false;  // all errors identically zero
};

/// Refinement study against the problem's exact solution at t = T.
/// Requires >= 3 grids and a problem with a closed-form reference.
/// Writes rates.dat under cfg.dir when write_files is set.
ConvergenceResult convergence_study(const RunConfig& cfg,
                                    const std::vector<int>& grids,
                                    bool write_files = true);

/// Closed-form solution u(x, y, t) when the problem has one (the heat test).
std::optional<std::function<double(double, double, double)>> exact_reference(
    const ProblemSpec& prob);

/// Write a snapshot as plain text: header naming the columns, then
/// "x [y] u" rows in %.16e format.
void write_snapshot(const std::string& path, const Field& u);

}  // namespace reldiff
