#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>

#include "reldiff/grid.hpp"

namespace reldiff {

/// The continuous problem u_t = D Lap(p(u)) + g(u). Evaluators must be pure;
/// the struct is immutable after construction and shareable.
struct ProblemSpec {
    std::string name;
    int dim = 1;
    std::function<double(double)> p;   // non-decreasing, Lipschitz on the range
    std::function<double(double)> dp;  // derivative of p
    std::function<double(double)> g;   // reaction term
    double D = 1.0;
    std::array<double, 2> lo{0.0, 0.0};
    std::array<double, 2> hi{1.0, 1.0};
    std::function<double(double, double)> init;  // second argument ignored in 1D
    BoundaryCondition bc;
    bool degenerate = false;
    bool has_reaction = true;  // g not identically zero
    std::map<std::string, double> params;
};

/// Generic constructor for user-defined p, g; fills the common fields and
/// leaves init/bc/domain to the caller.
ProblemSpec make_problem(std::string name, int dim,
                         std::function<double(double)> p,
                         std::function<double(double)> dp,
                         std::function<double(double)> g, double D);

/// 1D Fisher-Kolmogoroff: u_t = k u(1-u) + D u_xx on [-50,200], Neumann.
/// Initial datum is the traveling-wave profile of speed c, clamped at zero
/// (the truncated expansion goes slightly negative in the far tail).
ProblemSpec fisher_problem(double k, double D, double c = 2.0);

/// 1D generalized Fisher: u_t = u^pe (1 - u^qe) + (u^me u_x)_x, recast with
/// p(u) = u^{me+1}/(me+1), D = 1. Initial datum: two sharp fronts at
/// x0 = -1 and x1 = 1 moving toward each other (exact profile for qe=me=1).
ProblemSpec porous_fisher_problem(double pe, double qe, double me);

/// 2D porous medium with strong absorption: u_t = Lap(u^me) - ca u^pe on
/// [-2,2]^2, Neumann; g is extended by zero for u <= 0. Initial datum:
/// cross_initial_data.
ProblemSpec pme_absorption_problem(double me, double pe, double ca);

/// Smooth periodic heat test: p(u)=u, g=0, u0 = A sin(pi x) on [0,2];
/// exact solution A exp(-pi^2 t) sin(pi x). A=0 gives the zero steady state.
ProblemSpec heat_problem(double amplitude = 1.0);

/// Cross-shaped datum: 1 at the origin, [1 - (x^2+y^2)^2 / sqrt(x^6+y^6)]_+
/// elsewhere.
double cross_initial_data(double x, double y);

struct RingBumpParams {
    double ring_radius = 1.0;
    double ring_width = 0.4;
    double amplitude = 1.0;
    double bump_amplitude = 0.6;
    double bump_x = 1.0;
    double bump_y = 0.0;
    double bump_width = 0.35;
};

/// Radially symmetric annular profile plus one localized bump
/// (compact support; cosine-squared shapes).
std::function<double(double, double)> ring_with_bump_initial_data(
    const RingBumpParams& prm = {});

/// Sharp porous-Fisher traveling front for qe = me = 1:
/// u = [1 - exp((x - x0)/sqrt(2))]_+ moving right at speed 1/sqrt(2);
/// direction < 0 mirrors it.
double porous_fisher_front(double x, double x0, int direction);

/// max |p'(u)| over [umin, umax] on a sampled lattice.
double max_dp_on_range(const ProblemSpec& prob, double umin, double umax,
                       int samples = 65);

}  // namespace reldiff
