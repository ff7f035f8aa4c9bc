#include "reldiff/models.hpp"

#include <cmath>
#include <stdexcept>

#include "reldiff/validation.hpp"

namespace reldiff {

ProblemSpec make_problem(std::string name, int dim,
                         std::function<double(double)> p,
                         std::function<double(double)> dp,
                         std::function<double(double)> g, double D) {
    ProblemSpec prob;
    prob.name = std::move(name);
    prob.dim = dim;
    prob.p = std::move(p);
    prob.dp = std::move(dp);
    prob.g = std::move(g);
    prob.D = D;
    return prob;
}

namespace {

// Odd power-law extension keeps p non-decreasing when floating error
// produces slightly negative values.
std::function<double(double)> signed_pow(double e, double scale = 1.0) {
    return [e, scale](double u) {
        return scale * (u >= 0 ? std::pow(u, e) : -std::pow(-u, e));
    };
}

std::function<double(double)> signed_pow_deriv(double e, double scale = 1.0) {
    return [e, scale](double u) { return scale * e * std::pow(std::fabs(u), e - 1.0); };
}

}  // namespace

ProblemSpec fisher_problem(double k, double D, double c) {
    if (!(k > 0) || !(D > 0))
        throw std::invalid_argument("fisher_problem: k and D must be positive");
    auto prob = make_problem("fisher", 1,
                             [](double u) { return u; },
                             [](double) { return 1.0; },
                             [k](double u) { return k * u * (1.0 - u); }, D);
    prob.lo = {-50.0, 0.0};
    prob.hi = {200.0, 1.0};
    prob.bc = BoundaryCondition::all_neumann();
    prob.init = [c](double x, double) { return std::fmax(fk_wave_profile(x, c), 0.0); };
    prob.params = {{"k", k}, {"c", c}};
    return prob;
}

double porous_fisher_front(double x, double x0, int direction) {
    const double s = direction >= 0 ? (x - x0) : -(x - x0);
    return std::fmax(1.0 - std::exp(s / std::sqrt(2.0)), 0.0);
}

ProblemSpec porous_fisher_problem(double pe, double qe, double me) {
    if (pe < 0 || qe < 0 || me < 0)
        throw std::invalid_argument("porous_fisher_problem: exponents must be >= 0");
    auto prob = make_problem(
        "porous_fisher", 1, signed_pow(me + 1.0, 1.0 / (me + 1.0)),
        signed_pow_deriv(me + 1.0, 1.0 / (me + 1.0)),
        [pe, qe](double u) {
            if (u <= 0.0) return 0.0;
            return std::pow(u, pe) * (1.0 - std::pow(u, qe));
        },
        1.0);
    prob.lo = {-8.0, 0.0};
    prob.hi = {8.0, 1.0};
    prob.bc = BoundaryCondition::all_neumann();
    prob.degenerate = me > 0;
    prob.init = [](double x, double) {
        return std::fmax(porous_fisher_front(x, -1.0, +1),
                         porous_fisher_front(x, 1.0, -1));
    };
    prob.params = {{"p_exp", pe}, {"q_exp", qe}, {"m_exp", me}};
    return prob;
}

double cross_initial_data(double x, double y) {
    const double r2 = x * x + y * y;
    if (r2 == 0.0) return 1.0;
    const double denom = std::sqrt(x * x * x * x * x * x + y * y * y * y * y * y);
    return std::fmax(1.0 - r2 * r2 / denom, 0.0);
}

ProblemSpec pme_absorption_problem(double me, double pe, double ca) {
    if (me < 1.0)
        throw std::invalid_argument("pme_absorption_problem: m must be >= 1");
    if (!(pe > 0.0) || !(pe < 1.0))
        throw std::invalid_argument(
            "pme_absorption_problem: absorption exponent must be in (0,1)");
    if (!(ca > 0.0))
        throw std::invalid_argument("pme_absorption_problem: c must be positive");
    auto prob = make_problem("pme_absorption", 2, signed_pow(me), signed_pow_deriv(me),
                             [pe, ca](double u) {
                                 return u > 0.0 ? -ca * std::pow(u, pe) : 0.0;
                             },
                             1.0);
    prob.dim = 2;
    prob.lo = {-2.0, -2.0};
    prob.hi = {2.0, 2.0};
    prob.bc = BoundaryCondition::all_neumann();
    prob.degenerate = me > 1.0;
    prob.init = [](double x, double y) { return cross_initial_data(x, y); };
    prob.params = {{"m_exp", me}, {"p_exp", pe}, {"c_abs", ca}};
    return prob;
}

ProblemSpec heat_problem(double amplitude) {
    auto prob = make_problem("heat", 1,
                             [](double u) { return u; },
                             [](double) { return 1.0; },
                             [](double) { return 0.0; }, 1.0);
    prob.lo = {0.0, 0.0};
    prob.hi = {2.0, 1.0};
    prob.bc = BoundaryCondition::all_periodic();
    prob.has_reaction = false;
    prob.init = [amplitude](double x, double) { return amplitude * std::sin(M_PI * x); };
    prob.params = {{"amplitude", amplitude}};
    return prob;
}

std::function<double(double, double)> ring_with_bump_initial_data(
    const RingBumpParams& prm) {
    return [prm](double x, double y) {
        const double r = std::hypot(x, y);
        double v = 0.0;
        if (std::fabs(r - prm.ring_radius) < prm.ring_width) {
            const double a = M_PI * (r - prm.ring_radius) / (2.0 * prm.ring_width);
            v += prm.amplitude * std::cos(a) * std::cos(a);
        }
        const double d = std::hypot(x - prm.bump_x, y - prm.bump_y);
        if (d < prm.bump_width) {
            const double a = M_PI * d / (2.0 * prm.bump_width);
            v += prm.bump_amplitude * std::cos(a) * std::cos(a);
        }
        return v;
    };
}

double max_dp_on_range(const ProblemSpec& prob, double umin, double umax, int samples) {
    if (!(umax >= umin))
        throw std::invalid_argument("max_dp_on_range: empty range");
    double m = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double u =
            samples == 1 ? umin : umin + (umax - umin) * i / (samples - 1.0);
        m = std::fmax(m, std::fabs(prob.dp(u)));
    }
    return m;
}

}  // namespace reldiff
