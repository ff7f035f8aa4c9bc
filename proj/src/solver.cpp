#include "reldiff/solver.hpp"

#include <cmath>
#include <string>

namespace reldiff {

RunParams::RunParams() : tab(tableau("ars222")), grad(central_gradient_op(4)) {}

NumericalFailure::NumericalFailure(double time, int stage, int i, int j)
    : std::runtime_error("non-finite value at t=" + std::to_string(time) + ", stage " +
                         std::to_string(stage + 1) + ", cell (" + std::to_string(i) +
                         (j >= 0 ? "," + std::to_string(j) : "") + ")"),
      time(time), stage(stage), i(i), j(j) {}

RelaxedFields relaxation_step(const Field& u, const ProblemSpec& prob,
                              const GradientOperator& grad) {
    const Grid& g = u.grid();
    RelaxedFields out{Field(g), {}};
    const int ny = g.dim == 2 ? g.cells[1] : 1;
    const int G = g.ghost;
    const int gyl = g.dim == 2 ? -G : 0, gyh = g.dim == 2 ? ny + G : 1;
    for (int j = gyl; j < gyh; ++j)
        for (int i = -G; i < g.cells[0] + G; ++i) out.w(i, j) = prob.p(u(i, j));
    const int R = grad.radius();
    for (int d = 0; d < g.dim; ++d) {
        Field v(g);
        const int n = g.cells[d];
        const int nt = g.dim == 2 ? g.cells[1 - d] : 1;
        const int gt = g.dim == 2 ? G : 0;
        for (int tj = -gt; tj < (g.dim == 2 ? nt + gt : 1); ++tj)
            for (int ii = -(G - R); ii < n + (G - R); ++ii) {
                const double grad_w =
                    d == 0 ? apply_gradient(grad, &out.w(ii, tj), 1, g.h[0])
                           : apply_gradient(grad, &out.w(tj, ii), out.w.stride(1), g.h[1]);
                (d == 0 ? v(ii, tj) : v(tj, ii)) = -prob.D * grad_w;
            }
        out.v.push_back(std::move(v));
    }
    return out;
}

CharState to_characteristic(const Field& u, const Field& v, const Field& w, double phi) {
    if (!(phi > 0)) throw std::invalid_argument("to_characteristic: phi must be positive");
    const Grid& g = u.grid();
    CharState cs{Field(g), Field(g), Field(g)};
    for (std::size_t k = 0; k < cs.U.size(); ++k) {
        cs.U.data()[k] = (v.data()[k] + phi * w.data()[k]) / (2.0 * phi);
        cs.V.data()[k] = (phi * w.data()[k] - v.data()[k]) / (2.0 * phi);
        cs.W.data()[k] = u.data()[k] - w.data()[k];
    }
    return cs;
}

void from_characteristic(const CharState& cs, double phi, Field& u, Field& v, Field& w) {
    if (!(phi > 0)) throw std::invalid_argument("from_characteristic: phi must be positive");
    for (std::size_t k = 0; k < cs.U.size(); ++k) {
        const double U = cs.U.data()[k], V = cs.V.data()[k], W = cs.W.data()[k];
        w.data()[k] = U + V;
        v.data()[k] = phi * (U - V);
        u.data()[k] = U + V + W;
    }
}

std::array<double, 3> numerical_flux(double u_minus, double v_plus, double phi) {
    return {phi * u_minus, -phi * v_plus, 0.0};
}

double select_dt(const Grid& grid, const ProblemSpec& prob, const RunParams& params,
                 double umin, double umax) {
    if (!(umax >= umin) || !std::isfinite(umin) || !std::isfinite(umax))
        throw std::invalid_argument("select_dt: invalid solution range");
    const double maxdp =
        std::fmax(max_dp_on_range(prob, umin, umax), params.degeneracy_floor);
    const double h = grid.min_h();
    double dt = params.nu_cfl * h * h / (2.0 * grid.dim * prob.D * maxdp);
    if (params.phi_override > 0)
        dt = std::fmin(dt, params.nu_cfl * h / params.phi_override);
    if (params.max_dt > 0) dt = std::fmin(dt, params.max_dt);
    return dt;
}

double choose_phi(const ProblemSpec& prob, double umin, double umax, double dt,
                  double floor) {
    const double maxdp = std::fmax(max_dp_on_range(prob, umin, umax), floor);
    return std::sqrt(prob.D * maxdp / dt);
}

RelaxedStepper::RelaxedStepper(const ProblemSpec& prob, const Grid& grid, RunParams params)
    : prob_(prob), grid_(grid), params_(std::move(params)),
      w_(grid), u_stage_(grid) {
    if (grid.ghost < params_.ghost())
        throw std::invalid_argument("RelaxedStepper: grid ghost width " +
                                    std::to_string(grid.ghost) + " < required " +
                                    std::to_string(params_.ghost()));
    const int n0 = grid_.cells[0];
    const int n1 = grid_.dim == 2 ? grid_.cells[1] : 1;
    const std::size_t N = static_cast<std::size_t>(n0) * n1;
    fluxdiv_.assign(params_.tab.stages, std::vector<double>(N, 0.0));
    gval_.assign(params_.tab.stages, std::vector<double>(N, 0.0));
    const int nmax = std::max(n0, n1);
    const int gr = params_.recon.ghost_required();
    vbuf_.assign(nmax + 2 * gr, 0.0);
    ubuf_.assign(nmax + 2 * gr, 0.0);
    vcharbuf_.assign(nmax + 2 * gr, 0.0);
    um_.assign(nmax + 1, 0.0);
    vp_.assign(nmax + 1, 0.0);
}

double RelaxedStepper::select_dt(const RelaxedState& state) const {
    return reldiff::select_dt(grid_, prob_, params_, state.u.min_interior(),
                              state.u.max_interior());
}

void RelaxedStepper::accumulate_flux_divergence(const Field& u_stage, double phi,
                                                std::vector<double>& fluxdiv) {
    const int gr = params_.recon.ghost_required();
    const int n0 = grid_.cells[0];
    const int n1 = grid_.dim == 2 ? grid_.cells[1] : 1;
    // w = p(u) on the full extended array
    const int G = grid_.ghost;
    const int jlo = grid_.dim == 2 ? -G : 0;
    const int jhi = grid_.dim == 2 ? n1 + G : 1;
    for (int j = jlo; j < jhi; ++j)
        for (int i = -G; i < n0 + G; ++i) w_(i, j) = prob_.p(u_stage(i, j));

    for (int d = 0; d < grid_.dim; ++d) {
        const int n = grid_.cells[d];
        const int nt = grid_.dim == 2 ? grid_.cells[1 - d] : 1;
        const double h = grid_.h[d];
        const std::ptrdiff_t ws = w_.stride(d);
        for (int tj = 0; tj < nt; ++tj) {
            const double* wline =
                d == 0 ? &w_(0, tj) : &w_(tj, 0);  // cell 0 along the sweep axis
            // v on [-gr, n+gr), then the characteristic pair
            for (int ii = -gr; ii < n + gr; ++ii) {
                const double w = wline[ii * ws];
                const double v = -prob_.D * apply_gradient(params_.grad, wline + ii * ws, ws, h);
                vbuf_[ii + gr] = v;
                ubuf_[ii + gr] = (v + phi * w) / (2.0 * phi);
                vcharbuf_[ii + gr] = (phi * w - v) / (2.0 * phi);
            }
            double* minus = um_.data();
            double* plus = vp_.data();
            reconstruct_faces(ubuf_.data() + gr, 1, n, gr, params_.recon, minus, plus);
            // only the left-biased U values are needed; reuse plus as scratch
            std::vector<double>& uminus = um_;
            reconstruct_faces(vcharbuf_.data() + gr, 1, n, gr, params_.recon,
                              vbuf_.data(), plus);
            for (int ii = 0; ii < n; ++ii) {
                const double flo = phi * (uminus[ii] - plus[ii]);
                const double fhi = phi * (uminus[ii + 1] - plus[ii + 1]);
                const std::size_t cell =
                    d == 0 ? static_cast<std::size_t>(tj) * n0 + ii
                           : static_cast<std::size_t>(ii) * n0 + tj;
                fluxdiv[cell] += (fhi - flo) / h;
            }
        }
    }
}

void RelaxedStepper::step(RelaxedState& state, double dt) {
    const int n0 = grid_.cells[0];
    const int n1 = grid_.dim == 2 ? grid_.cells[1] : 1;
    const TableauPair& tab = params_.tab;
    const int nu = tab.stages;

    const double umin = state.u.min_interior();
    const double umax = state.u.max_interior();
    double phi = params_.phi_override > 0
                     ? params_.phi_override
                     : choose_phi(prob_, umin, umax, dt, params_.degeneracy_floor);
    scheme_ = {phi, dt, dt * phi / grid_.min_h()};

    for (auto& f : fluxdiv_) std::fill(f.begin(), f.end(), 0.0);

    for (int i = 0; i < nu; ++i) {
        // explicit stage value from prior flux divergences and reactions
        for (int j = 0; j < n1; ++j)
            for (int ii = 0; ii < n0; ++ii) {
                const std::size_t cell = static_cast<std::size_t>(j) * n0 + ii;
                double val = state.u(ii, j);
                for (int k = 0; k < i; ++k) {
                    const double a = tab.expl.a[i][k];
                    if (a != 0.0)
                        val += dt * a * (gval_[k][cell] - fluxdiv_[k][cell]);
                }
                u_stage_(ii, j) = val;
            }
        for (int j = 0; j < n1; ++j)
            for (int ii = 0; ii < n0; ++ii)
                if (!std::isfinite(u_stage_(ii, j)))
                    throw NumericalFailure(state.t, i, ii, grid_.dim == 2 ? j : -1);
        fill_ghosts(u_stage_, prob_.bc);
        accumulate_flux_divergence(u_stage_, phi, fluxdiv_[i]);
        for (int j = 0; j < n1; ++j)
            for (int ii = 0; ii < n0; ++ii)
                gval_[i][static_cast<std::size_t>(j) * n0 + ii] = prob_.g(u_stage_(ii, j));
    }

    for (int j = 0; j < n1; ++j)
        for (int ii = 0; ii < n0; ++ii) {
            const std::size_t cell = static_cast<std::size_t>(j) * n0 + ii;
            double val = state.u(ii, j);
            for (int i = 0; i < nu; ++i) {
                const double b = tab.expl.b[i];
                if (b != 0.0) val += dt * b * (gval_[i][cell] - fluxdiv_[i][cell]);
            }
            state.u(ii, j) = val;
        }
    for (int j = 0; j < n1; ++j)
        for (int ii = 0; ii < n0; ++ii)
            if (!std::isfinite(state.u(ii, j)))
                throw NumericalFailure(state.t + dt, nu - 1, ii, grid_.dim == 2 ? j : -1);
    state.t += dt;
}

Grid grid_for(const ProblemSpec& prob, int m0, int m1, const RunParams& params) {
    const int G = params.ghost();
    if (prob.dim == 1) return build_grid(prob.lo[0], prob.hi[0], m0, G);
    return build_grid(prob.lo, prob.hi, {m0, m1 > 0 ? m1 : m0}, G);
}

RelaxedState make_initial_state(const ProblemSpec& prob, const Grid& grid) {
    RelaxedState st{Field(grid), 0.0};
    const int ny = grid.dim == 2 ? grid.cells[1] : 1;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < grid.cells[0]; ++i)
            st.u(i, j) = prob.init(grid.center(0, i), grid.dim == 2 ? grid.center(1, j) : 0.0);
    fill_ghosts(st.u, prob.bc);
    return st;
}

}  // namespace reldiff
