#pragma once

#include <stdexcept>
#include <vector>

#include "reldiff/grid.hpp"
#include "reldiff/imex.hpp"
#include "reldiff/models.hpp"
#include "reldiff/reconstruction.hpp"

namespace reldiff {

/// Discretization choices for the relaxed time-stepper.
struct RunParams {
    ReconstructionScheme recon = ReconstructionScheme::weno5();
    TableauPair tab;
    GradientOperator grad;
    double nu_cfl = 0.25;
    double phi_override = 0.0;  // <= 0 selects the default characteristic speed
    double max_dt = 0.0;        // <= 0 disables the cap
    double degeneracy_floor = 1e-12;

    RunParams();
    /// Ghost width covering reconstruction plus the gradient stencil.
    int ghost() const { return recon.ghost_required() + grad.radius(); }
};

struct SchemeParams {
    double phi = 1.0;
    double dt = 0.0;
    double courant = 0.0;  // dt * phi / h_min
};

struct RelaxedState {
    Field u;
    double t = 0.0;
};

/// Characteristic triple for the eigenvalues +phi, -phi, 0. U + V + W = u.
struct CharState {
    Field U, V, W;
};

struct RelaxedFields {
    Field w;
    std::vector<Field> v;  // one component per axis
};

class NumericalFailure : public std::runtime_error {
public:
    NumericalFailure(double time, int stage, int i, int j);
    double time;
    int stage, i, j;
};

/// Relaxation step: w = p(u) pointwise, v_d = -D * (central gradient of w
/// along d). Requires ghosts of u filled; v is valid wherever the gradient
/// stencil fits inside the ghost region.
RelaxedFields relaxation_step(const Field& u, const ProblemSpec& prob,
                              const GradientOperator& grad);

CharState to_characteristic(const Field& u, const Field& v, const Field& w, double phi);
void from_characteristic(const CharState& cs, double phi, Field& u, Field& v, Field& w);

/// Upwind flux triple (phi U^-, -phi V^+, 0) at one face.
std::array<double, 3> numerical_flux(double u_minus, double v_plus, double phi);

/// Parabolic time step nu * h^2 / (2 d D max|p'|) with a degeneracy floor;
/// a phi override additionally enforces dt <= nu h / phi, and max_dt caps it.
double select_dt(const Grid& grid, const ProblemSpec& prob, const RunParams& params,
                 double umin, double umax);

/// Default characteristic speed sqrt(D max|p'| / dt).
double choose_phi(const ProblemSpec& prob, double umin, double umax, double dt,
                  double floor);

/// One relaxed IMEX step: alternation of relaxation and characteristic
/// upwind transport over the explicit stages. Owns scratch storage; reuse
/// one stepper per run.
class RelaxedStepper {
public:
    RelaxedStepper(const ProblemSpec& prob, const Grid& grid, RunParams params);

    /// Advance state by dt in place. Throws NumericalFailure on NaN.
    void step(RelaxedState& state, double dt);

    double select_dt(const RelaxedState& state) const;
    const SchemeParams& last_params() const { return scheme_; }
    const RunParams& params() const { return params_; }
    const Grid& grid() const { return grid_; }

private:
    void accumulate_flux_divergence(const Field& u_stage, double phi,
                                    std::vector<double>& fluxdiv);

    const ProblemSpec& prob_;
    Grid grid_;
    RunParams params_;
    SchemeParams scheme_;
    Field w_, u_stage_;
    std::vector<std::vector<double>> fluxdiv_, gval_;
    std::vector<double> vbuf_, ubuf_, vcharbuf_, um_, vp_;
};

/// Initialize a state by sampling prob.init at cell centers.
RelaxedState make_initial_state(const ProblemSpec& prob, const Grid& grid);

/// Grid matching the problem domain with the ghost width the params need.
Grid grid_for(const ProblemSpec& prob, int m0, int m1, const RunParams& params);

}  // namespace reldiff
