#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace reldiff {

/// Non-oscillatory boundary-extrapolated reconstruction. Cell values are
/// interpreted as sliding averages of the underlying face function, so that
/// flux differences of the face values divided by h approximate the flux
/// derivative to the formal order (conservative finite-difference form).
enum class ReconKind { PCM, ENO, WENO5 };

struct ReconstructionScheme {
    ReconKind kind = ReconKind::PCM;
    int order = 1;           // formal order
    int stencil_radius = 0;  // half-width of the candidate-stencil window
    double weno_eps_rel = 1e-6;

    /// Ghost layers needed so that both biased values exist on every
    /// interior face, including the two boundary faces.
    int ghost_required() const { return stencil_radius + 1; }

    static ReconstructionScheme pcm();
    static ReconstructionScheme eno(int order);  // order in 2..6
    static ReconstructionScheme weno5();
    /// Accepts "pcm", "eno2".."eno6", "weno5".
    static ReconstructionScheme parse(std::string_view name);
    const char* name() const;
};

/// Left-biased face value at the right face of the center cell, ENO stencil
/// selection over undivided differences. Reads center[k*stride] for
/// k in [-(r-1), r-1]. Mirror with a negative stride for right-biased values.
double eno_face(const double* center, std::ptrdiff_t stride, int r);

/// Chosen left shift s in [0, r-1]: the selected stencil is
/// {center-s, ..., center-s+r-1}. Ties prefer the more centered extension,
/// then the left one.
int eno_stencil_select(const double* center, std::ptrdiff_t stride, int r);

/// Jiang-Shu WENO5 left-biased face value; eps regularizes the weights.
double weno5_face(const double* center, std::ptrdiff_t stride, double eps);

/// Nonlinear WENO5 weights for the three candidate stencils (diagnostic).
void weno5_weights(const double* center, std::ptrdiff_t stride, double eps,
                   double w[3]);

/// Linear reconstruction coefficients: face value at the right face of cell 0
/// from cells {-s, ..., -s+r-1} holding cell averages.
std::vector<double> cell_to_face_coeffs(int r, int s);

/// Both biased values on faces f = 0..n (face f sits between cells f-1 and f).
/// vals points at cell 0; ghost layers are reached through negative offsets
/// and must cover scheme.ghost_required().
void reconstruct_faces(const double* vals, std::ptrdiff_t stride, int n, int ghost,
                       const ReconstructionScheme& scheme, double* minus, double* plus);

/// Convenience overload on a packed line: vals = [g ghosts | n interior | g ghosts].
void reconstruct_faces(const std::vector<double>& vals, int n, int ghost,
                       const ReconstructionScheme& scheme,
                       std::vector<double>& minus, std::vector<double>& plus);

/// Antisymmetric central finite-difference first-derivative operator of even
/// order q, exact on polynomials of degree <= q.
struct GradientOperator {
    int order = 2;
    std::vector<double> coeffs;  // length order+1, offsets -q/2..q/2, over h
    int radius() const { return order / 2; }
};

GradientOperator central_gradient_op(int q);
/// Smallest shipped even order >= 2p for an order-p tableau.
GradientOperator gradient_for_tableau_order(int p);

double apply_gradient(const GradientOperator& op, const double* center,
                      std::ptrdiff_t stride, double h);

/// out[i] = derivative at cell i for i in [i0, i1); vals reached relative to
/// cell 0 with the given stride, needs op.radius() cells beyond the range.
void central_gradient(const double* vals, std::ptrdiff_t stride, int i0, int i1,
                      const GradientOperator& op, double h, double* out,
                      std::ptrdiff_t out_stride);

/// Convenience on a packed line with g ghosts; returns the n interior values.
std::vector<double> central_gradient(const std::vector<double>& vals, int n, int ghost,
                                     const GradientOperator& op, double h);

}  // namespace reldiff
