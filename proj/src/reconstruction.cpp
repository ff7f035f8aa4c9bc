#include "reldiff/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace reldiff {

ReconstructionScheme ReconstructionScheme::pcm() { return {ReconKind::PCM, 1, 0, 1e-6}; }

ReconstructionScheme ReconstructionScheme::eno(int order) {
    if (order < 2 || order > 6)
        throw std::invalid_argument("ENO order must be in 2..6");
    return {ReconKind::ENO, order, order - 1, 1e-6};
}

ReconstructionScheme ReconstructionScheme::weno5() { return {ReconKind::WENO5, 5, 2, 1e-6}; }

ReconstructionScheme ReconstructionScheme::parse(std::string_view name) {
    if (name == "pcm") return pcm();
    if (name == "weno5") return weno5();
    if (name.size() == 4 && name.substr(0, 3) == "eno" && name[3] >= '2' && name[3] <= '6')
        return eno(name[3] - '0');
    throw std::invalid_argument("unknown reconstruction scheme: " + std::string(name));
}

const char* ReconstructionScheme::name() const {
    switch (kind) {
        case ReconKind::PCM: return "pcm";
        case ReconKind::WENO5: return "weno5";
        case ReconKind::ENO:
            switch (order) {
                case 2: return "eno2";
                case 3: return "eno3";
                case 4: return "eno4";
                case 5: return "eno5";
                case 6: return "eno6";
            }
    }
    return "?";
}

std::vector<double> cell_to_face_coeffs(int r, int s) {
    if (r < 1 || s < 0 || s >= r)
        throw std::invalid_argument("cell_to_face_coeffs: bad stencil");
    // Cells -s..-s+r-1; primitive nodes at the r+1 faces bounding them.
    // Face value at x_{1/2} is the derivative of the primitive interpolant,
    // expressed as a combination of the cell averages.
    std::vector<long double> faces(r + 1);
    for (int k = 0; k <= r; ++k) faces[k] = -s - 0.5L + k;
    const long double target = 0.5L;
    std::vector<long double> Lp(r + 1, 0.0L);  // derivative of Lagrange basis
    for (int k = 0; k <= r; ++k) {
        long double tot = 0.0L;
        for (int j = 0; j <= r; ++j) {
            if (j == k) continue;
            long double prod = 1.0L;
            for (int l = 0; l <= r; ++l) {
                if (l == k || l == j) continue;
                prod *= (target - faces[l]) / (faces[k] - faces[l]);
            }
            tot += prod / (faces[k] - faces[j]);
        }
        Lp[k] = tot;
    }
    // Primitive at face k is the running sum of averages; cell l contributes
    // to all faces k > l.
    std::vector<double> c(r);
    for (int l = 0; l < r; ++l) {
        long double sum = 0.0L;
        for (int k = l + 1; k <= r; ++k) sum += Lp[k];
        c[l] = static_cast<double>(sum);
    }
    return c;
}

namespace {

constexpr int kMaxEno = 6;

struct CoeffTable {
    // coeff[r][s] for r = 1..kMaxEno
    std::vector<double> c[kMaxEno + 1][kMaxEno];
    CoeffTable() {
        for (int r = 1; r <= kMaxEno; ++r)
            for (int s = 0; s < r; ++s) c[r][s] = cell_to_face_coeffs(r, s);
    }
};

const CoeffTable& coeff_table() {
    static const CoeffTable t;
    return t;
}

// Undivided difference of order `level` starting at w[start].
double undiv(const double* w, int start, int level) {
    double acc = 0.0;
    long binom = 1;
    for (int k = 0; k <= level; ++k) {
        const double sign = ((level - k) % 2 == 0) ? 1.0 : -1.0;
        acc += sign * static_cast<double>(binom) * w[start + k];
        binom = binom * (level - k) / (k + 1);
    }
    return acc;
}

int select_from_window(const double* w, int r) {
    const int jc = r - 1;  // center cell position in the window
    int lo = jc, hi = jc;
    for (int level = 1; level < r; ++level) {
        const double dl = std::fabs(undiv(w, lo - 1, level));
        const double dr = std::fabs(undiv(w, lo, level));
        if (dl < dr) {
            --lo;
        } else if (dr < dl) {
            ++hi;
        } else {
            // tie: prefer the extension that keeps the stencil centered,
            // then the left one
            const int nl = jc - lo, nr = hi - jc;
            if (nl <= nr) --lo; else ++hi;
        }
    }
    return jc - lo;
}

}  // namespace

int eno_stencil_select(const double* center, std::ptrdiff_t stride, int r) {
    double w[2 * kMaxEno - 1];
    for (int k = 0; k < 2 * r - 1; ++k)
        w[k] = center[(k - (r - 1)) * stride];
    return select_from_window(w, r);
}

double eno_face(const double* center, std::ptrdiff_t stride, int r) {
    if (r == 1) return *center;
    double w[2 * kMaxEno - 1];
    for (int k = 0; k < 2 * r - 1; ++k)
        w[k] = center[(k - (r - 1)) * stride];
    const int s = select_from_window(w, r);
    const auto& c = coeff_table().c[r][s];
    const double* cell0 = w + (r - 1) - s;
    double v = 0.0;
    for (int l = 0; l < r; ++l) v += c[l] * cell0[l];
    return v;
}

void weno5_weights(const double* center, std::ptrdiff_t stride, double eps, double w[3]) {
    const double vm2 = center[-2 * stride], vm1 = center[-stride], v0 = *center,
                 vp1 = center[stride], vp2 = center[2 * stride];
    const double b0 = 13.0 / 12.0 * (vm2 - 2 * vm1 + v0) * (vm2 - 2 * vm1 + v0) +
                      0.25 * (vm2 - 4 * vm1 + 3 * v0) * (vm2 - 4 * vm1 + 3 * v0);
    const double b1 = 13.0 / 12.0 * (vm1 - 2 * v0 + vp1) * (vm1 - 2 * v0 + vp1) +
                      0.25 * (vm1 - vp1) * (vm1 - vp1);
    const double b2 = 13.0 / 12.0 * (v0 - 2 * vp1 + vp2) * (v0 - 2 * vp1 + vp2) +
                      0.25 * (3 * v0 - 4 * vp1 + vp2) * (3 * v0 - 4 * vp1 + vp2);
    const double a0 = 0.1 / ((eps + b0) * (eps + b0));
    const double a1 = 0.6 / ((eps + b1) * (eps + b1));
    const double a2 = 0.3 / ((eps + b2) * (eps + b2));
    const double s = a0 + a1 + a2;
    w[0] = a0 / s;
    w[1] = a1 / s;
    w[2] = a2 / s;
}

double weno5_face(const double* center, std::ptrdiff_t stride, double eps) {
    const double vm2 = center[-2 * stride], vm1 = center[-stride], v0 = *center,
                 vp1 = center[stride], vp2 = center[2 * stride];
    double w[3];
    weno5_weights(center, stride, eps, w);
    const double q0 = (2 * vm2 - 7 * vm1 + 11 * v0) / 6.0;
    const double q1 = (-vm1 + 5 * v0 + 2 * vp1) / 6.0;
    const double q2 = (2 * v0 + 5 * vp1 - vp2) / 6.0;
    return w[0] * q0 + w[1] * q1 + w[2] * q2;
}

void reconstruct_faces(const double* vals, std::ptrdiff_t stride, int n, int ghost,
                       const ReconstructionScheme& scheme, double* minus, double* plus) {
    if (ghost < scheme.ghost_required())
        throw std::invalid_argument(std::string("reconstruct_faces: scheme ") +
                                    scheme.name() + " needs " +
                                    std::to_string(scheme.ghost_required()) +
                                    " ghost layers, got " + std::to_string(ghost));
    switch (scheme.kind) {
        case ReconKind::PCM:
            for (int f = 0; f <= n; ++f) {
                minus[f] = vals[(f - 1) * stride];
                plus[f] = vals[f * stride];
            }
            return;
        case ReconKind::ENO: {
            const int r = scheme.order;
            for (int f = 0; f <= n; ++f) {
                minus[f] = eno_face(vals + (f - 1) * stride, stride, r);
                plus[f] = eno_face(vals + f * stride, -stride, r);
            }
            return;
        }
        case ReconKind::WENO5: {
            double scale = 0.0;
            for (int i = -ghost; i < n + ghost; ++i)
                scale = std::fmax(scale, std::fabs(vals[i * stride]));
            const double eps = std::fmax(scheme.weno_eps_rel * scale * scale, 1e-100);
            for (int f = 0; f <= n; ++f) {
                minus[f] = weno5_face(vals + (f - 1) * stride, stride, eps);
                plus[f] = weno5_face(vals + f * stride, -stride, eps);
            }
            return;
        }
    }
}

void reconstruct_faces(const std::vector<double>& vals, int n, int ghost,
                       const ReconstructionScheme& scheme,
                       std::vector<double>& minus, std::vector<double>& plus) {
    if (static_cast<int>(vals.size()) != n + 2 * ghost)
        throw std::invalid_argument("reconstruct_faces: line size mismatch");
    minus.assign(n + 1, 0.0);
    plus.assign(n + 1, 0.0);
    reconstruct_faces(vals.data() + ghost, 1, n, ghost, scheme, minus.data(), plus.data());
}

GradientOperator central_gradient_op(int q) {
    GradientOperator op;
    op.order = q;
    switch (q) {
        case 2: op.coeffs = {-0.5, 0.0, 0.5}; break;
        case 4: op.coeffs = {1.0 / 12, -2.0 / 3, 0.0, 2.0 / 3, -1.0 / 12}; break;
        case 6:
            op.coeffs = {-1.0 / 60, 3.0 / 20, -3.0 / 4, 0.0, 3.0 / 4, -3.0 / 20, 1.0 / 60};
            break;
        case 8:
            op.coeffs = {1.0 / 280, -4.0 / 105, 1.0 / 5, -4.0 / 5, 0.0,
                         4.0 / 5, -1.0 / 5, 4.0 / 105, -1.0 / 280};
            break;
        default:
            throw std::invalid_argument("central_gradient_op: order must be 2, 4, 6 or 8");
    }
    return op;
}

GradientOperator gradient_for_tableau_order(int p) {
    const int q = std::max(2, 2 * p);
    return central_gradient_op(q > 6 ? 8 : (q % 2 ? q + 1 : q));
}

double apply_gradient(const GradientOperator& op, const double* center,
                      std::ptrdiff_t stride, double h) {
    const int R = op.radius();
    double acc = 0.0;
    for (int k = -R; k <= R; ++k) acc += op.coeffs[k + R] * center[k * stride];
    return acc / h;
}

void central_gradient(const double* vals, std::ptrdiff_t stride, int i0, int i1,
                      const GradientOperator& op, double h, double* out,
                      std::ptrdiff_t out_stride) {
    for (int i = i0; i < i1; ++i)
        out[i * out_stride] = apply_gradient(op, vals + i * stride, stride, h);
}

std::vector<double> central_gradient(const std::vector<double>& vals, int n, int ghost,
                                     const GradientOperator& op, double h) {
    if (ghost < op.radius())
        throw std::invalid_argument("central_gradient: insufficient ghost layers");
    if (static_cast<int>(vals.size()) != n + 2 * ghost)
        throw std::invalid_argument("central_gradient: line size mismatch");
    std::vector<double> out(n, 0.0);
    central_gradient(vals.data() + ghost, 1, 0, n, op, h, out.data(), 1);
    return out;
}

}  // namespace reldiff
