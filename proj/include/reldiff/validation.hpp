#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "reldiff/grid.hpp"

namespace reldiff {

/// Two-term truncation of the Fisher-Kolmogoroff traveling-wave expansion.
/// Monotone decreasing from 1 to 0; U(0) = 1/2 exactly.
double fk_wave_profile(double z, double c);

/// Slope of the profile at its inflection point: -1/(4c), valid for c >= 2.
double fk_slope(double c);

/// Reference wave with speed c; flags speeds below the validity bound c >= 2.
struct WaveReference {
    double c = 2.0;
    bool below_validity_bound = false;

    explicit WaveReference(double speed) : c(speed), below_validity_bound(speed < 2.0) {}
    double operator()(double z) const { return fk_wave_profile(z, c); }
};

struct ErrorReport {
    double l1 = 0.0;
    double l2 = 0.0;
    double linf = 0.0;
    double h = 0.0;
};

/// L1 = h^d sum|e|, L2 = (h^d sum e^2)^(1/2), Linf = max|e| over the interior.
ErrorReport error_norms(const Field& numeric, const Field& reference);
ErrorReport error_norms(const Field& numeric,
                        const std::function<double(double, double)>& reference);

/// Pairwise observed orders log(e_i/e_{i+1}) / log(h_i/h_{i+1}); pairs with a
/// non-positive error are skipped (their slot holds NaN).
std::vector<double> convergence_rate(const std::vector<double>& errors,
                                     const std::vector<double>& spacings);

/// Maximum absolute centered-difference slope over the interior and its
/// (flattened) cell index.
struct MaxGradient {
    double value = 0.0;
    int index = 0;
};
MaxGradient max_gradient(const Field& f, double h);

/// Linearly interpolated coordinates where the 1D field crosses `level`,
/// ordered left to right. Empty when there is no crossing.
std::vector<double> front_positions(const Field& f, double level);

/// First sample time at which the max-u series drops below the threshold.
std::optional<double> extinction_time(const std::vector<double>& times,
                                      const std::vector<double>& max_u,
                                      double threshold);

/// Linf difference between a 2D field and its angular average at matched
/// radii (nearest-cell binning). Requires a square grid centered at 0.
double symmetry_deviation(const Field& f);

/// Least-squares slope of y against x.
double linear_fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace reldiff
