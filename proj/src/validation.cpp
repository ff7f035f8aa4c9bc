#include "reldiff/validation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace reldiff {

namespace {

// log(cosh(t)) without overflow for large |t|.
double log_cosh(double t) {
    const double a = std::fabs(t);
    return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

// sech(t)^2 without overflow: 4 e^{-2|t|} / (1 + e^{-2|t|})^2.
double sech2(double t) {
    const double e = std::exp(-2.0 * std::fabs(t));
    const double d = 1.0 + e;
    return 4.0 * e / (d * d);
}

}  // namespace

double fk_wave_profile(double z, double c) {
    // 1/(1+e^s) + (1/c^2) e^s/(1+e^s)^2 log(4 e^s/(1+e^s)^2) with s = z/c.
    // The log argument equals sech^2(s/2) and the prefactor sech^2(s/2)/4,
    // which stays finite for large |s|.
    const double s = z / c;
    const double sigma = 1.0 / (1.0 + std::exp(s));  // overflow at s -> +inf gives 0
    const double sh2 = sech2(0.5 * s);
    const double correction = -(sh2 / 4.0) * (2.0 * log_cosh(0.5 * s)) / (c * c);
    return sigma + correction;
}

double fk_slope(double c) { return -1.0 / (4.0 * c); }

ErrorReport error_norms(const Field& numeric, const Field& reference) {
    if (!(numeric.grid() == reference.grid()))
        throw std::invalid_argument("error_norms: grid mismatch");
    const Grid& g = numeric.grid();
    const int ny = g.dim == 2 ? g.cells[1] : 1;
    ErrorReport rep;
    rep.h = g.min_h();
    double s1 = 0.0, s2 = 0.0, smax = 0.0;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < g.cells[0]; ++i) {
            const double e = std::fabs(numeric(i, j) - reference(i, j));
            s1 += e;
            s2 += e * e;
            if (e > smax) smax = e;
        }
    const double meas = g.cell_measure();
    rep.l1 = meas * s1;
    rep.l2 = std::sqrt(meas * s2);
    rep.linf = smax;
    return rep;
}

ErrorReport error_norms(const Field& numeric,
                        const std::function<double(double, double)>& reference) {
    const Grid& g = numeric.grid();
    Field ref(g);
    const int ny = g.dim == 2 ? g.cells[1] : 1;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < g.cells[0]; ++i)
            ref(i, j) = reference(g.center(0, i), g.dim == 2 ? g.center(1, j) : 0.0);
    return error_norms(numeric, ref);
}

std::vector<double> convergence_rate(const std::vector<double>& errors,
                                     const std::vector<double>& spacings) {
    if (errors.size() != spacings.size())
        throw std::invalid_argument("convergence_rate: length mismatch");
    if (errors.size() < 2)
        throw std::invalid_argument("convergence_rate: need at least 2 pairs");
    std::vector<double> rates;
    for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
        if (!(errors[i] > 0.0) || !(errors[i + 1] > 0.0) ||
            !(spacings[i] > 0.0) || !(spacings[i + 1] > 0.0) ||
            spacings[i] == spacings[i + 1]) {
            rates.push_back(std::numeric_limits<double>::quiet_NaN());
            continue;
        }
        rates.push_back(std::log(errors[i] / errors[i + 1]) /
                        std::log(spacings[i] / spacings[i + 1]));
    }
    return rates;
}

MaxGradient max_gradient(const Field& f, double h) {
    const Grid& g = f.grid();
    if (g.cells[0] < 3 || (g.dim == 2 && g.cells[1] < 3))
        throw std::invalid_argument("max_gradient: need at least 3 interior cells");
    if (!(h > 0)) throw std::invalid_argument("max_gradient: h must be positive");
    MaxGradient best;
    const int ny = g.dim == 2 ? g.cells[1] : 1;
    for (int j = 0; j < ny; ++j)
        for (int i = 1; i < g.cells[0] - 1; ++i) {
            double slope = (f(i + 1, j) - f(i - 1, j)) / (2.0 * h);
            if (g.dim == 2 && j >= 1 && j < ny - 1) {
                const double sy = (f(i, j + 1) - f(i, j - 1)) / (2.0 * h);
                slope = std::hypot(slope, sy);
            }
            if (std::fabs(slope) > best.value) {
                best.value = std::fabs(slope);
                best.index = j * g.cells[0] + i;
            }
        }
    return best;
}

std::vector<double> front_positions(const Field& f, double level) {
    const Grid& g = f.grid();
    if (g.dim != 1)
        throw std::invalid_argument("front_positions: 1D fields only");
    std::vector<double> xs;
    for (int i = 0; i + 1 < g.cells[0]; ++i) {
        const double a = f(i) - level, b = f(i + 1) - level;
        if (a == 0.0) {
            xs.push_back(g.center(0, i));
            continue;
        }
        if ((a > 0.0) != (b > 0.0) && b != 0.0) {
            const double frac = a / (a - b);
            xs.push_back(g.center(0, i) + frac * g.h[0]);
        }
    }
    if (g.cells[0] > 0 && f(g.cells[0] - 1) == level)
        xs.push_back(g.center(0, g.cells[0] - 1));
    return xs;
}

std::optional<double> extinction_time(const std::vector<double>& times,
                                      const std::vector<double>& max_u,
                                      double threshold) {
    if (times.size() != max_u.size())
        throw std::invalid_argument("extinction_time: length mismatch");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] >= times[i - 1]))
            throw std::invalid_argument("extinction_time: times must be monotone");
    for (std::size_t i = 0; i < times.size(); ++i)
        if (max_u[i] < threshold) return times[i];
    return std::nullopt;
}

double symmetry_deviation(const Field& f) {
    const Grid& g = f.grid();
    if (g.dim != 2 || g.cells[0] != g.cells[1] || g.h[0] != g.h[1] ||
        g.lo[0] != -g.hi[0] || g.lo[1] != -g.hi[1] || g.lo[0] != g.lo[1])
        throw std::invalid_argument(
            "symmetry_deviation: requires a square grid centered at the origin");
    const int n = g.cells[0];
    const double h = g.h[0];
    const int nbins = static_cast<int>(std::ceil(std::hypot(g.hi[0], g.hi[1]) / h)) + 2;
    std::vector<double> sum(nbins, 0.0);
    std::vector<int> count(nbins, 0);
    auto bin_of = [&](int i, int j) {
        const double r = std::hypot(g.center(0, i), g.center(1, j));
        return static_cast<int>(std::lround(r / h));
    };
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const int b = bin_of(i, j);
            sum[b] += f(i, j);
            count[b] += 1;
        }
    double dev = 0.0;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const int b = bin_of(i, j);
            const double avg = sum[b] / count[b];
            dev = std::fmax(dev, std::fabs(f(i, j) - avg));
        }
    return dev;
}

double linear_fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("linear_fit_slope: need >= 2 matched samples");
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("linear_fit_slope: degenerate x");
    return (n * sxy - sx * sy) / denom;
}

}  // namespace reldiff
