#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "reldiff/reconstruction.hpp"

using namespace reldiff;

namespace {

// Cell averages of a function on [a, a+n*h) from its antiderivative.
std::vector<double> averages(const std::function<double(double)>& primitive,
                             double a, double h, int n, int ghost) {
    std::vector<double> v(n + 2 * ghost);
    for (int i = -ghost; i < n + ghost; ++i) {
        const double xl = a + i * h, xr = xl + h;
        v[i + ghost] = (primitive(xr) - primitive(xl)) / h;
    }
    return v;
}

// Exact cell averages of a polynomial with coefficients c (c[k] x^k).
std::vector<double> poly_averages(const std::vector<double>& c, double a, double h,
                                  int n, int ghost) {
    auto primitive = [&c](double x) {
        double s = 0.0, xp = x;
        for (std::size_t k = 0; k < c.size(); ++k) {
            s += c[k] * xp / (k + 1.0);
            xp *= x;
        }
        return s;
    };
    return averages(primitive, a, h, n, ghost);
}

double poly_eval(const std::vector<double>& c, double x) {
    double s = 0.0, xp = 1.0;
    for (double ck : c) {
        s += ck * xp;
        xp *= x;
    }
    return s;
}

}  // namespace

TEST_CASE("scheme metadata and parsing") {
    CHECK(ReconstructionScheme::pcm().order == 1);
    CHECK(ReconstructionScheme::weno5().order == 5);
    CHECK(ReconstructionScheme::eno(6).stencil_radius == 5);
    CHECK(ReconstructionScheme::parse("eno3").order == 3);
    CHECK(std::string(ReconstructionScheme::parse("weno5").name()) == "weno5");
    CHECK_THROWS_AS(ReconstructionScheme::parse("eno7"), std::invalid_argument);
    CHECK_THROWS_AS(ReconstructionScheme::eno(1), std::invalid_argument);
}

TEST_CASE("all schemes reproduce constants") {
    const int n = 8;
    for (const auto& sch :
         {ReconstructionScheme::pcm(), ReconstructionScheme::eno(2),
          ReconstructionScheme::eno(4), ReconstructionScheme::eno(6),
          ReconstructionScheme::weno5()}) {
        const int g = sch.ghost_required();
        std::vector<double> vals(n + 2 * g, 2.75);
        std::vector<double> minus, plus;
        reconstruct_faces(vals, n, g, sch, minus, plus);
        for (int f = 0; f <= n; ++f) {
            CHECK(minus[f] == doctest::Approx(2.75).epsilon(1e-15));
            CHECK(plus[f] == doctest::Approx(2.75).epsilon(1e-15));
        }
    }
}

TEST_CASE("ENO2 is exact on linear data") {
    const int n = 6, g = 2;
    const double h = 0.1;
    // averages of f(x)=x equal the center values
    std::vector<double> vals(n + 2 * g);
    for (int i = -g; i < n + g; ++i) vals[i + g] = (i + 0.5) * h;
    std::vector<double> minus, plus;
    reconstruct_faces(vals, n, g, ReconstructionScheme::eno(2), minus, plus);
    for (int f = 0; f <= n; ++f) {
        CHECK(minus[f] == doctest::Approx(f * h).epsilon(1e-13));
        CHECK(plus[f] == doctest::Approx(f * h).epsilon(1e-13));
    }
}

TEST_CASE("WENO5 face error shrinks fifth order under refinement") {
    auto err_at = [](double h) {
        const int n = 16, g = 3;
        auto vals = averages([](double x) { return -std::cos(x); }, 0.3, h, n, g);
        std::vector<double> minus, plus;
        reconstruct_faces(vals, n, g, ReconstructionScheme::weno5(), minus, plus);
        double e = 0.0;
        for (int f = 0; f <= n; ++f)
            e = std::fmax(e, std::fabs(minus[f] - std::sin(0.3 + f * h)));
        return e;
    };
    const double ratio = err_at(0.02) / err_at(0.01);
    CHECK(ratio > 24.0);
    CHECK(ratio < 40.0);
}

TEST_CASE("reconstruct_faces rejects insufficient ghosts") {
    std::vector<double> vals(8 + 2 * 1, 0.0);
    std::vector<double> minus, plus;
    CHECK_THROWS_AS(
        reconstruct_faces(vals, 8, 1, ReconstructionScheme::weno5(), minus, plus),
        std::invalid_argument);
}

TEST_CASE("polynomial exactness of linear reconstruction stencils") {
    // randomized coefficients; ENO(r) reproduces degree r-1 exactly, WENO5
    // reproduces degree 2 exactly (each candidate stencil is exact and the
    // nonlinear weights are convex)
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    const int n = 10;
    const double a = -0.4, h = 0.17;
    for (int trial = 0; trial < 20; ++trial) {
        for (int r = 2; r <= 6; ++r) {
            std::vector<double> c(r);
            for (double& ck : c) ck = dist(rng);
            const auto sch = ReconstructionScheme::eno(r);
            const int g = sch.ghost_required();
            auto vals = poly_averages(c, a, h, n, g);
            std::vector<double> minus, plus;
            reconstruct_faces(vals, n, g, sch, minus, plus);
            for (int f = 0; f <= n; ++f) {
                const double exact = poly_eval(c, a + f * h);
                CHECK(minus[f] == doctest::Approx(exact).epsilon(1e-10));
                CHECK(plus[f] == doctest::Approx(exact).epsilon(1e-10));
            }
        }
        {
            std::vector<double> c = {dist(rng), dist(rng), dist(rng)};
            const auto sch = ReconstructionScheme::weno5();
            const int g = sch.ghost_required();
            auto vals = poly_averages(c, a, h, n, g);
            std::vector<double> minus, plus;
            reconstruct_faces(vals, n, g, sch, minus, plus);
            for (int f = 0; f <= n; ++f) {
                const double exact = poly_eval(c, a + f * h);
                CHECK(minus[f] == doctest::Approx(exact).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("PCM reproduces cell values at faces") {
    std::vector<double> vals = {9.0, 1.0, 2.0, 3.0, 7.0};
    std::vector<double> minus, plus;
    reconstruct_faces(vals, 3, 1, ReconstructionScheme::pcm(), minus, plus);
    CHECK(minus[1] == 1.0);
    CHECK(plus[1] == 2.0);
    CHECK(minus[0] == 9.0);
    CHECK(plus[3] == 7.0);
}

TEST_CASE("ENO stencil selection") {
    SUBCASE("smooth linear data picks the centered stencil") {
        const double w[] = {0, 1, 2, 3, 4};
        CHECK(eno_stencil_select(w + 2, 1, 3) == 1);
    }
    SUBCASE("step data avoids the jump on the right") {
        const double w[] = {0, 0, 0, 1, 1};
        CHECK(eno_stencil_select(w + 2, 1, 3) == 2);
    }
    SUBCASE("jump at the right edge forces a left-shifted stencil") {
        const double w[] = {0, 1, 2, 3, 100};
        CHECK(eno_stencil_select(w + 2, 1, 3) == 1);
    }
}

TEST_CASE("WENO5 weights approach the linear optimal weights under refinement") {
    auto dev_at = [](double h) {
        auto vals = averages([](double x) { return -std::cos(x); }, 0.5, h, 1, 3);
        double w[3];
        const double scale = 1.0;
        weno5_weights(vals.data() + 3, 1, 1e-6 * scale * scale, w);
        return std::fabs(w[0] - 0.1) + std::fabs(w[1] - 0.6) + std::fabs(w[2] - 0.3);
    };
    CHECK(dev_at(0.05) < dev_at(0.2));
    CHECK(dev_at(0.0125) < dev_at(0.05));
}

TEST_CASE("ENO adds no new extrema on monotone step data") {
    std::vector<double> vals = {0, 0, 0, 0, 0, 0, 0.2, 0.9, 1, 1, 1, 1, 1, 1, 1, 1};
    const int g = 5, n = static_cast<int>(vals.size()) - 2 * g;
    for (int r = 2; r <= 4; ++r) {
        std::vector<double> minus, plus;
        reconstruct_faces(vals, n, g, ReconstructionScheme::eno(r), minus, plus);
        for (int f = 0; f <= n; ++f) {
            CHECK(minus[f] >= -1e-12);
            CHECK(minus[f] <= 1.0 + 1e-12);
            CHECK(plus[f] >= -1e-12);
            CHECK(plus[f] <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("central gradient of a constant vanishes") {
    std::vector<double> vals(12, 4.2);
    for (int q : {2, 4, 6, 8}) {
        auto out = central_gradient(vals, 12 - q, q / 2, central_gradient_op(q), 0.1);
        for (double v : out) CHECK(v == doctest::Approx(0.0).epsilon(1e-14));
    }
}

TEST_CASE("central gradient exact on affine data") {
    const int n = 6, g = 1;
    std::vector<double> vals(n + 2 * g);
    for (int i = -g; i < n + g; ++i) vals[i + g] = 3.0 * (0.2 * (i + 0.5)) + 1.0;
    auto out = central_gradient(vals, n, g, central_gradient_op(2), 0.2);
    for (double v : out) CHECK(v == doctest::Approx(3.0).epsilon(1e-13));
}

TEST_CASE("sixth-order gradient error ratio near 64") {
    auto err_at = [](double h) {
        const int n = 10, g = 3;
        std::vector<double> vals(n + 2 * g);
        for (int i = -g; i < n + g; ++i) vals[i + g] = std::sin(0.4 + (i + 0.5) * h);
        auto out = central_gradient(vals, n, g, central_gradient_op(6), h);
        double e = 0.0;
        for (int i = 0; i < n; ++i)
            e = std::fmax(e, std::fabs(out[i] - std::cos(0.4 + (i + 0.5) * h)));
        return e;
    };
    const double ratio = err_at(0.04) / err_at(0.02);
    CHECK(ratio > 50.0);
    CHECK(ratio < 80.0);
}

TEST_CASE("gradient operator selection by tableau order") {
    CHECK(gradient_for_tableau_order(1).order == 2);
    CHECK(gradient_for_tableau_order(2).order == 4);
    CHECK(gradient_for_tableau_order(3).order == 6);
}

TEST_CASE("gradient is linear and shift-invariant") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const int n = 8, g = 2;
    std::vector<double> a(n + 2 * g), b(n + 2 * g), shifted(n + 2 * g);
    for (int i = 0; i < n + 2 * g; ++i) {
        a[i] = dist(rng);
        b[i] = dist(rng);
        shifted[i] = a[i] + 7.5;
    }
    const auto op = central_gradient_op(4);
    auto ga = central_gradient(a, n, g, op, 0.3);
    auto gshift = central_gradient(shifted, n, g, op, 0.3);
    std::vector<double> combo(n + 2 * g);
    for (int i = 0; i < n + 2 * g; ++i) combo[i] = 2.0 * a[i] - 0.5 * b[i];
    auto gb = central_gradient(b, n, g, op, 0.3);
    auto gcombo = central_gradient(combo, n, g, op, 0.3);
    for (int i = 0; i < n; ++i) {
        CHECK(gshift[i] == doctest::Approx(ga[i]).epsilon(1e-12));
        CHECK(gcombo[i] ==
              doctest::Approx(2.0 * ga[i] - 0.5 * gb[i]).epsilon(1e-12));
    }
}

TEST_CASE("central_gradient rejects insufficient ghosts") {
    std::vector<double> vals(10, 0.0);
    CHECK_THROWS_AS(central_gradient(vals, 8, 1, central_gradient_op(4), 0.1),
                    std::invalid_argument);
    CHECK_THROWS_AS(central_gradient_op(3), std::invalid_argument);
}
