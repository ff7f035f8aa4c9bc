#include "reldiff/imex.hpp"

#include <cmath>
#include <stdexcept>

namespace reldiff {

namespace {

Tableau make_tableau(std::vector<std::vector<double>> a, std::vector<double> b) {
    Tableau t;
    t.a = std::move(a);
    t.b = std::move(b);
    t.c.resize(t.a.size());
    for (std::size_t i = 0; i < t.a.size(); ++i) {
        double s = 0.0;
        for (double v : t.a[i]) s += v;
        t.c[i] = s;
    }
    return t;
}

TableauPair make_imex111() {
    TableauPair t;
    t.id = "imex111";
    t.stages = 1;
    t.order = 1;
    t.expl = make_tableau({{0.0}}, {1.0});
    t.implicit = make_tableau({{1.0}}, {1.0});
    return t;
}

TableauPair make_ars222() {
    const double g = 1.0 - 1.0 / std::sqrt(2.0);
    const double d = 1.0 - 1.0 / (2.0 * g);
    TableauPair t;
    t.id = "ars222";
    t.stages = 3;
    t.order = 2;
    t.expl = make_tableau({{0, 0, 0}, {g, 0, 0}, {d, 1.0 - d, 0}}, {d, 1.0 - d, 0.0});
    t.implicit = make_tableau({{0, 0, 0}, {0, g, 0}, {0, 1.0 - g, g}}, {0.0, 1.0 - g, g});
    return t;
}

TableauPair make_ars443() {
    TableauPair t;
    t.id = "ars443";
    t.stages = 5;
    t.order = 3;
    t.expl = make_tableau({{0, 0, 0, 0, 0},
                           {1.0 / 2, 0, 0, 0, 0},
                           {11.0 / 18, 1.0 / 18, 0, 0, 0},
                           {5.0 / 6, -5.0 / 6, 1.0 / 2, 0, 0},
                           {1.0 / 4, 7.0 / 4, 3.0 / 4, -7.0 / 4, 0}},
                          {1.0 / 4, 7.0 / 4, 3.0 / 4, -7.0 / 4, 0.0});
    t.implicit = make_tableau({{0, 0, 0, 0, 0},
                               {0, 1.0 / 2, 0, 0, 0},
                               {0, 1.0 / 6, 1.0 / 2, 0, 0},
                               {0, -1.0 / 2, 1.0 / 2, 1.0 / 2, 0},
                               {0, 3.0 / 2, -3.0 / 2, 1.0 / 2, 1.0 / 2}},
                              {0.0, 3.0 / 2, -3.0 / 2, 1.0 / 2, 1.0 / 2});
    return t;
}

}  // namespace

const std::vector<std::string>& tableau_ids() {
    static const std::vector<std::string> ids = {"imex111", "ars222", "ars443"};
    return ids;
}

TableauPair tableau(std::string_view id) {
    if (id == "imex111") return make_imex111();
    if (id == "ars222") return make_ars222();
    if (id == "ars443") return make_ars443();
    throw std::invalid_argument("unknown tableau id: " + std::string(id));
}

namespace {

double dot(const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

std::vector<double> matvec(const std::vector<std::vector<double>>& a,
                           const std::vector<double>& c) {
    std::vector<double> out(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < a[i].size(); ++k) out[i] += a[i][k] * c[k];
    return out;
}

std::vector<double> hadamard(const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] * y[i];
    return out;
}

}  // namespace

OrderCheckResult check_order_conditions(const TableauPair& t, int p, double tol) {
    if (p < 1 || p > 3)
        throw std::invalid_argument("check_order_conditions: order must be 1..3");
    OrderCheckResult res;
    const auto& bt = t.expl.b;
    const auto& b = t.implicit.b;
    const auto& ct = t.expl.c;
    const auto& c = t.implicit.c;
    auto add = [&](const std::string& name, double value, double target) {
        res.conditions.push_back({name, value - target});
    };
    double one = 0.0, onei = 0.0;
    for (double v : bt) one += v;
    for (double v : b) onei += v;
    add("sum(b~) = 1", one, 1.0);
    add("sum(b) = 1", onei, 1.0);
    if (p >= 2) {
        add("b~.c~ = 1/2", dot(bt, ct), 0.5);
        add("b.c = 1/2", dot(b, c), 0.5);
        add("b~.c = 1/2", dot(bt, c), 0.5);
        add("b.c~ = 1/2", dot(b, ct), 0.5);
    }
    if (p >= 3) {
        add("b~.c~^2 = 1/3", dot(bt, hadamard(ct, ct)), 1.0 / 3);
        add("b.c^2 = 1/3", dot(b, hadamard(c, c)), 1.0 / 3);
        add("b~.A~c~ = 1/6", dot(bt, matvec(t.expl.a, ct)), 1.0 / 6);
        add("b.Ac = 1/6", dot(b, matvec(t.implicit.a, c)), 1.0 / 6);
        add("b~.Ac = 1/6", dot(bt, matvec(t.implicit.a, c)), 1.0 / 6);
        add("b.A~c~ = 1/6", dot(b, matvec(t.expl.a, ct)), 1.0 / 6);
    }
    for (const auto& cond : res.conditions) {
        res.max_residual = std::fmax(res.max_residual, std::fabs(cond.residual));
        if (std::fabs(cond.residual) >= tol) {
            res.pass = false;
            res.violated.push_back(cond);
        }
    }
    return res;
}

}  // namespace reldiff
