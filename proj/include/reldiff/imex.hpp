#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace reldiff {

struct Tableau {
    std::vector<std::vector<double>> a;  // stage coefficients, row i has i+1 entries used
    std::vector<double> b;
    std::vector<double> c;  // row sums
};

/// Paired diagonally-implicit / explicit Butcher tableaux sharing abscissae.
/// Immutable and shareable.
struct TableauPair {
    std::string id;
    int stages = 1;
    int order = 1;
    Tableau implicit;  // lower triangular, diagonal entries may be positive
    Tableau expl;      // strictly lower triangular
};

/// Known ids: "imex111", "ars222", "ars443" (orders 1, 2, 3).
TableauPair tableau(std::string_view id);
const std::vector<std::string>& tableau_ids();

struct OrderCondition {
    std::string name;
    double residual;
};

struct OrderCheckResult {
    bool pass = true;
    double max_residual = 0.0;
    std::vector<OrderCondition> conditions;  // all evaluated conditions
    std::vector<OrderCondition> violated;    // |residual| >= tolerance
};

/// Evaluates the standard Runge-Kutta order conditions of both parts and the
/// IMEX coupling conditions up to order p (p in 1..3).
OrderCheckResult check_order_conditions(const TableauPair& t, int p,
                                        double tol = 1e-12);

}  // namespace reldiff
