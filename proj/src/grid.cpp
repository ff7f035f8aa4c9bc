#include "reldiff/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace reldiff {

std::size_t Grid::total_size() const {
    std::size_t n = static_cast<std::size_t>(ext(0));
    if (dim == 2) n *= static_cast<std::size_t>(ext(1));
    return n;
}

static void check_axis(double a, double b, int m, int axis) {
    if (!(b > a))
        throw std::invalid_argument("build_grid: inverted or empty bounds on axis " +
                                    std::to_string(axis));
    if (m < 1)
        throw std::invalid_argument("build_grid: non-positive cell count on axis " +
                                    std::to_string(axis));
}

Grid build_grid(double a, double b, int m, int ghost) {
    check_axis(a, b, m, 0);
    if (ghost < 1) throw std::invalid_argument("build_grid: ghost width must be >= 1");
    Grid g;
    g.dim = 1;
    g.lo = {a, 0.0};
    g.hi = {b, 1.0};
    g.cells = {m, 1};
    g.h = {(b - a) / m, 1.0};
    g.ghost = ghost;
    return g;
}

Grid build_grid(std::array<double, 2> lo, std::array<double, 2> hi,
                std::array<int, 2> m, int ghost) {
    check_axis(lo[0], hi[0], m[0], 0);
    check_axis(lo[1], hi[1], m[1], 1);
    if (ghost < 1) throw std::invalid_argument("build_grid: ghost width must be >= 1");
    Grid g;
    g.dim = 2;
    g.lo = lo;
    g.hi = hi;
    g.cells = m;
    g.h = {(hi[0] - lo[0]) / m[0], (hi[1] - lo[1]) / m[1]};
    g.ghost = ghost;
    return g;
}

BoundaryCondition BoundaryCondition::all_neumann() { return {}; }

BoundaryCondition BoundaryCondition::all_periodic() {
    BoundaryCondition bc;
    for (auto& ax : bc.face)
        for (auto& f : ax) f.kind = FaceBC::Kind::Periodic;
    return bc;
}

BoundaryCondition BoundaryCondition::all_dirichlet(double value) {
    BoundaryCondition bc;
    for (auto& ax : bc.face)
        for (auto& f : ax) f = {FaceBC::Kind::Dirichlet, value};
    return bc;
}

Field::Field(const Grid& g, double init) : grid_(g), data_(g.total_size(), init) {}

double* Field::origin() {
    const int g = grid_.ghost;
    return data_.data() + (grid_.dim == 2 ? static_cast<std::size_t>(g) * grid_.ext(0) + g
                                          : static_cast<std::size_t>(g));
}

const double* Field::origin() const { return const_cast<Field*>(this)->origin(); }

std::ptrdiff_t Field::stride(int axis) const {
    return axis == 0 ? 1 : static_cast<std::ptrdiff_t>(grid_.ext(0));
}

double Field::min_interior() const {
    double m = (*this)(0, 0);
    const int ny = grid_.dim == 2 ? grid_.cells[1] : 1;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < grid_.cells[0]; ++i) m = std::fmin(m, (*this)(i, j));
    return m;
}

double Field::max_interior() const {
    double m = (*this)(0, 0);
    const int ny = grid_.dim == 2 ? grid_.cells[1] : 1;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < grid_.cells[0]; ++i) m = std::fmax(m, (*this)(i, j));
    return m;
}

double Field::mass() const {
    double s = 0.0;
    const int ny = grid_.dim == 2 ? grid_.cells[1] : 1;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < grid_.cells[0]; ++i) s += (*this)(i, j);
    return s * grid_.cell_measure();
}

bool Field::interior_finite() const {
    const int ny = grid_.dim == 2 ? grid_.cells[1] : 1;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < grid_.cells[0]; ++i)
            if (!std::isfinite((*this)(i, j))) return false;
    return true;
}

// Fill one axis of ghosts. jlo/jhi bound the transverse index range so the
// second axis can sweep the already-filled x-ghost columns (corners).
static void fill_axis(Field& f, const BoundaryCondition& bc, int axis, int jlo, int jhi) {
    const Grid& g = f.grid();
    const int m = g.cells[axis];
    const int G = g.ghost;
    auto get = [&](int i, int j) { return axis == 0 ? f(i, j) : f(j, i); };
    auto set = [&](int i, int j, double v) { (axis == 0 ? f(i, j) : f(j, i)) = v; };
    for (int side = 0; side < 2; ++side) {
        const FaceBC& face = bc.face[axis][side];
        for (int j = jlo; j < jhi; ++j) {
            for (int k = 1; k <= G; ++k) {
                const int gi = side == 0 ? -k : m - 1 + k;
                double v;
                switch (face.kind) {
                    case FaceBC::Kind::Neumann:
                        v = get(side == 0 ? k - 1 : m - k, j);
                        break;
                    case FaceBC::Kind::Periodic:
                        v = get(side == 0 ? m - k : k - 1, j);
                        break;
                    case FaceBC::Kind::Dirichlet:
                        v = 2.0 * face.value - get(side == 0 ? k - 1 : m - k, j);
                        break;
                    default:
                        v = 0.0;
                }
                set(gi, j, v);
            }
        }
    }
}

void fill_ghosts(Field& f, const BoundaryCondition& bc) {
    const Grid& g = f.grid();
    if (g.dim == 1) {
        fill_axis(f, bc, 0, 0, 1);
        return;
    }
    fill_axis(f, bc, 0, 0, g.cells[1]);
    fill_axis(f, bc, 1, -g.ghost, g.cells[0] + g.ghost);
}

}  // namespace reldiff
