#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace reldiff {

/// Uniform Cartesian grid in 1D or 2D. Cell centers are
/// x_j = lo + (j + 1/2) h for j = 0..cells-1 on each axis.
/// Immutable after construction; safe to share between threads.
struct Grid {
    int dim = 1;
    std::array<double, 2> lo{0.0, 0.0};
    std::array<double, 2> hi{1.0, 1.0};
    std::array<int, 2> cells{1, 1};
    std::array<double, 2> h{1.0, 1.0};
    int ghost = 1;

    int ext(int axis) const { return cells[axis] + 2 * ghost; }
    double center(int axis, int j) const { return lo[axis] + (j + 0.5) * h[axis]; }
    std::size_t total_size() const;
    double cell_measure() const { return dim == 1 ? h[0] : h[0] * h[1]; }
    double min_h() const { return dim == 1 ? h[0] : (h[0] < h[1] ? h[0] : h[1]); }

    bool operator==(const Grid&) const = default;
};

Grid build_grid(double a, double b, int m, int ghost);
Grid build_grid(std::array<double, 2> lo, std::array<double, 2> hi,
                std::array<int, 2> m, int ghost);

/// Per-face boundary condition. Dirichlet is realized as odd reflection
/// about the boundary value, Neumann as even reflection about the face.
struct FaceBC {
    enum class Kind { Neumann, Periodic, Dirichlet };
    Kind kind = Kind::Neumann;
    double value = 0.0;
};

struct BoundaryCondition {
    // face[axis][side], side 0 = low, 1 = high
    std::array<std::array<FaceBC, 2>, 2> face{};

    static BoundaryCondition all_neumann();
    static BoundaryCondition all_periodic();
    static BoundaryCondition all_dirichlet(double value);
};

/// Cell-centered scalar field with ghost layers. Indexing accepts
/// i (and j in 2D) in [-ghost, cells+ghost). Storage is row-major over
/// a single flat array, x fastest.
class Field {
public:
    explicit Field(const Grid& g, double init = 0.0);

    const Grid& grid() const { return grid_; }

    double& operator()(int i) { return data_[static_cast<std::size_t>(i + grid_.ghost)]; }
    double operator()(int i) const { return data_[static_cast<std::size_t>(i + grid_.ghost)]; }
    double& operator()(int i, int j) { return data_[flat(i, j)]; }
    double operator()(int i, int j) const { return data_[flat(i, j)]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::size_t size() const { return data_.size(); }

    /// Pointer to cell (0[,0]); negative offsets reach ghost cells.
    double* origin();
    const double* origin() const;
    std::ptrdiff_t stride(int axis) const;

    double min_interior() const;
    double max_interior() const;
    /// Interior sum times the cell measure.
    double mass() const;
    bool interior_finite() const;

private:
    std::size_t flat(int i, int j) const {
        const int g = grid_.ghost;
        const std::size_t row =
            grid_.dim == 2
                ? static_cast<std::size_t>(j + g) * static_cast<std::size_t>(grid_.ext(0))
                : 0;
        return row + static_cast<std::size_t>(i + g);
    }
    Grid grid_;
    std::vector<double> data_;
};

/// Populate all ghost layers from the boundary condition; interior
/// values are untouched. Idempotent.
void fill_ghosts(Field& f, const BoundaryCondition& bc);

}  // namespace reldiff
