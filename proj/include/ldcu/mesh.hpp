#pragma once

// Uniform cell grids with two ghost layers per side, cell-average storage,
// and boundary-condition application.

#include <cassert>
#include <cstddef>
#include <vector>

#include "ldcu/euler.hpp"

namespace ldcu {

inline constexpr int n_ghost = 2;

struct Grid1D {
    int n = 0;          // interior cell count
    double x_lo = 0.0;
    double x_hi = 1.0;
    double dx = 0.0;

    Grid1D() = default;
    Grid1D(int n_, double x_lo_, double x_hi_)
        : n(n_), x_lo(x_lo_), x_hi(x_hi_), dx((x_hi_ - x_lo_) / n_) {
        assert(n > 0 && dx > 0.0);
    }

    int padded() const { return n + 2 * n_ghost; }
    // center of padded cell p; interior cells are p in [n_ghost, n_ghost + n)
    double center(int p) const { return x_lo + (p - n_ghost + 0.5) * dx; }
};

struct Grid2D {
    int nx = 0, ny = 0;
    double x_lo = 0.0, x_hi = 1.0;
    double y_lo = 0.0, y_hi = 1.0;
    double dx = 0.0, dy = 0.0;

    Grid2D() = default;
    Grid2D(int nx_, int ny_, double x_lo_, double x_hi_, double y_lo_, double y_hi_)
        : nx(nx_), ny(ny_), x_lo(x_lo_), x_hi(x_hi_), y_lo(y_lo_), y_hi(y_hi_),
          dx((x_hi_ - x_lo_) / nx_), dy((y_hi_ - y_lo_) / ny_) {
        assert(nx > 0 && ny > 0 && dx > 0.0 && dy > 0.0);
    }

    int padded_x() const { return nx + 2 * n_ghost; }
    int padded_y() const { return ny + 2 * n_ghost; }
    double center_x(int p) const { return x_lo + (p - n_ghost + 0.5) * dx; }
    double center_y(int p) const { return y_lo + (p - n_ghost + 0.5) * dy; }
};

/// Cell-average storage over interior + ghost cells. Padded index p runs over
/// [0, n + 4); interior is [2, n + 2).
struct Field1D {
    int n = 0;
    std::vector<Cons1> cells;

    Field1D() = default;
    explicit Field1D(int n_) : n(n_), cells(static_cast<size_t>(n_) + 2 * n_ghost) {}

    Cons1& at(int p) { return cells[static_cast<size_t>(p)]; }
    const Cons1& at(int p) const { return cells[static_cast<size_t>(p)]; }

    int begin_interior() const { return n_ghost; }
    int end_interior() const { return n + n_ghost; }
};

/// Row-major with y the slower index: cell (j, k) lives at k*(nx+4) + j.
/// Interior is j in [2, nx + 2), k in [2, ny + 2).
struct Field2D {
    int nx = 0, ny = 0;
    std::vector<Cons2> cells;

    Field2D() = default;
    Field2D(int nx_, int ny_)
        : nx(nx_), ny(ny_),
          cells(static_cast<size_t>(nx_ + 2 * n_ghost) * static_cast<size_t>(ny_ + 2 * n_ghost)) {}

    int stride() const { return nx + 2 * n_ghost; }
    Cons2& at(int j, int k) { return cells[static_cast<size_t>(k) * stride() + j]; }
    const Cons2& at(int j, int k) const { return cells[static_cast<size_t>(k) * stride() + j]; }

    int begin_x() const { return n_ghost; }
    int end_x() const { return nx + n_ghost; }
    int begin_y() const { return n_ghost; }
    int end_y() const { return ny + n_ghost; }
};

// Elementwise arithmetic for time stepping; shapes must match.
Field1D operator+(const Field1D& a, const Field1D& b);
Field1D operator-(const Field1D& a, const Field1D& b);
Field1D operator*(const Field1D& a, double s);
Field2D operator+(const Field2D& a, const Field2D& b);
Field2D operator-(const Field2D& a, const Field2D& b);
Field2D operator*(const Field2D& a, double s);

enum class BoundaryKind { Free, SolidWall, Periodic };

struct BoundarySpec1D {
    BoundaryKind left = BoundaryKind::Free;
    BoundaryKind right = BoundaryKind::Free;
};

struct BoundarySpec2D {
    BoundaryKind x_lo = BoundaryKind::Free;
    BoundaryKind x_hi = BoundaryKind::Free;
    BoundaryKind y_lo = BoundaryKind::Free;
    BoundaryKind y_hi = BoundaryKind::Free;
};

inline BoundarySpec1D free_bc_1d() { return {}; }
inline BoundarySpec2D free_bc_2d() { return {}; }
inline BoundarySpec1D periodic_bc_1d() { return {BoundaryKind::Periodic, BoundaryKind::Periodic}; }

/// Fill ghost cells. Free copies the nearest interior cell, SolidWall mirrors
/// with the wall-normal momentum negated, Periodic wraps. Interior cells are
/// never touched. Periodic sides must come in opposing pairs.
void apply_bc(Field1D& f, const BoundarySpec1D& bc);
void apply_bc(Field2D& f, const BoundarySpec2D& bc);

/// Average fine cells onto a coarser grid (factor cells per coarse cell in
/// each direction). The fine interior count must be divisible by factor.
Field1D restrict_field(const Field1D& fine, int factor);
Field2D restrict_field(const Field2D& fine, int factor);

} // namespace ldcu
