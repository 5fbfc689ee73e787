#include "ldcu/mesh.hpp"

#include <stdexcept>

namespace ldcu {

Field1D operator+(const Field1D& a, const Field1D& b) {
    assert(a.n == b.n);
    Field1D r(a.n);
    for (size_t i = 0; i < a.cells.size(); ++i) r.cells[i] = a.cells[i] + b.cells[i];
    return r;
}

Field1D operator-(const Field1D& a, const Field1D& b) {
    assert(a.n == b.n);
    Field1D r(a.n);
    for (size_t i = 0; i < a.cells.size(); ++i) r.cells[i] = a.cells[i] - b.cells[i];
    return r;
}

Field1D operator*(const Field1D& a, double s) {
    Field1D r(a.n);
    for (size_t i = 0; i < a.cells.size(); ++i) r.cells[i] = a.cells[i] * s;
    return r;
}

Field2D operator+(const Field2D& a, const Field2D& b) {
    assert(a.nx == b.nx && a.ny == b.ny);
    Field2D r(a.nx, a.ny);
    for (size_t i = 0; i < a.cells.size(); ++i) r.cells[i] = a.cells[i] + b.cells[i];
    return r;
}

Field2D operator-(const Field2D& a, const Field2D& b) {
    assert(a.nx == b.nx && a.ny == b.ny);
    Field2D r(a.nx, a.ny);
    for (size_t i = 0; i < a.cells.size(); ++i) r.cells[i] = a.cells[i] - b.cells[i];
    return r;
}

Field2D operator*(const Field2D& a, double s) {
    Field2D r(a.nx, a.ny);
    for (size_t i = 0; i < a.cells.size(); ++i) r.cells[i] = a.cells[i] * s;
    return r;
}

namespace {

void check_periodic_pair(BoundaryKind a, BoundaryKind b, const char* axis) {
    if ((a == BoundaryKind::Periodic) != (b == BoundaryKind::Periodic))
        throw std::invalid_argument(std::string("periodic boundary on ") + axis +
                                    " requires both opposing sides periodic");
}

Cons1 mirror_wall(const Cons1& s) { return {s.rho, -s.mom, s.ener}; }
Cons2 mirror_wall_x(const Cons2& s) { return {s.rho, -s.momx, s.momy, s.ener}; }
Cons2 mirror_wall_y(const Cons2& s) { return {s.rho, s.momx, -s.momy, s.ener}; }

} // namespace

void apply_bc(Field1D& f, const BoundarySpec1D& bc) {
    check_periodic_pair(bc.left, bc.right, "x");
    const int n = f.n;
    for (int g = 0; g < n_ghost; ++g) {
        const int lo_ghost = n_ghost - 1 - g;   // g-th layer out from the left wall
        const int hi_ghost = n + n_ghost + g;   // g-th layer out from the right wall
        switch (bc.left) {
            case BoundaryKind::Free: f.at(lo_ghost) = f.at(n_ghost); break;
            case BoundaryKind::SolidWall: f.at(lo_ghost) = mirror_wall(f.at(n_ghost + g)); break;
            case BoundaryKind::Periodic: f.at(lo_ghost) = f.at(lo_ghost + n); break;
        }
        switch (bc.right) {
            case BoundaryKind::Free: f.at(hi_ghost) = f.at(n + n_ghost - 1); break;
            case BoundaryKind::SolidWall: f.at(hi_ghost) = mirror_wall(f.at(n + n_ghost - 1 - g)); break;
            case BoundaryKind::Periodic: f.at(hi_ghost) = f.at(hi_ghost - n); break;
        }
    }
}

void apply_bc(Field2D& f, const BoundarySpec2D& bc) {
    check_periodic_pair(bc.x_lo, bc.x_hi, "x");
    check_periodic_pair(bc.y_lo, bc.y_hi, "y");
    const int nx = f.nx, ny = f.ny;

    // x-direction ghosts over interior rows
    for (int k = f.begin_y(); k < f.end_y(); ++k) {
        for (int g = 0; g < n_ghost; ++g) {
            const int lo_ghost = n_ghost - 1 - g;
            const int hi_ghost = nx + n_ghost + g;
            switch (bc.x_lo) {
                case BoundaryKind::Free: f.at(lo_ghost, k) = f.at(n_ghost, k); break;
                case BoundaryKind::SolidWall: f.at(lo_ghost, k) = mirror_wall_x(f.at(n_ghost + g, k)); break;
                case BoundaryKind::Periodic: f.at(lo_ghost, k) = f.at(lo_ghost + nx, k); break;
            }
            switch (bc.x_hi) {
                case BoundaryKind::Free: f.at(hi_ghost, k) = f.at(nx + n_ghost - 1, k); break;
                case BoundaryKind::SolidWall: f.at(hi_ghost, k) = mirror_wall_x(f.at(nx + n_ghost - 1 - g, k)); break;
                case BoundaryKind::Periodic: f.at(hi_ghost, k) = f.at(hi_ghost - nx, k); break;
            }
        }
    }

    // y-direction ghosts over full rows (corners get x-ghost-consistent values)
    for (int j = 0; j < f.stride(); ++j) {
        for (int g = 0; g < n_ghost; ++g) {
            const int lo_ghost = n_ghost - 1 - g;
            const int hi_ghost = ny + n_ghost + g;
            switch (bc.y_lo) {
                case BoundaryKind::Free: f.at(j, lo_ghost) = f.at(j, n_ghost); break;
                case BoundaryKind::SolidWall: f.at(j, lo_ghost) = mirror_wall_y(f.at(j, n_ghost + g)); break;
                case BoundaryKind::Periodic: f.at(j, lo_ghost) = f.at(j, lo_ghost + ny); break;
            }
            switch (bc.y_hi) {
                case BoundaryKind::Free: f.at(j, hi_ghost) = f.at(j, ny + n_ghost - 1); break;
                case BoundaryKind::SolidWall: f.at(j, hi_ghost) = mirror_wall_y(f.at(j, ny + n_ghost - 1 - g)); break;
                case BoundaryKind::Periodic: f.at(j, hi_ghost) = f.at(j, hi_ghost - ny); break;
            }
        }
    }
}

Field1D restrict_field(const Field1D& fine, int factor) {
    if (factor < 1 || fine.n % factor != 0)
        throw std::invalid_argument("restrict_field: interior count " + std::to_string(fine.n) +
                                    " not divisible by factor " + std::to_string(factor));
    Field1D coarse(fine.n / factor);
    const double inv = 1.0 / factor;
    for (int i = 0; i < coarse.n; ++i) {
        Cons1 acc{};
        for (int s = 0; s < factor; ++s) acc += fine.at(n_ghost + i * factor + s);
        coarse.at(n_ghost + i) = acc * inv;
    }
    return coarse;
}

Field2D restrict_field(const Field2D& fine, int factor) {
    if (factor < 1 || fine.nx % factor != 0 || fine.ny % factor != 0)
        throw std::invalid_argument("restrict_field: interior " + std::to_string(fine.nx) + "x" +
                                    std::to_string(fine.ny) + " not divisible by factor " +
                                    std::to_string(factor));
    Field2D coarse(fine.nx / factor, fine.ny / factor);
    const double inv = 1.0 / (static_cast<double>(factor) * factor);
    for (int k = 0; k < coarse.ny; ++k) {
        for (int j = 0; j < coarse.nx; ++j) {
            Cons2 acc{};
            for (int sk = 0; sk < factor; ++sk)
                for (int sj = 0; sj < factor; ++sj)
                    acc += fine.at(n_ghost + j * factor + sj, n_ghost + k * factor + sk);
            coarse.at(n_ghost + j, n_ghost + k) = acc * inv;
        }
    }
    return coarse;
}

} // namespace ldcu
