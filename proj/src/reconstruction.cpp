#include "ldcu/reconstruction.hpp"

#include <string>

namespace ldcu {

namespace {

[[noreturn]] void bad_interface(const char* axis, int i, int row, double rho, double p) {
    throw AdmissibilityError("reconstructed state inadmissible at " + std::string(axis) +
                             "-interface " + std::to_string(i) +
                             (row >= 0 ? " row " + std::to_string(row) : std::string{}) +
                             ": rho=" + std::to_string(rho) + " p=" + std::to_string(p));
}

void check_pair_1d(const Cons1& um, const Cons1& up, const GasModel& gas, int i) {
    if (!admissible(um, gas)) bad_interface("x", i, -1, um.rho, um.rho > 0.0 ? pressure(um, gas) : 0.0);
    if (!admissible(up, gas)) bad_interface("x", i, -1, up.rho, up.rho > 0.0 ? pressure(up, gas) : 0.0);
}

void check_pair_2d(const Cons2& um, const Cons2& up, const GasModel& gas, const char* axis,
                   int i, int row) {
    if (!admissible(um, gas)) bad_interface(axis, i, row, um.rho, um.rho > 0.0 ? pressure(um, gas) : 0.0);
    if (!admissible(up, gas)) bad_interface(axis, i, row, up.rho, up.rho > 0.0 ? pressure(up, gas) : 0.0);
}

} // namespace

Field1D slopes(const Field1D& f, const Grid1D& grid, const LimiterConfig& lim) {
    Field1D s(f.n);
    for (int p = n_ghost - 1; p < f.n + n_ghost + 1; ++p)
        s.at(p) = limited_slope(f.at(p - 1), f.at(p), f.at(p + 1), lim.theta, grid.dx);
    return s;
}

Field2D slopes_x(const Field2D& f, const Grid2D& grid, const LimiterConfig& lim) {
    Field2D s(f.nx, f.ny);
    for (int k = f.begin_y(); k < f.end_y(); ++k)
        for (int j = n_ghost - 1; j < f.nx + n_ghost + 1; ++j)
            s.at(j, k) = limited_slope(f.at(j - 1, k), f.at(j, k), f.at(j + 1, k),
                                       lim.theta, grid.dx);
    return s;
}

Field2D slopes_y(const Field2D& f, const Grid2D& grid, const LimiterConfig& lim) {
    Field2D s(f.nx, f.ny);
    for (int k = n_ghost - 1; k < f.ny + n_ghost + 1; ++k)
        for (int j = f.begin_x(); j < f.end_x(); ++j)
            s.at(j, k) = limited_slope(f.at(j, k - 1), f.at(j, k), f.at(j, k + 1),
                                       lim.theta, grid.dy);
    return s;
}

std::vector<InterfacePair1> interface_values(const Field1D& f, const Field1D& slope,
                                             const Grid1D& grid, const GasModel& gas) {
    const double half_dx = 0.5 * grid.dx;
    std::vector<InterfacePair1> out(static_cast<size_t>(f.n) + 1);
    for (int i = 0; i <= f.n; ++i) {
        const int left = i + 1, right = i + 2;
        InterfacePair1 pair;
        pair.minus = f.at(left) + slope.at(left) * half_dx;
        pair.plus = f.at(right) + slope.at(right) * (-half_dx);
        check_pair_1d(pair.minus, pair.plus, gas, i);
        out[static_cast<size_t>(i)] = pair;
    }
    return out;
}

std::vector<InterfacePair2> interface_values_x(const Field2D& f, const Field2D& slope_x,
                                               const Grid2D& grid, const GasModel& gas) {
    const double half_dx = 0.5 * grid.dx;
    std::vector<InterfacePair2> out(static_cast<size_t>(f.nx + 1) * f.ny);
    size_t idx = 0;
    for (int k = f.begin_y(); k < f.end_y(); ++k) {
        for (int i = 0; i <= f.nx; ++i, ++idx) {
            const int left = i + 1, right = i + 2;
            InterfacePair2 pair;
            pair.minus = f.at(left, k) + slope_x.at(left, k) * half_dx;
            pair.plus = f.at(right, k) + slope_x.at(right, k) * (-half_dx);
            check_pair_2d(pair.minus, pair.plus, gas, "x", i, k - n_ghost);
            out[idx] = pair;
        }
    }
    return out;
}

std::vector<InterfacePair2> interface_values_y(const Field2D& f, const Field2D& slope_y,
                                               const Grid2D& grid, const GasModel& gas) {
    const double half_dy = 0.5 * grid.dy;
    std::vector<InterfacePair2> out(static_cast<size_t>(f.nx) * (f.ny + 1));
    size_t idx = 0;
    for (int i = 0; i <= f.ny; ++i) {
        for (int j = f.begin_x(); j < f.end_x(); ++j, ++idx) {
            const int below = i + 1, above = i + 2;
            InterfacePair2 pair;
            pair.minus = f.at(j, below) + slope_y.at(j, below) * half_dy;
            pair.plus = f.at(j, above) + slope_y.at(j, above) * (-half_dy);
            check_pair_2d(pair.minus, pair.plus, gas, "y", i, j - n_ghost);
            out[idx] = pair;
        }
    }
    return out;
}

} // namespace ldcu
