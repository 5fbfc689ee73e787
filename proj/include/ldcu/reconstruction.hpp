#pragma once

// Second-order piecewise-linear reconstruction of the conserved variables
// with the generalized minmod limiter. Slopes are produced for the interior
// plus one ghost layer per side, so every interface (including the boundary
// ones) gets a one-sided value from each adjacent cell.

#include <vector>

#include "ldcu/mesh.hpp"
#include "ldcu/minmod.hpp"
#include "ldcu/scheme.hpp"

namespace ldcu {

// (U_x)_j = minmod3(theta (U_j - U_{j-1})/dx, (U_{j+1} - U_{j-1})/(2 dx),
//                   theta (U_{j+1} - U_j)/dx), componentwise
inline Cons1 limited_slope(const Cons1& um, const Cons1& uc, const Cons1& up,
                           double theta, double dx) {
    Cons1 s;
    s.rho = minmod3(theta * (uc.rho - um.rho) / dx, (up.rho - um.rho) / (2.0 * dx),
                    theta * (up.rho - uc.rho) / dx);
    s.mom = minmod3(theta * (uc.mom - um.mom) / dx, (up.mom - um.mom) / (2.0 * dx),
                    theta * (up.mom - uc.mom) / dx);
    s.ener = minmod3(theta * (uc.ener - um.ener) / dx, (up.ener - um.ener) / (2.0 * dx),
                     theta * (up.ener - uc.ener) / dx);
    return s;
}

inline Cons2 limited_slope(const Cons2& um, const Cons2& uc, const Cons2& up,
                           double theta, double dx) {
    Cons2 s;
    s.rho = minmod3(theta * (uc.rho - um.rho) / dx, (up.rho - um.rho) / (2.0 * dx),
                    theta * (up.rho - uc.rho) / dx);
    s.momx = minmod3(theta * (uc.momx - um.momx) / dx, (up.momx - um.momx) / (2.0 * dx),
                     theta * (up.momx - uc.momx) / dx);
    s.momy = minmod3(theta * (uc.momy - um.momy) / dx, (up.momy - um.momy) / (2.0 * dx),
                     theta * (up.momy - uc.momy) / dx);
    s.ener = minmod3(theta * (uc.ener - um.ener) / dx, (up.ener - um.ener) / (2.0 * dx),
                     theta * (up.ener - uc.ener) / dx);
    return s;
}

/// One-sided point values at an interface: minus comes from the cell on the
/// left of the interface, plus from the cell on the right.
struct InterfacePair1 {
    Cons1 minus, plus;
};
struct InterfacePair2 {
    Cons2 minus, plus;
};

/// Slopes for padded cells [1, n + 3); ghosts outside that range stay zero.
/// Requires ghost cells to be filled.
Field1D slopes(const Field1D& f, const Grid1D& grid, const LimiterConfig& lim);

/// Directional slope fields for the 2-D grid, same padded coverage per axis.
Field2D slopes_x(const Field2D& f, const Grid2D& grid, const LimiterConfig& lim);
Field2D slopes_y(const Field2D& f, const Grid2D& grid, const LimiterConfig& lim);

/// Interface values U^-, U^+ at the n + 1 interfaces (index i sits between
/// padded cells i+1 and i+2). Throws AdmissibilityError if a reconstructed
/// state has non-positive density or pressure.
std::vector<InterfacePair1> interface_values(const Field1D& f, const Field1D& slope,
                                             const Grid1D& grid, const GasModel& gas);

/// x-interfaces: (nx + 1) * ny pairs, index i + (nx + 1) * row.
std::vector<InterfacePair2> interface_values_x(const Field2D& f, const Field2D& slope_x,
                                               const Grid2D& grid, const GasModel& gas);
/// y-interfaces: nx * (ny + 1) pairs, index col + nx * i.
std::vector<InterfacePair2> interface_values_y(const Field2D& f, const Field2D& slope_y,
                                               const Grid2D& grid, const GasModel& gas);

} // namespace ldcu
