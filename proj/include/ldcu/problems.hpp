#pragma once

// Declarative benchmark definitions: domain, initial condition in primitive
// variables, boundary conditions, final time, and default resolutions.

#include <functional>
#include <string>
#include <variant>

#include "ldcu/mesh.hpp"

namespace ldcu {

struct Problem1D {
    std::string name;
    double x_lo = 0.0, x_hi = 1.0;
    int default_nx = 100;
    int reference_nx = 0; // finer mesh used for reference solutions (0: none)
    double gamma = 1.4;
    double t_final = 0.0;
    BoundarySpec1D bc{};
    std::function<Prim1(double x)> ic;
    std::function<Prim1(double x, double t)> exact; // null when unknown
};

struct Problem2D {
    std::string name;
    double x_lo = 0.0, x_hi = 1.0;
    double y_lo = 0.0, y_hi = 1.0;
    int default_nx = 100, default_ny = 100;
    double gamma = 1.4;
    double t_final = 0.0;
    BoundarySpec2D bc{};
    std::function<Prim2(double x, double y)> ic;
};

/// Mach 1.1 shock running into a sinusoidal density field; free boundaries.
Problem1D shock_entropy();

/// Stationary contact at x = 0.8 with a traveling shock and rarefaction
/// produced by a 1e5 pressure ratio; free boundaries.
Problem1D stationary_contact();

/// Smooth density advection on a periodic domain with exact solution
/// rho(x, t) = 1 + 0.2 sin(pi (x - t)), u = 1, p = 1.
Problem1D smooth_wave();

/// Two-state Riemann data (left primitive state for x < split).
Problem1D custom_riemann(Prim1 left, Prim1 right, double split, double x_lo, double x_hi,
                         double t_final);

/// Four-quadrant Riemann data around (1, 1) on [0, 1.2]^2; free boundaries.
Problem2D riemann2d_config3();

/// Circular high-pressure region centered at the origin on [0, 1.5]^2;
/// solid walls at x = 0 and y = 0, free elsewhere.
Problem2D explosion();

/// Low-pressure diamond |x| + |y| < 0.15 on [0, 0.3]^2; solid walls all round.
Problem2D implosion();

using AnyProblem = std::variant<Problem1D, Problem2D>;

/// Look up a named benchmark; throws ConfigError for unknown names.
AnyProblem make_problem(const std::string& name);

/// Names accepted by make_problem, in a fixed order.
const std::vector<std::string>& problem_names();

/// Sample the initial condition at cell centers into conserved cell averages
/// (ghosts are left zero; apply_bc before use).
Field1D init_field(const Problem1D& prob, const Grid1D& grid);
Field2D init_field(const Problem2D& prob, const Grid2D& grid);

} // namespace ldcu
