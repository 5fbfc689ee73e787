#include "ldcu/problems.hpp"

#include <cmath>

#include "ldcu/errors.hpp"

namespace ldcu {

Problem1D shock_entropy() {
    Problem1D p;
    p.name = "shock_entropy";
    p.x_lo = -5.0;
    p.x_hi = 5.0;
    p.default_nx = 800;   // dx = 1/80
    p.reference_nx = 8000; // dx = 1/800
    p.t_final = 5.0;
    p.bc = free_bc_1d();
    p.ic = [](double x) -> Prim1 {
        if (x < -4.5) return {1.51695, 0.523346, 1.805};
        return {1.0 + 0.1 * std::sin(20.0 * x), 0.0, 1.0};
    };
    return p;
}

Problem1D stationary_contact() {
    Problem1D p;
    p.name = "stationary_contact";
    p.x_lo = 0.0;
    p.x_hi = 1.0;
    p.default_nx = 200;    // dx = 1/200
    p.reference_nx = 8000; // dx = 1/8000
    p.t_final = 0.012;
    p.bc = free_bc_1d();
    p.ic = [](double x) -> Prim1 {
        if (x < 0.8) return {1.0, -19.59745, 1000.0};
        return {1.0, -19.59745, 0.01};
    };
    return p;
}

Problem1D smooth_wave() {
    Problem1D p;
    p.name = "smooth_wave";
    p.x_lo = 0.0;
    p.x_hi = 2.0;
    p.default_nx = 100;
    p.t_final = 0.5;
    p.bc = periodic_bc_1d();
    p.ic = [](double x) -> Prim1 { return {1.0 + 0.2 * std::sin(M_PI * x), 1.0, 1.0}; };
    p.exact = [](double x, double t) -> Prim1 {
        return {1.0 + 0.2 * std::sin(M_PI * (x - t)), 1.0, 1.0};
    };
    return p;
}

Problem1D custom_riemann(Prim1 left, Prim1 right, double split, double x_lo, double x_hi,
                         double t_final) {
    Problem1D p;
    p.name = "custom_riemann";
    p.x_lo = x_lo;
    p.x_hi = x_hi;
    p.default_nx = 100;
    p.t_final = t_final;
    p.bc = free_bc_1d();
    p.ic = [=](double x) -> Prim1 { return x < split ? left : right; };
    return p;
}

Problem2D riemann2d_config3() {
    Problem2D p;
    p.name = "riemann2d_config3";
    p.x_lo = p.y_lo = 0.0;
    p.x_hi = p.y_hi = 1.2;
    p.default_nx = p.default_ny = 1200; // dx = dy = 0.001
    p.t_final = 1.0;
    p.bc = free_bc_2d();
    p.ic = [](double x, double y) -> Prim2 {
        if (x > 1.0) {
            if (y > 1.0) return {1.5, 0.0, 0.0, 1.5};
            return {0.5323, 0.0, 1.206, 0.3};
        }
        if (y > 1.0) return {0.5323, 1.206, 0.0, 0.3};
        return {0.138, 1.206, 1.206, 0.029};
    };
    return p;
}

Problem2D explosion() {
    Problem2D p;
    p.name = "explosion";
    p.x_lo = p.y_lo = 0.0;
    p.x_hi = p.y_hi = 1.5;
    p.default_nx = p.default_ny = 400; // dx = dy = 3/800
    p.t_final = 3.2;
    p.bc.x_lo = BoundaryKind::SolidWall;
    p.bc.y_lo = BoundaryKind::SolidWall;
    p.bc.x_hi = BoundaryKind::Free;
    p.bc.y_hi = BoundaryKind::Free;
    p.ic = [](double x, double y) -> Prim2 {
        if (x * x + y * y < 0.16) return {1.0, 0.0, 0.0, 1.0};
        return {0.125, 0.0, 0.0, 0.1};
    };
    return p;
}

Problem2D implosion() {
    Problem2D p;
    p.name = "implosion";
    p.x_lo = p.y_lo = 0.0;
    p.x_hi = p.y_hi = 0.3;
    p.default_nx = p.default_ny = 600; // dx = dy = 1/2000
    p.t_final = 2.5;
    p.bc.x_lo = p.bc.x_hi = BoundaryKind::SolidWall;
    p.bc.y_lo = p.bc.y_hi = BoundaryKind::SolidWall;
    p.ic = [](double x, double y) -> Prim2 {
        if (std::abs(x) + std::abs(y) < 0.15) return {0.125, 0.0, 0.0, 0.14};
        return {1.0, 0.0, 0.0, 1.0};
    };
    return p;
}

AnyProblem make_problem(const std::string& name) {
    if (name == "shock_entropy") return shock_entropy();
    if (name == "stationary_contact") return stationary_contact();
    if (name == "smooth_wave") return smooth_wave();
    if (name == "riemann2d_config3") return riemann2d_config3();
    if (name == "explosion") return explosion();
    if (name == "implosion") return implosion();
    throw ConfigError("unknown problem '" + name + "'");
}

const std::vector<std::string>& problem_names() {
    static const std::vector<std::string> names = {
        "shock_entropy", "stationary_contact", "smooth_wave",
        "riemann2d_config3", "explosion", "implosion",
    };
    return names;
}

Field1D init_field(const Problem1D& prob, const Grid1D& grid) {
    const GasModel gas{prob.gamma};
    Field1D f(grid.n);
    for (int p = f.begin_interior(); p < f.end_interior(); ++p)
        f.at(p) = prim_to_cons(prob.ic(grid.center(p)), gas);
    return f;
}

Field2D init_field(const Problem2D& prob, const Grid2D& grid) {
    const GasModel gas{prob.gamma};
    Field2D f(grid.nx, grid.ny);
    for (int k = f.begin_y(); k < f.end_y(); ++k)
        for (int j = f.begin_x(); j < f.end_x(); ++j)
            f.at(j, k) = prim_to_cons(prob.ic(grid.center_x(j), grid.center_y(k)), gas);
    return f;
}

} // namespace ldcu
