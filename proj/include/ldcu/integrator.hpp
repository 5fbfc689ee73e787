#pragma once

// Semi-discrete right-hand sides (flux divided differences), CFL time-step
// control, SSP-RK3 stepping, and the run loop.

#include <functional>
#include <vector>

#include "ldcu/flux.hpp"
#include "ldcu/mesh.hpp"
#include "ldcu/reconstruction.hpp"

namespace ldcu {

struct IntegratorConfig {
    double cfl = 0.475;
    double t_final = 0.0;
    long long max_steps = 50'000'000;
    double dt_max = 1.0; // cap when the wave-speed estimate degenerates
    std::vector<double> snapshot_times; // hit exactly by clipping dt
};

struct StepRecord {
    long long step = 0;
    double t = 0.0; // time after the step
    double dt = 0.0;
    double max_speed = 0.0;
    double min_rho = 0.0;
    double min_p = 0.0;
};

/// d/dt U_j = -(F_{j+1/2} - F_{j-1/2}) / dx. Refreshes the ghost cells of
/// the input field, reconstructs, and evaluates one flux per interface.
Field1D rhs(Field1D& f, const Grid1D& grid, const SchemeConfig& sc, const BoundarySpec1D& bc,
            FluxStats* stats = nullptr);

/// d/dt U_jk = -(F_{j+1/2,k} - F_{j-1/2,k})/dx - (G_{j,k+1/2} - G_{j,k-1/2})/dy.
Field2D rhs(Field2D& f, const Grid2D& grid, const SchemeConfig& sc, const BoundarySpec2D& bc,
            FluxStats* stats = nullptr);

/// Per-direction maxima over interfaces of max(a+, -a-), from the same
/// boundary-filled reconstruction the fluxes would see.
struct SpeedScan {
    double max_x = 0.0;
    double max_y = 0.0;
};

SpeedScan max_interface_speeds(Field1D& f, const Grid1D& grid, const SchemeConfig& sc,
                               const BoundarySpec1D& bc);
SpeedScan max_interface_speeds(Field2D& f, const Grid2D& grid, const SchemeConfig& sc,
                               const BoundarySpec2D& bc);

/// dt = cfl dx / max_interfaces max(a+, -a-), clipped to dt_cap (which also
/// serves as the answer when the speed estimate degenerates to zero).
double compute_dt(Field1D& f, const Grid1D& grid, const SchemeConfig& sc,
                  const BoundarySpec1D& bc, double cfl, double dt_cap);

/// dt = cfl / (sx/dx + sy/dy), clipped to dt_cap.
double compute_dt(Field2D& f, const Grid2D& grid, const SchemeConfig& sc,
                  const BoundarySpec2D& bc, double cfl, double dt_cap);

/// Three-stage SSP-RK3 with a fixed dt across all stages:
///   U1 = U + dt L(U)
///   U2 = 3/4 U + 1/4 (U1 + dt L(U1))
///   U' = 1/3 U + 2/3 (U2 + dt L(U2))
/// written in increment form (U + c (V - U)) so a zero rhs reproduces U
/// bitwise.
template <class State, class Rhs>
State ssp_rk3_step(const State& u, double dt, Rhs&& rhs_of) {
    State u1 = u + rhs_of(u) * dt;
    State mid1 = u1 + rhs_of(u1) * dt;
    State u2 = u + (mid1 - u) * 0.25;
    State mid2 = u2 + rhs_of(u2) * dt;
    return u + (mid2 - u) * (2.0 / 3.0);
}

using SnapshotSink1D = std::function<void(const Field1D&, double t)>;
using SnapshotSink2D = std::function<void(const Field2D&, double t)>;

struct RunResult1D {
    Field1D field;
    Grid1D grid;
    double t = 0.0;
    std::vector<StepRecord> records;
    FluxStats stats{};
};

struct RunResult2D {
    Field2D field;
    Grid2D grid;
    double t = 0.0;
    std::vector<StepRecord> records;
    FluxStats stats{};
};

struct Problem1D;
struct Problem2D;

/// Initialize cell averages from the problem's initial condition, then
/// advance to t_final, invoking the sink at every scheduled snapshot time.
/// Aborts with AdmissibilityError (after handing the last accepted state to
/// on_abort) if an inadmissible state appears, and with IntegrationError if
/// max_steps is exceeded.
RunResult1D run(const Problem1D& prob, int nx, const SchemeConfig& sc, const IntegratorConfig& ic,
                const SnapshotSink1D& sink = {}, const SnapshotSink1D& on_abort = {});
RunResult2D run(const Problem2D& prob, int nx, int ny, const SchemeConfig& sc,
                const IntegratorConfig& ic, const SnapshotSink2D& sink = {},
                const SnapshotSink2D& on_abort = {});

} // namespace ldcu
