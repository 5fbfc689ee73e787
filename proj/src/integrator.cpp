#include "ldcu/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ldcu/errors.hpp"
#include "ldcu/problems.hpp"

namespace ldcu {

Field1D rhs(Field1D& f, const Grid1D& grid, const SchemeConfig& sc, const BoundarySpec1D& bc,
            FluxStats* stats) {
    apply_bc(f, bc);
    const Field1D slope = slopes(f, grid, sc.limiter);
    const auto faces = interface_values(f, slope, grid, sc.gas);

    std::vector<Cons1> flux(faces.size());
    for (size_t i = 0; i < faces.size(); ++i)
        flux[i] = numerical_flux(faces[i].minus, faces[i].plus, sc, stats);

    Field1D out(f.n);
    const double inv_dx = 1.0 / grid.dx;
    for (int p = f.begin_interior(); p < f.end_interior(); ++p) {
        const size_t i = static_cast<size_t>(p - n_ghost); // left interface of cell p
        out.at(p) = (flux[i] - flux[i + 1]) * inv_dx;
    }
    return out;
}

Field2D rhs(Field2D& f, const Grid2D& grid, const SchemeConfig& sc, const BoundarySpec2D& bc,
            FluxStats* stats) {
    apply_bc(f, bc);
    const Field2D sx = slopes_x(f, grid, sc.limiter);
    const Field2D sy = slopes_y(f, grid, sc.limiter);
    const auto faces_x = interface_values_x(f, sx, grid, sc.gas);
    const auto faces_y = interface_values_y(f, sy, grid, sc.gas);

    Field2D out(f.nx, f.ny);
    const double inv_dx = 1.0 / grid.dx;
    const double inv_dy = 1.0 / grid.dy;

    // x-sweep: flux divided differences per row
    {
        std::vector<Cons2> flux(static_cast<size_t>(f.nx) + 1);
        for (int k = f.begin_y(); k < f.end_y(); ++k) {
            const size_t row = static_cast<size_t>(k - n_ghost) * (f.nx + 1);
            for (int i = 0; i <= f.nx; ++i)
                flux[static_cast<size_t>(i)] =
                    numerical_flux_x(faces_x[row + i].minus, faces_x[row + i].plus, sc, stats);
            for (int j = f.begin_x(); j < f.end_x(); ++j) {
                const size_t i = static_cast<size_t>(j - n_ghost);
                out.at(j, k) = (flux[i] - flux[i + 1]) * inv_dx;
            }
        }
    }

    // y-sweep, accumulated on top; fluxes of row k+1/2 are reused as the
    // lower fluxes of the next row
    {
        std::vector<Cons2> flux_below(static_cast<size_t>(f.nx));
        std::vector<Cons2> flux_above(static_cast<size_t>(f.nx));
        for (int j = 0; j < f.nx; ++j) {
            const auto& face = faces_y[static_cast<size_t>(j)];
            flux_below[static_cast<size_t>(j)] = numerical_flux_y(face.minus, face.plus, sc, stats);
        }
        for (int k = f.begin_y(); k < f.end_y(); ++k) {
            const size_t row = static_cast<size_t>(k - n_ghost + 1) * f.nx;
            for (int j = 0; j < f.nx; ++j) {
                const auto& face = faces_y[row + j];
                flux_above[static_cast<size_t>(j)] =
                    numerical_flux_y(face.minus, face.plus, sc, stats);
            }
            for (int j = f.begin_x(); j < f.end_x(); ++j) {
                const size_t i = static_cast<size_t>(j - n_ghost);
                out.at(j, k) += (flux_below[i] - flux_above[i]) * inv_dy;
            }
            std::swap(flux_below, flux_above);
        }
    }
    return out;
}

SpeedScan max_interface_speeds(Field1D& f, const Grid1D& grid, const SchemeConfig& sc,
                               const BoundarySpec1D& bc) {
    apply_bc(f, bc);
    const Field1D slope = slopes(f, grid, sc.limiter);
    const auto faces = interface_values(f, slope, grid, sc.gas);
    SpeedScan scan;
    for (const auto& face : faces) {
        const InterfaceSpeeds a = local_speeds(face.minus, face.plus, sc.gas);
        scan.max_x = std::max(scan.max_x, std::max(a.plus, -a.minus));
    }
    return scan;
}

SpeedScan max_interface_speeds(Field2D& f, const Grid2D& grid, const SchemeConfig& sc,
                               const BoundarySpec2D& bc) {
    apply_bc(f, bc);
    const Field2D sx = slopes_x(f, grid, sc.limiter);
    const Field2D sy = slopes_y(f, grid, sc.limiter);
    const auto faces_x = interface_values_x(f, sx, grid, sc.gas);
    const auto faces_y = interface_values_y(f, sy, grid, sc.gas);
    SpeedScan scan;
    for (const auto& face : faces_x) {
        const InterfaceSpeeds a = local_speeds_x(face.minus, face.plus, sc.gas);
        scan.max_x = std::max(scan.max_x, std::max(a.plus, -a.minus));
    }
    for (const auto& face : faces_y) {
        const InterfaceSpeeds b = local_speeds_y(face.minus, face.plus, sc.gas);
        scan.max_y = std::max(scan.max_y, std::max(b.plus, -b.minus));
    }
    return scan;
}

double compute_dt(Field1D& f, const Grid1D& grid, const SchemeConfig& sc,
                  const BoundarySpec1D& bc, double cfl, double dt_cap) {
    const SpeedScan scan = max_interface_speeds(f, grid, sc, bc);
    if (!(scan.max_x > 0.0)) return dt_cap;
    return std::min(cfl * grid.dx / scan.max_x, dt_cap);
}

double compute_dt(Field2D& f, const Grid2D& grid, const SchemeConfig& sc,
                  const BoundarySpec2D& bc, double cfl, double dt_cap) {
    const SpeedScan scan = max_interface_speeds(f, grid, sc, bc);
    const double rate = scan.max_x / grid.dx + scan.max_y / grid.dy;
    if (!(rate > 0.0)) return dt_cap;
    return std::min(cfl / rate, dt_cap);
}

namespace {

struct Audit {
    double min_rho;
    double min_p;
};

Audit audit_interior(const Field1D& f, const GasModel& gas) {
    Audit a{f.at(f.begin_interior()).rho, 0.0};
    double min_internal = 1.0 / 0.0;
    for (int p = f.begin_interior(); p < f.end_interior(); ++p) {
        const Cons1& s = f.at(p);
        if (!(s.rho > 0.0))
            throw AdmissibilityError("non-positive density " + std::to_string(s.rho) +
                                     " in cell " + std::to_string(p - n_ghost));
        a.min_rho = std::min(a.min_rho, s.rho);
        min_internal = std::min(min_internal, s.ener - s.mom * s.mom / (2.0 * s.rho));
    }
    a.min_p = (gas.gamma - 1.0) * min_internal;
    if (!(a.min_p > 0.0))
        throw AdmissibilityError("non-positive pressure " + std::to_string(a.min_p));
    return a;
}

Audit audit_interior(const Field2D& f, const GasModel& gas) {
    Audit a{f.at(f.begin_x(), f.begin_y()).rho, 0.0};
    double min_internal = 1.0 / 0.0;
    for (int k = f.begin_y(); k < f.end_y(); ++k) {
        for (int j = f.begin_x(); j < f.end_x(); ++j) {
            const Cons2& s = f.at(j, k);
            if (!(s.rho > 0.0))
                throw AdmissibilityError("non-positive density " + std::to_string(s.rho) +
                                         " in cell (" + std::to_string(j - n_ghost) + "," +
                                         std::to_string(k - n_ghost) + ")");
            a.min_rho = std::min(a.min_rho, s.rho);
            min_internal = std::min(
                min_internal, s.ener - (s.momx * s.momx + s.momy * s.momy) / (2.0 * s.rho));
        }
    }
    a.min_p = (gas.gamma - 1.0) * min_internal;
    if (!(a.min_p > 0.0))
        throw AdmissibilityError("non-positive pressure " + std::to_string(a.min_p));
    return a;
}

struct DtChoice {
    double dt;
    double max_speed;
};

// Shared time loop over the dimension-specific pieces: dt_of yields the
// CFL-limited dt and the speed behind it, step_of advances one RK step.
template <class FieldT, class Sink, class DtOf, class StepOf>
void time_loop(FieldT& u, double& t, std::vector<StepRecord>& records, const GasModel& gas,
               const IntegratorConfig& ic, const Sink& sink, const Sink& on_abort, DtOf&& dt_of,
               StepOf&& step_of) {
    std::vector<double> events = ic.snapshot_times;
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());

    const auto fire_snapshots = [&](double time) {
        if (!sink) return;
        for (double ev : events)
            if (ev == time) sink(u, time);
    };

    try {
        audit_interior(u, gas);
    } catch (const AdmissibilityError& err) {
        if (on_abort) on_abort(u, t);
        throw AdmissibilityError(std::string(err.what()) + " [initial data]");
    }
    fire_snapshots(0.0);
    long long step = 0;

    while (t < ic.t_final) {
        if (step >= ic.max_steps)
            throw IntegrationError("step cap " + std::to_string(ic.max_steps) +
                                   " exceeded at t=" + std::to_string(t));

        double target = ic.t_final;
        for (double ev : events) {
            if (ev > t && ev < target) {
                target = ev;
                break;
            }
        }

        const DtChoice choice = dt_of(u, std::min(ic.dt_max, target - t));
        double dt = choice.dt;
        const bool landed = dt >= target - t;
        if (landed) dt = target - t;
        if (!(dt > 0.0))
            throw IntegrationError("non-positive dt at t=" + std::to_string(t));

        try {
            u = step_of(u, dt);
            t = landed ? target : t + dt;
            ++step;
            const Audit a = audit_interior(u, gas);
            records.push_back({step, t, dt, choice.max_speed, a.min_rho, a.min_p});
        } catch (const AdmissibilityError& err) {
            if (on_abort) on_abort(u, t);
            throw AdmissibilityError(std::string(err.what()) + " [step " +
                                     std::to_string(step + 1) + ", t=" + std::to_string(t) + "]");
        }

        if (landed && target < ic.t_final) fire_snapshots(target);
    }
    if (ic.t_final > 0.0) fire_snapshots(ic.t_final);
}

// Tags the RK stage (1-3) onto admissibility failures.
template <class FieldT, class RhsOf>
FieldT tagged_rk3_step(const FieldT& u, double dt, RhsOf&& rhs_of) {
    int stage = 0;
    try {
        return ssp_rk3_step(u, dt, [&](const FieldT& w) {
            ++stage;
            return rhs_of(w);
        });
    } catch (const AdmissibilityError& err) {
        throw AdmissibilityError(std::string(err.what()) + " [RK stage " + std::to_string(stage) +
                                 "]");
    }
}

} // namespace

RunResult1D run(const Problem1D& prob, int nx, const SchemeConfig& sc, const IntegratorConfig& ic,
                const SnapshotSink1D& sink, const SnapshotSink1D& on_abort) {
    RunResult1D res;
    res.grid = Grid1D(nx, prob.x_lo, prob.x_hi);
    res.field = init_field(prob, res.grid);
    res.t = 0.0;

    const auto dt_of = [&](Field1D& u, double cap) -> DtChoice {
        const SpeedScan scan = max_interface_speeds(u, res.grid, sc, prob.bc);
        if (!(scan.max_x > 0.0)) return {cap, 0.0};
        return {std::min(ic.cfl * res.grid.dx / scan.max_x, cap), scan.max_x};
    };
    const auto step_of = [&](const Field1D& u, double dt) {
        return tagged_rk3_step(u, dt, [&](const Field1D& w) {
            Field1D scratch = w;
            return rhs(scratch, res.grid, sc, prob.bc, &res.stats);
        });
    };

    time_loop(res.field, res.t, res.records, sc.gas, ic, sink, on_abort, dt_of, step_of);
    return res;
}

RunResult2D run(const Problem2D& prob, int nx, int ny, const SchemeConfig& sc,
                const IntegratorConfig& ic, const SnapshotSink2D& sink,
                const SnapshotSink2D& on_abort) {
    RunResult2D res;
    res.grid = Grid2D(nx, ny, prob.x_lo, prob.x_hi, prob.y_lo, prob.y_hi);
    res.field = init_field(prob, res.grid);
    res.t = 0.0;

    const auto dt_of = [&](Field2D& u, double cap) -> DtChoice {
        const SpeedScan scan = max_interface_speeds(u, res.grid, sc, prob.bc);
        const double rate = scan.max_x / res.grid.dx + scan.max_y / res.grid.dy;
        if (!(rate > 0.0)) return {cap, 0.0};
        return {std::min(ic.cfl / rate, cap), std::max(scan.max_x, scan.max_y)};
    };
    const auto step_of = [&](const Field2D& u, double dt) {
        return tagged_rk3_step(u, dt, [&](const Field2D& w) {
            Field2D scratch = w;
            return rhs(scratch, res.grid, sc, prob.bc, &res.stats);
        });
    };

    time_loop(res.field, res.t, res.records, sc.gas, ic, sink, on_abort, dt_of, step_of);
    return res;
}

} // namespace ldcu
