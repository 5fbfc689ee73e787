#include "ldcu/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "ldcu/diagnostics.hpp"
#include "ldcu/errors.hpp"
#include "ldcu/integrator.hpp"
#include "ldcu/snapshot.hpp"

namespace ldcu {

namespace {

std::string fmt_time(double t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", t);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw IoError("write failed for '" + path + "'");
}

void write_step_log(const std::string& path, const std::vector<StepRecord>& records) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << "step,t,dt,max_speed,min_rho,min_p\n";
    char buf[160];
    for (const auto& r : records) {
        std::snprintf(buf, sizeof buf, "%lld,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.step, r.t, r.dt,
                      r.max_speed, r.min_rho, r.min_p);
        out << buf;
    }
    if (!out) throw IoError("write failed for '" + path + "'");
}

struct RunOutputs {
    DiagnosticsReport report;
};

std::string tag(const RunConfig& cfg, SchemeFlavor flavor) {
    return cfg.problem + "_" + to_string(flavor);
}

// Run one flavor, write its snapshots and step log, and collect metrics.
RunOutputs run_one(const RunConfig& cfg, SchemeFlavor flavor, const std::string& out_dir) {
    const AnyProblem prob = build_problem(cfg);
    SchemeConfig sc = scheme_config(cfg);
    sc.flavor = flavor;

    IntegratorConfig ic;
    ic.cfl = cfg.cfl;
    ic.snapshot_times = cfg.snapshot_times;
    if (cfg.max_steps) ic.max_steps = *cfg.max_steps;

    const std::string base = out_dir + "/" + tag(cfg, flavor);
    RunOutputs out;
    DiagnosticsReport& rep = out.report;

    if (std::holds_alternative<Problem1D>(prob)) {
        const Problem1D& p = std::get<Problem1D>(prob);
        ic.t_final = p.t_final;
        const int nx = cfg.nx.value_or(p.default_nx);
        const Grid1D grid(nx, p.x_lo, p.x_hi);
        SnapshotMeta meta{p.name, to_string(flavor), 0.0, p.gamma};

        const auto sink = [&](const Field1D& f, double t) {
            SnapshotMeta m = meta;
            m.t = t;
            write_snapshot(f, grid, m, base + "_t" + fmt_time(t) + ".csv");
        };
        const auto on_abort = [&](const Field1D& f, double t) {
            SnapshotMeta m = meta;
            m.t = t;
            write_snapshot(f, grid, m, base + "_abort_dump.csv");
        };

        const RunResult1D res = run(p, nx, sc, ic, sink, on_abort);
        meta.t = res.t;
        write_snapshot(res.field, grid, meta, base + "_final.csv");
        write_step_log(base + "_steps.csv", res.records);

        rep.add_text("ic_sampling", "cell_center");
        rep.add("t_final", res.t);
        rep.add("steps", static_cast<double>(res.records.size()));
        rep.add("dx", grid.dx);
        const auto totals = conserved_totals(res.field, grid);
        rep.add("total_rho", totals[0]);
        rep.add("total_mom", totals[1]);
        rep.add("total_ener", totals[2]);
        const auto [rho_min, rho_max] = component_range(res.field, 0);
        rep.add("rho_min", rho_min);
        rep.add("rho_max", rho_max);
        if (!res.records.empty()) rep.add("min_p_final", res.records.back().min_p);
        if (cfg.tv_window)
            rep.add("tv_rho", total_variation(res.field, grid, 0, cfg.tv_window->first,
                                              cfg.tv_window->second));
        if (cfg.overshoot_window) {
            if (!cfg.overshoot_lo || !cfg.overshoot_hi)
                throw ConfigError("'overshoot_window' requires 'overshoot_lo' and 'overshoot_hi'");
            const auto [above, below] =
                overshoot(res.field, grid, 0, cfg.overshoot_window->first,
                          cfg.overshoot_window->second, *cfg.overshoot_lo, *cfg.overshoot_hi);
            rep.add("overshoot_above", above);
            rep.add("overshoot_below", below);
        }
        rep.add("desingularized", static_cast<double>(res.stats.desingularized));
        rep.add("q_disabled", static_cast<double>(res.stats.q_disabled));
    } else {
        const Problem2D& p = std::get<Problem2D>(prob);
        ic.t_final = p.t_final;
        const int nx = cfg.nx.value_or(p.default_nx);
        const int ny = cfg.ny.value_or(cfg.nx.value_or(p.default_ny));
        const Grid2D grid(nx, ny, p.x_lo, p.x_hi, p.y_lo, p.y_hi);
        SnapshotMeta meta{p.name, to_string(flavor), 0.0, p.gamma};

        const auto sink = [&](const Field2D& f, double t) {
            SnapshotMeta m = meta;
            m.t = t;
            write_snapshot(f, grid, m, base + "_t" + fmt_time(t) + ".csv");
        };
        const auto on_abort = [&](const Field2D& f, double t) {
            SnapshotMeta m = meta;
            m.t = t;
            write_snapshot(f, grid, m, base + "_abort_dump.csv");
        };

        const RunResult2D res = run(p, nx, ny, sc, ic, sink, on_abort);
        meta.t = res.t;
        write_snapshot(res.field, grid, meta, base + "_final.csv");
        write_step_log(base + "_steps.csv", res.records);

        rep.add_text("ic_sampling", "cell_center");
        rep.add("t_final", res.t);
        rep.add("steps", static_cast<double>(res.records.size()));
        rep.add("dx", grid.dx);
        rep.add("dy", grid.dy);
        const auto totals = conserved_totals(res.field, grid);
        rep.add("total_rho", totals[0]);
        rep.add("total_momx", totals[1]);
        rep.add("total_momy", totals[2]);
        rep.add("total_ener", totals[3]);
        const auto [rho_min, rho_max] = component_range(res.field, 0);
        rep.add("rho_min", rho_min);
        rep.add("rho_max", rho_max);
        if (!res.records.empty()) rep.add("min_p_final", res.records.back().min_p);
        if (cfg.tv_window)
            rep.add("tv_rho", total_variation(res.field, grid, 0, cfg.tv_window->first,
                                              cfg.tv_window->second, cfg.tv_window->first,
                                              cfg.tv_window->second));
        if (nx == ny) rep.add("symmetry_error", symmetry_error(res.field));
        rep.add("desingularized", static_cast<double>(res.stats.desingularized));
        rep.add("q_disabled", static_cast<double>(res.stats.q_disabled));
    }
    return out;
}

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const AdmissibilityError& e) {
        std::cerr << "admissibility abort: " << e.what() << '\n';
        return 3;
    } catch (const IntegrationError& e) {
        std::cerr << "integration abort: " << e.what() << '\n';
        return 3;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 4;
    }
}

void ensure_out_dir(const std::string& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory '" + out_dir + "'");
}

} // namespace

int cmd_run(const RunConfig& cfg, const std::string& out_dir) {
    return guarded([&] {
        ensure_out_dir(out_dir);
        const RunOutputs out = run_one(cfg, cfg.scheme, out_dir);
        const std::string path = out_dir + "/" + tag(cfg, cfg.scheme) + "_report.txt";
        write_text(path, out.report.render());
        std::cout << out.report.render();
        return 0;
    });
}

int cmd_compare(const RunConfig& cfg, const std::vector<SchemeFlavor>& flavors,
                const std::string& out_dir) {
    return guarded([&] {
        if (flavors.empty()) throw ConfigError("compare requires at least one flavor");
        ensure_out_dir(out_dir);
        DiagnosticsReport joint;
        for (SchemeFlavor flavor : flavors) {
            const RunOutputs out = run_one(cfg, flavor, out_dir);
            for (const auto& [key, value] : out.report.entries)
                joint.add_text(std::string(to_string(flavor)) + "." + key, value);
        }
        const std::string path = out_dir + "/" + cfg.problem + "_compare_report.txt";
        write_text(path, joint.render());
        std::cout << joint.render();
        return 0;
    });
}

int cmd_convergence(const RunConfig& cfg, const std::vector<int>& resolutions,
                    const std::string& out_dir) {
    return guarded([&] {
        if (resolutions.empty()) throw ConfigError("convergence requires at least one resolution");
        ensure_out_dir(out_dir);
        const AnyProblem any = build_problem(cfg);
        if (!std::holds_alternative<Problem1D>(any))
            throw ConfigError("convergence study supports 1-D problems only");
        const Problem1D& p = std::get<Problem1D>(any);
        if (!p.exact && p.reference_nx == 0)
            throw ConfigError("problem '" + p.name + "' has no exact or reference solution");

        const SchemeConfig sc = scheme_config(cfg);
        IntegratorConfig ic;
        ic.cfl = cfg.cfl;
        ic.t_final = p.t_final;
        if (cfg.max_steps) ic.max_steps = *cfg.max_steps;
        const GasModel gas{p.gamma};

        // reference solution on the finest requested mesh when no exact one
        Field1D ref_fine;
        Grid1D ref_grid;
        if (!p.exact) {
            const RunResult1D ref = run(p, p.reference_nx, sc, ic);
            ref_fine = ref.field;
            ref_grid = ref.grid;
        }

        DiagnosticsReport rep;
        std::vector<double> errors;
        for (int nx : resolutions) {
            const RunResult1D res = run(p, nx, sc, ic);
            Field1D ref;
            if (p.exact) {
                ref = Field1D(nx);
                for (int q = ref.begin_interior(); q < ref.end_interior(); ++q)
                    ref.at(q) = prim_to_cons(p.exact(res.grid.center(q), res.t), gas);
            } else {
                if (ref_grid.n % nx != 0)
                    throw ConfigError("reference resolution " + std::to_string(ref_grid.n) +
                                      " is not a multiple of " + std::to_string(nx));
                ref = restrict_field(ref_fine, ref_grid.n / nx);
            }
            const double err = l1_error(res.field, ref, res.grid)[0];
            errors.push_back(err);
            rep.add("l1_rho.N" + std::to_string(nx), err);
        }
        for (size_t i = 0; i + 1 < errors.size(); ++i) {
            const double rate = std::log2(errors[i] / errors[i + 1]);
            rep.add("rate_rho.N" + std::to_string(resolutions[i]) + "_N" +
                        std::to_string(resolutions[i + 1]),
                    rate);
        }

        const std::string path = out_dir + "/" + cfg.problem + "_convergence_report.txt";
        write_text(path, rep.render());
        std::cout << rep.render();
        return 0;
    });
}

} // namespace ldcu
