#include "ldcu/diagnostics.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ldcu {

namespace {

// first/last padded interior index with center inside [w_lo, w_hi]
std::pair<int, int> window_range_1d(const Grid1D& grid, double w_lo, double w_hi) {
    int first = -1, last = -2;
    for (int p = n_ghost; p < grid.n + n_ghost; ++p) {
        const double x = grid.center(p);
        if (x >= w_lo && x <= w_hi) {
            if (first < 0) first = p;
            last = p;
        }
    }
    if (first < 0) throw std::invalid_argument("empty diagnostics window");
    return {first, last};
}

} // namespace

double total_variation(const Field1D& f, const Grid1D& grid, int comp, double w_lo, double w_hi) {
    const auto [first, last] = window_range_1d(grid, w_lo, w_hi);
    CompensatedSum tv;
    for (int p = first; p < last; ++p) tv.add(std::abs(f.at(p + 1).comp(comp) - f.at(p).comp(comp)));
    return tv.value();
}

double total_variation(const Field2D& f, const Grid2D& grid, int comp, double w_lo, double w_hi,
                       double w_lo_y, double w_hi_y) {
    int j_first = -1, j_last = -2, k_first = -1, k_last = -2;
    for (int j = f.begin_x(); j < f.end_x(); ++j) {
        const double x = grid.center_x(j);
        if (x >= w_lo && x <= w_hi) {
            if (j_first < 0) j_first = j;
            j_last = j;
        }
    }
    for (int k = f.begin_y(); k < f.end_y(); ++k) {
        const double y = grid.center_y(k);
        if (y >= w_lo_y && y <= w_hi_y) {
            if (k_first < 0) k_first = k;
            k_last = k;
        }
    }
    if (j_first < 0 || k_first < 0) throw std::invalid_argument("empty diagnostics window");

    CompensatedSum tv;
    for (int k = k_first; k <= k_last; ++k)
        for (int j = j_first; j < j_last; ++j)
            tv.add(std::abs(f.at(j + 1, k).comp(comp) - f.at(j, k).comp(comp)));
    for (int j = j_first; j <= j_last; ++j)
        for (int k = k_first; k < k_last; ++k)
            tv.add(std::abs(f.at(j, k + 1).comp(comp) - f.at(j, k).comp(comp)));
    return tv.value();
}

std::array<double, 3> conserved_totals(const Field1D& f, const Grid1D& grid) {
    CompensatedSum acc[3];
    for (int p = f.begin_interior(); p < f.end_interior(); ++p) {
        acc[0].add(f.at(p).rho);
        acc[1].add(f.at(p).mom);
        acc[2].add(f.at(p).ener);
    }
    return {acc[0].value() * grid.dx, acc[1].value() * grid.dx, acc[2].value() * grid.dx};
}

std::array<double, 4> conserved_totals(const Field2D& f, const Grid2D& grid) {
    CompensatedSum acc[4];
    for (int k = f.begin_y(); k < f.end_y(); ++k) {
        for (int j = f.begin_x(); j < f.end_x(); ++j) {
            const Cons2& s = f.at(j, k);
            acc[0].add(s.rho);
            acc[1].add(s.momx);
            acc[2].add(s.momy);
            acc[3].add(s.ener);
        }
    }
    const double w = grid.dx * grid.dy;
    return {acc[0].value() * w, acc[1].value() * w, acc[2].value() * w, acc[3].value() * w};
}

std::pair<double, double> overshoot(const Field1D& f, const Grid1D& grid, int comp, double w_lo,
                                    double w_hi, double lo, double hi) {
    const auto [vmin, vmax] = component_range(f, grid, comp, w_lo, w_hi);
    return {std::max(0.0, vmax - hi), std::max(0.0, lo - vmin)};
}

std::pair<double, double> component_range(const Field1D& f, int comp) {
    double vmin = f.at(f.begin_interior()).comp(comp), vmax = vmin;
    for (int p = f.begin_interior(); p < f.end_interior(); ++p) {
        const double v = f.at(p).comp(comp);
        vmin = std::min(vmin, v);
        vmax = std::max(vmax, v);
    }
    return {vmin, vmax};
}

std::pair<double, double> component_range(const Field2D& f, int comp) {
    double vmin = f.at(f.begin_x(), f.begin_y()).comp(comp), vmax = vmin;
    for (int k = f.begin_y(); k < f.end_y(); ++k) {
        for (int j = f.begin_x(); j < f.end_x(); ++j) {
            const double v = f.at(j, k).comp(comp);
            vmin = std::min(vmin, v);
            vmax = std::max(vmax, v);
        }
    }
    return {vmin, vmax};
}

std::pair<double, double> component_range(const Field1D& f, const Grid1D& grid, int comp,
                                          double w_lo, double w_hi) {
    const auto [first, last] = window_range_1d(grid, w_lo, w_hi);
    double vmin = f.at(first).comp(comp), vmax = vmin;
    for (int p = first; p <= last; ++p) {
        const double v = f.at(p).comp(comp);
        vmin = std::min(vmin, v);
        vmax = std::max(vmax, v);
    }
    return {vmin, vmax};
}

std::array<double, 3> l1_error(const Field1D& f, const Field1D& ref, const Grid1D& grid) {
    if (f.n != ref.n) throw std::invalid_argument("l1_error: field sizes differ");
    CompensatedSum acc[3];
    for (int p = f.begin_interior(); p < f.end_interior(); ++p) {
        acc[0].add(std::abs(f.at(p).rho - ref.at(p).rho));
        acc[1].add(std::abs(f.at(p).mom - ref.at(p).mom));
        acc[2].add(std::abs(f.at(p).ener - ref.at(p).ener));
    }
    return {acc[0].value() * grid.dx, acc[1].value() * grid.dx, acc[2].value() * grid.dx};
}

std::array<double, 4> l1_error(const Field2D& f, const Field2D& ref, const Grid2D& grid) {
    if (f.nx != ref.nx || f.ny != ref.ny) throw std::invalid_argument("l1_error: field sizes differ");
    CompensatedSum acc[4];
    for (int k = f.begin_y(); k < f.end_y(); ++k) {
        for (int j = f.begin_x(); j < f.end_x(); ++j) {
            const Cons2& a = f.at(j, k);
            const Cons2& b = ref.at(j, k);
            acc[0].add(std::abs(a.rho - b.rho));
            acc[1].add(std::abs(a.momx - b.momx));
            acc[2].add(std::abs(a.momy - b.momy));
            acc[3].add(std::abs(a.ener - b.ener));
        }
    }
    const double w = grid.dx * grid.dy;
    return {acc[0].value() * w, acc[1].value() * w, acc[2].value() * w, acc[3].value() * w};
}

double symmetry_error(const Field2D& f) {
    if (f.nx != f.ny) throw std::invalid_argument("symmetry_error: grid not square");
    double rho_err = 0.0, mom_err = 0.0;
    for (int k = f.begin_y(); k < f.end_y(); ++k) {
        for (int j = f.begin_x(); j < f.end_x(); ++j) {
            rho_err = std::max(rho_err, std::abs(f.at(j, k).rho - f.at(k, j).rho));
            mom_err = std::max(mom_err, std::abs(f.at(j, k).momx - f.at(k, j).momy));
        }
    }
    return rho_err + mom_err;
}

void DiagnosticsReport::add(const std::string& key, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    entries.emplace_back(key, buf);
}

std::string DiagnosticsReport::render() const {
    std::string out;
    for (const auto& [key, value] : entries) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    }
    return out;
}

} // namespace ldcu
