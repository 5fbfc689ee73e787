#pragma once

// Quantitative solution metrics: conserved totals, total variation,
// overshoot against reference bounds, L1 errors, diagonal symmetry error.
// Reductions use compensated summation so conservation drift can be measured
// down at 1e-12 and below.

#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "ldcu/mesh.hpp"

namespace ldcu {

/// Neumaier compensated accumulator.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Conserved-variable component index: 0 rho, 1 mom (x), 2 ener (1-D) or
/// 1 momx, 2 momy, 3 ener (2-D).
double total_variation(const Field1D& f, const Grid1D& grid, int comp, double w_lo, double w_hi);

/// Row-wise TV in x plus column-wise TV in y over cells whose centers fall
/// in [w_lo, w_hi] x [w_lo_y, w_hi_y].
double total_variation(const Field2D& f, const Grid2D& grid, int comp, double w_lo, double w_hi,
                       double w_lo_y, double w_hi_y);

/// dx * sum (1-D) or dx * dy * sum (2-D) over interior cells, per component.
std::array<double, 3> conserved_totals(const Field1D& f, const Grid1D& grid);
std::array<double, 4> conserved_totals(const Field2D& f, const Grid2D& grid);

/// (max excess above hi, max deficit below lo) of a component over a window.
std::pair<double, double> overshoot(const Field1D& f, const Grid1D& grid, int comp, double w_lo,
                                    double w_hi, double lo, double hi);

/// min/max of a component over all interior cells.
std::pair<double, double> component_range(const Field1D& f, int comp);
std::pair<double, double> component_range(const Field2D& f, int comp);

/// min/max of a component over a window.
std::pair<double, double> component_range(const Field1D& f, const Grid1D& grid, int comp,
                                          double w_lo, double w_hi);

/// dx * sum |v_j - r_j| per component; fields must share the grid.
std::array<double, 3> l1_error(const Field1D& f, const Field1D& ref, const Grid1D& grid);
std::array<double, 4> l1_error(const Field2D& f, const Field2D& ref, const Grid2D& grid);

/// max |rho(j,k) - rho(k,j)| plus max |momx(j,k) - momy(k,j)| over the
/// interior of a square grid.
double symmetry_error(const Field2D& f);

/// Ordered key/value metrics, serialized one `key = value` per line.
/// Numeric values are rendered with 17 significant digits.
struct DiagnosticsReport {
    std::vector<std::pair<std::string, std::string>> entries;

    void add(const std::string& key, double value);
    void add_text(const std::string& key, const std::string& value) {
        entries.emplace_back(key, value);
    }
    std::string render() const;
};

} // namespace ldcu
