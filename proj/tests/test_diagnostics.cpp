#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ldcu/diagnostics.hpp"
#include "ldcu/integrator.hpp"
#include "ldcu/problems.hpp"
#include "test_support.hpp"

using namespace ldcu;
using namespace ldcu::testing;

namespace {

Field1D density_field(const std::vector<double>& rho) {
    Field1D f(static_cast<int>(rho.size()));
    for (size_t i = 0; i < rho.size(); ++i)
        f.at(n_ghost + static_cast<int>(i)) = {rho[i], 0.0, 1.0};
    return f;
}

} // namespace

TEST_CASE("total variation: spike, monotone, and a brute-force oracle") {
    const Grid1D grid(3, 0.0, 3.0);
    CHECK(total_variation(density_field({0.0, 1.0, 0.0}), grid, 0, 0.0, 3.0) == 2.0);

    const Grid1D grid5(5, 0.0, 5.0);
    CHECK(total_variation(density_field({1.0, 2.0, 4.0, 4.5, 7.0}), grid5, 0, 0.0, 5.0) == 6.0);

    Rng rng(1);
    std::vector<double> data(40);
    for (auto& v : data) v = uniform(rng, -3.0, 3.0);
    const Grid1D grid40(40, 0.0, 1.0);
    double oracle = 0.0;
    for (size_t i = 0; i + 1 < data.size(); ++i) oracle += std::abs(data[i + 1] - data[i]);
    CHECK(close(total_variation(density_field(data), grid40, 0, 0.0, 1.0), oracle, 1e-13));
}

TEST_CASE("2-D total variation sums row and column contributions") {
    const Grid2D grid(2, 2, 0.0, 2.0, 0.0, 2.0);
    Field2D f(2, 2);
    f.at(2, 2) = {1.0, 0, 0, 1};
    f.at(3, 2) = {4.0, 0, 0, 1};
    f.at(2, 3) = {2.0, 0, 0, 1};
    f.at(3, 3) = {7.0, 0, 0, 1};
    // rows: |4-1| + |7-2| = 8; columns: |2-1| + |7-4| = 4
    CHECK(total_variation(f, grid, 0, 0.0, 2.0, 0.0, 2.0) == 12.0);
    // window holding only the bottom row: row TV only
    CHECK(total_variation(f, grid, 0, 0.0, 2.0, 0.0, 0.9) == 3.0);
}

TEST_CASE("total variation is nonnegative and subadditive over window splits") {
    Rng rng(2);
    const Grid1D grid(64, 0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> data(64);
        for (auto& v : data) v = uniform(rng, -1.0, 1.0);
        const Field1D f = density_field(data);
        const double whole = total_variation(f, grid, 0, 0.0, 1.0);
        const double left = total_variation(f, grid, 0, 0.0, 0.5);
        const double right = total_variation(f, grid, 0, 0.5, 1.0);
        CHECK(whole >= 0.0);
        // the split drops the straddling pair, so the parts cannot exceed it
        CHECK(left + right <= whole + 1e-12);
    }
    CHECK_THROWS(total_variation(density_field({1.0, 2.0}), Grid1D(2, 0.0, 1.0), 0, 5.0, 6.0));
}

TEST_CASE("conserved totals of a uniform unit field") {
    for (int n : {10, 37, 256}) {
        const Grid1D grid(n, 0.0, 1.0);
        Field1D f(n);
        for (int p = f.begin_interior(); p < f.end_interior(); ++p) f.at(p) = {1.0, 0.5, 2.0};
        const auto totals = conserved_totals(f, grid);
        CHECK(std::abs(totals[0] - 1.0) < 1e-15);
        CHECK(std::abs(totals[1] - 0.5) < 1e-15);
        CHECK(std::abs(totals[2] - 2.0) < 1e-15);
    }
}

TEST_CASE("totals are invariant under restriction") {
    Rng rng(3);
    const GasModel gas{1.4};
    const Grid1D fine_grid(128, 0.0, 2.0);
    Field1D f(128);
    for (int p = f.begin_interior(); p < f.end_interior(); ++p) f.at(p) = random_cons1(rng, gas);
    const Field1D coarse = restrict_field(f, 4);
    const Grid1D coarse_grid(32, 0.0, 2.0);
    const auto tf = conserved_totals(f, fine_grid);
    const auto tc = conserved_totals(coarse, coarse_grid);
    for (int c = 0; c < 3; ++c) CHECK(close(tf[c], tc[c], 1e-13));
}

TEST_CASE("totals drift below 1e-12 over ten smooth-wave steps") {
    const Problem1D prob = smooth_wave();
    SchemeConfig sc;
    sc.gas = GasModel{prob.gamma};
    IntegratorConfig ic;
    ic.t_final = 0.04; // ten-ish steps at N = 100
    const RunResult1D res = run(prob, 100, sc, ic);
    CHECK(res.records.size() >= 8);
    const Field1D initial = init_field(prob, res.grid);
    const auto before = conserved_totals(initial, res.grid);
    const auto after = conserved_totals(res.field, res.grid);
    for (int c = 0; c < 3; ++c)
        CHECK(std::abs(after[c] - before[c]) <= 1e-12 * std::abs(before[c]));
}

TEST_CASE("overshoot against fixed bounds") {
    const Grid1D grid(4, 0.0, 4.0);
    const Field1D inside = density_field({1.0, 1.2, 1.4, 1.1});
    auto [above, below] = overshoot(inside, grid, 0, 0.0, 4.0, 1.0, 1.5);
    CHECK(above == 0.0);
    CHECK(below == 0.0);

    const Field1D spike = density_field({1.0, 1.6, 1.4, 0.8});
    std::tie(above, below) = overshoot(spike, grid, 0, 0.0, 4.0, 1.0, 1.5);
    CHECK(above == doctest::Approx(0.1).epsilon(1e-13));
    CHECK(below == doctest::Approx(0.2).epsilon(1e-13));

    // window restriction hides the spike
    std::tie(above, below) = overshoot(spike, grid, 0, 2.0, 3.0, 1.0, 1.5);
    CHECK(above == 0.0);
}

TEST_CASE("l1 error: zero, constant offset, and the triangle inequality") {
    const Grid1D grid(20, 0.0, 2.0);
    Rng rng(4);
    const GasModel gas{1.4};
    Field1D a(20), b(20), c(20);
    for (int p = a.begin_interior(); p < a.end_interior(); ++p) {
        a.at(p) = random_cons1(rng, gas);
        b.at(p) = random_cons1(rng, gas);
        c.at(p) = random_cons1(rng, gas);
    }
    const auto zero = l1_error(a, a, grid);
    CHECK(zero[0] == 0.0);
    CHECK(zero[2] == 0.0);

    Field1D shifted = a;
    for (int p = a.begin_interior(); p < a.end_interior(); ++p) shifted.at(p).rho += 0.25;
    CHECK(l1_error(shifted, a, grid)[0] == doctest::Approx(0.25 * 2.0).epsilon(1e-13));

    const auto ab = l1_error(a, b, grid);
    const auto bc = l1_error(b, c, grid);
    const auto ac = l1_error(a, c, grid);
    for (int comp = 0; comp < 3; ++comp) CHECK(ac[comp] <= ab[comp] + bc[comp] + 1e-12);
}

TEST_CASE("symmetry error: exact zero on symmetric fields, involution") {
    const int n = 8;
    Field2D f(n, n);
    Rng rng(5);
    const GasModel gas{1.4};
    for (int k = f.begin_y(); k < f.end_y(); ++k)
        for (int j = f.begin_x(); j <= k; ++j) {
            Cons2 s = random_cons2(rng, gas);
            if (j == k) s.momy = s.momx; // diagonal cells must be self-mirrored
            f.at(j, k) = s;
            f.at(k, j) = swap_xy(s);
        }
    CHECK(symmetry_error(f) == 0.0);

    Field2D g(n, n);
    for (int k = g.begin_y(); k < g.end_y(); ++k)
        for (int j = g.begin_x(); j < g.end_x(); ++j) g.at(j, k) = random_cons2(rng, gas);
    Field2D swapped(n, n);
    for (int k = g.begin_y(); k < g.end_y(); ++k)
        for (int j = g.begin_x(); j < g.end_x(); ++j) swapped.at(k, j) = swap_xy(g.at(j, k));
    CHECK(symmetry_error(g) == symmetry_error(swapped));

    CHECK_THROWS(symmetry_error(Field2D(3, 4)));
}

TEST_CASE("compensated summation beats naive summation on adversarial data") {
    // classic cancellation pattern: huge value plus many tiny ones
    CompensatedSum acc;
    acc.add(1e16);
    for (int i = 0; i < 10000; ++i) acc.add(1.0);
    acc.add(-1e16);
    CHECK(acc.value() == 10000.0);
}

TEST_CASE("report renders flat key = value lines") {
    DiagnosticsReport rep;
    rep.add("total_rho", 1.5);
    rep.add("tv_rho", 0.125);
    CHECK(rep.render() == "total_rho = 1.5\ntv_rho = 0.125\n");
}
