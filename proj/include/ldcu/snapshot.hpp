#pragma once

// Plain-text snapshot files. Values are printed with 17 significant digits
// so a write/read round trip is bit-exact.
//
// 1-D layout: a `#`-prefixed metadata line, the CSV header `x,rho,u,p,E`,
// then one row per interior cell.
//
// 2-D layout: a comment header `# nx ny x_lo y_lo dx dy t gamma scheme`,
// the CSV header `x,y,rho,u,v,p,E`, then rows in row-major order (y slower).

#include <string>
#include <vector>

#include "ldcu/mesh.hpp"
#include "ldcu/scheme.hpp"

namespace ldcu {

struct SnapshotMeta {
    std::string problem;
    std::string scheme;
    double t = 0.0;
    double gamma = 1.4;
};

struct Snapshot1D {
    SnapshotMeta meta;
    int n = 0;
    double x_lo = 0.0;
    double dx = 0.0;
    std::vector<double> x, rho, u, p, ener;
};

struct Snapshot2D {
    SnapshotMeta meta;
    int nx = 0, ny = 0;
    double x_lo = 0.0, y_lo = 0.0;
    double dx = 0.0, dy = 0.0;
    std::vector<double> x, y, rho, u, v, p, ener;
};

void write_snapshot(const Field1D& f, const Grid1D& grid, const SnapshotMeta& meta,
                    const std::string& path);
void write_snapshot(const Field2D& f, const Grid2D& grid, const SnapshotMeta& meta,
                    const std::string& path);

Snapshot1D read_snapshot_1d(const std::string& path);
Snapshot2D read_snapshot_2d(const std::string& path);

/// Rebuild conserved cell averages from snapshot rows (rho, rho*u, E).
Field1D to_field(const Snapshot1D& snap);
Field2D to_field(const Snapshot2D& snap);

} // namespace ldcu
