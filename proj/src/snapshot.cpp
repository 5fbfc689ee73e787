#include "ldcu/snapshot.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ldcu/errors.hpp"

namespace ldcu {

namespace {

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return in;
}

} // namespace

void write_snapshot(const Field1D& f, const Grid1D& grid, const SnapshotMeta& meta,
                    const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    const GasModel gas{meta.gamma};

    out << "# " << grid.n << ' ' << fmt17(grid.x_lo) << ' ' << fmt17(grid.dx) << ' '
        << fmt17(meta.t) << ' ' << fmt17(meta.gamma) << ' '
        << (meta.scheme.empty() ? "-" : meta.scheme) << ' '
        << (meta.problem.empty() ? "-" : meta.problem) << '\n';
    out << "x,rho,u,p,E\n";
    for (int p = f.begin_interior(); p < f.end_interior(); ++p) {
        const Cons1& s = f.at(p);
        out << fmt17(grid.center(p)) << ',' << fmt17(s.rho) << ',' << fmt17(s.mom / s.rho) << ','
            << fmt17(pressure(s, gas)) << ',' << fmt17(s.ener) << '\n';
    }
    if (!out) throw IoError("write failed for '" + path + "'");
}

void write_snapshot(const Field2D& f, const Grid2D& grid, const SnapshotMeta& meta,
                    const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    const GasModel gas{meta.gamma};

    out << "# " << grid.nx << ' ' << grid.ny << ' ' << fmt17(grid.x_lo) << ' '
        << fmt17(grid.y_lo) << ' ' << fmt17(grid.dx) << ' ' << fmt17(grid.dy) << ' '
        << fmt17(meta.t) << ' ' << fmt17(meta.gamma) << ' '
        << (meta.scheme.empty() ? "-" : meta.scheme) << '\n';
    out << "x,y,rho,u,v,p,E\n";
    for (int k = f.begin_y(); k < f.end_y(); ++k) {
        for (int j = f.begin_x(); j < f.end_x(); ++j) {
            const Cons2& s = f.at(j, k);
            out << fmt17(grid.center_x(j)) << ',' << fmt17(grid.center_y(k)) << ','
                << fmt17(s.rho) << ',' << fmt17(s.momx / s.rho) << ',' << fmt17(s.momy / s.rho)
                << ',' << fmt17(pressure(s, gas)) << ',' << fmt17(s.ener) << '\n';
        }
    }
    if (!out) throw IoError("write failed for '" + path + "'");
}

namespace {

std::vector<double> split_csv(const std::string& line, size_t expect, const std::string& path) {
    std::vector<double> vals;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
    if (vals.size() != expect)
        throw IoError("malformed row in '" + path + "': expected " + std::to_string(expect) +
                      " columns, got " + std::to_string(vals.size()));
    return vals;
}

} // namespace

Snapshot1D read_snapshot_1d(const std::string& path) {
    std::ifstream in = open_in(path);
    Snapshot1D snap;

    std::string line;
    if (!std::getline(in, line) || line.empty() || line[0] != '#')
        throw IoError("missing metadata header in '" + path + "'");
    {
        std::stringstream ss(line.substr(1));
        ss >> snap.n >> snap.x_lo >> snap.dx >> snap.meta.t >> snap.meta.gamma >>
            snap.meta.scheme >> snap.meta.problem;
        if (!ss) throw IoError("malformed metadata header in '" + path + "'");
    }
    if (!std::getline(in, line) || line != "x,rho,u,p,E")
        throw IoError("missing column header in '" + path + "'");

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto vals = split_csv(line, 5, path);
        snap.x.push_back(vals[0]);
        snap.rho.push_back(vals[1]);
        snap.u.push_back(vals[2]);
        snap.p.push_back(vals[3]);
        snap.ener.push_back(vals[4]);
    }
    if (static_cast<int>(snap.x.size()) != snap.n)
        throw IoError("row count mismatch in '" + path + "'");
    return snap;
}

Snapshot2D read_snapshot_2d(const std::string& path) {
    std::ifstream in = open_in(path);
    Snapshot2D snap;

    std::string line;
    if (!std::getline(in, line) || line.empty() || line[0] != '#')
        throw IoError("missing metadata header in '" + path + "'");
    {
        std::stringstream ss(line.substr(1));
        ss >> snap.nx >> snap.ny >> snap.x_lo >> snap.y_lo >> snap.dx >> snap.dy >> snap.meta.t >>
            snap.meta.gamma >> snap.meta.scheme;
        if (!ss) throw IoError("malformed metadata header in '" + path + "'");
    }
    if (!std::getline(in, line) || line != "x,y,rho,u,v,p,E")
        throw IoError("missing column header in '" + path + "'");

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto vals = split_csv(line, 7, path);
        snap.x.push_back(vals[0]);
        snap.y.push_back(vals[1]);
        snap.rho.push_back(vals[2]);
        snap.u.push_back(vals[3]);
        snap.v.push_back(vals[4]);
        snap.p.push_back(vals[5]);
        snap.ener.push_back(vals[6]);
    }
    if (snap.x.size() != static_cast<size_t>(snap.nx) * static_cast<size_t>(snap.ny))
        throw IoError("row count mismatch in '" + path + "'");
    return snap;
}

Field1D to_field(const Snapshot1D& snap) {
    Field1D f(snap.n);
    for (int i = 0; i < snap.n; ++i) {
        const size_t s = static_cast<size_t>(i);
        f.at(n_ghost + i) = {snap.rho[s], snap.rho[s] * snap.u[s], snap.ener[s]};
    }
    return f;
}

Field2D to_field(const Snapshot2D& snap) {
    Field2D f(snap.nx, snap.ny);
    size_t s = 0;
    for (int k = 0; k < snap.ny; ++k)
        for (int j = 0; j < snap.nx; ++j, ++s)
            f.at(n_ghost + j, n_ghost + k) = {snap.rho[s], snap.rho[s] * snap.u[s],
                                              snap.rho[s] * snap.v[s], snap.ener[s]};
    return f;
}

} // namespace ldcu
