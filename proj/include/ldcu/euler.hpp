#pragma once

// State algebra for the compressible Euler equations with an ideal-gas EOS:
// conserved/primitive conversions, physical fluxes, sound speed, and
// admissibility checks. Everything here is a pure value-level function.

#include <cmath>
#include <string>

#include "ldcu/errors.hpp"

namespace ldcu {

struct GasModel {
    double gamma = 1.4; // adiabatic index, > 1
};

// ---------------------------------------------------------------------------
// 1-D: U = (rho, rho*u, E)
// ---------------------------------------------------------------------------

struct Cons1 {
    double rho = 0.0;
    double mom = 0.0;
    double ener = 0.0;

    Cons1& operator+=(const Cons1& o) { rho += o.rho; mom += o.mom; ener += o.ener; return *this; }
    Cons1& operator-=(const Cons1& o) { rho -= o.rho; mom -= o.mom; ener -= o.ener; return *this; }
    Cons1& operator*=(double s) { rho *= s; mom *= s; ener *= s; return *this; }

    double comp(int i) const { return i == 0 ? rho : (i == 1 ? mom : ener); }
};

inline Cons1 operator+(Cons1 a, const Cons1& b) { return a += b; }
inline Cons1 operator-(Cons1 a, const Cons1& b) { return a -= b; }
inline Cons1 operator*(Cons1 a, double s) { return a *= s; }
inline Cons1 operator*(double s, Cons1 a) { return a *= s; }

struct Prim1 {
    double rho = 0.0;
    double u = 0.0;
    double p = 0.0;
};

// ---------------------------------------------------------------------------
// 2-D: U = (rho, rho*u, rho*v, E)
// ---------------------------------------------------------------------------

struct Cons2 {
    double rho = 0.0;
    double momx = 0.0;
    double momy = 0.0;
    double ener = 0.0;

    Cons2& operator+=(const Cons2& o) { rho += o.rho; momx += o.momx; momy += o.momy; ener += o.ener; return *this; }
    Cons2& operator-=(const Cons2& o) { rho -= o.rho; momx -= o.momx; momy -= o.momy; ener -= o.ener; return *this; }
    Cons2& operator*=(double s) { rho *= s; momx *= s; momy *= s; ener *= s; return *this; }

    double comp(int i) const {
        switch (i) {
            case 0: return rho;
            case 1: return momx;
            case 2: return momy;
            default: return ener;
        }
    }
};

inline Cons2 operator+(Cons2 a, const Cons2& b) { return a += b; }
inline Cons2 operator-(Cons2 a, const Cons2& b) { return a -= b; }
inline Cons2 operator*(Cons2 a, double s) { return a *= s; }
inline Cons2 operator*(double s, Cons2 a) { return a *= s; }

struct Prim2 {
    double rho = 0.0;
    double u = 0.0;
    double v = 0.0;
    double p = 0.0;
};

/// Swap the x- and y-momentum components. Exact (no arithmetic), so the
/// y-directional physics can be expressed as swap . x-physics . swap.
inline Cons2 swap_xy(const Cons2& s) { return {s.rho, s.momy, s.momx, s.ener}; }
inline Prim2 swap_xy(const Prim2& s) { return {s.rho, s.v, s.u, s.p}; }

// ---------------------------------------------------------------------------
// EOS and fluxes
// ---------------------------------------------------------------------------

[[noreturn]] inline void throw_inadmissible(const char* what, double rho, double p) {
    throw AdmissibilityError(std::string("inadmissible state (") + what +
                             "): rho=" + std::to_string(rho) + " p=" + std::to_string(p));
}

// p = (gamma - 1) [E - (rho u)^2 / (2 rho)]
inline double pressure(const Cons1& s, const GasModel& g) {
    if (!(s.rho > 0.0)) throw_inadmissible("non-positive density", s.rho, 0.0);
    return (g.gamma - 1.0) * (s.ener - s.mom * s.mom / (2.0 * s.rho));
}

// p = (gamma - 1) [E - ((rho u)^2 + (rho v)^2) / (2 rho)]
inline double pressure(const Cons2& s, const GasModel& g) {
    if (!(s.rho > 0.0)) throw_inadmissible("non-positive density", s.rho, 0.0);
    return (g.gamma - 1.0) * (s.ener - (s.momx * s.momx + s.momy * s.momy) / (2.0 * s.rho));
}

inline bool admissible(const Cons1& s, const GasModel& g) {
    return s.rho > 0.0 && s.ener - s.mom * s.mom / (2.0 * s.rho) > 0.0 && g.gamma > 1.0;
}

inline bool admissible(const Cons2& s, const GasModel& g) {
    return s.rho > 0.0 &&
           s.ener - (s.momx * s.momx + s.momy * s.momy) / (2.0 * s.rho) > 0.0 && g.gamma > 1.0;
}

// c = sqrt(gamma p / rho)
inline double sound_speed(double rho, double p, const GasModel& g) {
    if (!(rho > 0.0) || !(p > 0.0)) throw_inadmissible("sound speed", rho, p);
    return std::sqrt(g.gamma * p / rho);
}

inline double sound_speed(const Cons1& s, const GasModel& g) {
    return sound_speed(s.rho, pressure(s, g), g);
}

inline double sound_speed(const Cons2& s, const GasModel& g) {
    return sound_speed(s.rho, pressure(s, g), g);
}

inline Cons1 prim_to_cons(const Prim1& w, const GasModel& g) {
    return {w.rho, w.rho * w.u, w.p / (g.gamma - 1.0) + 0.5 * w.rho * w.u * w.u};
}

inline Cons2 prim_to_cons(const Prim2& w, const GasModel& g) {
    return {w.rho, w.rho * w.u, w.rho * w.v,
            w.p / (g.gamma - 1.0) + 0.5 * w.rho * (w.u * w.u + w.v * w.v)};
}

inline Prim1 cons_to_prim(const Cons1& s, const GasModel& g) {
    return {s.rho, s.mom / s.rho, pressure(s, g)};
}

inline Prim2 cons_to_prim(const Cons2& s, const GasModel& g) {
    return {s.rho, s.momx / s.rho, s.momy / s.rho, pressure(s, g)};
}

// F(U) = (rho u, rho u^2 + p, u(E + p))
inline Cons1 flux_x(const Cons1& s, const GasModel& g) {
    const double p = pressure(s, g);
    const double u = s.mom / s.rho;
    return {s.mom, s.mom * u + p, u * (s.ener + p)};
}

// F(U) = (rho u, rho u^2 + p, rho u v, u(E + p))
inline Cons2 flux_x(const Cons2& s, const GasModel& g) {
    const double p = pressure(s, g);
    const double u = s.momx / s.rho;
    return {s.momx, s.momx * u + p, s.momy * u, u * (s.ener + p)};
}

// G(U) = (rho v, rho u v, rho v^2 + p, v(E + p)); realized as the x-flux of
// the momentum-swapped state so the two directions mirror each other exactly.
inline Cons2 flux_y(const Cons2& s, const GasModel& g) {
    return swap_xy(flux_x(swap_xy(s), g));
}

} // namespace ldcu
