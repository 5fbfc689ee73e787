#pragma once

// Central-upwind numerical fluxes with a built-in anti-diffusion term, in
// three flavors:
//
//   NEW - anti-diffusion limited against star-relative speeds a - u* and
//         scaled by alpha* (tracks the interface contact velocity)
//   OLD - anti-diffusion limited against the raw one-sided speeds, alpha* = 1
//   CU  - no anti-diffusion (plain central-upwind baseline)
//
// The base flux at an interface with one-sided values U^-, U^+ is
//
//   F = (a+ F(U^-) - a- F(U^+)) / (a+ - a-)
//       + (a+ a- / (a+ - a-)) (U^+ - U^-) + q,
//
// desingularized to the plain flux average when both speeds are within eps
// of zero. The y-directional flux is the x-kernel applied to momentum-swapped
// states, which makes the x<->y mirror symmetry exact in floating point.

#include <algorithm>
#include <cmath>

#include "ldcu/euler.hpp"
#include "ldcu/minmod.hpp"
#include "ldcu/scheme.hpp"

namespace ldcu {

/// One-sided local speeds at an interface; a- <= 0 <= a+ by construction.
struct InterfaceSpeeds {
    double plus = 0.0;
    double minus = 0.0;
};

// a+ = max(u- + c-, u+ + c+, 0), a- = min(u- - c-, u+ - c+, 0)
inline InterfaceSpeeds local_speeds(const Cons1& um, const Cons1& up, const GasModel& g) {
    const double vel_m = um.mom / um.rho;
    const double vel_p = up.mom / up.rho;
    const double c_m = sound_speed(um, g);
    const double c_p = sound_speed(up, g);
    return {std::max({vel_m + c_m, vel_p + c_p, 0.0}),
            std::min({vel_m - c_m, vel_p - c_p, 0.0})};
}

inline InterfaceSpeeds local_speeds_x(const Cons2& um, const Cons2& up, const GasModel& g) {
    const double vel_m = um.momx / um.rho;
    const double vel_p = up.momx / up.rho;
    const double c_m = sound_speed(um, g);
    const double c_p = sound_speed(up, g);
    return {std::max({vel_m + c_m, vel_p + c_p, 0.0}),
            std::min({vel_m - c_m, vel_p - c_p, 0.0})};
}

inline InterfaceSpeeds local_speeds_y(const Cons2& um, const Cons2& up, const GasModel& g) {
    return local_speeds_x(swap_xy(um), swap_xy(up), g);
}

// ---------------------------------------------------------------------------
// Star states
// ---------------------------------------------------------------------------

struct StarState1D {
    double rho_star = 0.0;
    double mom_star = 0.0;
    double u_star = 0.0;
};

/// rho* = (a+ rho+ - a- rho- - [(rho u)+ - (rho u)-]) / (a+ - a-), and the
/// momentum analogue with the momentum-flux difference rho u^2 + p.
/// Requires a+ - a- bounded away from zero (callers hit the desingularized
/// flux branch first).
inline StarState1D star_state(const Cons1& um, const Cons1& up, const InterfaceSpeeds& a,
                              const GasModel& g) {
    const double inv = 1.0 / (a.plus - a.minus);
    const double rho_star = (up.rho * a.plus - um.rho * a.minus - (up.mom - um.mom)) * inv;

    const double vel_m = um.mom / um.rho;
    const double vel_p = up.mom / up.rho;
    const double momflux_m = um.mom * vel_m + pressure(um, g);
    const double momflux_p = up.mom * vel_p + pressure(up, g);
    const double mom_star = (up.mom * a.plus - um.mom * a.minus - (momflux_p - momflux_m)) * inv;

    if (!(rho_star > 0.0))
        throw AdmissibilityError("non-positive star density " + std::to_string(rho_star));
    return {rho_star, mom_star, mom_star / rho_star};
}

struct StarState2D {
    Cons2 state{};        // U* = (a+ U+ - a- U- - [F(U+) - F(U-)]) / (a+ - a-)
    double u_star = 0.0;  // normal velocity (rho u)* / rho*
};

inline StarState2D star_state_x(const Cons2& um, const Cons2& up, const InterfaceSpeeds& a,
                                const GasModel& g) {
    const double inv = 1.0 / (a.plus - a.minus);
    const Cons2 fm = flux_x(um, g);
    const Cons2 fp = flux_x(up, g);
    const Cons2 star = (up * a.plus - um * a.minus - (fp - fm)) * inv;
    if (!(star.rho > 0.0))
        throw AdmissibilityError("non-positive star density " + std::to_string(star.rho));
    return {star, star.momx / star.rho};
}

inline StarState2D star_state_y(const Cons2& um, const Cons2& up, const InterfaceSpeeds& b,
                                const GasModel& g) {
    StarState2D s = star_state_x(swap_xy(um), swap_xy(up), b, g);
    return {swap_xy(s.state), s.u_star}; // u_star is the normal (y) velocity v*
}

// ---------------------------------------------------------------------------
// Anti-diffusion terms
// ---------------------------------------------------------------------------

struct AntiDiffusion1D {
    double q_rho = 0.0;
    double alpha_star = 0.0;
    Cons1 q{};             // the vector added to the base flux
    bool disabled = false; // u* guard tripped; q forced to zero
};

/// q = alpha* q_rho (1, u*, u*^2/2) with
///   q_rho  = minmod((u* - a-)(rho* - rho-), (a+ - u*)(rho+ - rho*))
///   alpha* = a+/(a+ - u*) if u* < 0, else a-/(a- - u*)
/// for NEW; OLD limits against the raw speeds (minmod(-a-(rho* - rho-),
/// a+(rho+ - rho*))) with alpha* = 1; CU returns q = 0. The NEW branch
/// requires u* strictly inside (a-, a+) and otherwise drops q (the plain
/// CU flux is the robust fallback).
inline AntiDiffusion1D anti_diffusion(const Cons1& um, const Cons1& up, const StarState1D& star,
                                      const InterfaceSpeeds& a, SchemeFlavor flavor) {
    AntiDiffusion1D ad;
    if (flavor == SchemeFlavor::CU) return ad;

    const double ustar = star.u_star;
    double sp, sm; // limiter speeds: star-relative for NEW, raw for OLD
    if (flavor == SchemeFlavor::NEW) {
        if (!(a.minus < ustar && ustar < a.plus)) {
            ad.disabled = true;
            return ad;
        }
        sp = a.plus - ustar;
        sm = a.minus - ustar;
        ad.alpha_star = ustar < 0.0 ? a.plus / sp : a.minus / sm;
    } else {
        sp = a.plus;
        sm = a.minus;
        ad.alpha_star = 1.0;
    }

    ad.q_rho = minmod2((-sm) * (star.rho_star - um.rho), sp * (up.rho - star.rho_star));
    const double q_mom = ustar * ad.q_rho;
    const double q_ener = 0.5 * ustar * ustar * ad.q_rho;
    ad.q = {ad.alpha_star * ad.q_rho, ad.alpha_star * q_mom, ad.alpha_star * q_ener};
    return ad;
}

struct AntiDiffusion2D {
    double q_rho = 0.0;
    double q_mv = 0.0;     // transverse-momentum anti-diffusion
    double q_ener = 0.0;
    double alpha_star = 0.0;
    Cons2 q{};
    bool disabled = false;
};

/// x-directional anti-diffusion q = alpha* (q_rho, u* q_rho, q_mv, q_E).
/// The energy entry divides by the limiter speeds and the corrected densities
/// rho* + q_rho / s; if any of those degenerate the whole q is dropped.
inline AntiDiffusion2D anti_diffusion_x(const Cons2& um, const Cons2& up, const StarState2D& star,
                                        const InterfaceSpeeds& a, SchemeFlavor flavor,
                                        double eps) {
    AntiDiffusion2D ad;
    if (flavor == SchemeFlavor::CU) return ad;

    const double ustar = star.u_star;
    double sp, sm;
    if (flavor == SchemeFlavor::NEW) {
        if (!(a.minus < ustar && ustar < a.plus)) {
            ad.disabled = true;
            return ad;
        }
        sp = a.plus - ustar;
        sm = a.minus - ustar;
        ad.alpha_star = ustar < 0.0 ? a.plus / sp : a.minus / sm;
    } else {
        sp = a.plus;
        sm = a.minus;
        ad.alpha_star = 1.0;
    }
    if (sp < eps || sm > -eps) { // q_E would divide by a near-zero speed
        ad.disabled = true;
        ad.alpha_star = 0.0;
        return ad;
    }

    const double rho_star = star.state.rho;
    const double mv_star = star.state.momy;
    ad.q_rho = minmod2((-sm) * (rho_star - um.rho), sp * (up.rho - rho_star));
    ad.q_mv = minmod2((-sm) * (mv_star - um.momy), sp * (up.momy - mv_star));

    const double dens_p = rho_star + ad.q_rho / sp;
    const double dens_m = rho_star + ad.q_rho / sm;
    if (!(dens_p > 0.0) || !(dens_m > 0.0)) {
        ad = AntiDiffusion2D{};
        ad.disabled = true;
        return ad;
    }
    // Transverse kinetic part: the anti-diffused mass carries
    // (rho v)^2 / (2 rho) of the corrected L/R states, weighted so that for
    // uniform v it reduces to (v^2/2) q_rho (mass moves with its full
    // specific kinetic energy). Note the leading minus: sp*sm < 0, and the
    // bracket is the R-minus-L difference of the corrected kinetic terms.
    const double mom_p = mv_star + ad.q_mv / sp;
    const double mom_m = mv_star + ad.q_mv / sm;
    ad.q_ener = -(sp * sm / (a.plus - a.minus)) *
                    (mom_p * mom_p / (2.0 * dens_p) - mom_m * mom_m / (2.0 * dens_m)) +
                0.5 * ustar * ustar * ad.q_rho;

    const double q_mom = ustar * ad.q_rho;
    ad.q = {ad.alpha_star * ad.q_rho, ad.alpha_star * q_mom, ad.alpha_star * ad.q_mv,
            ad.alpha_star * ad.q_ener};
    return ad;
}

// ---------------------------------------------------------------------------
// Assembled numerical fluxes
// ---------------------------------------------------------------------------

inline Cons1 numerical_flux(const Cons1& um, const Cons1& up, const SchemeConfig& sc,
                            FluxStats* stats = nullptr) {
    const Cons1 fm = flux_x(um, sc.gas);
    const Cons1 fp = flux_x(up, sc.gas);
    const InterfaceSpeeds a = local_speeds(um, up, sc.gas);
    if (a.plus < sc.eps && a.minus > -sc.eps) {
        if (stats) ++stats->desingularized;
        return (fm + fp) * 0.5;
    }
    const double inv = 1.0 / (a.plus - a.minus);
    const StarState1D star = star_state(um, up, a, sc.gas);
    const AntiDiffusion1D ad = anti_diffusion(um, up, star, a, sc.flavor);
    if (stats && ad.disabled) ++stats->q_disabled;
    return (fm * a.plus - fp * a.minus) * inv + (up - um) * (a.plus * a.minus * inv) + ad.q;
}

inline Cons2 numerical_flux_x(const Cons2& um, const Cons2& up, const SchemeConfig& sc,
                              FluxStats* stats = nullptr) {
    const Cons2 fm = flux_x(um, sc.gas);
    const Cons2 fp = flux_x(up, sc.gas);
    const InterfaceSpeeds a = local_speeds_x(um, up, sc.gas);
    if (a.plus < sc.eps && a.minus > -sc.eps) {
        if (stats) ++stats->desingularized;
        return (fm + fp) * 0.5;
    }
    const double inv = 1.0 / (a.plus - a.minus);
    const StarState2D star = star_state_x(um, up, a, sc.gas);
    const AntiDiffusion2D ad = anti_diffusion_x(um, up, star, a, sc.flavor, sc.eps);
    if (stats && ad.disabled) ++stats->q_disabled;
    return (fm * a.plus - fp * a.minus) * inv + (up - um) * (a.plus * a.minus * inv) + ad.q;
}

inline Cons2 numerical_flux_y(const Cons2& um, const Cons2& up, const SchemeConfig& sc,
                              FluxStats* stats = nullptr) {
    return swap_xy(numerical_flux_x(swap_xy(um), swap_xy(up), sc, stats));
}

} // namespace ldcu
