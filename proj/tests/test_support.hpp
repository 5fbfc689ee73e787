#pragma once

// Shared helpers for the test suites: deterministic random admissible states
// and an abs+rel closeness predicate.

#include <random>

#include "ldcu/euler.hpp"

namespace ldcu::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Prim1 random_prim1(Rng& rng) {
    return {uniform(rng, 0.1, 10.0), uniform(rng, -5.0, 5.0),
            std::exp(uniform(rng, std::log(0.01), std::log(100.0)))};
}

inline Prim2 random_prim2(Rng& rng) {
    return {uniform(rng, 0.1, 10.0), uniform(rng, -5.0, 5.0), uniform(rng, -5.0, 5.0),
            std::exp(uniform(rng, std::log(0.01), std::log(100.0)))};
}

/// Mach-bounded states: kinetic and internal energy stay comparable, so
/// pressure survives the conserved-energy cancellation at full precision.
inline Prim1 random_prim1_balanced(Rng& rng) {
    const double rho = uniform(rng, 0.1, 10.0);
    const double p = std::exp(uniform(rng, std::log(0.05), std::log(20.0)));
    const double c = std::sqrt(1.4 * p / rho);
    return {rho, uniform(rng, -3.0, 3.0) * c, p};
}

inline Prim2 random_prim2_balanced(Rng& rng) {
    const double rho = uniform(rng, 0.1, 10.0);
    const double p = std::exp(uniform(rng, std::log(0.05), std::log(20.0)));
    const double c = std::sqrt(1.4 * p / rho);
    const double mach = uniform(rng, 0.0, 3.0);
    const double angle = uniform(rng, 0.0, 6.283185307179586);
    return {rho, mach * c * std::cos(angle), mach * c * std::sin(angle), p};
}

inline Cons1 random_cons1(Rng& rng, const GasModel& gas) {
    return prim_to_cons(random_prim1(rng), gas);
}

inline Cons2 random_cons2(Rng& rng, const GasModel& gas) {
    return prim_to_cons(random_prim2(rng), gas);
}

/// |a - b| <= tol * (1 + max(|a|, |b|)), i.e. absolute + relative.
inline bool close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

} // namespace ldcu::testing
