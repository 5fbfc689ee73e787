#pragma once

#include <string>

#include "ldcu/errors.hpp"
#include "ldcu/euler.hpp"

namespace ldcu {

/// Which anti-diffusion term the central-upwind flux carries.
///   NEW - shifted-interface variant (alpha* scaling, star-relative speeds)
///   OLD - unshifted variant (alpha* = 1, raw one-sided speeds)
///   CU  - none (plain central-upwind baseline)
enum class SchemeFlavor { NEW, OLD, CU };

inline const char* to_string(SchemeFlavor f) {
    switch (f) {
        case SchemeFlavor::NEW: return "new";
        case SchemeFlavor::OLD: return "old";
        default: return "cu";
    }
}

inline SchemeFlavor flavor_from_string(const std::string& s) {
    if (s == "new") return SchemeFlavor::NEW;
    if (s == "old") return SchemeFlavor::OLD;
    if (s == "cu") return SchemeFlavor::CU;
    throw ConfigError("unknown scheme flavor '" + s + "' (expected new|old|cu)");
}

struct LimiterConfig {
    double theta = 1.3; // generalized minmod parameter, in [1, 2]
};

struct SchemeConfig {
    SchemeFlavor flavor = SchemeFlavor::NEW;
    GasModel gas{};
    LimiterConfig limiter{};
    double eps = 1e-12; // desingularization threshold for near-zero speeds
};

/// Counters for the rare degenerate branches, aggregated per run and
/// surfaced in the diagnostics report.
struct FluxStats {
    long long desingularized = 0; // both one-sided speeds within eps of zero
    long long q_disabled = 0;     // anti-diffusion dropped at an interface

    FluxStats& operator+=(const FluxStats& o) {
        desingularized += o.desingularized;
        q_disabled += o.q_disabled;
        return *this;
    }
};

} // namespace ldcu
