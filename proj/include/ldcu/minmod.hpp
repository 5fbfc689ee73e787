#pragma once

namespace ldcu {

// minmod(a, b) = (sgn(a) + sgn(b))/2 * min(|a|, |b|)
inline double minmod2(double a, double b) {
    if (a > 0.0 && b > 0.0) return a < b ? a : b;
    if (a < 0.0 && b < 0.0) return a > b ? a : b;
    return 0.0;
}

// zero unless all three share a strict sign, else the least in magnitude
inline double minmod3(double a, double b, double c) {
    if (a > 0.0 && b > 0.0 && c > 0.0) {
        double m = a < b ? a : b;
        return m < c ? m : c;
    }
    if (a < 0.0 && b < 0.0 && c < 0.0) {
        double m = a > b ? a : b;
        return m > c ? m : c;
    }
    return 0.0;
}

} // namespace ldcu
