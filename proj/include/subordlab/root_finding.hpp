#pragma once

#include <cmath>
#include <functional>
#include <utility>

#include "subordlab/errors.hpp"

namespace subordlab {

struct RootResult {
    long double root;
    long double residual;
    long double bracket_width;
    int iterations;
};

/// Brent's method (bisection + secant + inverse quadratic interpolation)
/// in extended precision. The printed equations of interest have large
/// function scales near their roots, so double precision alone cannot
/// reach the required residuals.
inline RootResult brent(const std::function<long double(long double)>& f,
                        long double a, long double b,
                        long double xtol = 1e-18L, int max_iter = 200) {
    long double fa = f(a), fb = f(b);
    if (fa == 0.0L) return {a, 0.0L, 0.0L, 0};
    if (fb == 0.0L) return {b, 0.0L, 0.0L, 0};
    if ((fa > 0) == (fb > 0))
        throw NoSignChange("bracket endpoints have the same sign");
    if (std::fabs(fa) < std::fabs(fb)) {
        std::swap(a, b);
        std::swap(fa, fb);
    }
    long double c = a, fc = fa, d = b - a, s = b, fs = fb;
    bool mflag = true;
    int iter = 0;
    while (fb != 0.0L && std::fabs(b - a) > xtol * std::max(1.0L, std::fabs(b))) {
        if (++iter > max_iter) break;
        if (fa != fc && fb != fc) {
            // inverse quadratic interpolation
            s = a * fb * fc / ((fa - fb) * (fa - fc)) +
                b * fa * fc / ((fb - fa) * (fb - fc)) +
                c * fa * fb / ((fc - fa) * (fc - fb));
        } else {
            s = b - fb * (b - a) / (fb - fa);  // secant
        }
        long double lo = (3.0L * a + b) / 4.0L, hi = b;
        if (lo > hi) std::swap(lo, hi);
        bool bad = s < lo || s > hi ||
                   (mflag && std::fabs(s - b) >= std::fabs(b - c) / 2.0L) ||
                   (!mflag && std::fabs(s - b) >= std::fabs(c - d) / 2.0L);
        if (bad) {
            s = (a + b) / 2.0L;
            mflag = true;
        } else {
            mflag = false;
        }
        fs = f(s);
        d = c;
        c = b;
        fc = fb;
        if ((fa > 0) != (fs > 0)) {
            b = s;
            fb = fs;
        } else {
            a = s;
            fa = fs;
        }
        if (std::fabs(fa) < std::fabs(fb)) {
            std::swap(a, b);
            std::swap(fa, fb);
        }
    }
    long double root = b, fr = fb;
    if (std::fabs(fa) < std::fabs(fr)) {
        root = a;
        fr = fa;
    }
    // an iterate that lands exactly on a zero is an exact root; the
    // enclosing bracket no longer carries uncertainty
    long double width = fr == 0.0L ? 0.0L : std::fabs(b - a);
    return {root, fr, width, iter};
}

/// Count sign changes of f on a uniform scan; reported alongside roots
/// (uniqueness on the bracket is probed, not proven).
inline int sign_changes(const std::function<long double(long double)>& f,
                        long double a, long double b, int samples = 4096) {
    int count = 0;
    long double prev = f(a);
    for (int i = 1; i <= samples; ++i) {
        long double x = a + (b - a) * i / samples;
        long double v = f(x);
        if (prev != 0.0L && v != 0.0L && (prev > 0) != (v > 0)) ++count;
        if (v != 0.0L) prev = v;
    }
    return count;
}

}  // namespace subordlab
